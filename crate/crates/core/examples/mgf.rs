//! Reading, validating and writing MGF files.
//!
//! cargo run --example mgf

use mixed_moore::mixedgraph::{build, parse_mgf, to_mgf_with_comments};

fn main() {
    let text = "mgf 1\n# a directed triangle with one chord\nn 3\na 0 1\na 1 2\na 2 0\ne 0 2\n";
    match parse_mgf(text, true) {
        Ok(g) => println!("accepted: {g:?}"),
        Err(e) => println!("strict parse rejects it: {e}"),
    }
    let lenient = parse_mgf(text, false).unwrap();
    println!(
        "lenient parse keeps {} arcs and {} edges",
        lenient.arcs().len(),
        lenient.edges().len()
    );

    // A digon collapses to an edge unless strict.
    let g = build(3, [], [(0, 1), (1, 0), (1, 2), (2, 0)], false).unwrap();
    print!(
        "{}",
        to_mgf_with_comments(&g, &["digon 0-1 stored as an edge"])
    );
    println!(
        "strict: {}",
        build(3, [], [(0, 1), (1, 0)], true).unwrap_err()
    );
}
