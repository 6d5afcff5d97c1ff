//! The line digraph of a cycle with digons and the dihedral Cayley graph
//! are the same mixed graph, and it is isomorphic to its converse.
//!
//! cargo run --example constructions -- [n]

use mixed_moore::constructions::{cayley_dihedral, line_digraph_of_cycle_digons};
use mixed_moore::mixedgraph::{is_isomorphic, to_mgf};

fn main() {
    let n = std::env::args().nth(1).map_or(5, |s| s.parse().unwrap());
    let ld = line_digraph_of_cycle_digons(n);
    let cd = cayley_dihedral(n);
    print!("{}", to_mgf(&ld));
    println!(
        "regularity {:?}, diameter {:?}",
        ld.total_regularity(),
        ld.diameter()
    );
    println!(
        "line digraph ~ Cayley graph: {}",
        is_isomorphic(&ld, &cd).unwrap()
    );
    println!(
        "self-converse: {}",
        is_isomorphic(&ld, &ld.converse()).unwrap()
    );
}
