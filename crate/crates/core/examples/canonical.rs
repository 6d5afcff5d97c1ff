//! Canonical labelling, isomorphism and automorphism groups.
//!
//! cargo run --example canonical -- [file.mgf]

use mixed_moore::constructions::cayley_dihedral;
use mixed_moore::mixedgraph::{
    automorphism_count, automorphism_generators, canonical_form, canonical_graph, orbits_of,
    read_mgf, to_mgf,
};

fn main() {
    let g = match std::env::args().nth(1) {
        Some(p) => read_mgf(p, true).unwrap(),
        None => cayley_dihedral(5),
    };
    let form = canonical_form(&g).unwrap();
    println!("canonical {}", form.hex());
    println!("relabeling {:?}", form.relabeling);
    print!("{}", to_mgf(&canonical_graph(&g).unwrap()));

    let gens = automorphism_generators(&g, &[]).unwrap();
    println!(
        "|Aut| = {} from {} generators",
        automorphism_count(&g).unwrap(),
        gens.len()
    );
    println!("orbits {:?}", orbits_of(g.order(), &gens));
    let stab = automorphism_generators(&g, &[0]).unwrap();
    println!("orbits fixing 0 {:?}", orbits_of(g.order(), &stab));
}
