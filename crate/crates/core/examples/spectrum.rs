//! Exact characteristic polynomials and cospectrality.
//!
//! cargo run --example spectrum -- [file.mgf ...]

use mixed_moore::constructions::{cayley_dihedral, cycle};
use mixed_moore::mixedgraph::read_mgf;
use mixed_moore::spectral::{char_poly, cospectral};

fn main() {
    let paths: Vec<String> = std::env::args().skip(1).collect();
    let graphs = if paths.is_empty() {
        vec![cycle(5, false), cayley_dihedral(5)]
    } else {
        paths.iter().map(|p| read_mgf(p, true).unwrap()).collect()
    };
    for g in &graphs {
        let p = char_poly(g);
        println!("{}", p.to_coefficient_line());
        match p.factored() {
            Some(f) => println!("  = {f}"),
            None => println!("  = {p}"),
        }
    }
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            println!("{i} ~ {j}: {}", cospectral(&graphs[i], &graphs[j]));
        }
    }
}
