//! Non-backtracking walk counts and repeat multisets.
//!
//! cargo run --example repeats -- [file.mgf] [k]

use mixed_moore::bounds::moore_bound;
use mixed_moore::constructions::line_digraph_of_cycle_digons;
use mixed_moore::mixedgraph::{read_mgf, repeat_multiset, tree_walk_counts};

fn main() {
    let mut args = std::env::args().skip(1);
    let g = match args.next() {
        Some(path) => read_mgf(path, true).unwrap(),
        None => line_digraph_of_cycle_digons(5),
    };
    let k = args
        .next()
        .map(|s| s.parse().unwrap())
        .or(g.diameter())
        .unwrap_or(0);

    let dp = g.total_regularity();
    if let Some(dp) = dp {
        println!(
            "{dp}-regular, n = {}, M = {}",
            g.order(),
            moore_bound(dp, k)
        );
    }
    for u in 0..g.order() {
        let nu = tree_walk_counts(&g, u, k);
        let rep = repeat_multiset(&g, u, k);
        let shown: Vec<String> = nu.iter().map(|c| c.to_string()).collect();
        println!(
            "u={u} nu=[{}] |Rep|={} repeated={:?}",
            shown.join(" "),
            rep.total,
            rep.single_repeat()
        );
    }
}
