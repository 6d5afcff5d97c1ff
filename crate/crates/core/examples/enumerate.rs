//! Exhaustive search for totally regular mixed graphs of given order and
//! diameter, and the largest order reachable for a degree pair.
//!
//! cargo run --release --example enumerate -- [r z k n] [jobs]

use mixed_moore::mixedgraph::to_mgf;
use mixed_moore::{enumerate, max_order, DegreePair, DiameterMode, SearchSpec};

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let (r, z, k, n) = match args[..] {
        [r, z, k, n, ..] => (r as u32, z as u32, k as u32, n as usize),
        _ => (1, 1, 3, 10),
    };
    let jobs = args.get(4).copied().unwrap_or(1) as usize;
    let dp = DegreePair::new(r, z).unwrap();

    let spec = SearchSpec::new(dp, k, n)
        .mode(DiameterMode::Exact)
        .jobs(jobs);
    let res = enumerate(&spec).unwrap();
    println!(
        "{dp} k={k} n={n}: {} classes from {} skeletons, {} nodes, {:?}",
        res.class_count(),
        res.skeletons,
        res.nodes_explored,
        res.wall_time
    );
    if let Some(why) = &res.obstruction {
        println!("obstruction: {why}");
    }
    for (i, g) in res.graphs.iter().enumerate() {
        println!("--- {}\n{}", res.file_name(i), to_mgf(g));
    }

    if let Ok(Some((best, found))) = max_order(dp, k, 1, None, jobs, 16) {
        println!(
            "largest order with diameter <= {k}: {best} ({} classes)",
            found.class_count()
        );
    }
}
