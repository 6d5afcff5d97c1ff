//! Named mixed graphs used as independent witnesses.

use crate::mixedgraph::{build, MixedGraph};

/// The undirected (`directed = false`) or directed `n`-cycle on `0..n`.
///
/// Panics if `n < 3`.
pub fn cycle(n: usize, directed: bool) -> MixedGraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let pairs = (0..n).map(|i| (i, (i + 1) % n));
    if directed {
        MixedGraph::new(n, [], pairs)
    } else {
        MixedGraph::new(n, pairs, [])
    }
    .expect("cycle is a valid mixed graph")
}

/// Line digraph of the `n`-cycle with every edge replaced by a digon.
///
/// Vertex `2i` is the arc `i -> i+1` and `2i + 1` is the arc `i+1 -> i`
/// (indices mod `n`). Consecutive arcs `(u,v), (v,w)` give an arc of the line
/// digraph; the pairs `(u,v), (v,u)` produce opposite arcs, which become
/// edges. The result is `(1,1)`-regular on `2n` vertices.
pub fn line_digraph_of_cycle_digons(n: usize) -> MixedGraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let base: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| [(i, (i + 1) % n), ((i + 1) % n, i)])
        .collect();
    let mut arcs = Vec::new();
    for (a, &(_, v)) in base.iter().enumerate() {
        for (b, &(x, _)) in base.iter().enumerate() {
            if x == v {
                arcs.push((a, b));
            }
        }
    }
    build(2 * n, [], arcs, false).expect("line digraph is a valid mixed graph")
}

/// Cayley graph of the dihedral group `D_n = <ρ, σ | ρ^n = σ^2 = (ρσ)^2 = 1>`
/// with an arc `x -> xρ` and an edge `{x, xσ}` at every element.
///
/// Element `ρ^i σ^j` is vertex `i + n j`. Since `σ ρ = ρ^{-1} σ`, right
/// multiplication by `ρ` sends `ρ^i σ` to `ρ^{i-1} σ`.
pub fn cayley_dihedral(n: usize) -> MixedGraph {
    assert!(n >= 3, "rho must have order at least 3");
    let vertex = |i: usize, j: usize| i % n + n * j;
    let times_rho = |i: usize, j: usize| {
        if j == 0 {
            vertex(i + 1, 0)
        } else {
            vertex(i + n - 1, 1)
        }
    };
    let edges = (0..n).map(|i| (vertex(i, 0), vertex(i, 1)));
    let arcs = (0..n).flat_map(|i| {
        [
            (vertex(i, 0), times_rho(i, 0)),
            (vertex(i, 1), times_rho(i, 1)),
        ]
    });
    MixedGraph::new(2 * n, edges, arcs).expect("Cayley graph is a valid mixed graph")
}
