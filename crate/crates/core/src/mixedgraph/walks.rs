use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{MixedGraph, Vertex};

/// `ν(v)` for every vertex: the number of walks of length at most `k` from
/// `u` to `v` that never step straight back along the edge they just used.
///
/// These are exactly the branches of the Moore tree rooted at `u`, so for an
/// `(r, z)`-regular graph the counts sum to `M(r, z, k)`. Arcs carry no
/// backtracking restriction.
pub fn tree_walk_counts(g: &MixedGraph, u: Vertex, k: u32) -> Vec<BigUint> {
    let n = g.order();
    // State (x, slot): slot 0 means x was entered by an arc (or is the root),
    // slot j + 1 means x was entered along the edge to edge_neighbors(x)[j].
    let fresh = |g: &MixedGraph| -> Vec<Vec<BigUint>> {
        (0..n)
            .map(|x| vec![BigUint::zero(); g.edge_neighbors(x).len() + 1])
            .collect()
    };
    let mut counts = vec![BigUint::zero(); n];
    let mut cur = fresh(g);
    cur[u][0] = BigUint::one();
    counts[u] = BigUint::one();

    for _ in 0..k {
        let mut next = fresh(g);
        for (x, states) in cur.iter().enumerate() {
            for (slot, c) in states.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let came_from = slot.checked_sub(1).map(|j| g.edge_neighbors(x)[j]);
                for &y in g.edge_neighbors(x) {
                    if Some(y) == came_from {
                        continue;
                    }
                    let back = g.edge_neighbors(y).binary_search(&x).unwrap();
                    next[y][back + 1] += c;
                }
                for &y in g.out_neighbors(x) {
                    next[y][0] += c;
                }
            }
        }
        for (x, states) in next.iter().enumerate() {
            for c in states {
                counts[x] += c;
            }
        }
        cur = next;
    }
    counts
}

/// Vertices reached from `root` by more than one Moore-tree branch, each
/// with multiplicity `ν(v) - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepeatMultiset {
    pub root: Vertex,
    pub radius: u32,
    pub excess: BTreeMap<Vertex, BigUint>,
    pub total: BigUint,
}

impl RepeatMultiset {
    /// The repeat of the root, when exactly one vertex is repeated once.
    pub fn single_repeat(&self) -> Option<Vertex> {
        if self.total.is_one() {
            self.excess.keys().next().copied()
        } else {
            None
        }
    }
}

pub fn repeat_multiset(g: &MixedGraph, u: Vertex, k: u32) -> RepeatMultiset {
    let mut excess = BTreeMap::new();
    let mut total = BigUint::zero();
    for (v, nu) in tree_walk_counts(g, u, k).into_iter().enumerate() {
        if nu > BigUint::one() {
            let e = nu - 1u32;
            total += &e;
            excess.insert(v, e);
        }
    }
    RepeatMultiset {
        root: u,
        radius: k,
        excess,
        total,
    }
}
