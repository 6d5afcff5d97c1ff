//! Stage one: the undirected part of the search.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::mixedgraph::canon::canonize;
use crate::mixedgraph::{MixedGraph, Vertex};

use super::symmetry::{combinations, orbit_representatives};
use super::PruneCounters;

/// The fixed perfect matching `{2i, 2i + 1}`, the only 1-regular graph on
/// `n` vertices up to isomorphism.
pub(crate) fn perfect_matching(n: usize) -> MixedGraph {
    MixedGraph::from_sorted(
        n,
        (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect(),
        Vec::new(),
    )
}

/// Non-isomorphic `r`-regular simple graphs on `n` vertices, sorted by
/// canonical encoding. Empty when `r * n` is odd or `r >= n`.
pub(crate) fn regular_skeletons(
    r: usize,
    n: usize,
    nodes: &mut u64,
    pruned: &mut PruneCounters,
) -> Vec<MixedGraph> {
    if (r * n) % 2 == 1 || (r > 0 && r >= n) {
        return Vec::new();
    }
    match r {
        0 => return vec![MixedGraph::from_sorted(n, Vec::new(), Vec::new())],
        1 => return vec![perfect_matching(n)],
        _ => {}
    }
    let mut gen = SkeletonGen {
        r,
        n,
        found: BTreeMap::new(),
        nodes: 0,
        pruned: PruneCounters::default(),
    };
    let mut state = State {
        edges: Vec::new(),
        adj: vec![vec![false; n]; n],
        deg: vec![0; n],
    };
    gen.extend(&mut state);
    *nodes += gen.nodes;
    pruned.add(&gen.pruned);
    gen.found.into_values().collect()
}

struct State {
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<bool>>,
    deg: Vec<usize>,
}

struct SkeletonGen {
    r: usize,
    n: usize,
    found: BTreeMap<Vec<u8>, MixedGraph>,
    nodes: u64,
    pruned: PruneCounters,
}

impl SkeletonGen {
    fn partial(&self, state: &State) -> MixedGraph {
        let mut edges = state.edges.clone();
        edges.sort_unstable();
        MixedGraph::from_sorted(self.n, edges, Vec::new())
    }

    fn extend(&mut self, state: &mut State) {
        self.nodes += 1;
        let Some(v) = (0..self.n).find(|&v| state.deg[v] < self.r) else {
            let g = self.partial(state);
            let c = canonize(&g, &[]);
            match self.found.entry(c.encoding) {
                Entry::Occupied(_) => self.pruned.isomorph += 1,
                Entry::Vacant(slot) => {
                    slot.insert(g.relabel(&c.labels));
                }
            }
            return;
        };
        let need = self.r - state.deg[v];
        let cands: Vec<Vertex> = (0..self.n)
            .filter(|&w| w != v && state.deg[w] < self.r && !state.adj[v][w])
            .collect();
        if cands.len() < need {
            self.pruned.degree += 1;
            return;
        }
        let sets = combinations(&cands, need);
        let (sets, dropped) = orbit_representatives(&self.partial(state), v, sets);
        self.pruned.orbit += dropped;
        for set in sets {
            for &w in &set {
                state.edges.push((v.min(w), v.max(w)));
                state.adj[v][w] = true;
                state.adj[w][v] = true;
                state.deg[v] += 1;
                state.deg[w] += 1;
            }
            self.extend(state);
            for &w in &set {
                state.edges.pop();
                state.adj[v][w] = false;
                state.adj[w][v] = false;
                state.deg[v] -= 1;
                state.deg[w] -= 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(r: usize, n: usize) -> usize {
        regular_skeletons(r, n, &mut 0, &mut PruneCounters::default()).len()
    }

    #[test]
    fn known_counts_of_regular_graphs() {
        // 2-regular: one per partition of n into parts >= 3.
        assert_eq!(count(2, 3), 1);
        assert_eq!(count(2, 6), 2);
        assert_eq!(count(2, 9), 4);
        // Cubic graphs, connected or not.
        assert_eq!(count(3, 4), 1);
        assert_eq!(count(3, 6), 2);
        assert_eq!(count(3, 8), 6);
        assert_eq!(count(3, 10), 21);
        assert_eq!(count(4, 7), 2);
    }

    #[test]
    fn impossible_parameters_give_nothing() {
        assert_eq!(count(3, 5), 0);
        assert_eq!(count(1, 7), 0);
        assert_eq!(count(4, 4), 0);
    }

    #[test]
    fn every_skeleton_is_regular() {
        for g in regular_skeletons(3, 8, &mut 0, &mut PruneCounters::default()) {
            assert!(g.degrees().edge_degree.iter().all(|&d| d == 3));
        }
    }
}
