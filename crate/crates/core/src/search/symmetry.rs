use std::collections::HashMap;

use crate::mixedgraph::canon::{canonize, UnionFind};
use crate::mixedgraph::{MixedGraph, Vertex};

/// All `size`-subsets of `items` (assumed sorted), in lexicographic order.
pub(crate) fn combinations(items: &[Vertex], size: usize) -> Vec<Vec<Vertex>> {
    fn go(
        items: &[Vertex],
        size: usize,
        start: usize,
        cur: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        let need = size - cur.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            go(items, size, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size <= items.len() {
        go(items, size, 0, &mut Vec::with_capacity(size), &mut out);
    }
    out
}

/// Keep the first set of every orbit of the automorphisms of `partial` that
/// fix `pinned`. Returns the kept sets and the number dropped.
///
/// The candidate sets must be closed under those automorphisms, which holds
/// whenever candidacy is decided by the partial graph alone.
pub(crate) fn orbit_representatives(
    partial: &MixedGraph,
    pinned: Vertex,
    sets: Vec<Vec<Vertex>>,
) -> (Vec<Vec<Vertex>>, u64) {
    if sets.len() < 2 {
        return (sets, 0);
    }
    let gens = canonize(partial, &[pinned]).generators;
    if gens.is_empty() {
        return (sets, 0);
    }
    let index: HashMap<&[Vertex], usize> = sets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let mut uf = UnionFind::new(sets.len());
    for gen in &gens {
        for (i, s) in sets.iter().enumerate() {
            let mut image: Vec<Vertex> = s.iter().map(|&x| gen[x]).collect();
            image.sort_unstable();
            if let Some(&j) = index.get(image.as_slice()) {
                uf.union(i, j);
            }
        }
    }
    let keep: Vec<bool> = (0..sets.len()).map(|i| uf.find(i) == i).collect();
    let dropped = keep.iter().filter(|&&k| !k).count() as u64;
    let kept = sets
        .into_iter()
        .zip(keep)
        .filter_map(|(s, k)| k.then_some(s))
        .collect();
    (kept, dropped)
}
