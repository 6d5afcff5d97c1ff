//! Stage two: extending a skeleton with a `z`-in/`z`-out regular arc set.

use std::collections::{BTreeMap, VecDeque};

use num_traits::ToPrimitive;

use crate::bounds::{moore_bound, DegreePair};
use crate::mixedgraph::canon::canonize;
use crate::mixedgraph::{CanonicalForm, MixedGraph, Vertex};

use super::symmetry::{combinations, orbit_representatives};
use super::{DiameterMode, PruneCounters};

/// A partial arc assignment on top of a fixed skeleton.
#[derive(Debug, Clone)]
pub(crate) struct Node {
    arcs: Vec<(Vertex, Vertex)>,
    out: Vec<Vec<Vertex>>,
    out_left: Vec<u32>,
    in_left: Vec<u32>,
}

impl Node {
    fn next_vertex(&self) -> Option<Vertex> {
        self.out_left.iter().position(|&d| d > 0)
    }
}

#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub found: BTreeMap<Vec<u8>, (CanonicalForm, MixedGraph)>,
    pub nodes: u64,
    pub pruned: PruneCounters,
}

pub(crate) struct ArcSearch<'a> {
    skeleton: &'a MixedGraph,
    dp: DegreePair,
    k: u32,
    mode: DiameterMode,
    /// `subtree[j]`: Moore-tree order of depth `j` below a vertex entered by
    /// an arc, saturating.
    subtree: Vec<u64>,
}

impl<'a> ArcSearch<'a> {
    pub fn new(skeleton: &'a MixedGraph, dp: DegreePair, k: u32, mode: DiameterMode) -> Self {
        let subtree = (0..k.max(1))
            .map(|j| moore_bound(dp, j).to_u64().unwrap_or(u64::MAX))
            .collect();
        ArcSearch {
            skeleton,
            dp,
            k,
            mode,
            subtree,
        }
    }

    fn n(&self) -> usize {
        self.skeleton.order()
    }

    /// The empty assignment, or `None` if it is already hopeless.
    pub fn root(&self, pruned: &mut PruneCounters) -> Option<Node> {
        let n = self.n();
        let z = self.dp.z();
        let node = Node {
            arcs: Vec::new(),
            out: vec![Vec::new(); n],
            out_left: vec![z; n],
            in_left: vec![z; n],
        };
        if self.ball_bound_ok(&node) {
            Some(node)
        } else {
            pruned.moore_ball += 1;
            None
        }
    }

    fn partial_graph(&self, node: &Node) -> MixedGraph {
        let mut arcs = node.arcs.clone();
        arcs.sort_unstable();
        MixedGraph::from_sorted(self.n(), self.skeleton.edges().to_vec(), arcs)
    }

    /// Optimistic reach check: from every vertex, the vertices already within
    /// distance `k` plus a full Moore subtree behind every unassigned arc slot
    /// must cover the whole vertex set.
    fn ball_bound_ok(&self, node: &Node) -> bool {
        let n = self.n();
        let k = self.k;
        let mut dist = vec![u32::MAX; n];
        let mut queue = VecDeque::new();
        for u in 0..n {
            dist.fill(u32::MAX);
            dist[u] = 0;
            queue.clear();
            queue.push_back(u);
            let mut reach: u64 = 0;
            while let Some(x) = queue.pop_front() {
                reach += 1;
                let dx = dist[x];
                if dx < k {
                    let free = node.out_left[x] as u64;
                    if free > 0 {
                        let depth = (k - dx - 1) as usize;
                        reach = reach.saturating_add(free.saturating_mul(self.subtree[depth]));
                    }
                    for &y in self.skeleton.edge_neighbors(x).iter().chain(&node.out[x]) {
                        if dist[y] == u32::MAX {
                            dist[y] = dx + 1;
                            queue.push_back(y);
                        }
                    }
                }
                if reach >= n as u64 {
                    break;
                }
            }
            if reach < n as u64 {
                return false;
            }
        }
        true
    }

    /// Children of an incomplete node that survive pruning.
    pub fn children(&self, node: &Node, out: &mut Outcome) -> Vec<Node> {
        out.nodes += 1;
        let Some(v) = node.next_vertex() else {
            return Vec::new();
        };
        let need = node.out_left[v] as usize;
        let cands: Vec<Vertex> = (0..self.n())
            .filter(|&w| {
                w != v
                    && node.in_left[w] > 0
                    && !self.skeleton.has_edge(v, w)
                    && !node.out[v].contains(&w)
                    && !node.out[w].contains(&v)
            })
            .collect();
        if cands.len() < need {
            out.pruned.degree += 1;
            return Vec::new();
        }
        let sets = combinations(&cands, need);
        let (sets, dropped) = orbit_representatives(&self.partial_graph(node), v, sets);
        out.pruned.orbit += dropped;

        let mut kids = Vec::with_capacity(sets.len());
        for set in sets {
            let mut child = node.clone();
            for &w in &set {
                child.arcs.push((v, w));
                child.out[v].push(w);
                child.out_left[v] -= 1;
                child.in_left[w] -= 1;
            }
            if self.ball_bound_ok(&child) {
                kids.push(child);
            } else {
                out.pruned.moore_ball += 1;
            }
        }
        kids
    }

    pub fn is_complete(node: &Node) -> bool {
        node.next_vertex().is_none()
    }

    fn accept(&self, node: &Node, out: &mut Outcome) {
        let g = self.partial_graph(node);
        debug_assert_eq!(g.total_regularity(), Some(self.dp));
        let ok = match (g.diameter(), self.mode) {
            (Some(d), DiameterMode::Exact) => d == self.k,
            (Some(d), DiameterMode::AtMost) => d <= self.k,
            (None, _) => false,
        };
        if !ok {
            out.pruned.diameter += 1;
            return;
        }
        let c = canonize(&g, &[]);
        if out.found.contains_key(&c.encoding) {
            out.pruned.isomorph += 1;
            return;
        }
        let canonical = g.relabel(&c.labels);
        let form = CanonicalForm {
            relabeling: c.labels,
            bytes: c.encoding.clone(),
        };
        out.found.insert(c.encoding, (form, canonical));
    }

    pub fn dfs(&self, node: &Node, out: &mut Outcome) {
        if Self::is_complete(node) {
            out.nodes += 1;
            self.accept(node, out);
            return;
        }
        for child in self.children(node, out) {
            self.dfs(&child, out);
        }
    }
}
