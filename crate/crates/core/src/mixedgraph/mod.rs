//! Mixed graphs: a vertex set with undirected edges and directed arcs.
//!
//! Vertices are `0..n`. A [`MixedGraph`] is immutable once built. Digons are
//! always stored as edges, never as a pair of opposite arcs.

pub(crate) mod canon;
mod mgf;
mod walks;

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::bounds::DegreePair;

pub use canon::{
    automorphism_count, automorphism_generators, canonical_form, canonical_form_with_cap,
    canonical_graph, is_isomorphic, orbits_of, CanonicalForm, CANONICAL_ORDER_CAP,
};
pub use mgf::{parse_mgf, read_mgf, to_mgf, to_mgf_with_comments, write_mgf, MgfError};
pub use walks::{repeat_multiset, tree_walk_counts, RepeatMultiset};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {label} out of range for order {n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate {kind} {u} {v}")]
    Duplicate {
        kind: &'static str,
        u: Vertex,
        v: Vertex,
    },
    #[error("arcs ({u},{v}) and ({v},{u}) form a digon; store it as an edge")]
    DigonConflict { u: Vertex, v: Vertex },
    #[error("arc ({u},{v}) is parallel to an edge")]
    ParallelArcEdge { u: Vertex, v: Vertex },
    #[error("order {n} exceeds the configured cap {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    arcs: Vec<(Vertex, Vertex)>,
    edge_adj: Vec<Vec<Vertex>>,
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
}

/// Validate and assemble a mixed graph.
///
/// In strict mode opposite arcs are rejected with [`GraphError::DigonConflict`]
/// and arcs parallel to an edge with [`GraphError::ParallelArcEdge`]. In lenient
/// mode each digon is moved into the edge set first and parallel arcs are kept.
pub fn build<E, A>(n: usize, edges: E, arcs: A, strict: bool) -> Result<MixedGraph, GraphError>
where
    E: IntoIterator<Item = (Vertex, Vertex)>,
    A: IntoIterator<Item = (Vertex, Vertex)>,
{
    let check = |u: Vertex, v: Vertex| -> Result<(), GraphError> {
        for label in [u, v] {
            if label >= n {
                return Err(GraphError::LabelOutOfRange { label, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    };

    let mut edge_set = BTreeSet::new();
    for (u, v) in edges {
        check(u, v)?;
        let key = (u.min(v), u.max(v));
        if !edge_set.insert(key) {
            return Err(GraphError::Duplicate {
                kind: "edge",
                u: key.0,
                v: key.1,
            });
        }
    }
    let mut arc_set = BTreeSet::new();
    for (u, v) in arcs {
        check(u, v)?;
        if !arc_set.insert((u, v)) {
            return Err(GraphError::Duplicate { kind: "arc", u, v });
        }
    }

    let digons: Vec<(Vertex, Vertex)> = arc_set
        .iter()
        .filter(|&&(u, v)| u < v && arc_set.contains(&(v, u)))
        .copied()
        .collect();
    if let Some(&(u, v)) = digons.first() {
        if strict {
            return Err(GraphError::DigonConflict { u, v });
        }
    }
    for (u, v) in digons {
        arc_set.remove(&(u, v));
        arc_set.remove(&(v, u));
        if !edge_set.insert((u, v)) {
            return Err(GraphError::Duplicate { kind: "edge", u, v });
        }
    }

    if strict {
        if let Some(&(u, v)) = arc_set
            .iter()
            .find(|&&(u, v)| edge_set.contains(&(u.min(v), u.max(v))))
        {
            return Err(GraphError::ParallelArcEdge { u, v });
        }
    }

    Ok(MixedGraph::from_sorted(
        n,
        edge_set.into_iter().collect(),
        arc_set.into_iter().collect(),
    ))
}

/// Per-vertex degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub edge_degree: Vec<usize>,
    pub out_degree: Vec<usize>,
    pub in_degree: Vec<usize>,
}

/// All-pairs distances; `None` marks an unreachable target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[Option<u32>] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest distance over ordered pairs, `None` if some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        self.dist
            .iter()
            .try_fold(0u32, |acc, d| d.map(|d| acc.max(d)))
    }

    /// Largest distance from `u`, `None` if some vertex is unreachable.
    pub fn eccentricity(&self, u: Vertex) -> Option<u32> {
        self.row(u)
            .iter()
            .try_fold(0u32, |acc, d| d.map(|d| acc.max(d)))
    }
}

impl MixedGraph {
    /// Strict-mode [`build`].
    pub fn new<E, A>(n: usize, edges: E, arcs: A) -> Result<Self, GraphError>
    where
        E: IntoIterator<Item = (Vertex, Vertex)>,
        A: IntoIterator<Item = (Vertex, Vertex)>,
    {
        build(n, edges, arcs, true)
    }

    // Caller guarantees sorted, deduplicated, validated input.
    pub(crate) fn from_sorted(
        n: usize,
        edges: Vec<(Vertex, Vertex)>,
        arcs: Vec<(Vertex, Vertex)>,
    ) -> Self {
        let mut edge_adj = vec![Vec::new(); n];
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            edge_adj[u].push(v);
            edge_adj[v].push(u);
        }
        for &(u, v) in &arcs {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for list in edge_adj.iter_mut().chain(&mut in_adj) {
            list.sort_unstable();
        }
        MixedGraph {
            n,
            edges,
            arcs,
            edge_adj,
            out_adj,
            in_adj,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Arcs as `(tail, head)`, sorted.
    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn edge_neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.edge_adj[u]
    }

    pub fn out_neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.out_adj[u]
    }

    pub fn in_neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.in_adj[u]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_adj[u].binary_search(&v).is_ok()
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out_adj[u].contains(&v)
    }

    /// True when no arc runs parallel to an edge (digons are excluded by
    /// construction).
    pub fn is_strict(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| !self.has_edge(u, v))
    }

    pub fn degrees(&self) -> DegreeProfile {
        DegreeProfile {
            edge_degree: self.edge_adj.iter().map(Vec::len).collect(),
            out_degree: self.out_adj.iter().map(Vec::len).collect(),
            in_degree: self.in_adj.iter().map(Vec::len).collect(),
        }
    }

    /// `(r, z)` when every vertex has `r` edges, `z` out-arcs and `z` in-arcs.
    pub fn total_regularity(&self) -> Option<DegreePair> {
        if self.n == 0 {
            return None;
        }
        let r = self.edge_adj[0].len();
        let z = self.out_adj[0].len();
        let regular = (0..self.n).all(|u| {
            self.edge_adj[u].len() == r && self.out_adj[u].len() == z && self.in_adj[u].len() == z
        });
        if !regular {
            return None;
        }
        DegreePair::new(r as u32, z as u32).ok()
    }

    /// Breadth-first distances from `u`: edges both ways, arcs forward only.
    pub fn distances_from(&self, u: Vertex) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[u] = Some(0);
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &y in self.edge_adj[x].iter().chain(&self.out_adj[x]) {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn distances(&self) -> DistanceMatrix {
        let mut dist = Vec::with_capacity(self.n * self.n);
        for u in 0..self.n {
            dist.extend(self.distances_from(u));
        }
        DistanceMatrix { n: self.n, dist }
    }

    pub fn diameter(&self) -> Option<u32> {
        let mut diam = 0;
        for u in 0..self.n {
            for d in self.distances_from(u) {
                diam = diam.max(d?);
            }
        }
        Some(diam)
    }

    /// `G_i(u)` for `i = 0, 1, ...` up to the eccentricity of `u`; vertices
    /// unreachable from `u` are omitted.
    pub fn layers(&self, u: Vertex) -> Vec<Vec<Vertex>> {
        let mut out: Vec<Vec<Vertex>> = Vec::new();
        for (v, d) in self.distances_from(u).into_iter().enumerate() {
            if let Some(d) = d {
                let d = d as usize;
                if out.len() <= d {
                    out.resize(d + 1, Vec::new());
                }
                out[d].push(v);
            }
        }
        out
    }

    /// Same edges, every arc reversed.
    pub fn converse(&self) -> MixedGraph {
        let mut arcs: Vec<_> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        arcs.sort_unstable();
        MixedGraph::from_sorted(self.n, self.edges.clone(), arcs)
    }

    /// Image under `perm`, where vertex `v` becomes `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[Vertex]) -> MixedGraph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        let mut arcs: Vec<_> = self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        edges.sort_unstable();
        arcs.sort_unstable();
        MixedGraph::from_sorted(self.n, edges, arcs)
    }

    /// The graph seen as a digraph: an edge contributes both `(u, v)` and
    /// `(v, u)`, an arc only `(u, v)`.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] += 1;
            a[v][u] += 1;
        }
        for &(u, v) in &self.arcs {
            a[u][v] += 1;
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cycle;

    #[test]
    fn lenient_build_turns_digons_into_edges() {
        let g = build(2, [], [(0, 1), (1, 0)], false).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        assert!(g.arcs().is_empty());
        assert_eq!(
            build(2, [], [(0, 1), (1, 0)], true),
            Err(GraphError::DigonConflict { u: 0, v: 1 })
        );
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            build(3, [(0, 1)], [(0, 1)], true),
            Err(GraphError::ParallelArcEdge { u: 0, v: 1 })
        );
        assert!(build(3, [(0, 1)], [(1, 0)], false).is_ok());
        assert_eq!(build(3, [(1, 1)], [], true), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            build(3, [(0, 3)], [], true),
            Err(GraphError::LabelOutOfRange { label: 3, n: 3 })
        );
        assert!(matches!(
            build(3, [(0, 1), (1, 0)], [], true),
            Err(GraphError::Duplicate { kind: "edge", .. })
        ));
        assert!(matches!(
            build(3, [], [(0, 1), (0, 1)], true),
            Err(GraphError::Duplicate { kind: "arc", .. })
        ));
        assert!(matches!(
            build(3, [(0, 1)], [(0, 1), (1, 0)], false),
            Err(GraphError::Duplicate { kind: "edge", .. })
        ));
    }

    #[test]
    fn regularity() {
        assert_eq!(
            cycle(4, true).total_regularity(),
            Some(DegreePair::new(0, 1).unwrap())
        );
        let path = MixedGraph::new(3, [(0, 1), (1, 2)], []).unwrap();
        assert_eq!(path.total_regularity(), None);
        let d = path.degrees();
        assert_eq!(d.edge_degree, vec![1, 2, 1]);
        assert_eq!(d.edge_degree.iter().sum::<usize>(), 2 * path.edges().len());
    }

    #[test]
    fn cycle_diameters() {
        assert_eq!(cycle(5, false).diameter(), Some(2));
        assert_eq!(cycle(5, true).diameter(), Some(4));
        let sizes: Vec<usize> = cycle(3, true).layers(0).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 1, 1]);
    }

    #[test]
    fn disconnected_has_no_diameter() {
        let g = MixedGraph::new(4, [(0, 1), (2, 3)], []).unwrap();
        assert_eq!(g.diameter(), None);
        assert_eq!(g.distances().diameter(), None);
        assert_eq!(g.distances().get(0, 2), None);
        assert_eq!(g.layers(0), vec![vec![0], vec![1]]);
    }

    #[test]
    fn arcs_are_one_way() {
        let g = MixedGraph::new(3, [], [(0, 1), (1, 2), (2, 0)]).unwrap();
        let d = g.distances();
        assert_eq!(d.get(0, 1), Some(1));
        assert_eq!(d.get(1, 0), Some(2));
        assert_eq!(d.get(2, 2), Some(0));
        assert_eq!(d.eccentricity(0), Some(2));
    }

    #[test]
    fn converse_reverses_arcs_only() {
        let g = cycle(3, true);
        let c = g.converse();
        assert_ne!(g, c);
        assert_eq!(c.converse(), g);
        assert!(c.has_arc(1, 0));
        let m = MixedGraph::new(3, [(0, 1)], [(1, 2)]).unwrap();
        assert_eq!(m.converse().edges(), m.edges());
    }

    #[test]
    fn adjacency_examples() {
        let e = MixedGraph::new(2, [(0, 1)], []).unwrap();
        assert_eq!(e.adjacency_matrix(), vec![vec![0, 1], vec![1, 0]]);
        let a = MixedGraph::new(2, [], [(0, 1)]).unwrap();
        assert_eq!(a.adjacency_matrix(), vec![vec![0, 1], vec![0, 0]]);
    }

    #[test]
    fn relabel_round_trip() {
        let g = MixedGraph::new(4, [(0, 1)], [(1, 2), (2, 3), (3, 0)]).unwrap();
        let perm = [2, 0, 3, 1];
        let mut inv = [0; 4];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        assert_eq!(g.relabel(&perm).relabel(&inv), g);
        assert!(g.relabel(&perm).has_edge(2, 0));
    }
}
