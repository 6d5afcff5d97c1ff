//! Canonical labelling by partition refinement and individualization.
//!
//! The search tree individualizes a vertex of the first non-singleton cell
//! and refines, down to discrete partitions. Each leaf gives a labelling; the
//! canonical one minimizes the encoded adjacency. Automorphisms are
//! discovered when two leaves encode identically and are used to skip
//! equivalent subtrees.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::{GraphError, MixedGraph, Vertex};

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_ORDER_CAP: usize = 32;

/// Canonical labelling of a mixed graph together with the encoding of the
/// relabelled graph. Two graphs are isomorphic iff their encodings match.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CanonicalForm {
    /// `relabeling[v]` is the canonical label of vertex `v`.
    pub relabeling: Vec<Vertex>,
    /// `n`, then the sorted edge list, then the sorted arc list, each count
    /// and label as a big-endian `u16`.
    #[serde(rename = "hex", serialize_with = "bytes_as_hex")]
    pub bytes: Vec<u8>,
}

fn bytes_as_hex<S: serde::Serializer>(bytes: &[u8], s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&bytes.iter().map(|b| format!("{b:02x}")).collect::<String>())
}

impl CanonicalForm {
    pub fn hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bytes
            .cmp(&other.bytes)
            .then_with(|| self.relabeling.cmp(&other.relabeling))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

pub(crate) fn encode(g: &MixedGraph, labels: &[Vertex]) -> Vec<u8> {
    let mut edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (labels[u], labels[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut arcs: Vec<(Vertex, Vertex)> = g
        .arcs()
        .iter()
        .map(|&(u, v)| (labels[u], labels[v]))
        .collect();
    edges.sort_unstable();
    arcs.sort_unstable();
    let mut out = Vec::with_capacity(6 + 4 * (edges.len() + arcs.len()));
    let mut push = |x: usize| out.extend_from_slice(&(x as u16).to_be_bytes());
    push(g.order());
    push(edges.len());
    for (a, b) in edges {
        push(a);
        push(b);
    }
    push(arcs.len());
    for (a, b) in arcs {
        push(a);
        push(b);
    }
    out
}

/// Recolour by sorted key: each vertex gets the index of the first vertex
/// carrying its key in sorted order, so colours are cell start positions.
fn colour_by_key<K: Ord>(keys: Vec<K>) -> Vec<usize> {
    let n = keys.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut colour = vec![0; n];
    for i in 1..n {
        colour[order[i]] = if keys[order[i]] == keys[order[i - 1]] {
            colour[order[i - 1]]
        } else {
            i
        };
    }
    colour
}

fn cell_count(colour: &[usize]) -> usize {
    let mut seen = vec![false; colour.len()];
    colour
        .iter()
        .filter(|&&c| !std::mem::replace(&mut seen[c], true))
        .count()
}

fn refine(g: &MixedGraph, mut colour: Vec<usize>) -> Vec<usize> {
    let n = g.order();
    let mut cells = cell_count(&colour);
    while cells < n {
        let sorted_colours = |nbrs: &[Vertex], colour: &[usize]| {
            let mut v: Vec<usize> = nbrs.iter().map(|&w| colour[w]).collect();
            v.sort_unstable();
            v
        };
        let keys: Vec<_> = (0..n)
            .map(|v| {
                (
                    colour[v],
                    sorted_colours(g.edge_neighbors(v), &colour),
                    sorted_colours(g.out_neighbors(v), &colour),
                    sorted_colours(g.in_neighbors(v), &colour),
                )
            })
            .collect();
        let next = colour_by_key(keys);
        let next_cells = cell_count(&next);
        colour = next;
        if next_cells == cells {
            break;
        }
        cells = next_cells;
    }
    colour
}

fn individualize(colour: &[usize], v: Vertex) -> Vec<usize> {
    colour_by_key(
        colour
            .iter()
            .enumerate()
            .map(|(w, &c)| (c, w != v))
            .collect(),
    )
}

/// Vertices of the first (lowest colour) non-singleton cell, or `None` when
/// the partition is discrete.
fn target_cell(colour: &[usize]) -> Option<Vec<Vertex>> {
    let n = colour.len();
    let mut size = vec![0usize; n];
    for &c in colour {
        size[c] += 1;
    }
    let c = (0..n).find(|&c| size[c] > 1)?;
    Some((0..n).filter(|&v| colour[v] == c).collect())
}

pub(crate) struct UnionFind(Vec<usize>);

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut x = x;
        while self.0[x] != root {
            x = std::mem::replace(&mut self.0[x], root);
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the smaller label as root so roots are orbit minima.
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

/// Orbit representative (smallest member) of each vertex under the group
/// generated by `generators`.
pub fn orbits_of(n: usize, generators: &[Vec<Vertex>]) -> Vec<Vertex> {
    let mut uf = UnionFind::new(n);
    for gen in generators {
        for (v, &w) in gen.iter().enumerate() {
            uf.union(v, w);
        }
    }
    (0..n).map(|v| uf.find(v)).collect()
}

struct Leaf {
    encoding: Vec<u8>,
    labels: Vec<usize>,
    path: Vec<Vertex>,
}

struct Search<'a> {
    g: &'a MixedGraph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<Vertex>>,
}

impl Search<'_> {
    /// Automorphism `a` with `labels_b[a[v]] == labels_a[v]`.
    fn automorphism(labels_a: &[usize], labels_b: &[usize]) -> Vec<Vertex> {
        let mut inv_b = vec![0; labels_b.len()];
        for (v, &l) in labels_b.iter().enumerate() {
            inv_b[l] = v;
        }
        labels_a.iter().map(|&l| inv_b[l]).collect()
    }

    fn common_prefix(a: &[Vertex], b: &[Vertex]) -> usize {
        a.iter().zip(b).take_while(|(x, y)| x == y).count()
    }

    /// Returns `Some(level)` to abandon everything below the node at depth
    /// `level` on the current path.
    fn visit(&mut self, colour: Vec<usize>, path: &mut Vec<Vertex>) -> Option<usize> {
        let Some(cell) = target_cell(&colour) else {
            return self.leaf(colour, path);
        };
        let depth = path.len();
        let mut done: Vec<Vertex> = Vec::new();
        for &v in &cell {
            if !done.is_empty() {
                let fixing: Vec<Vec<Vertex>> = self
                    .generators
                    .iter()
                    .filter(|gen| path.iter().all(|&p| gen[p] == p))
                    .cloned()
                    .collect();
                let orbit = orbits_of(colour.len(), &fixing);
                if done.iter().any(|&w| orbit[w] == orbit[v]) {
                    continue;
                }
            }
            done.push(v);
            path.push(v);
            let child = refine(self.g, individualize(&colour, v));
            let jump = self.visit(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, labels: Vec<usize>, path: &[Vertex]) -> Option<usize> {
        let encoding = encode(self.g, &labels);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                encoding,
                labels,
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                encoding: leaf.encoding.clone(),
                labels: leaf.labels.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if encoding == first.encoding {
            let auto = Self::automorphism(&first.labels, &labels);
            let level = Self::common_prefix(&first.path, path);
            self.generators.push(auto);
            return Some(level);
        }
        let best = self.best.as_ref().unwrap();
        match encoding.cmp(&best.encoding) {
            Ordering::Less => {
                self.best = Some(Leaf {
                    encoding,
                    labels,
                    path: path.to_vec(),
                });
                None
            }
            Ordering::Equal => {
                let auto = Self::automorphism(&best.labels, &labels);
                let level = Self::common_prefix(&best.path, path);
                self.generators.push(auto);
                Some(level)
            }
            Ordering::Greater => None,
        }
    }
}

pub(crate) struct CanonResult {
    pub labels: Vec<usize>,
    pub encoding: Vec<u8>,
    pub generators: Vec<Vec<Vertex>>,
    pub group_order: BigUint,
}

/// Canonical labelling of `g` with vertex `fixed[i]` pinned to its own
/// colour `i` (ahead of all unpinned vertices).
pub(crate) fn canonize(g: &MixedGraph, fixed: &[Vertex]) -> CanonResult {
    let n = g.order();
    if n == 0 {
        return CanonResult {
            labels: Vec::new(),
            encoding: encode(g, &[]),
            generators: Vec::new(),
            group_order: BigUint::one(),
        };
    }
    let mut pin = vec![fixed.len(); n];
    for (i, &v) in fixed.iter().enumerate() {
        pin[v] = i;
    }
    let start = refine(g, colour_by_key(pin));
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    search.visit(start, &mut Vec::new());
    let first = search.first.unwrap();
    let best = search.best.unwrap();

    // Orbit-stabilizer down the first path.
    let mut group_order = BigUint::one();
    for i in 0..first.path.len() {
        let prefix = &first.path[..i];
        let fixing: Vec<Vec<Vertex>> = search
            .generators
            .iter()
            .filter(|gen| prefix.iter().all(|&p| gen[p] == p))
            .cloned()
            .collect();
        let orbit = orbits_of(n, &fixing);
        let target = orbit[first.path[i]];
        group_order *= orbit.iter().filter(|&&o| o == target).count();
    }
    CanonResult {
        labels: best.labels,
        encoding: best.encoding,
        generators: search.generators,
        group_order,
    }
}

fn check_cap(g: &MixedGraph, cap: usize) -> Result<(), GraphError> {
    if g.order() > cap {
        return Err(GraphError::SizeLimitExceeded { n: g.order(), cap });
    }
    Ok(())
}

pub fn canonical_form_with_cap(g: &MixedGraph, cap: usize) -> Result<CanonicalForm, GraphError> {
    check_cap(g, cap.min(u16::MAX as usize))?;
    let res = canonize(g, &[]);
    Ok(CanonicalForm {
        relabeling: res.labels,
        bytes: res.encoding,
    })
}

pub fn canonical_form(g: &MixedGraph) -> Result<CanonicalForm, GraphError> {
    canonical_form_with_cap(g, CANONICAL_ORDER_CAP)
}

/// `g` relabelled by its canonical labelling.
pub fn canonical_graph(g: &MixedGraph) -> Result<MixedGraph, GraphError> {
    Ok(g.relabel(&canonical_form(g)?.relabeling))
}

pub fn is_isomorphic(g: &MixedGraph, h: &MixedGraph) -> Result<bool, GraphError> {
    if g.order() != h.order()
        || g.edges().len() != h.edges().len()
        || g.arcs().len() != h.arcs().len()
    {
        return Ok(false);
    }
    Ok(canonical_form(g)?.bytes == canonical_form(h)?.bytes)
}

pub fn automorphism_count(g: &MixedGraph) -> Result<BigUint, GraphError> {
    check_cap(g, CANONICAL_ORDER_CAP)?;
    Ok(canonize(g, &[]).group_order)
}

/// Generators of the automorphisms of `g` that fix every vertex in `fixed`.
/// Each generator maps `v` to `gen[v]`.
pub fn automorphism_generators(
    g: &MixedGraph,
    fixed: &[Vertex],
) -> Result<Vec<Vec<Vertex>>, GraphError> {
    check_cap(g, CANONICAL_ORDER_CAP)?;
    Ok(canonize(g, fixed).generators)
}
