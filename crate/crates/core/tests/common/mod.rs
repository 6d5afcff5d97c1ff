//! Independent oracles: nothing here calls the library's canonizer, walk
//! counter, search or polynomial code.
#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use mixed_moore::MixedGraph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../golden")
}

pub fn golden_paths() -> Vec<PathBuf> {
    (0..3)
        .map(|i| golden_dir().join(format!("extremal_1_1_k3_n10_{i}.mgf")))
        .collect()
}

pub fn golden_graphs() -> Vec<MixedGraph> {
    golden_paths()
        .iter()
        .map(|p| mixed_moore::mixedgraph::read_mgf(p, true).unwrap())
        .collect()
}

/// Dense adjacency: 1 for an arc or either direction of an edge.
pub fn dense(g: &MixedGraph) -> Vec<Vec<u8>> {
    let n = g.order();
    let mut a = vec![vec![0u8; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    for &(u, v) in g.arcs() {
        a[u][v] = 1;
    }
    a
}

/// Kind matrix: 0 nothing, 1 edge, 2 arc u->v, 3 arc v->u.
fn kinds(g: &MixedGraph) -> Vec<Vec<u8>> {
    let n = g.order();
    let mut a = vec![vec![0u8; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    for &(u, v) in g.arcs() {
        a[u][v] |= 2;
        a[v][u] |= 4;
    }
    a
}

/// Floyd-Warshall diameter; `None` when some pair is unreachable.
pub fn floyd_diameter(g: &MixedGraph) -> Option<u32> {
    let n = g.order();
    let inf = u32::MAX / 4;
    let a = dense(g);
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        for v in 0..n {
            if u == v {
                d[u][v] = 0;
            } else if a[u][v] == 1 {
                d[u][v] = 1;
            }
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                let via = d[u][w] + d[w][v];
                if via < d[u][v] {
                    d[u][v] = via;
                }
            }
        }
    }
    let mut best = 0;
    for row in &d {
        for &x in row {
            if x >= inf {
                return None;
            }
            best = best.max(x);
        }
    }
    Some(best)
}

fn extend_matches(
    a: &[Vec<u8>],
    b: &[Vec<u8>],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    count_all: bool,
    found: &mut u64,
) -> bool {
    let i = map.len();
    let n = a.len();
    if i == n {
        *found += 1;
        return !count_all;
    }
    for c in 0..n {
        if used[c] {
            continue;
        }
        let ok = a[i][i] == b[c][c] && (0..i).all(|j| a[i][j] == b[c][map[j]]);
        if !ok {
            continue;
        }
        map.push(c);
        used[c] = true;
        let stop = extend_matches(a, b, map, used, count_all, found);
        map.pop();
        used[c] = false;
        if stop {
            return true;
        }
    }
    false
}

/// Backtracking isomorphism test straight from the definition.
pub fn brute_isomorphic(g: &MixedGraph, h: &MixedGraph) -> bool {
    if g.order() != h.order()
        || g.edges().len() != h.edges().len()
        || g.arcs().len() != h.arcs().len()
    {
        return false;
    }
    let mut found = 0;
    extend_matches(
        &kinds(g),
        &kinds(h),
        &mut Vec::new(),
        &mut vec![false; g.order()],
        false,
        &mut found,
    );
    found > 0
}

/// Number of vertex permutations preserving every edge and arc.
pub fn brute_automorphisms(g: &MixedGraph) -> u64 {
    let k = kinds(g);
    let mut found = 0;
    extend_matches(
        &k,
        &k,
        &mut Vec::new(),
        &mut vec![false; g.order()],
        true,
        &mut found,
    );
    found
}

/// Automorphisms counted by testing every one of the n! permutations.
pub fn all_permutations_automorphisms(g: &MixedGraph) -> u64 {
    let n = g.order();
    let k = kinds(g);
    let mut perm: Vec<usize> = (0..n).collect();
    let fixes = |p: &[usize]| (0..n).all(|u| (0..n).all(|v| k[u][v] == k[p[u]][p[v]]));
    let mut count = u64::from(fixes(&perm));
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            count += u64::from(fixes(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

/// Isomorphism-invariant bucket key: sorted rows of sorted BFS distances.
pub fn invariant_key(g: &MixedGraph) -> Vec<Vec<u32>> {
    let n = g.order();
    let a = dense(g);
    let mut rows: Vec<Vec<u32>> = (0..n)
        .map(|s| {
            let mut d = vec![u32::MAX; n];
            d[s] = 0;
            let mut q = std::collections::VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for y in 0..n {
                    if a[x][y] == 1 && d[y] == u32::MAX {
                        d[y] = d[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            d.sort_unstable();
            d
        })
        .collect();
    rows.sort();
    rows
}

/// Split `graphs` into isomorphism classes using `brute_isomorphic`.
pub fn brute_classes(graphs: impl IntoIterator<Item = MixedGraph>) -> Vec<MixedGraph> {
    let mut buckets: HashMap<Vec<Vec<u32>>, Vec<MixedGraph>> = HashMap::new();
    for g in graphs {
        let reps = buckets.entry(invariant_key(&g)).or_default();
        if !reps.iter().any(|h| brute_isomorphic(&g, h)) {
            reps.push(g);
        }
    }
    buckets.into_values().flatten().collect()
}

/// Every labelled `r`-regular simple graph on `n` vertices, as edge lists.
pub fn labelled_regular_edge_sets(r: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    fn go(
        pairs: &[(usize, usize)],
        i: usize,
        r: usize,
        deg: &mut Vec<usize>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if i == pairs.len() {
            if deg.iter().all(|&d| d == r) {
                out.push(cur.clone());
            }
            return;
        }
        let (u, v) = pairs[i];
        // Vertex u sees no more pairs after (u, n-1).
        if deg[u] < r {
            deg[u] += 1;
            deg[v] += 1;
            if deg[v] <= r {
                cur.push((u, v));
                go(pairs, i + 1, r, deg, cur, out);
                cur.pop();
            }
            deg[u] -= 1;
            deg[v] -= 1;
        }
        if v + 1 < deg.len() || deg[u] == r {
            go(pairs, i + 1, r, deg, cur, out);
        }
    }
    go(&pairs, 0, r, &mut vec![0; n], &mut Vec::new(), &mut out);
    out
}

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every labelled strict totally `(r, z)`-regular mixed graph on `n` vertices
/// for `z <= 1`: an `r`-regular edge set plus a permutation with no fixed
/// point, no 2-cycle and no arc along an edge.
pub fn labelled_mixed_regular(r: usize, z: usize, n: usize) -> Vec<MixedGraph> {
    assert!(z <= 1);
    let edge_sets = labelled_regular_edge_sets(r, n);
    let perms = if z == 1 { permutations(n) } else { Vec::new() };
    let mut out = Vec::new();
    for edges in &edge_sets {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        if z == 0 {
            out.push(MixedGraph::new(n, edges.iter().copied(), []).unwrap());
            continue;
        }
        for p in &perms {
            if (0..n).all(|v| p[v] != v && p[p[v]] != v && !adj[v][p[v]]) {
                let arcs = (0..n).map(|v| (v, p[v]));
                out.push(MixedGraph::new(n, edges.iter().copied(), arcs).unwrap());
            }
        }
    }
    out
}

/// Characteristic polynomial, ascending coefficients, by evaluating
/// det(tI - A) with Bareiss elimination at t = 0..=n and interpolating.
pub fn bareiss_char_poly(g: &MixedGraph) -> Vec<BigInt> {
    let n = g.order();
    let a = dense(g);
    let xs: Vec<i64> = (0..=n as i64).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|&t| {
            let m: Vec<Vec<BigInt>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let diag = if i == j { t } else { 0 };
                            BigInt::from(diag - a[i][j] as i64)
                        })
                        .collect()
                })
                .collect();
            bareiss_det(m)
        })
        .collect();
    lagrange(&xs, &ys)
}

pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn lagrange(xs: &[i64], ys: &[BigInt]) -> Vec<BigInt> {
    let n = xs.len();
    let mut acc = vec![BigRational::zero(); n];
    for i in 0..n {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..n {
            if i == j {
                continue;
            }
            let xj = BigRational::from_integer(xs[j].into());
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &xj;
            }
            basis = next;
            denom *= BigRational::from_integer((xs[i] - xs[j]).into());
        }
        let scale = BigRational::from_integer(ys[i].clone()) / denom;
        for (d, c) in basis.iter().enumerate() {
            acc[d] += c * &scale;
        }
    }
    acc.into_iter()
        .map(|c| {
            assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

/// Schoolbook product of ascending coefficient vectors.
pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Strict mixed graphs on up to `max_n` vertices: each unordered pair is
/// empty, an edge, or an arc in one direction.
pub fn arb_mixed_graph(max_n: usize) -> impl Strategy<Value = MixedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(
            prop_oneof![4 => Just(0u8), 1 => Just(1u8), 1 => Just(2u8), 1 => Just(3u8)],
            pairs,
        )
        .prop_map(move |choice| from_choices(n, &choice))
    })
}

pub fn from_choices(n: usize, choice: &[u8]) -> MixedGraph {
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    let mut idx = 0;
    for u in 0..n {
        for v in u + 1..n {
            match choice[idx] {
                1 => edges.push((u, v)),
                2 => arcs.push((u, v)),
                3 => arcs.push((v, u)),
                _ => {}
            }
            idx += 1;
        }
    }
    MixedGraph::new(n, edges, arcs).unwrap()
}

/// A graph together with a random permutation of its vertices.
pub fn arb_graph_and_perm(max_n: usize) -> impl Strategy<Value = (MixedGraph, Vec<usize>)> {
    arb_mixed_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}
