//! Moore-like bounds for totally regular mixed graphs.
//!
//! The exact layer recurrence over big integers is the source of truth.
//! The closed form (irrational roots) and the geometric matrix sum are
//! independent routes kept for cross-checking.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("degree pair (0, 0) has no Moore tree: r + z must be at least 1")]
    ZeroDegree,
    #[error("closed form is undefined for (r, z) = ({r}, {z}) (directed or undirected cycle)")]
    DegenerateParameters { r: u32, z: u32 },
}

/// Regularity parameters of a totally regular mixed graph: `r` edges and
/// `z` out-arcs (and `z` in-arcs) at every vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DegreePair {
    r: u32,
    z: u32,
}

impl DegreePair {
    pub fn new(r: u32, z: u32) -> Result<Self, BoundsError> {
        if r + z == 0 {
            return Err(BoundsError::ZeroDegree);
        }
        Ok(DegreePair { r, z })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn z(&self) -> u32 {
        self.z
    }

    /// Total degree `r + z`.
    pub fn d(&self) -> u32 {
        self.r + self.z
    }

    /// The directed and undirected cycles, where the closed form and the
    /// matrix sum both divide by zero.
    pub fn is_cycle(&self) -> bool {
        self.r + 2 * self.z == 2
    }
}

impl TryFrom<(u32, u32)> for DegreePair {
    type Error = BoundsError;

    fn try_from((r, z): (u32, u32)) -> Result<Self, Self::Error> {
        DegreePair::new(r, z)
    }
}

impl fmt::Display for DegreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.z)
    }
}

/// One layer of the Moore tree: vertices reached from their parent by an
/// edge (`edge_children`) or by an arc (`arc_children`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Layer {
    pub edge_children: BigUint,
    pub arc_children: BigUint,
    pub total: BigUint,
}

/// Layer sizes of the Moore tree of depth `k`, root layer included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerCounts {
    pub degrees: DegreePair,
    pub layers: Vec<Layer>,
}

impl LayerCounts {
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn totals(&self) -> impl Iterator<Item = &BigUint> + '_ {
        self.layers.iter().map(|l| &l.total)
    }

    /// Order of the Moore tree.
    pub fn sum(&self) -> BigUint {
        self.totals().sum()
    }
}

/// Layer sizes `N_i = R_i + Z_i` for `i = 0..=k`.
///
/// The root is counted as reached by an arc (`R_0 = 0`, `Z_0 = 1`) so that it
/// gets all `r + z` children. Every later vertex entered by an edge has `r - 1`
/// edge children, and `Z_i = z * N_{i-1}`.
pub fn layer_counts(dp: DegreePair, k: u32) -> LayerCounts {
    let r = BigUint::from(dp.r);
    let z = BigUint::from(dp.z);
    let mut layers = Vec::with_capacity(k as usize + 1);
    let mut edge_prev = BigUint::zero();
    let mut arc_prev = BigUint::one();
    layers.push(Layer {
        edge_children: edge_prev.clone(),
        arc_children: arc_prev.clone(),
        total: BigUint::one(),
    });
    for _ in 0..k {
        // r - 1 may be negative when r = 0, but then R_{i-1} is 0 as well.
        let from_edges = if dp.r == 0 {
            BigUint::zero()
        } else {
            &edge_prev * (&r - 1u32)
        };
        let edge_next = from_edges + &arc_prev * &r;
        let arc_next = (&edge_prev + &arc_prev) * &z;
        layers.push(Layer {
            total: &edge_next + &arc_next,
            edge_children: edge_next.clone(),
            arc_children: arc_next.clone(),
        });
        edge_prev = edge_next;
        arc_prev = arc_next;
    }
    LayerCounts {
        degrees: dp,
        layers,
    }
}

/// `N_i` for `i = 0..=k` from the scalar second-order recurrence
/// `N_i = (r + z - 1) N_{i-1} + z N_{i-2}` with `N_0 = 1`, `N_1 = r + z`.
pub fn layer_totals_by_recurrence(dp: DegreePair, k: u32) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    if k == 0 {
        return out;
    }
    out.push(BigUint::from(dp.d()));
    let a = BigUint::from(dp.d() - 1);
    let b = BigUint::from(dp.z);
    for i in 2..=k as usize {
        let next = &a * &out[i - 1] + &b * &out[i - 2];
        out.push(next);
    }
    out
}

/// `M(r, z, k)`: the number of vertices of the Moore tree of depth `k`.
pub fn moore_bound(dp: DegreePair, k: u32) -> BigUint {
    layer_totals_by_recurrence(dp, k).into_iter().sum()
}

/// The geometric matrix-sum route: with `T = [[r-1, r], [z, z]]`,
/// `sum_{i<=k} T^i (0 1)^T = (T^{k+1} - I)(T - I)^{-1} (0 1)^T` and
/// `(T - I)^{-1} (0 1)^T = (r, 2 - r)^T / (r + 2z - 2)`, so
/// `M = (1 1)(T^{k+1} - I)(r, 2 - r)^T / (r + 2z - 2)`.
///
/// Returns `None` for the two cycle cases where the divisor vanishes.
pub fn moore_bound_matrix_sum(dp: DegreePair, k: u32) -> Option<BigUint> {
    if dp.is_cycle() {
        return None;
    }
    let r = BigInt::from(dp.r);
    let z = BigInt::from(dp.z);
    let t = [[&r - 1, r.clone()], [z.clone(), z.clone()]];
    let mut p = mat_pow(&t, k + 1);
    p[0][0] -= 1;
    p[1][1] -= 1;
    let v = [r.clone(), BigInt::from(2) - &r];
    let numer = (&p[0][0] + &p[1][0]) * &v[0] + (&p[0][1] + &p[1][1]) * &v[1];
    let denom = BigInt::from(dp.r as i64 + 2 * dp.z as i64 - 2);
    let (q, rem) = numer.div_rem(&denom);
    debug_assert!(rem.is_zero(), "matrix sum not divisible by r + 2z - 2");
    if !rem.is_zero() || q.is_negative() {
        return None;
    }
    q.to_biguint()
}

type Mat2 = [[BigInt; 2]; 2];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn mat_pow(m: &Mat2, mut e: u32) -> Mat2 {
    let mut acc: Mat2 = [
        [BigInt::one(), BigInt::zero()],
        [BigInt::zero(), BigInt::one()],
    ];
    let mut base = m.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        base = mat_mul(&base, &base);
        e >>= 1;
    }
    acc
}

/// Parameters of the closed form: the roots `u1 <= u2` of
/// `x^2 - (z + r - 1) x - z` and their weights.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedFormParams {
    pub discriminant: f64,
    pub u1: f64,
    pub u2: f64,
    pub a: f64,
    pub b: f64,
}

impl ClosedFormParams {
    pub fn new(dp: DegreePair) -> Self {
        let r = dp.r as f64;
        let z = dp.z as f64;
        let v = (z + r).powi(2) + 2.0 * (z - r) + 1.0;
        let s = v.sqrt();
        ClosedFormParams {
            discriminant: v,
            u1: (z + r - 1.0 - s) / 2.0,
            u2: (z + r - 1.0 + s) / 2.0,
            a: (s - (z + r + 1.0)) / (2.0 * s),
            b: (s + (z + r + 1.0)) / (2.0 * s),
        }
    }
}

/// Floating-point evaluation of the closed form
/// `A (u1^{k+1} - 1)/(u1 - 1) + B (u2^{k+1} - 1)/(u2 - 1)`.
pub fn moore_bound_closed_form(dp: DegreePair, k: u32) -> Result<f64, BoundsError> {
    if dp.is_cycle() {
        return Err(BoundsError::DegenerateParameters { r: dp.r, z: dp.z });
    }
    let p = ClosedFormParams::new(dp);
    if p.discriminant == 0.0 {
        // Double root (only (1, 0)): A and B diverge, the sum tends to
        // g(u) + (r + z + 1) g'(u) / 2 with g(u) = 1 + u + ... + u^k.
        let u = p.u1;
        let g: f64 = (0..=k).map(|i| u.powi(i as i32)).sum();
        let dg: f64 = (1..=k).map(|i| i as f64 * u.powi(i as i32 - 1)).sum();
        return Ok(g + (dp.d() as f64 + 1.0) * dg / 2.0);
    }
    let geo = |u: f64| (u.powi(k as i32 + 1) - 1.0) / (u - 1.0);
    Ok(p.a * geo(p.u1) + p.b * geo(p.u2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundRule {
    /// `N <= M - r` for diameter at least 3.
    Thm1,
    /// One more when `r`, `z` are odd and `k = 2 (mod 3)`: the order is even
    /// but `M - r` is odd.
    Prop2,
}

impl fmt::Display for BoundRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundRule::Thm1 => "thm1",
            BoundRule::Prop2 => "prop2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub degrees: DegreePair,
    pub k: u32,
    pub moore: BigUint,
    pub improved: BigUint,
    pub parity_applied: bool,
    pub rule_trace: Vec<BoundRule>,
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rules: Vec<String> = self.rule_trace.iter().map(|r| r.to_string()).collect();
        write!(
            f,
            "M={} improved={} rules=[{}]",
            self.moore,
            self.improved,
            rules.join(",")
        )
    }
}

/// Whether the parity refinement applies at these parameters.
pub fn parity_rule_applies(dp: DegreePair, k: u32) -> bool {
    k >= 3 && dp.r % 2 == 1 && dp.z % 2 == 1 && k % 3 == 2
}

/// Strongest available upper bound on the order of an `(r, z)`-regular
/// mixed graph of diameter `k`.
///
/// The `M - r` rule relies on every vertex having out-arcs. It is still
/// applied when `z = 0`, where it is not a valid bound: the 7-cycle has
/// diameter 3 and order `M(2, 0, 3) = 7`.
pub fn improved_bound(dp: DegreePair, k: u32) -> BoundReport {
    let moore = moore_bound(dp, k);
    let mut improved = moore.clone();
    let mut rule_trace = Vec::new();
    let mut parity_applied = false;
    if k >= 3 {
        // M >= 1 + r always, so neither subtraction underflows.
        improved -= dp.r;
        rule_trace.push(BoundRule::Thm1);
        if parity_rule_applies(dp, k) {
            improved -= 1u32;
            parity_applied = true;
            rule_trace.push(BoundRule::Prop2);
        }
    }
    BoundReport {
        degrees: dp,
        k,
        moore,
        improved,
        parity_applied,
        rule_trace,
    }
}

/// Fibonacci numbers with `F_1 = F_2 = 1` (and `F_0 = 0`).
pub fn fibonacci(n: u32) -> BigUint {
    let mut a = BigUint::zero();
    let mut b = BigUint::one();
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `(M(1, 1, k), F_{k+4} - 2)`, computed independently.
pub fn fibonacci_identity_check(k: u32) -> (BigUint, BigUint) {
    let dp = DegreePair { r: 1, z: 1 };
    (moore_bound(dp, k), fibonacci(k + 4) - 2u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MooreTableEntry {
    pub d: u32,
    pub z: u32,
    pub r: u32,
    pub k: u32,
    pub moore: BigUint,
}

/// `M(d - z, z, k)` for `d = 1..=d_max`, `z = 0..=d`, `k = 1..=k_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MooreTable {
    pub d_max: u32,
    pub k_max: u32,
    pub entries: Vec<MooreTableEntry>,
}

pub fn moore_table(d_max: u32, k_max: u32) -> MooreTable {
    let mut entries = Vec::new();
    for d in 1..=d_max {
        for z in 0..=d {
            let dp = DegreePair { r: d - z, z };
            let totals = layer_totals_by_recurrence(dp, k_max);
            let mut running = BigUint::zero();
            for (k, n) in totals.iter().enumerate() {
                running += n;
                if k >= 1 {
                    entries.push(MooreTableEntry {
                        d,
                        z,
                        r: d - z,
                        k: k as u32,
                        moore: running.clone(),
                    });
                }
            }
        }
    }
    MooreTable {
        d_max,
        k_max,
        entries,
    }
}

impl MooreTable {
    pub fn get(&self, d: u32, z: u32, k: u32) -> Option<&BigUint> {
        self.entries
            .iter()
            .find(|e| e.d == d && e.z == z && e.k == k)
            .map(|e| &e.moore)
    }

    /// One `d,z,r,k,M` line per entry after a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("d,z,r,k,M\n");
        for e in &self.entries {
            out.push_str(&format!("{},{},{},{},{}\n", e.d, e.z, e.r, e.k, e.moore));
        }
        out
    }

    /// Rows are `(d, z)` pairs grouped by `d`, columns are diameters.
    pub fn to_text(&self) -> String {
        let width = self
            .entries
            .iter()
            .map(|e| e.moore.to_string().len())
            .max()
            .unwrap_or(1)
            .max(3);
        let mut out = format!("{:>3} {:>3} {:>3} |", "d", "z", "r");
        for k in 1..=self.k_max {
            out.push_str(&format!(" {:>width$}", format!("k={k}")));
        }
        out.push('\n');
        for d in 1..=self.d_max {
            for z in 0..=d {
                out.push_str(&format!("{:>3} {:>3} {:>3} |", d, z, d - z));
                for k in 1..=self.k_max {
                    let m = self.get(d, z, k).map(|m| m.to_string()).unwrap_or_default();
                    out.push_str(&format!(" {:>width$}", m));
                }
                out.push('\n');
            }
        }
        out
    }
}

/// Relative deviation of the closed form from the exact value.
pub fn closed_form_relative_error(dp: DegreePair, k: u32) -> Result<f64, BoundsError> {
    let approx = moore_bound_closed_form(dp, k)?;
    let exact = moore_bound(dp, k).to_f64().unwrap_or(f64::INFINITY);
    Ok((approx - exact).abs() / exact)
}
