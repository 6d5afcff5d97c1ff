//! Exact characteristic polynomials of mixed-graph adjacency matrices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::mixedgraph::MixedGraph;

/// Monic integer polynomial `x^n + c_{n-1} x^{n-1} + ... + c_0`, stored
/// lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coefficients: Vec<BigInt>,
}

impl CharPoly {
    /// Coefficients `c_0, ..., c_n`.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Coefficients leading first, space separated: `1 0 -5 ...`.
    pub fn to_coefficient_line(&self) -> String {
        self.coefficients
            .iter()
            .rev()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Splitting off integer roots and repeated factors, when that yields a
    /// nontrivial factorization.
    pub fn factored(&self) -> Option<Factorization> {
        let f = factorize(&self.coefficients);
        let trivial = f.factors.len() == 1 && f.factors[0].1 == 1;
        (!trivial).then_some(f)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.coefficients))
    }
}

/// Characteristic polynomial `det(xI - A)` by the Faddeev–LeVerrier
/// recurrence in exact integer arithmetic: the divisions by `k` are exact for
/// integer matrices.
pub fn char_poly(g: &MixedGraph) -> CharPoly {
    let n = g.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    if n == 0 {
        return CharPoly {
            coefficients: coeffs,
        };
    }
    // Out-neighbour lists of A seen as a digraph.
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            g.edge_neighbors(i)
                .iter()
                .chain(g.out_neighbors(i))
                .copied()
                .collect()
        })
        .collect();
    let times_a = |m: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|row| {
                let mut out = vec![BigInt::zero(); n];
                for &l in row {
                    for (o, x) in out.iter_mut().zip(&m[l]) {
                        *o += x;
                    }
                }
                out
            })
            .collect()
    };

    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut r = vec![BigInt::zero(); n];
            r[i] = BigInt::one();
            r
        })
        .collect();
    for k in 1..=n {
        let am = times_a(&m);
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let (q, rem) = (-trace).div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero());
        coeffs[n - k] = q.clone();
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &q;
        }
    }
    CharPoly {
        coefficients: coeffs,
    }
}

pub fn cospectral(g: &MixedGraph, h: &MixedGraph) -> bool {
    g.order() == h.order() && char_poly(g) == char_poly(h)
}

/// Product of primitive integer polynomials with multiplicities. Factors are
/// square-free but not necessarily irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(Vec<BigInt>, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> Vec<BigInt> {
        let mut acc = vec![BigInt::one()];
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = poly_mul(&acc, f);
            }
        }
        acc
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, m)| {
                let is_x = p.len() == 2 && p[0].is_zero() && p[1].is_one();
                let body = if is_x {
                    "x".to_string()
                } else {
                    format!("({})", format_poly(p))
                };
                if *m == 1 {
                    body
                } else {
                    format!("{body}^{m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn format_poly(c: &[BigInt]) -> String {
    let mut out = String::new();
    for (d, a) in c.iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let neg = a.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = a.abs();
        if !mag.is_one() || d == 0 {
            out.push_str(&mag.to_string());
        }
        match d {
            0 => {}
            1 => out.push('x'),
            _ => out.push_str(&format!("x^{d}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Divide by `x - t`, returning the quotient if the remainder is zero.
fn divide_root(c: &[BigInt], t: &BigInt) -> Option<Vec<BigInt>> {
    let mut q = vec![BigInt::zero(); c.len() - 1];
    let mut carry = BigInt::zero();
    for d in (0..c.len()).rev() {
        let v = &c[d] + &carry * t;
        if d == 0 {
            return v.is_zero().then_some(q);
        }
        q[d - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

fn small_divisors(c: &BigInt) -> Option<Vec<i64>> {
    let m = c.abs().to_u64()?;
    if m > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(d as i64);
            if d * d != m {
                out.push((m / d) as i64);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

type QPoly = Vec<BigRational>;

fn trim(mut p: QPoly) -> QPoly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn q_deriv(p: &QPoly) -> QPoly {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn q_divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let mut r = trim(a.clone());
    let b = trim(b.clone());
    let db = b.len() - 1;
    if r.len() <= db {
        return (vec![BigRational::zero()], r);
    }
    let dr = r.len() - 1;
    let mut q = vec![BigRational::zero(); dr - db + 1];
    for d in (db..=dr).rev() {
        let coef = &r[d] / &b[db];
        for (i, bi) in b.iter().enumerate() {
            r[d - db + i] -= &coef * bi;
        }
        q[d - db] = coef;
    }
    r.truncate(db.max(1));
    if db == 0 {
        r[0] = BigRational::zero();
    }
    (trim(q), trim(r))
}

fn is_zero_poly(p: &QPoly) -> bool {
    p.iter().all(Zero::is_zero)
}

fn q_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let mut a = trim(a.clone());
    let mut b = trim(b.clone());
    while !is_zero_poly(&b) {
        let (_, r) = q_divrem(&a, &b);
        a = b;
        b = r;
    }
    let lead = a.last().unwrap().clone();
    a.into_iter().map(|x| x / &lead).collect()
}

fn q_sub(a: &QPoly, b: &QPoly) -> QPoly {
    let len = a.len().max(b.len());
    trim(
        (0..len)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
                let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
                x - y
            })
            .collect(),
    )
}

fn primitive(p: &QPoly) -> Vec<BigInt> {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().unwrap().is_negative() {
        -1
    } else {
        1
    };
    ints.into_iter().map(|c| c / &content * sign).collect()
}

/// Yun's square-free decomposition over the rationals.
fn square_free(p: &[BigInt]) -> Vec<(Vec<BigInt>, u32)> {
    let a: QPoly = p
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    if a.len() <= 1 {
        return Vec::new();
    }
    let b = q_deriv(&a);
    let c = q_gcd(&a, &b);
    let mut w = q_divrem(&a, &c).0;
    let mut y = q_divrem(&b, &c).0;
    let mut z = q_sub(&y, &q_deriv(&w));
    let mut out = Vec::new();
    let mut i = 1;
    while w.len() > 1 {
        let g = q_gcd(&w, &z);
        if g.len() > 1 {
            out.push((primitive(&g), i));
        }
        w = q_divrem(&w, &g).0;
        y = q_divrem(&z, &g).0;
        z = q_sub(&y, &q_deriv(&w));
        i += 1;
    }
    out
}

fn factorize(c: &[BigInt]) -> Factorization {
    let mut factors = Vec::new();
    let zeros = c.iter().take_while(|x| x.is_zero()).count();
    let mut rest: Vec<BigInt> = c[zeros..].to_vec();
    if zeros > 0 {
        factors.push((vec![BigInt::zero(), BigInt::one()], zeros as u32));
    }
    if rest.len() > 1 {
        if let Some(divs) = small_divisors(&rest[0]) {
            let candidates = divs.iter().flat_map(|&d| [d, -d]);
            for t in candidates {
                let t = BigInt::from(t);
                let mut mult = 0;
                while rest.len() > 1 {
                    match divide_root(&rest, &t) {
                        Some(q) => {
                            rest = q;
                            mult += 1;
                        }
                        None => break,
                    }
                }
                if mult > 0 {
                    factors.push((vec![-t, BigInt::one()], mult));
                }
            }
        }
    }
    if rest.len() > 1 {
        factors.extend(square_free(&rest));
    }
    Factorization { factors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, line_digraph_of_cycle_digons};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn five_cycle() {
        let p = char_poly(&cycle(5, false));
        assert_eq!(p.coefficients(), ints(&[-2, 5, 0, -5, 0, 1]).as_slice());
        assert_eq!(p.to_coefficient_line(), "1 0 -5 0 5 -2");
        assert_eq!(p.to_string(), "x^5 - 5x^3 + 5x - 2");
        assert_eq!(p.factored().unwrap().to_string(), "(x - 2) (x^2 + x - 1)^2");
    }

    #[test]
    fn nilpotent_arc() {
        let g = MixedGraph::new(2, [], [(0, 1)]).unwrap();
        assert_eq!(char_poly(&g).coefficients(), ints(&[0, 0, 1]).as_slice());
        assert_eq!(char_poly(&g).factored().unwrap().to_string(), "x^2");
    }

    #[test]
    fn directed_cycle_is_x_n_minus_one() {
        let p = char_poly(&cycle(4, true));
        assert_eq!(p.coefficients(), ints(&[-1, 0, 0, 0, 1]).as_slice());
        let f = p.factored().unwrap();
        assert_eq!(f.expand(), p.coefficients());
    }

    #[test]
    fn line_digraph_adds_zeros() {
        let p = char_poly(&line_digraph_of_cycle_digons(5));
        assert_eq!(p.to_coefficient_line(), "1 0 -5 0 5 -2 0 0 0 0 0");
        assert_eq!(
            p.factored().unwrap().to_string(),
            "x^5 (x - 2) (x^2 + x - 1)^2"
        );
    }

    #[test]
    fn irreducible_is_not_factored() {
        // x^2 - 2 from a digon with an extra path would be contrived; use a
        // single edge: x^2 - 1 = (x - 1)(x + 1).
        let g = MixedGraph::new(2, [(0, 1)], []).unwrap();
        assert_eq!(
            char_poly(&g).factored().unwrap().to_string(),
            "(x - 1) (x + 1)"
        );
        // Path on three vertices: x^3 - 2x = x (x^2 - 2).
        let p3 = MixedGraph::new(3, [(0, 1), (1, 2)], []).unwrap();
        assert_eq!(
            char_poly(&p3).factored().unwrap().to_string(),
            "x (x^2 - 2)"
        );
        let f = factorize(&ints(&[-2, 0, 1]));
        assert_eq!(f.factors.len(), 1);
    }

    #[test]
    fn second_coefficient_counts_edges() {
        let g = MixedGraph::new(4, [(0, 1), (2, 3)], [(1, 2), (3, 0)]).unwrap();
        let p = char_poly(&g);
        assert!(p.coefficients()[3].is_zero());
        assert_eq!(p.coefficients()[2], BigInt::from(-2));
    }

    #[test]
    fn empty_graph() {
        let g = MixedGraph::new(0, [], []).unwrap();
        assert_eq!(char_poly(&g).degree(), 0);
    }
}
