mod common;

use common::{arb_graph_and_perm, arb_mixed_graph, bareiss_char_poly, golden_graphs, poly_mul};
use mixed_moore::constructions::{cycle, line_digraph_of_cycle_digons};
use mixed_moore::spectral::{char_poly, cospectral};
use num_bigint::BigInt;
use proptest::prelude::*;

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// x^10 - 5x^8 + 5x^6 - 2x^5 from (x - 2)(x^2 + x - 1)^2 x^5.
fn expected_extremal() -> Vec<i64> {
    let q = [-1, 1, 1];
    let p = poly_mul(&poly_mul(&[-2, 1], &q), &q);
    let mut full = vec![0; 5];
    full.extend(p);
    full
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn faddeev_leverrier_matches_determinant_interpolation(g in arb_mixed_graph(9)) {
        prop_assert_eq!(char_poly(&g).coefficients().to_vec(), bareiss_char_poly(&g));
    }

    #[test]
    fn relabelling_is_cospectral((g, perm) in arb_graph_and_perm(9)) {
        prop_assert!(cospectral(&g, &g.relabel(&perm)));
    }

    #[test]
    fn second_coefficient_counts_edges(g in arb_mixed_graph(9)) {
        let p = char_poly(&g);
        let n = g.order();
        if n >= 2 {
            prop_assert_eq!(p.coefficients()[n - 2].clone(), BigInt::from(-(g.edges().len() as i64)));
        }
    }

    #[test]
    fn factorization_expands_back(g in arb_mixed_graph(8)) {
        let p = char_poly(&g);
        if let Some(f) = p.factored() {
            prop_assert_eq!(f.expand(), p.coefficients().to_vec());
        }
    }
}

#[test]
fn expected_polynomial_by_hand_expansion() {
    assert_eq!(expected_extremal(), vec![0, 0, 0, 0, 0, -2, 5, 0, -5, 0, 1]);
}

#[test]
fn golden_graphs_share_the_extremal_polynomial() {
    for g in golden_graphs() {
        assert_eq!(
            char_poly(&g).coefficients(),
            ints(&expected_extremal()).as_slice()
        );
        assert_eq!(bareiss_char_poly(&g), ints(&expected_extremal()));
    }
}

#[test]
fn line_digraph_pads_the_cycle_spectrum_with_zeros() {
    let mut padded = vec![BigInt::from(0); 5];
    padded.extend(bareiss_char_poly(&cycle(5, false)));
    assert_eq!(
        char_poly(&line_digraph_of_cycle_digons(5)).coefficients(),
        padded.as_slice()
    );
}
