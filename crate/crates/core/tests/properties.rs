//! Exhaustive structural invariants over small sizes, plus randomized
//! algebra checks where exhaustion is out of reach.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use invmaj::majrange::{
    algorithm_trace, class_bounds, missing_values, shape_bounds, shape_gap_ok, AlgorithmStep,
    GapAnnotation,
};
use invmaj::partition::{enumerate_partitions, enumerate_shapes_with_odd_columns, Partition};
use invmaj::qpoly::{q_int, stanley_maj_poly, QPolynomial};
use invmaj::tableau::{count_syt, enumerate_syt, maj_histogram};

fn choose2(n: usize) -> u64 {
    (n as u64) * (n as u64).saturating_sub(1) / 2
}

/// The exact maj support of one shape: the closed interval between the
/// bounds, minus the two interior values a 2x2-or-larger rectangle skips.
fn shape_support(shape: &Partition) -> BTreeSet<u64> {
    let bounds = shape_bounds(shape);
    (bounds.m..=bounds.big_m)
        .filter(|&v| !(shape.is_proper_rectangle() && (v == bounds.m + 1 || v == bounds.big_m - 1)))
        .collect()
}

#[test]
fn conjugation_is_an_involution_exhaustively() {
    for n in 0..=20 {
        for shape in enumerate_partitions(n) {
            assert_eq!(shape.conjugate().conjugate(), shape);
            assert_eq!(shape.conjugate().size(), n);
        }
    }
}

#[test]
fn b_stat_splits_the_cell_coordinate_sum() {
    // b(λ) sums the row index over cells, b(λ') the column index.
    for n in 0..=14 {
        for shape in enumerate_partitions(n) {
            let coord_sum: u64 = shape.cells().map(|c| (c.row + c.col) as u64).sum();
            assert_eq!(
                shape.b_stat() + shape.conjugate().b_stat(),
                coord_sum,
                "{shape}"
            );
        }
    }
}

#[test]
fn enumerated_counts_match_hook_formula() {
    for n in 0..=12 {
        for shape in enumerate_partitions(n) {
            let streamed = enumerate_syt(&shape).count();
            assert_eq!(
                num_bigint::BigUint::from(streamed),
                count_syt(&shape),
                "{shape}"
            );
        }
    }
}

#[test]
fn histogram_support_is_the_predicted_interval() {
    for n in 1..=12 {
        for shape in enumerate_partitions(n) {
            let support: BTreeSet<u64> = maj_histogram(&shape).keys().copied().collect();
            assert_eq!(support, shape_support(&shape), "{shape}");
        }
    }
}

#[test]
fn histogram_reverses_under_transposition() {
    for n in 1..=10 {
        for shape in enumerate_partitions(n) {
            let hist = maj_histogram(&shape);
            let transposed = maj_histogram(&shape.conjugate());
            let total = choose2(n);
            for (&maj, count) in &hist {
                assert_eq!(
                    transposed.get(&(total - maj)),
                    Some(count),
                    "{shape} at {maj}"
                );
            }
        }
    }
}

#[test]
fn stanley_poly_equals_enumeration_histogram() {
    for n in 0..=12 {
        for shape in enumerate_partitions(n) {
            let poly = stanley_maj_poly(&shape);
            let hist = maj_histogram(&shape);
            let max_exp = poly.degree().unwrap_or(0);
            for exp in 0..=max_exp {
                let coeff = poly.coeff(exp);
                let expected = hist
                    .get(&(exp as u64))
                    .map(|c| BigInt::from(c.clone()))
                    .unwrap_or_default();
                assert_eq!(coeff, expected, "{shape} at q^{exp}");
            }
            assert_eq!(
                poly.evaluate_at_one(),
                BigInt::from(count_syt(&shape)),
                "{shape}"
            );
        }
    }
}

#[test]
fn stanley_poly_degrees_match_shape_bounds() {
    for n in 1..=12 {
        for shape in enumerate_partitions(n) {
            let poly = stanley_maj_poly(&shape);
            let bounds = shape_bounds(&shape);
            assert_eq!(poly.min_degree(), Some(bounds.m as usize), "{shape}");
            assert_eq!(poly.degree(), Some(bounds.big_m as usize), "{shape}");
        }
    }
}

#[test]
fn hook_quotient_division_never_fails_up_to_fourteen() {
    // stanley_maj_poly panics internally if a division is inexact; walking
    // it over every shape of every size up to 14 exercises that path.
    for n in 0..=14 {
        for shape in enumerate_partitions(n) {
            let _ = stanley_maj_poly(&shape);
        }
    }
}

#[test]
fn gap_bound_holds_exhaustively() {
    for n in 6..=14 {
        for shape in enumerate_partitions(n) {
            if shape.rows() == 1 || shape.part(0) == 1 {
                assert!(shape_gap_ok(&shape).is_err(), "{shape}");
            } else {
                assert_eq!(shape_gap_ok(&shape), Ok(true), "{shape}");
            }
        }
    }
}

#[test]
fn class_bounds_match_scan_over_shapes() {
    for n in 1..=14 {
        for r in (n % 2..=n).step_by(2) {
            let class = class_bounds(n, r).unwrap();
            let mins: Vec<u64> = enumerate_shapes_with_odd_columns(n, r)
                .map(|s| shape_bounds(&s).m)
                .collect();
            let maxes: Vec<u64> = enumerate_shapes_with_odd_columns(n, r)
                .map(|s| shape_bounds(&s).big_m)
                .collect();
            assert_eq!(class.bounds.m, *mins.iter().min().unwrap(), "n={n} r={r}");
            assert_eq!(
                class.bounds.big_m,
                *maxes.iter().max().unwrap(),
                "n={n} r={r}"
            );
            assert_eq!(shape_bounds(&class.min_shape).m, class.bounds.m);
            assert_eq!(shape_bounds(&class.max_shape).big_m, class.bounds.big_m);
            assert_eq!(class.min_shape.odd_column_count(), r);
            assert_eq!(class.max_shape.odd_column_count(), r);
        }
    }
}

#[test]
fn traces_stay_inside_the_class_and_descend_in_dominance() {
    for n in 1..=14 {
        for r in (n % 2..=n).step_by(2) {
            let entries: Vec<_> = algorithm_trace(n, r).unwrap().collect();
            let class = class_bounds(n, r).unwrap();
            assert_eq!(entries.first().unwrap().shape, class.min_shape);
            assert_eq!(entries.last().unwrap().shape, class.max_shape);
            assert_eq!(entries.last().unwrap().bounds.big_m, class.bounds.big_m);
            for pair in entries.windows(2) {
                assert_eq!(pair[0].shape.odd_column_count(), r);
                // Strictly decreasing in dominance order.
                assert!(pair[1].shape.dominance_leq(&pair[0].shape).unwrap());
                assert_ne!(pair[1].shape, pair[0].shape);
            }
        }
    }
}

#[test]
fn trace_step_arithmetic() {
    for n in 1..=14 {
        for r in (n % 2..=n).step_by(2) {
            let entries: Vec<_> = algorithm_trace(n, r).unwrap().collect();
            for pair in entries.windows(2) {
                let (cur, next) = (&pair[0], &pair[1]);
                let b_cur = cur.shape.b_stat();
                let b_next = next.shape.b_stat();
                let bc_cur = cur.shape.conjugate().b_stat();
                let bc_next = next.shape.conjugate().b_stat();
                match cur.step_used {
                    AlgorithmStep::SingleSquare => {
                        assert_eq!(b_next, b_cur + 2, "{}", cur.shape)
                    }
                    AlgorithmStep::DominoShift => {
                        assert_eq!(b_next, b_cur + 4, "{}", cur.shape)
                    }
                    AlgorithmStep::DominoToFirstColumn => {
                        assert_eq!(bc_cur, bc_next + 2, "{}", cur.shape)
                    }
                    AlgorithmStep::DeviationSingleSquare => {
                        assert_eq!(bc_cur, bc_next + 1, "{}", cur.shape)
                    }
                    AlgorithmStep::EvenHookToOdd | AlgorithmStep::TerminalOddHook => {}
                }
                // The interval chain only breaks where annotated.
                if next.bounds.m > cur.bounds.big_m {
                    assert!(
                        cur.annotations.iter().any(|a| matches!(
                            a,
                            GapAnnotation::BenignBoundary | GapAnnotation::ExpectedGap { .. }
                        )),
                        "unannotated gap after {}",
                        cur.shape
                    );
                }
            }
        }
    }
}

#[test]
fn trace_supports_cover_exactly_the_predicted_range() {
    // The traversal alone certifies the range statement: the union of the
    // per-shape supports along the trace is the predicted value set.
    for n in 1..=14 {
        for r in (n % 2..=n).step_by(2) {
            let mut covered = BTreeSet::new();
            for entry in algorithm_trace(n, r).unwrap() {
                covered.extend(shape_support(&entry.shape));
            }
            let class = class_bounds(n, r).unwrap();
            let missing = missing_values(n, r).unwrap();
            let predicted: BTreeSet<u64> = (class.bounds.m..=class.bounds.big_m)
                .filter(|v| !missing.contains(v))
                .collect();
            assert_eq!(covered, predicted, "n={n} r={r}");
        }
    }
}

#[test]
fn closed_interval_chain_is_gapless_for_two_or_more_fixed_points() {
    // For r >= 2 and n >= 6 no special cases arise: consecutive closed
    // intervals overlap, so their union is the whole predicted interval.
    for n in 6..=14 {
        for r in (n % 2..=n).step_by(2).filter(|&r| r >= 2) {
            let entries: Vec<_> = algorithm_trace(n, r).unwrap().collect();
            for pair in entries.windows(2) {
                assert!(
                    pair[0].bounds.big_m >= pair[1].bounds.m,
                    "chain break at {} (n={n}, r={r})",
                    pair[0].shape
                );
                assert!(pair[0].annotations.is_empty());
            }
            let class = class_bounds(n, r).unwrap();
            assert_eq!(entries.first().unwrap().bounds.m, class.bounds.m);
            assert_eq!(entries.last().unwrap().bounds.big_m, class.bounds.big_m);
        }
    }
}

/// Weakly decreasing positive parts with sum at most 20.
fn arb_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..=8, 0..=6).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn arb_poly() -> impl Strategy<Value = QPolynomial> {
    proptest::collection::vec(-6i64..=6, 0..=8)
        .prop_map(|coeffs| QPolynomial::from_coeffs(coeffs.into_iter().map(BigInt::from).collect()))
}

proptest! {
    #[test]
    fn conjugation_round_trips(shape in arb_partition()) {
        prop_assert_eq!(shape.conjugate().conjugate(), shape);
    }

    #[test]
    fn partition_text_round_trips(shape in arb_partition()) {
        let text = shape.to_string();
        let back: Partition = text.parse().unwrap();
        prop_assert_eq!(back, shape);
    }

    #[test]
    fn partition_odd_columns_match_parity(shape in arb_partition()) {
        prop_assert_eq!(shape.odd_column_count() % 2, shape.size() % 2);
    }

    #[test]
    fn poly_ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        let product = &a * &b;
        prop_assert_eq!(product.exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn q_int_evaluates_to_n(n in 0usize..=30) {
        prop_assert_eq!(q_int(n).evaluate_at_one(), BigInt::from(n));
    }
}
