mod common;

use hadamard_simplex::hadamard::{construct, paley, sylvester, verify, EquivalenceOp};
use hadamard_simplex::simplex::bareiss_integer;
use hadamard_simplex::{HadamardMatrix, SignMatrix};
use num_bigint::BigInt;
use proptest::prelude::*;

fn matrices() -> Vec<HadamardMatrix> {
    vec![
        sylvester(0).unwrap(),
        sylvester(1).unwrap(),
        sylvester(2).unwrap(),
        sylvester(3).unwrap(),
        paley(11).unwrap(),
        sylvester(4).unwrap(),
    ]
}

fn op_strategy(order: usize) -> BoxedStrategy<EquivalenceOp> {
    let idx = 1..=order;
    let negations = prop_oneof![
        idx.clone().prop_map(EquivalenceOp::NegateRow),
        idx.clone().prop_map(EquivalenceOp::NegateCol),
    ];
    if order < 2 {
        return negations.boxed();
    }
    let pair = (idx.clone(), idx).prop_filter("distinct", |(a, b)| a != b);
    prop_oneof![
        negations,
        pair.clone().prop_map(|(a, b)| EquivalenceOp::SwapRows(a, b)),
        pair.prop_map(|(a, b)| EquivalenceOp::SwapCols(a, b)),
    ]
    .boxed()
}

fn matrix_and_ops() -> impl Strategy<Value = (HadamardMatrix, Vec<EquivalenceOp>)> {
    (0..matrices().len()).prop_flat_map(|i| {
        let h = matrices().swap_remove(i);
        let ops = prop::collection::vec(op_strategy(h.order()), 0..24);
        (Just(h), ops)
    })
}

proptest! {
    #[test]
    fn equivalence_ops_preserve_orthogonality((h, ops) in matrix_and_ops()) {
        let mut g = h;
        for op in ops {
            g = g.apply_op(op).unwrap();
            prop_assert!(verify(&g.as_sign_matrix().to_rows()).unwrap());
        }
        let n = g.normalize_last_column();
        prop_assert!(n.has_unit_last_column());
        prop_assert!(n.as_sign_matrix().is_hadamard());
    }

    #[test]
    fn text_round_trip((h, ops) in matrix_and_ops()) {
        let mut g = h;
        for op in ops {
            g = g.apply_op(op).unwrap();
        }
        let text = g.serialize();
        let back = HadamardMatrix::parse(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.serialize(), text);
    }

    #[test]
    fn single_sign_flip_breaks_orthogonality(i in 0usize..8, j in 0usize..8) {
        let mut rows = sylvester(3).unwrap().as_sign_matrix().to_rows();
        rows[i][j] = -rows[i][j];
        prop_assert!(!verify(&rows).unwrap());
        prop_assert!(HadamardMatrix::from_rows(&rows).is_err());
    }
}

#[test]
fn determinant_reaches_hadamard_bound() {
    for h in matrices() {
        let m = h.order();
        let mut a: Vec<Vec<BigInt>> = h
            .rows()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let det = bareiss_integer(&mut a);
        // |det H|² = m^m avoids half-integer exponents.
        assert_eq!(&det * &det, BigInt::from(m).pow(m as u32), "order {m}");
    }
}

#[test]
fn constructions_by_order() {
    for m in [1, 2, 4, 8, 12, 16, 20, 24, 32, 44, 48, 60, 64] {
        let h = construct(m).unwrap();
        assert_eq!(h.order(), m);
        assert!(h.as_sign_matrix().is_hadamard());
    }
    for m in [3, 6, 10, 28, 36] {
        assert!(construct(m).is_err(), "order {m}");
    }
    for q in [5, 13, 9, 15] {
        assert!(paley(q).is_err(), "q = {q}");
    }
}

#[test]
fn swap_of_identical_indices_is_rejected() {
    let h = sylvester(2).unwrap();
    assert!(h.apply_op(EquivalenceOp::SwapRows(2, 2)).is_err());
    assert!(h.apply_op(EquivalenceOp::NegateCol(5)).is_err());
    assert!(h.apply_op(EquivalenceOp::NegateRow(0)).is_err());
}

#[test]
fn parse_rejects_bad_input() {
    for bad in ["", "+ +\n+", "+x\n++", "+ -\n- 1\n"] {
        assert!(SignMatrix::parse(bad).is_err(), "{bad:?}");
    }
    assert!(SignMatrix::parse("+ +\n+ +\n").unwrap().order() == 2);
    assert!(HadamardMatrix::parse("+ +\n+ +\n").is_err());
    let ok = HadamardMatrix::parse("\n+ +\n\n+ -\n").unwrap();
    assert_eq!(ok.order(), 2);
    assert!(HadamardMatrix::parse("# order 2\n++\n+-\n").is_err());
}

#[test]
fn fixtures_are_consistent() {
    for m in [2, 4, 8, 12, 16, 20, 24] {
        let h = common::hadamard_of_order(m);
        assert!(h.has_unit_last_column());
        assert!(h.as_sign_matrix().is_hadamard());
    }
}
