use hadamard_simplex::bounds::{
    barba_bound, certify_h, corollary2_ratios, corollary5_bound, h_from_hadamard_equality,
    h_lower_bound_from_witness, hadamard_bound, maxdet01_bruteforce, meets_barba_bound,
    meets_hadamard_bound, nu_from_h, theorem1_bound, within_barba_bound, within_hadamard_bound,
    BoundsRow, Provenance,
};
use hadamard_simplex::hadamard::construct;
use hadamard_simplex::rational::{int, ratio};
use num_bigint::BigUint;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

#[test]
fn brute_force_values_respect_both_bounds() {
    let h = [1u64, 1, 1, 2, 3, 5, 9];
    for n in 1..=6 {
        assert_eq!(maxdet01_bruteforce(n).unwrap(), h[n], "n = {n}");
        assert!(within_hadamard_bound(n, &big(h[n])));
        if n % 2 == 0 {
            assert!(within_barba_bound(n, &big(h[n])).unwrap());
        }
    }
    assert!(maxdet01_bruteforce(7).is_err());
}

#[test]
fn equality_cases() {
    // Hadamard bound is attained exactly when n + 1 is an Hadamard order.
    for (n, v) in [(1, 1u64), (3, 2), (7, 32), (11, 1458), (15, 131072)] {
        let c = h_from_hadamard_equality(&construct(n + 1).unwrap()).unwrap();
        assert_eq!(c.value, big(v), "n = {n}");
        assert_eq!(c.provenance, Provenance::HadamardEquality);
        assert!(meets_hadamard_bound(n, &c.value));
    }
    assert!(!meets_hadamard_bound(5, &big(9)));
    assert!(meets_barba_bound(4, &big(3)).unwrap());
    assert!(!meets_barba_bound(6, &big(9)).unwrap());
    assert!(barba_bound(3).is_err());
    assert!((hadamard_bound(3) - 2.0).abs() < 1e-12);
    assert!((barba_bound(4).unwrap() - 3.0).abs() < 1e-12);
}

#[test]
fn certified_values() {
    let c = certify_h(4, 5).unwrap().unwrap();
    assert_eq!((c.value, c.provenance), (big(3), Provenance::Bruteforce));
    let c = certify_h(11, 5).unwrap().unwrap();
    assert_eq!((c.value, c.provenance), (big(1458), Provenance::HadamardEquality));
    assert!(certify_h(8, 5).unwrap().is_none());
}

#[test]
fn witness_gives_lower_bound() {
    let rows = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
    assert_eq!(h_lower_bound_from_witness(&rows).unwrap().value, big(2));
    assert!(h_lower_bound_from_witness(&[vec![1, 2], vec![0, 1]]).is_err());
    assert!(h_lower_bound_from_witness(&[vec![1, 0]]).is_err());
}

#[test]
fn derived_quantities() {
    assert_eq!(nu_from_h(3, &big(2)), ratio(1, 3));
    assert_eq!(theorem1_bound(&big(2), &big(3)).unwrap(), int(4));
    assert!(theorem1_bound(&big(0), &big(3)).is_err());
    assert!((corollary5_bound(15) - 4.0).abs() < 1e-12);
    let h = [1u64, 1, 1, 2, 3, 5, 9];
    for n in 1..6 {
        assert!(corollary2_ratios(&big(h[n]), &big(h[n + 1]), n).is_ok(), "n = {n}");
    }
}

#[test]
fn rows_carry_provenance() {
    let row = BoundsRow::compute(3, 5).unwrap().to_json();
    assert_eq!(row["theorem1_bound"], "4/1");
    assert_eq!(row["h_n"]["provenance"], "bruteforce");
    assert_eq!(row["nu_n"], "1/3");
    let row = BoundsRow::compute(15, 5).unwrap().to_json();
    assert_eq!(row["h_n"]["value"], "131072");
    assert_eq!(row["h_n"]["provenance"], "hadamard-equality");
    assert!(row["h_n1"].is_null());
}
