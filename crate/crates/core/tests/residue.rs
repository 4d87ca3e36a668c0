mod common;

use std::collections::BTreeSet;

use common::{chi_by_squares, field, is_prime, odd_prime_powers};
use paley::residue::{
    char_pair_sum, chi, jacobsthal_identity_sum, jacobsthal_phi, perron_count, power_sum, CharValue,
    QuadraticCharacter, ResidueSet,
};
use paley::FiniteField;
use proptest::prelude::*;

#[test]
fn character_sums_to_zero() {
    for q in odd_prime_powers(3, 2000) {
        let f = field(q);
        let c = QuadraticCharacter::new(&f).unwrap();
        assert_eq!(f.nonzero_elements().map(|x| c.value(x)).sum::<i64>(), 0, "q={q}");
    }
}

#[test]
fn pair_sums_exhaustively() {
    for q in [5u64, 9, 13, 17, 25, 27, 49] {
        let f = field(q);
        for u in f.elements() {
            for v in f.elements() {
                let want = if u == v { q as i64 - 1 } else { -1 };
                assert_eq!(char_pair_sum(&f, u, v).unwrap(), want, "q={q}");
            }
        }
    }
}

#[test]
fn exponent_and_table_routes_agree() {
    for q in odd_prime_powers(3, 361) {
        let f = field(q);
        let table = QuadraticCharacter::new(&f).unwrap();
        let squares = chi_by_squares(&f);
        for x in f.elements() {
            let by_euler = chi(&f, x).unwrap();
            assert_eq!(by_euler, table.chi(x), "q={q}");
            assert_eq!(by_euler.value(), squares[x.index()], "q={q}");
        }
    }
}

#[test]
fn phi_is_even_and_its_square_depends_on_the_class() {
    for p in (3..=101u64).filter(|&p| is_prime(p)) {
        let f = field(p);
        let c = QuadraticCharacter::new(&f).unwrap();
        let (mut on_residues, mut on_non_residues) = (BTreeSet::new(), BTreeSet::new());
        for e in f.elements() {
            let phi = jacobsthal_phi(&f, e).unwrap();
            assert_eq!(phi % 2, 0, "p={p}");
            match c.chi(e) {
                CharValue::Residue => on_residues.insert(phi * phi),
                CharValue::NonResidue => on_non_residues.insert(phi * phi),
                CharValue::Zero => true,
            };
        }
        assert_eq!(on_residues.len(), 1, "p={p}");
        assert_eq!(on_non_residues.len(), 1, "p={p}");
    }
}

#[test]
fn half_phis_are_two_squares() {
    for p in (5..=1000u64).filter(|&p| p % 4 == 1 && is_prime(p)) {
        let f = field(p);
        let c = QuadraticCharacter::new(&f).unwrap();
        let r = f.nonzero_elements().find(|&x| c.value(x) == 1).unwrap();
        let n = f.nonzero_elements().find(|&x| c.value(x) == -1).unwrap();
        let (a, b) = (jacobsthal_phi(&f, r).unwrap() / 2, jacobsthal_phi(&f, n).unwrap() / 2);
        assert_eq!((a * a + b * b) as u64, p);
    }
}

#[test]
fn sum_of_chi_of_shifted_squares() {
    for q in [5u64, 7, 9, 11, 13, 25, 27] {
        let f = field(q);
        for c in f.nonzero_elements() {
            assert_eq!(jacobsthal_identity_sum(&f, c).unwrap(), -1, "q={q}");
        }
        assert_eq!(jacobsthal_identity_sum(&f, f.zero()).unwrap(), q as i64 - 1, "q={q}");
    }
}

#[test]
fn residue_set_sizes_and_symmetry() {
    for q in odd_prime_powers(3, 125) {
        let f = field(q);
        let s = ResidueSet::new(&f, false).unwrap();
        assert_eq!(s.len() as u64, (q - 1) / 2);
        assert_eq!(s.is_symmetric(), q % 4 == 1, "q={q}");
        assert_eq!(ResidueSet::new(&f, true).unwrap().len() as u64, q.div_ceil(2));
    }
}

#[test]
fn perron_counts_are_constant_on_classes() {
    for q in [5u64, 7, 9, 11, 13, 17, 19, 23, 25, 27] {
        let f = field(q);
        let c = QuadraticCharacter::new(&f).unwrap();
        for with_zero in [false, true] {
            let mut by_class = [BTreeSet::new(), BTreeSet::new()];
            for a in f.nonzero_elements() {
                by_class[(c.value(a) < 0) as usize].insert(perron_count(&f, a, with_zero).unwrap());
            }
            assert!(by_class.iter().all(|s| s.len() == 1), "q={q}, with_zero={with_zero}");
        }
        assert!(perron_count(&f, f.zero(), false).is_err());
    }
}

#[test]
fn power_sums_vanish_below_p_minus_one() {
    for p in [3u64, 5, 7, 11, 13] {
        for k in 1..3 * p {
            let want = if k % (p - 1) == 0 { p - 1 } else { 0 };
            assert_eq!(power_sum(p, k).unwrap(), want, "p={p} k={k}");
        }
    }
    assert!(power_sum(9, 2).is_err());
}

#[test]
fn even_characteristic_is_rejected() {
    let f = field(8);
    assert!(QuadraticCharacter::new(&f).is_err());
    assert!(jacobsthal_phi(&field(9), field(9).one()).is_err());
}

fn odd_field() -> impl Strategy<Value = FiniteField> {
    prop::sample::select(vec![3u64, 5, 7, 9, 11, 13, 25, 27, 49, 81, 121, 125]).prop_map(field)
}

proptest! {
    #[test]
    fn character_is_multiplicative(f in odd_field(), a in any::<u32>(), b in any::<u32>()) {
        let c = QuadraticCharacter::new(&f).unwrap();
        let x = f.element(a % f.order()).unwrap();
        let y = f.element(b % f.order()).unwrap();
        prop_assert_eq!(c.value(f.mul(x, y)), c.value(x) * c.value(y));
    }
}
