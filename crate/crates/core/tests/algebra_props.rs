use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use whitney::{BiPolynomial, GroupValue, IntPolynomial};

fn poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-50i64..50, 0..7).prop_map(|c| IntPolynomial::from_i64s(&c))
}

fn bipoly() -> impl Strategy<Value = BiPolynomial> {
    prop::collection::vec((-9i64..9, 0u32..4, 0u32..4), 0..6).prop_map(|terms| {
        let mut p = BiPolynomial::zero();
        for (c, i, j) in terms {
            p.add_term(&BigInt::from(c), i, j);
        }
        p
    })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-100i64..100, 1i64..30).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

fn group_axioms<T: GroupValue>(a: &T, b: &T, c: &T) {
    assert_eq!(a.added(b).added(c), a.added(&b.added(c)));
    assert_eq!(a.added(b), b.added(a));
    assert_eq!(a.added(&T::neutral()), a.clone());
    assert!(a.added(&a.negated()).is_neutral());
}

proptest! {
    #[test]
    fn evaluation_is_additive(p in poly(), q in poly(), t in -20i64..20) {
        let t = BigInt::from(t);
        prop_assert_eq!((&p + &q).eval(&t), p.eval(&t) + q.eval(&t));
    }

    #[test]
    fn evaluation_is_multiplicative(p in poly(), q in poly(), t in -20i64..20) {
        let t = BigInt::from(t);
        prop_assert_eq!((&p * &q).eval(&t), p.eval(&t) * q.eval(&t));
    }

    #[test]
    fn leading_coefficient_is_nonzero(p in poly(), q in poly()) {
        let s = &p + &q;
        if let Some(d) = s.degree() {
            prop_assert!(s.coeff(d) != BigInt::from(0));
            prop_assert_eq!(s.coeffs().len(), d + 1);
        } else {
            prop_assert!(s.coeffs().is_empty() || s.is_zero());
        }
    }

    #[test]
    fn polynomial_group(a in poly(), b in poly(), c in poly()) {
        group_axioms(&a, &b, &c);
    }

    #[test]
    fn bipolynomial_group(a in bipoly(), b in bipoly(), c in bipoly()) {
        group_axioms(&a, &b, &c);
        let sum = a.added(&b);
        prop_assert!(sum.terms().all(|(_, _, c)| *c != BigInt::from(0)));
    }

    #[test]
    fn integer_groups(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000) {
        group_axioms(&a, &b, &c);
        group_axioms(&BigInt::from(a), &BigInt::from(b), &BigInt::from(c));
        // Small integers are exact in f64, so associativity holds there too.
        group_axioms(&(a as f64), &(b as f64), &(c as f64));
    }

    #[test]
    fn rational_group(a in rational(), b in rational(), c in rational()) {
        group_axioms(&a, &b, &c);
    }

    #[test]
    fn integer_action_matches_repeated_addition(p in poly(), k in -12i64..12) {
        let mut expected = IntPolynomial::neutral();
        for _ in 0..k.unsigned_abs() {
            expected.add_assign_ref(&p);
        }
        if k < 0 {
            expected = expected.negated();
        }
        prop_assert_eq!(p.times(&BigInt::from(k)), expected);
    }
}
