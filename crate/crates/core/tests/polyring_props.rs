use gkm_core::polyring::{monomials_of_degree, Exponent, LinearForm, PolyError, Polynomial};
use gkm_core::{BigInt, Poly, RootSystem};
use proptest::prelude::*;

fn exponent(max_degree: u32) -> impl Strategy<Value = Exponent> {
    (0..=max_degree, 0..=max_degree, 0..=max_degree)
        .prop_filter("degree bound", move |(a, b, c)| a + b + c <= max_degree)
        .prop_map(|(a, b, c)| [a, b, c])
}

fn poly(max_degree: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec((exponent(max_degree), -20i64..=20), 0..8)
        .prop_map(|terms| Polynomial::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn homogeneous(degree: u32) -> impl Strategy<Value = Poly> {
    let monomials = monomials_of_degree(degree);
    prop::collection::vec((0..monomials.len(), -20i64..=20), 1..6)
        .prop_map(move |terms| Polynomial::from_terms(terms.into_iter().map(|(i, c)| (monomials[i], BigInt::from(c)))))
}

fn label() -> impl Strategy<Value = LinearForm> {
    let roots: Vec<LinearForm> =
        RootSystem::G2.positive_roots().iter().map(|r| LinearForm::from_weight(&r.weight()).unwrap()).collect();
    (0..roots.len()).prop_map(move |i| roots[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in poly(4), b in poly(4), c in poly(4)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
        prop_assert!((&a * &Poly::zero()).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn degrees_add_under_multiplication(p in homogeneous(3), q in homogeneous(2)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let pq = &p * &q;
        prop_assert!(pq.is_homogeneous());
        prop_assert_eq!(pq.degree(), Some(p.degree().unwrap() + q.degree().unwrap()));
    }

    #[test]
    fn exact_division_inverts_multiplication(p in poly(4), l in label()) {
        let product = &p * &l.to_polynomial();
        let q = product.div_exact_linear(&l).unwrap();
        prop_assert_eq!(&q, &p);
        prop_assert_eq!(&(&q * &l.to_polynomial()), &product);
        prop_assert!(product.substitute_eliminating(&l).unwrap().is_zero());
    }

    #[test]
    fn divisibility_oracles_agree(p in poly(4), l in label()) {
        let divisible = p.div_exact_linear(&l);
        let reduced = p.substitute_eliminating(&l).unwrap();
        prop_assert_eq!(divisible.is_ok(), reduced.is_zero());
        match divisible {
            Ok(q) => prop_assert_eq!(&q * &l.to_polynomial(), p),
            Err(e) => prop_assert!(matches!(e, PolyError::NotDivisible(_))),
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(3), b in poly(3), x in -9i64..=9, y in -9i64..=9, z in -9i64..=9) {
        let point = [x, y, z].map(BigInt::from);
        prop_assert_eq!((&a * &b).evaluate(&point), a.evaluate(&point) * b.evaluate(&point));
        prop_assert_eq!((&a + &b).evaluate(&point), a.evaluate(&point) + b.evaluate(&point));
    }

    #[test]
    fn json_round_trip(p in poly(4)) {
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&text).unwrap(), p);
    }

    #[test]
    fn machine_and_big_integers_agree(a in poly(3), b in poly(3)) {
        let small = |p: &Poly| p.map_coefficients(|c| i128::try_from(c).unwrap());
        let product = &small(&a) * &small(&b);
        prop_assert_eq!(product.map_coefficients(|c| BigInt::from(*c)), &a * &b);
    }

    #[test]
    fn linear_forms_normalize_idempotently(a in -6i64..=6, b in -6i64..=6, c in -6i64..=6) {
        prop_assume!((a, b, c) != (0, 0, 0));
        let l = LinearForm::new([a, b, c]).unwrap();
        prop_assert_eq!(LinearForm::new(l.coeffs()).unwrap(), l);
        prop_assert_eq!(LinearForm::new([-a, -b, -c]).unwrap(), l);
        prop_assert!(LinearForm::from_canonical(l.coeffs()).is_ok());
    }
}

/// Every monomial of degree at most 4, and every such monomial times each
/// root direction, against every positive-root direction.
#[test]
fn divisibility_oracles_agree_exhaustively() {
    let labels: Vec<LinearForm> =
        RootSystem::G2.positive_roots().iter().map(|r| LinearForm::from_weight(&r.weight()).unwrap()).collect();
    for l in &labels {
        for k in 0..=4 {
            for e in monomials_of_degree(k) {
                let m = Poly::monomial(e, BigInt::from(1));
                assert!(m.div_exact_linear(l).is_err());
                assert!(!m.substitute_eliminating(l).unwrap().is_zero());
                for other in &labels {
                    let p = &m * &other.to_polynomial();
                    let divisible = p.div_exact_linear(l);
                    assert_eq!(divisible.is_ok(), p.substitute_eliminating(l).unwrap().is_zero());
                    assert_eq!(divisible.is_ok(), other == l);
                }
            }
        }
    }
}
