use std::collections::HashMap;

use lirr::{Monomial, MonomialOrder, Polynomial, Rational, Var, VarContext};
use proptest::prelude::*;

fn var_ids() -> Vec<Var> {
    (0..3).map(Var).collect()
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..3, 3).prop_map(|e| Monomial::from_exponents(var_ids().into_iter().zip(e)))
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(), -4i64..=4, 1i64..=3), 0..5).prop_map(|ts| {
        Polynomial::from_terms(ts.into_iter().map(|(m, n, d)| (m, Rational::new(n.into(), d.into()))))
    })
}

fn point() -> impl Strategy<Value = HashMap<Var, Rational>> {
    prop::collection::vec(-5i64..=5, 3)
        .prop_map(|v| var_ids().into_iter().zip(v).map(|(x, n)| (x, Rational::from_integer(n.into()))).collect())
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert!(p.sub(&p).is_zero());
        prop_assert_eq!(p.mul(&Polynomial::one()), p.clone());
        prop_assert!(p.mul(&Polynomial::zero()).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), pt in point()) {
        prop_assert_eq!(p.mul(&q).eval(&pt), p.eval(&pt) * q.eval(&pt));
        prop_assert_eq!(p.add(&q).eval(&pt), p.eval(&pt) + q.eval(&pt));
    }

    #[test]
    fn grevlex_is_a_monomial_order(a in monomial(), b in monomial(), c in monomial()) {
        let o = MonomialOrder::Grevlex;
        prop_assert_eq!(o.compare(&a, &b), o.compare(&b, &a).reverse());
        prop_assert_eq!(o.compare(&a, &b), o.compare(&a.mul(&c), &b.mul(&c)));
        prop_assert_ne!(o.compare(&Monomial::one(), &a), std::cmp::Ordering::Greater);
        if a.degree() < b.degree() {
            prop_assert_eq!(o.compare(&a, &b), std::cmp::Ordering::Less);
        }
    }

    #[test]
    fn elimination_orders_are_monomial_orders(a in monomial(), b in monomial(), c in monomial()) {
        let o = MonomialOrder::eliminate([Var(0)]);
        prop_assert_eq!(o.compare(&a, &b), o.compare(&a.mul(&c), &b.mul(&c)));
        if a.exponent(Var(0)) > b.exponent(Var(0)) {
            prop_assert_eq!(o.compare(&a, &b), std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn leading_monomial_is_multiplicative(p in poly(), q in poly()) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        for o in [MonomialOrder::Grevlex, MonomialOrder::eliminate([Var(1)])] {
            let lp = p.leading_monomial(&o).unwrap().clone();
            let lq = q.leading_monomial(&o).unwrap().clone();
            let pq = p.mul(&q);
            prop_assert_eq!(pq.leading_monomial(&o).unwrap(), &lp.mul(&lq));
        }
    }

    #[test]
    fn primitive_is_a_positive_multiple(p in poly()) {
        prop_assume!(!p.is_zero());
        let r = p.primitive();
        prop_assert!(r.terms().all(|(_, c)| c.is_integer()));
        let (m, c) = p.terms().next().unwrap();
        let k = r.coeff(m) / c;
        prop_assert!(k > Rational::from_integer(0.into()));
        prop_assert_eq!(p.scale(&k), r);
    }

    #[test]
    fn render_then_parse(p in poly()) {
        let mut c = VarContext::new();
        for n in ["a", "b", "c"] {
            c.var(n);
        }
        let s = p.render(&c, &MonomialOrder::Grevlex);
        prop_assert_eq!(c.parse(&s).unwrap(), p);
    }

    #[test]
    fn substitution_commutes_with_evaluation(p in poly(), s in poly(), pt in point()) {
        let m = HashMap::from([(Var(0), s.clone())]);
        let mut moved = pt.clone();
        moved.insert(Var(0), s.eval(&pt));
        prop_assert_eq!(p.substitute(&m).eval(&pt), p.eval(&moved));
    }
}
