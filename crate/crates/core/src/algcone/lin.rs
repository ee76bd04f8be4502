use std::collections::BTreeSet;

use crate::groebner::groebner_basis;
use crate::linalg::fm_project;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Var};

/// The part of an algebraic cone over `ℚ[D, K]` that is linear in `D`:
/// `⟨ℚ[K]⟩V + cone(R)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Recurrences {
    /// Ideal generators lying in `ℚ[K]`.
    pub v: Vec<Polynomial>,
    /// Cone generators in `⟨ℚ⟩D + ℚ[K]`.
    pub r: Vec<Polynomial>,
}

/// Restricts `⟨Z⟩ + cone(P)` to polynomials of the form `linear(D) + poly(K)`.
pub fn lin(z: &[Polynomial], p: &[Polynomial], d: &[Var], k: &[Var]) -> Recurrences {
    let ds: BTreeSet<Var> = d.iter().copied().collect();
    let ks: BTreeSet<Var> = k.iter().copied().collect();
    let ord = MonomialOrder::eliminate(d.iter().copied());
    let g = groebner_basis(z.iter().cloned(), &ord);
    if g.is_unit() {
        let mut r = Vec::new();
        for &x in d {
            r.push(Polynomial::var(x));
            r.push(Polynomial::var(x).neg());
        }
        return Recurrences { v: vec![Polynomial::one()], r };
    }
    let target = |m: &Monomial| {
        m.as_var().is_some_and(|v| ds.contains(&v)) || m.only_vars(|v| ks.contains(&v))
    };
    let reduced: Vec<Polynomial> = p.iter().map(|q| g.reduce(q)).filter(|q| !q.is_zero()).collect();
    let mut r = fm_project(&reduced, target);
    let mut v = Vec::new();
    for q in g.generators() {
        let lm = q.leading_monomial(&ord).expect("nonzero generator");
        if lm.only_vars(|x| ks.contains(&x)) && q.only_vars(|x| ks.contains(&x)) {
            v.push(q.clone());
        } else if lm.as_var().is_some_and(|x| ds.contains(&x)) && q.monomials().all(target) {
            r.push(q.clone());
            r.push(q.neg());
        }
    }
    Recurrences { v, r }
}
