//! Finitely generated cones of polynomials.

use std::collections::{BTreeMap, BTreeSet};

use log::trace;
use num_traits::{One, Signed, Zero};

use super::simplex;
use crate::poly::{Monomial, Polynomial, Rational};

/// `cone(P)`: all nonnegative rational combinations of the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyCone {
    gens: Vec<Polynomial>,
}

impl PolyCone {
    pub fn new(gens: impl IntoIterator<Item = Polynomial>) -> Self {
        PolyCone { gens: gens.into_iter().filter(|p| !p.is_zero()).collect() }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn into_generators(self) -> Vec<Polynomial> {
        self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        cone_member(p, &self.gens).is_some()
    }

    /// Multipliers `λ >= 0` with `p = Σ λ_i p_i`, if any.
    pub fn certificate(&self, p: &Polynomial) -> Option<Vec<Rational>> {
        cone_member(p, &self.gens)
    }

    pub fn additive_unit(&self) -> Option<Polynomial> {
        cone_additive_unit(&self.gens)
    }

    pub fn project(&self, keep: impl Fn(&Monomial) -> bool) -> PolyCone {
        PolyCone { gens: fm_project(&self.gens, keep) }
    }

    /// Every generator of `other` lies in `self`.
    pub fn includes(&self, other: &PolyCone) -> bool {
        other.gens.iter().all(|p| self.contains(p))
    }
}

/// Exact LP test for `p ∈ cone(gens)`, returning the multipliers.
pub fn cone_member(p: &Polynomial, gens: &[Polynomial]) -> Option<Vec<Rational>> {
    if p.is_zero() {
        return Some(vec![Rational::zero(); gens.len()]);
    }
    let mut rows: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for q in gens.iter().chain(std::iter::once(p)) {
        for m in q.monomials() {
            let n = rows.len();
            rows.entry(m).or_insert(n);
        }
    }
    // A monomial of p that no generator mentions rules membership out early.
    if p.monomials().any(|m| gens.iter().all(|g| g.coeff(m).is_zero())) {
        return None;
    }
    let mut a = vec![vec![Rational::zero(); gens.len()]; rows.len()];
    let mut b = vec![Rational::zero(); rows.len()];
    for (j, g) in gens.iter().enumerate() {
        for (m, c) in g.terms() {
            a[rows[m]][j] = c.clone();
        }
    }
    for (m, c) in p.terms() {
        b[rows[m]] = c.clone();
    }
    simplex::feasible(&a, &b, gens.len())
}

/// Some nonzero `t` with `t` and `-t` in `cone(gens)`. A zero combination
/// `Σ ν_i g_i = 0` with `ν >= 0`, `Σ ν_i = 1` exists exactly when the cone is
/// not salient, and every generator in its support has its negation in the
/// cone. The first such generator in input order is returned.
pub fn cone_additive_unit(gens: &[Polynomial]) -> Option<Polynomial> {
    let nz: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let nu = zero_combination(&nz)?;
    let i = nu.iter().position(|v| v.is_positive())?;
    trace!("additive unit: generator {i}");
    Some(nz[i].clone())
}

fn zero_combination(gens: &[&Polynomial]) -> Option<Vec<Rational>> {
    if gens.is_empty() {
        return None;
    }
    let mons: BTreeSet<&Monomial> = gens.iter().flat_map(|g| g.monomials()).collect();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for m in mons {
        a.push(gens.iter().map(|g| g.coeff(m)).collect());
        b.push(Rational::zero());
    }
    a.push(vec![Rational::one(); gens.len()]);
    b.push(Rational::one());
    simplex::feasible(&a, &b, gens.len())
}

/// Single-LP salience test: is there `ν >= 0`, `Σ ν_i = 1`, `Σ ν_i g_i = 0`?
pub fn has_zero_combination(gens: &[Polynomial]) -> bool {
    let nz: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    zero_combination(&nz).is_some()
}

/// Drops generators that lie in the cone of the others, plus duplicates up to
/// positive scaling. The represented cone is unchanged.
pub fn prune(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut seen = BTreeSet::new();
    let mut out: Vec<Polynomial> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let key = g.primitive();
        if seen.insert(key.clone()) {
            out.push(key);
        }
    }
    let mut i = 0;
    while i < out.len() {
        let rest: Vec<Polynomial> =
            out.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, p)| p.clone()).collect();
        if cone_member(&out[i], &rest).is_some() {
            out.remove(i);
        } else {
            i += 1;
        }
    }
    out
}

/// Fourier–Motzkin projection of `cone(gens)` onto the span of the
/// monomials accepted by `keep`. The monomial `1` is always kept.
pub fn fm_project(gens: &[Polynomial], keep: impl Fn(&Monomial) -> bool) -> Vec<Polynomial> {
    let kept = |m: &Monomial| m.is_one() || keep(m);
    let mut cur = prune(gens.to_vec());
    loop {
        let elim: BTreeSet<Monomial> =
            cur.iter().flat_map(|p| p.monomials()).filter(|m| !kept(m)).cloned().collect();
        // Pick the monomial producing the fewest combinations.
        let Some(m) = elim.into_iter().min_by_key(|m| {
            let pos = cur.iter().filter(|p| p.coeff(m).is_positive()).count();
            let neg = cur.iter().filter(|p| p.coeff(m).is_negative()).count();
            pos * neg
        }) else {
            return cur;
        };
        let mut zero = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for p in cur {
            let c = p.coeff(&m);
            if c.is_zero() {
                zero.push(p);
            } else {
                let s = p.scale(&(Rational::one() / c.abs()));
                if c.is_positive() {
                    pos.push(s);
                } else {
                    neg.push(s);
                }
            }
        }
        let mut next = zero;
        for p in &pos {
            for q in &neg {
                next.push(p.add(q));
            }
        }
        trace!("fm: {} pos x {} neg -> {}", pos.len(), neg.len(), next.len());
        cur = prune(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, VarContext};

    #[test]
    fn membership() {
        let mut c = VarContext::new();
        let g = c.polys(&["x", "y"]);
        let lam = cone_member(&c.parse("x + y").unwrap(), &g).unwrap();
        assert_eq!(lam, vec![rat(1), rat(1)]);
        assert!(cone_member(&c.parse("-x").unwrap(), &g).is_none());
        let g = c.polys(&["1", "-y + 2", "x^2 - y", "x^2 - 1"]);
        assert!(cone_member(&c.parse("x^2 - y").unwrap(), &g).is_some());
    }

    #[test]
    fn additive_units() {
        let mut c = VarContext::new();
        let q = c.polys(&["1", "x^2 - x*y", "x*y - x^2", "x^2*y - z", "w - x*y^2", "z - w", "w^3"]);
        assert_eq!(cone_additive_unit(&q), Some(c.parse("x^2 - x*y").unwrap()));
        assert!(has_zero_combination(&q));
        let s = c.polys(&["1", "z^3"]);
        assert_eq!(cone_additive_unit(&s), None);
        assert!(!has_zero_combination(&s));
        let l = c.polys(&["x", "-x"]);
        assert_eq!(cone_additive_unit(&l), Some(c.parse("x").unwrap()));
    }

    #[test]
    fn projection() {
        let mut c = VarContext::new();
        let p = c.polys(&["t", "-t - y + 2", "-t + 1", "t + x^2 - 2"]);
        let t = c.lookup("t").unwrap();
        let out = fm_project(&p, |m| m.exponent(t) == 0);
        let want = c.polys(&["1", "-y + 2", "x^2 - y", "x^2 - 1"]);
        for w in &want {
            assert!(cone_member(w, &out).is_some(), "missing {}", w.render(&c, &Default::default()));
        }
        for o in &out {
            assert!(cone_member(o, &want).is_some());
        }
        let p = c.polys(&["x + y", "-x + y"]);
        let x = c.lookup("x").unwrap();
        assert_eq!(fm_project(&p, |m| m.exponent(x) == 0), c.polys(&["y"]));
    }
}
