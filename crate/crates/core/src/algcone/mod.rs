//! Algebraic cones `⟨Z⟩ + cone(P)`: an ideal plus a finitely generated cone
//! of polynomials.

mod cut;
mod hom;
mod lin;
mod project;

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use log::debug;

use crate::groebner::{groebner_basis, GroebnerBasis};
use crate::linalg::{cone_additive_unit, cone_member};
use crate::poly::{MonomialOrder, Polynomial, Rational, Var, VarContext};

pub use cut::{cut, rcp};
pub use hom::RingHom;
pub use lin::{lin, Recurrences};
pub use project::{intersect, intersect_subspace, inverse_hom, project};

/// A reduced pair `(Z, P)`: `Z` is a reduced Gröbner basis and every member
/// of `P` is in normal form with respect to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicCone {
    ideal: GroebnerBasis,
    pos: Vec<Polynomial>,
}

/// Witness for `p ∈ ⟨Z⟩ + cone(P)`:
/// `p = Σ cofactors[i] * Z[i] + Σ multipliers[j] * P[j]`.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub cofactors: Vec<Polynomial>,
    pub multipliers: Vec<Rational>,
}

impl AlgebraicCone {
    /// `reduce(Z, P)`: Gröbner basis of `Z` and the nonzero normal forms of `P`.
    pub fn reduce_pair(
        z: impl IntoIterator<Item = Polynomial>,
        p: impl IntoIterator<Item = Polynomial>,
        order: &MonomialOrder,
    ) -> Self {
        let ideal = groebner_basis(z, order);
        Self::from_basis(ideal, p)
    }

    fn from_basis(ideal: GroebnerBasis, p: impl IntoIterator<Item = Polynomial>) -> Self {
        let mut seen = HashSet::new();
        let mut pos = Vec::new();
        if !ideal.is_unit() {
            for q in p {
                let r = ideal.reduce(&q);
                if !r.is_zero() && seen.insert(r.primitive()) {
                    pos.push(r);
                }
            }
        }
        AlgebraicCone { ideal, pos }
    }

    /// `(∅, {1})`: the least regular cone.
    pub fn nonneg_constants() -> Self {
        Self::reduce_pair([], [Polynomial::one()], &MonomialOrder::Grevlex)
    }

    /// `({1}, ∅)`: the whole ring, the canonical inconsistent cone.
    pub fn everything() -> Self {
        AlgebraicCone { ideal: GroebnerBasis::unit(MonomialOrder::Grevlex), pos: Vec::new() }
    }

    pub fn ideal(&self) -> &GroebnerBasis {
        &self.ideal
    }

    pub fn zeros(&self) -> &[Polynomial] {
        self.ideal.generators()
    }

    pub fn positives(&self) -> &[Polynomial] {
        &self.pos
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ideal.order()
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        self.ideal.reduce(p)
    }

    /// Same cone, reduced with respect to another order.
    pub fn with_order(&self, order: &MonomialOrder) -> Self {
        if self.order() == order {
            return self.clone();
        }
        Self::reduce_pair(self.zeros().to_vec(), self.pos.clone(), order)
    }

    /// `p ∈ ⟨Z⟩ + cone(P)`, decided as `red_Z(p) ∈ cone(P)`.
    pub fn member(&self, p: &Polynomial) -> bool {
        let r = self.ideal.reduce(p);
        cone_member(&r, &self.pos).is_some()
    }

    pub fn certificate(&self, p: &Polynomial) -> Option<Certificate> {
        let d = self.ideal.reduce_with_cofactors(p);
        let multipliers = cone_member(&d.remainder, &self.pos)?;
        Some(Certificate { cofactors: d.cofactors, multipliers })
    }

    /// `p` lies in the ideal part.
    pub fn is_zero_on(&self, p: &Polynomial) -> bool {
        self.ideal.contains(p)
    }

    /// `-1` is not in the cone.
    pub fn is_consistent(&self) -> bool {
        !self.member(&Polynomial::int(-1))
    }

    /// Ideal is the unit ideal, so the cone is the whole ring.
    pub fn is_everything(&self) -> bool {
        self.ideal.is_unit()
    }

    /// Mutual inclusion of generators.
    pub fn cone_equal(&self, other: &AlgebraicCone) -> bool {
        self.includes(other) && other.includes(self)
    }

    /// Every generator of `other` lies in `self`, with `other`'s ideal
    /// generators inside `self`'s ideal.
    pub fn includes(&self, other: &AlgebraicCone) -> bool {
        if self.is_everything() {
            return true;
        }
        if other.is_everything() {
            return false;
        }
        other.zeros().iter().all(|z| self.ideal.contains(z))
            && other.pos.iter().all(|p| self.member(p))
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.zeros().iter().chain(&self.pos).flat_map(|p| p.vars()).collect()
    }

    /// Sum of cones: union of generators, re-reduced.
    pub fn sum(&self, other: &AlgebraicCone) -> AlgebraicCone {
        let order = self.order().clone();
        let z: Vec<Polynomial> = self.zeros().iter().chain(other.zeros()).cloned().collect();
        let p: Vec<Polynomial> = self.pos.iter().chain(&other.pos).cloned().collect();
        Self::reduce_pair(z, p, &order)
    }

    /// Least regular cone containing `⟨Z⟩ + cone(P ∪ {1})`, by repeatedly
    /// moving an additive unit of `cone(P)` into the ideal.
    pub fn saturate_pair(
        z: impl IntoIterator<Item = Polynomial>,
        p: impl IntoIterator<Item = Polynomial>,
        order: &MonomialOrder,
    ) -> AlgebraicCone {
        let mut p: Vec<Polynomial> = p.into_iter().collect();
        p.push(Polynomial::one());
        let mut c = Self::reduce_pair(z, p, order);
        let mut rounds = 0;
        while let Some(u) = cone_additive_unit(&c.pos) {
            debug!("saturate: unit {}", u.render_raw());
            let mut z = c.zeros().to_vec();
            z.push(u);
            c = Self::reduce_pair(z, std::mem::take(&mut c.pos), order);
            rounds += 1;
        }
        debug!("saturate: {rounds} rounds, |Z| = {}, |P| = {}", c.zeros().len(), c.pos.len());
        c
    }

    /// Deterministic text dump: `Z` sorted by leading monomial, `P` sorted by
    /// rendering.
    pub fn dump(&self, ctx: &VarContext) -> String {
        let ord = MonomialOrder::Grevlex;
        let mut z: Vec<&Polynomial> = self.zeros().iter().collect();
        z.sort_by(|a, b| {
            ord.compare(a.leading_monomial(&ord).unwrap(), b.leading_monomial(&ord).unwrap())
        });
        let mut p: Vec<String> = self.pos.iter().map(|q| q.render(ctx, &ord)).collect();
        p.sort();
        let mut s = String::new();
        let zs: Vec<String> = z.iter().map(|q| q.render(ctx, &ord)).collect();
        let _ = writeln!(s, "Z = {{{}}}", zs.join(", "));
        let _ = write!(s, "P = {{{}}}", p.join(", "));
        s
    }
}

/// Algorithm-style saturation: the least regular cone containing `Q`.
pub fn saturate(q: impl IntoIterator<Item = Polynomial>) -> AlgebraicCone {
    AlgebraicCone::saturate_pair([], q, &MonomialOrder::Grevlex)
}

/// A variable id above every id in use, for temporaries that never leave
/// the calling operation.
pub(crate) fn fresh_above<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> Var {
    let m = polys.into_iter().filter_map(|p| p.max_var()).max();
    Var(m.map_or(0, |v| v.0 + 1))
}
