use std::collections::BTreeSet;

use log::debug;

use super::{fresh_above, AlgebraicCone, RingHom};
use crate::error::{Error, Result};
use crate::groebner::groebner_basis;
use crate::linalg::{fm_project, PolyCone};
use crate::poly::{MonomialOrder, Polynomial, Var};

/// `project_X(Z, P)`: the cone's intersection with `ℚ[X]`, via a Gröbner basis
/// under the order eliminating everything outside `X` and Fourier–Motzkin on
/// the positive part.
pub fn project(c: &AlgebraicCone, keep: &[Var]) -> AlgebraicCone {
    let keep: BTreeSet<Var> = keep.iter().copied().collect();
    project_pair(c.zeros().to_vec(), c.positives().to_vec(), &keep)
}

pub(crate) fn project_pair(z: Vec<Polynomial>, p: Vec<Polynomial>, keep: &BTreeSet<Var>) -> AlgebraicCone {
    let elim: BTreeSet<Var> =
        z.iter().chain(&p).flat_map(|q| q.vars()).filter(|v| !keep.contains(v)).collect();
    let base = MonomialOrder::Grevlex;
    if elim.is_empty() {
        return AlgebraicCone::reduce_pair(z, p, &base);
    }
    let ord = MonomialOrder::eliminate(elim.iter().copied());
    let g = groebner_basis(z, &ord);
    if g.is_unit() {
        return AlgebraicCone::everything();
    }
    let in_x = |q: &Polynomial| q.only_vars(|v| keep.contains(&v));
    let gx: Vec<Polynomial> = g.generators().iter().filter(|q| in_x(q)).cloned().collect();
    let reduced: Vec<Polynomial> = p.iter().map(|q| g.reduce(q)).filter(|q| !q.is_zero()).collect();
    let px = fm_project(&reduced, |m| m.only_vars(|v| keep.contains(&v)));
    debug!("project: eliminated {} vars, |Z| = {}, |P| = {}", elim.len(), gx.len(), px.len());
    AlgebraicCone::reduce_pair(gx, px, &base)
}

/// `C1 ∩ C2`, through a fresh tag variable `t`:
/// `project(tZ1 ∪ (1-t)Z2, tP1 ∪ (1-t)P2)`.
pub fn intersect(c1: &AlgebraicCone, c2: &AlgebraicCone) -> AlgebraicCone {
    if c1.is_everything() {
        return c2.clone();
    }
    if c2.is_everything() {
        return c1.clone();
    }
    let all = c1.zeros().iter().chain(c1.positives()).chain(c2.zeros()).chain(c2.positives());
    let t = fresh_above(all);
    let keep: BTreeSet<Var> = c1.vars().union(&c2.vars()).copied().collect();
    let tp = Polynomial::var(t);
    let one_minus_t = Polynomial::one().sub(&tp);
    let z: Vec<Polynomial> = c1
        .zeros()
        .iter()
        .map(|q| q.mul(&tp))
        .chain(c2.zeros().iter().map(|q| q.mul(&one_minus_t)))
        .collect();
    let p: Vec<Polynomial> = c1
        .positives()
        .iter()
        .map(|q| q.mul(&tp))
        .chain(c2.positives().iter().map(|q| q.mul(&one_minus_t)))
        .collect();
    let out = project_pair(z, p, &keep);
    debug_assert!(!out.vars().contains(&t));
    out
}

/// `f⁻¹(C)` for a homomorphism `f : ℚ[Y] → ℚ[X]`, as
/// `project_Y({y - f(y)} ∪ Z, P)`.
pub fn inverse_hom(c: &AlgebraicCone, f: &RingHom) -> Result<AlgebraicCone> {
    let ys: BTreeSet<Var> = f.sources().collect();
    if c.vars().iter().any(|v| ys.contains(v)) || f.pairs().any(|(_, q)| q.vars().iter().any(|v| ys.contains(v))) {
        return Err(Error::VariablesNotDisjoint);
    }
    if c.is_everything() {
        return Ok(AlgebraicCone::everything());
    }
    let mut z: Vec<Polynomial> = f.pairs().map(|(y, q)| Polynomial::var(y).sub(q)).collect();
    z.extend(c.zeros().iter().cloned());
    Ok(project_pair(z, c.positives().to_vec(), &ys))
}

/// Linear part of a cone: `C ∩ Lin(Y)`, computed as the positive component
/// of the intersection with the cone `Y ∪ -Y ∪ {1, -1}`.
pub fn intersect_subspace(c: &AlgebraicCone, ys: &[Var]) -> PolyCone {
    if c.is_everything() {
        let mut g = vec![Polynomial::one(), Polynomial::int(-1)];
        for &y in ys {
            g.push(Polynomial::var(y));
            g.push(Polynomial::var(y).neg());
        }
        return PolyCone::new(g);
    }
    let mut lin = vec![Polynomial::one(), Polynomial::int(-1)];
    for &y in ys {
        lin.push(Polynomial::var(y));
        lin.push(Polynomial::var(y).neg());
    }
    let l = AlgebraicCone::reduce_pair([], lin, &MonomialOrder::Grevlex);
    let i = intersect(c, &l);
    debug_assert!(i.zeros().is_empty());
    PolyCone::new(i.positives().to_vec())
}
