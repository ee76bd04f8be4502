//! Satisfiability modulo LRR and LIRR.

use std::collections::HashMap;
use std::fmt;

use log::debug;

use crate::algcone::{rcp, saturate, AlgebraicCone};
use crate::error::{Error, Result};
use crate::linalg::{lattice_basis, LatticeBasis};
use crate::logic::{cube_of, Atom, Cube, CubeEnumerator, Formula, Literal};
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    Lrr,
    Lirr,
}

impl Theory {
    /// LIRR when the formula uses `Int`, LRR otherwise.
    pub fn for_formula(f: &Formula) -> Theory {
        if f.mentions_int() {
            Theory::Lirr
        } else {
            Theory::Lrr
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theory::Lrr => "lrr",
            Theory::Lirr => "lirr",
        })
    }
}

/// A model given by a regular consistent cone, optionally with a lattice
/// for the `Int` predicate. Without a lattice, `Int` holds exactly on
/// `ideal + ℤ`.
#[derive(Clone, Debug)]
pub struct Model {
    pub cone: AlgebraicCone,
    pub lattice: Option<LatticeBasis>,
}

impl Model {
    pub fn satisfies(&self, a: &Atom) -> bool {
        match a {
            Atom::Nonneg(p) => self.cone.member(p),
            Atom::Zero(p) => self.cone.is_zero_on(p),
            Atom::IsInt(p) => {
                let r = self.cone.reduce(p);
                match &self.lattice {
                    Some(b) => b.contains(&r),
                    None => r.as_constant().is_some_and(|c| c.is_integer()),
                }
            }
        }
    }

    /// Evaluates `f` by membership tests on its atoms.
    pub fn check(&self, f: &Formula) -> bool {
        match f {
            Formula::True => true,
            Formula::False => false,
            Formula::Atom(a) => self.satisfies(a),
            Formula::Not(g) => !self.check(g),
            Formula::And(v) => v.iter().all(|g| self.check(g)),
            Formula::Or(v) => v.iter().any(|g| self.check(g)),
            Formula::Exists(..) => false,
        }
    }
}

/// Free-function form of [`Model::check`].
pub fn check_model(m: &Model, f: &Formula) -> bool {
    m.check(f)
}

/// Why a cube has no model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnsatReason {
    /// The least regular (cut-closed) cone containing the positive part is
    /// the whole ring.
    Inconsistent,
    /// A negated inequality `¬(0 <= q)` whose `q` is in the cone.
    Negated(Polynomial),
    /// A disequality `¬(0 = r)` whose `r` is in the ideal.
    Disequality(Polynomial),
    /// A `¬Int(t)` whose `t` is in the lattice.
    NotInt(Polynomial),
}

impl UnsatReason {
    /// The sub-cube that is already unsatisfiable: every positive literal of
    /// `lits` plus the negative literal named by the reason.
    pub fn core(&self, lits: &[Literal]) -> Vec<Literal> {
        let culprit = match self {
            UnsatReason::Inconsistent => None,
            UnsatReason::Negated(q) => Some(Atom::Nonneg(q.clone())),
            UnsatReason::Disequality(r) => Some(Atom::Zero(r.clone())),
            UnsatReason::NotInt(t) => Some(Atom::IsInt(t.clone())),
        };
        lits.iter().filter(|l| l.positive || Some(&l.atom) == culprit.as_ref()).cloned().collect()
    }
}

#[derive(Clone, Debug)]
pub enum CubeResult {
    Sat(Model),
    Unsat(UnsatReason),
}

impl CubeResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, CubeResult::Sat(_))
    }
}

/// The model determined by the positive literals of `c`, or `None` when
/// they are already contradictory.
fn close(c: &Cube, theory: Theory) -> Result<Option<Model>> {
    let sat = saturate(c.p.iter().cloned());
    if theory == Theory::Lrr {
        if c.has_int() {
            return Err(Error::IntAtomInLrr);
        }
        return Ok((!sat.is_everything()).then_some(Model { cone: sat, lattice: None }));
    }
    let mut b = c.s.clone();
    b.push(Polynomial::one());
    let cone = rcp(&sat, &b)?;
    if cone.is_everything() || !cone.is_consistent() {
        return Ok(None);
    }
    let reduced: Vec<Polynomial> = b.iter().map(|s| cone.reduce(s)).collect();
    let lattice = lattice_basis(&reduced);
    Ok(Some(Model { cone, lattice: Some(lattice) }))
}

/// Checks the negative literals of `c` against its positive closure.
fn refute(m: &Model, c: &Cube) -> Option<UnsatReason> {
    if let Some(q) = c.q.iter().find(|q| m.cone.member(q)) {
        return Some(UnsatReason::Negated(q.clone()));
    }
    if let Some(r) = c.r.iter().find(|r| m.cone.is_zero_on(r)) {
        return Some(UnsatReason::Disequality(r.clone()));
    }
    let lattice = m.lattice.as_ref()?;
    let t = c.t.iter().find(|t| lattice.contains(&m.cone.reduce(t)))?;
    Some(UnsatReason::NotInt(t.clone()))
}

fn decide(model: Option<Model>, c: &Cube) -> CubeResult {
    let Some(m) = model else {
        return CubeResult::Unsat(UnsatReason::Inconsistent);
    };
    match refute(&m, c) {
        Some(why) => CubeResult::Unsat(why),
        None => CubeResult::Sat(m),
    }
}

/// Decides a conjunction modulo LRR.
pub fn solve_lrr_cube(c: &Cube) -> Result<CubeResult> {
    Ok(decide(close(c, Theory::Lrr)?, c))
}

/// Decides a conjunction modulo LIRR.
pub fn solve_lirr_cube(c: &Cube) -> Result<CubeResult> {
    Ok(decide(close(c, Theory::Lirr)?, c))
}

pub fn solve_cube(c: &Cube, theory: Theory) -> Result<CubeResult> {
    Ok(decide(close(c, theory)?, c))
}

/// Cube solving that remembers the closure of each positive part seen, so
/// cubes differing only in negative literals share the expensive step.
#[derive(Debug)]
pub struct CubeSolver {
    theory: Theory,
    closed: HashMap<(Vec<Polynomial>, Vec<Polynomial>), Option<Model>>,
}

impl CubeSolver {
    pub fn new(theory: Theory) -> Self {
        CubeSolver { theory, closed: HashMap::new() }
    }

    pub fn solve(&mut self, c: &Cube) -> Result<CubeResult> {
        let key = |v: &[Polynomial]| {
            let mut v = v.to_vec();
            v.sort();
            v.dedup();
            v
        };
        let k = (key(&c.p), key(&c.s));
        let m = match self.closed.get(&k) {
            Some(m) => m.clone(),
            None => {
                debug!("closure {}: {} positive polynomials", self.closed.len() + 1, c.p.len());
                let m = close(c, self.theory)?;
                self.closed.insert(k, m.clone());
                m
            }
        };
        if self.theory == Theory::Lrr && c.has_int() {
            return Err(Error::IntAtomInLrr);
        }
        Ok(decide(m, c))
    }
}

#[derive(Clone, Debug)]
pub enum Verdict {
    Sat(Model),
    Unsat,
}

impl Verdict {
    pub fn is_sat(&self) -> bool {
        matches!(self, Verdict::Sat(_))
    }
}

/// Ground satisfiability: enumerate propositional cubes, solve each in the
/// theory, and block the ones without a model.
pub fn solve_ground(f: &Formula, theory: Theory) -> Result<Verdict> {
    if theory == Theory::Lrr && f.mentions_int() {
        return Err(Error::IntAtomInLrr);
    }
    let mut e = CubeEnumerator::new(f)?;
    let mut solver = CubeSolver::new(theory);
    let mut tried = 0;
    while let Some(lits) = e.next_cube() {
        tried += 1;
        let cube = cube_of(&lits);
        match solver.solve(&cube)? {
            CubeResult::Sat(m) => {
                debug!("sat after {tried} cubes");
                return Ok(Verdict::Sat(m));
            }
            CubeResult::Unsat(why) => {
                debug!("cube {tried} unsat: {why:?}");
                e.block(&why.core(&lits));
            }
        }
    }
    debug!("unsat after {tried} cubes");
    Ok(Verdict::Unsat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, VarContext};

    fn cube(c: &mut VarContext, p: &[&str], q: &[&str], r: &[&str], s: &[&str], t: &[&str]) -> Cube {
        Cube { p: c.polys(p), q: c.polys(q), r: c.polys(r), s: c.polys(s), t: c.polys(t) }
    }

    #[test]
    fn lrr_cubes() {
        let mut c = VarContext::new();
        let k = cube(&mut c, &["x - 1", "1 - x", "1 - y"], &[], &[], &[], &[]);
        let CubeResult::Sat(m) = solve_lrr_cube(&k).unwrap() else { panic!() };
        let want = AlgebraicCone::reduce_pair(c.polys(&["x - 1"]), c.polys(&["1", "1 - y"]), &MonomialOrder::Grevlex);
        assert!(m.cone.cone_equal(&want));
        assert!(m.check(&Formula::eq(&c.parse("x").unwrap(), &Polynomial::one())));
        assert!(!m.check(&Formula::nonneg(c.parse("y - 2").unwrap())));
        let k = cube(&mut c, &["x", "-x - 1"], &[], &[], &[], &[]);
        assert!(!solve_lrr_cube(&k).unwrap().is_sat());
        let k = cube(&mut c, &["-x^2"], &[], &["x^2"], &[], &[]);
        assert!(solve_lrr_cube(&k).unwrap().is_sat());
        let k = cube(&mut c, &[], &[], &[], &["x"], &[]);
        assert_eq!(solve_lrr_cube(&k).unwrap_err(), Error::IntAtomInLrr);
    }

    #[test]
    fn lirr_cubes() {
        let mut c = VarContext::new();
        let k = cube(&mut c, &["2*x - 1", "-x"], &[], &[], &["x"], &[]);
        assert!(!solve_lirr_cube(&k).unwrap().is_sat());
        let k = cube(&mut c, &["x"], &[], &[], &["x"], &[]);
        assert!(solve_lirr_cube(&k).unwrap().is_sat());
        let k = cube(&mut c, &["2*x - 3", "3 - 2*x"], &[], &[], &["x"], &[]);
        assert!(!solve_lirr_cube(&k).unwrap().is_sat());
        let k = cube(&mut c, &[], &[], &[], &["x"], &["x + 1"]);
        assert!(matches!(solve_lirr_cube(&k).unwrap(), CubeResult::Unsat(UnsatReason::NotInt(_))));
    }

    #[test]
    fn ground() {
        let mut c = VarContext::new();
        let x = c.parse("x").unwrap();
        let f = Formula::and([
            Formula::or([Formula::le(&x, &Polynomial::zero()), Formula::le(&Polynomial::one(), &x)]),
            Formula::eq(&x, &Polynomial::int(2)),
        ]);
        assert!(solve_ground(&f, Theory::Lrr).unwrap().is_sat());
        let y = c.parse("y").unwrap();
        let bad = |v: &Polynomial| {
            Formula::and([Formula::nonneg(v.clone()), Formula::nonneg(v.neg().sub(&Polynomial::one()))])
        };
        let f = Formula::or([bad(&x), bad(&y)]);
        assert!(!solve_ground(&f, Theory::Lrr).unwrap().is_sat());
    }
}
