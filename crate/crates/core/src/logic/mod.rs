//! Ground formulas over the ordered-ring signature with an `Int` predicate.

mod cubes;
mod transition;

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational, Var};

pub use cubes::{all_cubes, cube_of, CubeEnumerator, Literal};
pub use transition::TransitionFormula;

/// Atomic formulas, all comparing a polynomial against zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// `0 <= p`
    Nonneg(Polynomial),
    /// `0 = p`
    Zero(Polynomial),
    /// `Int(p)`
    IsInt(Polynomial),
}

impl Atom {
    pub fn poly(&self) -> &Polynomial {
        match self {
            Atom::Nonneg(p) | Atom::Zero(p) | Atom::IsInt(p) => p,
        }
    }

    fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Atom {
        match self {
            Atom::Nonneg(p) => Atom::Nonneg(f(p)),
            Atom::Zero(p) => Atom::Zero(f(p)),
            Atom::IsInt(p) => Atom::IsInt(f(p)),
        }
    }

    /// Truth value when the polynomial is constant.
    pub fn constant_value(&self) -> Option<bool> {
        let c = self.poly().as_constant()?;
        Some(match self {
            Atom::Nonneg(_) => !c.is_negative(),
            Atom::Zero(_) => c.is_zero(),
            Atom::IsInt(_) => c.is_integer(),
        })
    }

    pub fn eval(&self, point: &HashMap<Var, Rational>) -> bool {
        let v = self.poly().eval(point);
        match self {
            Atom::Nonneg(_) => !v.is_negative(),
            Atom::Zero(_) => v.is_zero(),
            Atom::IsInt(_) => v.is_integer(),
        }
    }
}

/// Boolean combinations of atoms. `Exists` only appears in parsed input and
/// is rejected by [`Formula::normalize`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    Atom(Atom),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Exists(Vec<Var>, Box<Formula>),
}

impl Formula {
    pub fn atom(a: Atom) -> Formula {
        Formula::Atom(a)
    }

    /// `0 <= p`
    pub fn nonneg(p: Polynomial) -> Formula {
        Formula::Atom(Atom::Nonneg(p))
    }

    /// `0 = p`
    pub fn zero(p: Polynomial) -> Formula {
        Formula::Atom(Atom::Zero(p))
    }

    pub fn is_int(p: Polynomial) -> Formula {
        Formula::Atom(Atom::IsInt(p))
    }

    /// `a <= b`
    pub fn le(a: &Polynomial, b: &Polynomial) -> Formula {
        Formula::nonneg(b.sub(a))
    }

    /// `a >= b`
    pub fn ge(a: &Polynomial, b: &Polynomial) -> Formula {
        Formula::le(b, a)
    }

    /// `a < b`, i.e. `a <= b ∧ a ≠ b`.
    pub fn lt(a: &Polynomial, b: &Polynomial) -> Formula {
        let d = b.sub(a);
        Formula::And(vec![Formula::nonneg(d.clone()), Formula::not(Formula::zero(d))])
    }

    pub fn gt(a: &Polynomial, b: &Polynomial) -> Formula {
        Formula::lt(b, a)
    }

    pub fn eq(a: &Polynomial, b: &Polynomial) -> Formula {
        Formula::zero(a.sub(b))
    }

    pub fn ne(a: &Polynomial, b: &Polynomial) -> Formula {
        Formula::not(Formula::eq(a, b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(fs: impl IntoIterator<Item = Formula>) -> Formula {
        Formula::And(fs.into_iter().collect())
    }

    pub fn or(fs: impl IntoIterator<Item = Formula>) -> Formula {
        Formula::Or(fs.into_iter().collect())
    }

    /// Negation normal form with constant atoms folded away.
    pub fn normalize(&self) -> Result<Formula> {
        nnf(self, true)
    }

    /// True if negations appear only directly above atoms.
    pub fn is_nnf(&self) -> bool {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => true,
            Formula::Not(g) => matches!(**g, Formula::Atom(_)),
            Formula::And(v) | Formula::Or(v) => v.iter().all(Formula::is_nnf),
            Formula::Exists(..) => false,
        }
    }

    /// Every atom in order of first occurrence, without repeats.
    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut Vec<Atom>) {
        match self {
            Formula::Atom(a) => {
                if !out.contains(a) {
                    out.push(a.clone());
                }
            }
            Formula::Not(g) | Formula::Exists(_, g) => g.collect_atoms(out),
            Formula::And(v) | Formula::Or(v) => v.iter().for_each(|g| g.collect_atoms(out)),
            Formula::True | Formula::False => {}
        }
    }

    pub fn vars(&self) -> std::collections::BTreeSet<Var> {
        self.atoms().iter().flat_map(|a| a.poly().vars()).collect()
    }

    pub fn mentions_int(&self) -> bool {
        self.atoms().iter().any(|a| matches!(a, Atom::IsInt(_)))
    }

    /// Applies `f` to every atom's polynomial.
    pub fn map_polys(&self, f: &impl Fn(&Polynomial) -> Polynomial) -> Formula {
        match self {
            Formula::True => Formula::True,
            Formula::False => Formula::False,
            Formula::Atom(a) => Formula::Atom(a.map(f)),
            Formula::Not(g) => Formula::not(g.map_polys(f)),
            Formula::And(v) => Formula::And(v.iter().map(|g| g.map_polys(f)).collect()),
            Formula::Or(v) => Formula::Or(v.iter().map(|g| g.map_polys(f)).collect()),
            Formula::Exists(xs, g) => Formula::Exists(xs.clone(), Box::new(g.map_polys(f))),
        }
    }

    pub fn substitute(&self, map: &HashMap<Var, Polynomial>) -> Formula {
        self.map_polys(&|p| p.substitute(map))
    }

    pub fn rename(&self, map: &HashMap<Var, Var>) -> Formula {
        self.map_polys(&|p| p.rename(map))
    }

    /// Truth at a rational point. Variables missing from `point` are zero.
    pub fn eval(&self, point: &HashMap<Var, Rational>) -> bool {
        match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Atom(a) => a.eval(point),
            Formula::Not(g) => !g.eval(point),
            Formula::And(v) => v.iter().all(|g| g.eval(point)),
            Formula::Or(v) => v.iter().any(|g| g.eval(point)),
            Formula::Exists(..) => panic!("cannot evaluate a quantified formula"),
        }
    }
}

fn nnf(f: &Formula, pos: bool) -> Result<Formula> {
    Ok(match f {
        Formula::True => bool_formula(pos),
        Formula::False => bool_formula(!pos),
        Formula::Atom(a) => match a.constant_value() {
            Some(b) => bool_formula(b == pos),
            None if pos => Formula::Atom(a.clone()),
            None => Formula::not(Formula::Atom(a.clone())),
        },
        Formula::Not(g) => nnf(g, !pos)?,
        Formula::And(v) | Formula::Or(v) => {
            let conj = matches!(f, Formula::And(_)) == pos;
            let mut parts = Vec::new();
            for g in v {
                match nnf(g, pos)? {
                    Formula::True if conj => {}
                    Formula::False if !conj => {}
                    Formula::False if conj => return Ok(Formula::False),
                    Formula::True if !conj => return Ok(Formula::True),
                    Formula::And(w) if conj => parts.extend(w),
                    Formula::Or(w) if !conj => parts.extend(w),
                    h => parts.push(h),
                }
            }
            match (parts.len(), conj) {
                (0, true) => Formula::True,
                (0, false) => Formula::False,
                (1, _) => parts.pop().unwrap(),
                (_, true) => Formula::And(parts),
                (_, false) => Formula::Or(parts),
            }
        }
        Formula::Exists(..) => return Err(Error::Quantifier),
    })
}

fn bool_formula(b: bool) -> Formula {
    if b {
        Formula::True
    } else {
        Formula::False
    }
}

/// A conjunction of literals sorted by kind.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cube {
    /// `0 <= p`; equalities contribute `p` and `-p`.
    pub p: Vec<Polynomial>,
    /// `¬(0 <= q)`
    pub q: Vec<Polynomial>,
    /// `¬(0 = r)`
    pub r: Vec<Polynomial>,
    /// `Int(s)`
    pub s: Vec<Polynomial>,
    /// `¬Int(t)`
    pub t: Vec<Polynomial>,
}

impl Cube {
    pub fn from_literals<'a>(lits: impl IntoIterator<Item = (&'a Atom, bool)>) -> Cube {
        let mut c = Cube::default();
        for (a, pos) in lits {
            match (a, pos) {
                (Atom::Nonneg(p), true) => c.p.push(p.clone()),
                (Atom::Nonneg(p), false) => c.q.push(p.clone()),
                (Atom::Zero(p), true) => {
                    c.p.push(p.clone());
                    c.p.push(p.neg());
                }
                (Atom::Zero(p), false) => c.r.push(p.clone()),
                (Atom::IsInt(p), true) => c.s.push(p.clone()),
                (Atom::IsInt(p), false) => c.t.push(p.clone()),
            }
        }
        c
    }

    pub fn has_int(&self) -> bool {
        !self.s.is_empty() || !self.t.is_empty()
    }
}
