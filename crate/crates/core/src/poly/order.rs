use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use super::{Monomial, Var};

/// A set of variables, possibly given by its complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarFilter {
    vars: Arc<BTreeSet<Var>>,
    complement: bool,
}

impl VarFilter {
    pub fn contains(&self, v: Var) -> bool {
        self.vars.contains(&v) != self.complement
    }
}

/// Term orders used by Gröbner computations.
///
/// `Elimination` compares the part of each monomial over the eliminated
/// variables first (graded reverse lexicographic), and breaks ties on the
/// remaining part (again grevlex). Any monomial mentioning an eliminated
/// variable therefore outranks every monomial free of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Elimination(VarFilter),
}

impl MonomialOrder {
    /// Elimination order that makes the given variables dominate.
    pub fn eliminate(vars: impl IntoIterator<Item = Var>) -> Self {
        MonomialOrder::Elimination(VarFilter {
            vars: Arc::new(vars.into_iter().collect()),
            complement: false,
        })
    }

    /// Elimination order for projecting onto `keep`: every other variable
    /// is eliminated.
    pub fn keeping(keep: impl IntoIterator<Item = Var>) -> Self {
        MonomialOrder::Elimination(VarFilter {
            vars: Arc::new(keep.into_iter().collect()),
            complement: true,
        })
    }

    pub fn is_eliminated(&self, v: Var) -> bool {
        match self {
            MonomialOrder::Grevlex => false,
            MonomialOrder::Elimination(f) => f.contains(v),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex_by(a, b, |_| true),
            MonomialOrder::Elimination(f) => grevlex_by(a, b, |v| f.contains(v))
                .then_with(|| grevlex_by(a, b, |v| !f.contains(v))),
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// Graded reverse lexicographic comparison restricted to the variables
/// accepted by `keep`. Lower variable ids are the "larger" variables, so
/// `x ≻ y ≻ z` when they are interned in that order.
fn grevlex_by(a: &Monomial, b: &Monomial, keep: impl Fn(Var) -> bool) -> Ordering {
    let deg = |m: &Monomial| -> u32 {
        m.exponents()
            .iter()
            .filter(|&&(v, _)| keep(v))
            .map(|&(_, e)| e)
            .sum()
    };
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        o => return o,
    }
    // Walk from the highest variable id down; the first difference decides,
    // and the monomial with the smaller exponent there is the larger one.
    let mut ia = a.exponents().iter().rev().filter(|&&(v, _)| keep(v)).peekable();
    let mut ib = b.exponents().iter().rev().filter(|&&(v, _)| keep(v)).peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => return Ordering::Equal,
            (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                Ordering::Equal => {
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    ia.next();
                    ib.next();
                }
                // `a` has a positive exponent on a higher variable than any in `b`.
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
            },
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
        }
    }
}
