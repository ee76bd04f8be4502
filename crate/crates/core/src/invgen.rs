//! Recurrences satisfied by a loop body and the transitive-closure
//! over-approximation built from them.

use std::collections::{BTreeSet, HashMap};

use log::debug;
use num_traits::{One, Signed, Zero};

use crate::algcone::{inverse_hom, lin, AlgebraicCone, RingHom};
use crate::consequence::consequence;
use crate::error::Result;
use crate::logic::{Formula, TransitionFormula};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, Var, VarContext};
use crate::solver::Theory;

/// Linear functionals `k` over the program variables with `F ⊨ k' = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinInvBasis {
    pub basis: Vec<Polynomial>,
}

/// Recurrences `⟨ℚ[K]⟩V + cone(R)` over difference variables `d_x` and
/// invariant-functional variables `k_i`.
#[derive(Clone, Debug)]
pub struct RecurrenceSet {
    pub v: Vec<Polynomial>,
    pub r: Vec<Polynomial>,
    /// `(d_x, x, x')`
    pub diffs: Vec<(Var, Var, Var)>,
    /// `(k_i, a_i)` with `a_i` a linear invariant over the pre-state.
    pub invs: Vec<(Var, Polynomial)>,
}

impl RecurrenceSet {
    pub fn d_vars(&self) -> Vec<Var> {
        self.diffs.iter().map(|d| d.0).collect()
    }

    pub fn k_vars(&self) -> Vec<Var> {
        self.invs.iter().map(|k| k.0).collect()
    }

    /// `d_x ↦ x - x'`
    pub fn delta(&self) -> RingHom {
        RingHom::new(self.diffs.iter().map(|&(d, x, xp)| (d, Polynomial::var(x).sub(&Polynomial::var(xp)))))
    }

    /// `d_x ↦ x`
    pub fn pre(&self) -> RingHom {
        RingHom::new(self.diffs.iter().map(|&(d, x, _)| (d, Polynomial::var(x))))
    }

    /// `k_i ↦ a_i`
    pub fn inv(&self) -> RingHom {
        RingHom::new(self.invs.iter().cloned())
    }

    /// `delta` and `inv` together.
    pub fn delta_inv(&self) -> RingHom {
        self.delta().extend(&self.inv())
    }

    /// Splits `p ∈ ⟨ℚ⟩D + ℚ[K]` into its `D` part and its `ℚ[K]` part.
    pub fn split(&self, p: &Polynomial) -> (Polynomial, Polynomial) {
        let ds: BTreeSet<Var> = self.d_vars().into_iter().collect();
        let mut lin = Polynomial::zero();
        let mut rest = Polynomial::zero();
        for (m, c) in p.terms() {
            if m.vars().any(|v| ds.contains(&v)) {
                lin.add_term(m.clone(), c.clone());
            } else {
                rest.add_term(m.clone(), c.clone());
            }
        }
        (lin, rest)
    }

    /// `δ(π_D p) + t · inv(π_K p)`
    pub fn closed_form(&self, p: &Polynomial, t: &Polynomial) -> Polynomial {
        let (d, k) = self.split(p);
        self.delta().apply(&d).add(&t.mul(&self.inv().apply(&k)))
    }
}

/// `∃t. Int(t) ∧ t >= 0 ∧ body`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarFormula {
    pub body: Formula,
    pub counter: Var,
}

impl StarFormula {
    /// `Int(t) ∧ t >= 0 ∧ body`, with `t` free.
    pub fn guarded(&self) -> Formula {
        let t = Polynomial::var(self.counter);
        Formula::and([Formula::is_int(t.clone()), Formula::nonneg(t), self.body.clone()])
    }

    pub fn formula(&self) -> Formula {
        Formula::Exists(vec![self.counter], Box::new(self.guarded()))
    }

    /// The body with the counter fixed to `n`.
    pub fn at(&self, n: i64) -> Formula {
        let m = HashMap::from([(self.counter, Polynomial::int(n))]);
        self.body.substitute(&m)
    }
}

/// `Cn(F)` over `X ∪ X'` modulo LIRR.
pub fn transition_consequence(tf: &TransitionFormula) -> Result<AlgebraicCone> {
    consequence(&tf.formula, &tf.all_vars(), Theory::Lirr)
}

fn diff_vars(tf: &TransitionFormula, ctx: &mut VarContext) -> Vec<(Var, Var, Var)> {
    tf.vocab
        .iter()
        .map(|&(x, xp)| {
            let base = format!("d_{}", ctx.name(x));
            (ctx.fresh(&base), x, xp)
        })
        .collect()
}

pub fn lin_inv_basis(tf: &TransitionFormula, ctx: &mut VarContext) -> Result<LinInvBasis> {
    let cn = transition_consequence(tf)?;
    let diffs = diff_vars(tf, ctx);
    lin_inv_of(&cn, &diffs)
}

fn lin_inv_of(cn: &AlgebraicCone, diffs: &[(Var, Var, Var)]) -> Result<LinInvBasis> {
    let delta = RingHom::new(diffs.iter().map(|&(d, x, xp)| (d, Polynomial::var(x).sub(&Polynomial::var(xp)))));
    let pulled = inverse_hom(cn, &delta)?;
    // red is linear, so the kernel on span(D) comes from the images of the d_x.
    let images: Vec<Polynomial> = diffs.iter().map(|&(d, _, _)| pulled.reduce(&Polynomial::var(d))).collect();
    let monos: Vec<Monomial> = images.iter().flat_map(|p| p.monomials().cloned()).collect::<BTreeSet<_>>().into_iter().collect();
    let rows: Vec<Vec<Rational>> = monos.iter().map(|m| images.iter().map(|p| p.coeff(m)).collect()).collect();
    let basis = nullspace(&rows, diffs.len())
        .into_iter()
        .map(|v| {
            let mut k = Polynomial::zero();
            for (c, &(_, x, _)) in v.iter().zip(diffs) {
                k.add_term(Monomial::var(x), c.clone());
            }
            let k = k.primitive();
            match k.leading_term(&MonomialOrder::Grevlex) {
                Ok((_, c)) if c.is_negative() => k.neg(),
                _ => k,
            }
        })
        .collect();
    Ok(LinInvBasis { basis })
}

/// Kernel basis of an `m × n` matrix, one vector per free column, each with
/// a 1 in its free column.
fn nullspace(rows: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(i) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(r, i);
        let inv = a[r][col].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..n {
                    let s = &f * &a[r][j];
                    a[i][j] -= s;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -a[i][free].clone();
        }
        out.push(v);
    }
    out
}

pub fn recurrent_differences(tf: &TransitionFormula, ctx: &mut VarContext) -> Result<RecurrenceSet> {
    let cn = transition_consequence(tf)?;
    recurrences_of(tf, &cn, ctx)
}

fn recurrences_of(tf: &TransitionFormula, cn: &AlgebraicCone, ctx: &mut VarContext) -> Result<RecurrenceSet> {
    let diffs = diff_vars(tf, ctx);
    let inv = lin_inv_of(cn, &diffs)?;
    let invs: Vec<(Var, Polynomial)> =
        inv.basis.iter().enumerate().map(|(i, a)| (ctx.fresh(&format!("k{}", i + 1)), a.clone())).collect();
    let mut rec = RecurrenceSet { v: Vec::new(), r: Vec::new(), diffs, invs };
    let pulled = inverse_hom(cn, &rec.delta_inv())?;
    let out = lin(pulled.zeros(), pulled.positives(), &rec.d_vars(), &rec.k_vars());
    debug!("recurrences: |V| = {}, |R| = {}", out.v.len(), out.r.len());
    rec.v = out.v;
    rec.r = out.r;
    Ok(rec)
}

/// Closed form of `t` iterations: `⋀ 0 = cf(v) ∧ ⋀ 0 <= cf(r)`.
pub fn exp(tf: &TransitionFormula, t: Var, ctx: &mut VarContext) -> Result<Formula> {
    let rec = recurrent_differences(tf, ctx)?;
    Ok(exp_of(&rec, t))
}

pub fn exp_of(rec: &RecurrenceSet, t: Var) -> Formula {
    let t = Polynomial::var(t);
    let mut out: Vec<Formula> = rec.v.iter().map(|v| Formula::zero(rec.closed_form(v, &t))).collect();
    // A pair ±r of recurrences is written as one equation.
    let mut used = vec![false; rec.r.len()];
    for (i, r) in rec.r.iter().enumerate() {
        if used[i] {
            continue;
        }
        let twin = (i + 1..rec.r.len()).find(|&j| !used[j] && rec.r[j] == r.neg());
        let cf = rec.closed_form(r, &t);
        match twin {
            Some(j) => {
                used[j] = true;
                out.push(Formula::zero(cf));
            }
            None => out.push(Formula::nonneg(cf)),
        }
    }
    Formula::and(out)
}

pub fn star(tf: &TransitionFormula, ctx: &mut VarContext) -> Result<StarFormula> {
    let rec = recurrent_differences(tf, ctx)?;
    let counter = ctx.fresh("t");
    Ok(StarFormula { body: exp_of(&rec, counter), counter })
}
