//! Independent oracles and random instance generators shared by the
//! integration tests. Nothing here calls into the Gröbner, cone or solver
//! code under test.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use lirr::logic::{Formula, TransitionFormula};
use lirr::{Monomial, MonomialOrder, Polynomial, Rational, Var, VarContext};
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn point(pairs: &[(Var, i64)]) -> HashMap<Var, Rational> {
    pairs.iter().map(|&(v, n)| (v, q(n))).collect()
}

// ---------------------------------------------------------------- polynomials

/// All monomials over `vars` of total degree at most `deg`.
pub fn monomials_upto(vars: &[Var], deg: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for _ in 0..deg {
        let mut next = out.clone();
        for m in &out {
            for &v in vars {
                next.push(m.mul(&Monomial::var(v)));
            }
        }
        next.sort();
        next.dedup();
        out = next;
    }
    out
}

pub fn random_poly(r: &mut impl Rng, vars: &[Var], deg: u32, terms: usize, coef: i64) -> Polynomial {
    let ms = monomials_upto(vars, deg);
    let mut p = Polynomial::zero();
    for _ in 0..terms {
        let m = ms.choose(r).unwrap().clone();
        let c = r.gen_range(-coef..=coef);
        p.add_term(m, q(c));
    }
    p
}

pub fn random_linear(r: &mut impl Rng, vars: &[Var], coef: i64) -> Polynomial {
    let mut p = Polynomial::int(r.gen_range(-coef..=coef));
    for &v in vars {
        p.add_term(Monomial::var(v), q(r.gen_range(-coef..=coef)));
    }
    p
}

// ------------------------------------------------------------ Macaulay oracle

/// Normal form of `p` modulo the span of `{m * f : f ∈ gens, deg(m * f) <= deg}`,
/// computed by dense row reduction of the Macaulay matrix with columns in
/// decreasing `order`. For large enough `deg` this is the normal form of `p`
/// modulo the ideal.
pub fn macaulay_nf(p: &Polynomial, gens: &[Polynomial], order: &MonomialOrder, deg: u32) -> Polynomial {
    let vars: Vec<Var> = gens.iter().chain([p]).flat_map(|g| g.vars()).collect::<BTreeSet<_>>().into_iter().collect();
    let mut rows: Vec<Polynomial> = Vec::new();
    for f in gens.iter().filter(|f| !f.is_zero()) {
        if f.degree() > deg {
            continue;
        }
        for m in monomials_upto(&vars, deg - f.degree()) {
            rows.push(f.mul(&Polynomial::term(q(1), m)));
        }
    }
    // Echelon form keyed by leading monomial.
    let mut echelon: Vec<(Monomial, Polynomial)> = Vec::new();
    let lead = |p: &Polynomial| -> Option<(Monomial, Rational)> {
        p.terms().map(|(m, c)| (m.clone(), c.clone())).max_by(|a, b| order.compare(&a.0, &b.0))
    };
    let reduce = |mut p: Polynomial, echelon: &[(Monomial, Polynomial)]| -> Polynomial {
        loop {
            let mut changed = false;
            for (m, row) in echelon {
                let c = p.coeff(m);
                if !c.is_zero() {
                    p = p.sub(&row.scale(&c));
                    changed = true;
                }
            }
            if !changed {
                return p;
            }
        }
    };
    for row in rows {
        let r = reduce(row, &echelon);
        if let Some((m, c)) = lead(&r) {
            let r = r.scale(&c.recip());
            for e in echelon.iter_mut() {
                let k = e.1.coeff(&m);
                if !k.is_zero() {
                    e.1 = e.1.sub(&r.scale(&k));
                }
            }
            echelon.push((m, r));
        }
    }
    // With a fully reduced echelon form, one pass per pivot suffices, but the
    // result must also avoid every pivot monomial.
    let out = reduce(p.clone(), &echelon);
    debug_assert!(echelon.iter().all(|(m, _)| out.coeff(m).is_zero()));
    out
}

// ------------------------------------------------------ linear feasibility

/// A system of constraints `a · x <= b` over `n` rational unknowns.
#[derive(Clone, Debug)]
pub struct System {
    pub n: usize,
    pub rows: Vec<(Vec<Rational>, Rational)>,
}

impl System {
    pub fn eval(&self, x: &[Rational]) -> bool {
        self.rows.iter().all(|(a, b)| dot(a, x) <= *b)
    }

    pub fn formula(&self, vars: &[Var]) -> Formula {
        Formula::and(self.rows.iter().map(|(a, b)| {
            let mut p = Polynomial::constant(b.clone());
            for (c, &v) in a.iter().zip(vars) {
                p.add_term(Monomial::var(v), -c.clone());
            }
            Formula::nonneg(p)
        }))
    }
}

pub fn dot(a: &[Rational], x: &[Rational]) -> Rational {
    a.iter().zip(x).map(|(p, q)| p * q).sum()
}

/// Fourier–Motzkin feasibility with back-substitution. Returns a witness.
pub fn fm_feasible(sys: &System) -> Option<Vec<Rational>> {
    let n = sys.n;
    let mut stages: Vec<Vec<(Vec<Rational>, Rational)>> = vec![sys.rows.clone()];
    for k in (0..n).rev() {
        let cur = stages.last().unwrap();
        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for r in cur {
            match r.0[k].clone() {
                c if c.is_positive() => pos.push(r.clone()),
                c if c.is_negative() => neg.push(r.clone()),
                _ => zero.push(r.clone()),
            }
        }
        let mut next = zero;
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                let (lp, ln) = (ap[k].clone(), -an[k].clone());
                let a: Vec<Rational> = ap.iter().zip(an).map(|(x, y)| x * &ln + y * &lp).collect();
                next.push((a, bp * &ln + bn * &lp));
            }
        }
        next.sort();
        next.dedup();
        stages.push(next);
    }
    if stages.last().unwrap().iter().any(|(_, b)| b.is_negative()) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for k in 0..n {
        let rows = &stages[n - 1 - k];
        let (mut lo, mut hi): (Option<Rational>, Option<Rational>) = (None, None);
        for (a, b) in rows {
            let c = a[k].clone();
            if c.is_zero() {
                continue;
            }
            let rest: Rational = (0..k).map(|j| &a[j] * &x[j]).sum();
            let bound = (b - rest) / &c;
            if c.is_positive() {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            } else {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            }
        }
        x[k] = match (lo, hi) {
            (Some(l), Some(h)) => (l + h) / q(2),
            (Some(l), None) => l,
            (None, Some(h)) => h,
            (None, None) => Rational::zero(),
        };
    }
    debug_assert!(sys.eval(&x));
    Some(x)
}

/// Integer feasibility by branch and bound over FM relaxations. Needs a
/// bounded system.
pub fn bb_integer_feasible(sys: &System, depth: usize) -> bool {
    let Some(x) = fm_feasible(sys) else { return false };
    let Some(k) = x.iter().position(|v| !v.is_integer()) else { return true };
    assert!(depth > 0, "branch and bound did not terminate");
    let mut unit = vec![Rational::zero(); sys.n];
    unit[k] = q(1);
    let mut down = sys.clone();
    down.rows.push((unit.clone(), x[k].floor()));
    let mut up = sys.clone();
    up.rows.push((unit.iter().map(|c| -c).collect(), -x[k].ceil()));
    bb_integer_feasible(&down, depth - 1) || bb_integer_feasible(&up, depth - 1)
}

fn small_row(r: &mut impl Rng, n: usize, c: i64) -> Vec<Rational> {
    (0..n).map(|_| q(r.gen_range(-c..=c))).collect()
}

/// A system with a Farkas certificate `y >= 0, yᵀA = 0, yᵀb < 0`, all
/// coefficients in `[-5, 5]`.
pub fn farkas_system(r: &mut impl Rng, n: usize) -> (System, Vec<Rational>) {
    loop {
        let m = r.gen_range(2..=n + 2);
        let y: Vec<i64> = (0..m - 1).map(|_| r.gen_range(1..=2)).collect();
        let mut rows: Vec<Vec<Rational>> = (0..m - 1).map(|_| small_row(r, n, 2)).collect();
        let last: Vec<Rational> =
            (0..n).map(|j| -rows.iter().zip(&y).map(|(a, &yi)| &a[j] * q(yi)).sum::<Rational>()).collect();
        if last.iter().any(|c| c.abs() > q(5)) {
            continue;
        }
        rows.push(last);
        let mut b: Vec<Rational> = (0..m - 1).map(|_| q(r.gen_range(-5..=5))).collect();
        let need: Rational = b.iter().zip(&y).map(|(bi, &yi)| bi * q(yi)).sum();
        let bm = -need - q(r.gen_range(1..=3));
        if bm.abs() > q(5) {
            continue;
        }
        b.push(bm);
        let mut cert: Vec<Rational> = y.iter().map(|&v| q(v)).collect();
        cert.push(q(1));
        let sys = System { n, rows: rows.into_iter().zip(b).collect() };
        return (sys, cert);
    }
}

/// A system satisfied by a known integer point.
pub fn feasible_system(r: &mut impl Rng, n: usize) -> (System, Vec<Rational>) {
    let x: Vec<Rational> = (0..n).map(|_| q(r.gen_range(-3..=3))).collect();
    let m = r.gen_range(1..=n + 3);
    let rows = (0..m)
        .map(|_| {
            let a = small_row(r, n, 5);
            let b = dot(&a, &x) + q(r.gen_range(0..=3));
            (a, b)
        })
        .collect();
    (System { n, rows }, x)
}

/// A bounded integer system: a box plus a few random constraints, sometimes
/// with an equation that has no integer solution.
pub fn integer_system(r: &mut impl Rng, n: usize) -> System {
    let mut rows = Vec::new();
    for k in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[k] = q(1);
        rows.push((e.clone(), q(r.gen_range(0..=4))));
        rows.push((e.iter().map(|c| -c).collect(), q(r.gen_range(0..=4))));
    }
    for _ in 0..r.gen_range(1..=3) {
        let a = small_row(r, n, 4);
        let b = q(r.gen_range(-6..=6));
        if r.gen_bool(0.3) {
            rows.push((a.iter().map(|c| -c).collect(), -b.clone()));
        }
        rows.push((a, b));
    }
    System { n, rows }
}

// ---------------------------------------------------------------- formulas

/// A random boolean combination of polynomial atoms that is true at `pt`.
pub fn formula_true_at(r: &mut impl Rng, vars: &[Var], pt: &HashMap<Var, Rational>, depth: u32) -> Formula {
    if depth == 0 || r.gen_bool(0.3) {
        let p = if r.gen_bool(0.5) { random_linear(r, vars, 3) } else { random_poly(r, vars, 2, 3, 3) };
        let v = p.eval(pt);
        let atom = if r.gen_bool(0.3) {
            Formula::zero(p.sub(&Polynomial::constant(v.clone())))
        } else {
            Formula::nonneg(p)
        };
        return if atom.eval(pt) { atom } else { Formula::not(atom) };
    }
    let k = r.gen_range(2..=3);
    if r.gen_bool(0.5) {
        Formula::and((0..k).map(|_| formula_true_at(r, vars, pt, depth - 1)).collect::<Vec<_>>())
    } else {
        let good = r.gen_range(0..k);
        Formula::or(
            (0..k)
                .map(|i| {
                    let f = random_formula(r, vars, depth - 1);
                    if i == good || f.eval(pt) {
                        formula_true_at(r, vars, pt, depth - 1)
                    } else {
                        f
                    }
                })
                .collect::<Vec<_>>(),
        )
    }
}

pub fn random_formula(r: &mut impl Rng, vars: &[Var], depth: u32) -> Formula {
    if depth == 0 || r.gen_bool(0.4) {
        let p = random_linear(r, vars, 3);
        return match r.gen_range(0..4) {
            0 => Formula::zero(p),
            1 => Formula::not(Formula::nonneg(p)),
            _ => Formula::nonneg(p),
        };
    }
    let k = r.gen_range(2..=3);
    let parts: Vec<Formula> = (0..k).map(|_| random_formula(r, vars, depth - 1)).collect();
    if r.gen_bool(0.5) {
        Formula::and(parts)
    } else {
        Formula::or(parts)
    }
}

// --------------------------------------------------------- transition formulas

/// Small random loop bodies: each variable is reset, shifted, bounded or
/// copied, with an occasional disjunction or square.
pub fn random_loop(r: &mut impl Rng, ctx: &mut VarContext, n: usize) -> (TransitionFormula, Vec<Formula>) {
    let xs: Vec<Var> = (0..n).map(|i| ctx.var(&format!("v{i}"))).collect();
    let ps: Vec<Var> = xs.iter().map(|&x| ctx.primed(x)).collect();
    let mut conj = Vec::new();
    for i in 0..n {
        let (x, xp) = (Polynomial::var(xs[i]), Polynomial::var(ps[i]));
        let other = Polynomial::var(xs[(i + 1) % n]);
        let c = Polynomial::int(r.gen_range(-2..=3));
        let f = match r.gen_range(0..7) {
            0 => Formula::eq(&xp, &x.add(&c)),
            1 => Formula::or([Formula::eq(&xp, &x.add(&c)), Formula::eq(&xp, &x.add(&Polynomial::int(1)))]),
            2 => Formula::and([Formula::le(&x, &xp), Formula::le(&xp, &x.add(&Polynomial::int(2)))]),
            3 if i + 1 < n => Formula::eq(&xp, &x.add(&other)),
            4 => Formula::eq(&xp, &x.add(&other.mul(&other))),
            5 => Formula::eq(&xp, &x),
            _ => Formula::eq(&xp, &x.add(&c)),
        };
        conj.push(f);
    }
    if r.gen_bool(0.4) {
        conj.push(Formula::le(&Polynomial::var(xs[0]), &Polynomial::int(r.gen_range(0..=5))));
    }
    let tf = TransitionFormula::new(Formula::and(conj.clone()), &xs, ctx);
    (tf, conj)
}
