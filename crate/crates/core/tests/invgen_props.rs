mod common;

use std::collections::HashMap;

use common::*;
use lirr::consequence::consequence;
use lirr::invgen::{lin_inv_basis, star, transition_consequence};
use lirr::logic::{Atom, Formula, TransitionFormula};
use lirr::solver::{solve_ground, Theory};
use lirr::{Polynomial, Rational, Var, VarContext};
use proptest::prelude::*;
use rand::Rng;

fn holds(cn: &lirr::algcone::AlgebraicCone, a: &Atom) -> bool {
    match a {
        Atom::Zero(p) => cn.is_zero_on(p),
        Atom::Nonneg(p) => cn.member(p),
        Atom::IsInt(_) => false,
    }
}

/// Random successor of `x` satisfying the loop body, searched in a box.
fn step(r: &mut impl Rng, tf: &TransitionFormula, x: &[i64]) -> Option<Vec<i64>> {
    let pre = tf.pre_vars();
    let post = tf.post_vars();
    let n = x.len();
    let mut found = Vec::new();
    let mut cur = vec![0i64; n];
    let total = 21i64.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        for i in 0..n {
            cur[i] = x[i] + c % 21 - 10;
            c /= 21;
        }
        let mut pt: HashMap<Var, Rational> = HashMap::new();
        for i in 0..n {
            pt.insert(pre[i], q(x[i]));
            pt.insert(post[i], q(cur[i]));
        }
        if tf.formula.eval(&pt) {
            found.push(cur.clone());
        }
    }
    if found.is_empty() {
        None
    } else {
        Some(found.swap_remove(r.gen_range(0..found.len())))
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn linear_invariants_are_preserved(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let mut c = VarContext::new();
        let (tf, _) = random_loop(&mut r, &mut c, n);
        let inv = lin_inv_basis(&tf, &mut c).unwrap();
        let cn = transition_consequence(&tf).unwrap();
        let primes = tf.prime_map();
        for k in &inv.basis {
            prop_assert!(k.is_linear());
            prop_assert!(cn.is_zero_on(&k.substitute(&primes).sub(k)));
        }
    }

    #[test]
    fn star_contains_the_identity(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let mut c = VarContext::new();
        let (tf, _) = random_loop(&mut r, &mut c, n);
        let s = star(&tf, &mut c).unwrap();
        let id = consequence(&tf.identity(), &tf.all_vars(), Theory::Lirr).unwrap();
        for a in s.at(0).normalize().unwrap().atoms() {
            prop_assert!(holds(&id, &a), "{:?}", a);
        }
    }

    #[test]
    fn star_holds_on_concrete_runs(seed in any::<u64>(), n in 1usize..=2, steps in 1usize..=3) {
        let mut r = rng(seed);
        let mut c = VarContext::new();
        let (tf, _) = random_loop(&mut r, &mut c, n);
        let s = star(&tf, &mut c).unwrap();
        let x0: Vec<i64> = (0..n).map(|_| r.gen_range(-3..=3)).collect();
        let mut x = x0.clone();
        for k in 1..=steps {
            let Some(next) = step(&mut r, &tf, &x) else { break };
            x = next;
            let mut pt: HashMap<Var, Rational> = HashMap::new();
            for (i, (&a, &b)) in tf.pre_vars().iter().zip(&tf.post_vars()).enumerate() {
                pt.insert(a, q(x0[i]));
                pt.insert(b, q(x[i]));
            }
            pt.insert(s.counter, q(k as i64));
            prop_assert!(s.body.eval(&pt), "run of {} steps escapes the summary", k);
        }
    }
}

#[test]
fn star_of_false_is_the_identity() {
    let mut c = VarContext::new();
    let x = c.var("x");
    let xp = c.primed(x);
    let tf = TransitionFormula::new(Formula::False, &[x], &mut c);
    let s = star(&tf, &mut c).unwrap();
    let t = Polynomial::var(s.counter);
    let moved = Formula::and([s.guarded(), Formula::nonneg(t.sub(&Polynomial::one()))]);
    assert!(!solve_ground(&moved, Theory::Lirr).unwrap().is_sat());
    let changed = Formula::and([s.guarded(), Formula::ne(&Polynomial::var(x), &Polynomial::var(xp))]);
    assert!(!solve_ground(&changed, Theory::Lirr).unwrap().is_sat());
    assert!(solve_ground(&s.guarded(), Theory::Lirr).unwrap().is_sat());
}
