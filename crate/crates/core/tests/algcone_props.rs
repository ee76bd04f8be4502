mod common;

use common::*;
use lirr::algcone::{intersect, inverse_hom, project, saturate, AlgebraicCone, RingHom};
use lirr::linalg::cone_additive_unit;
use lirr::{Polynomial, Var};
use proptest::prelude::*;
use rand::Rng;

fn random_cone(seed: u64) -> AlgebraicCone {
    let mut r = rng(seed);
    let vs: Vec<Var> = (0..3).map(Var).collect();
    let k = r.gen_range(1..=3);
    let mut p: Vec<Polynomial> = (0..k)
        .map(|_| {
            let deg = if r.gen_bool(0.3) { 2 } else { 1 };
            random_poly(&mut r, &vs, deg, 3, 3)
        })
        .collect();
    if r.gen_bool(0.5) {
        let z = random_linear(&mut r, &vs, 2);
        p.push(z.clone());
        p.push(z.neg());
    }
    saturate(p)
}

fn probes(seed: u64) -> Vec<Polynomial> {
    let mut r = rng(seed);
    let vs: Vec<Var> = (0..3).map(Var).collect();
    (0..4).map(|_| random_poly(&mut r, &vs, 2, 3, 3)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn saturation_is_regular(seed in any::<u64>()) {
        let c = random_cone(seed);
        if !c.is_everything() {
            prop_assert!(cone_additive_unit(c.positives()).is_none());
            prop_assert!(c.positives().iter().all(|p| c.reduce(p) == *p));
        }
    }

    #[test]
    fn intersection_is_commutative_and_below_both(a in any::<u64>(), b in any::<u64>()) {
        let c1 = random_cone(a);
        let c2 = random_cone(b);
        let i12 = intersect(&c1, &c2);
        let i21 = intersect(&c2, &c1);
        prop_assert!(i12.cone_equal(&i21));
        prop_assert!(c1.includes(&i12));
        prop_assert!(c2.includes(&i12));
        for p in probes(a ^ b) {
            if c1.member(&p) && c2.member(&p) && p.degree() <= 1 {
                prop_assert!(i12.member(&p));
            }
        }
    }

    #[test]
    fn projection_keeps_exactly_the_members(seed in any::<u64>()) {
        let c = random_cone(seed);
        let keep = [Var(1), Var(2)];
        let pc = project(&c, &keep);
        prop_assert!(pc.vars().iter().all(|v| keep.contains(v)));
        prop_assert!(c.includes(&pc));
        let mut r = rng(seed);
        for _ in 0..4 {
            let p = random_linear(&mut r, &keep, 3).add(&Polynomial::int(r.gen_range(-2..=2)));
            prop_assert_eq!(pc.member(&p), c.member(&p));
        }
    }

    #[test]
    fn inverse_image_membership(seed in any::<u64>()) {
        let c = random_cone(seed);
        let mut r = rng(seed);
        let src: Vec<Var> = (10..12).map(Var).collect();
        let xs: Vec<Var> = (0..3).map(Var).collect();
        let f = RingHom::new(src.iter().map(|&y| (y, random_linear(&mut r, &xs, 2))));
        let pre = inverse_hom(&c, &f).unwrap();
        prop_assert!(pre.vars().iter().all(|v| src.contains(v)));
        for _ in 0..4 {
            let p = random_linear(&mut r, &src, 3).add(&Polynomial::int(r.gen_range(-2..=2)));
            prop_assert_eq!(pre.member(&p), c.member(&f.apply(&p)));
        }
    }
}
