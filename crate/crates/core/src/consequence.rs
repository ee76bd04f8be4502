//! Strongest conjunctive consequence of a ground formula over a chosen set
//! of variables.

use log::debug;

use crate::algcone::{intersect, project, AlgebraicCone};
use crate::error::Result;
use crate::logic::{cube_of, CubeEnumerator, Formula};
use crate::poly::Var;
use crate::solver::{CubeResult, CubeSolver, Theory};

/// The conjunction `⋀ 0 = z ∧ ⋀ 0 <= p` described by a cone.
pub fn cone_formula(c: &AlgebraicCone) -> Formula {
    let z = c.zeros().iter().map(|z| Formula::zero(z.clone()));
    let p = c.positives().iter().map(|p| Formula::nonneg(p.clone()));
    Formula::and(z.chain(p))
}

/// Lazy consequence finding. Each round takes a theory model of the
/// remaining formula, projects its cone onto `keep`, intersects it into the
/// accumulator and blocks everything the accumulator already entails.
pub fn consequence(f: &Formula, keep: &[Var], theory: Theory) -> Result<AlgebraicCone> {
    let mut acc = AlgebraicCone::everything();
    let mut g = CubeEnumerator::new(f)?;
    let mut solver = CubeSolver::new(theory);
    let mut rounds = 0;
    while let Some(lits) = g.next_cube() {
        let model = match solver.solve(&cube_of(&lits))? {
            CubeResult::Sat(m) => m,
            CubeResult::Unsat(why) => {
                g.block(&why.core(&lits));
                continue;
            }
        };
        rounds += 1;
        let c = project(&model.cone, keep);
        acc = intersect(&acc, &c);
        debug!("consequence round {rounds}: |Z| = {}, |P| = {}", acc.zeros().len(), acc.positives().len());
        g.conjoin(&Formula::not(cone_formula(&acc)))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, Polynomial, VarContext};

    #[test]
    fn disjunction_example() {
        let mut c = VarContext::new();
        let x = c.parse("x").unwrap();
        let y = c.parse("y").unwrap();
        let f = Formula::or([
            Formula::and([Formula::eq(&x, &Polynomial::one()), Formula::le(&y, &Polynomial::one())]),
            Formula::and([
                Formula::eq(&y, &Polynomial::int(2)),
                Formula::le(&Polynomial::int(2), &x.mul(&x)),
            ]),
        ]);
        let vars = [c.var("x"), c.var("y")];
        let got = consequence(&f, &vars, Theory::Lrr).unwrap();
        let want = AlgebraicCone::reduce_pair(
            c.polys(&["x*y - 2*x - y + 2"]),
            c.polys(&["1", "2 - y", "x^2 - y", "x^2 - 1"]),
            &MonomialOrder::Grevlex,
        );
        assert!(got.cone_equal(&want), "{}", got.dump(&c));
    }

    #[test]
    fn unsat_is_everything() {
        let mut c = VarContext::new();
        let x = c.parse("x").unwrap();
        let f = Formula::and([Formula::nonneg(x.clone()), Formula::nonneg(x.neg().sub(&Polynomial::one()))]);
        assert!(consequence(&f, &[c.var("x")], Theory::Lrr).unwrap().is_everything());
    }
}
