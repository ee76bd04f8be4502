use std::collections::HashMap;

use super::Formula;
use crate::poly::{Polynomial, Var, VarContext};

/// A formula over program variables `X` and their primed copies `X'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionFormula {
    pub formula: Formula,
    /// `(x, x')` pairs.
    pub vocab: Vec<(Var, Var)>,
}

impl TransitionFormula {
    /// Interns `x'` for each `x` in `vars`.
    pub fn new(formula: Formula, vars: &[Var], ctx: &mut VarContext) -> Self {
        let vocab = vars.iter().map(|&x| (x, ctx.primed(x))).collect();
        TransitionFormula { formula, vocab }
    }

    pub fn pre_vars(&self) -> Vec<Var> {
        self.vocab.iter().map(|p| p.0).collect()
    }

    pub fn post_vars(&self) -> Vec<Var> {
        self.vocab.iter().map(|p| p.1).collect()
    }

    pub fn all_vars(&self) -> Vec<Var> {
        self.vocab.iter().flat_map(|&(x, y)| [x, y]).collect()
    }

    /// Maps each `x` to `x'`.
    pub fn prime_map(&self) -> HashMap<Var, Polynomial> {
        self.vocab.iter().map(|&(x, y)| (x, Polynomial::var(y))).collect()
    }

    /// `x' = x` for every program variable.
    pub fn identity(&self) -> Formula {
        Formula::and(
            self.vocab.iter().map(|&(x, y)| Formula::eq(&Polynomial::var(y), &Polynomial::var(x))),
        )
    }

    /// Sequential composition `self ∘ other` with the intermediate state
    /// named by fresh `x''` variables. The intermediate variables stay free;
    /// project them away when taking consequences.
    pub fn compose(&self, other: &TransitionFormula, ctx: &mut VarContext) -> (TransitionFormula, Vec<Var>) {
        let mid: Vec<Var> = self
            .vocab
            .iter()
            .map(|&(x, _)| {
                let base = format!("{}''", ctx.name(x));
                ctx.fresh(&base)
            })
            .collect();
        let first: HashMap<Var, Var> = self.vocab.iter().zip(&mid).map(|(&(_, xp), &m)| (xp, m)).collect();
        let second: HashMap<Var, Var> = other.vocab.iter().zip(&mid).map(|(&(x, _), &m)| (x, m)).collect();
        let f = Formula::and([self.formula.rename(&first), other.formula.rename(&second)]);
        (TransitionFormula { formula: f, vocab: self.vocab.clone() }, mid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn compose_increments() {
        let mut c = VarContext::new();
        let x = c.var("x");
        let xp = c.primed(x);
        let f = Formula::eq(&Polynomial::var(xp), &c.parse("x + 1").unwrap());
        let tf = TransitionFormula::new(f, &[x], &mut c);
        let (g, mid) = tf.compose(&tf, &mut c);
        assert_eq!(c.name(mid[0]), "x''");
        let pt = HashMap::from([(x, rat(3)), (mid[0], rat(4)), (xp, rat(5))]);
        assert!(g.formula.eval(&pt));
        let bad = HashMap::from([(x, rat(3)), (mid[0], rat(4)), (xp, rat(6))]);
        assert!(!g.formula.eval(&bad));
    }
}
