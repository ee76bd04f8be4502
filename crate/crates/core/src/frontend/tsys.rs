//! Loop bodies as transition formulas.
//!
//! ```text
//! (vars (x y))
//! (body (and (= x' (+ x 1)) (= y' (+ y x))))
//! (assert (<= x x'))
//! ```
//!
//! `x'` names the value of `x` after one iteration. Assertions are
//! properties over both states to check against the loop summary.

use super::sexpr::{parse_sexps, Sexp};
use super::smt::parse_formula_sexp;
use crate::error::{Error, Result};
use crate::logic::{Formula, TransitionFormula};
use crate::poly::{Var, VarContext};

#[derive(Clone, Debug)]
pub struct TsysScript {
    pub ctx: VarContext,
    pub tf: TransitionFormula,
    pub asserts: Vec<Formula>,
}

pub fn parse_tsys(text: &str) -> Result<TsysScript> {
    let mut ctx = VarContext::new();
    let mut vars: Option<Vec<Var>> = None;
    let mut body = None;
    let mut asserts = Vec::new();
    let es = parse_sexps(text)?;
    for e in &es {
        let (h, args) = e.as_app().ok_or_else(|| e.error("expected `vars`, `body` or `assert`"))?;
        match (h, args) {
            ("vars", [Sexp::List(vs, _)]) if vars.is_none() => {
                let mut out = Vec::new();
                for v in vs {
                    let name = v.as_atom().ok_or_else(|| v.error("expected a variable name"))?;
                    if name.contains('\'') || ctx.lookup(name).is_some() {
                        return Err(v.error(format!("bad or repeated variable `{name}`")));
                    }
                    out.push(ctx.var(name));
                }
                for &x in &out {
                    ctx.primed(x);
                }
                vars = Some(out);
            }
            ("body", [f]) if body.is_none() => body = Some(f),
            ("assert", [f]) => asserts.push(f),
            _ => return Err(e.error(format!("unexpected `{e}`"))),
        }
    }
    let vars = vars.ok_or_else(|| Error::Input("missing `(vars ...)`".into()))?;
    let body = body.ok_or_else(|| Error::Input("missing `(body ...)`".into()))?;
    let names: Vec<String> = vars.iter().map(|&v| ctx.name(v).to_string()).collect();
    let mut r = |name: &str, at: &Sexp| {
        let base = name.strip_suffix('\'').unwrap_or(name);
        if names.iter().any(|n| n == base) {
            Ok(ctx.lookup(name).expect("declared with its primed copy"))
        } else {
            Err(at.error(format!("`{name}` is not a declared variable or its primed copy")))
        }
    };
    let formula = parse_formula_sexp(body, &mut r)?;
    let asserts = asserts.into_iter().map(|f| parse_formula_sexp(f, &mut r)).collect::<Result<Vec<_>>>()?;
    let tf = TransitionFormula::new(formula, &vars, &mut ctx);
    Ok(TsysScript { ctx, tf, asserts })
}
