//! A small SMT-LIB-style script format.
//!
//! ```text
//! (declare-const x Real)
//! (declare-fun n () Int)
//! (assert (or (<= x 0) (= (* 2 n) (+ x 1))))
//! (check-sat)
//! (get-model)
//! (find-consequences (x n))
//! ```

use std::str::FromStr;

use num_bigint::BigInt;

use super::sexpr::{parse_sexps, Sexp};
use crate::error::{Error, Result};
use crate::logic::Formula;
use crate::poly::{Polynomial, Rational, Var, VarContext};
use crate::solver::Theory;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sort {
    Real,
    Int,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    CheckSat,
    GetModel,
    FindConsequences(Vec<Var>),
}

#[derive(Clone, Debug, Default)]
pub struct SmtScript {
    pub ctx: VarContext,
    pub decls: Vec<(Var, Sort)>,
    pub assertions: Vec<Formula>,
    pub commands: Vec<Command>,
}

impl SmtScript {
    /// Conjunction of the assertions plus `Int(x)` for every `Int` constant.
    pub fn query(&self) -> Formula {
        let ints = self
            .decls
            .iter()
            .filter(|d| d.1 == Sort::Int)
            .map(|d| Formula::is_int(Polynomial::var(d.0)));
        Formula::and(ints.chain(self.assertions.iter().cloned()))
    }

    pub fn declared(&self) -> Vec<Var> {
        self.decls.iter().map(|d| d.0).collect()
    }

    /// LIRR as soon as anything is integral.
    pub fn theory(&self) -> Theory {
        Theory::for_formula(&self.query())
    }
}

/// Maps a symbol to a variable, or rejects it.
pub(crate) trait Resolve {
    fn resolve(&mut self, name: &str, at: &Sexp) -> Result<Var>;
}

impl<F: FnMut(&str, &Sexp) -> Result<Var>> Resolve for F {
    fn resolve(&mut self, name: &str, at: &Sexp) -> Result<Var> {
        self(name, at)
    }
}

fn numeral(s: &str) -> Option<Rational> {
    if let Some((a, b)) = s.split_once('.') {
        if a.is_empty() || b.is_empty() || !a.bytes().chain(b.bytes()).all(|c| c.is_ascii_digit()) {
            return None;
        }
        let den = BigInt::from(10u32).pow(b.len() as u32);
        let num = BigInt::from_str(&format!("{a}{b}")).ok()?;
        return Some(Rational::new(num, den));
    }
    if !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit()) {
        return Some(Rational::from_integer(BigInt::from_str(s).ok()?));
    }
    None
}

fn constant(e: &Sexp) -> Option<Rational> {
    match e {
        Sexp::Atom(s, _) => numeral(s),
        Sexp::List(..) => {
            let (h, args) = e.as_app()?;
            match (h, args) {
                ("-", [a]) => Some(-constant(a)?),
                ("/", [a, b]) => {
                    let (a, b) = (constant(a)?, constant(b)?);
                    (!num_traits::Zero::is_zero(&b)).then(|| a / b)
                }
                _ => None,
            }
        }
    }
}

pub(crate) fn parse_term(e: &Sexp, r: &mut dyn Resolve) -> Result<Polynomial> {
    if let Some(c) = constant(e) {
        return Ok(Polynomial::constant(c));
    }
    match e {
        Sexp::Atom(s, _) => Ok(Polynomial::var(r.resolve(s, e)?)),
        Sexp::List(..) => {
            let (h, args) = e.as_app().ok_or_else(|| e.error("expected a term"))?;
            let ts = args.iter().map(|a| parse_term(a, r)).collect::<Result<Vec<_>>>()?;
            match (h, ts.len()) {
                ("+", _) => Ok(ts.iter().fold(Polynomial::zero(), |a, b| a.add(b))),
                ("*", _) => Ok(ts.iter().fold(Polynomial::one(), |a, b| a.mul(b))),
                ("-", 1) => Ok(ts[0].neg()),
                ("-", n) if n > 1 => Ok(ts[1..].iter().fold(ts[0].clone(), |a, b| a.sub(b))),
                ("/", _) => Err(e.error("division is only allowed between numerals")),
                _ => Err(e.error(format!("unknown term `{h}`"))),
            }
        }
    }
}

fn chain(args: &[Polynomial], rel: impl Fn(&Polynomial, &Polynomial) -> Formula) -> Formula {
    match args {
        [a, b] => rel(a, b),
        _ => Formula::and(args.windows(2).map(|w| rel(&w[0], &w[1]))),
    }
}

pub(crate) fn parse_formula_sexp(e: &Sexp, r: &mut dyn Resolve) -> Result<Formula> {
    match e {
        Sexp::Atom(s, _) => match s.as_str() {
            "true" => Ok(Formula::True),
            "false" => Ok(Formula::False),
            _ => Err(e.error(format!("expected a formula, found `{s}`"))),
        },
        Sexp::List(..) => {
            let (h, args) = e.as_app().ok_or_else(|| e.error("expected a formula"))?;
            let sub = |r: &mut dyn Resolve| args.iter().map(|a| parse_formula_sexp(a, r)).collect::<Result<Vec<_>>>();
            let terms = |r: &mut dyn Resolve| {
                if args.len() < 2 {
                    return Err(e.error(format!("`{h}` needs at least two arguments")));
                }
                args.iter().map(|a| parse_term(a, r)).collect::<Result<Vec<_>>>()
            };
            match h {
                "and" => Ok(Formula::And(sub(r)?)),
                "or" => Ok(Formula::Or(sub(r)?)),
                "not" => match args {
                    [a] => Ok(Formula::not(parse_formula_sexp(a, r)?)),
                    _ => Err(e.error("`not` takes one argument")),
                },
                "=>" => match args {
                    [a, b] => Ok(Formula::or([
                        Formula::not(parse_formula_sexp(a, r)?),
                        parse_formula_sexp(b, r)?,
                    ])),
                    _ => Err(e.error("`=>` takes two arguments")),
                },
                "<=" => Ok(chain(&terms(r)?, Formula::le)),
                ">=" => Ok(chain(&terms(r)?, Formula::ge)),
                "<" => Ok(chain(&terms(r)?, Formula::lt)),
                ">" => Ok(chain(&terms(r)?, Formula::gt)),
                "=" => Ok(chain(&terms(r)?, Formula::eq)),
                "distinct" => match terms(r)?.as_slice() {
                    [a, b] => Ok(Formula::ne(a, b)),
                    _ => Err(e.error("`distinct` takes two arguments")),
                },
                "is_int" => match args {
                    [a] => Ok(Formula::is_int(parse_term(a, r)?)),
                    _ => Err(e.error("`is_int` takes one argument")),
                },
                "exists" | "forall" | "let" => Err(e.error(format!("`{h}` is not supported; formulas must be ground"))),
                _ => Err(e.error(format!("unknown formula `{h}`"))),
            }
        }
    }
}

/// Parses one formula in s-expression syntax, resolving symbols through
/// `ctx` and rejecting names it does not know.
pub fn parse_formula(text: &str, ctx: &VarContext) -> Result<Formula> {
    let es = parse_sexps(text)?;
    let [e] = es.as_slice() else {
        return Err(Error::Input(format!("expected one formula, found {}", es.len())));
    };
    let mut r = |name: &str, at: &Sexp| ctx.lookup(name).ok_or_else(|| at.error(format!("unknown symbol `{name}`")));
    parse_formula_sexp(e, &mut r)
}

fn sort(e: &Sexp) -> Result<Sort> {
    match e.as_atom() {
        Some("Real") => Ok(Sort::Real),
        Some("Int") => Ok(Sort::Int),
        _ => Err(e.error(format!("unsupported sort `{e}`"))),
    }
}

fn symbol(e: &Sexp) -> Result<&str> {
    match e.as_atom() {
        Some(s) if numeral(s).is_none() => Ok(s),
        _ => Err(e.error("expected a symbol")),
    }
}

fn declare(s: &mut SmtScript, n: &Sexp, t: &Sexp) -> Result<()> {
    let name = symbol(n)?;
    if s.ctx.lookup(name).is_some() {
        return Err(n.error(format!("`{name}` is declared twice")));
    }
    let sort = sort(t)?;
    let v = s.ctx.var(name);
    s.decls.push((v, sort));
    Ok(())
}

pub fn parse_smt(text: &str) -> Result<SmtScript> {
    let mut s = SmtScript::default();
    for e in parse_sexps(text)? {
        let (h, args) = e.as_app().ok_or_else(|| e.error("expected a command"))?;
        match (h, args) {
            ("declare-const", [n, t]) => declare(&mut s, n, t)?,
            ("declare-fun", [n, Sexp::List(a, _), t]) if a.is_empty() => declare(&mut s, n, t)?,
            ("assert", [f]) => {
                let ctx = &s.ctx;
                let mut r = |name: &str, at: &Sexp| {
                    ctx.lookup(name).ok_or_else(|| at.error(format!("undeclared symbol `{name}`")))
                };
                let f = parse_formula_sexp(f, &mut r)?;
                s.assertions.push(f);
            }
            ("check-sat", []) => s.commands.push(Command::CheckSat),
            ("get-model", []) => s.commands.push(Command::GetModel),
            ("find-consequences", [Sexp::List(vs, _)]) => {
                let vars = vs
                    .iter()
                    .map(|v| {
                        let name = symbol(v)?;
                        s.ctx.lookup(name).ok_or_else(|| v.error(format!("undeclared symbol `{name}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                s.commands.push(Command::FindConsequences(vars));
            }
            ("set-logic" | "set-info" | "set-option" | "exit", _) => {}
            _ => return Err(e.error(format!("unsupported command `{e}`"))),
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::Atom;

    #[test]
    fn single_atom() {
        let s = parse_smt("(declare-const x Real)(assert (<= 0 x))(check-sat)").unwrap();
        assert_eq!(s.assertions, vec![Formula::nonneg(Polynomial::var(Var(0)))]);
        assert_eq!(s.commands, vec![Command::CheckSat]);
        assert_eq!(s.theory(), Theory::Lrr);
    }

    #[test]
    fn int_declarations() {
        let s = parse_smt("(declare-fun n () Int)(assert (= (* 2 n) 3))").unwrap();
        assert!(s.query().atoms().contains(&Atom::IsInt(Polynomial::var(Var(0)))));
        assert_eq!(s.theory(), Theory::Lirr);
    }

    #[test]
    fn rationals_and_errors() {
        let s = parse_smt("(declare-const x Real)(assert (<= (/ 1 2) (* 1.5 x)))").unwrap();
        let mut c = s.ctx.clone();
        assert_eq!(s.assertions[0], Formula::nonneg(c.parse("3/2*x - 1/2").unwrap()));
        let Err(Error::Parse { line, col, .. }) = parse_smt("(declare-const x Real)\n(assert (<= y x))") else {
            panic!()
        };
        assert_eq!((line, col), (2, 13));
        assert!(parse_smt("(declare-const x Real)(assert (exists ((y Real)) (<= x y)))").is_err());
        assert!(parse_smt("(declare-const x Real)(assert (<= (/ x 2) 1))").is_err());
    }
}
