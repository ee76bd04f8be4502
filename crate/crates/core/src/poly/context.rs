use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Polynomial, Rational, Var};
use crate::error::{Error, Result};

/// Interner between external names and [`Var`] ids.
///
/// Fresh names are derived from a base name plus a numeric suffix, so the
/// same sequence of requests always yields the same names.
#[derive(Clone, Debug, Default)]
pub struct VarContext {
    names: Vec<String>,
    ids: HashMap<String, Var>,
}

impl VarContext {
    pub fn new() -> Self {
        Self::default()
    }

    /// Id for `name`, creating it on first use.
    pub fn var(&mut self, name: &str) -> Var {
        if let Some(&v) = self.ids.get(name) {
            return v;
        }
        let v = Var(self.names.len() as u32);
        self.names.push(name.to_string());
        self.ids.insert(name.to_string(), v);
        v
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        self.ids.get(name).copied()
    }

    pub fn name(&self, v: Var) -> &str {
        self.names.get(v.index()).map(String::as_str).unwrap_or("?")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.names.len() as u32).map(Var)
    }

    /// A new variable whose name starts with `base` and clashes with nothing.
    pub fn fresh(&mut self, base: &str) -> Var {
        if !self.ids.contains_key(base) {
            return self.var(base);
        }
        let mut i = 1usize;
        loop {
            let cand = format!("{base}_{i}");
            if !self.ids.contains_key(&cand) {
                return self.var(&cand);
            }
            i += 1;
        }
    }

    /// The primed partner `x'` of `x`.
    pub fn primed(&mut self, v: Var) -> Var {
        let n = format!("{}'", self.name(v));
        self.var(&n)
    }

    /// Parses an infix polynomial such as `1/2*x^2 - 3*x*y + 2`, interning
    /// unknown names.
    pub fn parse(&mut self, s: &str) -> Result<Polynomial> {
        let toks = tokenize(s)?;
        let mut p = Parser { toks, pos: 0, ctx: self };
        let out = p.sum()?;
        if p.pos != p.toks.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }

    /// Parses every string in `items`; panics on bad input. Intended for
    /// tests and examples.
    pub fn polys(&mut self, items: &[&str]) -> Vec<Polynomial> {
        items
            .iter()
            .map(|s| self.parse(s).unwrap_or_else(|e| panic!("bad polynomial `{s}`: {e}")))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = cs[st..i].iter().collect();
            out.push((Tok::Num(digits.parse().unwrap()), st));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_' || cs[i] == '\'') {
                i += 1;
            }
            out.push((Tok::Ident(cs[st..i].iter().collect()), st));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            return Err(Error::Parse { line: 1, col: i + 1, msg: format!("unexpected `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ctx: &'a mut VarContext,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        let col = self.toks.get(self.pos).map(|t| t.1 + 1).unwrap_or(0);
        Error::Parse { line: 1, col, msg: msg.to_string() }
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some((Tok::Op(c), _)) => Some(*c),
            _ => None,
        }
    }

    fn sum(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                self.product()?.neg()
            }
            Some('+') => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        while let Some(c) = self.peek_op() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add(&self.product()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.product()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while let Some(c) = self.peek_op() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                '/' => {
                    self.pos += 1;
                    let d = self.power()?;
                    match d.as_constant() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&(Rational::one() / c)),
                        _ => return Err(self.err("division only by nonzero constants")),
                    }
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some((Tok::Num(n), _)) => {
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err("expected exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Num(n), _)) => {
                self.pos += 1;
                Ok(Polynomial::constant(Rational::from_integer(n)))
            }
            Some((Tok::Ident(s), _)) => {
                self.pos += 1;
                Ok(Polynomial::var(self.ctx.var(&s)))
            }
            Some((Tok::Op('('), _)) => {
                self.pos += 1;
                let p = self.sum()?;
                if self.peek_op() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(p)
            }
            Some((Tok::Op('-'), _)) => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            _ => Err(self.err("expected a term")),
        }
    }
}
