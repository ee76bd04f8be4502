//! Exact multivariate polynomials over the rationals.

mod context;
mod monomial;
mod order;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::ops;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use context::VarContext;
pub use monomial::{Monomial, Var};
pub use order::{MonomialOrder, VarFilter};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial in ℚ[X], stored as a map from monomials to nonzero
/// coefficients. Equality is structural, which coincides with equality of
/// polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in storage order (not a term order).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Degree at most one.
    pub fn is_linear(&self) -> bool {
        self.degree() <= 1
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn max_var(&self) -> Option<Var> {
        self.terms.keys().flat_map(|m| m.vars()).max()
    }

    pub fn only_vars(&self, allowed: impl Fn(Var) -> bool) -> bool {
        self.terms.keys().all(|m| m.only_vars(&allowed))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// `self * c * m`.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect(),
        }
    }

    pub fn mul(&self, o: &Polynomial) -> Polynomial {
        let mut r = Polynomial::zero();
        for (m, c) in &o.terms {
            for (n, d) in &self.terms {
                r.add_term(n.mul(m), c * d);
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut r = Polynomial::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// `self += c * m * g`, the inner step of reduction.
    pub fn add_scaled(&mut self, c: &Rational, m: &Monomial, g: &Polynomial) {
        for (n, d) in &g.terms {
            self.add_term(n.mul(m), c * d);
        }
    }

    /// Greatest monomial under `ord` together with its coefficient.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(&Monomial, &Rational)> {
        let mut it = self.terms.iter();
        let mut best = it.next().ok_or(Error::ZeroPolynomial)?;
        for t in it {
            if ord.compare(t.0, best.0) == Ordering::Greater {
                best = t;
            }
        }
        Ok(best)
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Result<&Monomial> {
        self.leading_term(ord).map(|t| t.0)
    }

    /// Scales so the leading coefficient is 1. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            Ok((_, c)) => self.scale(&(Rational::one() / c)),
            Err(_) => self.clone(),
        }
    }

    /// Positive multiple with coprime integer coefficients. Useful as a
    /// canonical representative of a ray.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(&(c.numer() * (&den / c.denom())));
        }
        self.scale(&Rational::new(den, g))
    }

    /// Integer coefficients of [`Polynomial::primitive`] scaled by
    /// `denominator lcm`; returns `(scale, self * scale)` with `scale > 0`
    /// clearing all denominators.
    pub fn clear_denominators(&self) -> (BigInt, Polynomial) {
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let p = self.scale(&Rational::from_integer(den.clone()));
        (den, p)
    }

    /// Ring homomorphism given by substituting variables. Unmapped
    /// variables are left in place.
    pub fn substitute(&self, map: &HashMap<Var, Polynomial>) -> Polynomial {
        let mut cache: HashMap<(Var, u32), Polynomial> = HashMap::new();
        let mut r = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            let mut rest = Vec::new();
            for &(v, e) in m.exponents() {
                match map.get(&v) {
                    Some(img) => {
                        let pw = cache.entry((v, e)).or_insert_with(|| img.pow(e));
                        t = t.mul(pw);
                    }
                    None => rest.push((v, e)),
                }
            }
            let rest = Monomial::from_exponents(rest);
            for (n, d) in t.terms {
                r.add_term(n.mul(&rest), d);
            }
        }
        r
    }

    /// Renames variables; a special case of substitution.
    pub fn rename(&self, map: &HashMap<Var, Var>) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| {
            let n = Monomial::from_exponents(
                m.exponents().iter().map(|&(v, e)| (*map.get(&v).unwrap_or(&v), e)),
            );
            (n, c.clone())
        }))
    }

    /// Value at a point. Missing variables evaluate to zero.
    pub fn eval(&self, point: &HashMap<Var, Rational>) -> Rational {
        let mut r = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.exponents() {
                let x = point.get(&v).cloned().unwrap_or_else(Rational::zero);
                t *= num_traits::pow(x, e as usize);
            }
            r += t;
        }
        r
    }

    /// Terms sorted descending under `ord`.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.compare(b.0, a.0));
        v
    }

    /// Text such as `3/2*x^2*y - y + 1`, terms descending under `ord`.
    pub fn render(&self, ctx: &VarContext, ord: &MonomialOrder) -> String {
        render_with(self, ord, |v| ctx.name(v).to_string())
    }

    /// Rendering with `v0`, `v1`, ... names, for debugging.
    pub fn render_raw(&self) -> String {
        render_with(self, &MonomialOrder::Grevlex, |v| v.to_string())
    }
}

fn render_with(p: &Polynomial, ord: &MonomialOrder, name: impl Fn(Var) -> String) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (m, c)) in p.sorted_terms(ord).into_iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mut parts = Vec::new();
        if !a.is_one() || m.is_one() {
            parts.push(a.to_string());
        }
        for &(v, e) in m.exponents() {
            if e == 1 {
                parts.push(name(v));
            } else {
                parts.push(format!("{}^{}", name(v), e));
            }
        }
        let _ = write!(s, "{}", parts.join("*"));
    }
    s
}

impl ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        Polynomial::add(self, o)
    }
}

impl ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        Polynomial::sub(self, o)
    }
}

impl ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        Polynomial::mul(self, o)
    }
}

impl ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl ops::Add for Polynomial {
    type Output = Polynomial;
    fn add(self, o: Polynomial) -> Polynomial {
        Polynomial::add(&self, &o)
    }
}

impl ops::Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, o: Polynomial) -> Polynomial {
        Polynomial::sub(&self, &o)
    }
}

impl ops::Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, o: Polynomial) -> Polynomial {
        Polynomial::mul(&self, &o)
    }
}

impl ops::Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(&self)
    }
}
