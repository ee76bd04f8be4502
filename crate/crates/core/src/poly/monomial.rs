use std::fmt;

/// A variable identifier. Names live in [`super::VarContext`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u32);

impl Var {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// A power product of variables. Exponents are stored sorted by variable
/// and are always positive; the empty product is the monomial `1`.
///
/// The derived `Ord` is only a canonical storage order. Use
/// [`super::MonomialOrder`] for term orders.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn pow(v: Var, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats.
    pub fn from_exponents(iter: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut v: Vec<(Var, u32)> = iter.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_by_key(|&(x, _)| x);
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(v.len());
        for (x, e) in v {
            match out.last_mut() {
                Some((y, f)) if *y == x => *f += e,
                _ => out.push((x, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match self.0.binary_search_by_key(&v, |&(x, _)| x) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    /// If the monomial is a single variable to the first power, returns it.
    pub fn as_var(&self) -> Option<Var> {
        match self.0.as_slice() {
            [(v, 1)] => Some(*v),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(other.0.len());
        let mut i = 0;
        for &(v, e) in &other.0 {
            if i < self.0.len() && self.0[i].0 < v {
                return None;
            }
            if i < self.0.len() && self.0[i].0 == v {
                let f = self.0[i].1;
                if f > e {
                    return None;
                }
                if e > f {
                    out.push((v, e - f));
                }
                i += 1;
            } else {
                out.push((v, e));
            }
        }
        if i < self.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut pairs = self.0.clone();
        for &(v, e) in &other.0 {
            match pairs.binary_search_by_key(&v, |&(x, _)| x) {
                Ok(i) => pairs[i].1 = pairs[i].1.max(e),
                Err(i) => pairs.insert(i, (v, e)),
            }
        }
        Monomial(pairs)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, _)| other.exponent(v) == 0)
    }

    /// Restriction to the variables accepted by `keep`.
    pub fn restrict(&self, keep: impl Fn(Var) -> bool) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(v, _)| keep(v)).collect())
    }

    pub fn only_vars(&self, allowed: impl Fn(Var) -> bool) -> bool {
        self.0.iter().all(|&(v, _)| allowed(v))
    }
}
