//! Double description and integer hulls of small rational polyhedra.

use std::collections::HashSet;

use log::trace;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cone::prune;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational, Var};

/// Default cap on the number of lattice points examined by [`cutbar`].
pub const HULL_POINT_LIMIT: u64 = 20_000;

/// Generators of a polyhedral cone: `lin(lines) + cone(rays)`, with `rays`
/// the extreme rays modulo the lineality space.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConeGenerators {
    pub lines: Vec<Vec<BigInt>>,
    pub rays: Vec<Vec<BigInt>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn set(&mut self, i: usize) {
        if self.0.len() <= i / 64 {
            self.0.resize(i / 64 + 1, 0);
        }
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }

    fn subset_of(&self, o: &Bits) -> bool {
        self.0.iter().enumerate().all(|(i, a)| a & !o.0.get(i).copied().unwrap_or(0) == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

fn dot(a: &[BigInt], x: &[BigInt]) -> BigInt {
    a.iter().zip(x).map(|(p, q)| p * q).sum()
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}

/// `alpha * u - beta * v`, made primitive.
fn combine(alpha: &BigInt, u: &[BigInt], beta: &BigInt, v: &[BigInt]) -> Vec<BigInt> {
    primitive(u.iter().zip(v).map(|(x, y)| alpha * x - beta * y).collect())
}

/// Converts `{x : A x >= 0, E x = 0}` in dimension `dim` to generators.
pub fn double_description(ineqs: &[Vec<BigInt>], eqs: &[Vec<BigInt>], dim: usize) -> ConeGenerators {
    let mut lines: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    for e in eqs {
        if let Some(k) = lines.iter().position(|l| !dot(e, l).is_zero()) {
            let l0 = lines.remove(k);
            let s0 = dot(e, &l0);
            lines = lines.into_iter().map(|l| combine(&s0, &l, &dot(e, &l), &l0)).collect();
        }
    }
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    let mut tight: Vec<Bits> = Vec::new();
    for (idx, a) in ineqs.iter().enumerate() {
        if let Some(k) = lines.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lines.remove(k);
            let mut s0 = dot(a, &l0);
            if s0.is_negative() {
                l0 = l0.into_iter().map(|x| -x).collect();
                s0 = -s0;
            }
            lines = lines.into_iter().map(|l| combine(&s0, &l, &dot(a, &l), &l0)).collect();
            rays = rays.into_iter().map(|r| combine(&s0, &r, &dot(a, &r), &l0)).collect();
            for t in tight.iter_mut() {
                t.set(idx);
            }
            // l0 is tight on every earlier constraint, since it was a line.
            let mut t0 = Bits::default();
            for j in 0..idx {
                t0.set(j);
            }
            rays.push(l0);
            tight.push(t0);
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, r)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for i in 0..rays.len() {
                if vals[i].is_zero() {
                    tight[i].set(idx);
                }
            }
            continue;
        }
        let need = dim.saturating_sub(lines.len() + 2);
        let mut new_rays = Vec::new();
        let mut new_tight = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = tight[p].and(&tight[n]);
                if common.count() < need {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .all(|r| r == p || r == n || !common.subset_of(&tight[r]));
                if !adjacent {
                    continue;
                }
                let w = combine(&vals[p], &rays[n], &vals[n], &rays[p]);
                let mut t = common;
                t.set(idx);
                new_rays.push(w);
                new_tight.push(t);
            }
        }
        let mut keep_rays = Vec::new();
        let mut keep_tight = Vec::new();
        for (i, (r, mut t)) in rays.into_iter().zip(tight).enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            if vals[i].is_zero() {
                t.set(idx);
            }
            keep_rays.push(r);
            keep_tight.push(t);
        }
        keep_rays.extend(new_rays);
        keep_tight.extend(new_tight);
        rays = keep_rays;
        tight = keep_tight;
    }
    trace!("dd: dim {dim}, {} lines, {} rays", lines.len(), rays.len());
    ConeGenerators { lines, rays }
}

/// Rows `(a, b)` with integer entries for each `a·y + b`, indexed by `ys`.
fn linear_rows(p: &[Polynomial], ys: &[Var]) -> Result<Vec<Vec<BigInt>>> {
    let mut out = Vec::new();
    for q in p {
        if !q.is_linear() || !q.only_vars(|v| ys.contains(&v)) {
            return Err(Error::NotLinear(q.render_raw()));
        }
        let (_, s) = q.clear_denominators();
        let mut row: Vec<BigInt> =
            ys.iter().map(|&y| s.coeff(&Monomial::var(y)).to_integer()).collect();
        row.push(s.constant_term().to_integer());
        out.push(primitive(row));
    }
    Ok(out)
}

fn row_to_poly(row: &[BigInt], ys: &[Var]) -> Polynomial {
    let mut p = Polynomial::constant(Rational::from_integer(row[ys.len()].clone()));
    for (i, &y) in ys.iter().enumerate() {
        p.add_term(Monomial::var(y), Rational::from_integer(row[i].clone()));
    }
    p
}

/// Generators of the cone of affine functions `a·y + b` that are
/// nonnegative on every integer point of `{y : p(y) >= 0, p ∈ P}`.
/// Returns `None` when that set has no integer point.
pub fn integer_hull(p: &[Polynomial], ys: &[Var], limit: u64) -> Result<Option<Vec<Polynomial>>> {
    let k = ys.len();
    let rows = linear_rows(p, ys)?;
    // Homogenize with λ as coordinate k.
    let mut ineqs = rows.clone();
    let mut lam = vec![BigInt::zero(); k + 1];
    lam[k] = BigInt::one();
    ineqs.push(lam);
    let g = double_description(&ineqs, &[], k + 1);
    let mut verts: Vec<Vec<Rational>> = Vec::new();
    let mut dirs: Vec<Vec<BigInt>> = Vec::new();
    for r in &g.rays {
        if r[k].is_positive() {
            verts.push(r[..k].iter().map(|x| Rational::new(x.clone(), r[k].clone())).collect());
        } else {
            dirs.push(r[..k].to_vec());
        }
    }
    if verts.is_empty() {
        return Ok(None);
    }
    let lines: Vec<Vec<BigInt>> = g.lines.iter().map(|l| l[..k].to_vec()).collect();
    let mut span: Vec<&Vec<BigInt>> = dirs.iter().chain(&lines).collect();
    let neg_lines: Vec<Vec<BigInt>> = lines.iter().map(|l| l.iter().map(|x| -x).collect()).collect();
    span.extend(&neg_lines);

    let mut lo = Vec::with_capacity(k);
    let mut hi = Vec::with_capacity(k);
    let mut total: u64 = 1;
    for i in 0..k {
        let mut a = verts.iter().map(|v| v[i].clone()).min().unwrap();
        let mut b = verts.iter().map(|v| v[i].clone()).max().unwrap();
        for d in &span {
            if d[i].is_negative() {
                a += Rational::from_integer(d[i].clone());
            } else {
                b += Rational::from_integer(d[i].clone());
            }
        }
        let a = a.ceil().to_integer();
        let b = b.floor().to_integer();
        if b < a {
            return Ok(None);
        }
        let w = (&b - &a + 1u32).to_u64().unwrap_or(u64::MAX);
        total = total.saturating_mul(w);
        if total > limit {
            return Err(Error::HullTooLarge(limit));
        }
        lo.push(a);
        hi.push(b);
    }
    let mut points: Vec<Vec<BigInt>> = Vec::new();
    let mut cur = lo.clone();
    loop {
        let mut z = cur.clone();
        z.push(BigInt::one());
        if rows.iter().all(|r| !dot(r, &z).is_negative()) {
            points.push(z);
        }
        let mut i = 0;
        loop {
            if i == k {
                break;
            }
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i].clone();
            i += 1;
        }
        if i == k {
            break;
        }
    }
    trace!("integer hull: {} lattice points in box", points.len());
    if points.is_empty() {
        return Ok(None);
    }
    let mut ineqs = points;
    for d in &dirs {
        let mut r = d.clone();
        r.push(BigInt::zero());
        ineqs.push(r);
    }
    let eqs: Vec<Vec<BigInt>> = lines
        .iter()
        .map(|l| {
            let mut r = l.clone();
            r.push(BigInt::zero());
            r
        })
        .collect();
    let dual = double_description(&ineqs, &eqs, k + 1);
    let mut out = Vec::new();
    for l in &dual.lines {
        let q = row_to_poly(l, ys);
        out.push(q.neg());
        out.push(q);
    }
    for r in &dual.rays {
        out.push(row_to_poly(r, ys));
    }
    Ok(Some(out))
}

/// Cutting-plane closure of `cone(P)` with respect to the lattice `⟨ℤ⟩Y`:
/// the cone of affine functions of `Y` that are nonnegative on the integer
/// hull of `{y : p(y) >= 0}`. Always contains `1`; contains `-1` too when
/// the hull is empty.
pub fn cutbar(p: &[Polynomial], ys: &[Var]) -> Result<Vec<Polynomial>> {
    cutbar_with_limit(p, ys, HULL_POINT_LIMIT)
}

pub fn cutbar_with_limit(p: &[Polynomial], ys: &[Var], limit: u64) -> Result<Vec<Polynomial>> {
    let mut seen = HashSet::new();
    let ys: Vec<Var> = ys.iter().copied().filter(|v| seen.insert(*v)).collect();
    match integer_hull(p, &ys, limit)? {
        Some(mut gens) => {
            gens.push(Polynomial::one());
            Ok(prune(gens))
        }
        None => {
            let mut gens = p.to_vec();
            gens.push(Polynomial::one());
            gens.push(Polynomial::int(-1));
            Ok(prune(gens))
        }
    }
}
