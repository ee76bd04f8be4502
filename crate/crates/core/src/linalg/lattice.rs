//! Point lattices of polynomials: `⟨ℤ⟩B`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational};

/// A basis of a point lattice in Hermite normal form. Generator `i` has a
/// positive coefficient on `pivots[i]` and vanishes on every monomial that
/// is grevlex-greater than it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LatticeBasis {
    gens: Vec<Polynomial>,
    pivots: Vec<Monomial>,
}

impl LatticeBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Integer coordinates of `p` in this basis, if `p` is in the lattice.
    pub fn coordinates(&self, p: &Polynomial) -> Option<Vec<BigInt>> {
        let mut r = p.clone();
        let mut out = Vec::with_capacity(self.gens.len());
        for (g, m) in self.gens.iter().zip(&self.pivots) {
            let c = r.coeff(m) / g.coeff(m);
            if !c.is_integer() {
                return None;
            }
            r.add_scaled(&-c.clone(), &Monomial::one(), g);
            out.push(c.to_integer());
        }
        r.is_zero().then_some(out)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.coordinates(p).is_some()
    }
}

/// Basis of `⟨ℤ⟩B` via the Hermite normal form of the coefficient matrix.
pub fn lattice_basis<'a>(b: impl IntoIterator<Item = &'a Polynomial>) -> LatticeBasis {
    let b: Vec<&Polynomial> = b.into_iter().filter(|p| !p.is_zero()).collect();
    if b.is_empty() {
        return LatticeBasis::default();
    }
    // Columns in descending grevlex, so pivots are leading monomials.
    let ord = MonomialOrder::Grevlex;
    let mut cols: Vec<Monomial> =
        b.iter().flat_map(|p| p.monomials()).cloned().collect::<BTreeSet<_>>().into_iter().collect();
    cols.sort_by(|x, y| ord.compare(y, x));
    let mut scale = BigInt::one();
    for p in &b {
        for (_, c) in p.terms() {
            scale = scale.lcm(c.denom());
        }
    }
    let sr = Rational::from_integer(scale.clone());
    let mut rows: Vec<Vec<BigInt>> = b
        .iter()
        .map(|p| cols.iter().map(|m| (p.coeff(m) * &sr).to_integer()).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols.len() {
        if r == rows.len() {
            break;
        }
        // Euclid on column c among rows r.. until a single nonzero remains.
        loop {
            let nz: Vec<usize> = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nz.len() <= 1 {
                break;
            }
            let k = *nz.iter().min_by_key(|&&i| rows[i][c].abs()).unwrap();
            for &i in &nz {
                if i != k {
                    let q = rows[i][c].div_floor(&rows[k][c]);
                    let pk = rows[k].clone();
                    for (x, y) in rows[i].iter_mut().zip(&pk) {
                        *x -= &q * y;
                    }
                }
            }
        }
        let Some(k) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, k);
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -x.clone();
            }
        }
        let pr = rows[r].clone();
        for i in 0..r {
            let q = rows[i][c].div_floor(&pr[c]);
            if !q.is_zero() {
                for (x, y) in rows[i].iter_mut().zip(&pr) {
                    *x -= &q * y;
                }
            }
        }
        pivots.push(cols[c].clone());
        r += 1;
    }
    let gens = rows[..r]
        .iter()
        .map(|row| {
            Polynomial::from_terms(
                cols.iter().zip(row).map(|(m, v)| (m.clone(), Rational::new(v.clone(), scale.clone()))),
            )
        })
        .collect();
    LatticeBasis { gens, pivots }
}
