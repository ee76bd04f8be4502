//! Buchberger's algorithm and normal forms.

use std::collections::BTreeSet;

use log::trace;
use num_traits::One;

use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational};

/// A reduced Gröbner basis: monic, inter-reduced, with respect to `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    gens: Vec<Polynomial>,
    leads: Vec<Monomial>,
    order: MonomialOrder,
}

/// Result of division with remainder.
#[derive(Clone, Debug)]
pub struct Division {
    /// One cofactor per basis element.
    pub cofactors: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl GroebnerBasis {
    /// The basis of the zero ideal.
    pub fn empty(order: MonomialOrder) -> Self {
        GroebnerBasis { gens: Vec::new(), leads: Vec::new(), order }
    }

    /// The basis `{1}` of the unit ideal.
    pub fn unit(order: MonomialOrder) -> Self {
        GroebnerBasis {
            gens: vec![Polynomial::one()],
            leads: vec![Monomial::one()],
            order,
        }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.leads.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    /// Normal form of `p`: no monomial of the result is divisible by a
    /// leading monomial of the basis.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        self.divide(p, false).remainder
    }

    /// Normal form together with cofactors `q_i` such that
    /// `p = Σ q_i g_i + remainder`.
    pub fn reduce_with_cofactors(&self, p: &Polynomial) -> Division {
        self.divide(p, true)
    }

    fn divide(&self, p: &Polynomial, track: bool) -> Division {
        let mut cofactors = if track {
            vec![Polynomial::zero(); self.gens.len()]
        } else {
            Vec::new()
        };
        if self.gens.is_empty() {
            return Division { cofactors, remainder: p.clone() };
        }
        if self.is_unit() && !track {
            return Division { cofactors, remainder: Polynomial::zero() };
        }
        let mut work = p.clone();
        let mut rem = Polynomial::zero();
        while !work.is_zero() {
            let (m, c) = {
                let (m, c) = work.leading_term(&self.order).expect("nonzero");
                (m.clone(), c.clone())
            };
            let hit = self
                .leads
                .iter()
                .enumerate()
                .find_map(|(i, l)| l.quotient_of(&m).map(|q| (i, q)));
            match hit {
                Some((i, q)) => {
                    // generators are monic, so the multiplier is c * q
                    work.add_scaled(&-c.clone(), &q, &self.gens[i]);
                    if track {
                        cofactors[i].add_term(q, c);
                    }
                }
                None => {
                    work.add_term(m.clone(), -c.clone());
                    rem.add_term(m, c);
                }
            }
        }
        Division { cofactors, remainder: rem }
    }

    /// Re-expresses the basis under another order.
    pub fn with_order(&self, order: &MonomialOrder) -> GroebnerBasis {
        if &self.order == order {
            return self.clone();
        }
        groebner_basis(self.gens.iter().cloned(), order)
    }
}

fn spoly(f: &Polynomial, lf: &Monomial, g: &Polynomial, lg: &Monomial) -> Polynomial {
    let l = lf.lcm(lg);
    let mut s = f.mul_term(&Rational::one(), &lf.quotient_of(&l).unwrap());
    s.add_scaled(&-Rational::one(), &lg.quotient_of(&l).unwrap(), g);
    s
}

/// Buchberger completion of `input` under `order`, returned reduced.
pub fn groebner_basis(
    input: impl IntoIterator<Item = Polynomial>,
    order: &MonomialOrder,
) -> GroebnerBasis {
    let mut g: Vec<Polynomial> = Vec::new();
    for p in input {
        if p.is_zero() {
            continue;
        }
        if p.as_constant().is_some() {
            return GroebnerBasis::unit(order.clone());
        }
        g.push(p.monic(order));
    }
    if g.is_empty() {
        return GroebnerBasis::empty(order.clone());
    }
    let start = interreduce(g, order);
    if start.is_unit() {
        return start;
    }
    let mut g = start.gens;
    let mut leads = start.leads;
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while let Some(&(i, j)) = pending
        .iter()
        .min_by(|a, b| {
            let la = leads[a.0].lcm(&leads[a.1]);
            let lb = leads[b.0].lcm(&leads[b.1]);
            order.compare(&la, &lb).then(a.cmp(b))
        })
    {
        pending.remove(&(i, j));
        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let l = leads[i].lcm(&leads[j]);
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = spoly(&g[i], &leads[i], &g[j], &leads[j]);
        let basis = GroebnerBasis { gens: g, leads, order: order.clone() };
        let r = basis.reduce(&s);
        g = basis.gens;
        leads = basis.leads;
        trace!("S({i},{j}) reduces to {}", r.render_raw());
        if r.is_zero() {
            continue;
        }
        if r.as_constant().is_some() {
            return GroebnerBasis::unit(order.clone());
        }
        let r = r.monic(order);
        let lr = r.leading_monomial(order).unwrap().clone();
        let n = g.len();
        for k in 0..n {
            pending.insert((k, n));
        }
        g.push(r);
        leads.push(lr);
    }
    interreduce(g, order)
}

/// Minimal, monic, fully inter-reduced basis of the same ideal, assuming the
/// input is a Gröbner basis. Also used on arbitrary inputs as a
/// simplification step, where it preserves the ideal but not the
/// Gröbner property.
fn interreduce(mut g: Vec<Polynomial>, order: &MonomialOrder) -> GroebnerBasis {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < g.len() {
            let others = GroebnerBasis {
                leads: g
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i)
                    .map(|(_, p)| p.leading_monomial(order).unwrap().clone())
                    .collect(),
                gens: g.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, p)| p.clone()).collect(),
                order: order.clone(),
            };
            let r = others.reduce(&g[i]);
            if r.is_zero() {
                g.remove(i);
                changed = true;
                continue;
            }
            if r.as_constant().is_some() {
                return GroebnerBasis::unit(order.clone());
            }
            let r = r.monic(order);
            if r != g[i] {
                g[i] = r;
                changed = true;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    g.sort_by(|a, b| {
        order.compare(a.leading_monomial(order).unwrap(), b.leading_monomial(order).unwrap())
    });
    let leads = g.iter().map(|p| p.leading_monomial(order).unwrap().clone()).collect();
    GroebnerBasis { gens: g, leads, order: order.clone() }
}

/// Checks the defining property directly: every S-polynomial reduces to 0.
pub fn is_groebner(b: &GroebnerBasis) -> bool {
    let g = b.generators();
    let l = b.leading_monomials();
    for j in 0..g.len() {
        for i in 0..j {
            if !b.reduce(&spoly(&g[i], &l[i], &g[j], &l[j])).is_zero() {
                return false;
            }
        }
    }
    g.iter().all(|p| {
        p.leading_term(b.order()).map(|(_, c)| c.is_one()).unwrap_or(false)
    })
}

impl Default for GroebnerBasis {
    fn default() -> Self {
        GroebnerBasis::empty(MonomialOrder::Grevlex)
    }
}
