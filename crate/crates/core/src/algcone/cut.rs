use log::debug;

use super::{fresh_above, intersect_subspace, inverse_hom, AlgebraicCone, RingHom};
use crate::error::Result;
use crate::linalg::{cutbar, lattice_basis, LatticeBasis};
use crate::poly::{Polynomial, Var};

/// Cutting planes of `C` with respect to the lattice spanned by `b`: pull the
/// cone back along `y_i ↦ b_i`, keep its linear part, close that under
/// integer rounding, and push the result forward again.
pub fn cut(c: &AlgebraicCone, b: &LatticeBasis) -> Result<Vec<Polynomial>> {
    let all = c.zeros().iter().chain(c.positives()).chain(b.generators());
    let first = fresh_above(all).0;
    let ys: Vec<Var> = (0..b.len() as u32).map(|i| Var(first + i)).collect();
    let f = RingHom::new(ys.iter().copied().zip(b.generators().iter().cloned()));
    let pulled = inverse_hom(c, &f)?;
    let linear = intersect_subspace(&pulled, &ys);
    let closed = cutbar(linear.generators(), &ys)?;
    Ok(closed.iter().map(|q| f.apply(q)).collect())
}

/// Least regular cone containing `C` that is closed under cutting planes
/// with respect to its units plus `⟨ℤ⟩B`. Alternates [`cut`] with
/// saturation until the cone stops changing.
pub fn rcp(c: &AlgebraicCone, b: &[Polynomial]) -> Result<AlgebraicCone> {
    let order = c.order().clone();
    let mut cur = c.clone();
    if !cur.is_consistent() {
        return Ok(AlgebraicCone::everything());
    }
    let mut basis = lattice_basis(&b.iter().map(|q| cur.reduce(q)).collect::<Vec<_>>());
    let mut round = 0;
    loop {
        if basis.generators().iter().all(|q| q.as_constant().is_some_and(|c| c.is_integer())) {
            return Ok(AlgebraicCone::saturate_pair(cur.zeros().to_vec(), cur.positives().to_vec(), &order));
        }
        let cuts = cut(&cur, &basis)?;
        let mut p = cur.positives().to_vec();
        p.extend(cuts);
        let next = AlgebraicCone::saturate_pair(cur.zeros().to_vec(), p, &order);
        round += 1;
        debug!("rcp round {round}: |Z| = {}, |P| = {}", next.zeros().len(), next.positives().len());
        if next.is_everything() {
            return Ok(next);
        }
        if next.cone_equal(&cur) {
            return Ok(next);
        }
        basis = lattice_basis(&basis.generators().iter().map(|q| next.reduce(q)).collect::<Vec<_>>());
        cur = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, VarContext};
    use crate::linalg::PolyCone;

    #[test]
    fn cut_example() {
        let mut c = VarContext::new();
        let cone = AlgebraicCone::reduce_pair([], c.polys(&["x1 - 2*x2 + 1", "x1 + 2*x2", "-x1"]), &MonomialOrder::Grevlex);
        let b = lattice_basis(&c.polys(&["2*x1", "2*x2"]));
        let out = cut(&cone, &b).unwrap();
        let want = c.polys(&["1", "2*x1", "-2*x1", "2*x2", "-2*x2 + 1"]);
        let lhs = PolyCone::new(cone.positives().iter().cloned().chain(out.clone()));
        let rhs = PolyCone::new(cone.positives().iter().cloned().chain(want));
        assert!(lhs.includes(&rhs) && rhs.includes(&lhs));
    }

    #[test]
    fn rcp_example() {
        let mut c = VarContext::new();
        let cone = AlgebraicCone::reduce_pair([], c.polys(&["x1 - 2*x2 + 1", "x1 + 2*x2", "-x1"]), &MonomialOrder::Grevlex);
        let out = rcp(&cone, &c.polys(&["2*x1", "2*x2"])).unwrap();
        let want = AlgebraicCone::reduce_pair(
            c.polys(&["x1"]),
            c.polys(&["1", "x2", "-2*x2 + 1"]),
            &MonomialOrder::Grevlex,
        );
        assert!(out.cone_equal(&want), "{}", out.dump(&c));
    }
}
