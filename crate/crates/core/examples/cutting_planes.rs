//! Integer rounding of linear cones.

use lirr::algcone::{cut, rcp, AlgebraicCone};
use lirr::linalg::{cutbar, lattice_basis};
use lirr::{MonomialOrder, VarContext};

fn main() {
    let mut ctx = VarContext::new();

    // 2x - 1 >= 0 over integral x gives x - 1 >= 0.
    let x = ctx.var("x");
    let closed = cutbar(&ctx.polys(&["2*x - 1"]), &[x]).unwrap();
    let shown: Vec<String> = closed.iter().map(|p| p.render(&ctx, &MonomialOrder::Grevlex)).collect();
    println!("cutbar{{2x - 1}} = {{{}}}", shown.join(", "));

    let c = AlgebraicCone::reduce_pair([], ctx.polys(&["x1 - 2*x2 + 1", "x1 + 2*x2", "-x1"]), &MonomialOrder::Grevlex);
    let b = ctx.polys(&["2*x1", "2*x2"]);
    let cuts = cut(&c, &lattice_basis(&b)).unwrap();
    let shown: Vec<String> = cuts.iter().map(|p| p.render(&ctx, &MonomialOrder::Grevlex)).collect();
    println!("one round of cuts: {{{}}}", shown.join(", "));

    let closure = rcp(&c, &b).unwrap();
    println!("regular closure:\n{}", closure.dump(&ctx));
}
