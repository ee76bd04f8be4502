//! Least regular cone containing a set of polynomials.

use lirr::algcone::saturate;
use lirr::VarContext;

fn main() {
    let mut ctx = VarContext::new();
    let q = ctx.polys(&["x^2 - x*y", "x*y - x^2", "x^2*y - z", "w - x*y^2", "z - w", "w^3"]);
    let c = saturate(q);
    println!("{}", c.dump(&ctx));

    // Membership is ideal reduction followed by an LP.
    for s in ["z^3", "w^3 - z^3", "-1", "x^3 - w"] {
        let p = ctx.parse(s).unwrap();
        println!("{s:>10} in cone: {}", c.member(&p));
    }
}
