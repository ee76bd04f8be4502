//! Intersecting and projecting algebraic cones.

use lirr::algcone::{intersect, project, saturate};
use lirr::VarContext;

fn main() {
    let mut ctx = VarContext::new();
    // x = 1 and y <= 1
    let c1 = saturate(ctx.polys(&["x - 1", "1 - x", "1 - y"]));
    // y = 2 and x^2 >= 2
    let c2 = saturate(ctx.polys(&["y - 2", "2 - y", "x^2 - 2"]));
    let both = intersect(&c1, &c2);
    println!("C1 ∩ C2:\n{}\n", both.dump(&ctx));

    let x = ctx.var("x");
    println!("projected onto x:\n{}", project(&both, &[x]).dump(&ctx));
}
