//! Linear invariants, recurrences and the transitive-closure summary of a
//! loop body.

use lirr::frontend::{formula_infix, parse_tsys, star_infix};
use lirr::invgen::{lin_inv_basis, recurrent_differences, star};
use lirr::MonomialOrder;

fn main() {
    let mut s = parse_tsys(include_str!("inputs/running.tsys")).unwrap();
    let ord = MonomialOrder::Grevlex;

    let inv = lin_inv_basis(&s.tf, &mut s.ctx).unwrap();
    let shown: Vec<String> = inv.basis.iter().map(|k| k.render(&s.ctx, &ord)).collect();
    println!("linear invariants: {{{}}}", shown.join(", "));

    let rec = recurrent_differences(&s.tf, &mut s.ctx).unwrap();
    for r in &rec.r {
        println!("  0 <= {}", r.render(&s.ctx, &ord));
    }

    let summary = star(&s.tf, &mut s.ctx).unwrap();
    println!("{}", star_infix(&summary, &s.ctx));
    println!("after 3 steps: {}", formula_infix(&summary.at(3), &s.ctx));
}
