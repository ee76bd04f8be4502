//! Strongest conjunctive consequences of formulas with disjunctions.

use lirr::consequence::consequence;
use lirr::frontend::parse_smt;
use lirr::logic::Formula;
use lirr::solver::Theory;

fn main() {
    let script = parse_smt(include_str!("inputs/disjunction.smt2")).unwrap();
    let all = script.declared();
    let c = consequence(&script.query(), &all, Theory::Lrr).unwrap();
    println!("over x, y:\n{}", c.dump(&script.ctx));

    let x = script.ctx.lookup("x").unwrap();
    let c = consequence(&script.query(), &[x], Theory::Lrr).unwrap();
    println!("over x:\n{}", c.dump(&script.ctx));

    // Rounding needs the Int constraint, which only LIRR can express.
    let ints = parse_smt("(declare-const n Int)(assert (and (<= 0 (- (* 3 n) 1)) (<= n 4)))").unwrap();
    let real = Formula::and(ints.assertions.clone());
    let c = consequence(&real, &ints.declared(), Theory::Lrr).unwrap();
    println!("lrr, n real:\n{}", c.dump(&ints.ctx));
    let c = consequence(&ints.query(), &ints.declared(), Theory::Lirr).unwrap();
    println!("lirr, n integral:\n{}", c.dump(&ints.ctx));
}
