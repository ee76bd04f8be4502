//! Ground satisfiability modulo LRR and LIRR.

use lirr::frontend::parse_smt;
use lirr::solver::{solve_ground, Theory, Verdict};

const SCRIPTS: &[(&str, &str)] = &[
    ("farkas", "(declare-const x Real)(declare-const y Real)(assert (and (<= (+ x y) 1) (<= 2 x) (<= 0 y)))"),
    ("branch", "(declare-const x Real)(assert (and (or (<= x 0) (<= 1 x)) (= x 2)))"),
    ("half", "(declare-const n Int)(assert (= (* 2 n) 3))"),
    ("parity", "(declare-const n Int)(declare-const m Int)(assert (and (= n (* 2 m)) (= n 7)))"),
    ("infinitesimal", "(declare-const x Real)(assert (and (<= (* x x) 0) (not (= (* x x) 0))))"),
];

fn main() {
    for (name, text) in SCRIPTS {
        let script = parse_smt(text).unwrap();
        let theory = script.theory();
        let verdict = solve_ground(&script.query(), theory).unwrap();
        match verdict {
            Verdict::Sat(m) => println!("{name} ({theory}): sat\n{}", m.cone.dump(&script.ctx)),
            Verdict::Unsat => println!("{name} ({theory}): unsat"),
        }
    }
    // Without Int atoms both theories agree on linear formulas.
    let script = parse_smt(SCRIPTS[0].1).unwrap();
    assert!(!solve_ground(&script.query(), Theory::Lirr).unwrap().is_sat());
}
