//! Formula rendering in s-expression and infix syntax.

use num_traits::{One, Signed};

use crate::invgen::StarFormula;
use crate::logic::{Atom, Formula};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, VarContext};

fn rational_smt(c: &Rational) -> String {
    let a = c.abs();
    let s = if a.is_integer() { a.numer().to_string() } else { format!("(/ {} {})", a.numer(), a.denom()) };
    if c.is_negative() {
        format!("(- {s})")
    } else {
        s
    }
}

fn term_smt(c: &Rational, m: &Monomial, ctx: &VarContext) -> String {
    if m.is_one() {
        return rational_smt(c);
    }
    let mut factors: Vec<String> = Vec::new();
    if !c.is_one() {
        factors.push(rational_smt(c));
    }
    for (v, e) in m.exponents() {
        for _ in 0..*e {
            factors.push(ctx.name(*v).to_string());
        }
    }
    if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        format!("(* {})", factors.join(" "))
    }
}

pub fn polynomial_smt(p: &Polynomial, ctx: &VarContext) -> String {
    let terms: Vec<String> =
        p.sorted_terms(&MonomialOrder::Grevlex).into_iter().map(|(m, c)| term_smt(c, m, ctx)).collect();
    match terms.len() {
        0 => "0".into(),
        1 => terms.into_iter().next().unwrap(),
        _ => format!("(+ {})", terms.join(" ")),
    }
}

pub fn formula_smt(f: &Formula, ctx: &VarContext) -> String {
    let list = |head: &str, v: &[Formula]| {
        let mut s = format!("({head}");
        for g in v {
            s.push(' ');
            s.push_str(&formula_smt(g, ctx));
        }
        s.push(')');
        s
    };
    match f {
        Formula::True => "true".into(),
        Formula::False => "false".into(),
        Formula::Atom(Atom::Nonneg(p)) => format!("(<= 0 {})", polynomial_smt(p, ctx)),
        Formula::Atom(Atom::Zero(p)) => format!("(= {} 0)", polynomial_smt(p, ctx)),
        Formula::Atom(Atom::IsInt(p)) => format!("(is_int {})", polynomial_smt(p, ctx)),
        Formula::Not(g) => format!("(not {})", formula_smt(g, ctx)),
        Formula::And(v) => list("and", v),
        Formula::Or(v) => list("or", v),
        Formula::Exists(vs, g) => {
            let bs: Vec<String> = vs.iter().map(|v| format!("({} Int)", ctx.name(*v))).collect();
            format!("(exists ({}) {})", bs.join(" "), formula_smt(g, ctx))
        }
    }
}

pub fn formula_infix(f: &Formula, ctx: &VarContext) -> String {
    let ord = MonomialOrder::Grevlex;
    let join = |v: &[Formula], sep: &str, empty: &str| {
        if v.is_empty() {
            return empty.to_string();
        }
        let parts: Vec<String> = v
            .iter()
            .map(|g| match g {
                Formula::And(_) | Formula::Or(_) | Formula::Exists(..) => format!("({})", formula_infix(g, ctx)),
                _ => formula_infix(g, ctx),
            })
            .collect();
        parts.join(sep)
    };
    match f {
        Formula::True => "true".into(),
        Formula::False => "false".into(),
        Formula::Atom(Atom::Nonneg(p)) => format!("{} >= 0", p.render(ctx, &ord)),
        Formula::Atom(Atom::Zero(p)) => format!("{} = 0", p.render(ctx, &ord)),
        Formula::Atom(Atom::IsInt(p)) => format!("int({})", p.render(ctx, &ord)),
        Formula::Not(g) => format!("not ({})", formula_infix(g, ctx)),
        Formula::And(v) => join(v, " and ", "true"),
        Formula::Or(v) => join(v, " or ", "false"),
        Formula::Exists(vs, g) => {
            let names: Vec<&str> = vs.iter().map(|v| ctx.name(*v)).collect();
            format!("exists {}. {}", names.join(", "), formula_infix(g, ctx))
        }
    }
}

/// `exists t. int(t) and t >= 0 and <body>`
pub fn star_infix(s: &StarFormula, ctx: &VarContext) -> String {
    let t = ctx.name(s.counter);
    let body = match &s.body {
        Formula::Or(_) | Formula::Exists(..) => format!("({})", formula_infix(&s.body, ctx)),
        b => formula_infix(b, ctx),
    };
    format!("exists {t}. int({t}) and {t} >= 0 and {body}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::smt::parse_formula;

    #[test]
    fn roundtrip() {
        let mut c = VarContext::new();
        let p = c.parse("-3/2*x^2*y + x - 4").unwrap();
        let q = c.parse("y").unwrap();
        let f = Formula::and([
            Formula::or([Formula::nonneg(p.clone()), Formula::not(Formula::zero(q.clone()))]),
            Formula::is_int(q.clone()),
            Formula::True,
        ]);
        let s = formula_smt(&f, &c);
        assert_eq!(parse_formula(&s, &c).unwrap(), f);
        assert_eq!(formula_infix(&f, &c), "(-3/2*x^2*y + x - 4 >= 0 or not (y = 0)) and int(y) and true");
    }
}
