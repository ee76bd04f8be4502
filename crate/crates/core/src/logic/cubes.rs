//! Propositional cube enumeration under a growing set of conjoined
//! constraints.

use std::collections::HashMap;

use log::trace;

use super::{Atom, Cube, Formula};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub positive: bool,
}

impl Literal {
    pub fn to_formula(&self) -> Formula {
        let a = Formula::Atom(self.atom.clone());
        if self.positive {
            a
        } else {
            Formula::not(a)
        }
    }
}

/// Literals as a theory cube.
pub fn cube_of(lits: &[Literal]) -> Cube {
    Cube::from_literals(lits.iter().map(|l| (&l.atom, l.positive)))
}

#[derive(Clone, Debug)]
enum Node {
    True,
    False,
    Lit(usize, bool),
    And(Vec<Node>),
    Or(Vec<Node>),
}

/// Three-valued evaluation under a partial assignment.
fn eval(n: &Node, asg: &[Option<bool>]) -> Option<bool> {
    match n {
        Node::True => Some(true),
        Node::False => Some(false),
        Node::Lit(i, pos) => asg[*i].map(|v| v == *pos),
        Node::And(v) => {
            let mut all = true;
            for c in v {
                match eval(c, asg) {
                    Some(false) => return Some(false),
                    None => all = false,
                    Some(true) => {}
                }
            }
            all.then_some(true)
        }
        Node::Or(v) => {
            let mut none = true;
            for c in v {
                match eval(c, asg) {
                    Some(true) => return Some(true),
                    None => none = false,
                    Some(false) => {}
                }
            }
            none.then_some(false)
        }
    }
}

/// Clause literal: `2 * var + negated`.
type Lit = u32;

enum Enc {
    Const(bool),
    Lit(Lit),
}

fn lit(var: usize, positive: bool) -> Lit {
    (2 * var + usize::from(!positive)) as Lit
}

/// Unit propagation with two watched literals and chronological
/// backtracking. Returns a total assignment or `None` when unsatisfiable.
fn dpll(nvars: usize, input: &[Vec<Lit>]) -> Option<Vec<bool>> {
    let mut val: Vec<Option<bool>> = vec![None; nvars];
    let value = |val: &[Option<bool>], l: Lit| val[(l / 2) as usize].map(|v| v != (l & 1 == 1));
    let mut clauses: Vec<Vec<Lit>> = Vec::new();
    let mut watches: Vec<Vec<usize>> = vec![Vec::new(); 2 * nvars];
    let mut trail: Vec<Lit> = Vec::new();
    for c in input {
        let mut c = c.clone();
        c.sort_unstable();
        c.dedup();
        if c.windows(2).any(|w| w[0] ^ 1 == w[1]) {
            continue;
        }
        match c.len() {
            0 => return None,
            1 => match value(&val, c[0]) {
                Some(false) => return None,
                Some(true) => {}
                None => {
                    val[(c[0] / 2) as usize] = Some(c[0] & 1 == 0);
                    trail.push(c[0]);
                }
            },
            _ => {
                watches[c[0] as usize].push(clauses.len());
                watches[c[1] as usize].push(clauses.len());
                clauses.push(c);
            }
        }
    }
    // (trail length before the decision, decided literal, already flipped)
    let mut decisions: Vec<(usize, Lit, bool)> = Vec::new();
    let mut head = 0;
    loop {
        let mut conflict = false;
        while head < trail.len() && !conflict {
            let falsified = trail[head] ^ 1;
            head += 1;
            let ws = std::mem::take(&mut watches[falsified as usize]);
            let mut keep = Vec::with_capacity(ws.len());
            for (n, &ci) in ws.iter().enumerate() {
                if conflict {
                    keep.extend_from_slice(&ws[n..]);
                    break;
                }
                let c = &mut clauses[ci];
                if c[0] == falsified {
                    c.swap(0, 1);
                }
                if value(&val, c[0]) == Some(true) {
                    keep.push(ci);
                    continue;
                }
                if let Some(k) = (2..c.len()).find(|&k| value(&val, c[k]) != Some(false)) {
                    c.swap(1, k);
                    watches[c[1] as usize].push(ci);
                    continue;
                }
                keep.push(ci);
                match value(&val, c[0]) {
                    None => {
                        val[(c[0] / 2) as usize] = Some(c[0] & 1 == 0);
                        trail.push(c[0]);
                    }
                    _ => conflict = true,
                }
            }
            watches[falsified as usize] = keep;
        }
        if conflict {
            loop {
                let (pos, l, flipped) = decisions.pop()?;
                for &u in &trail[pos..] {
                    val[(u / 2) as usize] = None;
                }
                trail.truncate(pos);
                head = pos;
                if !flipped {
                    decisions.push((pos, l ^ 1, true));
                    val[(l / 2) as usize] = Some(l & 1 == 1);
                    trail.push(l ^ 1);
                    break;
                }
            }
            continue;
        }
        let Some(v) = val.iter().position(Option::is_none) else {
            return Some(val.into_iter().map(|b| b.unwrap_or(false)).collect());
        };
        // Deciding false first keeps models close to minimal.
        let l = lit(v, false);
        decisions.push((trail.len(), l, false));
        val[v] = Some(false);
        trail.push(l);
    }
}

/// Enumerates cubes (partial assignments) that make every conjoined formula
/// true. Callers add blocking constraints between calls to move on.
#[derive(Clone, Debug, Default)]
pub struct CubeEnumerator {
    atoms: Vec<Atom>,
    index: HashMap<Atom, usize>,
    /// Propositional variable of each atom.
    atom_var: Vec<usize>,
    nvars: usize,
    parts: Vec<Node>,
    clauses: Vec<Vec<Lit>>,
}

impl CubeEnumerator {
    pub fn new(f: &Formula) -> Result<Self> {
        let mut e = CubeEnumerator::default();
        e.conjoin(f)?;
        Ok(e)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Adds `f` as a further conjunct.
    pub fn conjoin(&mut self, f: &Formula) -> Result<()> {
        let g = f.normalize()?;
        let n = self.compile(&g);
        self.assert_node(&n);
        self.parts.push(n);
        Ok(())
    }

    /// Rules out every assignment extending `cube`. Blocking clauses steer
    /// the search only: later cubes are subsets of models that avoid every
    /// blocked cube, but shrinking them does not re-check the clauses.
    pub fn block(&mut self, cube: &[Literal]) {
        let clause = cube
            .iter()
            .map(|l| {
                let i = self.intern(&l.atom);
                lit(self.atom_var[i], !l.positive)
            })
            .collect();
        self.clauses.push(clause);
    }

    fn intern(&mut self, a: &Atom) -> usize {
        if let Some(&i) = self.index.get(a) {
            return i;
        }
        let i = self.atoms.len();
        self.atoms.push(a.clone());
        self.index.insert(a.clone(), i);
        self.atom_var.push(self.nvars);
        self.nvars += 1;
        i
    }

    fn compile(&mut self, f: &Formula) -> Node {
        match f {
            Formula::True => Node::True,
            Formula::False => Node::False,
            Formula::Atom(a) => Node::Lit(self.intern(a), true),
            Formula::Not(g) => match &**g {
                Formula::Atom(a) => Node::Lit(self.intern(a), false),
                _ => unreachable!("input is in negation normal form"),
            },
            Formula::And(v) => Node::And(v.iter().map(|g| self.compile(g)).collect()),
            Formula::Or(v) => Node::Or(v.iter().map(|g| self.compile(g)).collect()),
            Formula::Exists(..) => unreachable!("quantifiers are rejected by normalization"),
        }
    }

    /// Clauses forcing `n` to hold.
    fn assert_node(&mut self, n: &Node) {
        match n {
            Node::True => {}
            Node::And(v) => v.iter().for_each(|c| self.assert_node(c)),
            _ => {
                let c = match self.encode(n) {
                    Enc::Lit(l) => vec![l],
                    Enc::Const(true) => return,
                    Enc::Const(false) => vec![],
                };
                self.clauses.push(c);
            }
        }
    }

    /// A literal implying `n` (one-sided Tseitin encoding, enough for
    /// negation normal form), or the constant `n` folds to.
    fn encode(&mut self, n: &Node) -> Enc {
        match n {
            Node::True => Enc::Const(true),
            Node::False => Enc::Const(false),
            Node::Lit(i, pos) => Enc::Lit(lit(self.atom_var[*i], *pos)),
            Node::And(v) => {
                let mut kids = Vec::new();
                for c in v {
                    match self.encode(c) {
                        Enc::Const(false) => return Enc::Const(false),
                        Enc::Const(true) => {}
                        Enc::Lit(l) => kids.push(l),
                    }
                }
                let a = self.fresh();
                for k in kids {
                    self.clauses.push(vec![lit(a, false), k]);
                }
                Enc::Lit(lit(a, true))
            }
            Node::Or(v) => {
                let mut kids = Vec::new();
                for c in v {
                    match self.encode(c) {
                        Enc::Const(true) => return Enc::Const(true),
                        Enc::Const(false) => {}
                        Enc::Lit(l) => kids.push(l),
                    }
                }
                if kids.is_empty() {
                    return Enc::Const(false);
                }
                let a = self.fresh();
                let mut c = vec![lit(a, false)];
                c.extend(kids);
                self.clauses.push(c);
                Enc::Lit(lit(a, true))
            }
        }
    }

    fn fresh(&mut self) -> usize {
        self.nvars += 1;
        self.nvars - 1
    }

    fn status(&self, asg: &[Option<bool>]) -> Option<bool> {
        let mut all = true;
        for p in &self.parts {
            match eval(p, asg) {
                Some(false) => return Some(false),
                None => all = false,
                Some(true) => {}
            }
        }
        all.then_some(true)
    }

    /// A satisfying partial assignment, shrunk greedily so that dropping any
    /// remaining literal would leave some conjunct undetermined.
    pub fn next_cube(&self) -> Option<Vec<Literal>> {
        let model = dpll(self.nvars, &self.clauses)?;
        let mut asg: Vec<Option<bool>> = self.atom_var.iter().map(|&v| Some(model[v])).collect();
        for i in (0..asg.len()).rev() {
            let v = asg[i].take();
            if self.status(&asg) != Some(true) {
                asg[i] = v;
            }
        }
        let cube: Vec<Literal> = asg
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|v| Literal { atom: self.atoms[i].clone(), positive: v }))
            .collect();
        trace!("cube with {} literals", cube.len());
        Some(cube)
    }
}

/// Cubes whose disjunction is propositionally equivalent to `f`.
pub fn all_cubes(f: &Formula) -> Result<Vec<Vec<Literal>>> {
    let mut e = CubeEnumerator::new(f)?;
    let mut out = Vec::new();
    while let Some(c) = e.next_cube() {
        e.block(&c);
        out.push(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarContext;

    #[test]
    fn disjunction_under_conjunction() {
        let mut c = VarContext::new();
        let a = Formula::nonneg(c.parse("x").unwrap());
        let b = Formula::nonneg(c.parse("y").unwrap());
        let cc = Formula::nonneg(c.parse("z").unwrap());
        let f = Formula::and([Formula::or([a.clone(), b.clone()]), cc.clone()]);
        let cubes = all_cubes(&f).unwrap();
        assert_eq!(cubes.len(), 2);
        let mut e = CubeEnumerator::new(&f).unwrap();
        e.conjoin(&Formula::not(a)).unwrap();
        let only = e.next_cube().unwrap();
        assert!(only.iter().any(|l| l.to_formula() == b));
        assert!(only.iter().any(|l| l.to_formula() == cc));
        e.block(&only);
        assert!(e.next_cube().is_none());
    }

    #[test]
    fn single_conjunction() {
        let mut c = VarContext::new();
        let f = Formula::and([Formula::nonneg(c.parse("x").unwrap()), Formula::zero(c.parse("y").unwrap())]);
        assert_eq!(all_cubes(&f).unwrap().len(), 1);
        assert!(all_cubes(&Formula::False).unwrap().is_empty());
        assert_eq!(all_cubes(&Formula::True).unwrap(), vec![vec![]]);
    }
}
