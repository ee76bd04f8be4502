//! S-expressions with source positions.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sexp {
    Atom(String, Pos),
    List(Vec<Sexp>, Pos),
}

impl Sexp {
    pub fn pos(&self) -> Pos {
        match self {
            Sexp::Atom(_, p) | Sexp::List(_, p) => *p,
        }
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Sexp::Atom(s, _) => Some(s),
            Sexp::List(..) => None,
        }
    }

    pub fn as_list(&self) -> Option<&[Sexp]> {
        match self {
            Sexp::List(v, _) => Some(v),
            Sexp::Atom(..) => None,
        }
    }

    /// Head symbol and arguments of a non-empty list whose head is an atom.
    pub fn as_app(&self) -> Option<(&str, &[Sexp])> {
        let v = self.as_list()?;
        let (h, rest) = v.split_first()?;
        Some((h.as_atom()?, rest))
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        let p = self.pos();
        Error::Parse { line: p.line, col: p.col, msg: msg.into() }
    }
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sexp::Atom(s, _) => f.write_str(s),
            Sexp::List(v, _) => {
                f.write_str("(")?;
                for (i, s) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Parses a sequence of top-level s-expressions. `;` starts a comment that
/// runs to the end of the line.
pub fn parse_sexps(text: &str) -> Result<Vec<Sexp>> {
    let mut stack: Vec<(Vec<Sexp>, Pos)> = Vec::new();
    let mut top = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    let mut push = |stack: &mut Vec<(Vec<Sexp>, Pos)>, s: Sexp| match stack.last_mut() {
        Some((v, _)) => v.push(s),
        None => top.push(s),
    };
    while let Some(c) = chars.next() {
        let here = Pos { line, col };
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
        match c {
            ';' => {
                while let Some(&d) = chars.peek() {
                    if d == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            '(' => stack.push((Vec::new(), here)),
            ')' => {
                let (v, p) = stack
                    .pop()
                    .ok_or(Error::Parse { line: here.line, col: here.col, msg: "unbalanced `)`".into() })?;
                push(&mut stack, Sexp::List(v, p));
            }
            c if c.is_whitespace() => {}
            _ => {
                let mut s = String::from(c);
                while let Some(&d) = chars.peek() {
                    if d.is_whitespace() || d == '(' || d == ')' || d == ';' {
                        break;
                    }
                    s.push(d);
                    chars.next();
                    col += 1;
                }
                push(&mut stack, Sexp::Atom(s, here));
            }
        }
    }
    if let Some((_, p)) = stack.pop() {
        return Err(Error::Parse { line: p.line, col: p.col, msg: "unclosed `(`".into() });
    }
    Ok(top)
}
