//! Input formats, rendering and the command-line driver.

pub mod cli;
pub mod render;
pub mod sexpr;
pub mod smt;
pub mod tsys;

pub use render::{formula_infix, formula_smt, polynomial_smt, star_infix};
pub use sexpr::{parse_sexps, Pos, Sexp};
pub use smt::{parse_formula, parse_smt, Command, SmtScript, Sort};
pub use tsys::{parse_tsys, TsysScript};
