pub mod algcone;
pub mod consequence;
pub mod error;
pub mod frontend;
pub mod groebner;
pub mod invgen;
pub mod linalg;
pub mod logic;
pub mod poly;
pub mod solver;

pub use error::{Error, Result};
pub use poly::{Monomial, MonomialOrder, Polynomial, Rational, Var, VarContext};
