//! Exact arithmetic on polynomials and rational functions in `z`, `w` and
//! `lambda` with integer coefficients.

mod func;
mod gcd;
mod parse;
mod poly;

pub use func::{RatFun, RatFunJson};
pub use gcd::poly_gcd;
pub use parse::parse_ratfun;
pub use poly::{Monomial, Polynomial, Var};
