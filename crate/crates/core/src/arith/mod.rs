//! Exact scalars: arbitrary-precision rationals and rational functions in
//! one variable, with canonical forms so that equality is structural.

mod parse;
mod poly;
mod ratfunc;
mod scalar;

pub use parse::parse_scalar;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use scalar::{arith, ArithOp, ArithValue, Field, Scalar};
