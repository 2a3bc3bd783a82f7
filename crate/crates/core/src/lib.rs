//! Quadratic algebras presented by idempotent matrices, Manin matrices over
//! finite coefficient contexts, and quantum representations of comonoids.
//!
//! Everything is exact: scalars are rationals or rational functions in one
//! variable, and every algebraic predicate reduces to an equality or an
//! inclusion of canonical subspaces.

pub mod algebra;
pub mod arith;
pub mod context;
pub mod corep;
pub mod error;
pub mod format;
pub mod gallery;
pub mod linalg;
pub mod manin;
pub mod properties;
pub mod report;

pub use error::{Error, Result};
pub use report::Report;
