//! Quadratic algebras presented by relation subspaces, the idempotents that
//! produce them, and the operations between them.

mod cohom;
mod idempotent;
pub mod products;
mod quadratic;
mod random;
pub mod standard;

pub use cohom::{cohom_algebra, cohom_label};
pub use idempotent::Idempotent;
pub use products::{kind_by_name, kinds, product, ProductKind};
pub use quadratic::{render_combination, QuadraticAlgebra, DEFAULT_DEGREE_CAP, MAX_TENSOR_DIM};
pub use random::{random_idempotent, random_idempotent_any};
pub use standard::{std_idempotent, std_matrix, QParams};

pub(crate) use quadratic::word_label;
