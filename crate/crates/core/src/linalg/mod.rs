//! Exact linear algebra: matrices, canonical subspaces, row reduction
//! engines, Kronecker products and tensor-factor shuffles.

pub mod echelon;
mod matrix;
pub mod sparse;
mod subspace;
mod tensor;

pub use echelon::{EliminationStrategy, Echelon};
pub use matrix::Matrix;
pub use sparse::SparseVec;
pub use subspace::Subspace;
pub use tensor::{kron, perm_matrix, shuffle_23, shuffle_23_index, swap, swap_index};
