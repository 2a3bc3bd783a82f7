use super::idempotent::Idempotent;
use super::products::shuffled_tensor;
use super::quadratic::QuadraticAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Subspace;

/// Label of the generator `ℳ^s_k` (1-based in the label).
pub fn cohom_label(s: usize, k: usize) -> String {
    format!("M{}_{}", s + 1, k + 1)
}

/// Internal cohom presentation for the pair `(B on K^m, A on K^n)`.
///
/// Generators `ℳ^s_k` sit at index `s·m + k`; the relations are spanned by
/// `Σ A^{pq}_{st} (1−B)^{kl}_{ij} ℳ^s_k ℳ^t_l` over all `(p, q, i, j)`.
pub fn cohom_algebra(b: &Idempotent, a: &Idempotent) -> Result<QuadraticAlgebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(b.field().name(), a.field().name()));
    }
    let (n, m) = (a.dim(), b.dim());
    let field = a.field();
    let left = a.matrix().rowspace();
    let right = b.matrix().complement().transpose().rowspace();
    let mut rows = Vec::with_capacity(left.dim() * right.dim());
    for r in left.basis() {
        for s in right.basis() {
            rows.push(shuffled_tensor(r, s, n, m));
        }
    }
    let mut labels = Vec::with_capacity(n * m);
    for s in 0..n {
        for k in 0..m {
            labels.push(cohom_label(s, k));
        }
    }
    QuadraticAlgebra::new(labels, Subspace::from_rows(field, n * n * m * m, rows))
}
