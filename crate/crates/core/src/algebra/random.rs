//! Random idempotents for property tests and the CLI `--seed` paths.

use super::idempotent::Idempotent;
use crate::arith::{Field, Scalar};
use crate::linalg::{Matrix, Subspace};
use rand::Rng;

/// Small rationals over ℚ; over ℚ(q) integer polynomials of degree at most
/// one, which keeps the conjugated projector from growing huge fractions.
fn entry<R: Rng + ?Sized>(field: &Field, rng: &mut R) -> Scalar {
    match field.variable() {
        None => field.random(rng, 2),
        Some(q) => &field.int(rng.gen_range(-2..=2)) + &(&q * &field.int(rng.gen_range(-1..=1))),
    }
}

/// A random idempotent on `K^n ⊗ K^n` of rank `rank`: a projector onto a
/// random subspace, conjugated by a random unipotent matrix.
pub fn random_idempotent<R: Rng + ?Sized>(field: &Field, n: usize, rank: usize, rng: &mut R) -> Idempotent {
    let d = n * n;
    let rank = rank.min(d);
    let rows: Vec<_> = (0..rank)
        .map(|_| {
            crate::linalg::sparse::from_dense(
                &(0..d)
                    .map(|_| if rng.gen_bool(0.4) { entry(field, rng) } else { field.zero() })
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let sub = Subspace::from_rows(field, d, rows);
    let mut e = Matrix::zeros(field, d, d);
    for (row, pivot) in sub.basis().iter().zip(sub.pivots()) {
        for (i, c) in row {
            e.set(*i, pivot, c.clone());
        }
    }
    let mut s = Matrix::identity(field, d);
    for i in 0..d {
        for j in (i + 1)..d {
            if rng.gen_bool(0.15) {
                s.set(i, j, entry(field, rng));
            }
        }
    }
    let sinv = s.inverse().expect("unipotent matrices are invertible");
    let conj = s.mul(&e).unwrap().mul(&sinv).unwrap();
    Idempotent::new(conj).expect("conjugate of a projector is idempotent")
}

/// Like [`random_idempotent`] with a uniformly random rank.
pub fn random_idempotent_any<R: Rng + ?Sized>(field: &Field, n: usize, rng: &mut R) -> Idempotent {
    let rank = rng.gen_range(0..=n * n);
    random_idempotent(field, n, rank, rng)
}
