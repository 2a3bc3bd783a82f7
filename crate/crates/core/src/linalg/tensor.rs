use super::matrix::Matrix;
use crate::arith::Field;
use crate::error::{Error, Result};

/// Kronecker product in the row-major flattening: `(a⊗b)[(i,k),(j,l)] = a[i,j]·b[k,l]`.
pub fn kron(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().name(), b.field().name()));
    }
    let (br, bc) = (b.rows(), b.cols());
    Ok(Matrix::from_fn(a.field(), a.rows() * br, a.cols() * bc, |r, c| {
        let x = a.get(r / br, c / bc);
        if x.is_zero() {
            return x.clone();
        }
        x * b.get(r % br, c % bc)
    }))
}

/// Index of `(a,b,c,d)` in `V⊗V⊗W⊗W` mapped to `(a,c,b,d)` in `V⊗W⊗V⊗W`.
pub fn shuffle_23_index(n: usize, m: usize, idx: usize) -> usize {
    let d = idx % m;
    let c = (idx / m) % m;
    let b = (idx / (m * m)) % n;
    let a = idx / (m * m * n);
    ((a * m + c) * n + b) * m + d
}

/// Permutation matrix of `V⊗V⊗W⊗W → V⊗W⊗V⊗W`, `dim V = n`, `dim W = m`.
pub fn shuffle_23(field: &Field, n: usize, m: usize) -> Matrix {
    let size = n * n * m * m;
    perm_matrix(field, &(0..size).map(|i| shuffle_23_index(n, m, i)).collect::<Vec<_>>())
}

/// Matrix sending basis vector `e_j` to `e_{perm[j]}`.
pub fn perm_matrix(field: &Field, perm: &[usize]) -> Matrix {
    let mut m = Matrix::zeros(field, perm.len(), perm.len());
    for (j, &i) in perm.iter().enumerate() {
        m.set(i, j, field.one());
    }
    m
}

/// Index of `(i,j)` in `V⊗V` mapped to `(j,i)`.
pub fn swap_index(n: usize, idx: usize) -> usize {
    (idx % n) * n + idx / n
}

/// The flip `σ` of `V⊗V`.
pub fn swap(field: &Field, n: usize) -> Matrix {
    perm_matrix(field, &(0..n * n).map(|i| swap_index(n, i)).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_identities() {
        let f = Field::Rational;
        let i2 = Matrix::identity(&f, 2);
        assert_eq!(kron(&i2, &i2).unwrap(), Matrix::identity(&f, 4));
        let n = Matrix::from_int_rows(&f, &[&[0, 1], &[0, 0]]);
        assert_eq!(kron(&n, &Matrix::identity(&f, 1)).unwrap(), n);
    }

    #[test]
    fn shuffle_examples() {
        let f = Field::Rational;
        assert_eq!(shuffle_23(&f, 1, 1), Matrix::identity(&f, 1));
        let idx = |a: usize, b: usize, c: usize, d: usize| ((a * 2 + b) * 2 + c) * 2 + d;
        assert_eq!(shuffle_23_index(2, 2, idx(0, 1, 0, 1)), idx(0, 0, 1, 1));
        let s = shuffle_23(&f, 2, 2);
        assert_eq!(s.mul(&s).unwrap(), Matrix::identity(&f, 16));
    }

    #[test]
    fn shuffle_mixed_dims_is_a_permutation() {
        let f = Field::Rational;
        let s = shuffle_23(&f, 2, 3);
        assert_eq!(s.mul(&s.transpose()).unwrap(), Matrix::identity(&f, 36));
    }
}
