use crate::arith::Field;
use crate::error::{Error, Result};
use crate::linalg::{kron, shuffle_23, swap, Matrix};

/// An idempotent operator `E` on `K^n ⊗ K^n`, stored as an `n²×n²` matrix
/// with `E^{ij}_{kl}` at row `(ij)`, column `(kl)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotent {
    n: usize,
    matrix: Matrix,
}

pub(crate) fn perfect_square_root(x: usize) -> Option<usize> {
    let r = (x as f64).sqrt().round() as usize;
    (r * r == x).then_some(r)
}

impl Idempotent {
    /// Validates `E² = E`; the error carries the first nonzero entry of `E² − E`.
    pub fn new(matrix: Matrix) -> Result<Idempotent> {
        if !matrix.is_square() {
            return Err(Error::BadShape(format!(
                "idempotent must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let n = perfect_square_root(matrix.rows())
            .ok_or_else(|| Error::BadShape(format!("side {} is not a perfect square", matrix.rows())))?;
        let diff = matrix.mul(&matrix)?.sub(&matrix)?;
        for i in 0..diff.rows() {
            for j in 0..diff.cols() {
                if !diff.get(i, j).is_zero() {
                    return Err(Error::NotIdempotent {
                        row: i + 1,
                        col: j + 1,
                        value: diff.get(i, j).to_string(),
                    });
                }
            }
        }
        Ok(Idempotent { n, matrix })
    }

    pub fn zero(field: &Field, n: usize) -> Idempotent {
        Idempotent {
            n,
            matrix: Matrix::zeros(field, n * n, n * n),
        }
    }

    pub fn one(field: &Field, n: usize) -> Idempotent {
        Idempotent {
            n,
            matrix: Matrix::identity(field, n * n),
        }
    }

    /// Side of the underlying space `K^n`.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> &Field {
        self.matrix.field()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// `1 − E` as an idempotent.
    pub fn complement(&self) -> Idempotent {
        Idempotent {
            n: self.n,
            matrix: self.matrix.complement(),
        }
    }

    /// `Eᵀ` as an idempotent.
    pub fn transpose(&self) -> Idempotent {
        Idempotent {
            n: self.n,
            matrix: self.matrix.transpose(),
        }
    }

    /// `E^{(21)} = σ·E·σ`, entries `E^{ji}_{lk}`.
    pub fn conj21(&self) -> Idempotent {
        let s = swap(self.field(), self.n);
        Idempotent {
            n: self.n,
            matrix: s.mul(&self.matrix).unwrap().mul(&s).unwrap(),
        }
    }

    fn check_fields(&self, o: &Idempotent) -> Result<()> {
        if self.field() != o.field() {
            return Err(Error::FieldMismatch(self.field().name(), o.field().name()));
        }
        Ok(())
    }

    /// `σ^{(23)}(B⊗1 + 1⊗C − B⊗C)σ^{(23)}` on `K^m ⊗ K^n`; presents the white product.
    pub fn tep(b: &Idempotent, c: &Idempotent) -> Result<Idempotent> {
        b.check_fields(c)?;
        let f = b.field();
        let (m, n) = (b.n, c.n);
        let b1 = kron(&b.matrix, &Matrix::identity(f, n * n))?;
        let c1 = kron(&Matrix::identity(f, m * m), &c.matrix)?;
        let bc = kron(&b.matrix, &c.matrix)?;
        let inner = b1.add(&c1)?.sub(&bc)?;
        Ok(Idempotent {
            n: m * n,
            matrix: conjugate_by_shuffle(&inner, m, n),
        })
    }

    /// `σ^{(23)}(B⊗C)σ^{(23)}`; presents the black product.
    pub fn black_tep(b: &Idempotent, c: &Idempotent) -> Result<Idempotent> {
        b.check_fields(c)?;
        let inner = kron(&b.matrix, &c.matrix)?;
        Ok(Idempotent {
            n: b.n * c.n,
            matrix: conjugate_by_shuffle(&inner, b.n, c.n),
        })
    }

    /// Block idempotent on `K^{m+n}` with the antisymmetrizer on mixed
    /// pairs; presents the even tensor product.
    pub fn dis(b: &Idempotent, c: &Idempotent) -> Result<Idempotent> {
        let mut d = Self::cop(b, c)?;
        let f = b.field().clone();
        let (m, n) = (b.n, c.n);
        let size = m + n;
        let half = f.ratio(1, 2);
        let mhalf = f.ratio(-1, 2);
        for i in 0..m {
            for a in m..size {
                let ia = i * size + a;
                let ai = a * size + i;
                d.matrix.set(ia, ia, half.clone());
                d.matrix.set(ai, ai, half.clone());
                d.matrix.set(ia, ai, mhalf.clone());
                d.matrix.set(ai, ia, mhalf.clone());
            }
        }
        debug_assert!(n > 0 || m > 0);
        Ok(d)
    }

    /// Block idempotent on `K^{m+n}` with only the `B` and `C` blocks;
    /// presents the coproduct.
    pub fn cop(b: &Idempotent, c: &Idempotent) -> Result<Idempotent> {
        b.check_fields(c)?;
        let f = b.field();
        let (m, n) = (b.n, c.n);
        let size = m + n;
        let mut d = Matrix::zeros(f, size * size, size * size);
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        let v = b.matrix.get(i * m + j, k * m + l);
                        if !v.is_zero() {
                            d.set(i * size + j, k * size + l, v.clone());
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let v = c.matrix.get(i * n + j, k * n + l);
                        if !v.is_zero() {
                            d.set((m + i) * size + m + j, (m + k) * size + m + l, v.clone());
                        }
                    }
                }
            }
        }
        Ok(Idempotent { n: size, matrix: d })
    }
}

/// `S·X·Sᵀ` with `S = shuffle_23(m, n)`.
fn conjugate_by_shuffle(x: &Matrix, m: usize, n: usize) -> Matrix {
    let s = shuffle_23(x.field(), m, n);
    s.mul(x).unwrap().mul(&s.transpose()).unwrap()
}
