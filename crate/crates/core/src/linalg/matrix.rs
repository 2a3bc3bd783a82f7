use super::echelon::{self, EliminationStrategy};
use super::sparse::{self, SparseVec};
use super::subspace::Subspace;
use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};

/// Dense matrix over an exact field, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
    field: Field,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from rows, coercing every entry into `field`.
    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::BadShape(format!("row {i} has {} entries, expected {c}", row.len())));
            }
            for s in row {
                data.push(field.coerce(&s)?);
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data,
            field: field.clone(),
        })
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            data,
            field: field.clone(),
        }
    }

    pub fn from_int_rows(field: &Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(field, rows.iter().map(|r| r.iter().map(|&x| field.int(x)).collect()).collect())
            .expect("rectangular integer rows")
    }

    pub fn from_sparse_rows(field: &Field, cols: usize, rows: &[SparseVec]) -> Matrix {
        let mut m = Matrix::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, s) in r {
                m.data[i * cols + j] = s.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        (0..self.rows).map(|i| sparse::from_dense(self.row(i))).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn check_field(&self, o: &Matrix) -> Result<()> {
        if self.field != o.field {
            return Err(Error::FieldMismatch(self.field.name(), o.field.name()));
        }
        Ok(())
    }

    pub fn mul(&self, o: &Matrix) -> Result<Matrix> {
        self.check_field(o)?;
        if self.cols != o.rows {
            return Err(Error::BadShape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Matrix::zeros(&self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, o: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        self.check_field(o)?;
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::BadShape("operand shapes differ".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect(),
            field: self.field.clone(),
        })
    }

    pub fn add(&self, o: &Matrix) -> Result<Matrix> {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Matrix) -> Result<Matrix> {
        self.zip(o, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
            field: self.field.clone(),
        }
    }

    /// `1 - self` for a square matrix.
    pub fn complement(&self) -> Matrix {
        Matrix::identity(&self.field, self.rows)
            .sub(self)
            .expect("square matrix")
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>, usize) {
        self.rref_with(echelon::default_for(&self.field))
    }

    pub fn rref_with(&self, strategy: &dyn EliminationStrategy) -> (Matrix, Vec<usize>, usize) {
        let basis = strategy.reduce(&self.field, self.sparse_rows(), self.cols);
        let pivots: Vec<usize> = basis.iter().map(|r| r[0].0).collect();
        let rank = basis.len();
        (Matrix::from_sparse_rows(&self.field, self.cols, &basis), pivots, rank)
    }

    pub fn rank(&self) -> usize {
        self.rowspace().dim()
    }

    pub fn rowspace(&self) -> Subspace {
        Subspace::from_rows(&self.field, self.cols, self.sparse_rows())
    }

    /// `{x : self·x = 0}`.
    pub fn kernel(&self) -> Subspace {
        self.rowspace().annihilator()
    }

    /// Two-sided inverse by Gauss-Jordan on `[self | 1]`; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug: Vec<SparseVec> = (0..n)
            .map(|i| {
                let mut r = sparse::from_dense(self.row(i));
                r.push((n + i, self.field.one()));
                r
            })
            .collect();
        let red = echelon::default_for(&self.field).reduce(&self.field, aug, 2 * n);
        if red.len() < n || red.iter().enumerate().any(|(i, r)| r[0].0 != i) {
            return None;
        }
        let mut inv = Matrix::zeros(&self.field, n, n);
        for (i, r) in red.iter().enumerate() {
            for (j, s) in r {
                if *j >= n {
                    inv.set(i, j - n, s.clone());
                }
            }
        }
        Some(inv)
    }

    /// Applies the matrix to a sparse column vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for i in 0..self.rows {
            let mut acc = self.field.zero();
            for (j, s) in v {
                let a = self.get(i, *j);
                if !a.is_zero() {
                    acc = &acc + &(a * s);
                }
            }
            if !acc.is_zero() {
                out.push((i, acc));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_rank_one() {
        let f = Field::Rational;
        let (r, piv, rank) = Matrix::from_int_rows(&f, &[&[2, 4], &[1, 2]]).rref();
        assert_eq!(rank, 1);
        assert_eq!(piv, vec![0]);
        assert_eq!(r, Matrix::from_int_rows(&f, &[&[1, 2]]));
    }

    #[test]
    fn rref_identity_is_fixed() {
        let f = Field::Rational;
        let i3 = Matrix::identity(&f, 3);
        let (r, _, rank) = i3.rref();
        assert_eq!((r, rank), (i3, 3));
    }

    #[test]
    fn rref_over_function_field() {
        let f = Field::ratfunc("q").unwrap();
        let q = f.variable().unwrap();
        let m = Matrix::from_rows(&f, vec![vec![q.clone(), f.one()], vec![&q * &q, q.clone()]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let f = Field::Rational;
        assert_eq!(Matrix::identity(&f, 3).kernel().dim(), 0);
        let k = Matrix::from_int_rows(&f, &[&[1, -1]]).kernel();
        assert_eq!(k, Subspace::from_rows(&f, 2, vec![vec![(0, f.int(1)), (1, f.int(1))]]));
        let g = Matrix::from_int_rows(&f, &[&[0, 1, -1, 0]]).kernel();
        let expect = Matrix::from_int_rows(&f, &[&[1, 0, 0, 0], &[0, 1, 1, 0], &[0, 0, 0, 1]]).rowspace();
        assert_eq!(g, expect);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Field::Rational;
        let m = Matrix::from_int_rows(&f, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&f, 2));
        assert!(Matrix::from_int_rows(&f, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
