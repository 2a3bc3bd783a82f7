use super::echelon::{self, EliminationStrategy};
use super::matrix::Matrix;
use super::sparse::{self, SparseVec};
use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};

/// A subspace of `F^ambient` held as its reduced row-echelon basis.
/// Equal subspaces have identical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn from_rows(field: &Field, ambient: usize, rows: Vec<SparseVec>) -> Subspace {
        Subspace::from_rows_with(echelon::default_for(field), field, ambient, rows)
    }

    pub fn from_rows_with(
        strategy: &dyn EliminationStrategy,
        field: &Field,
        ambient: usize,
        rows: Vec<SparseVec>,
    ) -> Subspace {
        debug_assert!(rows.iter().all(|r| r.iter().all(|(i, _)| *i < ambient)));
        Subspace {
            ambient,
            field: field.clone(),
            basis: strategy.reduce(field, rows, ambient),
        }
    }

    /// Wraps rows already in canonical reduced row-echelon form.
    pub(crate) fn from_rref(field: &Field, ambient: usize, basis: Vec<SparseVec>) -> Subspace {
        Subspace {
            ambient,
            field: field.clone(),
            basis,
        }
    }

    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace::from_rref(field, ambient, Vec::new())
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        let basis = (0..ambient).map(|i| vec![(i, field.one())]).collect();
        Subspace::from_rref(field, ambient, basis)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|r| r[0].0).collect()
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_sparse_rows(&self.field, self.ambient, &self.basis)
    }

    /// Remainder of `v` modulo the subspace: the unique representative
    /// supported on non-pivot coordinates.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for row in &self.basis {
            let p = row[0].0;
            if let Some(c) = sparse::get(v, p) {
                out = sparse::axpy(&out, &-c, row);
            }
        }
        out
    }

    pub fn contains_vec(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    fn check(&self, o: &Subspace) -> Result<()> {
        if self.field != o.field {
            return Err(Error::FieldMismatch(self.field.name(), o.field.name()));
        }
        if self.ambient != o.ambient {
            return Err(Error::BadShape(format!(
                "ambient dimensions {} and {} differ",
                self.ambient, o.ambient
            )));
        }
        Ok(())
    }

    pub fn contains(&self, o: &Subspace) -> Result<bool> {
        self.check(o)?;
        Ok(o.basis.iter().all(|v| self.contains_vec(v)))
    }

    pub fn sum(&self, o: &Subspace) -> Result<Subspace> {
        self.check(o)?;
        let rows = self.basis.iter().chain(&o.basis).cloned().collect();
        Ok(Subspace::from_rows(&self.field, self.ambient, rows))
    }

    /// Intersection via the left kernel of the stacked bases.
    pub fn intersect(&self, o: &Subspace) -> Result<Subspace> {
        self.check(o)?;
        let (a, b) = (self.dim(), o.dim());
        let stacked = Matrix::from_sparse_rows(
            &self.field,
            self.ambient,
            &self.basis.iter().chain(&o.basis).cloned().collect::<Vec<_>>(),
        );
        let left = stacked.transpose().kernel();
        let mut rows = Vec::new();
        for coeffs in left.basis() {
            let mut acc: SparseVec = Vec::new();
            for (k, c) in coeffs {
                if *k < a {
                    acc = sparse::axpy(&acc, c, &self.basis[*k]);
                }
            }
            rows.push(acc);
        }
        debug_assert!(left.basis().iter().all(|r| r.iter().all(|(k, _)| *k < a + b)));
        Ok(Subspace::from_rows(&self.field, self.ambient, rows))
    }

    pub fn equals(&self, o: &Subspace) -> Result<bool> {
        self.check(o)?;
        Ok(self == o)
    }

    /// `{x : ⟨x, s⟩ = 0 for all s}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        let pivots = self.pivots();
        let mut is_pivot = vec![false; self.ambient];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::new();
        for f in (0..self.ambient).filter(|&c| !is_pivot[c]) {
            let mut v: Vec<(usize, Scalar)> = vec![(f, self.field.one())];
            for row in &self.basis {
                if let Some(c) = sparse::get(row, f) {
                    v.push((row[0].0, -c));
                }
            }
            rows.push(sparse::collect(v));
        }
        Subspace::from_rows(&self.field, self.ambient, rows)
    }

    /// Image under a linear map on coordinates given as a sparse-vector
    /// transform.
    pub fn map(&self, ambient: usize, f: impl Fn(&SparseVec) -> SparseVec) -> Subspace {
        Subspace::from_rows(&self.field, ambient, self.basis.iter().map(f).collect())
    }
}
