use crate::arith::Field;
use crate::context::MulContext;
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use crate::linalg::Matrix;
use std::sync::Arc;

/// A rectangular matrix whose entries are vectors in the entry space `E`
/// of a context.
#[derive(Clone, Debug)]
pub struct FirstOrderMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<SparseVec>,
    ctx: Arc<MulContext>,
}

impl PartialEq for FirstOrderMatrix {
    fn eq(&self, o: &FirstOrderMatrix) -> bool {
        self.rows == o.rows && self.cols == o.cols && self.entries == o.entries && same_context(&self.ctx, &o.ctx)
    }
}

pub(crate) fn same_context(a: &Arc<MulContext>, b: &Arc<MulContext>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FirstOrderMatrix {
    pub fn new(ctx: &Arc<MulContext>, rows: usize, cols: usize, entries: Vec<SparseVec>) -> Result<FirstOrderMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::BadShape(format!("{rows}x{cols} matrix needs {} entries", rows * cols)));
        }
        let d = ctx.entry_dim();
        if entries.iter().flatten().any(|(i, _)| *i >= d) {
            return Err(Error::BadShape(format!("entry vector outside the {d}-dimensional entry space")));
        }
        let f = ctx.field();
        let entries = entries
            .into_iter()
            .map(|v| {
                let v = v
                    .into_iter()
                    .map(|(i, s)| Ok((i, f.coerce(&s)?)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(sparse::collect(v))
            })
            .collect::<Result<_>>()?;
        Ok(FirstOrderMatrix {
            rows,
            cols,
            entries,
            ctx: ctx.clone(),
        })
    }

    pub fn from_fn(
        ctx: &Arc<MulContext>,
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> SparseVec,
    ) -> Result<FirstOrderMatrix> {
        let entries = (0..rows * cols).map(|p| f(p / cols, p % cols)).collect();
        FirstOrderMatrix::new(ctx, rows, cols, entries)
    }

    /// A scalar matrix `K` as `K^i_j · 1` (requires a unit).
    pub fn from_scalar(ctx: &Arc<MulContext>, k: &Matrix) -> Result<FirstOrderMatrix> {
        let u = ctx
            .unit()
            .ok_or_else(|| Error::Precondition("scalar matrices need a context with a unit".into()))?
            .index;
        FirstOrderMatrix::from_fn(ctx, k.rows(), k.cols(), |i, j| {
            let s = k.get(i, j);
            if s.is_zero() {
                Vec::new()
            } else {
                vec![(u, s.clone())]
            }
        })
    }

    pub fn identity(ctx: &Arc<MulContext>, n: usize) -> Result<FirstOrderMatrix> {
        FirstOrderMatrix::from_scalar(ctx, &Matrix::identity(ctx.field(), n))
    }

    pub fn zeros(ctx: &Arc<MulContext>, rows: usize, cols: usize) -> FirstOrderMatrix {
        FirstOrderMatrix {
            rows,
            cols,
            entries: vec![Vec::new(); rows * cols],
            ctx: ctx.clone(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn context(&self) -> &Arc<MulContext> {
        &self.ctx
    }

    pub fn field(&self) -> &Field {
        self.ctx.field()
    }

    pub fn entry(&self, i: usize, j: usize) -> &SparseVec {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[SparseVec] {
        &self.entries
    }

    pub fn transpose(&self) -> FirstOrderMatrix {
        let entries = (0..self.rows * self.cols)
            .map(|p| self.entry(p % self.rows, p / self.rows).clone())
            .collect();
        FirstOrderMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
            ctx: self.ctx.clone(),
        }
    }

    /// The same entries over another context with the same entry space.
    pub fn with_context(&self, ctx: &Arc<MulContext>) -> Result<FirstOrderMatrix> {
        if ctx.entry_dim() != self.ctx.entry_dim() || ctx.field() != self.ctx.field() {
            return Err(Error::ContextMismatch("entry spaces differ".into()));
        }
        Ok(FirstOrderMatrix {
            ctx: ctx.clone(),
            ..self.clone()
        })
    }

    /// Linear combination `Σ c·M` of matrices of equal shape and context.
    pub fn combine(&self, o: &FirstOrderMatrix, c: &crate::arith::Scalar) -> Result<FirstOrderMatrix> {
        self.check_context(o)?;
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::BadShape("matrices differ in shape".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(a, b)| sparse::axpy(a, c, b))
            .collect();
        Ok(FirstOrderMatrix {
            entries,
            ..self.clone()
        })
    }

    pub(crate) fn check_context(&self, o: &FirstOrderMatrix) -> Result<()> {
        if !same_context(&self.ctx, &o.ctx) {
            return Err(Error::ContextMismatch("matrices live over different contexts".into()));
        }
        Ok(())
    }

    pub fn render_entry(&self, i: usize, j: usize) -> String {
        self.ctx.render(1, self.entry(i, j))
    }

    /// Rows of rendered entries.
    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.render_entry(i, j)).collect())
            .collect()
    }
}
