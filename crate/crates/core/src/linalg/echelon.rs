//! Row reduction engines. Every engine returns the same canonical reduced
//! row-echelon basis (rows sorted by pivot, leading coefficient 1), so the
//! choice only affects running time.

use super::sparse::{self, SparseVec};
use crate::arith::{Field, Scalar};
use std::collections::BTreeMap;

pub trait EliminationStrategy: Send + Sync {
    fn name(&self) -> &'static str;

    /// Reduced row-echelon basis of the span of `rows` inside `F^ncols`.
    fn reduce(&self, field: &Field, rows: Vec<SparseVec>, ncols: usize) -> Vec<SparseVec>;
}

/// Incremental sparse Gauss-Jordan elimination.
pub struct SparseGauss;

/// Bareiss fraction-free forward elimination on dense rows, then
/// normalization and back substitution.
pub struct FractionFree;

/// Textbook dense Gauss-Jordan elimination.
pub struct DenseGauss;

pub fn registry() -> Vec<Box<dyn EliminationStrategy>> {
    vec![Box::new(SparseGauss), Box::new(FractionFree), Box::new(DenseGauss)]
}

pub fn by_name(name: &str) -> Option<Box<dyn EliminationStrategy>> {
    registry().into_iter().find(|s| s.name() == name)
}

/// The engine used when none is requested.
pub fn default_for(field: &Field) -> &'static dyn EliminationStrategy {
    match field {
        Field::Rational => &SparseGauss,
        Field::RatFunc(_) => &FractionFree,
    }
}

impl EliminationStrategy for SparseGauss {
    fn name(&self) -> &'static str {
        "sparse-gauss"
    }

    fn reduce(&self, _field: &Field, rows: Vec<SparseVec>, _ncols: usize) -> Vec<SparseVec> {
        let mut ech = Echelon::default();
        for r in rows {
            ech.insert(r);
        }
        ech.into_rref()
    }
}

/// Echelon basis that accepts rows one at a time.
#[derive(Default, Clone)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the basis; inserts the remainder when nonzero.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, mut row: SparseVec) -> bool {
        loop {
            let Some((lead, c)) = row.first().cloned() else {
                return false;
            };
            match self.rows.get(&lead) {
                Some(p) => row = sparse::axpy(&row, &-&c, p),
                None => {
                    let inv = c.inv().expect("leading entry is nonzero");
                    self.rows.insert(lead, sparse::scale(&row, &inv));
                    return true;
                }
            }
        }
    }

    pub fn into_rref(self) -> Vec<SparseVec> {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (p, row) in self.rows.into_iter().rev() {
            let mut r = row;
            let hits: Vec<(usize, Scalar)> = r
                .iter()
                .filter(|(c, _)| *c != p && done.contains_key(c))
                .cloned()
                .collect();
            for (c, v) in hits {
                let cur = sparse::get(&r, c).cloned();
                if let Some(cur) = cur {
                    debug_assert_eq!(cur, v);
                    r = sparse::axpy(&r, &-&cur, &done[&c]);
                }
            }
            done.insert(p, r);
        }
        debug_assert_eq!(done.len(), pivots.len());
        done.into_values().collect()
    }
}

fn dense_rows(field: &Field, rows: &[SparseVec], ncols: usize) -> Vec<Vec<Scalar>> {
    rows.iter().map(|r| sparse::to_dense(r, ncols, field)).collect()
}

/// Normalizes an upper echelon form (given as dense rows with distinct
/// leading columns, in increasing order) to reduced form.
fn back_substitute(mut ech: Vec<Vec<Scalar>>) -> Vec<SparseVec> {
    let lead = |r: &Vec<Scalar>| r.iter().position(|s| !s.is_zero()).unwrap();
    for r in ech.iter_mut() {
        let p = lead(r);
        let inv = r[p].inv().unwrap();
        for s in r.iter_mut().skip(p) {
            *s = &*s * &inv;
        }
    }
    for i in (0..ech.len()).rev() {
        let p = lead(&ech[i]);
        for k in 0..i {
            let c = ech[k][p].clone();
            if c.is_zero() {
                continue;
            }
            let (top, bottom) = ech.split_at_mut(i);
            for (dst, src) in top[k].iter_mut().zip(bottom[0].iter()).skip(p) {
                if !src.is_zero() {
                    *dst = &*dst - &(&c * src);
                }
            }
        }
    }
    ech.iter().map(|r| sparse::from_dense(r)).collect()
}

impl EliminationStrategy for FractionFree {
    fn name(&self) -> &'static str {
        "fraction-free"
    }

    fn reduce(&self, field: &Field, rows: Vec<SparseVec>, ncols: usize) -> Vec<SparseVec> {
        let mut a = dense_rows(field, &rows, ncols);
        let nrows = a.len();
        let mut prev = field.one();
        let mut r = 0;
        for col in 0..ncols {
            if r == nrows {
                break;
            }
            let Some(sel) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, sel);
            let piv = a[r][col].clone();
            for i in (r + 1)..nrows {
                let f = a[i][col].clone();
                for j in 0..ncols {
                    if j < col {
                        continue;
                    }
                    let v = &(&piv * &a[i][j]) - &(&f * &a[r][j]);
                    a[i][j] = v.div(&prev).expect("Bareiss divisor is nonzero");
                }
            }
            prev = piv;
            r += 1;
        }
        a.truncate(r);
        back_substitute(a)
    }
}

impl EliminationStrategy for DenseGauss {
    fn name(&self) -> &'static str {
        "dense-gauss"
    }

    fn reduce(&self, field: &Field, rows: Vec<SparseVec>, ncols: usize) -> Vec<SparseVec> {
        let mut a = dense_rows(field, &rows, ncols);
        let nrows = a.len();
        let mut r = 0;
        for col in 0..ncols {
            if r == nrows {
                break;
            }
            let Some(sel) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, sel);
            let inv = a[r][col].inv().unwrap();
            for j in col..ncols {
                a[r][j] = &a[r][j] * &inv;
            }
            for i in 0..nrows {
                if i == r || a[i][col].is_zero() {
                    continue;
                }
                let f = a[i][col].clone();
                for j in col..ncols {
                    if !a[r][j].is_zero() {
                        a[i][j] = &a[i][j] - &(&f * &a[r][j]);
                    }
                }
            }
            r += 1;
        }
        a.truncate(r);
        a.iter().map(|row| sparse::from_dense(row)).collect()
    }
}
