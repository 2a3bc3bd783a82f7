//! Binary operations on quadratic algebras, each behind [`ProductKind`] and
//! selectable by name.
//!
//! Generator order: white and black products use pairs `(v_i, w_j)` in
//! row-major order; the direct-sum kinds list the generators of the left
//! factor first.

use super::quadratic::QuadraticAlgebra;
use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{shuffle_23_index, SparseVec};

pub trait ProductKind: Send + Sync {
    fn name(&self) -> &'static str;
    fn labels(&self, a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Vec<String>;
    fn relation_rows(&self, a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Vec<SparseVec>;
}

pub struct White;
pub struct Black;
pub struct EvenTensor;
pub struct OddTensor;
pub struct Amalg;

pub fn kinds() -> Vec<Box<dyn ProductKind>> {
    vec![
        Box::new(White),
        Box::new(Black),
        Box::new(EvenTensor),
        Box::new(OddTensor),
        Box::new(Amalg),
    ]
}

pub fn kind_by_name(name: &str) -> Result<Box<dyn ProductKind>> {
    kinds()
        .into_iter()
        .find(|k| k.name() == name)
        .ok_or_else(|| Error::InvalidParameters(format!("unknown product kind `{name}`")))
}

/// Combines two algebras with the named product.
pub fn product(a: &QuadraticAlgebra, b: &QuadraticAlgebra, kind: &str) -> Result<QuadraticAlgebra> {
    product_with(a, b, kind_by_name(kind)?.as_ref())
}

pub fn product_with(a: &QuadraticAlgebra, b: &QuadraticAlgebra, kind: &dyn ProductKind) -> Result<QuadraticAlgebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().name(), b.field().name()));
    }
    let labels = kind.labels(a, b);
    Ok(QuadraticAlgebra::from_rows(a.field(), labels, kind.relation_rows(a, b)))
}

fn pair_labels(a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Vec<String> {
    let mut out = Vec::new();
    for x in a.labels() {
        for y in b.labels() {
            out.push(format!("({x},{y})"));
        }
    }
    out
}

fn sum_labels(a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Vec<String> {
    let clash = b.labels().iter().any(|l| a.labels().contains(l));
    let mut out: Vec<String> = a.labels().to_vec();
    out.extend(b.labels().iter().map(|l| if clash { format!("{l}_2") } else { l.clone() }));
    out
}

/// `r ⊗ s` with `r ∈ V⊗V`, `s ∈ W⊗W`, shuffled into `(V⊗W)^{⊗2}`.
pub(crate) fn shuffled_tensor(r: &SparseVec, s: &SparseVec, n: usize, m: usize) -> SparseVec {
    let mut out = Vec::with_capacity(r.len() * s.len());
    for (i, a) in r {
        for (j, b) in s {
            out.push((shuffle_23_index(n, m, i * m * m + j), a * b));
        }
    }
    crate::linalg::sparse::collect(out)
}

fn unit_vectors(field: &Field, dim: usize) -> Vec<SparseVec> {
    (0..dim).map(|i| vec![(i, field.one())]).collect()
}

impl ProductKind for White {
    fn name(&self) -> &'static str {
        "white"
    }

    fn labels(&self, a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Vec<String> {
        pair_labels(a, b)
    }

    fn relation_rows(&self, a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Vec<SparseVec> {
        let (n, m) = (a.generators(), b.generators());
        let f = a.field();
        let mut rows = Vec::new();
        for r in a.relations().basis() {
            for e in unit_vectors(f, m * m) {
                rows.push(shuffled_tensor(r, &e, n, m));
            }
        }
        for e in unit_vectors(f, n * n) {
            for s in b.relations().basis() {
                rows.push(shuffled_tensor(&e, s, n, m));
            }
        }
        rows
    }
}

impl ProductKind for Black {
    fn name(&self) -> &'static str {
        "black"
    }

    fn labels(&self, a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Vec<String> {
        pair_labels(a, b)
    }

    fn relation_rows(&self, a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Vec<SparseVec> {
        let (n, m) = (a.generators(), b.generators());
        let mut rows = Vec::new();
        for r in a.relations().basis() {
            for s in b.relations().basis() {
                rows.push(shuffled_tensor(r, s, n, m));
            }
        }
        rows
    }
}

fn direct_sum_rows(a: &QuadraticAlgebra, b: &QuadraticAlgebra, cross: Option<&Scalar>) -> Vec<SparseVec> {
    let (n, m) = (a.generators(), b.generators());
    let size = n + m;
    let f = a.field();
    let mut rows = Vec::new();
    for r in a.relations().basis() {
        rows.push(r.iter().map(|(p, s)| ((p / n) * size + p % n, s.clone())).collect());
    }
    for s in b.relations().basis() {
        rows.push(
            s.iter()
                .map(|(p, c)| ((n + p / m) * size + n + p % m, c.clone()))
                .collect(),
        );
    }
    if let Some(sign) = cross {
        for i in 0..n {
            for j in 0..m {
                let vw = i * size + n + j;
                let wv = (n + j) * size + i;
                rows.push(crate::linalg::sparse::collect(vec![(vw, f.one()), (wv, sign.clone())]));
            }
        }
    }
    rows
}

impl ProductKind for EvenTensor {
    fn name(&self) -> &'static str {
        "even_tensor"
    }

    fn labels(&self, a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Vec<String> {
        sum_labels(a, b)
    }

    fn relation_rows(&self, a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Vec<SparseVec> {
        direct_sum_rows(a, b, Some(&a.field().int(-1)))
    }
}

impl ProductKind for OddTensor {
    fn name(&self) -> &'static str {
        "odd_tensor"
    }

    fn labels(&self, a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Vec<String> {
        sum_labels(a, b)
    }

    fn relation_rows(&self, a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Vec<SparseVec> {
        direct_sum_rows(a, b, Some(&a.field().one()))
    }
}

impl ProductKind for Amalg {
    fn name(&self) -> &'static str {
        "amalg"
    }

    fn labels(&self, a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Vec<String> {
        sum_labels(a, b)
    }

    fn relation_rows(&self, a: &QuadraticAlgebra, b: &QuadraticAlgebra) -> Vec<SparseVec> {
        direct_sum_rows(a, b, None)
    }
}

#[cfg(test)]
mod tests {
    use super::super::standard::antisym;
    use super::*;

    #[test]
    fn white_and_black_dimensions() {
        let f = Field::Rational;
        let p = QuadraticAlgebra::x(&antisym(&f, 2));
        assert_eq!(product(&p, &p, "white").unwrap().relations().dim(), 7);
        assert_eq!(product(&p, &p, "black").unwrap().relations().dim(), 1);
    }

    #[test]
    fn even_tensor_of_two_lines() {
        let f = Field::Rational;
        let x = QuadraticAlgebra::tensor(&f, 1);
        let y = QuadraticAlgebra::tensor(&f, 1).with_labels(vec!["y".into()]).unwrap();
        let e = product(&x, &y, "even_tensor").unwrap();
        assert_eq!(e.relation_lines(), vec!["x1*y - y*x1 = 0"]);
        let o = product(&x, &y, "odd_tensor").unwrap();
        assert_eq!(o.relation_lines(), vec!["x1*y + y*x1 = 0"]);
        assert_eq!(product(&x, &y, "amalg").unwrap().relations().dim(), 0);
    }

    #[test]
    fn unknown_kind() {
        let f = Field::Rational;
        let x = QuadraticAlgebra::tensor(&f, 1);
        assert!(product(&x, &x, "grey").is_err());
    }
}
