use super::{ContextKind, MulContext};
use crate::algebra::{word_label, QuadraticAlgebra, DEFAULT_DEGREE_CAP};
use crate::error::{Error, Result};
use crate::linalg::{sparse, Subspace};
use std::collections::BTreeMap;

/// Degree-`k` quotient data: the ideal and the positions of the chosen
/// representatives (pivot complement) in `V^{⊗k}`.
struct Level {
    ideal: Subspace,
    reps: Vec<usize>,
    position: BTreeMap<usize, usize>,
}

impl Level {
    fn project(&self, v: &sparse::SparseVec) -> sparse::SparseVec {
        self.ideal
            .reduce(v)
            .into_iter()
            .map(|(i, s)| (self.position[&i], s))
            .collect()
    }
}

/// Context whose `P_k` is the degree-`k` component of `A`, represented by
/// the words outside the pivot set of the degree-`k` ideal.
pub fn qa_context(a: &QuadraticAlgebra, max_degree: usize) -> Result<MulContext> {
    if !(2..=4).contains(&max_degree) {
        return Err(Error::InvalidParameters(format!("max degree must be 2, 3 or 4, got {max_degree}")));
    }
    let n = a.generators();
    let f = a.field();
    let mut levels = Vec::with_capacity(max_degree);
    for k in 1..=max_degree {
        let ideal = a.ideal(k, DEFAULT_DEGREE_CAP)?;
        let pivots: std::collections::BTreeSet<usize> = ideal.pivots().into_iter().collect();
        let reps: Vec<usize> = (0..n.pow(k as u32)).filter(|i| !pivots.contains(i)).collect();
        let position = reps.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        levels.push(Level { ideal, reps, position });
    }
    let mut tables = BTreeMap::new();
    for p in 1..max_degree {
        for q in 1..=(max_degree - p) {
            let post = n.pow(q as u32);
            let target = &levels[p + q - 1];
            let mut t = Vec::with_capacity(levels[p - 1].reps.len() * levels[q - 1].reps.len());
            for &u in &levels[p - 1].reps {
                for &w in &levels[q - 1].reps {
                    t.push(target.project(&vec![(u * post + w, f.one())]));
                }
            }
            tables.insert((p, q), t);
        }
    }
    let labels = levels
        .iter()
        .enumerate()
        .map(|(k, l)| l.reps.iter().map(|&i| word_label(a.labels(), i, k + 1)).collect())
        .collect();
    MulContext::new(f.clone(), ContextKind::Qa, labels, tables, None, BTreeMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::std_idempotent;
    use crate::arith::Field;

    fn unit(i: usize) -> sparse::SparseVec {
        vec![(i, Field::Rational.one())]
    }

    #[test]
    fn polynomial_algebra_context() {
        let x = QuadraticAlgebra::x(&std_idempotent(&Field::Rational, "antisym:2").unwrap());
        let c = qa_context(&x, 2).unwrap();
        assert_eq!(c.entry_dim(), 2);
        assert_eq!(c.dim(2).unwrap(), 3);
        assert_eq!(c.mul(1, &unit(1), 1, &unit(0)).unwrap(), c.mul(1, &unit(0), 1, &unit(1)).unwrap());
    }

    #[test]
    fn grassmann_square_vanishes() {
        let xi = QuadraticAlgebra::xi(&std_idempotent(&Field::Rational, "antisym:2").unwrap());
        let c = qa_context(&xi, 2).unwrap();
        assert!(c.mul(1, &unit(0), 1, &unit(0)).unwrap().is_empty());
    }

    #[test]
    fn tensor_algebra_is_free() {
        let t = QuadraticAlgebra::tensor(&Field::Rational, 2);
        let c = qa_context(&t, 2).unwrap();
        assert_eq!(c.dim(2).unwrap(), 4);
        let mut images: Vec<_> = (0..4).map(|i| c.mul(1, &unit(i / 2), 1, &unit(i % 2)).unwrap()).collect();
        images.dedup();
        assert_eq!(images.len(), 4);
    }

    #[test]
    fn degree_bounds() {
        let t = QuadraticAlgebra::tensor(&Field::Rational, 2);
        assert!(qa_context(&t, 5).is_err());
        let c = qa_context(&t, 2).unwrap();
        assert!(matches!(c.dim(3), Err(Error::ContextTooShallow(_))));
    }
}
