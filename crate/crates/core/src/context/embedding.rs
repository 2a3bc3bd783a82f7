//! S- and T-embedding contexts built from the structure constants of a
//! finite-dimensional algebra.

use super::{Coalgebra, ContextKind, MulContext};
use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use std::collections::{BTreeMap, HashMap};

/// `v_i v_j = Σ_k c_{ij}^k v_k` with unit `Σ_k d^k v_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraStructureConstants {
    field: Field,
    labels: Vec<String>,
    dual_labels: Vec<String>,
    /// `c[(i·n + j)·n + k]`.
    c: Vec<Scalar>,
    d: Vec<Scalar>,
}

impl AlgebraStructureConstants {
    /// Validates associativity and both unit laws.
    pub fn new(
        field: &Field,
        labels: Vec<String>,
        dual_labels: Vec<String>,
        c: Vec<Scalar>,
        d: Vec<Scalar>,
    ) -> Result<AlgebraStructureConstants> {
        let n = labels.len();
        if dual_labels.len() != n || c.len() != n * n * n || d.len() != n {
            return Err(Error::BadShape(format!("structure constants for dimension {n} have wrong sizes")));
        }
        let alg = AlgebraStructureConstants {
            field: field.clone(),
            labels,
            dual_labels,
            c: c.iter().map(|s| field.coerce(s)).collect::<Result<_>>()?,
            d: d.iter().map(|s| field.coerce(s)).collect::<Result<_>>()?,
        };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        let f = &self.field;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for q in 0..n {
                        let mut lhs = f.zero();
                        let mut rhs = f.zero();
                        for p in 0..n {
                            lhs = &lhs + &(self.c(i, j, p) * self.c(p, k, q));
                            rhs = &rhs + &(self.c(j, k, p) * self.c(i, p, q));
                        }
                        if lhs != rhs {
                            return Err(Error::InvalidParameters(format!(
                                "associativity fails on ({}, {}, {})",
                                self.labels[i], self.labels[j], self.labels[k]
                            )));
                        }
                    }
                }
            }
        }
        for j in 0..n {
            for k in 0..n {
                let mut left = f.zero();
                let mut right = f.zero();
                for i in 0..n {
                    left = &left + &(&self.d[i] * self.c(i, j, k));
                    right = &right + &(&self.d[i] * self.c(j, i, k));
                }
                let want = if j == k { f.one() } else { f.zero() };
                if left != want || right != want {
                    return Err(Error::InvalidParameters(format!("unit law fails on {}", self.labels[j])));
                }
            }
        }
        Ok(())
    }

    /// `Mat_m(K)` with basis `e_ij` and dual coordinates `a_ij`.
    pub fn matrix_algebra(field: &Field, m: usize) -> AlgebraStructureConstants {
        let n = m * m;
        let mut c = vec![field.zero(); n * n * n];
        for i in 0..m {
            for j in 0..m {
                for l in 0..m {
                    c[((i * m + j) * n + j * m + l) * n + i * m + l] = field.one();
                }
            }
        }
        let d = (0..n).map(|a| if a / m == a % m { field.one() } else { field.zero() }).collect();
        let name = |p: &str| (0..n).map(|a| format!("{p}{}{}", a / m + 1, a % m + 1)).collect();
        AlgebraStructureConstants::new(field, name("e"), name("a"), c, d).expect("Mat_m is a unital algebra")
    }

    /// The group algebra `K[G]` from a multiplication table over `0..|G|`;
    /// its S-embedding is the function algebra of `G` with the group coproduct.
    pub fn group_algebra(field: &Field, names: &[&str], table: &[Vec<usize>]) -> Result<AlgebraStructureConstants> {
        let n = names.len();
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&g| g >= n)) {
            return Err(Error::BadShape("group table must be |G|×|G| over 0..|G|".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidParameters("group table has no identity".into()))?;
        let mut c = vec![field.zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                c[(i * n + j) * n + table[i][j]] = field.one();
            }
        }
        let d = (0..n).map(|g| if g == identity { field.one() } else { field.zero() }).collect();
        AlgebraStructureConstants::new(
            field,
            names.iter().map(|s| s.to_string()).collect(),
            names.iter().map(|s| format!("d_{s}")).collect(),
            c,
            d,
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dual_labels(&self) -> &[String] {
        &self.dual_labels
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.c[(i * n + j) * n + k]
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.c
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.d
    }

    /// `Δ(v^k) = Σ c_{ij}^k v^i ⊗ v^j` on the dual basis.
    pub fn dual_delta(&self) -> Vec<SparseVec> {
        let n = self.dim();
        (0..n)
            .map(|k| {
                let mut v = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        let s = self.c(i, j, k);
                        if !s.is_zero() {
                            v.push((i * n + j, s.clone()));
                        }
                    }
                }
                v
            })
            .collect()
    }
}

/// Builds the graded slices: `P_k` is spanned by words of length `k`,
/// sorted when `commutative`.
fn embedding_context(alg: &AlgebraStructureConstants, max_degree: usize, commutative: bool) -> Result<MulContext> {
    if !(2..=4).contains(&max_degree) {
        return Err(Error::InvalidParameters(format!("max degree must be 2, 3 or 4, got {max_degree}")));
    }
    let n = alg.dim();
    let f = alg.field().clone();
    let mut bases: Vec<Vec<Vec<usize>>> = vec![(0..n).map(|a| vec![a]).collect()];
    for k in 1..max_degree {
        let mut next = Vec::new();
        for w in &bases[k - 1] {
            let start = if commutative { *w.last().unwrap() } else { 0 };
            for a in start..n {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        bases.push(next);
    }
    let index: Vec<HashMap<Vec<usize>, usize>> = bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect())
        .collect();
    let concat = |u: &[usize], w: &[usize]| {
        let mut v: Vec<usize> = u.iter().chain(w).copied().collect();
        if commutative {
            v.sort_unstable();
        }
        v
    };
    let mut tables = BTreeMap::new();
    for p in 1..max_degree {
        for q in 1..=(max_degree - p) {
            let mut t = Vec::with_capacity(bases[p - 1].len() * bases[q - 1].len());
            for u in &bases[p - 1] {
                for w in &bases[q - 1] {
                    t.push(vec![(index[p + q - 1][&concat(u, w)], f.one())]);
                }
            }
            tables.insert((p, q), t);
        }
    }
    let d1 = alg.dual_delta();
    let mut coalgebra = BTreeMap::new();
    coalgebra.insert(1, Coalgebra { delta: d1.clone(), eps: alg.unit().to_vec() });
    for k in 2..=max_degree {
        let dim = bases[k - 1].len();
        let prev = &coalgebra[&(k - 1)];
        let prev_dim = bases[k - 2].len();
        let mut delta = Vec::with_capacity(dim);
        let mut eps = Vec::with_capacity(dim);
        for w in &bases[k - 1] {
            let (head, last) = w.split_at(k - 1);
            let hi = index[k - 2][head];
            let mut acc = Vec::new();
            for (x, s) in &prev.delta[hi] {
                let (x1, x2) = (x / prev_dim, x % prev_dim);
                for (y, t) in &d1[last[0]] {
                    let (y1, y2) = (y / n, y % n);
                    let a = index[k - 1][&concat(&bases[k - 2][x1], &bases[0][y1])];
                    let b = index[k - 1][&concat(&bases[k - 2][x2], &bases[0][y2])];
                    acc.push((a * dim + b, s * t));
                }
            }
            delta.push(sparse::collect(acc));
            eps.push(&prev.eps[hi] * &alg.unit()[last[0]]);
        }
        coalgebra.insert(k, Coalgebra { delta, eps });
    }
    let levels = bases
        .iter()
        .map(|b| {
            b.iter()
                .map(|w| w.iter().map(|&a| alg.dual_labels()[a].as_str()).collect::<Vec<_>>().join("*"))
                .collect()
        })
        .collect();
    MulContext::new(f, ContextKind::Slice, levels, tables, None, coalgebra)
}

/// `E` = dual basis, `P_k` = symmetric degree-`k` monomials, `Δ`/`ε`
/// dual to the algebra structure and extended multiplicatively.
pub fn s_embedding_context(alg: &AlgebraStructureConstants, max_degree: usize) -> Result<MulContext> {
    embedding_context(alg, max_degree, true)
}

/// As [`s_embedding_context`] with `P_k` the degree-`k` words of the free
/// algebra.
pub fn t_embedding_context(alg: &AlgebraStructureConstants, max_degree: usize) -> Result<MulContext> {
    embedding_context(alg, max_degree, false)
}
