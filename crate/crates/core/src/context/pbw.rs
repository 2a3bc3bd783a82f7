//! Degree-bounded slices of universal enveloping algebras in the PBW basis.

use super::{ContextKind, MulContext, Unit};
use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use rand::Rng;
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

/// Structure constants `[e_a, e_b] = Σ_c γ_{ab}^c e_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    field: Field,
    labels: Vec<String>,
    /// Indexed by `a·N + b`.
    bracket: Vec<SparseVec>,
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity.
    pub fn new(field: &Field, labels: Vec<String>, bracket: Vec<SparseVec>) -> Result<LieAlgebra> {
        let n = labels.len();
        if bracket.len() != n * n || bracket.iter().flatten().any(|(c, _)| *c >= n) {
            return Err(Error::BadShape(format!("bracket table must have {} entries over {n} generators", n * n)));
        }
        let lie = LieAlgebra {
            field: field.clone(),
            labels,
            bracket,
        };
        for a in 0..n {
            for b in 0..n {
                let sum = sparse::axpy(&lie.bracket[a * n + b], &field.one(), &lie.bracket[b * n + a]);
                if !sum.is_empty() {
                    return Err(Error::InvalidParameters(format!(
                        "bracket is not antisymmetric at ({}, {})",
                        lie.labels[a], lie.labels[b]
                    )));
                }
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    let j = [(a, b, c), (b, c, a), (c, a, b)]
                        .iter()
                        .fold(Vec::new(), |acc, &(x, y, z)| {
                            let inner = lie.bracket_vec(&lie.bracket[x * n + y], &vec![(z, field.one())]);
                            sparse::axpy(&acc, &field.one(), &inner)
                        });
                    if !j.is_empty() {
                        return Err(Error::Jacobi(
                            lie.labels[a].clone(),
                            lie.labels[b].clone(),
                            lie.labels[c].clone(),
                        ));
                    }
                }
            }
        }
        Ok(lie)
    }

    /// `gl_m` with `[E_ij, E_kl] = δ_jk E_il − δ_li E_kj`; `E_ij` at `i·m + j`.
    pub fn gl(field: &Field, m: usize) -> LieAlgebra {
        let n = m * m;
        let mut bracket = vec![Vec::new(); n * n];
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        let mut v = Vec::new();
                        if j == k {
                            v.push((i * m + l, field.one()));
                        }
                        if l == i {
                            v.push((k * m + j, field.int(-1)));
                        }
                        bracket[(i * m + j) * n + k * m + l] = sparse::collect(v);
                    }
                }
            }
        }
        let labels = (0..n).map(|a| format!("E{}{}", a / m + 1, a % m + 1)).collect();
        LieAlgebra::new(field, labels, bracket).expect("gl_m satisfies Jacobi")
    }

    /// The abelian Lie algebra on the given generators.
    pub fn abelian(field: &Field, labels: Vec<String>) -> LieAlgebra {
        let n = labels.len();
        LieAlgebra {
            field: field.clone(),
            labels,
            bracket: vec![Vec::new(); n * n],
        }
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

    pub fn bracket(&self, a: usize, b: usize) -> &SparseVec {
        &self.bracket[a * self.dim() + b]
    }

    pub fn brackets(&self) -> &[SparseVec] {
        &self.bracket
    }

    fn bracket_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = Vec::new();
        for (a, s) in x {
            for (b, t) in y {
                sparse::add_scaled(&mut acc, &(s * t), self.bracket(*a, *b));
            }
        }
        acc
    }
}

/// Element of `U(g)` in the PBW basis: sorted words with coefficients.
pub type PbwElement = BTreeMap<Vec<usize>, Scalar>;

/// Normal-form engine for `U(g)`, memoising reduced words.
pub struct PbwAlgebra {
    lie: LieAlgebra,
    memo: RefCell<HashMap<Vec<usize>, PbwElement>>,
}

fn add_term(acc: &mut PbwElement, word: Vec<usize>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&word) {
        Some(v) => {
            *v = &*v + &c;
            if v.is_zero() {
                acc.remove(&word);
            }
        }
        None => {
            acc.insert(word, c);
        }
    }
}

impl PbwAlgebra {
    pub fn new(lie: LieAlgebra) -> PbwAlgebra {
        PbwAlgebra {
            lie,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    /// The two words produced by rewriting the inversion at `i`:
    /// `u a b v → u b a v + Σ_c γ_{ab}^c u c v`.
    fn rewrite(&self, word: &[usize], i: usize) -> Vec<(Vec<usize>, Scalar)> {
        let (a, b) = (word[i], word[i + 1]);
        let mut swapped = word.to_vec();
        swapped.swap(i, i + 1);
        let mut out = vec![(swapped, self.lie.field.one())];
        for (c, s) in self.lie.bracket(a, b) {
            let mut w = Vec::with_capacity(word.len() - 1);
            w.extend_from_slice(&word[..i]);
            w.push(*c);
            w.extend_from_slice(&word[i + 2..]);
            out.push((w, s.clone()));
        }
        out
    }

    /// Normal form of a word, rewriting the leftmost inversion first.
    pub fn normal_form(&self, word: &[usize]) -> PbwElement {
        if let Some(hit) = self.memo.borrow().get(word) {
            return hit.clone();
        }
        let result = match word.windows(2).position(|w| w[0] > w[1]) {
            None => PbwElement::from([(word.to_vec(), self.lie.field.one())]),
            Some(i) => {
                let mut acc = PbwElement::new();
                for (w, c) in self.rewrite(word, i) {
                    for (nw, nc) in self.normal_form(&w) {
                        add_term(&mut acc, nw, &c * &nc);
                    }
                }
                acc
            }
        };
        self.memo.borrow_mut().insert(word.to_vec(), result.clone());
        result
    }

    /// Normal form rewriting a randomly chosen inversion at each step.
    pub fn normal_form_random<R: Rng + ?Sized>(&self, word: &[usize], rng: &mut R) -> PbwElement {
        let inversions: Vec<usize> = word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i)
            .collect();
        if inversions.is_empty() {
            return PbwElement::from([(word.to_vec(), self.lie.field.one())]);
        }
        let i = inversions[rng.gen_range(0..inversions.len())];
        let mut acc = PbwElement::new();
        for (w, c) in self.rewrite(word, i) {
            for (nw, nc) in self.normal_form_random(&w, rng) {
                add_term(&mut acc, nw, &c * &nc);
            }
        }
        acc
    }
}

/// Sorted words of length ≤ `k`, ordered by length then lexicographically.
fn monomials(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for w in &layer {
            let start = w.last().copied().unwrap_or(0);
            for a in start..n {
                let mut v: Vec<usize> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn monomial_label(labels: &[String], w: &[usize]) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.iter().map(|&a| labels[a].as_str()).collect::<Vec<_>>().join("*")
    }
}

/// Context on `E = span{1, e_a}` with `P_k` the ordered monomials of degree
/// at most `k`, products straightened in `U(g)`.
pub fn pbw_context(lie: &LieAlgebra, max_degree: usize) -> Result<MulContext> {
    if !(2..=4).contains(&max_degree) {
        return Err(Error::InvalidParameters(format!("max degree must be 2, 3 or 4, got {max_degree}")));
    }
    let n = lie.dim();
    let f = lie.field().clone();
    let engine = PbwAlgebra::new(lie.clone());
    let bases: Vec<Vec<Vec<usize>>> = (1..=max_degree).map(|k| monomials(n, k)).collect();
    let index: Vec<HashMap<&[usize], usize>> = bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect())
        .collect();
    let mut tables = BTreeMap::new();
    for p in 1..max_degree {
        for q in 1..=(max_degree - p) {
            let target = &index[p + q - 1];
            let mut t = Vec::with_capacity(bases[p - 1].len() * bases[q - 1].len());
            for u in &bases[p - 1] {
                for w in &bases[q - 1] {
                    let word: Vec<usize> = u.iter().chain(w).copied().collect();
                    let v = engine
                        .normal_form(&word)
                        .into_iter()
                        .map(|(m, c)| (target[m.as_slice()], c))
                        .collect();
                    t.push(sparse::collect(v));
                }
            }
            tables.insert((p, q), t);
        }
    }
    let inclusions = (1..max_degree)
        .map(|k| (0..bases[k - 1].len()).map(|i| vec![(i, f.one())]).collect())
        .collect();
    let levels = bases
        .iter()
        .map(|b| b.iter().map(|w| monomial_label(lie.labels(), w)).collect())
        .collect();
    MulContext::new(
        f,
        ContextKind::Pbw,
        levels,
        tables,
        Some(Unit { index: 0, inclusions }),
        BTreeMap::new(),
    )
}
