use super::idempotent::Idempotent;
use crate::arith::Field;
use crate::error::{Error, Result};
use crate::linalg::{kron, swap_index, Echelon, Matrix, SparseVec, Subspace};

/// Default cap on the degree accepted by [`QuadraticAlgebra::graded_dim`].
pub const DEFAULT_DEGREE_CAP: usize = 6;

/// Largest tensor power dimension `n^k` the degree computations will touch.
pub const MAX_TENSOR_DIM: usize = 250_000;

/// `TV/(R)` with `R ⊂ V⊗V` held canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticAlgebra {
    labels: Vec<String>,
    relations: Subspace,
}

pub(crate) fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

impl QuadraticAlgebra {
    pub fn new(labels: Vec<String>, relations: Subspace) -> Result<QuadraticAlgebra> {
        let n = labels.len();
        if relations.ambient() != n * n {
            return Err(Error::BadShape(format!(
                "relations live in dimension {}, expected {}",
                relations.ambient(),
                n * n
            )));
        }
        Ok(QuadraticAlgebra { labels, relations })
    }

    pub fn from_rows(field: &Field, labels: Vec<String>, rows: Vec<SparseVec>) -> QuadraticAlgebra {
        let n = labels.len();
        QuadraticAlgebra {
            relations: Subspace::from_rows(field, n * n, rows),
            labels,
        }
    }

    /// The free (tensor) algebra on `n` generators.
    pub fn tensor(field: &Field, n: usize) -> QuadraticAlgebra {
        QuadraticAlgebra {
            labels: numbered("x", n),
            relations: Subspace::zero(field, n * n),
        }
    }

    /// `𝔛_E`: relations `rowspace(E)`.
    pub fn x(e: &Idempotent) -> QuadraticAlgebra {
        QuadraticAlgebra {
            labels: numbered("x", e.dim()),
            relations: e.matrix().rowspace(),
        }
    }

    /// `Ξ_E`: relations `rowspace((1 − E)ᵀ)`.
    pub fn xi(e: &Idempotent) -> QuadraticAlgebra {
        QuadraticAlgebra {
            labels: numbered("v", e.dim()),
            relations: e.matrix().complement().transpose().rowspace(),
        }
    }

    pub fn generators(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn field(&self) -> &Field {
        self.relations.field()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<QuadraticAlgebra> {
        if labels.len() != self.labels.len() {
            return Err(Error::BadShape("label count differs from generator count".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    /// `A^!`: relations `R^⊥` on dual generators.
    pub fn koszul_dual(&self) -> QuadraticAlgebra {
        QuadraticAlgebra {
            labels: self.labels.iter().map(|l| dual_label(l)).collect(),
            relations: self.relations.annihilator(),
        }
    }

    /// `A^op`: relations `σR`.
    pub fn opposite(&self) -> QuadraticAlgebra {
        let n = self.generators();
        QuadraticAlgebra {
            labels: self.labels.clone(),
            relations: self
                .relations
                .map(n * n, |v| crate::linalg::sparse::remap(v, |i| swap_index(n, i))),
        }
    }

    /// Renumbers generators: old generator `g` becomes `perm[g]`.
    pub fn reindex(&self, perm: &[usize]) -> QuadraticAlgebra {
        let n = self.generators();
        let mut labels = vec![String::new(); n];
        for (g, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[g].clone();
        }
        QuadraticAlgebra {
            labels,
            relations: self.relations.map(n * n, |v| {
                crate::linalg::sparse::remap(v, |i| perm[i / n] * n + perm[i % n])
            }),
        }
    }

    /// Spanning rows of the degree-`k` part of the ideal,
    /// `Σ_i V^{⊗i} ⊗ R ⊗ V^{⊗(k−2−i)}`.
    fn ideal_rows(&self, k: usize) -> impl Iterator<Item = SparseVec> + '_ {
        let n = self.generators();
        (0..k.saturating_sub(1)).flat_map(move |i| {
            let pre = n.pow(i as u32);
            let post = n.pow((k - 2 - i) as u32);
            (0..pre).flat_map(move |u| {
                self.relations.basis().iter().flat_map(move |r| {
                    (0..post).map(move |w| {
                        r.iter()
                            .map(|(pair, s)| ((u * n * n + pair) * post + w, s.clone()))
                            .collect()
                    })
                })
            })
        })
    }

    fn guard(&self, k: usize, cap: usize) -> Result<usize> {
        if k > cap {
            return Err(Error::CapExceeded { degree: k, cap });
        }
        let dim = (self.generators() as u128).pow(k as u32);
        if dim > MAX_TENSOR_DIM as u128 {
            return Err(Error::TooLarge {
                dim: dim.min(usize::MAX as u128) as usize,
                limit: MAX_TENSOR_DIM,
            });
        }
        Ok(dim as usize)
    }

    /// Degree-`k` part of the two-sided ideal generated by `R`.
    pub fn ideal(&self, k: usize, cap: usize) -> Result<Subspace> {
        let dim = self.guard(k, cap)?;
        let mut ech = Echelon::default();
        for row in self.ideal_rows(k) {
            ech.insert(row);
        }
        Ok(Subspace::from_rref(self.field(), dim, ech.into_rref()))
    }

    /// `dim A_k = n^k − rank(I_k)`.
    pub fn graded_dim(&self, k: usize) -> Result<usize> {
        self.graded_dim_capped(k, DEFAULT_DEGREE_CAP)
    }

    pub fn graded_dim_capped(&self, k: usize, cap: usize) -> Result<usize> {
        let dim = self.guard(k, cap)?;
        if k < 2 {
            return Ok(dim);
        }
        let mut ech = Echelon::default();
        for row in self.ideal_rows(k) {
            ech.insert(row);
        }
        Ok(dim - ech.rank())
    }

    /// Whether `f1` (columns: images of the source generators in the target
    /// degree-one space) extends to a graded algebra map.
    pub fn extends_to_hom(f1: &Matrix, src: &QuadraticAlgebra, dst: &QuadraticAlgebra) -> Result<bool> {
        if f1.rows() != dst.generators() || f1.cols() != src.generators() {
            return Err(Error::BadShape(format!(
                "map is {}x{}, expected {}x{}",
                f1.rows(),
                f1.cols(),
                dst.generators(),
                src.generators()
            )));
        }
        let ff = kron(f1, f1)?;
        Ok(src
            .relations
            .basis()
            .iter()
            .all(|r| dst.relations.contains_vec(&ff.apply(r))))
    }

    /// Human-readable relation list, one `... = 0` line per basis vector.
    pub fn relation_lines(&self) -> Vec<String> {
        self.relations
            .basis()
            .iter()
            .map(|r| format!("{} = 0", render_combination(r, |i| self.word_label(i, 2))))
            .collect()
    }

    /// Label of the degree-`k` word with flat index `idx`.
    pub fn word_label(&self, idx: usize, k: usize) -> String {
        word_label(&self.labels, idx, k)
    }
}

pub(crate) fn word_label(labels: &[String], mut idx: usize, k: usize) -> String {
    let n = labels.len();
    let mut parts = vec![String::new(); k];
    for slot in (0..k).rev() {
        parts[slot] = labels[idx % n].clone();
        idx /= n;
    }
    parts.join("*")
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('\'') {
        Some(base) => base.to_string(),
        None => format!("{l}'"),
    }
}

/// Renders `Σ c_i · label(i)` with the scalar grammar for coefficients.
pub fn render_combination(v: &SparseVec, label: impl Fn(usize) -> String) -> String {
    if v.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let s = c.to_string();
        let simple = !s.contains(['+', '(']) && !s[1..].contains('-');
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) if simple => (true, rest.to_string()),
            _ => (false, s.clone()),
        };
        if k > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let coeff = if body == "1" {
            String::new()
        } else if simple {
            format!("{body}*")
        } else {
            format!("({body})*")
        };
        out.push_str(&coeff);
        out.push_str(&label(*i));
    }
    out
}
