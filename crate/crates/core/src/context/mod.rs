//! Finite-dimensional coefficient contexts.
//!
//! A context has an entry space `E = P₁`, graded product spaces `P₂, P₃, …`
//! up to `max_degree`, and bilinear tables `P_p × P_q → P_{p+q}`. Matrices
//! whose entries live in `E` are checked against these tables.

mod embedding;
mod pbw;
mod qa;
mod table;

pub use embedding::{s_embedding_context, t_embedding_context, AlgebraStructureConstants};
pub use pbw::{pbw_context, LieAlgebra, PbwAlgebra};
pub use qa::qa_context;
pub use table::{field_context, slice_context, TableBuilder};

use crate::algebra::render_combination;
use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContextKind {
    Qa,
    Table,
    Pbw,
    Slice,
}

impl ContextKind {
    pub fn name(self) -> &'static str {
        match self {
            ContextKind::Qa => "qa",
            ContextKind::Table => "table",
            ContextKind::Pbw => "pbw",
            ContextKind::Slice => "slice",
        }
    }

    pub fn from_name(s: &str) -> Option<ContextKind> {
        Some(match s {
            "qa" => ContextKind::Qa,
            "table" => ContextKind::Table,
            "pbw" => ContextKind::Pbw,
            "slice" => ContextKind::Slice,
            _ => return None,
        })
    }
}

impl fmt::Display for ContextKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `Δ_k: P_k → P_k ⊗ P_k` and `ε_k: P_k → F` on one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    /// `delta[a]` is indexed by `b·dim + c` for `e_b ⊗ e_c`.
    pub delta: Vec<SparseVec>,
    pub eps: Vec<Scalar>,
}

/// A designated unit `u ∈ E` together with inclusions `P_k → P_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unit {
    pub index: usize,
    /// `inclusions[k-1]` maps the basis of `P_k` into `P_{k+1}`.
    pub inclusions: Vec<Vec<SparseVec>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MulContext {
    field: Field,
    kind: ContextKind,
    levels: Vec<Vec<String>>,
    tables: BTreeMap<(usize, usize), Vec<SparseVec>>,
    unit: Option<Unit>,
    coalgebra: BTreeMap<usize, Coalgebra>,
}

fn check_vec(v: &SparseVec, dim: usize, what: &str) -> Result<()> {
    if v.iter().any(|(i, _)| *i >= dim) || v.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(Error::InvalidContext(format!("{what}: vector out of range or unsorted")));
    }
    Ok(())
}

impl MulContext {
    /// Assembles and validates a context: table shapes, unit laws and
    /// coalgebra laws on every level that carries `Δ`/`ε`.
    pub fn new(
        field: Field,
        kind: ContextKind,
        levels: Vec<Vec<String>>,
        tables: BTreeMap<(usize, usize), Vec<SparseVec>>,
        unit: Option<Unit>,
        coalgebra: BTreeMap<usize, Coalgebra>,
    ) -> Result<MulContext> {
        let ctx = MulContext {
            field,
            kind,
            levels,
            tables,
            unit,
            coalgebra,
        };
        ctx.validate()?;
        Ok(ctx)
    }

    fn validate(&self) -> Result<()> {
        if self.levels.len() < 2 {
            return Err(Error::InvalidContext("a context needs at least P₁ and P₂".into()));
        }
        if !self.tables.contains_key(&(1, 1)) {
            return Err(Error::InvalidContext("missing product table E×E → P₂".into()));
        }
        for (&(p, q), t) in &self.tables {
            if p == 0 || q == 0 || p + q > self.max_degree() {
                return Err(Error::InvalidContext(format!("table ({p},{q}) out of range")));
            }
            if t.len() != self.levels[p - 1].len() * self.levels[q - 1].len() {
                return Err(Error::InvalidContext(format!("table ({p},{q}) has wrong size")));
            }
            let d = self.levels[p + q - 1].len();
            for v in t {
                check_vec(v, d, &format!("table ({p},{q})"))?;
            }
        }
        if let Some(u) = &self.unit {
            self.validate_unit(u)?;
        }
        for (&k, c) in &self.coalgebra {
            self.validate_coalgebra(k, c)?;
        }
        Ok(())
    }

    fn validate_unit(&self, u: &Unit) -> Result<()> {
        if u.index >= self.entry_dim() {
            return Err(Error::InvalidContext("unit index out of range".into()));
        }
        if u.inclusions.len() + 1 != self.max_degree() {
            return Err(Error::InvalidContext("one inclusion map per level is required".into()));
        }
        for (k, inc) in u.inclusions.iter().enumerate() {
            if inc.len() != self.levels[k].len() {
                return Err(Error::InvalidContext(format!("inclusion P{} has wrong size", k + 1)));
            }
            for v in inc {
                check_vec(v, self.levels[k + 1].len(), "inclusion")?;
            }
        }
        let u_vec = vec![(u.index, self.field.one())];
        for &(p, q) in self.tables.keys() {
            if p == 1 {
                for b in 0..self.levels[q - 1].len() {
                    let y = vec![(b, self.field.one())];
                    if self.mul(1, &u_vec, q, &y)? != self.include(q, &y)? {
                        return Err(Error::InvalidContext(format!(
                            "unit law fails: 1·{} in table (1,{q})",
                            self.levels[q - 1][b]
                        )));
                    }
                }
            }
            if q == 1 {
                for a in 0..self.levels[p - 1].len() {
                    let x = vec![(a, self.field.one())];
                    if self.mul(p, &x, 1, &u_vec)? != self.include(p, &x)? {
                        return Err(Error::InvalidContext(format!(
                            "unit law fails: {}·1 in table ({p},1)",
                            self.levels[p - 1][a]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_coalgebra(&self, k: usize, c: &Coalgebra) -> Result<()> {
        let d = self.dim(k)?;
        if c.delta.len() != d || c.eps.len() != d {
            return Err(Error::InvalidContext(format!("coalgebra tables on P{k} have wrong size")));
        }
        for v in &c.delta {
            check_vec(v, d * d, "Δ")?;
        }
        match coalgebra_failure(c, d) {
            None => Ok(()),
            Some((a, law)) => Err(Error::InvalidContext(format!(
                "{law} fails at basis index {} ({})",
                a + 1,
                self.levels[k - 1][a]
            ))),
        }
    }

    /// Attaches `Δ_k`/`ε_k` without checking the coalgebra laws; shapes are
    /// still validated. Used for presentations whose laws are reported on
    /// rather than enforced.
    pub(crate) fn with_coalgebra_unchecked(mut self, k: usize, c: Coalgebra) -> Result<MulContext> {
        let d = self.dim(k)?;
        if c.delta.len() != d || c.eps.len() != d {
            return Err(Error::InvalidContext(format!("coalgebra tables on P{k} have wrong size")));
        }
        for v in &c.delta {
            check_vec(v, d * d, "Δ")?;
        }
        self.coalgebra.insert(k, c);
        Ok(self)
    }

    /// Coassociativity and counit laws of `Δ_k`/`ε_k`; the witness is the
    /// 1-based basis index.
    pub fn coalgebra_report(&self, k: usize) -> Result<Vec<crate::report::Report>> {
        use crate::report::Report;
        let c = self.coalgebra(k)?;
        let d = self.dim(k)?;
        let mut coassoc = Report::pass("coassociativity");
        let mut counit = Report::pass("counit");
        for a in 0..d {
            let (left, right) = coassoc_sides(c, d, a);
            if coassoc.pass && left != right {
                let diff = sparse::axpy(&left, &self.field.int(-1), &right);
                let labels = &self.levels[k - 1];
                let exp = render_combination(&diff, |i| {
                    format!("{}⊗{}⊗{}", labels[i / (d * d)], labels[(i / d) % d], labels[i % d])
                });
                coassoc = Report::fail("coassociativity", vec![a + 1], exp);
            }
            if counit.pass && !counit_holds(c, d, a) {
                counit = Report::fail("counit", vec![a + 1], self.levels[k - 1][a].clone());
            }
        }
        Ok(vec![coassoc, counit])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn kind(&self) -> ContextKind {
        self.kind
    }

    pub fn max_degree(&self) -> usize {
        self.levels.len()
    }

    pub fn entry_dim(&self) -> usize {
        self.levels[0].len()
    }

    pub fn levels(&self) -> &[Vec<String>] {
        &self.levels
    }

    pub fn tables(&self) -> &BTreeMap<(usize, usize), Vec<SparseVec>> {
        &self.tables
    }

    pub fn unit(&self) -> Option<&Unit> {
        self.unit.as_ref()
    }

    pub fn coalgebras(&self) -> &BTreeMap<usize, Coalgebra> {
        &self.coalgebra
    }

    pub fn coalgebra(&self, k: usize) -> Result<&Coalgebra> {
        self.coalgebra.get(&k).ok_or(Error::MissingCoalgebra)
    }

    pub fn has_coalgebra(&self) -> bool {
        self.coalgebra.contains_key(&1)
    }

    pub fn dim(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.max_degree() {
            return Err(Error::ContextTooShallow(format!(
                "degree {k} requested, context has degrees 1..={}",
                self.max_degree()
            )));
        }
        Ok(self.levels[k - 1].len())
    }

    pub fn labels(&self, k: usize) -> Result<&[String]> {
        self.dim(k)?;
        Ok(&self.levels[k - 1])
    }

    pub fn has_table(&self, p: usize, q: usize) -> bool {
        self.tables.contains_key(&(p, q))
    }

    fn table(&self, p: usize, q: usize) -> Result<&Vec<SparseVec>> {
        self.tables.get(&(p, q)).ok_or_else(|| {
            Error::ContextTooShallow(format!("no product table P{p} × P{q} → P{}", p + q))
        })
    }

    /// `e_a · e_b` for basis vectors of `P_p` and `P_q`.
    pub fn mul_basis(&self, p: usize, a: usize, q: usize, b: usize) -> Result<&SparseVec> {
        let t = self.table(p, q)?;
        Ok(&t[a * self.levels[q - 1].len() + b])
    }

    /// Bilinear product `P_p × P_q → P_{p+q}`.
    pub fn mul(&self, p: usize, x: &SparseVec, q: usize, y: &SparseVec) -> Result<SparseVec> {
        let t = self.table(p, q)?;
        let dq = self.levels[q - 1].len();
        let mut out = Vec::new();
        for (a, s) in x {
            for (b, r) in y {
                let c = s * r;
                for (i, v) in &t[a * dq + b] {
                    out.push((*i, &c * v));
                }
            }
        }
        Ok(sparse::collect(out))
    }

    /// Inclusion `P_k → P_{k+1}` (requires a unit).
    pub fn include(&self, k: usize, x: &SparseVec) -> Result<SparseVec> {
        let u = self
            .unit
            .as_ref()
            .ok_or_else(|| Error::Precondition("context has no unit".into()))?;
        self.dim(k + 1)?;
        let mut out = Vec::new();
        for (a, s) in x {
            for (i, v) in &u.inclusions[k - 1][*a] {
                out.push((*i, s * v));
            }
        }
        Ok(sparse::collect(out))
    }

    /// The unit as an element of `P_k`.
    pub fn unit_vector(&self, k: usize) -> Result<SparseVec> {
        let u = self
            .unit
            .as_ref()
            .ok_or_else(|| Error::Precondition("context has no unit".into()))?;
        let mut v = vec![(u.index, self.field.one())];
        for level in 1..k {
            v = self.include(level, &v)?;
        }
        Ok(v)
    }

    pub fn delta(&self, k: usize, x: &SparseVec) -> Result<SparseVec> {
        let c = self.coalgebra(k)?;
        let mut acc = Vec::new();
        for (a, s) in x {
            sparse::add_scaled(&mut acc, s, &c.delta[*a]);
        }
        Ok(acc)
    }

    pub fn eps(&self, k: usize, x: &SparseVec) -> Result<Scalar> {
        let c = self.coalgebra(k)?;
        let mut acc = self.field.zero();
        for (a, s) in x {
            acc = &acc + &(s * &c.eps[*a]);
        }
        Ok(acc)
    }

    /// Whether `E × E → P₂` is symmetric.
    pub fn is_commutative(&self) -> bool {
        let d = self.entry_dim();
        let t = &self.tables[&(1, 1)];
        (0..d).all(|a| (0..a).all(|b| t[a * d + b] == t[b * d + a]))
    }

    pub fn render(&self, k: usize, v: &SparseVec) -> String {
        let labels = &self.levels[k - 1];
        render_combination(v, |i| labels[i].clone())
    }

    pub fn render_tensor(&self, k: usize, v: &SparseVec) -> String {
        let labels = &self.levels[k - 1];
        let d = labels.len();
        render_combination(v, |i| format!("{}⊗{}", labels[i / d], labels[i % d]))
    }

    /// Same spaces, product order reversed.
    pub fn opposite(&self) -> MulContext {
        let mut tables = BTreeMap::new();
        for (&(p, q), t) in &self.tables {
            let (dp, dq) = (self.levels[p - 1].len(), self.levels[q - 1].len());
            let mut flipped = vec![Vec::new(); dp * dq];
            for a in 0..dp {
                for b in 0..dq {
                    flipped[b * dp + a] = t[a * dq + b].clone();
                }
            }
            tables.insert((q, p), flipped);
        }
        MulContext {
            tables,
            ..self.clone()
        }
    }

    /// Same algebra, tensor factors of every `Δ_k` swapped.
    pub fn coopposite(&self) -> MulContext {
        let coalgebra = self
            .coalgebra
            .iter()
            .map(|(&k, c)| {
                let d = self.levels[k - 1].len();
                let delta = c
                    .delta
                    .iter()
                    .map(|v| sparse::remap(v, |i| (i % d) * d + i / d))
                    .collect();
                (k, Coalgebra { delta, eps: c.eps.clone() })
            })
            .collect();
        MulContext {
            coalgebra,
            ..self.clone()
        }
    }

    /// The shifted context with `E' = P₂` and `P₂' = P₄`, products taken
    /// from the `P₂ × P₂` table.
    pub fn lift(&self) -> Result<MulContext> {
        let t22 = self.table(2, 2)?.clone();
        let levels = vec![self.levels[1].clone(), self.levels[3].clone()];
        let mut tables = BTreeMap::new();
        tables.insert((1, 1), t22);
        let unit = match &self.unit {
            None => None,
            Some(u) => {
                let image = self.include(1, &vec![(u.index, self.field.one())])?;
                let index = match image.as_slice() {
                    [(i, s)] if s.is_one() => *i,
                    _ => {
                        return Err(Error::InvalidContext(
                            "unit is not a basis vector of P₂; cannot lift".into(),
                        ))
                    }
                };
                let inc = (0..self.levels[1].len())
                    .map(|b| {
                        let v = self.include(2, &vec![(b, self.field.one())])?;
                        self.include(3, &v)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Some(Unit {
                    index,
                    inclusions: vec![inc],
                })
            }
        };
        let mut coalgebra = BTreeMap::new();
        for (old, new) in [(2, 1), (4, 2)] {
            if let Some(c) = self.coalgebra.get(&old) {
                coalgebra.insert(new, c.clone());
            }
        }
        MulContext::new(self.field.clone(), self.kind, levels, tables, unit, coalgebra)
    }
}

fn coassoc_sides(c: &Coalgebra, d: usize, a: usize) -> (SparseVec, SparseVec) {
    let dx = &c.delta[a];
    (
        apply_left(dx, d, |i| c.delta[i].clone()),
        apply_right(dx, d, |j| c.delta[j].clone(), d * d),
    )
}

fn counit_holds(c: &Coalgebra, d: usize, a: usize) -> bool {
    let dx = &c.delta[a];
    let x = vec![(a, Scalar::Rat(num::BigRational::from_integer(1.into())))];
    apply_left(dx, d, |i| scalar_vec(&c.eps[i])) == x && apply_right(dx, d, |j| scalar_vec(&c.eps[j]), 1) == x
}

fn coalgebra_failure(c: &Coalgebra, d: usize) -> Option<(usize, &'static str)> {
    (0..d).find_map(|a| {
        let (l, r) = coassoc_sides(c, d, a);
        if l != r {
            Some((a, "coassociativity"))
        } else if !counit_holds(c, d, a) {
            Some((a, "counit law"))
        } else {
            None
        }
    })
}

fn scalar_vec(s: &Scalar) -> SparseVec {
    if s.is_zero() {
        Vec::new()
    } else {
        vec![(0, s.clone())]
    }
}

/// `(f ⊗ id)(v)` for `v ∈ P⊗P` with `f: P → W` given on basis vectors.
pub(crate) fn apply_left(v: &SparseVec, d: usize, f: impl Fn(usize) -> SparseVec) -> SparseVec {
    let mut out = Vec::new();
    for (idx, s) in v {
        let (i, j) = (idx / d, idx % d);
        for (w, t) in f(i) {
            out.push((w * d + j, s * &t));
        }
    }
    sparse::collect(out)
}

/// `(id ⊗ f)(v)` for `v ∈ P⊗P` with `f: P → W` given on basis vectors.
pub(crate) fn apply_right(v: &SparseVec, d: usize, f: impl Fn(usize) -> SparseVec, dim_w: usize) -> SparseVec {
    let mut out = Vec::new();
    for (idx, s) in v {
        let (i, j) = (idx / d, idx % d);
        for (w, t) in f(j) {
            out.push((i * dim_w + w, s * &t));
        }
    }
    sparse::collect(out)
}
