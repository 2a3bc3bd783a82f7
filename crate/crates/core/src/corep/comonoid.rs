use crate::algebra::{cohom_algebra, render_combination, Idempotent, QuadraticAlgebra};
use crate::arith::{Field, Scalar};
use crate::context::{qa_context, AlgebraStructureConstants, Coalgebra, MulContext};
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use crate::report::Report;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComonoidKind {
    /// A connected quadratic algebra with `Δ₁`, `ε₁` on its generators.
    ConnectedQa,
    /// A slice of `𝕆_ℜ` for a finite-dimensional bialgebra `ℜ`.
    BialgebraSlice,
}

impl ComonoidKind {
    pub fn name(self) -> &'static str {
        match self {
            ComonoidKind::ConnectedQa => "connected_qa",
            ComonoidKind::BialgebraSlice => "bialgebra_slice",
        }
    }

    pub fn from_name(s: &str) -> Option<ComonoidKind> {
        match s {
            "connected_qa" => Some(ComonoidKind::ConnectedQa),
            "bialgebra_slice" => Some(ComonoidKind::BialgebraSlice),
            _ => None,
        }
    }
}

impl fmt::Display for ComonoidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A comonoid in graded algebras, presented through its coefficient context.
#[derive(Clone, Debug, PartialEq)]
pub struct ComonoidPresentation {
    kind: ComonoidKind,
    algebra: Option<QuadraticAlgebra>,
    context: Arc<MulContext>,
}

impl ComonoidPresentation {
    /// Connected presentation. The coalgebra laws are not enforced here;
    /// [`validate_comonoid`] reports on them.
    pub fn connected_qa(
        algebra: QuadraticAlgebra,
        delta1: Vec<SparseVec>,
        eps1: Vec<Scalar>,
        max_degree: usize,
    ) -> Result<ComonoidPresentation> {
        let f = algebra.field().clone();
        let eps = eps1.iter().map(|s| f.coerce(s)).collect::<Result<_>>()?;
        let delta = delta1
            .into_iter()
            .map(|v| v.into_iter().map(|(i, s)| Ok((i, f.coerce(&s)?))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .map(sparse::collect)
            .collect();
        let ctx = qa_context(&algebra, max_degree)?.with_coalgebra_unchecked(1, Coalgebra { delta, eps })?;
        Ok(ComonoidPresentation {
            kind: ComonoidKind::ConnectedQa,
            algebra: Some(algebra),
            context: Arc::new(ctx),
        })
    }

    /// Slice presentation over a context carrying `Δ` and `ε` on `E`.
    pub fn bialgebra_slice(context: Arc<MulContext>) -> Result<ComonoidPresentation> {
        if context.coalgebra(1).is_err() {
            return Err(Error::MissingCoalgebra);
        }
        Ok(ComonoidPresentation {
            kind: ComonoidKind::BialgebraSlice,
            algebra: None,
            context,
        })
    }

    pub fn kind(&self) -> ComonoidKind {
        self.kind
    }

    pub fn algebra(&self) -> Option<&QuadraticAlgebra> {
        self.algebra.as_ref()
    }

    pub fn context(&self) -> &Arc<MulContext> {
        &self.context
    }

    pub fn field(&self) -> &Field {
        self.context.field()
    }

    pub fn delta1(&self) -> &[SparseVec] {
        &self.coalgebra1().delta
    }

    pub fn eps1(&self) -> &[Scalar] {
        &self.coalgebra1().eps
    }

    fn coalgebra1(&self) -> &Coalgebra {
        self.context.coalgebra(1).expect("presentations carry Δ₁")
    }

    /// Same coalgebra, opposite multiplication.
    pub fn opposite(&self) -> ComonoidPresentation {
        ComonoidPresentation {
            kind: self.kind,
            algebra: self.algebra.as_ref().map(|a| a.opposite()),
            context: Arc::new(self.context.opposite()),
        }
    }
}

/// Coalgebra laws on the entry space, plus for the connected kind the
/// inclusions `(Δ₁⊗Δ₁)(R) ⊂ R(A∘A)` and `(ε₁⊗ε₁)(R) = 0`.
pub fn validate_comonoid(c: &ComonoidPresentation) -> Report {
    let ctx = c.context();
    let mut report = Report::pass("comonoid").with("kind", c.kind());
    let levels: Vec<usize> = match c.kind {
        ComonoidKind::ConnectedQa => vec![1],
        ComonoidKind::BialgebraSlice => ctx.coalgebras().keys().copied().collect(),
    };
    for k in levels {
        for mut child in ctx.coalgebra_report(k).expect("level carries Δ") {
            if k > 1 {
                child.check = format!("{} (P{k})", child.check);
            }
            report.push(child);
        }
    }
    if let Some(alg) = c.algebra() {
        report.push(extension_delta(alg, c.delta1()));
        report.push(extension_counit(alg, c.eps1(), ctx));
    }
    report
}

/// `(Δ₁⊗Δ₁)(r)` lies in the relations `R⊗W + W⊗R` of `A∘A` (after the
/// middle shuffle, `W = V⊗V`) iff it vanishes modulo `R` in both factors.
fn extension_delta(alg: &QuadraticAlgebra, delta: &[SparseVec]) -> Report {
    let n = alg.generators();
    let w = n * n;
    let rel = alg.relations();
    let labels = alg.labels();
    let one = alg.field().one();
    for (r, row) in alg.relations().basis().iter().enumerate() {
        // image indexed by (a₁b₁, a₂b₂) for Δa = a₁⊗a₂, Δb = b₁⊗b₂
        let mut cols: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (ab, s) in row {
            for (x, sx) in &delta[ab / n] {
                for (y, sy) in &delta[ab % n] {
                    let (a1, a2, b1, b2) = (x / n, x % n, y / n, y % n);
                    let c = &(s * sx) * sy;
                    sparse::add_scaled(cols.entry(a2 * n + b2).or_default(), &c, &vec![(a1 * n + b1, one.clone())]);
                }
            }
        }
        let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (y, v) in cols {
            for (x, s) in rel.reduce(&v) {
                rows.entry(x).or_default().push((y, s));
            }
        }
        let mut rest = Vec::new();
        for (x, v) in rows {
            for (y, s) in rel.reduce(&sparse::collect(v)) {
                rest.push((x * w + y, s));
            }
        }
        if !rest.is_empty() {
            let exp = render_combination(&sparse::collect(rest), |i| {
                let (x, y) = (i / w, i % w);
                let (a1, b1, a2, b2) = (x / n, x % n, y / n, y % n);
                format!("({},{})*({},{})", labels[a1], labels[a2], labels[b1], labels[b2])
            });
            return Report::fail("extension_coproduct", vec![r + 1], exp);
        }
    }
    Report::pass("extension_coproduct")
}

fn extension_counit(alg: &QuadraticAlgebra, eps: &[Scalar], ctx: &MulContext) -> Report {
    let n = alg.generators();
    let f = ctx.field();
    for (r, row) in alg.relations().basis().iter().enumerate() {
        let mut acc = f.zero();
        for (ab, s) in row {
            acc = &acc + &(&(s * &eps[ab / n]) * &eps[ab % n]);
        }
        if !acc.is_zero() {
            return Report::fail("extension_counit", vec![r + 1], acc.to_string());
        }
    }
    Report::pass("extension_counit")
}

/// `coend(𝔛_B)` presented on `cohom(B, B)` with `Δ(ℳ^i_j) = Σ ℳ^i_k⊗ℳ^k_j`
/// and `ε(ℳ^i_j) = δ^i_j`.
pub fn coend_comonoid(b: &Idempotent) -> Result<ComonoidPresentation> {
    coend_comonoid_with_degree(b, 2)
}

/// [`coend_comonoid`] with a deeper context.
pub fn coend_comonoid_with_degree(b: &Idempotent, max_degree: usize) -> Result<ComonoidPresentation> {
    let f = b.field();
    let m = b.dim();
    let alg = cohom_algebra(b, b)?;
    let delta = (0..m * m)
        .map(|g| {
            let (i, j) = (g / m, g % m);
            (0..m).map(|k| ((i * m + k) * m * m + k * m + j, f.one())).collect()
        })
        .collect();
    let eps = (0..m * m).map(|g| if g / m == g % m { f.one() } else { f.zero() }).collect();
    ComonoidPresentation::connected_qa(alg, delta, eps, max_degree)
}

/// Connected presentation of the S-embedding: the symmetric algebra on the
/// dual of a finite-dimensional algebra with the dual coproduct.
pub fn s_embedding_comonoid(alg: &AlgebraStructureConstants) -> Result<ComonoidPresentation> {
    let f = alg.field();
    let n = alg.dim();
    let comm = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .map(|(a, b)| vec![(a * n + b, f.one()), (b * n + a, f.int(-1))])
        .collect();
    let sym = QuadraticAlgebra::from_rows(f, alg.dual_labels().to_vec(), comm);
    ComonoidPresentation::connected_qa(sym, alg.dual_delta(), alg.unit().to_vec(), 2)
}
