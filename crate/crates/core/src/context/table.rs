use super::embedding::AlgebraStructureConstants;
use super::{Coalgebra, ContextKind, MulContext, Unit};
use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::linalg::sparse::SparseVec;
use std::collections::BTreeMap;

/// Incremental assembly of a raw table context.
#[derive(Clone, Debug)]
pub struct TableBuilder {
    field: Field,
    kind: ContextKind,
    levels: Vec<Vec<String>>,
    tables: BTreeMap<(usize, usize), Vec<SparseVec>>,
    unit: Option<Unit>,
    coalgebra: BTreeMap<usize, Coalgebra>,
}

impl TableBuilder {
    pub fn new(field: &Field, levels: Vec<Vec<String>>) -> TableBuilder {
        TableBuilder {
            field: field.clone(),
            kind: ContextKind::Table,
            levels,
            tables: BTreeMap::new(),
            unit: None,
            coalgebra: BTreeMap::new(),
        }
    }

    pub fn kind(mut self, kind: ContextKind) -> TableBuilder {
        self.kind = kind;
        self
    }

    /// Table `P_p × P_q → P_{p+q}`, entry `a·dim P_q + b`.
    pub fn table(mut self, p: usize, q: usize, t: Vec<SparseVec>) -> TableBuilder {
        self.tables.insert((p, q), t);
        self
    }

    pub fn unit(mut self, unit: Unit) -> TableBuilder {
        self.unit = Some(unit);
        self
    }

    pub fn coalgebra(mut self, k: usize, c: Coalgebra) -> TableBuilder {
        self.coalgebra.insert(k, c);
        self
    }

    pub fn build(self) -> Result<MulContext> {
        MulContext::new(self.field, self.kind, self.levels, self.tables, self.unit, self.coalgebra)
    }
}

/// The field itself: every level is `span{1}` and `Δ(1) = 1⊗1`.
pub fn field_context(field: &Field, max_degree: usize) -> Result<MulContext> {
    let k = AlgebraStructureConstants::new(field, vec!["1".into()], vec!["1".into()], vec![field.one()], vec![field.one()])?;
    slice_context(&k, vec![vec![(0, field.one())]], vec![field.one()], max_degree)
}

/// Slice of `𝕆_ℜ = ℜ ⊗ K[u]` for a finite-dimensional bialgebra `ℜ`: every
/// level is `ℜ`, products and `Δ`/`ε` are those of `ℜ`, and the unit must
/// be a basis vector.
pub fn slice_context(
    alg: &AlgebraStructureConstants,
    delta: Vec<SparseVec>,
    eps: Vec<Scalar>,
    max_degree: usize,
) -> Result<MulContext> {
    if max_degree < 2 {
        return Err(Error::InvalidParameters("a slice needs degree at least 2".into()));
    }
    let f = alg.field();
    let n = alg.dim();
    let index = match alg.unit().iter().enumerate().filter(|(_, s)| !s.is_zero()).collect::<Vec<_>>()[..] {
        [(i, s)] if s.is_one() => i,
        _ => return Err(Error::InvalidContext("slice unit must be a basis vector".into())),
    };
    let mult: Vec<SparseVec> = (0..n * n)
        .map(|ab| {
            (0..n)
                .filter(|&k| !alg.c(ab / n, ab % n, k).is_zero())
                .map(|k| (k, alg.c(ab / n, ab % n, k).clone()))
                .collect()
        })
        .collect();
    let identity: Vec<SparseVec> = (0..n).map(|i| vec![(i, f.one())]).collect();
    let mut builder = TableBuilder::new(f, vec![alg.labels().to_vec(); max_degree])
        .kind(ContextKind::Slice)
        .unit(Unit {
            index,
            inclusions: vec![identity; max_degree - 1],
        });
    for p in 1..max_degree {
        for q in 1..=(max_degree - p) {
            builder = builder.table(p, q, mult.clone());
        }
    }
    let eps: Vec<Scalar> = eps.iter().map(|s| f.coerce(s)).collect::<Result<_>>()?;
    for k in 1..=max_degree {
        builder = builder.coalgebra(k, Coalgebra { delta: delta.clone(), eps: eps.clone() });
    }
    builder.build()
}
