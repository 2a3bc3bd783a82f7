//! JSON documents holding named objects. Scalars are stored as strings in
//! the scalar grammar of the declared field; sparse vectors are lists of
//! `[index, "coefficient"]` pairs.

use crate::algebra::{Idempotent, QuadraticAlgebra};
use crate::arith::{Field, Scalar};
use crate::context::{AlgebraStructureConstants, Coalgebra, ContextKind, MulContext, Unit};
use crate::corep::{ComonoidKind, ComonoidPresentation, Corepresentation};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseVec, Subspace};
use crate::manin::FirstOrderMatrix;
use crate::report::Report;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

pub const FORMAT_VERSION: u32 = 1;

/// Schema reference, printed by `manin --help-format`.
pub const FORMAT_DOC: &str = include_str!("../FORMAT.md");

pub type Terms = Vec<(usize, String)>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub version: u32,
    pub field: String,
    #[serde(default)]
    pub objects: BTreeMap<String, Object>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableDoc {
    pub p: usize,
    pub q: usize,
    pub rows: Vec<Terms>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitDoc {
    pub index: usize,
    pub inclusions: Vec<Vec<Terms>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoalgebraDoc {
    pub level: usize,
    pub delta: Vec<Terms>,
    pub eps: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Object {
    Idempotent {
        matrix: Vec<Vec<String>>,
    },
    ScalarMatrix {
        rows: Vec<Vec<String>>,
    },
    Algebra {
        labels: Vec<String>,
        relations: Vec<Terms>,
    },
    StructureConstants {
        labels: Vec<String>,
        dual_labels: Vec<String>,
        /// Row `i·n + j` holds `v_i v_j`.
        products: Vec<Terms>,
        unit: Vec<String>,
    },
    Context {
        context_kind: String,
        levels: Vec<Vec<String>>,
        tables: Vec<TableDoc>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        unit: Option<UnitDoc>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        coalgebra: Vec<CoalgebraDoc>,
    },
    Comonoid {
        comonoid_kind: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        algebra: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        delta1: Option<Vec<Terms>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eps1: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_degree: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        context: Option<String>,
    },
    /// `context` names a context or a comonoid (its entry space).
    Matrix {
        context: String,
        rows: usize,
        cols: usize,
        entries: Vec<Terms>,
    },
    Corep {
        comonoid: String,
        idempotent: String,
        matrix: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        checks: Option<Report>,
    },
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Idempotent { .. } => "idempotent",
            Object::ScalarMatrix { .. } => "scalar_matrix",
            Object::Algebra { .. } => "algebra",
            Object::StructureConstants { .. } => "structure_constants",
            Object::Context { .. } => "context",
            Object::Comonoid { .. } => "comonoid",
            Object::Matrix { .. } => "matrix",
            Object::Corep { .. } => "corep",
        }
    }
}

fn doc_err(path: impl Into<String>, msg: impl ToString) -> Error {
    Error::Document {
        path: path.into(),
        msg: msg.to_string(),
    }
}

fn scalar_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn terms(v: &SparseVec) -> Terms {
    v.iter().map(|(i, s)| (*i, s.to_string())).collect()
}

fn parse_scalar(field: &Field, text: &str, path: &str) -> Result<Scalar> {
    field.parse(text).map_err(|e| doc_err(path, e))
}

fn parse_terms(field: &Field, t: &Terms, dim: usize, path: &str) -> Result<SparseVec> {
    let mut v = Vec::with_capacity(t.len());
    for (k, (i, s)) in t.iter().enumerate() {
        let p = format!("{path}[{k}]");
        if *i >= dim {
            return Err(doc_err(p, format!("index {i} out of range for dimension {dim}")));
        }
        v.push((*i, parse_scalar(field, s, &p)?));
    }
    Ok(crate::linalg::sparse::collect(v))
}

fn parse_dense(field: &Field, rows: &[Vec<String>], path: &str) -> Result<Matrix> {
    let mut out = Vec::with_capacity(rows.len());
    for (i, r) in rows.iter().enumerate() {
        let row = r
            .iter()
            .enumerate()
            .map(|(j, s)| parse_scalar(field, s, &format!("{path}[{i}][{j}]")))
            .collect::<Result<Vec<_>>>()?;
        out.push(row);
    }
    Matrix::from_rows(field, out).map_err(|e| doc_err(path, e))
}

fn dense(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| scalar_strings(m.row(i))).collect()
}

/// Objects of a document, built and validated.
#[derive(Clone, Debug, Default)]
pub struct Resolved {
    pub idempotents: BTreeMap<String, Idempotent>,
    pub scalar_matrices: BTreeMap<String, Matrix>,
    pub algebras: BTreeMap<String, QuadraticAlgebra>,
    pub structure_constants: BTreeMap<String, AlgebraStructureConstants>,
    pub contexts: BTreeMap<String, Arc<MulContext>>,
    pub comonoids: BTreeMap<String, Arc<ComonoidPresentation>>,
    pub matrices: BTreeMap<String, FirstOrderMatrix>,
    pub coreps: BTreeMap<String, Corepresentation>,
}

impl Resolved {
    fn lookup<'a, T>(map: &'a BTreeMap<String, T>, name: &str, path: &str, kind: &str) -> Result<&'a T> {
        map.get(name)
            .ok_or_else(|| doc_err(path, format!("unresolved reference `{name}` (expected {kind})")))
    }

    pub fn idempotent(&self, name: &str) -> Result<&Idempotent> {
        Resolved::lookup(&self.idempotents, name, name, "idempotent")
    }

    pub fn scalar_matrix(&self, name: &str) -> Result<&Matrix> {
        Resolved::lookup(&self.scalar_matrices, name, name, "scalar_matrix")
    }

    pub fn algebra(&self, name: &str) -> Result<&QuadraticAlgebra> {
        Resolved::lookup(&self.algebras, name, name, "algebra")
    }

    pub fn structure_constants(&self, name: &str) -> Result<&AlgebraStructureConstants> {
        Resolved::lookup(&self.structure_constants, name, name, "structure_constants")
    }

    pub fn context(&self, name: &str) -> Result<&Arc<MulContext>> {
        Resolved::lookup(&self.contexts, name, name, "context")
    }

    pub fn comonoid(&self, name: &str) -> Result<&Arc<ComonoidPresentation>> {
        Resolved::lookup(&self.comonoids, name, name, "comonoid")
    }

    pub fn matrix(&self, name: &str) -> Result<&FirstOrderMatrix> {
        Resolved::lookup(&self.matrices, name, name, "matrix")
    }

    pub fn corep(&self, name: &str) -> Result<&Corepresentation> {
        Resolved::lookup(&self.coreps, name, name, "corep")
    }
}

impl Document {
    pub fn new(field: &Field) -> Document {
        Document {
            version: FORMAT_VERSION,
            field: field.name(),
            objects: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> Result<Field> {
        Field::from_name(&self.field).map_err(|e| doc_err("field", e))
    }

    pub fn from_json(text: &str) -> Result<Document> {
        let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        })?;
        if doc.version != FORMAT_VERSION {
            return Err(doc_err(
                "version",
                format!("unsupported version {} (supported: {FORMAT_VERSION})", doc.version),
            ));
        }
        Ok(doc)
    }

    /// Canonical text: pretty-printed, objects sorted by name, trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    /// Reads and fully resolves a document.
    pub fn load(path: &Path) -> Result<(Document, Resolved)> {
        let text = std::fs::read_to_string(path).map_err(|e| doc_err(path.display().to_string(), e))?;
        let doc = Document::from_json(&text)?;
        let resolved = doc.resolve()?;
        Ok((doc, resolved))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()).map_err(|e| doc_err(path.display().to_string(), e))
    }

    fn insert(&mut self, name: &str, obj: Object) -> String {
        self.objects.insert(name.to_string(), obj);
        name.to_string()
    }

    pub fn add_idempotent(&mut self, name: &str, e: &Idempotent) -> String {
        self.insert(name, Object::Idempotent { matrix: dense(e.matrix()) })
    }

    pub fn add_scalar_matrix(&mut self, name: &str, m: &Matrix) -> String {
        self.insert(name, Object::ScalarMatrix { rows: dense(m) })
    }

    pub fn add_algebra(&mut self, name: &str, a: &QuadraticAlgebra) -> String {
        let relations = a.relations().basis().iter().map(terms).collect();
        self.insert(
            name,
            Object::Algebra {
                labels: a.labels().to_vec(),
                relations,
            },
        )
    }

    pub fn add_structure_constants(&mut self, name: &str, a: &AlgebraStructureConstants) -> String {
        let n = a.dim();
        let products = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter(|&k| !a.c(ij / n, ij % n, k).is_zero())
                    .map(|k| (k, a.c(ij / n, ij % n, k).to_string()))
                    .collect()
            })
            .collect();
        self.insert(
            name,
            Object::StructureConstants {
                labels: a.labels().to_vec(),
                dual_labels: a.dual_labels().to_vec(),
                products,
                unit: scalar_strings(a.unit()),
            },
        )
    }

    pub fn add_context(&mut self, name: &str, c: &MulContext) -> String {
        let tables = c
            .tables()
            .iter()
            .map(|(&(p, q), t)| TableDoc {
                p,
                q,
                rows: t.iter().map(terms).collect(),
            })
            .collect();
        let unit = c.unit().map(|u| UnitDoc {
            index: u.index,
            inclusions: u.inclusions.iter().map(|inc| inc.iter().map(terms).collect()).collect(),
        });
        let coalgebra = c
            .coalgebras()
            .iter()
            .map(|(&level, co)| CoalgebraDoc {
                level,
                delta: co.delta.iter().map(terms).collect(),
                eps: scalar_strings(&co.eps),
            })
            .collect();
        self.insert(
            name,
            Object::Context {
                context_kind: c.kind().name().to_string(),
                levels: c.levels().to_vec(),
                tables,
                unit,
                coalgebra,
            },
        )
    }

    /// Adds the comonoid and the algebra or context it is built from, under
    /// `{name}.algebra` or `{name}.context`.
    pub fn add_comonoid(&mut self, name: &str, c: &ComonoidPresentation) -> String {
        let obj = match c.algebra() {
            Some(a) => Object::Comonoid {
                comonoid_kind: c.kind().name().to_string(),
                algebra: Some(self.add_algebra(&format!("{name}.algebra"), a)),
                delta1: Some(c.delta1().iter().map(terms).collect()),
                eps1: Some(scalar_strings(c.eps1())),
                max_degree: Some(c.context().max_degree()),
                context: None,
            },
            None => Object::Comonoid {
                comonoid_kind: c.kind().name().to_string(),
                algebra: None,
                delta1: None,
                eps1: None,
                max_degree: None,
                context: Some(self.add_context(&format!("{name}.context"), c.context())),
            },
        };
        self.insert(name, obj)
    }

    pub fn add_matrix(&mut self, name: &str, m: &FirstOrderMatrix, context: &str) -> String {
        self.insert(
            name,
            Object::Matrix {
                context: context.to_string(),
                rows: m.rows(),
                cols: m.cols(),
                entries: m.entries().iter().map(terms).collect(),
            },
        )
    }

    /// Adds a corep over an already added comonoid, with its idempotent and
    /// matrix under `{name}.idempotent` and `{name}.matrix`.
    pub fn add_corep(&mut self, name: &str, r: &Corepresentation, comonoid: &str) -> String {
        let idempotent = self.add_idempotent(&format!("{name}.idempotent"), r.idempotent());
        let matrix = self.add_matrix(&format!("{name}.matrix"), r.matrix(), comonoid);
        self.insert(
            name,
            Object::Corep {
                comonoid: comonoid.to_string(),
                idempotent,
                matrix,
                checks: Some(r.checks().clone()),
            },
        )
    }

    /// Builds every object; references resolve in the order idempotents,
    /// scalar matrices, algebras, structure constants, contexts, comonoids,
    /// matrices, coreps.
    pub fn resolve(&self) -> Result<Resolved> {
        let field = self.field()?;
        let f = &field;
        let mut r = Resolved::default();
        let stage = |kind: &'static str| self.objects.iter().filter(move |(_, o)| o.kind() == kind);
        let path = |name: &str, key: &str| format!("objects.{name}.{key}");

        for (name, obj) in stage("idempotent") {
            if let Object::Idempotent { matrix } = obj {
                let m = parse_dense(f, matrix, &path(name, "matrix"))?;
                let e = Idempotent::new(m).map_err(|e| doc_err(path(name, "matrix"), e))?;
                r.idempotents.insert(name.clone(), e);
            }
        }
        for (name, obj) in stage("scalar_matrix") {
            if let Object::ScalarMatrix { rows } = obj {
                r.scalar_matrices.insert(name.clone(), parse_dense(f, rows, &path(name, "rows"))?);
            }
        }
        for (name, obj) in stage("algebra") {
            if let Object::Algebra { labels, relations } = obj {
                let n = labels.len();
                let rows = relations
                    .iter()
                    .enumerate()
                    .map(|(i, t)| parse_terms(f, t, n * n, &path(name, &format!("relations[{i}]"))))
                    .collect::<Result<Vec<_>>>()?;
                let rel = Subspace::from_rows(f, n * n, rows);
                let a = QuadraticAlgebra::new(labels.clone(), rel).map_err(|e| doc_err(path(name, "labels"), e))?;
                r.algebras.insert(name.clone(), a);
            }
        }
        for (name, obj) in stage("structure_constants") {
            if let Object::StructureConstants {
                labels,
                dual_labels,
                products,
                unit,
            } = obj
            {
                let n = labels.len();
                if products.len() != n * n {
                    return Err(doc_err(path(name, "products"), format!("expected {} rows", n * n)));
                }
                let mut c = vec![f.zero(); n * n * n];
                for (ij, t) in products.iter().enumerate() {
                    for (k, s) in parse_terms(f, t, n, &path(name, &format!("products[{ij}]")))? {
                        c[ij * n + k] = s;
                    }
                }
                let unit = unit
                    .iter()
                    .enumerate()
                    .map(|(i, s)| parse_scalar(f, s, &path(name, &format!("unit[{i}]"))))
                    .collect::<Result<Vec<_>>>()?;
                let a = AlgebraStructureConstants::new(f, labels.clone(), dual_labels.clone(), c, unit)
                    .map_err(|e| doc_err(format!("objects.{name}"), e))?;
                r.structure_constants.insert(name.clone(), a);
            }
        }
        for (name, obj) in stage("context") {
            if let Object::Context {
                context_kind,
                levels,
                tables,
                unit,
                coalgebra,
            } = obj
            {
                let kind = ContextKind::from_name(context_kind)
                    .ok_or_else(|| doc_err(path(name, "context_kind"), format!("unknown context kind `{context_kind}`")))?;
                let dim = |k: usize, p: &str| {
                    levels
                        .get(k.wrapping_sub(1))
                        .map(|l| l.len())
                        .ok_or_else(|| doc_err(p, format!("level {k} out of range")))
                };
                let mut tabs = BTreeMap::new();
                for (ti, t) in tables.iter().enumerate() {
                    let p = path(name, &format!("tables[{ti}]"));
                    let d = dim(t.p + t.q, &p)?;
                    let rows = t
                        .rows
                        .iter()
                        .enumerate()
                        .map(|(i, row)| parse_terms(f, row, d, &format!("{p}.rows[{i}]")))
                        .collect::<Result<Vec<_>>>()?;
                    tabs.insert((t.p, t.q), rows);
                }
                let unit = match unit {
                    None => None,
                    Some(u) => {
                        let mut inclusions = Vec::new();
                        for (k, inc) in u.inclusions.iter().enumerate() {
                            let p = path(name, &format!("unit.inclusions[{k}]"));
                            let d = dim(k + 2, &p)?;
                            inclusions.push(
                                inc.iter()
                                    .enumerate()
                                    .map(|(i, row)| parse_terms(f, row, d, &format!("{p}[{i}]")))
                                    .collect::<Result<Vec<_>>>()?,
                            );
                        }
                        Some(Unit { index: u.index, inclusions })
                    }
                };
                let mut coalg = BTreeMap::new();
                for (ci, c) in coalgebra.iter().enumerate() {
                    let p = path(name, &format!("coalgebra[{ci}]"));
                    let d = dim(c.level, &p)?;
                    let delta = c
                        .delta
                        .iter()
                        .enumerate()
                        .map(|(i, row)| parse_terms(f, row, d * d, &format!("{p}.delta[{i}]")))
                        .collect::<Result<Vec<_>>>()?;
                    let eps = c
                        .eps
                        .iter()
                        .enumerate()
                        .map(|(i, s)| parse_scalar(f, s, &format!("{p}.eps[{i}]")))
                        .collect::<Result<Vec<_>>>()?;
                    coalg.insert(c.level, Coalgebra { delta, eps });
                }
                let ctx = MulContext::new(field.clone(), kind, levels.clone(), tabs, unit, coalg)
                    .map_err(|e| doc_err(format!("objects.{name}"), e))?;
                r.contexts.insert(name.clone(), Arc::new(ctx));
            }
        }
        for (name, obj) in stage("comonoid") {
            if let Object::Comonoid {
                comonoid_kind,
                algebra,
                delta1,
                eps1,
                max_degree,
                context,
            } = obj
            {
                let kind = ComonoidKind::from_name(comonoid_kind)
                    .ok_or_else(|| doc_err(path(name, "comonoid_kind"), format!("unknown comonoid kind `{comonoid_kind}`")))?;
                let missing = |key: &str| doc_err(path(name, key), "required for this comonoid kind");
                let c = match kind {
                    ComonoidKind::ConnectedQa => {
                        let aname = algebra.as_ref().ok_or_else(|| missing("algebra"))?;
                        let a = Resolved::lookup(&r.algebras, aname, &path(name, "algebra"), "algebra")?;
                        let n = a.generators();
                        let delta = delta1
                            .as_ref()
                            .ok_or_else(|| missing("delta1"))?
                            .iter()
                            .enumerate()
                            .map(|(i, t)| parse_terms(f, t, n * n, &path(name, &format!("delta1[{i}]"))))
                            .collect::<Result<Vec<_>>>()?;
                        let eps = eps1
                            .as_ref()
                            .ok_or_else(|| missing("eps1"))?
                            .iter()
                            .enumerate()
                            .map(|(i, s)| parse_scalar(f, s, &path(name, &format!("eps1[{i}]"))))
                            .collect::<Result<Vec<_>>>()?;
                        ComonoidPresentation::connected_qa(a.clone(), delta, eps, max_degree.unwrap_or(2))
                            .map_err(|e| doc_err(format!("objects.{name}"), e))?
                    }
                    ComonoidKind::BialgebraSlice => {
                        let cname = context.as_ref().ok_or_else(|| missing("context"))?;
                        let ctx = Resolved::lookup(&r.contexts, cname, &path(name, "context"), "context")?;
                        ComonoidPresentation::bialgebra_slice(ctx.clone()).map_err(|e| doc_err(format!("objects.{name}"), e))?
                    }
                };
                r.comonoids.insert(name.clone(), Arc::new(c));
            }
        }
        for (name, obj) in stage("matrix") {
            if let Object::Matrix {
                context,
                rows,
                cols,
                entries,
            } = obj
            {
                let p = path(name, "context");
                let ctx = match (r.contexts.get(context), r.comonoids.get(context)) {
                    (Some(c), _) => c.clone(),
                    (None, Some(c)) => c.context().clone(),
                    _ => return Err(doc_err(p, format!("unresolved reference `{context}` (expected context or comonoid)"))),
                };
                let d = ctx.entry_dim();
                let entries = entries
                    .iter()
                    .enumerate()
                    .map(|(i, t)| parse_terms(f, t, d, &path(name, &format!("entries[{i}]"))))
                    .collect::<Result<Vec<_>>>()?;
                let m = FirstOrderMatrix::new(&ctx, *rows, *cols, entries).map_err(|e| doc_err(format!("objects.{name}"), e))?;
                r.matrices.insert(name.clone(), m);
            }
        }
        for (name, obj) in stage("corep") {
            if let Object::Corep {
                comonoid,
                idempotent,
                matrix,
                ..
            } = obj
            {
                let c = Resolved::lookup(&r.comonoids, comonoid, &path(name, "comonoid"), "comonoid")?;
                let b = Resolved::lookup(&r.idempotents, idempotent, &path(name, "idempotent"), "idempotent")?;
                let m = Resolved::lookup(&r.matrices, matrix, &path(name, "matrix"), "matrix")?;
                let rep = Corepresentation::new(c, b.clone(), m.clone()).map_err(|e| doc_err(format!("objects.{name}"), e))?;
                r.coreps.insert(name.clone(), rep);
            }
        }
        Ok(r)
    }
}
