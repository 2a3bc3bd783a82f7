use anyhow::{anyhow, bail, Context, Result};
use manin::algebra::{std_idempotent, Idempotent, QuadraticAlgebra};
use manin::arith::Field;
use manin::corep::{ComonoidPresentation, Corepresentation};
use manin::format::{Document, Object, Resolved};
use manin::linalg::Matrix;
use manin::manin::FirstOrderMatrix;
use std::cell::OnceCell;
use std::path::Path;
use std::sync::Arc;

/// Field and document shared by all commands. The document is resolved
/// lazily and without its `corep` objects, so a corep that fails its checks
/// surfaces as a check failure of the command that names it.
pub struct Inputs {
    pub field: Field,
    doc: Option<Document>,
    resolved: OnceCell<Resolved>,
}

/// A matrix argument: first-order over a context, or scalar.
pub enum MatrixArg {
    FirstOrder(FirstOrderMatrix),
    Scalar(Matrix),
}

impl Inputs {
    pub fn load(field: Option<&str>, doc: Option<&Path>) -> Result<Inputs> {
        let doc = match doc {
            Some(p) => {
                let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                Some(Document::from_json(&text)?)
            }
            None => None,
        };
        let field = match (field, &doc) {
            (Some(f), _) => Field::from_name(f)?,
            (None, Some(d)) => d.field()?,
            (None, None) => Field::Rational,
        };
        Ok(Inputs {
            field,
            doc,
            resolved: OnceCell::new(),
        })
    }

    fn object(&self, name: &str) -> Option<&Object> {
        self.doc.as_ref()?.objects.get(name)
    }

    fn resolved(&self) -> Result<&Resolved> {
        if let Some(r) = self.resolved.get() {
            return Ok(r);
        }
        let doc = self.doc.as_ref().ok_or_else(|| anyhow!("this argument needs --doc"))?;
        let mut stripped = doc.clone();
        stripped.objects.retain(|_, o| !matches!(o, Object::Corep { .. }));
        let r = stripped.resolve()?;
        Ok(self.resolved.get_or_init(|| r))
    }

    /// Raw rows of an `idempotent` or `scalar_matrix` object, unvalidated.
    pub fn raw_matrix(&self, name: &str) -> Result<Matrix> {
        let rows = match self.object(name) {
            Some(Object::Idempotent { matrix }) => matrix,
            Some(Object::ScalarMatrix { rows }) => rows,
            Some(o) => bail!("`{name}` is a {}, not a matrix", o.kind()),
            None => bail!("no object `{name}` in the document"),
        };
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| self.field.parse(s)).collect::<manin::Result<Vec<_>>>())
            .collect::<manin::Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(&self.field, rows)?)
    }

    /// `1,0;0,1` style literal.
    pub fn literal(&self, text: &str) -> Result<Matrix> {
        let rows = text
            .split(';')
            .map(|r| r.split(',').map(|s| self.field.parse(s.trim())).collect::<manin::Result<Vec<_>>>())
            .collect::<manin::Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(&self.field, rows)?)
    }

    /// A document idempotent or a standard `family:m` spec.
    pub fn idempotent(&self, r: &str) -> Result<Idempotent> {
        if self.object(r).is_some() {
            return Ok(self.resolved()?.idempotent(r)?.clone());
        }
        if r.contains(':') {
            return std_idempotent(&self.field, r).map_err(|e| anyhow!("bad idempotent `{r}`: {e}"));
        }
        bail!("`{r}` is neither a document object nor a family:m spec")
    }

    pub fn algebra(&self, r: &str) -> Result<QuadraticAlgebra> {
        if self.object(r).is_some() {
            return Ok(self.resolved()?.algebra(r)?.clone());
        }
        if let Some(spec) = r.strip_prefix("xi:") {
            return Ok(QuadraticAlgebra::xi(&self.idempotent(spec)?));
        }
        if let Some(spec) = r.strip_prefix("x:") {
            return Ok(QuadraticAlgebra::x(&self.idempotent(spec)?));
        }
        let builtin = |prefix: &str| r.strip_prefix(prefix).and_then(|n| n.parse::<usize>().ok()).filter(|&n| n >= 1);
        if let Some(n) = builtin("qpolyalg") {
            let field = match self.field {
                Field::Rational => Field::ratfunc("q")?,
                ref f => f.clone(),
            };
            return Ok(QuadraticAlgebra::x(&std_idempotent(&field, &format!("q_antisym:{n}"))?));
        }
        if let Some(n) = builtin("polyalg") {
            return Ok(QuadraticAlgebra::x(&std_idempotent(&self.field, &format!("antisym:{n}"))?));
        }
        if let Some(n) = builtin("extalg") {
            return Ok(QuadraticAlgebra::xi(&std_idempotent(&self.field, &format!("antisym:{n}"))?));
        }
        if let Some(n) = builtin("free") {
            return Ok(QuadraticAlgebra::tensor(&self.field, n));
        }
        bail!("unknown algebra `{r}`: expected a document object, x:SPEC, xi:SPEC, polyalgN, extalgN, freeN or qpolyalgN")
    }

    /// A document `matrix`, a document `scalar_matrix`, or a literal.
    pub fn matrix(&self, r: &str) -> Result<MatrixArg> {
        match self.object(r) {
            Some(Object::Matrix { .. }) => Ok(MatrixArg::FirstOrder(self.resolved()?.matrix(r)?.clone())),
            Some(Object::ScalarMatrix { .. }) => Ok(MatrixArg::Scalar(self.resolved()?.scalar_matrix(r)?.clone())),
            Some(o) => bail!("`{r}` is a {}, not a matrix", o.kind()),
            None if r.contains(',') || r.contains(';') || r.parse::<i64>().is_ok() => Ok(MatrixArg::Scalar(self.literal(r)?)),
            None => bail!("no matrix `{r}` in the document"),
        }
    }

    pub fn first_order(&self, r: &str) -> Result<FirstOrderMatrix> {
        match self.matrix(r)? {
            MatrixArg::FirstOrder(m) => Ok(m),
            MatrixArg::Scalar(_) => bail!("`{r}` must be a first-order matrix"),
        }
    }

    pub fn scalar(&self, r: &str) -> Result<Matrix> {
        match self.matrix(r)? {
            MatrixArg::Scalar(m) => Ok(m),
            MatrixArg::FirstOrder(_) => bail!("`{r}` must be a scalar matrix"),
        }
    }

    pub fn comonoid(&self, r: &str) -> Result<Arc<ComonoidPresentation>> {
        Ok(self.resolved()?.comonoid(r)?.clone())
    }

    /// The parts of a document corep, before its checks run.
    pub fn corep_parts(&self, r: &str) -> Result<(Arc<ComonoidPresentation>, Idempotent, FirstOrderMatrix)> {
        let Some(Object::Corep { comonoid, idempotent, matrix, .. }) = self.object(r) else {
            bail!("no corep `{r}` in the document");
        };
        let c = self.comonoid(comonoid)?;
        let b = self.idempotent(idempotent)?;
        let m = self.first_order(matrix)?.with_context(c.context())?;
        Ok((c, b, m))
    }

    /// Builds a document corep; a failing check is returned as a library error.
    pub fn corep(&self, r: &str) -> Result<manin::Result<Corepresentation>> {
        let (c, b, m) = self.corep_parts(r)?;
        Ok(Corepresentation::new(&c, b, m))
    }
}
