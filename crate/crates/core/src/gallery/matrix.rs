use super::{scenario_report, Scenario, ScenarioRun};
use crate::algebra::std_idempotent;
use crate::arith::Field;
use crate::context::{s_embedding_context, AlgebraStructureConstants};
use crate::corep::{
    corep_direct_sum, corep_tensor, dequantise, s_embed, s_embedding_comonoid, ComonoidPresentation, Corepresentation,
};
use crate::error::Result;
use crate::format::Document;
use crate::linalg::{sparse, Matrix};
use crate::manin::TensorFlavor;
use crate::report::Report;
use std::sync::Arc;

pub struct MatrixAlgebra;

fn elementary(f: &Field, m: usize) -> Vec<Matrix> {
    (0..m * m)
        .map(|k| Matrix::from_fn(f, m, m, |i, j| if i * m + j == k { f.one() } else { f.zero() }))
        .collect()
}

/// `Δ(a^i_j) = Σ_k a^i_k ⊗ a^k_j` and `ε(a^i_j) = δ^i_j` on the entry space.
fn coproduct_report(c: &ComonoidPresentation, m: usize) -> Report {
    let f = c.field();
    let g = m * m;
    for x in 0..g {
        let (i, j) = (x / m, x % m);
        let want = sparse::collect((0..m).map(|k| ((i * m + k) * g + k * m + j, f.one())).collect());
        if c.delta1()[x] != want {
            return Report::fail("coproduct_formula", vec![i + 1, j + 1], c.context().render_tensor(1, &c.delta1()[x]));
        }
        let e = if i == j { f.one() } else { f.zero() };
        if c.eps1()[x] != e {
            return Report::fail("counit_formula", vec![i + 1, j + 1], c.eps1()[x].to_string());
        }
    }
    Report::pass("coproduct_formula")
}

fn as_report(check: &str, r: Result<Corepresentation>) -> (Report, Option<Corepresentation>) {
    match r {
        Ok(c) => (Report::all(check, c.checks().children.clone()), Some(c)),
        Err(e) => (Report::fail(check, vec![], e.to_string()), None),
    }
}

impl Scenario for MatrixAlgebra {
    fn name(&self) -> &'static str {
        "matrix_algebra"
    }

    fn summary(&self) -> &'static str {
        "functions on Mat_m: the standard corepresentation, its transpose over the opposite coproduct, sums, tensor squares and the classical roundtrip"
    }

    fn sizes(&self) -> &'static [usize] {
        &[2, 3]
    }

    fn run(&self, m: usize) -> Result<ScenarioRun> {
        let f = Field::Rational;
        let mat = AlgebraStructureConstants::matrix_algebra(&f, m);
        let slice = Arc::new(ComonoidPresentation::bialgebra_slice(Arc::new(s_embedding_context(&mat, 4)?))?);
        let cop = Arc::new(ComonoidPresentation::bialgebra_slice(Arc::new(slice.context().coopposite()))?);
        let rho = elementary(&f, m);
        let b = std_idempotent(&f, &format!("antisym:{m}"))?;

        let mut children = vec![coproduct_report(&slice, m)];
        let standard = s_embed(&slice, &rho)?;
        children.push(Report::all("standard", standard.checks().children.clone()));
        let (r, transpose) = as_report(
            "transpose_over_opposite_coproduct",
            standard
                .matrix()
                .transpose()
                .with_context(cop.context())
                .and_then(|t| Corepresentation::new(&cop, b.clone(), t)),
        );
        children.push(r);
        let (r, sum) = as_report("direct_sum", corep_direct_sum(&standard, &standard));
        children.push(r.with("dim", 2 * m));
        let (r, _) = as_report("tensor_square", corep_tensor(&standard, &standard, TensorFlavor::White));
        children.push(r.with("dim", m * m));

        let connected = Arc::new(s_embedding_comonoid(&mat)?);
        let back = dequantise(&s_embed(&connected, &rho)?)?;
        children.push(Report::verdict(
            "dequantise_roundtrip",
            back.algebra.constants() == mat.constants() && back.algebra.unit() == mat.unit() && back.matrices == rho,
        ));

        let mut bundle = Document::new(&f);
        bundle.add_structure_constants("mat", &mat);
        let c1 = bundle.add_comonoid("functions", &slice);
        bundle.add_corep("standard", &standard, &c1);
        if let Some(t) = &transpose {
            let c2 = bundle.add_comonoid("functions_cop", &cop);
            bundle.add_corep("transpose", t, &c2);
        }
        if let Some(s) = &sum {
            bundle.add_corep("standard_sum", s, &c1);
        }
        Ok(ScenarioRun {
            report: scenario_report("matrix_algebra", m, children),
            bundle,
        })
    }
}
