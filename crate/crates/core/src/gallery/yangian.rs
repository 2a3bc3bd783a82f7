use super::{expect_failure, scenario_report, Scenario, ScenarioRun};
use crate::algebra::std_idempotent;
use crate::arith::Field;
use crate::context::{pbw_context, LieAlgebra, MulContext};
use crate::error::Result;
use crate::format::Document;
use crate::manin::{check_manin, FirstOrderMatrix};
use crate::report::Report;
use std::sync::Arc;

pub struct YangianEval;

/// `δ^i_j + e_ij/(z − shift)`; the unit sits at index 0, `e_ij` at `1 + i·m + j`.
fn evaluation(ctx: &Arc<MulContext>, m: usize, shift: i64) -> Result<FirstOrderMatrix> {
    let f = ctx.field();
    let z = f.variable().expect("rational-function field");
    let c = (&z - &f.int(shift)).inv()?;
    FirstOrderMatrix::from_fn(ctx, m, m, |i, j| {
        let mut v = vec![(1 + i * m + j, c.clone())];
        if i == j {
            v.insert(0, (0, f.one()));
        }
        v
    })
}

impl Scenario for YangianEval {
    fn name(&self) -> &'static str {
        "yangian_eval"
    }

    fn summary(&self) -> &'static str {
        "evaluation Yangian in U(gl_m) over Q(z): X = 1 + E/z and Y = 1 + E/(z-1) satisfy A X⁽¹⁾Y⁽²⁾(1-A) = 0"
    }

    fn sizes(&self) -> &'static [usize] {
        &[2, 3]
    }

    fn run(&self, m: usize) -> Result<ScenarioRun> {
        let f = Field::ratfunc("z")?;
        let a = std_idempotent(&f, &format!("antisym:{m}"))?;
        let ctx = Arc::new(pbw_context(&LieAlgebra::gl(&f, m), 2)?);
        let (x, y) = (evaluation(&ctx, m, 0)?, evaluation(&ctx, m, 1)?);
        let shifted = check_manin(&a, &a, &x, &y)?;
        let unshifted = check_manin(&a, &a, &x, &x)?;

        // commuting entries: only the unshifted pair survives
        let labels = LieAlgebra::gl(&f, m).labels().to_vec();
        let ab = Arc::new(pbw_context(&LieAlgebra::abelian(&f, labels), 2)?);
        let (xa, ya) = (evaluation(&ab, m, 0)?, evaluation(&ab, m, 1)?);
        let children = vec![
            Report::all("shifted_identity", vec![shifted]),
            expect_failure("unshifted_fails", &unshifted),
            Report::all("abelian_unshifted", vec![check_manin(&a, &a, &xa, &xa)?]),
            expect_failure("abelian_shifted_fails", &check_manin(&a, &a, &xa, &ya)?),
        ];

        let mut bundle = Document::new(&f);
        bundle.add_idempotent("A", &a);
        let c = bundle.add_context("pbw_gl", &ctx);
        bundle.add_matrix("X", &x, &c);
        bundle.add_matrix("Y", &y, &c);
        Ok(ScenarioRun {
            report: scenario_report("yangian_eval", m, children),
            bundle,
        })
    }
}
