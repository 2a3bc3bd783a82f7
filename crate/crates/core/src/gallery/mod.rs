//! Worked examples. Each scenario builds its objects, checks its verdicts
//! and exports the objects as a document.

mod group;
mod matrix;
mod mq;
mod so;
mod yangian;

use crate::error::{Error, Result};
use crate::format::Document;
use crate::report::Report;

pub use group::z2_slice;
pub use mq::mq_relations;

/// Verdicts of one run and the objects they were computed on.
#[derive(Clone, Debug)]
pub struct ScenarioRun {
    pub report: Report,
    pub bundle: Document,
}

pub trait Scenario: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    /// Admissible sizes `m`; a run without an explicit size covers all of them.
    fn sizes(&self) -> &'static [usize];
    fn run(&self, m: usize) -> Result<ScenarioRun>;
}

pub fn scenarios() -> Vec<Box<dyn Scenario>> {
    vec![
        Box::new(mq::Mq),
        Box::new(matrix::MatrixAlgebra),
        Box::new(yangian::YangianEval),
        Box::new(so::SoQuadratic),
        Box::new(group::FiniteGroup),
    ]
}

pub fn scenario(name: &str) -> Result<Box<dyn Scenario>> {
    scenarios()
        .into_iter()
        .find(|s| s.name() == name)
        .ok_or_else(|| Error::InvalidParameters(format!("unknown scenario `{name}`")))
}

/// Runs one size, or every admissible size in order.
pub fn run(name: &str, m: Option<usize>) -> Result<Vec<ScenarioRun>> {
    let s = scenario(name)?;
    match m {
        Some(m) if !s.sizes().contains(&m) => Err(Error::InvalidParameters(format!(
            "scenario `{name}` takes m in {:?}, got {m}",
            s.sizes()
        ))),
        Some(m) => Ok(vec![s.run(m)?]),
        None => s.sizes().iter().map(|&m| s.run(m)).collect(),
    }
}

/// A check expected to fail: passes when `r` fails, keeping its witness.
fn expect_failure(check: &str, r: &Report) -> Report {
    let mut out = Report::verdict(check, !r.pass);
    if let Some(w) = &r.witness {
        out = out.with("witness", format!("{w:?}"));
    }
    if let Some(e) = &r.expansion {
        out = out.with("expansion", e);
    }
    out
}

fn equal(check: &str, lhs: usize, rhs: usize) -> Report {
    Report::verdict(check, lhs == rhs).with("lhs", lhs).with("rhs", rhs)
}

fn scenario_report(name: &str, m: usize, children: Vec<Report>) -> Report {
    Report::all(name, children).with("m", m)
}
