use super::{equal, scenario_report, Scenario, ScenarioRun};
use crate::algebra::{std_idempotent, QuadraticAlgebra};
use crate::arith::Field;
use crate::error::Result;
use crate::format::Document;
use crate::linalg::{sparse, Subspace};
use crate::report::Report;

pub struct SoQuadratic;

impl Scenario for SoQuadratic {
    fn name(&self) -> &'static str {
        "so_quadratic"
    }

    fn summary(&self) -> &'static str {
        "the orthogonal idempotent B_m: its quadratic algebra is the polynomial ring modulo the invariant quadric"
    }

    fn sizes(&self) -> &'static [usize] {
        &[2, 3, 4]
    }

    fn run(&self, m: usize) -> Result<ScenarioRun> {
        let f = Field::Rational;
        let b = std_idempotent(&f, &format!("so_B:{m}"))?;
        let sq = b.matrix().mul(b.matrix())?;
        let x = QuadraticAlgebra::x(&b);

        let mut rows: Vec<_> = (0..m)
            .flat_map(|i| ((i + 1)..m).map(move |j| (i, j)))
            .map(|(i, j)| vec![(i * m + j, f.one()), (j * m + i, f.int(-1))])
            .collect();
        rows.push(sparse::collect((0..m).map(|i| (i * m + (m - 1 - i), f.one())).collect()));
        let oracle = Subspace::from_rows(&f, m * m, rows);

        let dual = x.koszul_dual();
        let hilbert = |a: &QuadraticAlgebra| -> Result<String> {
            let d = (0..=4).map(|k| a.graded_dim(k)).collect::<Result<Vec<_>>>()?;
            Ok(format!("{d:?}"))
        };
        let children = vec![
            Report::verdict("idempotent", &sq == b.matrix()),
            equal("relation_dim", x.relations().dim(), m * (m - 1) / 2 + 1),
            Report::verdict("commutators_plus_quadric", x.relations().equals(&oracle)?),
            Report::pass("koszul_dual")
                .with("relation_dim", dual.relations().dim())
                .with("hilbert", hilbert(&dual)?),
        ];

        let mut bundle = Document::new(&f);
        bundle.add_idempotent("B", &b);
        bundle.add_algebra("X_B", &x);
        bundle.add_algebra("X_B_dual", &dual);
        let report = scenario_report("so_quadratic", m, children).with("hilbert", hilbert(&x)?);
        Ok(ScenarioRun { report, bundle })
    }
}
