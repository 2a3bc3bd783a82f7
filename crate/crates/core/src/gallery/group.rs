use super::{scenario_report, Scenario, ScenarioRun};
use crate::algebra::{std_idempotent, Idempotent};
use crate::arith::{Field, Scalar};
use crate::context::{slice_context, AlgebraStructureConstants};
use crate::corep::{corep_dual, hom_corep, verify_inverse, ComonoidPresentation, Corepresentation, DualFlavor};
use crate::error::Result;
use crate::format::Document;
use crate::manin::FirstOrderMatrix;
use crate::report::Report;
use std::sync::Arc;

pub struct FiniteGroup;

/// Functions on ℤ/2 in the character basis `{1, χ}`: `χ² = 1`,
/// `Δχ = χ⊗χ`, `ε(χ) = 1`, and the antipode is the identity.
pub fn z2_slice(field: &Field, max_degree: usize) -> Result<(AlgebraStructureConstants, Arc<ComonoidPresentation>)> {
    let alg = AlgebraStructureConstants::group_algebra(field, &["1", "chi"], &[vec![0, 1], vec![1, 0]])?;
    let delta = vec![vec![(0, field.one())], vec![(3, field.one())]];
    let ctx = slice_context(&alg, delta, vec![field.one(), field.one()], max_degree)?;
    Ok((alg, Arc::new(ComonoidPresentation::bialgebra_slice(Arc::new(ctx))?)))
}

/// `m ∘ (S ⊗ id) ∘ Δ = u ∘ ε` and `m ∘ (id ⊗ S) ∘ Δ = u ∘ ε` on each basis vector.
fn antipode_report(alg: &AlgebraStructureConstants, c: &ComonoidPresentation, s: &[Vec<(usize, Scalar)>]) -> Report {
    let f = alg.field();
    let n = alg.dim();
    for a in 0..n {
        for left in [true, false] {
            let mut acc = vec![f.zero(); n];
            for (bc, coef) in &c.delta1()[a] {
                let (b, d) = (bc / n, bc % n);
                let (x, y) = if left { (&s[b], &vec![(d, f.one())]) } else { (&vec![(b, f.one())], &s[d]) };
                for (i, si) in x {
                    for (j, sj) in y {
                        for (k, slot) in acc.iter_mut().enumerate() {
                            *slot = &*slot + &(&(coef * si) * &(sj * alg.c(*i, *j, k)));
                        }
                    }
                }
            }
            let want: Vec<Scalar> = alg.unit().iter().map(|u| u * &c.eps1()[a]).collect();
            if acc != want {
                return Report::fail("antipode", vec![a + 1], alg.labels()[a].clone());
            }
        }
    }
    Report::pass("antipode")
}

impl Scenario for FiniteGroup {
    fn name(&self) -> &'static str {
        "finite_group"
    }

    fn summary(&self) -> &'static str {
        "functions on Z/2: regular and sign corepresentations, the dual and the hom corepresentation"
    }

    fn sizes(&self) -> &'static [usize] {
        &[2]
    }

    fn run(&self, m: usize) -> Result<ScenarioRun> {
        let f = Field::Rational;
        let (alg, c) = z2_slice(&f, 4)?;
        let s = vec![vec![(0, f.one())], vec![(1, f.one())]];
        let h = f.ratio(1, 2);
        let (de, dg) = (vec![(0, h.clone()), (1, h.clone())], vec![(0, h.clone()), (1, -&h)]);
        let reg_m = FirstOrderMatrix::new(c.context(), 2, 2, vec![de.clone(), dg.clone(), dg, de])?;
        let regular = Corepresentation::new(&c, std_idempotent(&f, "antisym:2")?, reg_m)?;
        let sign_m = FirstOrderMatrix::new(c.context(), 1, 1, vec![vec![(1, f.one())]])?;
        let sign = Corepresentation::new(&c, Idempotent::zero(&f, 1), sign_m)?;
        // regular(g) is an involution, so M is its own inverse
        let minv = regular.matrix().clone();

        let mut children = vec![
            antipode_report(&alg, &c, &s),
            Report::all("regular", regular.checks().children.clone()),
            Report::all("sign", sign.checks().children.clone())
                .with("matrix", sign.matrix().render_entry(0, 0))
                .with("coproduct", c.context().render_tensor(1, &c.delta1()[1])),
            Report::verdict("inverse", verify_inverse(regular.matrix(), &minv).is_ok()),
        ];
        let dual = corep_dual(&regular, &minv, DualFlavor::Dual)?;
        children.push(Report::all("dual", dual.checks().children.clone()));
        let kdual = corep_dual(&regular, &minv, DualFlavor::KoszulDual)?;
        children.push(Report::all("koszul_dual", kdual.checks().children.clone()));
        let hom = hom_corep(&regular, &sign, &minv)?;
        children.push(Report::all("hom_regular_sign", hom.checks().children.clone()).with("dim", hom.dim()));

        let mut bundle = Document::new(&f);
        bundle.add_structure_constants("functions", &alg);
        let cn = bundle.add_comonoid("z2", &c);
        bundle.add_corep("regular", &regular, &cn);
        bundle.add_corep("sign", &sign, &cn);
        bundle.add_corep("dual", &dual, &cn);
        bundle.add_matrix("regular_inverse", &minv, &cn);
        let hc = bundle.add_comonoid("z2_lifted", hom.comonoid());
        bundle.add_corep("hom_regular_sign", &hom, &hc);
        Ok(ScenarioRun {
            report: scenario_report("finite_group", m, children).with("group", "Z/2"),
            bundle,
        })
    }
}
