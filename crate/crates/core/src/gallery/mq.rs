use super::{equal, scenario_report, Scenario, ScenarioRun};
use crate::algebra::{std_idempotent, QuadraticAlgebra};
use crate::arith::{Field, Scalar};
use crate::context::qa_context;
use crate::corep::{validate_comonoid, ComonoidPresentation, Corepresentation};
use crate::error::{Error, Result};
use crate::format::Document;
use crate::linalg::{sparse, SparseVec, Subspace};
use crate::manin::{manin_components, FirstOrderMatrix};
use crate::report::Report;
use num::BigRational;
use std::sync::Arc;

pub struct Mq;

fn labels(m: usize) -> Vec<String> {
    (0..m * m).map(|g| format!("a{}{}", g / m + 1, g % m + 1)).collect()
}

/// Defining relations of `M_q(m)` on the generators `a^i_j` (index
/// `i·m + j`), written out entry by entry:
/// `a^j_k a^i_k = q a^i_k a^j_k`, `a^i_l a^i_k = q a^i_k a^i_l`,
/// `a^i_l a^j_k = a^j_k a^i_l` and
/// `a^i_k a^j_l − a^j_l a^i_k = (q⁻¹ − q) a^j_k a^i_l` for `i < j`, `k < l`.
pub fn mq_relations(field: &Field, m: usize) -> Result<Vec<SparseVec>> {
    let q = field
        .variable()
        .ok_or_else(|| Error::InvalidParameters("M_q needs a rational-function field".into()))?;
    let qi = q.inv()?;
    let one = field.one();
    let neg = field.int(-1);
    let g = m * m;
    let a = |i: usize, j: usize| i * m + j;
    let w = |x: usize, y: usize| x * g + y;
    let row = |terms: Vec<(usize, Scalar)>| sparse::collect(terms);
    let mut rows = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            for k in 0..m {
                rows.push(row(vec![(w(a(j, k), a(i, k)), one.clone()), (w(a(i, k), a(j, k)), -&q)]));
                rows.push(row(vec![(w(a(k, j), a(k, i)), one.clone()), (w(a(k, i), a(k, j)), -&q)]));
            }
        }
    }
    for i in 0..m {
        for j in (i + 1)..m {
            for k in 0..m {
                for l in (k + 1)..m {
                    rows.push(row(vec![(w(a(i, l), a(j, k)), one.clone()), (w(a(j, k), a(i, l)), neg.clone())]));
                    rows.push(row(vec![
                        (w(a(i, k), a(j, l)), one.clone()),
                        (w(a(j, l), a(i, k)), neg.clone()),
                        (w(a(j, k), a(i, l)), &q - &qi),
                    ]));
                }
            }
        }
    }
    Ok(rows)
}

/// Manin relations of the generic matrix and of its transpose for `(B, B)`.
fn manin_span(field: &Field, spec: &str, m: usize) -> Result<Subspace> {
    let b = std_idempotent(field, spec)?;
    let free = Arc::new(qa_context(&QuadraticAlgebra::tensor(field, m * m), 2)?);
    let one = field.one();
    let gen = FirstOrderMatrix::from_fn(&free, m, m, |i, j| vec![(i * m + j, one.clone())])?;
    let mut rows = manin_components(&b, &b, &gen, &gen)?;
    let t = gen.transpose();
    rows.extend(manin_components(&b, &b, &t, &t)?);
    Ok(Subspace::from_rows(field, m.pow(4), rows))
}

fn specialize(rows: &[SparseVec], t: &BigRational) -> Result<Vec<SparseVec>> {
    let f = Field::Rational;
    rows.iter()
        .map(|r| {
            let v = r
                .iter()
                .map(|(i, s)| Ok((*i, f.from_rational(s.specialize(t).ok_or(Error::DivisionByZero)?))))
                .collect::<Result<Vec<_>>>()?;
            Ok(sparse::collect(v))
        })
        .collect()
}

fn coproduct(field: &Field, m: usize, coopposite: bool) -> Vec<SparseVec> {
    let g = m * m;
    (0..g)
        .map(|x| {
            let (i, j) = (x / m, x % m);
            let terms = (0..m)
                .map(|k| {
                    let (l, r) = (i * m + k, k * m + j);
                    let idx = if coopposite { r * g + l } else { l * g + r };
                    (idx, field.one())
                })
                .collect();
            sparse::collect(terms)
        })
        .collect()
}

impl Scenario for Mq {
    fn name(&self) -> &'static str {
        "mq"
    }

    fn summary(&self) -> &'static str {
        "M_q(m) over Q(q): its relations are exactly the A^q-Manin conditions for M and Mᵀ; M and Mᵀ are corepresentations"
    }

    fn sizes(&self) -> &'static [usize] {
        &[2, 3]
    }

    fn run(&self, m: usize) -> Result<ScenarioRun> {
        let f = Field::ratfunc("q")?;
        let spec = format!("q_antisym:{m}");
        let rel_rows = mq_relations(&f, m)?;
        let rel = Subspace::from_rows(&f, m.pow(4), rel_rows.clone());
        let manin = manin_span(&f, &spec, m)?;
        let mut children = vec![
            equal("relation_dim", rel.dim(), m * m * (m * m - 1) / 2),
            equal("manin_span_dim", manin.dim(), rel.dim()),
            Report::verdict("span_equality", manin.equals(&rel)?),
        ];

        let q1 = specialize(&rel_rows, &BigRational::from_integer(1.into()))?;
        let at_one = Subspace::from_rows(&Field::Rational, m.pow(4), q1);
        let classical = manin_span(&Field::Rational, &format!("antisym:{m}"), m)?;
        let g = m * m;
        let commutators = (0..g)
            .flat_map(|x| ((x + 1)..g).map(move |y| (x, y)))
            .map(|(x, y)| vec![(x * g + y, Field::Rational.one()), (y * g + x, Field::Rational.int(-1))])
            .collect();
        let commutative = Subspace::from_rows(&Field::Rational, m.pow(4), commutators);
        children.push(Report::verdict("q1_matches_classical_manin", at_one.equals(&classical)?));
        children.push(Report::verdict("q1_is_commutative", at_one.equals(&commutative)?));

        let alg = QuadraticAlgebra::from_rows(&f, labels(m), rel.basis().to_vec());
        let eps: Vec<Scalar> = (0..g).map(|x| if x / m == x % m { f.one() } else { f.zero() }).collect();
        let bialg = Arc::new(ComonoidPresentation::connected_qa(alg.clone(), coproduct(&f, m, false), eps.clone(), 2)?);
        let cop = Arc::new(ComonoidPresentation::connected_qa(alg, coproduct(&f, m, true), eps, 2)?);
        children.push(validate_comonoid(&bialg));
        children.push(validate_comonoid(&cop).with("coproduct", "opposite"));

        let b = std_idempotent(&f, &spec)?;
        let one = f.one();
        let gens = FirstOrderMatrix::from_fn(bialg.context(), m, m, |i, j| vec![(i * m + j, one.clone())])?;
        let omega = Corepresentation::new(&bialg, b.clone(), gens.clone())?;
        let omega_t = Corepresentation::new(&cop, b, gens.transpose().with_context(cop.context())?)?;
        children.push(Report::all("omega_q", omega.checks().children.clone()));
        children.push(Report::all("omega_q_transpose", omega_t.checks().children.clone()));

        let mut bundle = Document::new(&f);
        let c1 = bundle.add_comonoid("mq", &bialg);
        let c2 = bundle.add_comonoid("mq_cop", &cop);
        bundle.add_corep("omega_q", &omega, &c1);
        bundle.add_corep("omega_q_transpose", &omega_t, &c2);
        let report = scenario_report("mq", m, children).with("relation_dim", rel.dim());
        Ok(ScenarioRun { report, bundle })
    }
}
