use crate::cli::{AlgebraCmd, Command, ComonoidCmd, CorepCmd, DualKind, Flavor, IdempotentArgs, ManinCmd, Property};
use crate::inputs::{Inputs, MatrixArg};
use anyhow::{bail, Result};
use manin::algebra::{cohom_algebra, product, std_matrix, Idempotent, QuadraticAlgebra};
use manin::corep::{
    coend_comonoid_with_degree, corep_check, corep_coproduct, corep_direct_sum, corep_dual, corep_morphism_report,
    corep_tensor, dequantise, hom_corep, s_embed, s_embedding_comonoid, validate_comonoid, Corepresentation, DualFlavor,
};
use manin::format::Document;
use manin::linalg::Matrix;
use manin::manin::{check_manin, check_scalar_manin, commute_report, direct_sum, dot_tensor, tensor_existence, TensorFlavor};
use manin::properties::{prop_cop, prop_lmn, prop_pmn};
use manin::{Error, Report};
use std::sync::Arc;

/// One command path and the library operations it reaches.
pub struct Route {
    pub path: &'static str,
    pub ops: &'static [&'static str],
}

pub const DISPATCH: &[Route] = &[
    Route { path: "check-idempotent", ops: &["Idempotent::new", "std_matrix"] },
    Route { path: "algebra info", ops: &["QuadraticAlgebra::relation_lines"] },
    Route { path: "algebra hilbert", ops: &["QuadraticAlgebra::graded_dim_capped"] },
    Route { path: "algebra koszul", ops: &["QuadraticAlgebra::koszul_dual"] },
    Route { path: "algebra product", ops: &["product"] },
    Route { path: "algebra cohom", ops: &["cohom_algebra"] },
    Route { path: "manin check", ops: &["check_manin", "check_scalar_manin"] },
    Route { path: "manin commute", ops: &["commute_report"] },
    Route { path: "manin dsum", ops: &["direct_sum", "Idempotent::dis", "Idempotent::cop"] },
    Route { path: "manin dtensor", ops: &["tensor_existence", "dot_tensor", "Idempotent::tep", "Idempotent::black_tep"] },
    Route { path: "manin props", ops: &["prop_lmn", "prop_cop", "prop_pmn"] },
    Route { path: "comonoid validate", ops: &["validate_comonoid"] },
    Route { path: "comonoid coend", ops: &["coend_comonoid_with_degree", "Corepresentation::identity"] },
    Route { path: "corep check", ops: &["corep_check"] },
    Route { path: "corep morphism", ops: &["corep_morphism_report"] },
    Route { path: "corep dsum", ops: &["corep_direct_sum"] },
    Route { path: "corep coproduct", ops: &["corep_coproduct"] },
    Route { path: "corep tensor", ops: &["corep_tensor"] },
    Route { path: "corep dual", ops: &["corep_dual"] },
    Route { path: "corep hom", ops: &["hom_corep"] },
    Route { path: "corep dequantise", ops: &["dequantise", "s_embedding_comonoid", "s_embed"] },
    Route { path: "gallery", ops: &["gallery::run"] },
];

pub fn route(cmd: &Command) -> &'static str {
    match cmd {
        Command::CheckIdempotent(_) => "check-idempotent",
        Command::Algebra(a) => match a {
            AlgebraCmd::Info { .. } => "algebra info",
            AlgebraCmd::Hilbert { .. } => "algebra hilbert",
            AlgebraCmd::Koszul { .. } => "algebra koszul",
            AlgebraCmd::Product { .. } => "algebra product",
            AlgebraCmd::Cohom { .. } => "algebra cohom",
        },
        Command::Manin(m) => match m {
            ManinCmd::Check { .. } => "manin check",
            ManinCmd::Commute { .. } => "manin commute",
            ManinCmd::Dsum { .. } => "manin dsum",
            ManinCmd::Dtensor { .. } => "manin dtensor",
            ManinCmd::Props { .. } => "manin props",
        },
        Command::Comonoid(c) => match c {
            ComonoidCmd::Validate { .. } => "comonoid validate",
            ComonoidCmd::Coend { .. } => "comonoid coend",
        },
        Command::Corep(c) => match c {
            CorepCmd::Check { .. } => "corep check",
            CorepCmd::Morphism { .. } => "corep morphism",
            CorepCmd::Dsum { .. } => "corep dsum",
            CorepCmd::Coproduct { .. } => "corep coproduct",
            CorepCmd::Tensor { .. } => "corep tensor",
            CorepCmd::Dual { .. } => "corep dual",
            CorepCmd::Hom { .. } => "corep hom",
            CorepCmd::Dequantise { .. } => "corep dequantise",
        },
        Command::Gallery { .. } => "gallery",
    }
}

/// A report and the documents to write with `--out`; several documents
/// get a `_m{size}` suffix.
pub struct Outcome {
    pub report: Report,
    pub bundles: Vec<(Option<usize>, Document)>,
}

impl Outcome {
    fn report(report: Report) -> Outcome {
        Outcome { report, bundles: Vec::new() }
    }

    fn with_bundle(report: Report, doc: Document) -> Outcome {
        Outcome {
            report,
            bundles: vec![(None, doc)],
        }
    }
}

/// Library errors that amount to a failed check rather than bad input.
pub fn failure_report(check: &str, e: &Error) -> Option<Report> {
    let mut r = Report::verdict(check, false);
    match e {
        Error::NotIdempotent { row, col, .. } | Error::InverseFailure { row, col } => r.witness = Some(vec![*row, *col]),
        Error::NonCommutingEntries { .. } | Error::NonExistence { .. } | Error::CorepCheck(_) => {}
        _ => return None,
    }
    r.expansion = Some(e.to_string());
    Some(r)
}

/// Splits a library result into a value or a failing report.
fn checked<T>(check: &str, r: manin::Result<T>) -> Result<std::result::Result<T, Report>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e) => match failure_report(check, &e) {
            Some(rep) => Ok(Err(rep)),
            None => Err(e.into()),
        },
    }
}

macro_rules! try_check {
    ($check:expr, $e:expr) => {
        match checked($check, $e)? {
            Ok(v) => v,
            Err(rep) => return Ok(Outcome::report(rep)),
        }
    };
}

fn rows_text(rows: &[Vec<String>]) -> String {
    let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

fn scalar_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect()
}

fn algebra_report(check: &str, a: &QuadraticAlgebra) -> Report {
    Report::pass(check)
        .with("field", a.field().name())
        .with("generators", a.generators())
        .with("labels", a.labels().join(" "))
        .with("relation_dim", a.relations().dim())
        .with("relations", a.relation_lines().join("; "))
}

fn corep_report(check: &str, r: &Corepresentation) -> Report {
    Report::all(check, r.checks().children.clone())
        .with("dim", r.dim())
        .with("matrix", rows_text(&r.matrix().render_rows()))
}

fn corep_bundle(inputs: &Inputs, name: &str, r: &Corepresentation) -> Document {
    let mut doc = Document::new(&inputs.field);
    let c = doc.add_comonoid(&format!("{name}_comonoid"), r.comonoid());
    doc.add_corep(name, r, &c);
    doc
}

fn flavor(f: Flavor) -> TensorFlavor {
    match f {
        Flavor::White => TensorFlavor::White,
        Flavor::Black => TensorFlavor::Black,
    }
}

pub struct Settings {
    pub max_degree: Option<usize>,
    pub seed: u64,
}

pub fn execute(cmd: &Command, inputs: &Inputs, s: &Settings) -> Result<Outcome> {
    match cmd {
        Command::CheckIdempotent(args) => check_idempotent(args, inputs),
        Command::Algebra(a) => algebra(a, inputs, s),
        Command::Manin(m) => manin_cmd(m, inputs, s),
        Command::Comonoid(c) => comonoid(c, inputs, s),
        Command::Corep(c) => corep(c, inputs),
        Command::Gallery { name, m } => {
            let runs = manin::gallery::run(name, *m)?;
            if let [one] = runs.as_slice() {
                return Ok(Outcome::with_bundle(one.report.clone(), one.bundle.clone()));
            }
            let size = |r: &Report| r.data.get("m").and_then(|m| m.parse().ok());
            Ok(Outcome {
                report: Report::all(name.as_str(), runs.iter().map(|r| r.report.clone()).collect()),
                bundles: runs.into_iter().map(|r| (size(&r.report), r.bundle)).collect(),
            })
        }
    }
}

fn check_idempotent(args: &IdempotentArgs, inputs: &Inputs) -> Result<Outcome> {
    let matrix = match (&args.spec, &args.name, &args.matrix) {
        (Some(spec), _, _) => std_matrix(&inputs.field, spec)?,
        (_, Some(name), _) => inputs.raw_matrix(name)?,
        (_, _, Some(text)) => inputs.literal(text)?,
        _ => bail!("give one of --spec, --name, --matrix"),
    };
    let e = try_check!("idempotent", Idempotent::new(matrix));
    let report = Report::pass("idempotent").with("side", e.dim()).with("rank", e.rank());
    let mut doc = Document::new(&inputs.field);
    doc.add_idempotent("E", &e);
    Ok(Outcome::with_bundle(report, doc))
}

fn algebra(cmd: &AlgebraCmd, inputs: &Inputs, s: &Settings) -> Result<Outcome> {
    let mut doc = Document::new(&inputs.field);
    let report = match cmd {
        AlgebraCmd::Info { algebra } => {
            let a = inputs.algebra(algebra)?;
            doc = Document::new(a.field());
            doc.add_algebra(algebra, &a);
            algebra_report("algebra", &a)
        }
        AlgebraCmd::Hilbert { algebra, k } => {
            let a = inputs.algebra(algebra)?;
            let cap = s.max_degree.unwrap_or(manin::algebra::DEFAULT_DEGREE_CAP).max(*k);
            let dims = (0..=*k).map(|d| a.graded_dim_capped(d, cap)).collect::<manin::Result<Vec<_>>>()?;
            return Ok(Outcome::report(
                Report::pass("hilbert")
                    .with("algebra", algebra)
                    .with("degree", k)
                    .with("dim", dims[*k])
                    .with("dims", format!("{dims:?}")),
            ));
        }
        AlgebraCmd::Koszul { algebra } => {
            let d = inputs.algebra(algebra)?.koszul_dual();
            doc = Document::new(d.field());
            doc.add_algebra("koszul_dual", &d);
            algebra_report("koszul_dual", &d)
        }
        AlgebraCmd::Product { left, right, kind } => {
            let p = product(&inputs.algebra(left)?, &inputs.algebra(right)?, kind)?;
            doc.add_algebra(kind, &p);
            algebra_report(kind, &p)
        }
        AlgebraCmd::Cohom { b, a } => {
            let c = cohom_algebra(&inputs.idempotent(b)?, &inputs.idempotent(a)?)?;
            doc.add_algebra("cohom", &c);
            algebra_report("cohom", &c)
        }
    };
    Ok(Outcome::with_bundle(report, doc))
}

fn renamed(mut r: Report, check: &str) -> Report {
    r.check = check.into();
    r
}

fn manin_cmd(cmd: &ManinCmd, inputs: &Inputs, s: &Settings) -> Result<Outcome> {
    let report = match cmd {
        ManinCmd::Check { a, b, x, y } => {
            let ea = inputs.idempotent(a)?;
            let eb = inputs.idempotent(b.as_deref().unwrap_or(a))?;
            match (inputs.matrix(x)?, y) {
                (MatrixArg::Scalar(k), None) => check_scalar_manin(&ea, &eb, &k)?,
                (MatrixArg::Scalar(_), Some(_)) => bail!("a scalar matrix takes no --y"),
                (MatrixArg::FirstOrder(mx), y) => {
                    let my = match y {
                        Some(y) => inputs.first_order(y)?,
                        None => mx.clone(),
                    };
                    check_manin(&ea, &eb, &mx, &my)?
                }
            }
        }
        ManinCmd::Commute { x, y } => commute_report(&inputs.first_order(x)?, &inputs.first_order(y)?)?,
        ManinCmd::Dsum { x, y, b, b2, c, c2, coproduct } => {
            let (m, n) = (inputs.first_order(x)?, inputs.first_order(y)?);
            let (eb, ec) = (inputs.idempotent(b)?, inputs.idempotent(c)?);
            let eb2 = inputs.idempotent(b2.as_deref().unwrap_or(b))?;
            let ec2 = inputs.idempotent(c2.as_deref().unwrap_or(c))?;
            let l = direct_sum(&m, &n)?;
            let (e, e2, name) = if *coproduct {
                (Idempotent::cop(&eb, &ec)?, Idempotent::cop(&eb2, &ec2)?, "coproduct")
            } else {
                (Idempotent::dis(&eb, &ec)?, Idempotent::dis(&eb2, &ec2)?, "direct_sum")
            };
            let mut children = vec![
                renamed(check_manin(&e, &e2, &l, &l)?, "sum_manin"),
                renamed(check_manin(&eb, &eb2, &m, &m)?, "left_manin"),
                renamed(check_manin(&ec, &ec2, &n, &n)?, "right_manin"),
            ];
            if !*coproduct {
                children.push(commute_report(&m, &n)?);
            }
            Report::all(name, children).with("matrix", rows_text(&l.render_rows()))
        }
        ManinCmd::Dtensor { x, y, b, b2, c, c2, flavor: fl } => {
            let (m, n) = (inputs.first_order(x)?, inputs.first_order(y)?);
            let (eb, ec) = (inputs.idempotent(b)?, inputs.idempotent(c)?);
            let eb2 = inputs.idempotent(b2.as_deref().unwrap_or(b))?;
            let ec2 = inputs.idempotent(c2.as_deref().unwrap_or(c))?;
            let fl = flavor(*fl);
            let existence = renamed(tensor_existence(&eb, &eb2, &ec, &ec2, &m, &n, fl)?, "existence");
            let (f, f2) = match fl {
                TensorFlavor::White => (Idempotent::tep(&eb, &ec)?, Idempotent::tep(&eb2, &ec2)?),
                TensorFlavor::Black => (Idempotent::black_tep(&eb, &ec)?, Idempotent::black_tep(&eb2, &ec2)?),
            };
            match dot_tensor(&m, &n) {
                Ok(p) => Report::all("tensor", vec![existence, renamed(check_manin(&f, &f2, &p, &p)?, "product_manin")]),
                Err(Error::ContextTooShallow(msg)) => {
                    Report::all("tensor", vec![existence]).with("product_manin", format!("not evaluated: {msg}"))
                }
                Err(e) => return Err(e.into()),
            }
        }
        ManinCmd::Props { property, count } => match property {
            Property::Lmn => prop_lmn(&inputs.field, s.seed, *count)?,
            Property::Cop => prop_cop(&inputs.field, s.seed, *count)?,
            Property::Pmn => prop_pmn(&inputs.field, TensorFlavor::White, s.seed, *count)?,
            Property::PmnBlack => prop_pmn(&inputs.field, TensorFlavor::Black, s.seed, *count)?,
        },
    };
    Ok(Outcome::report(report))
}

fn comonoid(cmd: &ComonoidCmd, inputs: &Inputs, s: &Settings) -> Result<Outcome> {
    match cmd {
        ComonoidCmd::Validate { name } => Ok(Outcome::report(validate_comonoid(&*inputs.comonoid(name)?))),
        ComonoidCmd::Coend { b } => {
            let e = inputs.idempotent(b)?;
            let c = Arc::new(coend_comonoid_with_degree(&e, s.max_degree.unwrap_or(2))?);
            let mut children = vec![validate_comonoid(&c)];
            let id = try_check!("identity", Corepresentation::identity(&c, &e));
            children.push(Report::all("identity", id.checks().children.clone()));
            let mut doc = Document::new(&inputs.field);
            let cn = doc.add_comonoid("coend", &c);
            doc.add_corep("identity", &id, &cn);
            let report = Report::all("coend", children)
                .with("generators", c.context().entry_dim())
                .with("relation_dim", c.algebra().map_or(0, |a| a.relations().dim()));
            Ok(Outcome::with_bundle(report, doc))
        }
    }
}

fn corep(cmd: &CorepCmd, inputs: &Inputs) -> Result<Outcome> {
    let load = |name: &str| -> Result<std::result::Result<Corepresentation, Report>> { checked(name, inputs.corep(name)?) };
    macro_rules! corep_arg {
        ($name:expr) => {
            match load($name)? {
                Ok(r) => r,
                Err(rep) => return Ok(Outcome::report(rep)),
            }
        };
    }
    let (check, result) = match cmd {
        CorepCmd::Check { name, comonoid, b, matrix } => {
            let report = match (name, comonoid, b, matrix) {
                (Some(name), ..) => {
                    let (c, e, m) = inputs.corep_parts(name)?;
                    corep_check(&c, &e, &m)?
                }
                (None, Some(c), Some(b), Some(m)) => {
                    let c = inputs.comonoid(c)?;
                    let m = inputs.first_order(m)?.with_context(c.context())?;
                    corep_check(&c, &inputs.idempotent(b)?, &m)?
                }
                _ => bail!("give --name, or --comonoid with --b and --matrix"),
            };
            return Ok(Outcome::report(report));
        }
        CorepCmd::Morphism { k, src, dst } => {
            let (src, dst) = (corep_arg!(src), corep_arg!(dst));
            return Ok(Outcome::report(corep_morphism_report(&inputs.scalar(k)?, &src, &dst)?));
        }
        CorepCmd::Dsum { left, right } => ("direct_sum", corep_direct_sum(&corep_arg!(left), &corep_arg!(right))),
        CorepCmd::Coproduct { left, right } => ("coproduct", corep_coproduct(&corep_arg!(left), &corep_arg!(right))),
        CorepCmd::Tensor { left, right, flavor: fl } => {
            ("tensor", corep_tensor(&corep_arg!(left), &corep_arg!(right), flavor(*fl)))
        }
        CorepCmd::Dual { name, minv, flavor: fl } => {
            let a = corep_arg!(name);
            let minv = inputs.first_order(minv)?.with_context(a.comonoid().context())?;
            let fl = match fl {
                DualKind::Dual => DualFlavor::Dual,
                DualKind::KoszulDual => DualFlavor::KoszulDual,
            };
            (fl.name(), corep_dual(&a, &minv, fl))
        }
        CorepCmd::Hom { left, right, minv } => {
            let a = corep_arg!(left);
            let minv = inputs.first_order(minv)?.with_context(a.comonoid().context())?;
            ("hom", hom_corep(&a, &corep_arg!(right), &minv))
        }
        CorepCmd::Dequantise { name } => return dequantise_cmd(&corep_arg!(name), inputs),
    };
    let r = try_check!(check, result);
    Ok(Outcome::with_bundle(corep_report(check, &r), corep_bundle(inputs, check, &r)))
}

fn dequantise_cmd(a: &Corepresentation, inputs: &Inputs) -> Result<Outcome> {
    let classical = dequantise(a)?;
    let c = Arc::new(s_embedding_comonoid(&classical.algebra)?);
    let back = try_check!("s_embed_roundtrip", s_embed(&c, &classical.matrices));
    let same = back.matrix().entries() == a.matrix().entries();
    let mut report = Report::all(
        "dequantise",
        vec![
            Report::all("s_embed_roundtrip", back.checks().children.clone()),
            Report::verdict("same_matrix", same),
        ],
    )
    .with("algebra_dim", classical.algebra.dim());
    for (label, m) in classical.algebra.labels().iter().zip(&classical.matrices) {
        report = report.with(format!("rho({label})"), rows_text(&scalar_rows(m)));
    }
    let mut doc = Document::new(&inputs.field);
    doc.add_structure_constants("algebra", &classical.algebra);
    for (label, m) in classical.algebra.labels().iter().zip(&classical.matrices) {
        doc.add_scalar_matrix(&format!("rho_{label}"), m);
    }
    Ok(Outcome::with_bundle(report, doc))
}
