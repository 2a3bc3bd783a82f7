//! Acceptance suite: one line per criterion with its verdict and runtime.
//! Run with `cargo test -p manin-cli --test acceptance`.

mod common;

use common::{check_golden, run, scenario_names};
use manin::algebra::{cohom_algebra, product, random_idempotent_any, std_idempotent, std_matrix, Idempotent, QuadraticAlgebra};
use manin::arith::{Field, Scalar};
use manin::context::{slice_context, AlgebraStructureConstants};
use manin::corep::{
    coend_comonoid, corep_check, corep_morphism_check, dequantise, s_embed, s_embedding_comonoid, validate_comonoid,
    ComonoidPresentation, Corepresentation,
};
use manin::format::Object;
use manin::gallery;
use manin::linalg::{sparse, Matrix, SparseVec, Subspace};
use manin::manin::{FirstOrderMatrix, TensorFlavor};
use manin::properties::{prop_cop, prop_lmn, prop_pmn};
use manin::Report;
use rand::rngs::StdRng;
use rand::SeedableRng;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn passed(r: &Report) -> Outcome {
    match r.first_failure() {
        None => Ok(()),
        Some(f) => Err(format!("{} failed: {}", r.check, f.check)),
    }
}

fn q_field() -> Field {
    Field::ratfunc("q").unwrap()
}

fn is_idempotent(e: &Matrix) -> bool {
    e.mul(e).map(|sq| &sq == e).unwrap_or(false)
}

fn idempotency() -> Outcome {
    let (f, fq) = (Field::Rational, q_field());
    let mut checked = Vec::new();
    for m in 1..=4 {
        for (field, spec) in [(&f, "antisym"), (&fq, "q_antisym"), (&f, "so_B")] {
            checked.push((format!("{spec}:{m}"), ok(std_matrix(field, &format!("{spec}:{m}")))?));
        }
        let p = ok(std_matrix(&fq, &format!("q_perm:{m}")))?;
        ensure(ok(p.mul(&p))? == Matrix::identity(&fq, m * m), || format!("q_perm:{m} is not an involution"))?;
    }
    let mut rng = StdRng::seed_from_u64(11);
    for field in [&f, &fq] {
        let mut pool = vec![ok(std_idempotent(field, "antisym:2"))?, Idempotent::zero(field, 1)];
        if field == &fq {
            pool.push(ok(std_idempotent(field, "q_antisym:2"))?);
        }
        for n in 1..=2 {
            pool.push(random_idempotent_any(field, n, &mut rng));
        }
        for b in &pool {
            checked.push(("conj21".into(), b.conj21().matrix().clone()));
            for c in &pool {
                for (name, e) in [
                    ("DiS", Idempotent::dis(b, c)),
                    ("CoP", Idempotent::cop(b, c)),
                    ("TeP", Idempotent::tep(b, c)),
                    ("black TeP", Idempotent::black_tep(b, c)),
                ] {
                    checked.push((name.into(), ok(e)?.matrix().clone()));
                }
            }
        }
    }
    for (name, e) in &checked {
        ensure(is_idempotent(e), || format!("{name} is not idempotent"))?;
    }
    Ok(())
}

fn koszul() -> Outcome {
    let mut rng = StdRng::seed_from_u64(21);
    for field in [Field::Rational, q_field()] {
        for i in 0..50 {
            let e = random_idempotent_any(&field, 1 + i % 3, &mut rng);
            let x = QuadraticAlgebra::x(&e);
            ensure(x.koszul_dual().koszul_dual().relations() == x.relations(), || format!("(A^!)^! != A, instance {i}"))?;
            ensure(x.koszul_dual().relations() == QuadraticAlgebra::xi(&e).relations(), || {
                format!("X_E^! != Xi_E, instance {i}")
            })?;
        }
    }
    let f = Field::Rational;
    for i in 0..20 {
        let a = QuadraticAlgebra::x(&random_idempotent_any(&f, 1 + i % 2, &mut rng));
        let b = QuadraticAlgebra::x(&random_idempotent_any(&f, 1 + (i / 2) % 2, &mut rng));
        let lhs = ok(product(&a, &b, "white"))?.koszul_dual();
        let rhs = ok(product(&a.koszul_dual(), &b.koszul_dual(), "black"))?;
        ensure(lhs.relations() == rhs.relations(), || format!("exchange law fails on pair {i}"))?;
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim A_k = m^k − rank Σ_i V^{⊗i} ⊗ R ⊗ V^{⊗(k−2−i)}`, built word by word.
fn brute_force_dim(a: &QuadraticAlgebra, k: usize) -> usize {
    let m = a.generators();
    let total = m.pow(k as u32);
    if k < 2 {
        return total;
    }
    let mut rows: Vec<SparseVec> = Vec::new();
    for i in 0..=k - 2 {
        let right = m.pow((k - 2 - i) as u32);
        for u in 0..m.pow(i as u32) {
            for r in a.relations().basis() {
                for v in 0..right {
                    let terms = r.iter().map(|(w, s)| ((u * m * m + w) * right + v, s.clone())).collect();
                    rows.push(sparse::collect(terms));
                }
            }
        }
    }
    total - Subspace::from_rows(a.field(), total, rows).dim()
}

fn hilbert() -> Outcome {
    let f = Field::Rational;
    for m in 1..=4 {
        let a = ok(std_idempotent(&f, &format!("antisym:{m}")))?;
        let (x, xi) = (QuadraticAlgebra::x(&a), QuadraticAlgebra::xi(&a));
        for k in 0..=5 {
            let (dx, dxi) = (ok(x.graded_dim(k))?, ok(xi.graded_dim(k))?);
            ensure(dx == binomial(m + k - 1, k), || format!("polynomial m={m} k={k}: {dx}"))?;
            ensure(dxi == binomial(m, k), || format!("exterior m={m} k={k}: {dxi}"))?;
            if m.pow(k as u32) <= 256 {
                ensure(brute_force_dim(&x, k) == dx, || format!("brute force polynomial m={m} k={k}"))?;
                ensure(brute_force_dim(&xi, k) == dxi, || format!("brute force exterior m={m} k={k}"))?;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(31);
    let mut pairs = vec![("antisym:2", "antisym:2"), ("antisym:2", "zero:1"), ("one:2", "antisym:1")]
        .into_iter()
        .map(|(p, q)| Ok((QuadraticAlgebra::x(&ok(std_idempotent(&f, p))?), QuadraticAlgebra::xi(&ok(std_idempotent(&f, q))?))))
        .collect::<Result<Vec<_>, String>>()?;
    for _ in 0..3 {
        pairs.push((
            QuadraticAlgebra::x(&random_idempotent_any(&f, 2, &mut rng)),
            QuadraticAlgebra::x(&random_idempotent_any(&f, 2, &mut rng)),
        ));
    }
    for (i, (a, b)) in pairs.iter().enumerate() {
        let e = ok(product(a, b, "even_tensor"))?;
        for k in 0..=4 {
            let conv: usize = (0..=k).map(|l| a.graded_dim(l).unwrap() * b.graded_dim(k - l).unwrap()).sum();
            ensure(ok(e.graded_dim(k))? == conv, || format!("even tensor convolution, pair {i}, degree {k}"))?;
        }
    }
    Ok(())
}

/// Column commutators `[ℳ^i_k, ℳ^j_k]` and cross terms
/// `[ℳ^i_k, ℳ^j_l] + [ℳ^i_l, ℳ^j_k]` for `i < j`, `k < l`.
fn classical_manin_relations(f: &Field, m: usize) -> Subspace {
    let g = m * m;
    let gen = |s: usize, k: usize| s * m + k;
    let comm = |x: usize, y: usize| vec![(x * g + y, f.one()), (y * g + x, f.int(-1))];
    let mut rows = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            for k in 0..m {
                rows.push(sparse::collect(comm(gen(i, k), gen(j, k))));
                for l in (k + 1)..m {
                    let mut v = comm(gen(i, k), gen(j, l));
                    v.extend(comm(gen(i, l), gen(j, k)));
                    rows.push(sparse::collect(v));
                }
            }
        }
    }
    Subspace::from_rows(f, g * g, rows)
}

fn universal_manin() -> Outcome {
    let f = Field::Rational;
    for m in [2, 3] {
        let a = ok(std_idempotent(&f, &format!("antisym:{m}")))?;
        let c = ok(cohom_algebra(&a, &a))?;
        let oracle = classical_manin_relations(&f, m);
        ensure(oracle.dim() == m * binomial(m, 2) + binomial(m, 2).pow(2), || format!("oracle dimension m={m}"))?;
        ensure(c.relations() == &oracle, || format!("relation span differs at m={m}"))?;
    }
    Ok(())
}

fn scenario(name: &str) -> Result<Vec<Report>, String> {
    Ok(ok(gallery::run(name, None))?.into_iter().map(|r| r.report).collect())
}

fn prop_mq() -> Outcome {
    let reports = scenario("mq")?;
    ensure(reports.len() == 2, || "expected m = 2 and m = 3".into())?;
    for r in &reports {
        passed(r)?;
        for child in ["span_equality", "q1_matches_classical_manin", "q1_is_commutative"] {
            ensure(r.children.iter().any(|c| c.check == child && c.pass), || format!("{child} missing"))?;
        }
    }
    Ok(())
}

fn count(r: &Report, key: &str) -> usize {
    r.data.get(key).and_then(|v| v.parse().ok()).unwrap_or(0)
}

fn equivalences() -> Outcome {
    let f = Field::Rational;
    for r in [ok(prop_lmn(&f, 7, 100))?, ok(prop_cop(&f, 7, 100))?] {
        passed(&r)?;
        ensure(count(&r, "instances") == 100, || format!("{}: instance count", r.check))?;
        ensure(count(&r, "positive") > 0 && count(&r, "negative") > 0, || format!("{}: one-sided sample", r.check))?;
    }
    for flavor in [TensorFlavor::White, TensorFlavor::Black] {
        let r = ok(prop_pmn(&f, flavor, 7, 12))?;
        passed(&r)?;
        ensure(count(&r, "negative") > 0, || format!("{}: no negative instance", r.check))?;
        ensure(count(&r, "positive") > 0, || format!("{}: no positive instance", r.check))?;
    }
    Ok(())
}

/// Functions on ℤ/2 × ℤ/2 in the character basis; every character is grouplike.
fn klein(f: &Field) -> Result<Arc<ComonoidPresentation>, String> {
    let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
    let alg = ok(AlgebraStructureConstants::group_algebra(f, &["1", "c1", "c2", "c12"], &table))?;
    let delta = (0..4).map(|a| vec![(a * 4 + a, f.one())]).collect();
    let ctx = ok(slice_context(&alg, delta, vec![f.one(); 4], 2))?;
    Ok(Arc::new(ok(ComonoidPresentation::bialgebra_slice(Arc::new(ctx)))?))
}

fn corep_core() -> Outcome {
    let mut rng = StdRng::seed_from_u64(41);
    for field in [Field::Rational, q_field()] {
        let top = if field == Field::Rational { 3 } else { 2 };
        for m in 1..=top {
            let mut bs = vec![Idempotent::zero(&field, m), Idempotent::one(&field, m)];
            bs.push(ok(std_idempotent(&field, &format!("antisym:{m}")))?);
            bs.push(ok(std_idempotent(&field, &format!("so_B:{m}")))?);
            if field != Field::Rational {
                bs.push(ok(std_idempotent(&field, &format!("q_antisym:{m}")))?);
            }
            if m <= 2 {
                bs.push(random_idempotent_any(&field, m, &mut rng));
            }
            for b in bs {
                let c = Arc::new(ok(coend_comonoid(&b))?);
                passed(&validate_comonoid(&c))?;
                let id = ok(Corepresentation::identity(&c, &b))?;
                passed(&ok(corep_check(&c, &b, id.matrix()))?)?;
            }
        }
    }
    let f = Field::Rational;
    let c = klein(&f)?;
    let a2 = ok(std_idempotent(&f, "antisym:2"))?;
    let diag = |x: usize, y: usize| -> Result<Corepresentation, String> {
        let entries: Vec<Vec<(usize, Scalar)>> = vec![vec![(x, f.one())], vec![], vec![], vec![(y, f.one())]];
        ok(Corepresentation::new(&c, a2.clone(), ok(FirstOrderMatrix::new(c.context(), 2, 2, entries))?))
    };
    let id = Matrix::identity(&f, 2);
    for x in 0..4 {
        for y in 0..4 {
            // mutations: change one diagonal character at a time
            for (u, v) in [(x, y), ((x + 1) % 4, y), (x, (y + 1) % 4)] {
                let same = (x, y) == (u, v);
                let got = ok(corep_morphism_check(&id, &diag(x, y)?, &diag(u, v)?))?;
                ensure(got == same, || format!("identity intertwiner on ({x},{y}) -> ({u},{v})"))?;
            }
        }
    }
    Ok(())
}

fn yangian() -> Outcome {
    let reports = scenario("yangian_eval")?;
    ensure(reports.len() == 2, || "expected m = 2 and m = 3".into())?;
    for r in &reports {
        passed(r)?;
        let unshifted = r.children.iter().find(|c| c.check == "unshifted_fails").ok_or("no unshifted check")?;
        ensure(unshifted.data.contains_key("witness"), || "unshifted variant has no witness".into())?;
    }
    Ok(())
}

fn elementary(f: &Field, m: usize) -> Vec<Matrix> {
    (0..m * m)
        .map(|k| Matrix::from_fn(f, m, m, |i, j| if i * m + j == k { f.one() } else { f.zero() }))
        .collect()
}

fn classical_roundtrip() -> Outcome {
    let f = Field::Rational;
    let mat2 = AlgebraStructureConstants::matrix_algebra(&f, 2);
    let c = Arc::new(ok(s_embedding_comonoid(&mat2))?);
    let rho = elementary(&f, 2);
    let q = ok(s_embed(&c, &rho))?;
    passed(&ok(corep_check(&c, q.idempotent(), q.matrix()))?)?;
    let back = ok(dequantise(&q))?;
    ensure(back.algebra.constants() == mat2.constants(), || "structure constants differ".into())?;
    ensure(back.algebra.unit() == mat2.unit(), || "unit differs".into())?;
    ensure(back.matrices == rho, || "representation matrices differ".into())?;

    // the transpose is an antirepresentation; E11, E22 ↦ 1 is not multiplicative
    let transpose: Vec<Matrix> = rho.iter().map(|m| m.transpose()).collect();
    let bad: Vec<Matrix> = (0..4).map(|k| Matrix::from_fn(&f, 1, 1, |_, _| if k % 3 == 0 { f.one() } else { f.zero() })).collect();
    ensure(s_embed(&c, &transpose).is_err(), || "antirepresentation accepted".into())?;
    ensure(s_embed(&c, &bad).is_err(), || "non-representation accepted".into())?;

    let z2 = scenario("finite_group")?;
    let r = &z2[0];
    passed(r)?;
    for child in ["antipode", "dual", "hom_regular_sign"] {
        ensure(r.children.iter().any(|c| c.check == child && c.pass), || format!("{child} missing"))?;
    }
    Ok(())
}

fn cli_golden() -> Outcome {
    for name in scenario_names() {
        check_golden(name)?;
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let runs = ok(gallery::run("finite_group", Some(2)))?;
    let mut doc = runs[0].bundle.clone();
    let path = dir.path().join("z2.json");
    let path = path.to_str().ok_or("temp path")?;
    ok(doc.save(std::path::Path::new(path)))?;
    ensure(run(&["corep", "check", "--doc", path, "--name", "regular"]).status == 0, || "unmutated corep fails".into())?;

    // flip the sign of χ in the diagonal entries of the regular matrix
    let Some(Object::Matrix { entries, .. }) = doc.objects.get_mut("regular.matrix") else {
        return Err("bundle has no regular.matrix".into());
    };
    for (i, e) in entries.iter_mut().enumerate() {
        if i == 0 || i == 3 {
            for (idx, s) in e.iter_mut() {
                if *idx == 1 {
                    *s = format!("-{s}");
                }
            }
        }
    }
    ok(doc.save(std::path::Path::new(path)))?;
    let out = run(&["corep", "check", "--doc", path, "--name", "regular", "--format", "json"]);
    ensure(out.status == 1, || format!("mutated corep: exit {} {}", out.status, out.stderr))?;
    ensure(out.stdout.contains("\"witness\""), || "mutated corep: no witness".into())?;
    let out = run(&["check-idempotent", "--matrix", "1,0,0,0;0,1,1,0;0,0,0,0;0,0,0,1"]);
    ensure(out.status == 0, || "idempotent literal rejected".into())?;
    let out = run(&["check-idempotent", "--matrix", "1,0,0,0;0,1,1,0;0,0,1,0;0,0,0,1"]);
    ensure(out.status == 1, || "mutated idempotent literal accepted".into())?;
    ensure(run(&["gallery", "nope"]).status == 2, || "unknown scenario accepted".into())?;
    Ok(())
}

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "idempotency suite", limit: secs(5), run: idempotency },
        Criterion { id: 2, name: "Koszul duality and exchange law", limit: secs(30), run: koszul },
        Criterion { id: 3, name: "Hilbert values and convolution", limit: secs(60), run: hilbert },
        Criterion { id: 4, name: "universal Manin algebra m = 2, 3", limit: secs(10), run: universal_manin },
        Criterion { id: 5, name: "M_q relations versus Manin conditions", limit: secs(20), run: prop_mq },
        Criterion { id: 6, name: "direct sum, coproduct and tensor criteria", limit: secs(60), run: equivalences },
        Criterion { id: 7, name: "corepresentation core", limit: secs(20), run: corep_core },
        Criterion { id: 8, name: "evaluation Yangian", limit: secs(30), run: yangian },
        Criterion { id: 9, name: "classical roundtrip and Z/2 Hopf example", limit: secs(10), run: classical_roundtrip },
        Criterion { id: 10, name: "CLI golden files and exit codes", limit: secs(60), run: cli_golden },
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failures = 0;
    for c in &criteria {
        if !filter.is_empty() && !filter.contains(&c.id.to_string()) {
            continue;
        }
        let start = Instant::now();
        let mut result = (c.run)();
        let elapsed = start.elapsed();
        if result.is_ok() && elapsed > c.limit {
            result = Err(format!("took longer than {} s", c.limit.as_secs()));
        }
        let verdict = if result.is_ok() { "PASS" } else { "FAIL" };
        let detail = result.err().map(|e| format!(": {e}")).unwrap_or_default();
        println!(
            "[{:>2}] {verdict} {} ({:.2} s, limit {} s){detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
        failures += usize::from(verdict == "FAIL");
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
