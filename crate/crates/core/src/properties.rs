//! Randomized brute-force runs of the direct-sum, coproduct and tensor
//! criteria. Every instance evaluates both sides of an equivalence; a run
//! passes when they agree on all instances.

use crate::algebra::{cohom_algebra, random_idempotent_any, Idempotent, QuadraticAlgebra};
use crate::arith::Field;
use crate::context::{qa_context, ContextKind, MulContext, TableBuilder};
use crate::error::Result;
use crate::linalg::{kron, Matrix};
use crate::manin::{check_manin, commute_entrywise, direct_sum, dot_tensor, manin_components, tensor_existence, FirstOrderMatrix, TensorFlavor};
use crate::report::Report;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Outcome of one instance: the two sides of the equivalence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sides {
    pub lhs: bool,
    pub rhs: bool,
}

fn summarize(name: &str, seed: u64, outcomes: Vec<Result<Sides>>) -> Result<Report> {
    let mut report = Report::pass(name).with("seed", seed).with("instances", outcomes.len());
    let mut positive = 0;
    for (i, o) in outcomes.into_iter().enumerate() {
        let s = o?;
        positive += usize::from(s.lhs);
        if s.lhs != s.rhs {
            report.push(Report::fail("equivalence", vec![i + 1], format!("lhs={} rhs={}", s.lhs, s.rhs)));
        }
    }
    let n: usize = report.data["instances"].parse().unwrap_or(0);
    Ok(report.with("positive", positive).with("negative", n - positive))
}

fn rng_for(seed: u64, i: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9).wrapping_add(i as u64))
}

/// Block layout of a random instance over a table context: `M` is `p×p'`,
/// `N` is `r×r'`, each entry its own generator.
struct BlockInstance {
    b: Idempotent,
    b2: Idempotent,
    c: Idempotent,
    c2: Idempotent,
    m: FirstOrderMatrix,
    n: FirstOrderMatrix,
}

fn generic(ctx: &Arc<MulContext>, rows: usize, cols: usize, offset: usize) -> Result<FirstOrderMatrix> {
    let one = ctx.field().one();
    FirstOrderMatrix::from_fn(ctx, rows, cols, |i, j| vec![(offset + i * cols + j, one.clone())])
}

/// Keeps a whole relation group, all but one of its rows, or nothing.
fn pick<R: Rng>(rows: Vec<Vec<(usize, crate::arith::Scalar)>>, rng: &mut R) -> Vec<Vec<(usize, crate::arith::Scalar)>> {
    let rows: Vec<_> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    match rng.gen_range(0..10) {
        0..=4 => rows,
        5..=6 if !rows.is_empty() => {
            let skip = rng.gen_range(0..rows.len());
            rows.into_iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, r)| r).collect()
        }
        _ => Vec::new(),
    }
}

fn block_instance<R: Rng>(field: &Field, rng: &mut R) -> Result<BlockInstance> {
    let (p, p2, r, r2) = (rng.gen_range(1..=2), rng.gen_range(1..=2), rng.gen_range(1..=2), rng.gen_range(1..=2));
    let b = random_idempotent_any(field, p, rng);
    let b2 = random_idempotent_any(field, p2, rng);
    let c = random_idempotent_any(field, r, rng);
    let c2 = random_idempotent_any(field, r2, rng);
    let g = p * p2 + r * r2;
    let free = Arc::new(qa_context(&QuadraticAlgebra::tensor(field, g), 2)?);
    let (mf, nf) = (generic(&free, p, p2, 0)?, generic(&free, r, r2, p * p2)?);
    let mut rows = pick(manin_components(&b, &b2, &mf, &mf)?, rng);
    rows.extend(pick(manin_components(&c, &c2, &nf, &nf)?, rng));
    let comm = (0..p * p2)
        .flat_map(|x| (p * p2..g).map(move |y| (x, y)))
        .map(|(x, y)| vec![(x.min(y) * g + x.max(y), field.one()), (x.max(y) * g + x.min(y), field.int(-1))])
        .collect();
    rows.extend(pick(comm, rng));
    let qa = qa_context(&QuadraticAlgebra::from_rows(field, free.labels(1)?.to_vec(), rows), 2)?;
    let table = TableBuilder::new(field, qa.levels().to_vec())
        .kind(ContextKind::Table)
        .table(1, 1, qa.tables()[&(1, 1)].clone())
        .build()?;
    let ctx = Arc::new(table);
    Ok(BlockInstance {
        m: generic(&ctx, p, p2, 0)?,
        n: generic(&ctx, r, r2, p * p2)?,
        b,
        b2,
        c,
        c2,
    })
}

/// Direct sums: `M⊕N` is `(DiS(B,C), DiS(B',C'))`-Manin iff both blocks
/// are Manin and their entries commute.
pub fn lmn_instance<R: Rng>(field: &Field, rng: &mut R) -> Result<Sides> {
    let x = block_instance(field, rng)?;
    let l = direct_sum(&x.m, &x.n)?;
    let lhs = check_manin(&Idempotent::dis(&x.b, &x.c)?, &Idempotent::dis(&x.b2, &x.c2)?, &l, &l)?.pass;
    let rhs = check_manin(&x.b, &x.b2, &x.m, &x.m)?.pass
        && check_manin(&x.c, &x.c2, &x.n, &x.n)?.pass
        && commute_entrywise(&x.m, &x.n)?;
    Ok(Sides { lhs, rhs })
}

/// Coproducts: `M⊕N` is `(CoP(B,C), CoP(B',C'))`-Manin iff both blocks are.
pub fn cop_instance<R: Rng>(field: &Field, rng: &mut R) -> Result<Sides> {
    let x = block_instance(field, rng)?;
    let l = direct_sum(&x.m, &x.n)?;
    let lhs = check_manin(&Idempotent::cop(&x.b, &x.c)?, &Idempotent::cop(&x.b2, &x.c2)?, &l, &l)?.pass;
    let rhs = check_manin(&x.b, &x.b2, &x.m, &x.m)?.pass && check_manin(&x.c, &x.c2, &x.n, &x.n)?.pass;
    Ok(Sides { lhs, rhs })
}

pub fn prop_lmn(field: &Field, seed: u64, count: usize) -> Result<Report> {
    summarize("direct_sum_criterion", seed, (0..count).map(|i| lmn_instance(field, &mut rng_for(seed, i))).collect())
}

pub fn prop_cop(field: &Field, seed: u64, count: usize) -> Result<Report> {
    summarize("coproduct_criterion", seed, (0..count).map(|i| cop_instance(field, &mut rng_for(seed, i))).collect())
}

fn random_invertible<R: Rng>(field: &Field, n: usize, rng: &mut R) -> (Matrix, Matrix) {
    let mut lower = Matrix::identity(field, n);
    let mut upper = Matrix::identity(field, n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, field.random(rng, 2));
            upper.set(j, i, field.random(rng, 2));
        }
    }
    let k = lower.mul(&upper).expect("square");
    let inv = k.inverse().expect("unitriangular product is invertible");
    (k, inv)
}

fn conjugate(e: &Idempotent, k: &Matrix, kinv: &Matrix) -> Result<Idempotent> {
    let kk = kron(k, k)?;
    let kkinv = kron(kinv, kinv)?;
    Idempotent::new(kk.mul(e.matrix())?.mul(&kkinv)?)
}

/// Tensor products at `n = m = 2`: for a `(B,B')`-Manin `M` and a
/// `(C,C')`-Manin `N`, `M⊗̇N` is `(F,F')`-Manin iff the existence condition
/// holds. `M` is the universal matrix of `cohom(B', B)` in a degree-4
/// context and `N = K₁MK₂` with the idempotents conjugated to match.
pub fn pmn_instance<R: Rng>(field: &Field, flavor: TensorFlavor, rng: &mut R) -> Result<Sides> {
    let b = random_idempotent_any(field, 2, rng);
    let b2 = random_idempotent_any(field, 2, rng);
    let (k1, k1inv) = random_invertible(field, 2, rng);
    let (k2, k2inv) = random_invertible(field, 2, rng);
    let c = conjugate(&b, &k1, &k1inv)?;
    let c2 = conjugate(&b2, &k2inv, &k2)?;
    let ctx = Arc::new(qa_context(&cohom_algebra(&b2, &b)?, 4)?);
    let m = generic(&ctx, 2, 2, 0)?;
    let n = FirstOrderMatrix::from_fn(&ctx, 2, 2, |i, j| {
        let mut acc = Vec::new();
        for a in 0..2 {
            for d in 0..2 {
                let s = k1.get(i, a) * k2.get(d, j);
                crate::linalg::sparse::add_scaled(&mut acc, &s, m.entry(a, d));
            }
        }
        acc
    })?;
    pmn_sides(&b, &b2, &c, &c2, &m, &n, flavor)
}

/// Both sides of the tensor criterion for given Manin matrices.
pub fn pmn_sides(
    b: &Idempotent,
    b2: &Idempotent,
    c: &Idempotent,
    c2: &Idempotent,
    m: &FirstOrderMatrix,
    n: &FirstOrderMatrix,
    flavor: TensorFlavor,
) -> Result<Sides> {
    let p = dot_tensor(m, n)?;
    let (f, f2) = match flavor {
        TensorFlavor::White => (Idempotent::tep(b, c)?, Idempotent::tep(b2, c2)?),
        TensorFlavor::Black => (Idempotent::black_tep(b, c)?, Idempotent::black_tep(b2, c2)?),
    };
    let lhs = check_manin(&f, &f2, &p, &p)?.pass;
    let rhs = tensor_existence(b, b2, c, c2, m, n, flavor)?.pass;
    Ok(Sides { lhs, rhs })
}

pub fn prop_pmn(field: &Field, flavor: TensorFlavor, seed: u64, count: usize) -> Result<Report> {
    let name = match flavor {
        TensorFlavor::White => "tensor_criterion",
        TensorFlavor::Black => "black_tensor_criterion",
    };
    summarize(name, seed, (0..count).map(|i| pmn_instance(field, flavor, &mut rng_for(seed, i))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_agree() {
        let f = Field::Rational;
        for r in [prop_lmn(&f, 1, 30).unwrap(), prop_cop(&f, 1, 30).unwrap()] {
            assert!(r.pass, "{}", r.to_text());
            assert_ne!(r.data["positive"], "0", "{}", r.to_text());
            assert_ne!(r.data["negative"], "0", "{}", r.to_text());
        }
    }

    #[test]
    fn tensor_runs_agree() {
        let f = Field::Rational;
        for flavor in [TensorFlavor::White, TensorFlavor::Black] {
            let r = prop_pmn(&f, flavor, 3, 8).unwrap();
            println!("{}", r.to_text());
            assert!(r.pass, "{}", r.to_text());
        }
    }
}
