//! Manin conditions for first-order matrices over coefficient contexts.

mod matrix;

pub use matrix::FirstOrderMatrix;

use crate::algebra::{cohom_algebra, Idempotent, QuadraticAlgebra};
use crate::context::{field_context, MulContext};
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use crate::linalg::{kron, Matrix};
use crate::report::Report;
use std::sync::Arc;

/// `Σ_{p,q} L[r,p] · grid[p,q] · R[q,c]` with vector-valued `grid`.
pub(crate) fn contract(left: &Matrix, grid: &[SparseVec], right: &Matrix) -> Vec<SparseVec> {
    let (inner_rows, inner_cols, out_cols) = (left.cols(), right.rows(), right.cols());
    debug_assert_eq!(grid.len(), inner_rows * inner_cols);
    let rcols = right.transpose().sparse_rows();
    let mut half = vec![Vec::new(); inner_rows * out_cols];
    for p in 0..inner_rows {
        for (c, col) in rcols.iter().enumerate() {
            let mut acc = Vec::new();
            for (q, s) in col {
                sparse::add_scaled(&mut acc, s, &grid[p * inner_cols + q]);
            }
            half[p * out_cols + c] = acc;
        }
    }
    let lrows = left.sparse_rows();
    let mut out = vec![Vec::new(); left.rows() * out_cols];
    for (r, row) in lrows.iter().enumerate() {
        for c in 0..out_cols {
            let mut acc = Vec::new();
            for (p, s) in row {
                sparse::add_scaled(&mut acc, s, &half[p * out_cols + c]);
            }
            out[r * out_cols + c] = acc;
        }
    }
    out
}

fn check_shapes(a: &Idempotent, b: &Idempotent, x: &FirstOrderMatrix) -> Result<()> {
    if x.rows() != a.dim() || x.cols() != b.dim() {
        return Err(Error::BadShape(format!(
            "matrix is {}x{}, idempotents need {}x{}",
            x.rows(),
            x.cols(),
            a.dim(),
            b.dim()
        )));
    }
    if a.field() != x.field() || b.field() != x.field() {
        return Err(Error::FieldMismatch(a.field().name(), x.field().name()));
    }
    Ok(())
}

/// Components `(A X⁽¹⁾Y⁽²⁾(1−B))^{ij}_{kl}` in `P₂`, row-major over
/// `(ij), (kl)`.
pub fn manin_components(
    a: &Idempotent,
    b: &Idempotent,
    x: &FirstOrderMatrix,
    y: &FirstOrderMatrix,
) -> Result<Vec<SparseVec>> {
    check_shapes(a, b, x)?;
    check_shapes(a, b, y)?;
    x.check_context(y)?;
    let ctx = x.context();
    let (n, m) = (a.dim(), b.dim());
    let mut grid = Vec::with_capacity(n * n * m * m);
    for p in 0..n {
        for q in 0..n {
            for c in 0..m {
                for d in 0..m {
                    grid.push(ctx.mul(1, x.entry(p, c), 1, y.entry(q, d))?);
                }
            }
        }
    }
    // grid is indexed (p q)(c d) as rows (pq), columns (cd)
    Ok(contract(a.matrix(), &grid, &b.matrix().complement()))
}

/// The two-matrix Manin condition `A X⁽¹⁾Y⁽²⁾(1−B) = 0`.
pub fn check_manin(a: &Idempotent, b: &Idempotent, x: &FirstOrderMatrix, y: &FirstOrderMatrix) -> Result<Report> {
    let comps = manin_components(a, b, x, y)?;
    let (n, m) = (a.dim(), b.dim());
    let ctx = x.context();
    Ok(match comps.iter().position(|v| !v.is_empty()) {
        None => Report::pass("manin"),
        Some(p) => {
            let (r, c) = (p / (m * m), p % (m * m));
            Report::fail(
                "manin",
                vec![r / n + 1, r % n + 1, c / m + 1, c % m + 1],
                ctx.render(2, &comps[p]),
            )
        }
    })
}

/// Scalar Manin condition for `K` over the field itself.
pub fn check_scalar_manin(a: &Idempotent, b: &Idempotent, k: &Matrix) -> Result<Report> {
    let ctx = Arc::new(field_context(k.field(), 2)?);
    let km = FirstOrderMatrix::from_scalar(&ctx, k)?;
    check_manin(a, b, &km, &km)
}

/// Entrywise commutation `M^i_j N^a_b = N^a_b M^i_j` in `P₂`; the witness
/// is `(i, j, a, b)`.
pub fn commute_report(m: &FirstOrderMatrix, n: &FirstOrderMatrix) -> Result<Report> {
    m.check_context(n)?;
    let ctx = m.context();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            for a in 0..n.rows() {
                for b in 0..n.cols() {
                    let mn = ctx.mul(1, m.entry(i, j), 1, n.entry(a, b))?;
                    let nm = ctx.mul(1, n.entry(a, b), 1, m.entry(i, j))?;
                    let diff = sparse::axpy(&mn, &ctx.field().int(-1), &nm);
                    if !diff.is_empty() {
                        return Ok(Report::fail("commute", vec![i + 1, j + 1, a + 1, b + 1], ctx.render(2, &diff)));
                    }
                }
            }
        }
    }
    Ok(Report::pass("commute"))
}

pub fn commute_entrywise(m: &FirstOrderMatrix, n: &FirstOrderMatrix) -> Result<bool> {
    Ok(commute_report(m, n)?.pass)
}

/// Block-diagonal `M ⊕ N`.
pub fn direct_sum(m: &FirstOrderMatrix, n: &FirstOrderMatrix) -> Result<FirstOrderMatrix> {
    m.check_context(n)?;
    let (r, c) = (m.rows() + n.rows(), m.cols() + n.cols());
    FirstOrderMatrix::from_fn(m.context(), r, c, |i, j| {
        if i < m.rows() && j < m.cols() {
            m.entry(i, j).clone()
        } else if i >= m.rows() && j >= m.cols() {
            n.entry(i - m.rows(), j - m.cols()).clone()
        } else {
            Vec::new()
        }
    })
}

/// `P = M⁽¹⁾N⁽²⁾` with `P^{ia}_{jb} = M^i_j N^a_b`, living over the lifted
/// context whose entry space is `P₂`.
pub fn dot_tensor(m: &FirstOrderMatrix, n: &FirstOrderMatrix) -> Result<FirstOrderMatrix> {
    let lifted = Arc::new(m.context().lift()?);
    dot_tensor_in(m, n, &lifted)
}

/// [`dot_tensor`] into an already lifted context.
pub fn dot_tensor_in(m: &FirstOrderMatrix, n: &FirstOrderMatrix, lifted: &Arc<MulContext>) -> Result<FirstOrderMatrix> {
    m.check_context(n)?;
    let ctx = m.context();
    if lifted.entry_dim() != ctx.dim(2)? {
        return Err(Error::ContextMismatch("target context is not the lift".into()));
    }
    let (r, c) = (m.rows() * n.rows(), m.cols() * n.cols());
    let mut entries = Vec::with_capacity(r * c);
    for i in 0..m.rows() {
        for a in 0..n.rows() {
            for j in 0..m.cols() {
                for b in 0..n.cols() {
                    entries.push(ctx.mul(1, m.entry(i, j), 1, n.entry(a, b))?);
                }
            }
        }
    }
    FirstOrderMatrix::new(lifted, r, c, entries)
}

/// Which idempotent the dot-tensor product is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorFlavor {
    /// `TeP(B, C)`: left factor `B⊗1 + 1⊗C − B⊗C`, right `(1−B')⊗(1−C')`.
    White,
    /// `G = σ(B⊗C)σ`: left factor `B⊗C`, right `1 − B'⊗C'`.
    Black,
}

fn four_fold(ctx: &MulContext, x: &SparseVec, y: &SparseVec, z: &SparseVec, w: &SparseVec) -> Result<SparseVec> {
    let xy = ctx.mul(1, x, 1, y)?;
    let xyz = ctx.mul(2, &xy, 1, z)?;
    ctx.mul(3, &xyz, 1, w)
}

/// The existence condition for the (black) tensor product of `M` and `N`:
/// `F̃ M⁽¹⁾(M⁽²⁾N⁽³⁾ − N⁽³⁾M⁽²⁾)N⁽⁴⁾(1 − F̃') = 0` in `P₄`, with the witness
/// `(i₁,i₂,a₁,a₂; j₁,j₂,b₁,b₂)`. Without `P₄` the check falls back to
/// entrywise commutation and is flagged as sufficient only.
#[allow(clippy::too_many_arguments)]
pub fn tensor_existence(
    b: &Idempotent,
    b2: &Idempotent,
    c: &Idempotent,
    c2: &Idempotent,
    m: &FirstOrderMatrix,
    n: &FirstOrderMatrix,
    flavor: TensorFlavor,
) -> Result<Report> {
    check_shapes(b, b2, m)?;
    check_shapes(c, c2, n)?;
    m.check_context(n)?;
    let ctx = m.context();
    let f = ctx.field();
    let name = match flavor {
        TensorFlavor::White => "tensor_existence",
        TensorFlavor::Black => "black_tensor_existence",
    };
    if !(ctx.has_table(1, 1) && ctx.has_table(2, 1) && ctx.has_table(3, 1)) {
        let mut r = commute_report(m, n)?;
        r.check = name.into();
        r.sufficient_only = true;
        if !r.pass {
            r = r.with("note", "inconclusive: P4 unavailable and entries do not commute");
        }
        return Ok(r);
    }
    let (left, right) = match flavor {
        TensorFlavor::White => {
            let ib = Matrix::identity(f, b.dim() * b.dim());
            let ic = Matrix::identity(f, c.dim() * c.dim());
            let bc = kron(b.matrix(), c.matrix())?;
            let left = kron(b.matrix(), &ic)?.add(&kron(&ib, c.matrix())?)?.sub(&bc)?;
            let right = kron(&b2.matrix().complement(), &c2.matrix().complement())?;
            (left, right)
        }
        TensorFlavor::Black => (
            kron(b.matrix(), c.matrix())?,
            kron(b2.matrix(), c2.matrix())?.complement(),
        ),
    };
    let (r1, c1, r2, c2n) = (m.rows(), m.cols(), n.rows(), n.cols());
    let mut grid = Vec::with_capacity(r1 * r1 * r2 * r2 * c1 * c1 * c2n * c2n);
    let minus = f.int(-1);
    for p1 in 0..r1 {
        for p2 in 0..r1 {
            for a1 in 0..r2 {
                for a2 in 0..r2 {
                    for q1 in 0..c1 {
                        for q2 in 0..c1 {
                            for d1 in 0..c2n {
                                for d2 in 0..c2n {
                                    let x = m.entry(p1, q1);
                                    let y = m.entry(p2, q2);
                                    let z = n.entry(a1, d1);
                                    let w = n.entry(a2, d2);
                                    let mmnn = four_fold(ctx, x, y, z, w)?;
                                    let mnmn = four_fold(ctx, x, z, y, w)?;
                                    grid.push(sparse::axpy(&mmnn, &minus, &mnmn));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let comps = contract(&left, &grid, &right);
    let cols = c1 * c1 * c2n * c2n;
    Ok(match comps.iter().position(|v| !v.is_empty()) {
        None => Report::pass(name),
        Some(p) => {
            let (row, col) = (p / cols, p % cols);
            let split = |x: usize, a: usize, b: usize| {
                let (ab, cd) = (x / (b * b), x % (b * b));
                vec![ab / a + 1, ab % a + 1, cd / b + 1, cd % b + 1]
            };
            let mut w = split(row, r1, r2);
            w.extend(split(col, c1, c2n));
            Report::fail(name, w, ctx.render(4, &comps[p]))
        }
    })
}

/// `Δ(M^i_j) = Σ_k M^i_k ⊗ M^k_j` and `ε(M^i_j) = δ^i_j`.
pub fn multiplicative_check(m: &FirstOrderMatrix) -> Result<Report> {
    if m.rows() != m.cols() {
        return Err(Error::BadShape("multiplicative matrices are square".into()));
    }
    let ctx = m.context();
    let d = ctx.entry_dim();
    ctx.coalgebra(1)?;
    let f = ctx.field();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let lhs = ctx.delta(1, m.entry(i, j))?;
            let mut rhs = Vec::new();
            for k in 0..m.rows() {
                let t = sparse::tensor(m.entry(i, k), m.entry(k, j), d);
                sparse::add_scaled(&mut rhs, &f.one(), &t);
            }
            let diff = sparse::axpy(&lhs, &f.int(-1), &rhs);
            if !diff.is_empty() {
                return Ok(Report::fail("multiplicative", vec![i + 1, j + 1], ctx.render_tensor(1, &diff))
                    .with("clause", "coproduct"));
            }
        }
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let e = ctx.eps(1, m.entry(i, j))?;
            let want = if i == j { f.one() } else { f.zero() };
            if e != want {
                return Ok(Report::fail("multiplicative", vec![i + 1, j + 1], format!("counit = {e}"))
                    .with("clause", "counit"));
            }
        }
    }
    Ok(Report::pass("multiplicative"))
}

/// Generator map of the graded homomorphism between internal cohoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomMap {
    pub source: QuadraticAlgebra,
    pub target: QuadraticAlgebra,
    /// Columns are images of source generators `ℳ^i_j`.
    pub matrix: Matrix,
    pub valid: bool,
}

/// `ℳ^i_j ↦ Σ_{a,b} M^i_a K^b_j 𝒩^a_b` from `cohom(B, A)` to
/// `cohom(B', A')`, for `K` a `(B', B)`-Manin and `M` an `(A, A')`-Manin
/// scalar matrix.
pub fn cohom_map(
    k: &Matrix,
    m: &Matrix,
    (b, b2): (&Idempotent, &Idempotent),
    (a, a2): (&Idempotent, &Idempotent),
) -> Result<CohomMap> {
    if k.rows() != b2.dim() || k.cols() != b.dim() || m.rows() != a.dim() || m.cols() != a2.dim() {
        return Err(Error::BadShape("K must be dim B' x dim B and M dim A x dim A'".into()));
    }
    let rk = check_scalar_manin(b2, b, k)?;
    if !rk.pass {
        return Err(Error::Precondition(format!("K is not (B',B)-Manin at {:?}", rk.witness.unwrap_or_default())));
    }
    let rm = check_scalar_manin(a, a2, m)?;
    if !rm.pass {
        return Err(Error::Precondition(format!("M is not (A,A')-Manin at {:?}", rm.witness.unwrap_or_default())));
    }
    let source = cohom_algebra(b, a)?;
    let target = cohom_algebra(b2, a2)?;
    let (n, mm, n2, m2) = (a.dim(), b.dim(), a2.dim(), b2.dim());
    let matrix = Matrix::from_fn(k.field(), n2 * m2, n * mm, |row, col| {
        let (x, y) = (row / m2, row % m2);
        let (i, j) = (col / mm, col % mm);
        m.get(i, x) * k.get(y, j)
    });
    let valid = QuadraticAlgebra::extends_to_hom(&matrix, &source, &target)?;
    Ok(CohomMap {
        source,
        target,
        matrix,
        valid,
    })
}
