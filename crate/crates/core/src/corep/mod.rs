//! Comonoid presentations and their corepresentations: multiplicative
//! first-order Manin matrices over the comonoid's entry space.

mod comonoid;

pub use comonoid::{
    coend_comonoid, coend_comonoid_with_degree, s_embedding_comonoid, validate_comonoid, ComonoidKind,
    ComonoidPresentation,
};

use crate::algebra::{std_idempotent, Idempotent};
use crate::context::AlgebraStructureConstants;
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use crate::linalg::Matrix;
use crate::manin::{
    check_manin, check_scalar_manin, commute_report, direct_sum, dot_tensor_in, multiplicative_check,
    tensor_existence, FirstOrderMatrix, TensorFlavor,
};
use crate::report::Report;
use std::sync::Arc;

/// A quantum representation: an idempotent `B` on `K^m` and an `m×m`
/// multiplicative `B`-Manin matrix over a comonoid.
#[derive(Clone, Debug, PartialEq)]
pub struct Corepresentation {
    comonoid: Arc<ComonoidPresentation>,
    idempotent: Idempotent,
    matrix: FirstOrderMatrix,
    checks: Report,
}

impl Corepresentation {
    /// Runs [`corep_check`] and fails with [`Error::CorepCheck`] unless it passes.
    pub fn new(comonoid: &Arc<ComonoidPresentation>, idempotent: Idempotent, matrix: FirstOrderMatrix) -> Result<Corepresentation> {
        let checks = corep_check(comonoid, &idempotent, &matrix)?;
        if !checks.pass {
            let f = checks.first_failure().expect("failing report has a failure");
            return Err(Error::CorepCheck(format!(
                "{} fails at {:?}: {}",
                f.check,
                f.witness.clone().unwrap_or_default(),
                f.expansion.clone().unwrap_or_default()
            )));
        }
        Ok(Corepresentation {
            comonoid: comonoid.clone(),
            idempotent,
            matrix,
            checks,
        })
    }

    /// The universal matrix `(ℳ^i_j)` of a coend comonoid.
    pub fn identity(comonoid: &Arc<ComonoidPresentation>, b: &Idempotent) -> Result<Corepresentation> {
        let m = b.dim();
        if comonoid.context().entry_dim() != m * m {
            return Err(Error::BadShape(format!("entry space is not {m}² dimensional")));
        }
        let one = comonoid.field().one();
        let mat = FirstOrderMatrix::from_fn(comonoid.context(), m, m, |i, j| vec![(i * m + j, one.clone())])?;
        Corepresentation::new(comonoid, b.clone(), mat)
    }

    /// The `1×1` matrix `(1)` on `𝕂`, for comonoids whose entry space holds the unit.
    pub fn trivial(comonoid: &Arc<ComonoidPresentation>) -> Result<Corepresentation> {
        let mat = FirstOrderMatrix::identity(comonoid.context(), 1)?;
        Corepresentation::new(comonoid, Idempotent::zero(comonoid.field(), 1), mat)
    }

    /// The zero-dimensional corepresentation.
    pub fn zero(comonoid: &Arc<ComonoidPresentation>) -> Result<Corepresentation> {
        let mat = FirstOrderMatrix::zeros(comonoid.context(), 0, 0);
        Corepresentation::new(comonoid, Idempotent::zero(comonoid.field(), 0), mat)
    }

    pub fn comonoid(&self) -> &Arc<ComonoidPresentation> {
        &self.comonoid
    }

    pub fn idempotent(&self) -> &Idempotent {
        &self.idempotent
    }

    pub fn matrix(&self) -> &FirstOrderMatrix {
        &self.matrix
    }

    /// The passing report recorded at construction.
    pub fn checks(&self) -> &Report {
        &self.checks
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// Multiplicativity and the `(B, B)`-Manin condition in the comonoid's context.
pub fn corep_check(c: &ComonoidPresentation, b: &Idempotent, m: &FirstOrderMatrix) -> Result<Report> {
    if m.rows() != m.cols() || m.rows() != b.dim() {
        return Err(Error::BadShape(format!(
            "corepresentation matrix is {}x{}, idempotent side is {}",
            m.rows(),
            m.cols(),
            b.dim()
        )));
    }
    if **m.context() != **c.context() {
        return Err(Error::ContextMismatch("matrix does not live over the comonoid".into()));
    }
    let mut manin = check_manin(b, b, m, m)?;
    manin.check = "manin".into();
    Ok(Report::all("corep", vec![multiplicative_check(m)?, manin]))
}

fn shared(a: &Corepresentation, b: &Corepresentation) -> Result<()> {
    if !Arc::ptr_eq(&a.comonoid, &b.comonoid) && a.comonoid != b.comonoid {
        return Err(Error::ContextMismatch("corepresentations of different comonoids".into()));
    }
    Ok(())
}

/// `K` is a morphism `(B, M) → (B', M')` iff it is scalar `(B, B')`-Manin
/// and `KM' = MK`.
pub fn corep_morphism_report(k: &Matrix, src: &Corepresentation, dst: &Corepresentation) -> Result<Report> {
    shared(src, dst)?;
    if k.rows() != src.dim() || k.cols() != dst.dim() {
        return Err(Error::BadShape(format!(
            "intertwiner must be {}x{}, got {}x{}",
            src.dim(),
            dst.dim(),
            k.rows(),
            k.cols()
        )));
    }
    let mut manin = check_scalar_manin(&src.idempotent, &dst.idempotent, k)?;
    manin.check = "scalar_manin".into();
    let (m, m2) = (&src.matrix, &dst.matrix);
    let ctx = m.context();
    let mut intertwines = Report::pass("intertwines");
    'outer: for i in 0..k.rows() {
        for j in 0..k.cols() {
            let mut km = Vec::new();
            for b in 0..k.cols() {
                sparse::add_scaled(&mut km, k.get(i, b), m2.entry(b, j));
            }
            let mut mk = Vec::new();
            for a in 0..k.rows() {
                sparse::add_scaled(&mut mk, k.get(a, j), m.entry(i, a));
            }
            let diff = sparse::axpy(&km, &ctx.field().int(-1), &mk);
            if !diff.is_empty() {
                intertwines = Report::fail("intertwines", vec![i + 1, j + 1], ctx.render(1, &diff));
                break 'outer;
            }
        }
    }
    Ok(Report::all("corep_morphism", vec![manin, intertwines]))
}

pub fn corep_morphism_check(k: &Matrix, src: &Corepresentation, dst: &Corepresentation) -> Result<bool> {
    Ok(corep_morphism_report(k, src, dst)?.pass)
}

/// `(DiS(B, C), M⊕N)`; exists iff the entries of `M` and `N` commute.
pub fn corep_direct_sum(a: &Corepresentation, b: &Corepresentation) -> Result<Corepresentation> {
    shared(a, b)?;
    let comm = commute_report(&a.matrix, &b.matrix)?;
    if let Some(w) = comm.witness {
        return Err(Error::NonCommutingEntries {
            left: format!("M[{},{}] = {}", w[0], w[1], a.matrix.render_entry(w[0] - 1, w[1] - 1)),
            right: format!("N[{},{}] = {}", w[2], w[3], b.matrix.render_entry(w[2] - 1, w[3] - 1)),
        });
    }
    let e = Idempotent::dis(&a.idempotent, &b.idempotent)?;
    Corepresentation::new(&a.comonoid, e, direct_sum(&a.matrix, &b.matrix)?)
}

/// `(CoP(B, C), M⊕N)`; always defined.
pub fn corep_coproduct(a: &Corepresentation, b: &Corepresentation) -> Result<Corepresentation> {
    shared(a, b)?;
    let e = Idempotent::cop(&a.idempotent, &b.idempotent)?;
    Corepresentation::new(&a.comonoid, e, direct_sum(&a.matrix, &b.matrix)?)
}

fn require_slice(c: &ComonoidPresentation, what: &str) -> Result<()> {
    if c.kind() != ComonoidKind::BialgebraSlice {
        return Err(Error::KindMismatch(format!(
            "{what} is defined for bialgebra slices only; products of entries leave the generators of a connected presentation"
        )));
    }
    Ok(())
}

/// White (`TeP`) or black tensor product, over the lifted slice whose entry
/// space is `P₂`.
pub fn corep_tensor(a: &Corepresentation, b: &Corepresentation, flavor: TensorFlavor) -> Result<Corepresentation> {
    shared(a, b)?;
    require_slice(&a.comonoid, "the tensor product of corepresentations")?;
    let (ea, eb) = (&a.idempotent, &b.idempotent);
    let exists = tensor_existence(ea, ea, eb, eb, &a.matrix, &b.matrix, flavor)?;
    if !exists.pass {
        if exists.sufficient_only {
            return Err(Error::ContextTooShallow(
                "P4 is needed to decide existence for non-commuting entries".into(),
            ));
        }
        let w: Vec<String> = exists.witness.unwrap_or_default().iter().map(|i| i.to_string()).collect();
        return Err(Error::NonExistence {
            witness: format!("({}) = {}", w.join(","), exists.expansion.unwrap_or_default()),
        });
    }
    let lifted = Arc::new(a.comonoid.context().lift()?);
    let comonoid = Arc::new(ComonoidPresentation::bialgebra_slice(lifted.clone())?);
    let e = match flavor {
        TensorFlavor::White => Idempotent::tep(ea, eb)?,
        TensorFlavor::Black => Idempotent::black_tep(ea, eb)?,
    };
    Corepresentation::new(&comonoid, e, dot_tensor_in(&a.matrix, &b.matrix, &lifted)?)
}

/// Checks `Σ_k M^i_k Minv^k_j = δ^i_j·1` and `Σ_k Minv^i_k M^k_j = δ^i_j·1` in `P₂`.
pub fn verify_inverse(m: &FirstOrderMatrix, minv: &FirstOrderMatrix) -> Result<()> {
    m.check_context(minv)?;
    let n = m.rows();
    if m.cols() != n || minv.rows() != n || minv.cols() != n {
        return Err(Error::BadShape("inverse needs square matrices of equal size".into()));
    }
    let ctx = m.context();
    let one = ctx.unit_vector(2)?;
    for (x, y) in [(m, minv), (minv, m)] {
        for i in 0..n {
            for j in 0..n {
                let mut acc: SparseVec = Vec::new();
                for k in 0..n {
                    sparse::add_scaled(&mut acc, &ctx.field().one(), &ctx.mul(1, x.entry(i, k), 1, y.entry(k, j))?);
                }
                let want = if i == j { one.clone() } else { Vec::new() };
                if acc != want {
                    return Err(Error::InverseFailure { row: i + 1, col: j + 1 });
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualFlavor {
    /// `(Minv)ᵀ` on `(1 − B⁽²¹⁾)ᵀ`.
    Dual,
    /// `(Minv)ᵀ` on `1 − Bᵀ`, over the opposite multiplication.
    KoszulDual,
}

impl DualFlavor {
    pub fn name(self) -> &'static str {
        match self {
            DualFlavor::Dual => "dual",
            DualFlavor::KoszulDual => "koszul_dual",
        }
    }
}

/// Dual corepresentation from a user-supplied inverse matrix.
pub fn corep_dual(a: &Corepresentation, minv: &FirstOrderMatrix, flavor: DualFlavor) -> Result<Corepresentation> {
    require_slice(&a.comonoid, "the dual corepresentation")?;
    verify_inverse(&a.matrix, minv)?;
    match flavor {
        DualFlavor::Dual => {
            let e = Idempotent::new(a.idempotent.conj21().matrix().complement().transpose())?;
            Corepresentation::new(&a.comonoid, e, minv.transpose())
        }
        DualFlavor::KoszulDual => {
            let e = Idempotent::new(a.idempotent.matrix().transpose().complement())?;
            let comonoid = Arc::new(a.comonoid.opposite());
            let mat = minv.transpose().with_context(comonoid.context())?;
            Corepresentation::new(&comonoid, e, mat)
        }
    }
}

/// Corepresentation on the internal cohom: `((Minv)ᵀ)⁽¹⁾N⁽²⁾` on
/// `G((1 − Bᵀ), C)`, over a commutative slice.
pub fn hom_corep(a: &Corepresentation, b: &Corepresentation, minv: &FirstOrderMatrix) -> Result<Corepresentation> {
    shared(a, b)?;
    require_slice(&a.comonoid, "the hom corepresentation")?;
    if !a.comonoid.context().is_commutative() {
        return Err(Error::Precondition("hom corepresentations need a commutative slice".into()));
    }
    verify_inverse(&a.matrix, minv)?;
    let lifted = Arc::new(a.comonoid.context().lift()?);
    let comonoid = Arc::new(ComonoidPresentation::bialgebra_slice(lifted.clone())?);
    let e = Idempotent::black_tep(&Idempotent::new(a.idempotent.matrix().transpose().complement())?, &b.idempotent)?;
    Corepresentation::new(&comonoid, e, dot_tensor_in(&minv.transpose(), &b.matrix, &lifted)?)
}

/// Classical limit: the algebra dual to `(A₁, Δ₁, ε₁)` and the matrices
/// `ρ(v)` of its basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalRepresentation {
    pub algebra: AlgebraStructureConstants,
    pub matrices: Vec<Matrix>,
}

pub fn dequantise(a: &Corepresentation) -> Result<ClassicalRepresentation> {
    if a.comonoid.kind() != ComonoidKind::ConnectedQa {
        return Err(Error::KindMismatch("dequantisation needs a connected presentation".into()));
    }
    let ctx = a.comonoid.context();
    let f = ctx.field();
    let n = ctx.entry_dim();
    let mut c = vec![f.zero(); n * n * n];
    for (k, d) in a.comonoid.delta1().iter().enumerate() {
        for (ab, s) in d {
            c[ab * n + k] = s.clone();
        }
    }
    let labels = ctx.labels(1)?.to_vec();
    let algebra = AlgebraStructureConstants::new(
        f,
        labels.iter().map(|l| format!("{l}*")).collect(),
        labels,
        c,
        a.comonoid.eps1().to_vec(),
    )?;
    let m = a.dim();
    let matrices = (0..n)
        .map(|k| {
            Matrix::from_fn(f, m, m, |i, j| {
                sparse::get(a.matrix.entry(i, j), k).cloned().unwrap_or_else(|| f.zero())
            })
        })
        .collect();
    Ok(ClassicalRepresentation { algebra, matrices })
}

/// S-embedding of a classical representation given by the matrices `ρ(v_k)`
/// of a basis: `M^i_j = Σ_k ρ(v_k)^i_j v^k`, with `B = A_m`.
pub fn s_embed(comonoid: &Arc<ComonoidPresentation>, rho: &[Matrix]) -> Result<Corepresentation> {
    let ctx = comonoid.context();
    if rho.len() != ctx.entry_dim() {
        return Err(Error::BadShape(format!("need {} representation matrices", ctx.entry_dim())));
    }
    let m = rho.first().map_or(0, |r| r.rows());
    if rho.iter().any(|r| r.rows() != m || r.cols() != m) {
        return Err(Error::BadShape("representation matrices must be square of equal size".into()));
    }
    let mat = FirstOrderMatrix::from_fn(ctx, m, m, |i, j| {
        rho.iter()
            .enumerate()
            .filter(|(_, r)| !r.get(i, j).is_zero())
            .map(|(k, r)| (k, r.get(i, j).clone()))
            .collect()
    })?;
    let b = if m == 0 {
        Idempotent::zero(comonoid.field(), 0)
    } else {
        std_idempotent(comonoid.field(), &format!("antisym:{m}"))?
    };
    Corepresentation::new(comonoid, b, mat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::context::{s_embedding_context, slice_context};

    fn z2(f: &Field) -> Arc<ComonoidPresentation> {
        let alg = AlgebraStructureConstants::group_algebra(f, &["1", "chi"], &[vec![0, 1], vec![1, 0]]).unwrap();
        let delta = vec![vec![(0, f.one())], vec![(3, f.one())]];
        let ctx = slice_context(&alg, delta, vec![f.one(), f.one()], 4).unwrap();
        Arc::new(ComonoidPresentation::bialgebra_slice(Arc::new(ctx)).unwrap())
    }

    fn regular(c: &Arc<ComonoidPresentation>) -> Corepresentation {
        let f = c.field();
        let h = f.ratio(1, 2);
        let (de, dg) = (vec![(0, h.clone()), (1, h.clone())], vec![(0, h.clone()), (1, -&h)]);
        let m = FirstOrderMatrix::new(c.context(), 2, 2, vec![de.clone(), dg.clone(), dg, de]).unwrap();
        Corepresentation::new(c, std_idempotent(f, "antisym:2").unwrap(), m).unwrap()
    }

    #[test]
    fn identity_corep_of_coend() {
        let f = Field::Rational;
        for spec in ["antisym:2", "zero:2", "antisym:3"] {
            let b = std_idempotent(&f, spec).unwrap();
            let c = Arc::new(coend_comonoid(&b).unwrap());
            assert!(Corepresentation::identity(&c, &b).is_ok(), "{spec}");
        }
    }

    #[test]
    fn direct_sum_of_universal_fails() {
        let f = Field::Rational;
        let b = std_idempotent(&f, "antisym:2").unwrap();
        let c = Arc::new(coend_comonoid(&b).unwrap());
        let id = Corepresentation::identity(&c, &b).unwrap();
        assert!(matches!(corep_direct_sum(&id, &id), Err(Error::NonCommutingEntries { .. })));
        assert!(corep_coproduct(&id, &id).is_ok());
    }

    #[test]
    fn z2_dual_and_hom() {
        let f = Field::Rational;
        let c = z2(&f);
        let reg = regular(&c);
        let dual = corep_dual(&reg, reg.matrix(), DualFlavor::Dual).unwrap();
        assert_eq!(dual.matrix(), &reg.matrix().transpose());
        let sign = Corepresentation::new(
            &c,
            Idempotent::zero(&f, 1),
            FirstOrderMatrix::new(c.context(), 1, 1, vec![vec![(1, f.one())]]).unwrap(),
        )
        .unwrap();
        let hom = hom_corep(&reg, &sign, reg.matrix()).unwrap();
        let h = f.ratio(1, 2);
        assert_eq!(hom.matrix().entry(0, 1), &vec![(0, -&h), (1, h.clone())]);
        assert_eq!(hom.matrix().entry(0, 0), &vec![(0, h.clone()), (1, h)]);
    }

    #[test]
    fn tensor_rejected_for_connected() {
        let f = Field::Rational;
        let b = std_idempotent(&f, "antisym:2").unwrap();
        let c = Arc::new(coend_comonoid(&b).unwrap());
        let id = Corepresentation::identity(&c, &b).unwrap();
        assert!(matches!(corep_tensor(&id, &id, TensorFlavor::White), Err(Error::KindMismatch(_))));
        assert!(matches!(dequantise(&Corepresentation::zero(&c).unwrap()), Ok(r) if r.matrices.iter().all(|m| m.rows() == 0)));
    }

    #[test]
    fn s_embedding_slice_is_a_corep() {
        let f = Field::Rational;
        let mat2 = AlgebraStructureConstants::matrix_algebra(&f, 2);
        let c = Arc::new(ComonoidPresentation::bialgebra_slice(Arc::new(s_embedding_context(&mat2, 4).unwrap())).unwrap());
        let rho: Vec<Matrix> = (0..4).map(|k| Matrix::from_fn(&f, 2, 2, |i, j| if i * 2 + j == k { f.one() } else { f.zero() })).collect();
        let std = s_embed(&c, &rho).unwrap();
        let t = corep_tensor(&std, &std, TensorFlavor::White).unwrap();
        assert_eq!(t.dim(), 4);
    }
}
