use manin::algebra::{random_idempotent_any, std_idempotent, Idempotent, QuadraticAlgebra};
use manin::arith::{Field, Scalar};
use manin::context::{s_embedding_context, slice_context, AlgebraStructureConstants};
use manin::corep::*;
use manin::linalg::Matrix;
use manin::manin::{direct_sum, FirstOrderMatrix, TensorFlavor};
use manin::Error;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::sync::Arc;

fn slice(alg: &AlgebraStructureConstants, delta: Vec<Vec<(usize, Scalar)>>, eps: Vec<Scalar>) -> Arc<ComonoidPresentation> {
    let ctx = slice_context(alg, delta, eps, 4).unwrap();
    Arc::new(ComonoidPresentation::bialgebra_slice(Arc::new(ctx)).unwrap())
}

/// Functions on ℤ/2 in the character basis `{1, χ}`.
fn z2(f: &Field) -> Arc<ComonoidPresentation> {
    let alg = AlgebraStructureConstants::group_algebra(f, &["1", "chi"], &[vec![0, 1], vec![1, 0]]).unwrap();
    slice(&alg, vec![vec![(0, f.one())], vec![(3, f.one())]], vec![f.one(), f.one()])
}

/// Functions on ℤ/2 × ℤ/2 in the character basis.
fn klein(f: &Field) -> Arc<ComonoidPresentation> {
    let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
    let alg = AlgebraStructureConstants::group_algebra(f, &["1", "c1", "c2", "c12"], &table).unwrap();
    let delta = (0..4).map(|a| vec![(a * 4 + a, f.one())]).collect();
    slice(&alg, delta, vec![f.one(); 4])
}

/// Sweedler's four-dimensional Hopf algebra on `1, g, x, gx`.
fn sweedler(f: &Field) -> Arc<ComonoidPresentation> {
    let (one, neg) = (f.one(), f.int(-1));
    // products of basis elements as (coefficient, basis index)
    let prod = |a: usize, b: usize| -> Option<(Scalar, usize)> {
        match (a, b) {
            (0, b) => Some((one.clone(), b)),
            (a, 0) => Some((one.clone(), a)),
            (1, 1) => Some((one.clone(), 0)),
            (1, 2) => Some((one.clone(), 3)),
            (1, 3) => Some((one.clone(), 2)),
            (2, 1) => Some((neg.clone(), 3)),
            (3, 1) => Some((neg.clone(), 2)),
            _ => None,
        }
    };
    let mut c = vec![f.zero(); 64];
    for a in 0..4 {
        for b in 0..4 {
            if let Some((s, k)) = prod(a, b) {
                c[(a * 4 + b) * 4 + k] = s;
            }
        }
    }
    let labels = |p: &str| ["1", "g", "x", "gx"].iter().map(|s| format!("{p}{s}")).collect();
    let alg = AlgebraStructureConstants::new(f, labels(""), labels("d"), c, vec![one.clone(), f.zero(), f.zero(), f.zero()]).unwrap();
    let delta = vec![
        vec![(0, one.clone())],
        vec![(5, one.clone())],
        vec![(2, one.clone()), (9, one.clone())],
        vec![(7, one.clone()), (12, one.clone())],
    ];
    slice(&alg, delta, vec![one.clone(), one, f.zero(), f.zero()])
}

fn mat(c: &Arc<ComonoidPresentation>, n: usize, cells: &[&[(usize, Scalar)]]) -> FirstOrderMatrix {
    FirstOrderMatrix::new(c.context(), n, n, cells.iter().map(|v| v.to_vec()).collect()).unwrap()
}

fn z2_regular(c: &Arc<ComonoidPresentation>) -> Corepresentation {
    let f = c.field();
    let h = f.ratio(1, 2);
    let de = [(0, h.clone()), (1, h.clone())];
    let dg = [(0, h.clone()), (1, -&h)];
    let m = mat(c, 2, &[&de, &dg, &dg, &de]);
    Corepresentation::new(c, std_idempotent(f, "antisym:2").unwrap(), m).unwrap()
}

fn character(c: &Arc<ComonoidPresentation>, k: usize) -> Corepresentation {
    let f = c.field();
    Corepresentation::new(c, Idempotent::zero(f, 1), mat(c, 1, &[&[(k, f.one())]])).unwrap()
}

fn elementary(f: &Field, m: usize) -> Vec<Matrix> {
    (0..m * m)
        .map(|k| Matrix::from_fn(f, m, m, |i, j| if i * m + j == k { f.one() } else { f.zero() }))
        .collect()
}

fn small_matrices(f: &Field, rows: usize, cols: usize) -> Vec<Matrix> {
    let n = rows * cols;
    (0..3usize.pow(n as u32))
        .map(|mut code| {
            let mut vals = Vec::with_capacity(n);
            for _ in 0..n {
                vals.push(f.int(code as i64 % 3 - 1));
                code /= 3;
            }
            Matrix::from_fn(f, rows, cols, |i, j| vals[i * cols + j].clone())
        })
        .collect()
}

#[test]
fn identity_corep_of_coend_for_small_idempotents() {
    let mut rng = StdRng::seed_from_u64(3);
    for field in [Field::Rational, Field::ratfunc("q").unwrap()] {
        let top = if field == Field::Rational { 3 } else { 2 };
        for m in 1..=top {
            let mut bs = vec![Idempotent::zero(&field, m), Idempotent::one(&field, m)];
            bs.push(std_idempotent(&field, &format!("antisym:{m}")).unwrap());
            if m <= 2 {
                bs.push(random_idempotent_any(&field, m, &mut rng));
            }
            for b in bs {
                let c = Arc::new(coend_comonoid(&b).unwrap());
                assert!(validate_comonoid(&c).pass);
                assert!(Corepresentation::identity(&c, &b).is_ok());
            }
        }
    }
}

#[test]
fn coend_of_zero_is_free() {
    let f = Field::Rational;
    let c = coend_comonoid(&Idempotent::zero(&f, 2)).unwrap();
    assert_eq!(c.algebra().unwrap().relations().dim(), 0);
}

#[test]
fn coend_of_conjugate_is_opposite() {
    let mut rng = StdRng::seed_from_u64(9);
    let f = Field::Rational;
    for _ in 0..5 {
        let b = random_idempotent_any(&f, 2, &mut rng);
        let c = coend_comonoid(&b).unwrap();
        let c21 = coend_comonoid(&b.conj21()).unwrap();
        let op = c.algebra().unwrap().opposite();
        assert!(c21.algebra().unwrap().relations().equals(op.relations()).unwrap());
    }
}

#[test]
fn perturbed_counit_breaks_extension() {
    let f = Field::Rational;
    let b = std_idempotent(&f, "antisym:2").unwrap();
    let c = coend_comonoid(&b).unwrap();
    let mut eps = c.eps1().to_vec();
    eps[1] = f.one();
    let bad = ComonoidPresentation::connected_qa(c.algebra().unwrap().clone(), c.delta1().to_vec(), eps, 2).unwrap();
    assert!(!validate_comonoid(&bad).pass);
}

#[test]
fn standard_matrix_corep_and_mutation() {
    let f = Field::Rational;
    let mat2 = AlgebraStructureConstants::matrix_algebra(&f, 2);
    let c = Arc::new(ComonoidPresentation::bialgebra_slice(Arc::new(s_embedding_context(&mat2, 4).unwrap())).unwrap());
    let std = s_embed(&c, &elementary(&f, 2)).unwrap();
    assert!(std.checks().pass);
    // projector onto e1⊗e1 adds a relation the generic matrix violates
    let mut e = Matrix::zeros(&f, 4, 4);
    e.set(0, 0, f.one());
    let r = corep_check(&c, &Idempotent::new(e).unwrap(), std.matrix()).unwrap();
    assert!(!r.pass);
    assert_eq!(r.first_failure().unwrap().check, "manin");
}

#[test]
fn identity_intertwiner_iff_equal_matrices() {
    let f = Field::Rational;
    let c = klein(&f);
    let a2 = std_idempotent(&f, "antisym:2").unwrap();
    let diag = |x: usize, y: usize| {
        let m = mat(&c, 2, &[&[(x, f.one())], &[], &[], &[(y, f.one())]]);
        Corepresentation::new(&c, a2.clone(), m).unwrap()
    };
    let id = Matrix::identity(&f, 2);
    for (x, y) in [(0, 1), (2, 3), (1, 1)] {
        for (u, v) in [(0, 1), (2, 3), (1, 1), (1, 0)] {
            let same = (x, y) == (u, v);
            assert_eq!(corep_morphism_check(&id, &diag(x, y), &diag(u, v)).unwrap(), same);
        }
    }
}

#[test]
fn z2_intertwiners_match_classical_count() {
    let f = Field::Rational;
    let c = z2(&f);
    let (reg, sign) = (z2_regular(&c), character(&c, 1));
    // classical: R(g) swaps coordinates, sign(g) = −1
    let rg = Matrix::from_int_rows(&f, &[&[0, 1], &[1, 0]]);
    let mut quantum = 0;
    let mut classical = 0;
    for k in small_matrices(&f, 2, 1) {
        let q = corep_morphism_check(&k, &reg, &sign).unwrap();
        let cl = rg.mul(&k).unwrap() == k.scale(&f.int(-1));
        assert_eq!(q, cl);
        quantum += usize::from(q);
        classical += usize::from(cl);
    }
    assert_eq!((quantum, classical), (3, 3));
}

#[test]
fn s_embedding_functoriality() {
    let f = Field::Rational;
    let mat2 = AlgebraStructureConstants::matrix_algebra(&f, 2);
    let c = Arc::new(ComonoidPresentation::bialgebra_slice(Arc::new(s_embedding_context(&mat2, 2).unwrap())).unwrap());
    let rho = elementary(&f, 2);
    let swap = Matrix::from_int_rows(&f, &[&[0, 1], &[1, 0]]);
    let rho2: Vec<Matrix> = rho.iter().map(|r| swap.mul(r).unwrap().mul(&swap).unwrap()).collect();
    let (a, b) = (s_embed(&c, &rho).unwrap(), s_embed(&c, &rho2).unwrap());
    for (src, dst, rs, rd) in [(&a, &a, &rho, &rho), (&a, &b, &rho, &rho2)] {
        let mut count = 0;
        for k in small_matrices(&f, 2, 2) {
            let classical = rs.iter().zip(rd).all(|(x, y)| k.mul(y).unwrap() == x.mul(&k).unwrap());
            assert_eq!(corep_morphism_check(&k, src, dst).unwrap(), classical);
            count += usize::from(classical);
        }
        // only multiples of the classical intertwiner
        assert_eq!(count, 3);
    }
}

#[test]
fn morphisms_compose() {
    let f = Field::Rational;
    let c = klein(&f);
    let mut rng = StdRng::seed_from_u64(4);
    let a2 = std_idempotent(&f, "antisym:2").unwrap();
    for _ in 0..6 {
        let mut reps = Vec::new();
        for _ in 0..3 {
            let (x, y) = (rng.gen_range(0..2), rng.gen_range(0..2));
            let m = mat(&c, 2, &[&[(x, f.one())], &[], &[], &[(y, f.one())]]);
            reps.push(Corepresentation::new(&c, a2.clone(), m).unwrap());
        }
        let all = small_matrices(&f, 2, 2);
        let morph = |s: &Corepresentation, d: &Corepresentation| {
            all.iter().filter(|k| corep_morphism_check(k, s, d).unwrap()).cloned().collect::<Vec<_>>()
        };
        for k1 in morph(&reps[0], &reps[1]) {
            for k2 in morph(&reps[1], &reps[2]) {
                assert!(corep_morphism_check(&k1.mul(&k2).unwrap(), &reps[0], &reps[2]).unwrap());
            }
        }
    }
}

#[test]
fn direct_sums() {
    let f = Field::Rational;
    let c = klein(&f);
    let (x, y) = (z2_like(&c, 1), character(&c, 2));
    let xy = corep_direct_sum(&x, &y).unwrap();
    let yx = corep_direct_sum(&y, &x).unwrap();
    let (m, n) = (x.dim(), y.dim());
    let swap = Matrix::from_fn(&f, m + n, m + n, |i, j| {
        if (i < m && j == i + n) || (i >= m && j == i - m) {
            f.one()
        } else {
            f.zero()
        }
    });
    assert!(corep_morphism_check(&swap, &xy, &yx).unwrap());

    let b = std_idempotent(&f, "antisym:2").unwrap();
    let coend = Arc::new(coend_comonoid(&b).unwrap());
    let id = Corepresentation::identity(&coend, &b).unwrap();
    assert!(matches!(corep_direct_sum(&id, &id), Err(Error::NonCommutingEntries { .. })));
    assert!(corep_coproduct(&id, &id).is_ok());
}

/// `diag(1, χ_k)` over the Klein slice.
fn z2_like(c: &Arc<ComonoidPresentation>, k: usize) -> Corepresentation {
    let f = c.field();
    let m = mat(c, 2, &[&[(0, f.one())], &[], &[], &[(k, f.one())]]);
    Corepresentation::new(c, std_idempotent(f, "antisym:2").unwrap(), m).unwrap()
}

#[test]
fn classical_direct_sum_embedding() {
    let f = Field::Rational;
    let mat2 = AlgebraStructureConstants::matrix_algebra(&f, 2);
    let c = Arc::new(ComonoidPresentation::bialgebra_slice(Arc::new(s_embedding_context(&mat2, 2).unwrap())).unwrap());
    let rho = elementary(&f, 2);
    let sum: Vec<Matrix> = rho
        .iter()
        .map(|r| Matrix::from_fn(&f, 4, 4, |i, j| if i / 2 == j / 2 { r.get(i % 2, j % 2).clone() } else { f.zero() }))
        .collect();
    let a = s_embed(&c, &rho).unwrap();
    let ds = corep_direct_sum(&a, &a).unwrap();
    assert_eq!(ds.matrix(), s_embed(&c, &sum).unwrap().matrix());
}

#[test]
fn trivial_block_extension() {
    let f = Field::Rational;
    let c = z2(&f);
    let reg = z2_regular(&c);
    let t = Corepresentation::trivial(&c).unwrap();
    let cp = corep_coproduct(&reg, &t).unwrap();
    assert_eq!(cp.matrix(), &direct_sum(reg.matrix(), t.matrix()).unwrap());
}

#[test]
fn tensor_products() {
    let f = Field::Rational;
    let mat2 = AlgebraStructureConstants::matrix_algebra(&f, 2);
    let c = Arc::new(ComonoidPresentation::bialgebra_slice(Arc::new(s_embedding_context(&mat2, 4).unwrap())).unwrap());
    let a = s_embed(&c, &elementary(&f, 2)).unwrap();
    let t = corep_tensor(&a, &a, TensorFlavor::White).unwrap();
    let ctx = c.context();
    for (r, col) in [(0, 0), (1, 2), (3, 1), (2, 3)] {
        let (i, k, j, l) = (r / 2, r % 2, col / 2, col % 2);
        let want = ctx.mul(1, a.matrix().entry(i, j), 1, a.matrix().entry(k, l)).unwrap();
        assert_eq!(t.matrix().entry(r, col), &want);
    }
    assert!(corep_tensor(&a, &a, TensorFlavor::Black).is_ok());

    let z = z2(&f);
    let reg = z2_regular(&z);
    let bt = corep_tensor(&reg, &Corepresentation::trivial(&z).unwrap(), TensorFlavor::Black).unwrap();
    assert_eq!(bt.matrix().entries(), reg.matrix().entries());
}

#[test]
fn tensor_over_noncommutative_slice_can_fail() {
    let f = Field::Rational;
    let c = sweedler(&f);
    let s2 = std_idempotent(&f, "antisym:2").unwrap().complement();
    let m = Corepresentation::new(&c, s2, mat(&c, 2, &[&[(0, f.one())], &[(2, f.one())], &[], &[(1, f.one())]])).unwrap();
    let g = character(&c, 1);
    assert!(matches!(corep_tensor(&m, &g, TensorFlavor::White), Err(Error::NonExistence { .. })));
    let g1 = Corepresentation::new(&c, Idempotent::one(&f, 1), g.matrix().clone()).unwrap();
    assert!(matches!(corep_tensor(&m, &g1, TensorFlavor::Black), Err(Error::NonExistence { .. })));
    assert!(corep_tensor(&m, &g1, TensorFlavor::White).is_ok());
}

#[test]
fn duals() {
    let f = Field::Rational;
    let c = z2(&f);
    let reg = z2_regular(&c);
    let d = corep_dual(&reg, reg.matrix(), DualFlavor::Dual).unwrap();
    let dd = corep_dual(&d, &reg.matrix().transpose(), DualFlavor::Dual).unwrap();
    assert_eq!(dd.matrix(), reg.matrix());
    assert_eq!(dd.idempotent(), reg.idempotent());

    let kd = corep_dual(&reg, reg.matrix(), DualFlavor::KoszulDual).unwrap();
    let a2 = std_idempotent(&f, "antisym:2").unwrap();
    assert_eq!(QuadraticAlgebra::x(kd.idempotent()).relations(), QuadraticAlgebra::xi(&a2).relations());

    let t = Corepresentation::trivial(&c).unwrap();
    let td = corep_dual(&t, t.matrix(), DualFlavor::Dual).unwrap();
    assert_eq!(td.matrix(), t.matrix());

    let bad = mat(&c, 2, &[&[(0, f.one())], &[], &[], &[(0, f.one())]]);
    assert!(matches!(corep_dual(&reg, &bad, DualFlavor::Dual), Err(Error::InverseFailure { .. })));
}

#[test]
fn duals_over_sweedler() {
    let f = Field::Rational;
    let c = sweedler(&f);
    let s2 = std_idempotent(&f, "antisym:2").unwrap().complement();
    let m = Corepresentation::new(&c, s2, mat(&c, 2, &[&[(0, f.one())], &[(2, f.one())], &[], &[(1, f.one())]])).unwrap();
    // antipode: S(g) = g, S(x) = gx
    let minv = mat(&c, 2, &[&[(0, f.one())], &[(3, f.one())], &[], &[(1, f.one())]]);
    assert!(corep_dual(&m, &minv, DualFlavor::Dual).is_ok());
    assert!(corep_dual(&m, &minv, DualFlavor::KoszulDual).is_ok());
    assert!(matches!(hom_corep(&m, &m, &minv), Err(Error::Precondition(_))));
}

#[test]
fn hom_corepresentations() {
    let f = Field::Rational;
    let c = z2(&f);
    let (reg, sign) = (z2_regular(&c), character(&c, 1));
    let h = hom_corep(&reg, &sign, reg.matrix()).unwrap();
    let half = f.ratio(1, 2);
    let de = vec![(0, half.clone()), (1, half.clone())];
    let minus_dg = vec![(0, -&half), (1, half)];
    assert_eq!(h.matrix().entries(), &[de.clone(), minus_dg.clone(), minus_dg, de][..]);
    let t = Corepresentation::trivial(&c).unwrap();
    let tt = hom_corep(&t, &t, t.matrix()).unwrap();
    assert_eq!(tt.matrix().entries(), t.matrix().entries());
}

#[test]
fn dequantise_roundtrip() {
    let f = Field::Rational;
    let mat2 = AlgebraStructureConstants::matrix_algebra(&f, 2);
    let c = Arc::new(s_embedding_comonoid(&mat2).unwrap());
    let rho = elementary(&f, 2);
    let back = dequantise(&s_embed(&c, &rho).unwrap()).unwrap();
    assert_eq!(back.algebra.constants(), mat2.constants());
    assert_eq!(back.algebra.unit(), mat2.unit());
    assert_eq!(back.matrices, rho);

    let b = std_idempotent(&f, "antisym:2").unwrap();
    let coend = Arc::new(coend_comonoid(&b).unwrap());
    let d = dequantise(&Corepresentation::identity(&coend, &b).unwrap()).unwrap();
    assert_eq!(d.matrices, elementary(&f, 2));
    assert_eq!(d.algebra.constants(), mat2.constants());

    let z = dequantise(&Corepresentation::zero(&coend).unwrap()).unwrap();
    assert!(z.matrices.iter().all(|m| m.rows() == 0 && m.cols() == 0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn coproducts_over_random_slices(seed in any::<u64>()) {
        let f = Field::Rational;
        let mut rng = StdRng::seed_from_u64(seed);
        let c = klein(&f);
        let pick = |rng: &mut StdRng| {
            let m = rng.gen_range(1..=2);
            let b = if m == 1 { Idempotent::zero(&f, 1) } else { std_idempotent(&f, "antisym:2").unwrap() };
            let cells: Vec<Vec<(usize, Scalar)>> = (0..m * m)
                .map(|p| if p / m == p % m { vec![(rng.gen_range(0..4), f.one())] } else { vec![] })
                .collect();
            Corepresentation::new(&c, b, FirstOrderMatrix::new(c.context(), m, m, cells).unwrap()).unwrap()
        };
        let (a, b) = (pick(&mut rng), pick(&mut rng));
        let cp = corep_coproduct(&a, &b).unwrap();
        prop_assert!(cp.checks().pass);
        prop_assert_eq!(corep_direct_sum(&a, &b).is_ok(), corep_direct_sum(&b, &a).is_ok());
    }
}
