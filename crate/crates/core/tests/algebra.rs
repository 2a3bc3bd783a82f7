use manin::algebra::{
    cohom_algebra, product, random_idempotent_any, std_idempotent, Idempotent, QuadraticAlgebra,
};
use manin::arith::Field;
use manin::linalg::Subspace;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn fields() -> [Field; 2] {
    [Field::Rational, Field::ratfunc("q").unwrap()]
}

fn x(spec: &str) -> QuadraticAlgebra {
    QuadraticAlgebra::x(&std_idempotent(&Field::Rational, spec).unwrap())
}

#[test]
fn koszul_dual_of_polynomial_is_grassmann() {
    let a2 = std_idempotent(&Field::Rational, "antisym:2").unwrap();
    let dual = QuadraticAlgebra::x(&a2).koszul_dual();
    assert_eq!(dual.relations(), QuadraticAlgebra::xi(&a2).relations());
}

#[test]
fn grassmann_graded_dims() {
    let a3 = std_idempotent(&Field::Rational, "antisym:3").unwrap();
    let xi = QuadraticAlgebra::xi(&a3);
    let dims: Vec<_> = (0..5).map(|k| xi.graded_dim(k).unwrap()).collect();
    assert_eq!(dims, vec![1, 3, 3, 1, 0]);
}

#[test]
fn tensor_algebra_from_zero() {
    let z = QuadraticAlgebra::x(&Idempotent::zero(&Field::Rational, 3));
    assert_eq!(z.relations().dim(), 0);
}

#[test]
fn white_product_dimension_and_presentation() {
    let f = Field::Rational;
    let a2 = std_idempotent(&f, "antisym:2").unwrap();
    let p = QuadraticAlgebra::x(&a2);
    let w = product(&p, &p, "white").unwrap();
    // r·p² + n²·s − r·s with n = p = 2 and r = s = 1
    assert_eq!(w.relations().dim(), 4 + 4 - 1);
    assert_eq!(w.graded_dim(2).unwrap(), 9);
    let tep = Idempotent::tep(&a2, &a2).unwrap();
    assert_eq!(QuadraticAlgebra::x(&tep).relations(), w.relations());
}

#[test]
fn black_product_dimension() {
    let p = x("antisym:2");
    assert_eq!(product(&p, &p, "black").unwrap().relations().dim(), 1);
}

#[test]
fn cohom_matches_explicit_manin_relations() {
    let f = Field::Rational;
    let a2 = std_idempotent(&f, "antisym:2").unwrap();
    let c = cohom_algebra(&a2, &a2).unwrap();
    // generators M^s_k at s*2+k; words at (g1*4 + g2)
    let w = |a: usize, b: usize| a * 4 + b;
    let (m11, m12, m21, m22) = (0, 1, 2, 3);
    let one = f.one();
    let neg = f.int(-1);
    let rows = vec![
        vec![(w(m11, m21), one.clone()), (w(m21, m11), neg.clone())],
        vec![(w(m12, m22), one.clone()), (w(m22, m12), neg.clone())],
        manin::linalg::sparse::collect(vec![
            (w(m11, m22), one.clone()),
            (w(m22, m11), neg.clone()),
            (w(m21, m12), neg.clone()),
            (w(m12, m21), one.clone()),
        ]),
    ];
    let oracle = Subspace::from_rows(&f, 16, rows);
    assert_eq!(c.relations(), &oracle);
}

/// Direct relation list `Σ A^{pq}_{st}(1−B)^{kl}_{ij} ℳ^s_k ℳ^t_l`.
fn cohom_oracle(b: &Idempotent, a: &Idempotent) -> Subspace {
    let f = a.field();
    let (n, m) = (a.dim(), b.dim());
    let nb = b.matrix().complement();
    let g = n * m;
    let mut rows = Vec::new();
    for p in 0..n * n {
        for q in 0..m * m {
            let mut v = Vec::new();
            for st in 0..n * n {
                let av = a.matrix().get(p, st);
                if av.is_zero() {
                    continue;
                }
                for kl in 0..m * m {
                    let bv = nb.get(kl, q);
                    if bv.is_zero() {
                        continue;
                    }
                    let (s, t, k, l) = (st / n, st % n, kl / m, kl % m);
                    v.push(((s * m + k) * g + t * m + l, av * bv));
                }
            }
            rows.push(manin::linalg::sparse::collect(v));
        }
    }
    Subspace::from_rows(f, g * g, rows)
}

#[test]
fn std_families_validate() {
    let f = Field::Rational;
    for m in 1..=3 {
        for fam in ["antisym", "so_B", "zero", "one"] {
            std_idempotent(&f, &format!("{fam}:{m}")).unwrap();
        }
    }
    let fq = Field::ratfunc("q").unwrap();
    std_idempotent(&fq, "q_antisym:3").unwrap();
}

#[test]
fn b3_relation_dim() {
    assert_eq!(x("so_B:3").relations().dim(), 4);
}

#[test]
fn conj21_fixes_antisymmetrizer() {
    for m in 1..=3 {
        let a = std_idempotent(&Field::Rational, &format!("antisym:{m}")).unwrap();
        assert_eq!(a.conj21(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn koszul_involution(seed in any::<u64>(), n in 1usize..=3, fi in 0usize..2) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = &fields()[fi];
        let e = random_idempotent_any(f, n, &mut rng);
        let a = QuadraticAlgebra::x(&e);
        let twice = a.koszul_dual().koszul_dual();
        prop_assert_eq!(twice.relations(), a.relations());
        let from_xi = QuadraticAlgebra::xi(&e).koszul_dual();
        prop_assert_eq!(from_xi.relations(), a.relations());
    }

    #[test]
    fn koszul_exchange(seed in any::<u64>(), n in 1usize..=2, m in 1usize..=2) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = Field::Rational;
        let a = QuadraticAlgebra::x(&random_idempotent_any(&f, n, &mut rng));
        let b = QuadraticAlgebra::x(&random_idempotent_any(&f, m, &mut rng));
        let lhs = product(&a, &b, "white").unwrap().koszul_dual();
        let rhs = product(&a.koszul_dual(), &b.koszul_dual(), "black").unwrap();
        prop_assert_eq!(lhs.relations(), rhs.relations());
    }

    #[test]
    fn white_degree_two(seed in any::<u64>(), n in 1usize..=2, m in 1usize..=2) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = Field::Rational;
        let a = QuadraticAlgebra::x(&random_idempotent_any(&f, n, &mut rng));
        let b = QuadraticAlgebra::x(&random_idempotent_any(&f, m, &mut rng));
        let w = product(&a, &b, "white").unwrap();
        prop_assert_eq!(w.graded_dim(2).unwrap(), a.graded_dim(2).unwrap() * b.graded_dim(2).unwrap());
    }

    #[test]
    fn even_tensor_hilbert_convolution(seed in any::<u64>(), n in 1usize..=2, m in 1usize..=2) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = Field::Rational;
        let a = QuadraticAlgebra::x(&random_idempotent_any(&f, n, &mut rng));
        let b = QuadraticAlgebra::x(&random_idempotent_any(&f, m, &mut rng));
        let e = product(&a, &b, "even_tensor").unwrap();
        for k in 0..=4 {
            let conv: usize = (0..=k).map(|l| a.graded_dim(l).unwrap() * b.graded_dim(k - l).unwrap()).sum();
            prop_assert_eq!(e.graded_dim(k).unwrap(), conv);
        }
    }

    #[test]
    fn idempotent_constructors_validate(seed in any::<u64>(), m in 1usize..=3, n in 1usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = Field::Rational;
        let b = random_idempotent_any(&f, m, &mut rng);
        let c = random_idempotent_any(&f, n, &mut rng);
        for e in [
            Idempotent::tep(&b, &c).unwrap(),
            Idempotent::black_tep(&b, &c).unwrap(),
            Idempotent::dis(&b, &c).unwrap(),
            Idempotent::cop(&b, &c).unwrap(),
        ] {
            prop_assert!(Idempotent::new(e.matrix().clone()).is_ok());
        }
    }

    #[test]
    fn presentations_match_products(seed in any::<u64>(), m in 1usize..=2, n in 1usize..=2) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = Field::Rational;
        let b = random_idempotent_any(&f, m, &mut rng);
        let c = random_idempotent_any(&f, n, &mut rng);
        let (xb, xc) = (QuadraticAlgebra::x(&b), QuadraticAlgebra::x(&c));
        let cases = [
            (Idempotent::tep(&b, &c).unwrap(), "white"),
            (Idempotent::black_tep(&b, &c).unwrap(), "black"),
            (Idempotent::dis(&b, &c).unwrap(), "even_tensor"),
            (Idempotent::cop(&b, &c).unwrap(), "amalg"),
        ];
        for (e, kind) in cases {
            let p = product(&xb, &xc, kind).unwrap();
            let xe = QuadraticAlgebra::x(&e);
            prop_assert_eq!(xe.relations(), p.relations(), "{}", kind);
        }
    }

    #[test]
    fn cohom_matches_direct_formula(seed in any::<u64>(), n in 1usize..=2, m in 1usize..=2) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = Field::Rational;
        let a = random_idempotent_any(&f, n, &mut rng);
        let b = random_idempotent_any(&f, m, &mut rng);
        let c = cohom_algebra(&b, &a).unwrap();
        prop_assert_eq!(c.relations(), &cohom_oracle(&b, &a));
        let via_xi = product(&QuadraticAlgebra::xi(&a).koszul_dual(), &QuadraticAlgebra::xi(&b), "black").unwrap();
        prop_assert_eq!(c.relations(), via_xi.relations());
    }
}
