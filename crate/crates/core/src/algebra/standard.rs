//! Named operator families on `K^m ⊗ K^m`: antisymmetrizers, their
//! q-deformations, the flip, the quadric projector and the orthogonal
//! idempotent `B_m`.

use super::idempotent::Idempotent;
use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Parameters `q_{ij}` of the q-deformed flip, indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QParams {
    m: usize,
    q: Vec<Scalar>,
}

impl QParams {
    /// `q_{ij} = q` and `q_{ji} = q⁻¹` for `i < j`, `q_{ii} = 1`.
    pub fn uniform(field: &Field, m: usize, q: &Scalar) -> Result<QParams> {
        let q = field.coerce(q)?;
        let qi = q.inv().map_err(|_| Error::InvalidParameters("q must be nonzero".into()))?;
        let mut v = vec![field.one(); m * m];
        for i in 0..m {
            for j in (i + 1)..m {
                v[i * m + j] = q.clone();
                v[j * m + i] = qi.clone();
            }
        }
        Ok(QParams { m, q: v })
    }

    /// Validates `q_{ij} q_{ji} = 1` and `q_{ii} = 1`.
    pub fn from_matrix(q: &Matrix) -> Result<QParams> {
        let m = q.rows();
        if !q.is_square() {
            return Err(Error::InvalidParameters("q matrix must be square".into()));
        }
        for i in 0..m {
            if !q.get(i, i).is_one() {
                return Err(Error::InvalidParameters(format!("q_{{{0}{0}}} must be 1", i + 1)));
            }
            for j in 0..m {
                if !(q.get(i, j) * q.get(j, i)).is_one() {
                    return Err(Error::InvalidParameters(format!(
                        "q_{{{}{}}} q_{{{}{}}} must be 1",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(QParams {
            m,
            q: q.row_vecs().concat(),
        })
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.q[i * self.m + j]
    }

    pub fn size(&self) -> usize {
        self.m
    }
}

fn delta_matrix(field: &Field, m: usize, f: impl Fn(usize, usize, usize, usize) -> Scalar) -> Matrix {
    Matrix::from_fn(field, m * m, m * m, |r, c| f(r / m, r % m, c / m, c % m))
}

/// `P_m`: entries `δ^i_l δ^j_k`.
pub fn flip(field: &Field, m: usize) -> Matrix {
    delta_matrix(field, m, |i, j, k, l| if i == l && j == k { field.one() } else { field.zero() })
}

/// `P^q_m`: entries `q_{ji} δ^i_l δ^j_k`.
pub fn q_flip(field: &Field, q: &QParams) -> Matrix {
    delta_matrix(field, q.size(), |i, j, k, l| {
        if i == l && j == k {
            q.get(j, i).clone()
        } else {
            field.zero()
        }
    })
}

/// `Q_m`: entries `δ^{i+j}_{m+1} δ^{m+1}_{k+l}` (indices from 1).
pub fn quadric(field: &Field, m: usize) -> Matrix {
    delta_matrix(field, m, |i, j, k, l| {
        if i + j + 1 == m && k + l + 1 == m {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// `A_m = (1 − P_m)/2`.
pub fn antisym(field: &Field, m: usize) -> Idempotent {
    let a = flip(field, m).complement().scale(&field.ratio(1, 2));
    Idempotent::new(a).expect("antisymmetrizer is idempotent")
}

/// `A^q_m = (1 − P^q_m)/2`.
pub fn q_antisym(field: &Field, q: &QParams) -> Result<Idempotent> {
    Idempotent::new(q_flip(field, q).complement().scale(&field.ratio(1, 2)))
}

/// `B_m = A_m + Q_m/m`.
pub fn so_b(field: &Field, m: usize) -> Idempotent {
    let b = antisym(field, m)
        .matrix()
        .add(&quadric(field, m).scale(&field.ratio(1, m as i64)))
        .unwrap();
    Idempotent::new(b).expect("B_m is idempotent")
}

/// A named family member, selectable at run time.
pub trait OperatorFamily: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    /// Whether the family consists of idempotents.
    fn idempotent(&self) -> bool {
        true
    }
    fn build(&self, field: &Field, m: usize) -> Result<Matrix>;
}

macro_rules! family {
    ($ty:ident, $name:literal, $summary:literal, $idem:expr, |$f:ident, $m:ident| $body:expr) => {
        struct $ty;
        impl OperatorFamily for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn summary(&self) -> &'static str {
                $summary
            }
            fn idempotent(&self) -> bool {
                $idem
            }
            fn build(&self, $f: &Field, $m: usize) -> Result<Matrix> {
                $body
            }
        }
    };
}

fn uniform_q(field: &Field, m: usize) -> Result<QParams> {
    let q = field
        .variable()
        .ok_or_else(|| Error::InvalidParameters("q-deformed families need a rational-function field".into()))?;
    QParams::uniform(field, m, &q)
}

family!(Antisym, "antisym", "antisymmetrizer A_m", true, |f, m| Ok(antisym(f, m).matrix().clone()));
family!(QAntisym, "q_antisym", "q-antisymmetrizer A^q_m with q the field variable", true, |f, m| {
    Ok(q_antisym(f, &uniform_q(f, m)?)?.matrix().clone())
});
family!(Flip, "perm", "flip P_m (involution)", false, |f, m| Ok(flip(f, m)));
family!(QFlip, "q_perm", "q-flip P^q_m (involution)", false, |f, m| Ok(q_flip(f, &uniform_q(f, m)?)));
family!(Quadric, "Q", "quadric operator Q_m", false, |f, m| Ok(quadric(f, m)));
family!(SoB, "so_B", "orthogonal idempotent B_m = A_m + Q_m/m", true, |f, m| Ok(so_b(f, m).matrix().clone()));
family!(Zero, "zero", "zero idempotent", true, |f, m| Ok(Matrix::zeros(f, m * m, m * m)));
family!(One, "one", "identity idempotent", true, |f, m| Ok(Matrix::identity(f, m * m)));

pub fn families() -> Vec<Box<dyn OperatorFamily>> {
    vec![
        Box::new(Antisym),
        Box::new(QAntisym),
        Box::new(Flip),
        Box::new(QFlip),
        Box::new(Quadric),
        Box::new(SoB),
        Box::new(Zero),
        Box::new(One),
    ]
}

/// Parses `family:m`, e.g. `antisym:3`.
pub fn parse_spec(spec: &str) -> Result<(Box<dyn OperatorFamily>, usize)> {
    let (name, m) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidParameters(format!("expected family:m, got `{spec}`")))?;
    let m: usize = m
        .parse()
        .ok()
        .filter(|&m| m >= 1)
        .ok_or_else(|| Error::InvalidParameters(format!("bad size `{m}`")))?;
    let fam = families()
        .into_iter()
        .find(|f| f.name() == name)
        .ok_or_else(|| Error::InvalidParameters(format!("unknown family `{name}`")))?;
    Ok((fam, m))
}

/// Builds a named standard operator as a matrix.
pub fn std_matrix(field: &Field, spec: &str) -> Result<Matrix> {
    let (fam, m) = parse_spec(spec)?;
    fam.build(field, m)
}

/// Builds a named standard idempotent, validating idempotency.
pub fn std_idempotent(field: &Field, spec: &str) -> Result<Idempotent> {
    Idempotent::new(std_matrix(field, spec)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antisym_two_entries() {
        let f = Field::Rational;
        let h = f.ratio(1, 2);
        let mh = f.ratio(-1, 2);
        let z = f.zero();
        let expect = Matrix::from_rows(
            &f,
            vec![
                vec![z.clone(), z.clone(), z.clone(), z.clone()],
                vec![z.clone(), h.clone(), mh.clone(), z.clone()],
                vec![z.clone(), mh.clone(), h.clone(), z.clone()],
                vec![z.clone(), z.clone(), z.clone(), z.clone()],
            ],
        )
        .unwrap();
        assert_eq!(antisym(&f, 2).matrix(), &expect);
    }

    #[test]
    fn so_b_two_is_diagonal() {
        let f = Field::Rational;
        let d = Matrix::from_int_rows(&f, &[&[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0]]);
        assert_eq!(so_b(&f, 2).matrix(), &d);
    }

    #[test]
    fn q_antisym_two_rows() {
        let f = Field::ratfunc("q").unwrap();
        let q = f.variable().unwrap();
        let a = q_antisym(&f, &QParams::uniform(&f, 2, &q).unwrap()).unwrap();
        let m = a.matrix();
        let half = f.ratio(1, 2);
        assert_eq!(m.row(1), &[f.zero(), half.clone(), -(&q.inv().unwrap() * &half), f.zero()]);
        assert_eq!(m.row(2), &[f.zero(), -(&q * &half), half, f.zero()]);
        assert!(m.row(0).iter().chain(m.row(3)).all(|s| s.is_zero()));
    }

    #[test]
    fn invalid_q_params() {
        let f = Field::Rational;
        let q = Matrix::from_int_rows(&f, &[&[1, 2], &[2, 1]]);
        assert!(QParams::from_matrix(&q).is_err());
    }

    #[test]
    fn non_idempotent_families_are_rejected() {
        let f = Field::Rational;
        assert!(std_idempotent(&f, "perm:2").is_err());
        assert!(std_idempotent(&f, "antisym:3").is_ok());
        assert!(std_idempotent(&f, "q_antisym:2").is_err());
    }
}
