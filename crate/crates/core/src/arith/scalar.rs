use super::poly::{render_abs_rational, Poly};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use rand::Rng;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// The base field: ℚ or ℚ(t) for a named variable t.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    RatFunc(Arc<str>),
}

/// An exact scalar. Rational-function scalars carry their variable name so
/// that mixing ℚ(q) with ℚ(z) is detected.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Fn(Arc<str>, RatFunc),
}

impl Field {
    pub fn ratfunc(var: &str) -> Result<Field> {
        if !is_identifier(var) {
            return Err(Error::InvalidParameters(format!("`{var}` is not an identifier")));
        }
        Ok(Field::RatFunc(Arc::from(var)))
    }

    /// Parses `Q`, `rational`, `Q(q)` or `ratfunc:q`.
    pub fn from_name(s: &str) -> Result<Field> {
        let s = s.trim();
        match s {
            "Q" | "rational" => return Ok(Field::Rational),
            _ => {}
        }
        if let Some(v) = s.strip_prefix("Q(").and_then(|r| r.strip_suffix(')')) {
            return Field::ratfunc(v);
        }
        if let Some(v) = s.strip_prefix("ratfunc:") {
            return Field::ratfunc(v);
        }
        Err(Error::InvalidParameters(format!("unknown field `{s}`")))
    }

    pub fn name(&self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::RatFunc(v) => format!("Q({v})"),
        }
    }

    pub fn variable_name(&self) -> Option<&str> {
        match self {
            Field::Rational => None,
            Field::RatFunc(v) => Some(v),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_rational(BigRational::zero())
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(BigRational::one())
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(&self, n: i64, d: i64) -> Scalar {
        self.from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(&self, r: BigRational) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(r),
            Field::RatFunc(v) => Scalar::Fn(v.clone(), RatFunc::constant(r)),
        }
    }

    /// The generator of ℚ(t); `None` over ℚ.
    pub fn variable(&self) -> Option<Scalar> {
        match self {
            Field::Rational => None,
            Field::RatFunc(v) => Some(Scalar::Fn(v.clone(), RatFunc::from_poly(Poly::x()))),
        }
    }

    pub fn of(s: &Scalar) -> Field {
        match s {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Fn(v, _) => Field::RatFunc(v.clone()),
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rational, Scalar::Rat(_)) => true,
            (Field::RatFunc(v), Scalar::Fn(w, _)) => v == w,
            _ => false,
        }
    }

    /// Moves a scalar into this field: rationals embed into ℚ(t), constant
    /// rational functions drop to ℚ, anything else is a mismatch.
    pub fn coerce(&self, s: &Scalar) -> Result<Scalar> {
        match (self, s) {
            (Field::Rational, Scalar::Rat(_)) => Ok(s.clone()),
            (Field::Rational, Scalar::Fn(_, f)) => f
                .as_constant()
                .map(Scalar::Rat)
                .ok_or_else(|| Error::FieldMismatch(self.name(), Field::of(s).name())),
            (Field::RatFunc(v), Scalar::Rat(r)) => Ok(Scalar::Fn(v.clone(), RatFunc::constant(r.clone()))),
            (Field::RatFunc(v), Scalar::Fn(w, _)) if v == w => Ok(s.clone()),
            _ => Err(Error::FieldMismatch(self.name(), Field::of(s).name())),
        }
    }

    pub fn parse(&self, text: &str) -> Result<Scalar> {
        super::parse::parse_scalar(text, self)
    }

    /// A random scalar with small numerators, denominators and degrees.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, height: i64) -> Scalar {
        let small = |rng: &mut R| {
            let n = rng.gen_range(-height..=height);
            let d = rng.gen_range(1..=height.max(1));
            BigRational::new(BigInt::from(n), BigInt::from(d))
        };
        match self {
            Field::Rational => Scalar::Rat(small(rng)),
            Field::RatFunc(v) => {
                let deg_n = rng.gen_range(0..=2);
                let deg_d = rng.gen_range(0..=1);
                let num = Poly::from_coeffs((0..=deg_n).map(|_| small(rng)).collect());
                let mut den = Poly::from_coeffs((0..=deg_d).map(|_| small(rng)).collect());
                if den.is_zero() {
                    den = Poly::one();
                }
                Scalar::Fn(v.clone(), RatFunc::new(num, den).unwrap())
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fn(_, f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fn(_, f) => f.is_one(),
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Fn(_, f) => f.as_constant(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(r) if r.is_zero() => Err(Error::DivisionByZero),
            Scalar::Rat(r) => Ok(Scalar::Rat(r.recip())),
            Scalar::Fn(v, f) => f
                .inv()
                .map(|g| Scalar::Fn(v.clone(), g))
                .ok_or(Error::DivisionByZero),
        }
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = match self {
            Scalar::Rat(_) => Scalar::Rat(BigRational::one()),
            Scalar::Fn(v, _) => Scalar::Fn(v.clone(), RatFunc::one()),
        };
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes a rational value for the variable; `None` at a pole.
    pub fn specialize(&self, t: &BigRational) -> Option<BigRational> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Fn(_, f) => f.eval(t),
        }
    }

    fn binop(
        &self,
        o: &Scalar,
        fr: impl Fn(&BigRational, &BigRational) -> BigRational,
        ff: impl Fn(&RatFunc, &RatFunc) -> RatFunc,
    ) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(fr(a, b)),
            (Scalar::Fn(v, a), Scalar::Fn(w, b)) => {
                assert!(v == w, "field mismatch: Q({v}) vs Q({w})");
                Scalar::Fn(v.clone(), ff(a, b))
            }
            (Scalar::Rat(a), Scalar::Fn(v, b)) => Scalar::Fn(v.clone(), ff(&RatFunc::constant(a.clone()), b)),
            (Scalar::Fn(v, a), Scalar::Rat(b)) => Scalar::Fn(v.clone(), ff(a, &RatFunc::constant(b.clone()))),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Scalar) -> bool {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Fn(v, a), Scalar::Fn(w, b)) => v == w && a == b,
            (Scalar::Rat(a), Scalar::Fn(_, b)) | (Scalar::Fn(_, b), Scalar::Rat(a)) => {
                b.as_constant().as_ref() == Some(a)
            }
        }
    }
}

impl Eq for Scalar {}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        self.binop(o, |a, b| a + b, |a, b| a.add(b))
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        if o.is_zero() {
            return self.clone();
        }
        self.binop(o, |a, b| a - b, |a, b| a.sub(b))
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if o.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return o.clone();
        }
        self.binop(o, |a, b| a * b, |a, b| a.mul(b))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Fn(v, f) => Scalar::Fn(v.clone(), f.neg()),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar { (&self).$m(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.is_negative() {
                    f.write_str("-")?;
                }
                f.write_str(&render_abs_rational(&r.abs()))
            }
            Scalar::Fn(v, g) => f.write_str(&g.render(v)),
        }
    }
}

/// Binary and unary operations of the checked scalar API.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Neg,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithValue {
    Scalar(Scalar),
    Bool(bool),
}

/// Checked arithmetic: both operands must live in the same field.
/// Unary operations ignore `b`.
pub fn arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<ArithValue> {
    let (fa, fb) = (Field::of(a), Field::of(b));
    if fa != fb && !matches!(op, ArithOp::Inv | ArithOp::Neg) {
        return Err(Error::FieldMismatch(fa.name(), fb.name()));
    }
    Ok(match op {
        ArithOp::Add => ArithValue::Scalar(a + b),
        ArithOp::Sub => ArithValue::Scalar(a - b),
        ArithOp::Mul => ArithValue::Scalar(a * b),
        ArithOp::Div => ArithValue::Scalar(a.div(b)?),
        ArithOp::Inv => ArithValue::Scalar(a.inv()?),
        ArithOp::Neg => ArithValue::Scalar(-a),
        ArithOp::Eq => ArithValue::Bool(a == b),
    })
}
