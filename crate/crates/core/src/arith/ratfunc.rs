use super::poly::Poly;
use num::{BigRational, One};

/// Element of ℚ(t) in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn from_poly(num: Poly) -> Self {
        RatFunc {
            num,
            den: Poly::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    /// Builds `num/den` in canonical form; `None` when `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.degree() == Some(0) {
            let l = den.leading().unwrap().recip();
            return RatFunc {
                num: num.scale(&l),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        Self::with_monic_den(num, den)
    }

    fn with_monic_den(num: Poly, den: Poly) -> Self {
        let l = den.leading().unwrap();
        if l.is_one() {
            RatFunc { num, den }
        } else {
            let inv = l.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RatFunc::from_poly(self.num.add(&o.num));
            }
            return Self::canonical(self.num.add(&o.num), self.den.clone());
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Self::canonical(num, self.den.mul(&o.den))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(self.num.mul(&o.num));
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let a = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1) };
        let d = if g1.is_one() { o.den.clone() } else { o.den.div_exact(&g1) };
        let c = if g2.is_one() { o.num.clone() } else { o.num.div_exact(&g2) };
        let b = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2) };
        Self::with_monic_den(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(Self::with_monic_den(self.den.clone(), self.num.clone()))
    }

    pub fn eval(&self, t: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(t);
        if d == BigRational::from_integer(0.into()) {
            return None;
        }
        Some(self.num.eval(t) / d)
    }

    pub fn render(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.render(var)
        } else {
            format!("({})/({})", self.num.render(var), self.den.render(var))
        }
    }
}
