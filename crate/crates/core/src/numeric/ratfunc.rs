//! Reduced rational functions in `H`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Poly, Rational};

/// `num / den` with `den` monic and coprime to `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() { (num, den) } else { (num.exact_div(&g), den.exact_div(&g)) };
        let lc = den.leading();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_constant() && self.den.is_constant() && self.num.coeff(0).is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Larger of the numerator and denominator degrees.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    /// `f(H) -> f(H + k)`.
    pub fn shift(&self, k: i64) -> RatFunc {
        // Shifting preserves coprimality and monicity.
        RatFunc { num: self.num.shift(k), den: self.den.shift(k) }
    }

    /// Panics on zero.
    pub fn recip(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Value at an integer point, `None` at a pole.
    pub fn eval_int(&self, at: i64) -> Option<Rational> {
        let d = self.den.eval_int(at);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval_int(at) / d)
        }
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.is_constant() && self.coeff(0).is_one()
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        // With g = gcd(d1, d2), the sum n1·(d2/g) + n2·(d1/g) is coprime to
        // both cofactors, so only factors of g can cancel.
        let g = self.den.gcd(&rhs.den);
        let (d1, d2) = (self.den.exact_div(&g), rhs.den.exact_div(&g));
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let c = num.gcd(&g);
        let num = num.exact_div(&c);
        let den = &(&self.den * &d2).exact_div(&c);
        let lc = den.leading().recip();
        RatFunc { num: num.scale(&lc), den: den.scale(&lc) }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            let c = self.den.coeff(0) * rhs.den.coeff(0);
            return RatFunc::from_poly((&self.num * &rhs.num).scale(&c.recip()));
        }
        // Both factors are reduced, so only cross terms can cancel.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        let lc = den.leading().recip();
        RatFunc { num: num.scale(&lc), den: den.scale(&lc) }
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.recip()
    }
}
