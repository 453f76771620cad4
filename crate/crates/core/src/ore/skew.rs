//! Skew Laurent polynomials `Σ p_k(H) ∂^k` with `∂ p(H) = p(H + 1) ∂`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::numeric::{Poly, RatFunc};

/// Coefficient rings closed under the shift `H ↦ H + k`.
pub trait SkewCoeff: Clone + PartialEq + Eq + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn shift(&self, k: i64) -> Self;
    /// Degree used by coefficient growth guards.
    fn degree(&self) -> usize;
}

impl SkewCoeff for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn shift(&self, k: i64) -> Self {
        Poly::shift(self, k)
    }
    fn degree(&self) -> usize {
        Poly::degree(self).unwrap_or(0)
    }
}

impl SkewCoeff for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn shift(&self, k: i64) -> Self {
        RatFunc::shift(self, k)
    }
    fn degree(&self) -> usize {
        RatFunc::degree(self)
    }
}

/// Sparse map `k ↦ p_k` for the element `Σ p_k ∂^k`, coefficients on the
/// left.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SkewLaurent<C: SkewCoeff> {
    terms: BTreeMap<i64, C>,
}

pub type SkewLaurentPolyH = SkewLaurent<Poly>;
pub type SkewLaurentRF = SkewLaurent<RatFunc>;

impl<C: SkewCoeff> SkewLaurent<C> {
    pub fn zero() -> Self {
        SkewLaurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    /// `c ∂^k`.
    pub fn monomial(c: C, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        SkewLaurent { terms }
    }

    /// `∂^k` for any integer `k`.
    pub fn d_pow(k: i64) -> Self {
        Self::monomial(C::one(), k)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    fn add_term(&mut self, k: i64, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(e) => {
                *e = e.add(c);
                if e.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, C> {
        &self.terms
    }

    pub fn coeff(&self, k: i64) -> C {
        self.terms.get(&k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest `∂` exponent.
    pub fn lo(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest `∂` exponent.
    pub fn hi(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Leading coefficient (of the highest power).
    pub fn leading(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    /// Degree in `∂` after clearing negative powers on the left:
    /// `hi − min(lo, 0)`.
    pub fn ordinary_degree(&self) -> Option<i64> {
        Some(self.hi()? - self.lo()?.min(0))
    }

    pub fn max_coeff_degree(&self) -> usize {
        self.terms.values().map(C::degree).max().unwrap_or(0)
    }

    /// `c · self`.
    pub fn scale_left(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, p)| (k, c.mul(p))))
    }

    /// `∂^k · self`.
    pub fn mul_d_left(&self, k: i64) -> Self {
        SkewLaurent { terms: self.terms.iter().map(|(&j, p)| (j + k, p.shift(k))).collect() }
    }

    /// `self · ∂^k`.
    pub fn mul_d_right(&self, k: i64) -> Self {
        SkewLaurent { terms: self.terms.iter().map(|(&j, p)| (j + k, p.clone())).collect() }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<D: SkewCoeff>(&self, f: impl Fn(&C) -> D) -> SkewLaurent<D> {
        SkewLaurent::from_terms(self.terms.iter().map(|(&k, p)| (k, f(p))))
    }
}

impl<C: SkewCoeff> Add<&SkewLaurent<C>> for &SkewLaurent<C> {
    type Output = SkewLaurent<C>;
    fn add(self, rhs: &SkewLaurent<C>) -> SkewLaurent<C> {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c);
        }
        out
    }
}

impl<C: SkewCoeff> Neg for &SkewLaurent<C> {
    type Output = SkewLaurent<C>;
    fn neg(self) -> SkewLaurent<C> {
        SkewLaurent { terms: self.terms.iter().map(|(&k, c)| (k, C::zero().sub(c))).collect() }
    }
}

impl<C: SkewCoeff> Sub<&SkewLaurent<C>> for &SkewLaurent<C> {
    type Output = SkewLaurent<C>;
    fn sub(self, rhs: &SkewLaurent<C>) -> SkewLaurent<C> {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, &C::zero().sub(c));
        }
        out
    }
}

impl<C: SkewCoeff> Mul<&SkewLaurent<C>> for &SkewLaurent<C> {
    type Output = SkewLaurent<C>;
    fn mul(self, rhs: &SkewLaurent<C>) -> SkewLaurent<C> {
        let mut out = SkewLaurent::zero();
        for (&k, p) in &self.terms {
            for (&l, q) in &rhs.terms {
                out.add_term(k + l, &p.mul(&q.shift(k)));
            }
        }
        out
    }
}

impl From<&SkewLaurentPolyH> for SkewLaurentRF {
    fn from(p: &SkewLaurentPolyH) -> Self {
        p.map_coeffs(|c| RatFunc::from_poly(c.clone()))
    }
}

impl SkewLaurentRF {
    /// The polynomial-coefficient version, if every coefficient is a
    /// polynomial.
    pub fn to_poly(&self) -> Option<SkewLaurentPolyH> {
        if !self.terms.values().all(RatFunc::is_polynomial) {
            return None;
        }
        Some(self.map_coeffs(|c| c.num().scale(&c.den().coeff(0).recip())))
    }
}

impl<C: SkewCoeff> fmt::Display for SkewLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&k, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let d = match k {
                0 => String::new(),
                1 => "d".to_string(),
                k => format!("d^{k}"),
            };
            let cs = c.to_string();
            if d.is_empty() {
                write!(f, "{cs}")?;
            } else if cs == "1" {
                f.write_str(&d)?;
            } else {
                write!(f, "({cs})*{d}")?;
            }
        }
        Ok(())
    }
}

impl<C: SkewCoeff> fmt::Debug for SkewLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Skew[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> SkewLaurentRF {
        SkewLaurent::monomial(RatFunc::from_poly(Poly::h()), 0)
    }

    #[test]
    fn commutation() {
        let d = SkewLaurentRF::d_pow(1);
        let dinv = SkewLaurentRF::d_pow(-1);
        let expected = SkewLaurent::monomial(RatFunc::from_poly(Poly::from_ints(&[1, 1])), 1);
        assert_eq!(&d * &h(), expected);
        let expected = SkewLaurent::monomial(RatFunc::from_poly(Poly::from_ints(&[-1, 1])), -1);
        assert_eq!(&dinv * &h(), expected);
        assert_eq!(&d * &dinv, SkewLaurentRF::one());
    }

    #[test]
    fn associativity_sample() {
        let a = SkewLaurentPolyH::from_terms([(1, Poly::from_ints(&[0, 1])), (-2, Poly::from_ints(&[3]))]);
        let b = SkewLaurentPolyH::from_terms([(0, Poly::from_ints(&[1, 0, 1])), (2, Poly::one())]);
        let c = SkewLaurentPolyH::from_terms([(-1, Poly::from_ints(&[2, 5]))]);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(a.ordinary_degree(), Some(3));
    }
}
