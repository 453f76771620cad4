//! Left fractions `s⁻¹ r` and the localization `ψ: I₁ → Q(A₁)`.

use std::fmt;

use super::euclid::{clear_left_denominators, lclm_gcrd};
use super::skew::{SkewLaurentPolyH, SkewLaurentRF};
use crate::i1::{I1Element, DEFAULT_FINDEX_GUARD};
use crate::numeric::Poly;
use crate::regularity::regularize;
use crate::Error;

/// Default bound on coefficient degrees in fraction arithmetic.
pub const DEFAULT_RFDEG_GUARD: usize = 128;

/// The element `den⁻¹ · num`, kept with `den` monic and free of negative
/// `∂` powers. Equality is Ore equivalence, see [`SkewFraction::equals`].
#[derive(Clone)]
pub struct SkewFraction {
    den: SkewLaurentRF,
    num: SkewLaurentRF,
}

fn check_degree(x: &SkewLaurentRF) -> Result<(), Error> {
    if x.max_coeff_degree() > DEFAULT_RFDEG_GUARD {
        return Err(Error::Budget(format!("coefficient degree exceeds {DEFAULT_RFDEG_GUARD}")));
    }
    Ok(())
}

impl SkewFraction {
    pub fn new(den: SkewLaurentRF, num: SkewLaurentRF) -> Result<Self, Error> {
        let lo = den.lo().ok_or(Error::ZeroDivision)?;
        let (den, num) = if lo < 0 { (den.mul_d_left(-lo), num.mul_d_left(-lo)) } else { (den, num) };
        let inv = den.leading().unwrap().recip();
        let den = den.scale_left(&inv);
        let num = num.scale_left(&inv);
        check_degree(&den)?;
        check_degree(&num)?;
        Ok(SkewFraction { den, num })
    }

    /// `1⁻¹ · num`.
    pub fn from_element(num: SkewLaurentRF) -> Self {
        SkewFraction { den: SkewLaurentRF::one(), num }
    }

    pub fn zero() -> Self {
        Self::from_element(SkewLaurentRF::zero())
    }

    pub fn one() -> Self {
        Self::from_element(SkewLaurentRF::one())
    }

    pub fn den(&self) -> &SkewLaurentRF {
        &self.den
    }

    pub fn num(&self) -> &SkewLaurentRF {
        &self.num
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Left multipliers `u1, u2` with `u1·s1 = u2·s2`.
    fn common_denominator(&self, other: &Self) -> Result<(SkewLaurentRF, SkewLaurentRF, SkewLaurentRF), Error> {
        let res = lclm_gcrd(&self.den, &other.den, DEFAULT_RFDEG_GUARD)?;
        Ok((res.lclm, res.u, res.v))
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        let (l, u1, u2) = self.common_denominator(other)?;
        SkewFraction::new(l, &(&u1 * &self.num) + &(&u2 * &other.num))
    }

    pub fn neg(&self) -> Self {
        SkewFraction { den: self.den.clone(), num: -&self.num }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    /// `s1⁻¹ r1 · s2⁻¹ r2 = (t s1)⁻¹ (w r2)` where `t r1 = w s2`.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let res = lclm_gcrd(&self.num, &other.den, DEFAULT_RFDEG_GUARD)?;
        SkewFraction::new(&res.u * &self.den, &res.v * &other.num)
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        SkewFraction::new(self.num.clone(), self.den.clone())
    }

    /// Ore equivalence: `u1 r1 = u2 r2` where `u1 s1 = u2 s2 = lclm(s1, s2)`.
    pub fn equals(&self, other: &Self) -> Result<bool, Error> {
        let (_, u1, u2) = self.common_denominator(other)?;
        Ok(&u1 * &self.num == &u2 * &other.num)
    }
}

impl fmt::Display for SkewFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^-1 * ({})", self.den, self.num)
    }
}

impl fmt::Debug for SkewFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewFraction[{self}]")
    }
}

/// The image in `I₁/F ≅ A_{1,∂}`: `∫^i a(H) ↦ a(H − i) ∂^{-i}`, `F ↦ 0`.
pub fn project_a1d(a: &I1Element) -> SkewLaurentPolyH {
    let d = a.dpart().iter().map(|(&k, p)| (i64::from(k), p.clone()));
    let z = std::iter::once((0, a.zpart().clone()));
    let i = a.ipart().iter().map(|(&k, p)| {
        let k = i64::from(k);
        (-k, p.shift(-k))
    });
    SkewLaurentPolyH::from_terms(d.chain(z).chain(i))
}

/// The section of [`project_a1d`] with zero `F` part:
/// `p(H) ∂^{-m} ↦ ∫^m p(H + m)`.
pub fn lift_to_i1(x: &SkewLaurentPolyH) -> I1Element {
    let mut dpart = Vec::new();
    let mut zpart = Poly::zero();
    let mut ipart = Vec::new();
    for (&k, p) in x.terms() {
        match k {
            k if k > 0 => dpart.push((k as u32, p.clone())),
            0 => zpart = p.clone(),
            k => ipart.push(((-k) as u32, p.shift(-k))),
        }
    }
    I1Element::from_parts(dpart, zpart, ipart, [])
}

/// `ψ(a)`, with denominator 1.
pub fn localize_i1(a: &I1Element) -> SkewFraction {
    SkewFraction::from_element(SkewLaurentRF::from(&project_a1d(a)))
}

/// Writes `f = ψ(c)⁻¹ ψ(r)` with `c` left regular in `I₁`.
pub fn reexpress_with_regular_denominator(f: &SkewFraction) -> Result<(I1Element, I1Element), Error> {
    let cleared = clear_left_denominators(&[f.den.clone(), f.num.clone()]);
    let c0 = lift_to_i1(&cleared[0]);
    let r0 = lift_to_i1(&cleared[1]);
    let i = regularize(&c0)?;
    let di = I1Element::d_pow(i);
    Ok((di.checked_mul(&c0, DEFAULT_FINDEX_GUARD)?, di.checked_mul(&r0, DEFAULT_FINDEX_GUARD)?))
}
