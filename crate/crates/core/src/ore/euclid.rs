//! Right division, greatest common right divisors and least common left
//! multiples in `K(H)[∂^{±1}; σ]`.


use super::skew::{SkewLaurentPolyH, SkewLaurentRF};
use crate::numeric::{Poly, RatFunc};
use crate::Error;

/// `a = q·b + rem` in the Laurent ring. `b` is first made ordinary with
/// lowest power `∂^0` by a right factor, and `a` by the same right factor and
/// then a left unit `∂^k`, so `rem = 0` exactly when `b` right-divides `a`.
pub fn divmod_right(a: &SkewLaurentRF, b: &SkewLaurentRF) -> Result<(SkewLaurentRF, SkewLaurentRF), Error> {
    let Some(lo_b) = b.lo() else {
        return Err(Error::ZeroDivision);
    };
    let bb = b.mul_d_right(-lo_b);
    let shifted = a.mul_d_right(-lo_b);
    let k = shifted.lo().map_or(0, |lo| (-lo).max(0));
    let mut rem = shifted.mul_d_left(k);
    let m = bb.hi().unwrap();
    let lead_b = bb.leading().unwrap().clone();
    let mut quot = SkewLaurentRF::zero();
    while let Some(n) = rem.hi() {
        if n < m {
            break;
        }
        let c = rem.leading().unwrap();
        let t = c / &lead_b.shift(n - m);
        let term = SkewLaurentRF::monomial(t, n - m);
        rem = &rem - &(&term * &bb);
        quot = &quot + &term;
    }
    Ok((quot.mul_d_left(-k), rem.mul_d_left(-k).mul_d_right(lo_b)))
}

/// Least common left multiple `lclm = u·a = v·b` and greatest common
/// right divisor, both monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LclmGcrd {
    pub lclm: SkewLaurentRF,
    pub gcrd: SkewLaurentRF,
    pub u: SkewLaurentRF,
    pub v: SkewLaurentRF,
}

/// Multiplies every element on the left by one common polynomial so all
/// coefficients become polynomials.
pub fn clear_left_denominators(elems: &[SkewLaurentRF]) -> Vec<SkewLaurentPolyH> {
    let q = elems
        .iter()
        .flat_map(|e| e.terms().values())
        .fold(Poly::one(), |acc, c| acc.lcm(c.den()));
    let q = RatFunc::from_poly(q);
    elems.iter().map(|e| e.scale_left(&q).to_poly().expect("denominators cleared")).collect()
}

struct Row {
    r: SkewLaurentRF,
    s: SkewLaurentRF,
    t: SkewLaurentRF,
}

impl Row {
    /// `self − τ·other` on all three columns.
    fn minus(&self, tau: &SkewLaurentRF, other: &Row) -> Row {
        Row { r: &self.r - &(tau * &other.r), s: &self.s - &(tau * &other.s), t: &self.t - &(tau * &other.t) }
    }

    /// Scales the row so `r` is monic.
    fn monic(self) -> Row {
        let inv = self.r.leading().expect("nonzero remainder").recip();
        Row { r: self.r.scale_left(&inv), s: self.s.scale_left(&inv), t: self.t.scale_left(&inv) }
    }
}

/// Right remainder of `prev` by monic `cur`, carrying the cofactor columns.
fn reduce(prev: &Row, cur: &Row) -> Row {
    let m = cur.r.hi().unwrap();
    let mut acc = Row { r: prev.r.clone(), s: prev.s.clone(), t: prev.t.clone() };
    while let Some(n) = acc.r.hi() {
        if n < m {
            break;
        }
        let tau = SkewLaurentRF::monomial(acc.r.leading().unwrap().clone(), n - m);
        acc = acc.minus(&tau, cur);
    }
    acc
}

fn monic_left(x: &SkewLaurentRF) -> (RatFunc, SkewLaurentRF) {
    let inv = x.leading().expect("nonzero").recip();
    (inv.clone(), x.scale_left(&inv))
}

/// Extended right Euclidean algorithm over `K(H)` with monic remainders,
/// after making both inputs ordinary by left powers of `∂`. Keeping the
/// remainders monic keeps their coefficients reduced, which avoids the
/// content growth of fraction-free pseudo-division.
pub fn lclm_gcrd(a: &SkewLaurentRF, b: &SkewLaurentRF, rfdeg: usize) -> Result<LclmGcrd, Error> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroDivision);
    }
    let ordinary = |x: &SkewLaurentRF| SkewLaurentRF::d_pow(x.lo().map_or(0, |lo| (-lo).max(0)));
    let (la, lb) = (ordinary(a), ordinary(b));
    let zero = SkewLaurentRF::zero;
    let mut prev = Row { r: &la * a, s: la.clone(), t: zero() }.monic();
    let mut cur = Row { r: &lb * b, s: zero(), t: lb.clone() }.monic();
    loop {
        let next = reduce(&prev, &cur);
        if next.r.is_zero() {
            prev = cur;
            cur = next;
            break;
        }
        let next = next.monic();
        if next.r.max_coeff_degree() > rfdeg || next.s.max_coeff_degree() > rfdeg || next.t.max_coeff_degree() > rfdeg {
            return Err(Error::Budget(format!("coefficient degree exceeds {rfdeg} in lclm/gcrd")));
        }
        prev = cur;
        cur = next;
    }
    // cur.s·a + cur.t·b = 0 with cur.s ≠ 0 gives the least common multiple.
    let u = cur.s;
    let v = -&cur.t;
    let (inv, lclm) = monic_left(&(&u * a));
    let u = u.scale_left(&inv);
    let v = v.scale_left(&inv);
    let gcrd = prev.r;
    debug_assert_eq!(&v * b, lclm);
    Ok(LclmGcrd { lclm, gcrd, u, v })
}
