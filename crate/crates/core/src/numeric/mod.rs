//! Exact scalars, polynomials and rational functions in `H`, and exact
//! linear algebra over the rationals.

mod intgcd;
mod linalg;
mod poly;
mod ratfunc;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use linalg::{nullspace, rank};
pub use poly::Poly;
pub use ratfunc::RatFunc;

use crate::Error;

/// Arbitrary precision rationals, always stored in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rational {
    Rational::from_integer((1..=n).fold(BigInt::one(), |acc, k| acc * k))
}

/// Search range above which natural-root candidates are enumerated by
/// divisor instead of by scanning.
const SCAN_LIMIT: u64 = 1 << 20;

/// All `i` in ℕ with `p(i + 1) = 0`.
///
/// Works on the integer-cleared polynomial `p(H + 1)`: every integer root
/// divides its lowest nonzero coefficient and lies below the Cauchy bound.
pub fn natural_roots(p: &Poly) -> Result<BTreeSet<u64>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.shift(1);
    let coeffs = q.primitive_integer_coeffs();
    let low = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots = BTreeSet::new();
    if low > 0 {
        roots.insert(0);
    }
    let coeffs = &coeffs[low..];
    if coeffs.len() == 1 {
        return Ok(roots);
    }
    let lead = coeffs.last().unwrap().abs();
    let max_ratio = coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| c.abs().div_ceil(&lead))
        .max()
        .unwrap_or_else(BigInt::zero);
    let c0 = coeffs[0].abs();
    let bound = (max_ratio + 1u32).min(c0.clone());
    let is_root = |i: &BigInt| {
        let mut acc = BigInt::zero();
        for c in coeffs.iter().rev() {
            acc = acc * i + c;
        }
        acc.is_zero()
    };
    match bound.to_u64().filter(|&b| b <= SCAN_LIMIT) {
        Some(b) => {
            for i in 1..=b {
                let bi = BigInt::from(i);
                if c0.is_multiple_of(&bi) && is_root(&bi) {
                    roots.insert(i);
                }
            }
        }
        None => {
            for d in divisors(&c0)? {
                if d <= bound && is_root(&d) {
                    let v = d.to_u64().ok_or_else(|| Error::Budget("natural root exceeds u64".into()))?;
                    roots.insert(v);
                }
            }
        }
    }
    Ok(roots)
}

/// Positive divisors of `n` by trial division up to `sqrt(n)`.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>, Error> {
    let limit = n.sqrt();
    if limit > BigInt::from(SCAN_LIMIT) * 1024 {
        return Err(Error::Budget("constant term too large to factor".into()));
    }
    let mut out = Vec::new();
    let mut i = BigInt::one();
    while i <= limit {
        if n.is_multiple_of(&i) {
            out.push(i.clone());
            out.push(n / &i);
        }
        i += 1;
    }
    Ok(out)
}
