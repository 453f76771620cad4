//! Dense univariate polynomials in `H` over the rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rat, Rational};

/// A polynomial `c_0 + c_1 H + ... + c_n H^n`.
///
/// The coefficient vector is trimmed, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero top coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `H`.
    pub fn h() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c * H^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients indexed by degree.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience constructor from small integers, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| rat(c, 1)).collect())
    }

    /// `prod (H - r)` over the given integer roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().fold(Poly::one(), |acc, &r| {
            &acc * &Poly::from_ints(&[-r, 1])
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn eval_int(&self, at: i64) -> Rational {
        self.eval(&rat(at, 1))
    }

    /// The substitution `p(H) -> p(H + k)`.
    pub fn shift(&self, k: i64) -> Poly {
        if k == 0 || self.is_constant() {
            return self.clone();
        }
        let (ints, content) = self.integer_form();
        let k = BigInt::from(k);
        // Horner in the shifted variable: acc <- acc * (H + k) + c.
        let mut acc: Vec<BigInt> = Vec::with_capacity(ints.len());
        for c in ints.into_iter().rev() {
            acc.push(BigInt::zero());
            for i in (0..acc.len() - 1).rev() {
                let ai = std::mem::take(&mut acc[i]);
                acc[i + 1] += &ai;
                acc[i] = ai * &k;
            }
            acc[0] += c;
        }
        Poly::from_integer_form(acc, &content)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (dd..=nd).rev() {
            let c = &rem[i] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &c * b;
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact division; panics if the remainder is nonzero. Runs over the
    /// integers: a primitive divisor that divides over the rationals also
    /// divides over the integers.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return Poly::zero();
        }
        let (ints, content) = self.integer_form();
        let prim = divisor.primitive_integer_coeffs();
        let unit = divisor.leading() / Rational::from_integer(prim.last().unwrap().clone());
        let q = super::intgcd::exact_quotient(&ints, &prim).expect("inexact polynomial division");
        Poly::from_integer_form(q, &(content / unit))
    }

    /// `self = content · Σ ints_i H^i` with integer `ints`.
    fn integer_form(&self) -> (Vec<BigInt>, Rational) {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        (ints, Rational::new(BigInt::one(), lcm))
    }

    fn from_integer_form(ints: Vec<BigInt>, content: &Rational) -> Poly {
        Poly::from_coeffs(ints.into_iter().map(|c| Rational::from_integer(c) * content).collect())
    }

    /// Least common multiple of the coefficient denominators and the gcd
    /// of the resulting integer coefficients.
    fn integer_content(&self) -> (BigInt, BigInt) {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let gcd = self.coeffs.iter().fold(BigInt::zero(), |acc, c| {
            let v = c.numer() * (&lcm / c.denom());
            acc.gcd(&v)
        });
        (lcm, gcd)
    }

    /// Integer coefficients of the primitive associate of `self`
    /// (positive leading coefficient).
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let (lcm, gcd) = self.integer_content();
        let sign = if self.leading().is_negative() { -BigInt::one() } else { BigInt::one() };
        self.coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()) / &gcd * &sign)
            .collect()
    }

    /// Monic greatest common divisor, computed modularly over the integers
    /// with a primitive remainder sequence as fallback.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (mut a, mut b) = (self.primitive_integer_coeffs(), other.primitive_integer_coeffs());
        if let Some(g) = super::intgcd::modular_gcd(&a, &b) {
            return Poly::from_coeffs(g.into_iter().map(Rational::from_integer).collect()).monic();
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = int_pseudo_rem(&a, &b);
            a = b;
            b = int_primitive(r);
        }
        Poly::from_coeffs(a.into_iter().map(Rational::from_integer).collect()).monic()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other);
        (self * &other.exact_div(&g)).monic()
    }

    /// Formats the polynomial with the given variable name.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if v.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    v.iter().map(|c| c / &g * &sign).collect()
}

/// Pseudo-remainder of integer polynomials: `lc(b)^k a = q b + r`.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let n = r.len() - 1;
        let lr = r[n].clone();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        let g = lr.gcd(lb);
        let mb = lb / &g;
        let mr = &lr / &g;
        for c in r.iter_mut() {
            *c *= &mb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[n - db + j] -= &mr * bj;
        }
        r.pop();
        r = int_primitive(r);
    }
    r
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("H"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let (a, ca) = self.integer_form();
        let (b, cb) = rhs.integer_form();
        let mut coeffs = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        Poly::from_integer_form(coeffs, &(ca * cb))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self = &*self - rhs;
    }
}
