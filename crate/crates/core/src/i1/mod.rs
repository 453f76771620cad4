//! The algebra `I₁` of polynomial integro-differential operators.
//!
//! Every element has a unique canonical form
//!
//! ```text
//! Σ_{i≥1} a_{-i}(H) ∂^i  +  a_0(H)  +  Σ_{i≥1} ∫^i a_i(H)  +  Σ λ_ij e_ij
//! ```
//!
//! where `H = ∂x` and `e_ij = ∫^i ∂^j − ∫^{i+1} ∂^{j+1}` are matrix units
//! spanning the ideal `F`. [`I1Element`] stores exactly these four parts,
//! so structural equality is equality in `I₁`.

mod action;
mod expr;
mod mul;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::numeric::{Poly, Rational};
use crate::Error;

pub use action::{act_kx, act_pprime_matrix, pprime_apply, pprime_image, pprime_matrix, KxPoly, PPrimeVector};
pub use expr::{normalize, Expr};

/// Default bound on matrix-unit indices produced by products.
pub const DEFAULT_FINDEX_GUARD: u32 = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct I1Element {
    /// `i ↦ a_{-i}`, the left coefficient of `∂^i`.
    dpart: BTreeMap<u32, Poly>,
    zpart: Poly,
    /// `i ↦ a_i`, the right coefficient of `∫^i`.
    ipart: BTreeMap<u32, Poly>,
    fpart: BTreeMap<(u32, u32), Rational>,
}

impl I1Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::poly(Poly::one())
    }

    pub fn scalar(c: Rational) -> Self {
        Self::poly(Poly::constant(c))
    }

    /// A polynomial in `H`.
    pub fn poly(p: Poly) -> Self {
        I1Element { zpart: p, ..Self::default() }
    }

    pub fn h() -> Self {
        Self::poly(Poly::h())
    }

    /// `∂`.
    pub fn d() -> Self {
        Self::d_pow(1)
    }

    /// `∫`.
    pub fn int() -> Self {
        Self::int_pow(1)
    }

    /// `x = ∫H`.
    pub fn x() -> Self {
        Self::from_parts([], Poly::zero(), [(1, Poly::h())], [])
    }

    pub fn d_pow(k: u32) -> Self {
        if k == 0 {
            return Self::one();
        }
        Self::from_parts([(k, Poly::one())], Poly::zero(), [], [])
    }

    pub fn int_pow(k: u32) -> Self {
        if k == 0 {
            return Self::one();
        }
        Self::from_parts([], Poly::zero(), [(k, Poly::one())], [])
    }

    /// `p(H) ∂^k`.
    pub fn d_term(p: Poly, k: u32) -> Self {
        if k == 0 {
            return Self::poly(p);
        }
        Self::from_parts([(k, p)], Poly::zero(), [], [])
    }

    /// `∫^k a(H)`.
    pub fn int_term(k: u32, a: Poly) -> Self {
        if k == 0 {
            return Self::poly(a);
        }
        Self::from_parts([], Poly::zero(), [(k, a)], [])
    }

    /// The matrix unit `e_ij`.
    pub fn e(i: u32, j: u32) -> Self {
        Self::from_parts([], Poly::zero(), [], [((i, j), Rational::one())])
    }

    /// Builds an element from its canonical parts, dropping zero entries
    /// and summing repeated keys.
    pub fn from_parts(
        dpart: impl IntoIterator<Item = (u32, Poly)>,
        zpart: Poly,
        ipart: impl IntoIterator<Item = (u32, Poly)>,
        fpart: impl IntoIterator<Item = ((u32, u32), Rational)>,
    ) -> Self {
        let mut out = I1Element { zpart, ..Self::default() };
        for (k, p) in dpart {
            assert!(k >= 1, "dpart powers start at 1");
            add_poly_entry(&mut out.dpart, k, &p);
        }
        for (k, p) in ipart {
            assert!(k >= 1, "ipart powers start at 1");
            add_poly_entry(&mut out.ipart, k, &p);
        }
        for (ij, c) in fpart {
            add_scalar_entry(&mut out.fpart, ij, &c);
        }
        out
    }

    pub fn dpart(&self) -> &BTreeMap<u32, Poly> {
        &self.dpart
    }

    pub fn zpart(&self) -> &Poly {
        &self.zpart
    }

    pub fn ipart(&self) -> &BTreeMap<u32, Poly> {
        &self.ipart
    }

    pub fn fpart(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.fpart
    }

    pub fn is_zero(&self) -> bool {
        self.dpart.is_empty() && self.zpart.is_zero() && self.ipart.is_empty() && self.fpart.is_empty()
    }

    /// Membership in the ideal `F = ⊕ K e_ij`.
    pub fn is_in_f(&self) -> bool {
        self.dpart.is_empty() && self.zpart.is_zero() && self.ipart.is_empty()
    }

    /// The element with its `F` part removed.
    pub fn without_f(&self) -> Self {
        I1Element { fpart: BTreeMap::new(), ..self.clone() }
    }

    /// The `F` part alone.
    pub fn f_only(&self) -> Self {
        I1Element { fpart: self.fpart.clone(), ..Self::default() }
    }

    pub fn max_d_power(&self) -> Option<u32> {
        self.dpart.keys().next_back().copied()
    }

    pub fn max_int_power(&self) -> Option<u32> {
        self.ipart.keys().next_back().copied()
    }

    /// Largest row index in the `F` part.
    pub fn max_f_row(&self) -> Option<u32> {
        self.fpart.keys().map(|&(i, _)| i).max()
    }

    /// Largest column index in the `F` part.
    pub fn max_f_col(&self) -> Option<u32> {
        self.fpart.keys().map(|&(_, j)| j).max()
    }

    /// The size `s`: largest index of any matrix unit present, or −1.
    pub fn f_size(&self) -> i64 {
        self.fpart.keys().map(|&(i, j)| i64::from(i.max(j))).max().unwrap_or(-1)
    }

    /// Largest `H` degree among the polynomial coefficients.
    pub fn max_h_degree(&self) -> usize {
        self.dpart
            .values()
            .chain(self.ipart.values())
            .chain(std::iter::once(&self.zpart))
            .filter_map(Poly::degree)
            .max()
            .unwrap_or(0)
    }

    /// A bound `B` covering `∂` and `∫` powers, matrix-unit indices and
    /// `H` degrees. A nonzero element moves some `x^n` with `n ≤ 2B + 1`.
    pub fn complexity(&self) -> u32 {
        let h = u32::try_from(self.max_h_degree()).unwrap_or(u32::MAX);
        [
            self.max_d_power().unwrap_or(0),
            self.max_int_power().unwrap_or(0),
            self.max_f_row().unwrap_or(0),
            self.max_f_col().unwrap_or(0),
            h,
        ]
        .into_iter()
        .max()
        .unwrap()
    }

    /// Number of stored nonzero coefficients (polynomial terms counted
    /// individually).
    pub fn term_count(&self) -> usize {
        self.dpart.values().chain(self.ipart.values()).map(Poly::term_count).sum::<usize>()
            + self.zpart.term_count()
            + self.fpart.len()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        I1Element {
            dpart: self.dpart.iter().map(|(&k, p)| (k, p.scale(c))).collect(),
            zpart: self.zpart.scale(c),
            ipart: self.ipart.iter().map(|(&k, p)| (k, p.scale(c))).collect(),
            fpart: self.fpart.iter().map(|(&ij, v)| (ij, v * c)).collect(),
        }
    }

    /// The involution `∂ ↔ ∫`, `H ↦ H`, `e_ij ↦ e_ji`.
    pub fn star(&self) -> Self {
        I1Element {
            dpart: self.ipart.clone(),
            zpart: self.zpart.clone(),
            ipart: self.dpart.clone(),
            fpart: self.fpart.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    /// Product with the matrix-unit index guard applied.
    pub fn checked_mul(&self, rhs: &Self, findex_guard: u32) -> Result<Self, Error> {
        mul::multiply(self, rhs, findex_guard)
    }

    /// `self^n`.
    pub fn pow(&self, n: u32, findex_guard: u32) -> Result<Self, Error> {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.checked_mul(&base, findex_guard)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.checked_mul(&base, findex_guard)?;
            }
        }
        Ok(result)
    }
}

fn add_poly_entry(map: &mut BTreeMap<u32, Poly>, k: u32, p: &Poly) {
    if p.is_zero() {
        return;
    }
    let entry = map.entry(k).or_default();
    *entry += p;
    if entry.is_zero() {
        map.remove(&k);
    }
}

fn add_scalar_entry(map: &mut BTreeMap<(u32, u32), Rational>, ij: (u32, u32), c: &Rational) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(ij).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(&ij);
    }
}

impl Add<&I1Element> for &I1Element {
    type Output = I1Element;
    fn add(self, rhs: &I1Element) -> I1Element {
        let mut out = self.clone();
        for (&k, p) in &rhs.dpart {
            add_poly_entry(&mut out.dpart, k, p);
        }
        out.zpart += &rhs.zpart;
        for (&k, p) in &rhs.ipart {
            add_poly_entry(&mut out.ipart, k, p);
        }
        for (&ij, c) in &rhs.fpart {
            add_scalar_entry(&mut out.fpart, ij, c);
        }
        out
    }
}

impl Neg for &I1Element {
    type Output = I1Element;
    fn neg(self) -> I1Element {
        self.scale(&-Rational::one())
    }
}

impl Sub<&I1Element> for &I1Element {
    type Output = I1Element;
    fn sub(self, rhs: &I1Element) -> I1Element {
        self + &(-rhs)
    }
}

/// Product with the default index guard. Panics if the guard is exceeded;
/// use [`I1Element::checked_mul`] to handle that case.
impl Mul<&I1Element> for &I1Element {
    type Output = I1Element;
    fn mul(self, rhs: &I1Element) -> I1Element {
        self.checked_mul(rhs, DEFAULT_FINDEX_GUARD)
            .unwrap_or_else(|e| panic!("I1 product failed: {e}"))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<I1Element> for I1Element {
            type Output = I1Element;
            fn $m(self, rhs: I1Element) -> I1Element {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for I1Element {
    type Output = I1Element;
    fn neg(self) -> I1Element {
        -&self
    }
}

/// Prints `p(H)` as a factor: bare when it is a single term.
fn poly_factor(p: &Poly) -> String {
    if p.term_count() == 1 {
        p.to_string()
    } else {
        format!("({p})")
    }
}

/// Splits a leading minus sign off a signed term.
fn push_term(out: &mut String, term: String) {
    let (neg, body) = match term.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, term),
    };
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    out.push_str(&body);
}

fn power(base: &str, k: u32) -> String {
    if k == 1 {
        base.to_string()
    } else {
        format!("{base}^{k}")
    }
}

/// Canonical text form, readable back by the expression parser.
impl fmt::Display for I1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (&k, p) in self.dpart.iter().rev() {
            let d = power("d", k);
            let term = if p.is_constant() {
                scalar_times(&p.coeff(0), &d)
            } else if p.term_count() == 1 {
                format!("{p}*{d}")
            } else {
                format!("({p})*{d}")
            };
            push_term(&mut out, term);
        }
        for (k, c) in self.zpart.coeffs().iter().enumerate().rev() {
            if !c.is_zero() {
                push_term(&mut out, Poly::monomial(c.clone(), k).to_string());
            }
        }
        for (&k, p) in &self.ipart {
            let i = power("int", k);
            let term = if p.is_constant() {
                scalar_times(&p.coeff(0), &i)
            } else if p.term_count() == 1 && p.leading().is_negative() {
                format!("-{i}*{}", poly_factor(&-p))
            } else {
                format!("{i}*{}", poly_factor(p))
            };
            push_term(&mut out, term);
        }
        for (&(i, j), c) in &self.fpart {
            push_term(&mut out, scalar_times(c, &format!("e[{i},{j}]")));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

fn scalar_times(c: &Rational, atom: &str) -> String {
    if c.is_one() {
        atom.to_string()
    } else if (-c).is_one() {
        format!("-{atom}")
    } else {
        format!("{c}*{atom}")
    }
}

impl fmt::Debug for I1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I1[{self}]")
    }
}
