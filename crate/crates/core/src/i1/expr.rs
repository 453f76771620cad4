//! Expression trees over the generators of `I₁` and their normalization.

use std::fmt;

use super::I1Element;
use crate::numeric::{Poly, Rational};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// `∂`
    D,
    /// `∫`
    Int,
    X,
    H,
    E(u32, u32),
    Scalar(Rational),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn add(a: Expr, b: Expr) -> Expr {
        Expr::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        Expr::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    pub fn neg(a: Expr) -> Expr {
        Expr::Neg(Box::new(a))
    }

    pub fn pow(a: Expr, n: u32) -> Expr {
        Expr::Pow(Box::new(a), n)
    }
}

/// Reduces an expression to canonical form. Products are subject to the
/// matrix-unit index guard.
pub fn normalize(expr: &Expr, findex_guard: u32) -> Result<I1Element, Error> {
    Ok(match expr {
        Expr::D => I1Element::d(),
        Expr::Int => I1Element::int(),
        Expr::X => I1Element::x(),
        Expr::H => I1Element::h(),
        Expr::E(i, j) => {
            if *i > findex_guard || *j > findex_guard {
                return Err(Error::Guard(format!("e[{i},{j}] exceeds index guard {findex_guard}")));
            }
            I1Element::e(*i, *j)
        }
        Expr::Scalar(c) => I1Element::poly(Poly::constant(c.clone())),
        Expr::Add(a, b) => &normalize(a, findex_guard)? + &normalize(b, findex_guard)?,
        Expr::Sub(a, b) => &normalize(a, findex_guard)? - &normalize(b, findex_guard)?,
        Expr::Mul(a, b) => normalize(a, findex_guard)?.checked_mul(&normalize(b, findex_guard)?, findex_guard)?,
        Expr::Neg(a) => -normalize(a, findex_guard)?,
        Expr::Pow(a, n) => normalize(a, findex_guard)?.pow(*n, findex_guard)?,
    })
}

/// Fully parenthesized, so the expression parser reads it back as the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::D => f.write_str("d"),
            Expr::Int => f.write_str("int"),
            Expr::X => f.write_str("x"),
            Expr::H => f.write_str("H"),
            Expr::E(i, j) => write!(f, "e[{i},{j}]"),
            Expr::Scalar(c) => write!(f, "({c})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a}*{b})"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Pow(a, n) => write!(f, "({a})^{n}"),
        }
    }
}
