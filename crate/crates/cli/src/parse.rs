//! Recursive-descent parser for `I₁` expressions.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := "-" factor | atom ("^" nat)?
//! atom   := "d" | "int" | "x" | "H" | "e[" nat "," nat "]" | rational | "(" expr ")"
//! ```
//!
//! `∂` and `∫` are accepted for `d` and `int`. A minus sign directly in front
//! of a literal without an exponent is folded into the literal, so printed
//! negative scalars read back as scalars.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use oreq::i1::Expr;
use oreq::numeric::{Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    D,
    Int,
    X,
    H,
    E,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number {n}"),
        Tok::End => "end of input".into(),
        other => format!("{other:?}"),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(at, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = at;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            out.push((Tok::Num(text[at..end].parse().expect("ascii digits")), at));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut end = at;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_alphanumeric() {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            let tok = match &text[at..end] {
                "d" => Tok::D,
                "int" => Tok::Int,
                "x" => Tok::X,
                "H" => Tok::H,
                "e" => Tok::E,
                word => return Err(ParseError { offset: at, message: format!("unknown identifier '{word}'") }),
            };
            out.push((tok, at));
            continue;
        }
        let tok = match c {
            '∂' => Tok::D,
            '∫' => Tok::Int,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            other => return Err(ParseError { offset: at, message: format!("unexpected character '{other}'") }),
        };
        out.push((tok, at));
        chars.next();
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.offset(), message: message.into() })
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            self.fail(format!("expected {}, found {}", describe(&want), describe(self.peek())))
        }
    }

    fn nat(&mut self) -> Result<u32, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => match n.to_u32() {
                Some(v) => {
                    self.bump();
                    Ok(v)
                }
                None => self.fail(format!("{n} is too large")),
            },
            other => self.fail(format!("expected a natural number, found {}", describe(&other))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Expr::add(acc, self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = Expr::sub(acc, self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = Expr::mul(acc, self.factor()?);
        }
        Ok(acc)
    }

    /// True when the tokens ahead form a literal not followed by `^`.
    fn bare_literal_ahead(&self) -> bool {
        if !matches!(self.peek_at(1), Tok::Num(_)) {
            return false;
        }
        let after = if *self.peek_at(2) == Tok::Slash { 4 } else { 2 };
        *self.peek_at(after) != Tok::Caret
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            if self.bare_literal_ahead() {
                self.bump();
                let Expr::Scalar(c) = self.atom()? else { unreachable!("literal ahead") };
                return Ok(Expr::Scalar(-c));
            }
            self.bump();
            return Ok(Expr::neg(self.factor()?));
        }
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            return Ok(Expr::pow(base, self.nat()?));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.bump() {
            Tok::D => Ok(Expr::D),
            Tok::Int => Ok(Expr::Int),
            Tok::X => Ok(Expr::X),
            Tok::H => Ok(Expr::H),
            Tok::E => {
                self.expect(Tok::LBracket)?;
                let i = self.nat()?;
                self.expect(Tok::Comma)?;
                let j = self.nat()?;
                self.expect(Tok::RBracket)?;
                Ok(Expr::E(i, j))
            }
            Tok::Num(n) => {
                if *self.peek() != Tok::Slash {
                    return Ok(Expr::Scalar(Rational::from_integer(n)));
                }
                self.bump();
                match self.peek().clone() {
                    Tok::Num(d) if !d.is_zero() => {
                        self.bump();
                        Ok(Expr::Scalar(Rational::new(n, d)))
                    }
                    Tok::Num(_) => self.fail("zero denominator"),
                    other => self.fail(format!("expected a positive denominator, found {}", describe(&other))),
                }
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            other => Err(ParseError { offset: at, message: format!("unexpected {}", describe(&other)) }),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(format!("unexpected {}", describe(p.peek())));
    }
    Ok(e)
}

/// Evaluates an expression built from `x` and scalars as a polynomial in `x`.
pub fn expr_to_x_poly(e: &Expr) -> Result<Poly, String> {
    Ok(match e {
        Expr::X => Poly::h(),
        Expr::Scalar(c) => Poly::constant(c.clone()),
        Expr::Add(a, b) => &expr_to_x_poly(a)? + &expr_to_x_poly(b)?,
        Expr::Sub(a, b) => &expr_to_x_poly(a)? - &expr_to_x_poly(b)?,
        Expr::Mul(a, b) => &expr_to_x_poly(a)? * &expr_to_x_poly(b)?,
        Expr::Neg(a) => -&expr_to_x_poly(a)?,
        Expr::Pow(a, n) => {
            let base = expr_to_x_poly(a)?;
            (0..*n).fold(Poly::one(), |acc, _| &acc * &base)
        }
        other => return Err(format!("'{other}' is not a polynomial in x")),
    })
}
