//! Structured multiplication on canonical forms.
//!
//! The non-`F` part is rewritten as left-coefficient terms `p(H) W_k` with
//! `W_k = ∂^k` for `k ≥ 0` and `W_k = ∫^{-k}` for `k < 0`, using
//! `∫^m a(H) = a(H − m) ∫^m`. Then
//!
//! * `W_k q(H) = q(H + k) W_k`,
//! * `W_k W_l = W_{k+l}` unless `k < 0 < l`, where
//!   `∫^m ∂^l = W_{l−m} − Σ_{t<min(m,l)} e_{t+max(m−l,0), t+max(l−m,0)}`,
//! * `p(H) e_ij = p(i + 1) e_ij` and `e_ij p(H) = p(j + 1) e_ij`,
//! * `∂^k e_ij = e_{i−k,j}`, `∫^m e_ij = e_{i+m,j}`,
//!   `e_ij ∂^k = e_{i,j+k}`, `e_ij ∫^m = e_{i,j−m}`, with negative
//!   indices giving zero,
//! * `e_ij e_kl = δ_jk e_il`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::I1Element;
use crate::numeric::{Poly, Rational};
use crate::Error;

type Terms = BTreeMap<i64, Poly>;
type FMap = BTreeMap<(u32, u32), Rational>;

fn left_terms(a: &I1Element) -> Vec<(i64, Poly)> {
    let mut out = Vec::with_capacity(a.dpart.len() + a.ipart.len() + 1);
    for (&k, p) in &a.dpart {
        out.push((i64::from(k), p.clone()));
    }
    if !a.zpart.is_zero() {
        out.push((0, a.zpart.clone()));
    }
    for (&m, p) in &a.ipart {
        let m = i64::from(m);
        out.push((-m, p.shift(-m)));
    }
    out
}

fn add_term(terms: &mut Terms, k: i64, p: Poly) {
    if p.is_zero() {
        return;
    }
    let e = terms.entry(k).or_default();
    *e += &p;
    if e.is_zero() {
        terms.remove(&k);
    }
}

struct FAcc {
    map: FMap,
    guard: u32,
}

impl FAcc {
    fn add(&mut self, i: i64, j: i64, c: Rational) -> Result<(), Error> {
        if i < 0 || j < 0 || c.is_zero() {
            return Ok(());
        }
        let (i, j) = (i as u64, j as u64);
        if i > u64::from(self.guard) || j > u64::from(self.guard) {
            return Err(Error::Guard(format!(
                "matrix unit e[{i},{j}] exceeds index guard {}",
                self.guard
            )));
        }
        let key = (i as u32, j as u32);
        let e = self.map.entry(key).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.map.remove(&key);
        }
        Ok(())
    }
}

pub(super) fn multiply(a: &I1Element, b: &I1Element, guard: u32) -> Result<I1Element, Error> {
    let ta = left_terms(a);
    let tb = left_terms(b);
    let mut terms = Terms::new();
    let mut f = FAcc { map: FMap::new(), guard };

    for (k1, p1) in &ta {
        for (k2, p2) in &tb {
            let coeff = p1 * &p2.shift(*k1);
            if coeff.is_zero() {
                continue;
            }
            if *k1 < 0 && *k2 > 0 {
                let (m, l) = (-k1, *k2);
                add_term(&mut terms, l - m, coeff.clone());
                let (di, dj) = ((m - l).max(0), (l - m).max(0));
                for t in 0..m.min(l) {
                    let (i, j) = (t + di, t + dj);
                    f.add(i, j, -coeff.eval_int(i + 1))?;
                }
            } else {
                add_term(&mut terms, k1 + k2, coeff);
            }
        }
        // p1(H) W_k1 e_ij
        for (&(i, j), c) in &b.fpart {
            let row = i64::from(i) - k1;
            if row >= 0 {
                f.add(row, i64::from(j), p1.eval_int(row + 1) * c)?;
            }
        }
    }
    for (&(i, j), c) in &a.fpart {
        // e_ij p2(H) W_k2
        for (k2, p2) in &tb {
            let col = i64::from(j) + k2;
            f.add(i64::from(i), col, c * p2.eval_int(i64::from(j) + 1))?;
        }
        for (&(k, l), d) in &b.fpart {
            if j == k {
                f.add(i64::from(i), i64::from(l), c * d)?;
            }
        }
    }

    let mut out = I1Element { fpart: f.map, ..I1Element::default() };
    for (k, p) in terms {
        match k {
            k if k > 0 => {
                out.dpart.insert(k as u32, p);
            }
            0 => out.zpart = p,
            k => {
                let m = -k;
                out.ipart.insert(m as u32, p.shift(m));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{act_kx, KxPoly};
    use super::*;
    use crate::numeric::rat;
    use num_traits::One;

    fn e(i: u32, j: u32) -> I1Element {
        I1Element::e(i, j)
    }

    #[test]
    fn defining_relations() {
        let d = I1Element::d();
        let int = I1Element::int();
        let h = I1Element::h();
        let one = I1Element::one();
        assert_eq!(&d * &int, one);
        assert_eq!(&int * &d, &one - &e(0, 0));
        assert_eq!(&I1Element::x() * &d, I1Element::poly(Poly::from_ints(&[-1, 1])));
        assert_eq!(&d * &e(0, 0), I1Element::zero());
        // [H, ∫] = ∫, [H, ∂] = −∂
        assert_eq!(&(&h * &int) - &(&int * &h), int);
        assert_eq!(&(&h * &d) - &(&d * &h), -&d);
        let e00 = &one - &(&int * &d);
        assert_eq!(&h * &e00, e00);
        assert_eq!(&e00 * &h, e00);
    }

    #[test]
    fn matrix_unit_examples() {
        assert_eq!(&e(0, 1) * &e(0, 0), I1Element::zero());
        assert_eq!(&e(0, 0) * &e(0, 1), e(0, 1));
        let sum = &I1Element::d() + &I1Element::int();
        let expected = &(&I1Element::one() - &e(0, 0)) + &I1Element::int_pow(2);
        assert_eq!(&I1Element::int() * &sum, expected);
    }

    #[test]
    fn integral_derivative_powers_match_action() {
        // ∫^m ∂^l against the K[x] action for small m, l.
        for m in 0..5u32 {
            for l in 0..5u32 {
                let prod = &I1Element::int_pow(m) * &I1Element::d_pow(l);
                for n in 0..12u32 {
                    let xn = KxPoly::monomial(Rational::one(), n);
                    let direct = act_kx(&I1Element::int_pow(m), &act_kx(&I1Element::d_pow(l), &xn));
                    assert_eq!(act_kx(&prod, &xn), direct, "m={m} l={l} n={n}");
                }
            }
        }
    }

    #[test]
    fn commutation_rules_match_action() {
        let p = I1Element::poly(Poly::from_coeffs(vec![rat(2, 1), rat(-1, 3), rat(1, 1)]));
        let words = [
            I1Element::d(),
            I1Element::int(),
            I1Element::int_pow(2),
            I1Element::d_pow(3),
            e(1, 2),
            e(2, 0),
        ];
        for w in &words {
            for (l, r) in [(w, &p), (&p, w)] {
                let prod = l * r;
                for n in 0..10u32 {
                    let xn = KxPoly::monomial(Rational::one(), n);
                    assert_eq!(act_kx(&prod, &xn), act_kx(l, &act_kx(r, &xn)));
                }
            }
        }
    }

    #[test]
    fn guard_is_enforced() {
        let big = I1Element::int_pow(40);
        let res = big.checked_mul(&(&e(30, 0) + &I1Element::zero()), 64);
        assert!(matches!(res, Err(Error::Guard(_))));
        assert!(big.checked_mul(&e(20, 0), 64).is_ok());
    }
}
