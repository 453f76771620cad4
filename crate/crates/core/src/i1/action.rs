//! The left action of `I₁` on `K[x]` and the right action on `P′ = K[∂]`.
//!
//! On `P′` the basis vector `v_k` stands for `∂^k` and the action is
//! `v_k·p(H)∂^i = p(k+1) v_{k+i}`, `v_k·∫^i a(H) = a(k−i+1) v_{k−i}`
//! (zero for `k < i`) and `v_k·e_ij = δ_ki v_j`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::I1Element;
use crate::numeric::{factorial, rat, Poly, Rational};
use crate::Error;

/// A polynomial in `x`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct KxPoly(pub Poly);

impl KxPoly {
    pub fn monomial(c: Rational, n: u32) -> Self {
        KxPoly(Poly::monomial(c, n as usize))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for KxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display_with("x"))
    }
}

impl fmt::Debug for KxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KxPoly({self})")
    }
}

/// Coordinates in `v_0, …, v_N`.
pub type PPrimeVector = Vec<Rational>;

/// `n! / m!` for `m ≤ n`.
fn falling(n: u64, m: u64) -> Rational {
    factorial(n) / factorial(m)
}

/// `a · x^n` as a sparse map degree → coefficient.
fn act_monomial(a: &I1Element, n: u64, out: &mut BTreeMap<u64, Rational>) {
    let ni = n as i64;
    let mut push = |deg: u64, c: Rational| {
        if !c.is_zero() {
            *out.entry(deg).or_insert_with(Rational::zero) += c;
        }
    };
    for (&i, p) in &a.dpart {
        let i = u64::from(i);
        if i <= n {
            push(n - i, falling(n, n - i) * p.eval_int(ni - i as i64 + 1));
        }
    }
    push(n, a.zpart.eval_int(ni + 1));
    for (&i, p) in &a.ipart {
        let i = u64::from(i);
        push(n + i, p.eval_int(ni + 1) / falling(n + i, n));
    }
    for (&(i, j), c) in &a.fpart {
        if u64::from(j) == n {
            push(u64::from(i), c * factorial(n) / factorial(u64::from(i)));
        }
    }
}

/// The left action `a · p` on `K[x]`.
pub fn act_kx(a: &I1Element, p: &KxPoly) -> KxPoly {
    let mut out = BTreeMap::new();
    for (n, c) in p.0.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut part = BTreeMap::new();
        act_monomial(a, n as u64, &mut part);
        for (deg, v) in part {
            *out.entry(deg).or_insert_with(Rational::zero) += v * c;
        }
    }
    let top = out.keys().next_back().map_or(0, |&d| d as usize + 1);
    let mut coeffs = vec![Rational::zero(); top];
    for (deg, v) in out {
        coeffs[deg as usize] = v;
    }
    KxPoly(Poly::from_coeffs(coeffs))
}

/// `v_k · a` as a sparse map index → coefficient.
pub fn pprime_image(a: &I1Element, k: u32) -> BTreeMap<u32, Rational> {
    let mut out: BTreeMap<u32, Rational> = BTreeMap::new();
    let mut push = |idx: u32, c: Rational| {
        if !c.is_zero() {
            let e = out.entry(idx).or_insert_with(Rational::zero);
            *e += c;
        }
    };
    let kk = i64::from(k);
    for (&i, p) in &a.dpart {
        push(k + i, p.eval_int(kk + 1));
    }
    push(k, a.zpart.eval_int(kk + 1));
    for (&i, p) in &a.ipart {
        if i <= k {
            push(k - i, p.eval_int(kk - i64::from(i) + 1));
        }
    }
    for (&(i, j), c) in &a.fpart {
        if i == k {
            push(j, c.clone());
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Matrix of `·a` from `span(v_0..v_{rows-1})` into `span(v_0..v_{cols-1})`,
/// with `M[k][j]` the coefficient of `v_j` in `v_k·a`. Fails if some image
/// leaves the column range.
pub fn pprime_matrix(a: &I1Element, rows: usize, cols: usize) -> Result<Vec<Vec<Rational>>, Error> {
    (0..rows)
        .map(|k| {
            let mut row = vec![Rational::zero(); cols];
            for (j, c) in pprime_image(a, k as u32) {
                let j = j as usize;
                if j >= cols {
                    return Err(Error::Precondition(format!(
                        "v_{k}·a has a component on v_{j}, outside the first {cols} basis vectors"
                    )));
                }
                row[j] = c;
            }
            Ok(row)
        })
        .collect()
}

/// The square matrix of `·a` on the invariant subspace `P′_{≤N}`.
///
/// Rejects elements with a `∂` part, and elements whose matrix units map
/// `P′_{≤N}` outside itself.
pub fn act_pprime_matrix(a: &I1Element, n: u32) -> Result<Vec<Vec<Rational>>, Error> {
    if !a.dpart.is_empty() {
        return Err(Error::Precondition("right action on P′_{≤N} requires no ∂ part".into()));
    }
    if let Some(&(i, j)) = a.fpart.keys().find(|&&(i, j)| i <= n && j > n) {
        return Err(Error::Precondition(format!("e[{i},{j}] does not preserve P′_{{≤{n}}}")));
    }
    let size = n as usize + 1;
    pprime_matrix(a, size, size)
}

/// `w · a` for a coordinate vector `w`.
pub fn pprime_apply(w: &[Rational], a: &I1Element) -> BTreeMap<u32, Rational> {
    let mut out: BTreeMap<u32, Rational> = BTreeMap::new();
    for (k, c) in w.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, v) in pprime_image(a, k as u32) {
            *out.entry(j).or_insert_with(Rational::zero) += v * c;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

impl KxPoly {
    /// `x^n` with coefficient 1.
    pub fn x_pow(n: u32) -> Self {
        Self::monomial(rat(1, 1), n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn diag(vals: &[i64]) -> Vec<Vec<Rational>> {
        (0..vals.len())
            .map(|i| (0..vals.len()).map(|j| if i == j { rat(vals[i], 1) } else { rat(0, 1) }).collect())
            .collect()
    }

    #[test]
    fn kx_examples() {
        assert_eq!(act_kx(&I1Element::h(), &KxPoly::x_pow(3)), KxPoly::monomial(rat(4, 1), 3));
        assert_eq!(act_kx(&I1Element::e(0, 0), &KxPoly::x_pow(0)), KxPoly::x_pow(0));
        assert!(act_kx(&I1Element::e(0, 0), &KxPoly::x_pow(1)).is_zero());
        assert_eq!(act_kx(&I1Element::e(2, 1), &KxPoly::x_pow(1)), KxPoly::monomial(rat(1, 2), 2));
        assert_eq!(act_kx(&I1Element::d(), &KxPoly::x_pow(3)), KxPoly::monomial(rat(3, 1), 2));
        assert_eq!(act_kx(&I1Element::int(), &KxPoly::x_pow(3)), KxPoly::monomial(rat(1, 4), 4));
        assert_eq!(act_kx(&I1Element::x(), &KxPoly::x_pow(3)), KxPoly::x_pow(4));
    }

    #[test]
    fn pprime_examples() {
        assert_eq!(act_pprime_matrix(&I1Element::h(), 2).unwrap(), diag(&[1, 2, 3]));
        let m = act_pprime_matrix(&I1Element::int(), 1).unwrap();
        assert_eq!(m, vec![vec![rat(0, 1), rat(0, 1)], vec![rat(1, 1), rat(0, 1)]]);
        assert_eq!(act_pprime_matrix(&I1Element::e(0, 0), 1).unwrap(), diag(&[1, 0]));
        assert!(act_pprime_matrix(&I1Element::d(), 3).is_err());
        assert!(act_pprime_matrix(&I1Element::e(0, 2), 1).is_err());
    }

    #[test]
    fn pprime_is_a_right_action() {
        let a = &I1Element::d_term(Poly::from_ints(&[1, 2]), 2) + &I1Element::e(1, 3);
        let b = &I1Element::int_term(1, Poly::from_ints(&[-3, 1])) + &I1Element::h();
        let ab = &a * &b;
        for k in 0..8 {
            let mut v = vec![rat(0, 1); k + 1];
            v[k] = rat(1, 1);
            let step = pprime_apply(&v, &a);
            let top = step.keys().next_back().map_or(0, |&j| j as usize + 1);
            let mut w = vec![rat(0, 1); top];
            for (j, c) in step {
                w[j as usize] = c;
            }
            assert_eq!(pprime_apply(&w, &b), pprime_apply(&v, &ab));
        }
    }
}
