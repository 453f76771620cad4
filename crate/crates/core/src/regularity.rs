//! Left and right regularity of elements of `I₁`.
//!
//! An element `a` is left regular iff right multiplication by `a` is
//! injective on `P′ = K[∂]`. Every element outside `F` with a `∂` part or a
//! nonzero constant-in-`∂` part factors as `a = ∂^m γ` with `γ = ∫^m a` in
//! `Γ` (no `∂` part, nonzero `a_0`). Since `·∂^m` maps `P′` onto
//! `span(v_m, v_{m+1}, …)` injectively,
//!
//! ```text
//! ker(·a) ≅ ker(·γ) ∩ span(v_m, v_{m+1}, …),
//! ```
//!
//! so `a` is left regular iff `m ≥ d(γ)`, the least `i` with
//! `ker(·γ) ∩ span(v_i, …) = 0`. The kernel of `·γ` lives in
//! `P′_{≤max(r, s)}` where `s` is the largest matrix-unit index of `γ` and
//! `r` the largest natural root `i > s` of `a_0(i + 1)`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::i1::{act_pprime_matrix, pprime_matrix, I1Element, PPrimeVector, DEFAULT_FINDEX_GUARD};
use crate::numeric::{natural_roots, nullspace, rank, Poly, Rational};
use crate::ore::{clear_left_denominators, lclm_gcrd, lift_to_i1, project_a1d, SkewLaurentRF, DEFAULT_RFDEG_GUARD};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Reason {
    InF,
    PureIntegral,
    DegreeShortfall,
    Regular,
}

/// `a = ∂^m γ` with `γ ∈ Γ` and the data determining `d(γ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaForm {
    pub m: u32,
    pub gamma: I1Element,
    /// The leading term `a_0` of `γ`.
    pub leading: Poly,
    /// Largest matrix-unit index of `γ`, or −1.
    pub size: i64,
    /// `{ i ∈ ℕ : a_0(i + 1) = 0 }`.
    pub roots: BTreeSet<u64>,
    /// Largest root exceeding `size`.
    pub r: Option<u64>,
    /// The regularity degree `d(γ)`.
    pub d: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    InF,
    PureIntegral,
    Gamma(GammaForm),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityVerdict {
    pub side: Side,
    pub regular: bool,
    pub reason: Reason,
    pub decomposition: Option<GammaForm>,
    /// For a non-regular verdict, a nonzero `w ∈ P′` with `w·a = 0`
    /// (with `a` replaced by `a*` on the right side).
    pub kernel_witness: Option<PPrimeVector>,
}

/// Membership in `Γ`: no `∂` part and nonzero `a_0`.
pub fn is_gamma(a: &I1Element) -> bool {
    a.dpart().is_empty() && !a.zpart().is_zero()
}

fn require_gamma(gamma: &I1Element) -> Result<(), Error> {
    if is_gamma(gamma) {
        Ok(())
    } else {
        Err(Error::Precondition("element is not in Γ (needs no ∂ part and nonzero a_0)".into()))
    }
}

/// `(roots, r, s)` for `γ ∈ Γ`.
fn root_data(gamma: &I1Element) -> Result<(BTreeSet<u64>, Option<u64>, i64), Error> {
    let s = gamma.f_size();
    let roots = natural_roots(gamma.zpart())?;
    let r = roots.iter().copied().filter(|&i| i as i64 > s).max();
    Ok((roots, r, s))
}

fn kernel_bound(r: Option<u64>, s: i64) -> u32 {
    let top = r.map_or(s, |r| s.max(r as i64));
    u32::try_from(top + 1).expect("kernel bound fits in u32")
}

fn transpose(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Left kernel of a matrix, i.e. the `w` with `w M = 0`.
pub(crate) fn left_kernel(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if m.is_empty() {
        return Vec::new();
    }
    nullspace(&transpose(m))
}

/// Basis of `ker(·γ)` on `P′`, computed on `P′_{≤N}` with
/// `N = max(r, s) + 1`.
pub fn kernel_basis(gamma: &I1Element) -> Result<Vec<PPrimeVector>, Error> {
    require_gamma(gamma)?;
    let (_, r, s) = root_data(gamma)?;
    kernel_on(gamma, kernel_bound(r, s))
}

fn kernel_on(gamma: &I1Element, n: u32) -> Result<Vec<PPrimeVector>, Error> {
    Ok(left_kernel(&act_pprime_matrix(gamma, n)?))
}

/// Least `i` such that the kernel meets `span(v_i, v_{i+1}, …)` trivially,
/// i.e. such that projecting the kernel onto `v_0..v_{i-1}` is injective.
fn degree_from_kernel(basis: &[PPrimeVector]) -> u64 {
    if basis.is_empty() {
        return 0;
    }
    let width = basis[0].len();
    (0..=width)
        .find(|&i| {
            let cut: Vec<Vec<Rational>> = basis.iter().map(|v| v[..i].to_vec()).collect();
            i > 0 && rank(&cut) == basis.len()
        })
        .expect("full projection is injective") as u64
}

/// The regularity degree `d(γ)`.
pub fn regularity_degree(gamma: &I1Element) -> Result<u64, Error> {
    Ok(degree_from_kernel(&kernel_basis(gamma)?))
}

/// Splits off the largest `∂` power.
pub fn gamma_decompose(a: &I1Element) -> Result<Decomposition, Error> {
    if a.is_in_f() {
        return Ok(Decomposition::InF);
    }
    let m = a.max_d_power().unwrap_or(0);
    if m == 0 && a.zpart().is_zero() {
        return Ok(Decomposition::PureIntegral);
    }
    let gamma = I1Element::int_pow(m).checked_mul(a, DEFAULT_FINDEX_GUARD)?;
    debug_assert!(is_gamma(&gamma));
    let (roots, r, s) = root_data(&gamma)?;
    let d = degree_from_kernel(&kernel_on(&gamma, kernel_bound(r, s))?);
    Ok(Decomposition::Gamma(GammaForm { m, leading: gamma.zpart().clone(), gamma, size: s, roots, r, d }))
}

/// A nonzero `w` with `w·a = 0` for `a ∈ F` or `a` without `∂` part and
/// `a_0 = 0`: such `a` maps `P′_{≤s+1}` into `P′_{≤s}`.
fn collapsing_witness(a: &I1Element) -> PPrimeVector {
    let n = (a.f_size() + 2) as usize;
    let m = pprime_matrix(a, n, n).expect("element lowers P′ indices beyond its F part");
    left_kernel(&m).into_iter().next().expect("map into a smaller space has a kernel")
}

/// Kernel vector of `·∂^m γ` from `K_γ ∩ span(v_m, …)`, shifted down by `m`.
fn shortfall_witness(form: &GammaForm) -> Result<PPrimeVector, Error> {
    let basis = kernel_basis(&form.gamma)?;
    let m = form.m as usize;
    // Combinations of the basis vanishing on v_0..v_{m-1}.
    let head: Vec<Vec<Rational>> = (0..m).map(|j| basis.iter().map(|v| v[j].clone()).collect()).collect();
    let coeffs = if head.is_empty() {
        let mut c = vec![Rational::zero(); basis.len()];
        c[0] = Rational::one();
        c
    } else {
        nullspace(&head).into_iter().next().expect("m below the regularity degree")
    };
    let width = basis[0].len();
    let combined: Vec<Rational> = (0..width)
        .map(|j| basis.iter().zip(&coeffs).map(|(v, c)| &v[j] * c).sum())
        .collect();
    Ok(combined[m..].to_vec())
}

fn left_verdict(a: &I1Element, side: Side) -> Result<RegularityVerdict, Error> {
    Ok(match gamma_decompose(a)? {
        Decomposition::InF => RegularityVerdict {
            side,
            regular: false,
            reason: Reason::InF,
            decomposition: None,
            kernel_witness: Some(collapsing_witness(a)),
        },
        Decomposition::PureIntegral => RegularityVerdict {
            side,
            regular: false,
            reason: Reason::PureIntegral,
            decomposition: None,
            kernel_witness: Some(collapsing_witness(a)),
        },
        Decomposition::Gamma(form) => {
            let regular = u64::from(form.m) >= form.d;
            let kernel_witness = if regular { None } else { Some(shortfall_witness(&form)?) };
            RegularityVerdict {
                side,
                regular,
                reason: if regular { Reason::Regular } else { Reason::DegreeShortfall },
                decomposition: Some(form),
                kernel_witness,
            }
        }
    })
}

/// Classifies `a`. Right regularity of `a` is left regularity of `a*`.
pub fn regularity(a: &I1Element, side: Side) -> Result<RegularityVerdict, Error> {
    match side {
        Side::Left => left_verdict(a, side),
        Side::Right => left_verdict(&a.star(), side),
    }
}

pub fn is_left_regular(a: &I1Element) -> Result<bool, Error> {
    Ok(regularity(a, Side::Left)?.regular)
}

/// Least `i` with `∂^i a` left regular.
pub fn regularize(a: &I1Element) -> Result<u32, Error> {
    if a.is_in_f() {
        return Err(Error::Precondition("regularize needs an element outside F".into()));
    }
    let base = a.max_int_power().unwrap_or(0) + a.max_f_row().map_or(0, |r| r + 1) + 8;
    let mut cap = base;
    let mut extended = false;
    let mut current = a.clone();
    let d = I1Element::d();
    let mut i = 0u32;
    loop {
        match gamma_decompose(&current)? {
            Decomposition::Gamma(form) => {
                if u64::from(form.m) >= form.d {
                    return Ok(i);
                }
                if !extended {
                    let top = form.r.map_or(form.size, |r| form.size.max(r as i64));
                    cap += u32::try_from(top + 2).unwrap_or(u32::MAX);
                    extended = true;
                }
            }
            Decomposition::InF => unreachable!("∂ powers of an element outside F stay outside F"),
            Decomposition::PureIntegral => {}
        }
        if i >= cap {
            return Err(Error::Budget(format!("no regularizing ∂ power found up to {cap}")));
        }
        current = d.checked_mul(&current, DEFAULT_FINDEX_GUARD)?;
        i += 1;
    }
}

/// For nonzero `f ∈ F`, the left regular `∂^{row+1}` killing `f`.
pub fn ass_f_witness(f: &I1Element) -> Result<I1Element, Error> {
    if !f.is_in_f() || f.is_zero() {
        return Err(Error::Precondition("ass_f_witness needs a nonzero element of F".into()));
    }
    Ok(I1Element::d_pow(f.max_f_row().unwrap() + 1))
}

/// Given left regular `c` and any `r`, returns `(c′, r′)` with `c′` left
/// regular and `c′ r = r′ c`.
///
/// Solves `s π(r) = w π(c)` modulo `F` with a least common left multiple,
/// lifts `s, w` to `I₁`, and then kills the `F` discrepancy
/// `s r − w c` and makes `s` left regular with one power of `∂`.
pub fn ore_solve(c: &I1Element, r: &I1Element) -> Result<(I1Element, I1Element), Error> {
    if !is_left_regular(c)? {
        return Err(Error::Precondition("ore_solve needs a left regular c".into()));
    }
    let guard = DEFAULT_FINDEX_GUARD;
    if r.is_in_f() {
        let n = r.max_f_row().map_or(0, |row| row + 1);
        return Ok((I1Element::d_pow(n), I1Element::zero()));
    }
    let pr = SkewLaurentRF::from(&project_a1d(r));
    let pc = SkewLaurentRF::from(&project_a1d(c));
    let res = lclm_gcrd(&pr, &pc, DEFAULT_RFDEG_GUARD)?;
    let cleared = clear_left_denominators(&[res.u, res.v]);
    let s = lift_to_i1(&cleared[0]);
    let w = lift_to_i1(&cleared[1]);
    let discrepancy = &s.checked_mul(r, guard)? - &w.checked_mul(c, guard)?;
    debug_assert!(discrepancy.is_in_f());
    let kill = discrepancy.max_f_row().map_or(0, |row| row + 1);
    let n = kill.max(regularize(&s)?);
    let dn = I1Element::d_pow(n);
    Ok((dn.checked_mul(&s, guard)?, dn.checked_mul(&w, guard)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn gamma_form(a: &I1Element) -> GammaForm {
        match gamma_decompose(a).unwrap() {
            Decomposition::Gamma(g) => g,
            other => panic!("expected Γ form, got {other:?}"),
        }
    }

    fn one_minus_e00_plus_int2() -> I1Element {
        &(&I1Element::one() - &I1Element::e(0, 0)) + &I1Element::int_pow(2)
    }

    #[test]
    fn decomposition_examples() {
        let g = gamma_form(&(&I1Element::d() + &I1Element::int()));
        assert_eq!(g.m, 1);
        assert_eq!(g.gamma, one_minus_e00_plus_int2());
        let g = gamma_form(&I1Element::h());
        assert_eq!((g.m, g.d), (0, 0));
        assert_eq!(gamma_decompose(&I1Element::int()).unwrap(), Decomposition::PureIntegral);
        assert_eq!(gamma_decompose(&I1Element::e(1, 1)).unwrap(), Decomposition::InF);
    }

    #[test]
    fn kernel_and_degree_examples() {
        let h = I1Element::h();
        let hm1 = I1Element::poly(Poly::from_ints(&[-1, 1]));
        assert!(kernel_basis(&h).unwrap().is_empty());
        assert_eq!(kernel_basis(&hm1).unwrap(), vec![vec![rat(1, 1), rat(0, 1)]]);
        let k = kernel_basis(&one_minus_e00_plus_int2()).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], rat(1, 1));
        assert!(k[0][1..].iter().all(Zero::is_zero));
        assert_eq!(regularity_degree(&h).unwrap(), 0);
        assert_eq!(regularity_degree(&hm1).unwrap(), 1);
        assert_eq!(regularity_degree(&one_minus_e00_plus_int2()).unwrap(), 1);
        assert!(kernel_basis(&I1Element::d()).is_err());
    }

    #[test]
    fn verdict_examples() {
        assert!(regularity(&I1Element::d(), Side::Left).unwrap().regular);
        let v = regularity(&I1Element::int(), Side::Left).unwrap();
        assert!(!v.regular);
        assert_eq!(v.reason, Reason::PureIntegral);
        assert_eq!(v.kernel_witness, Some(vec![rat(1, 1)]));
        let both = &I1Element::d() + &I1Element::int();
        assert!(regularity(&both, Side::Left).unwrap().regular);
        assert!(regularity(&both, Side::Right).unwrap().regular);
        let hm1 = I1Element::poly(Poly::from_ints(&[-1, 1]));
        assert!(!regularity(&hm1, Side::Left).unwrap().regular);
        let hd = I1Element::d_term(Poly::h(), 1);
        assert_eq!(hd, &I1Element::d() * &hm1);
        assert!(regularity(&hd, Side::Left).unwrap().regular);
    }

    #[test]
    fn regularize_examples() {
        assert_eq!(regularize(&I1Element::int()).unwrap(), 1);
        assert_eq!(regularize(&one_minus_e00_plus_int2()).unwrap(), 1);
        assert_eq!(regularize(&I1Element::h()).unwrap(), 0);
        assert!(regularize(&I1Element::e(0, 0)).is_err());
    }

    #[test]
    fn ass_f_examples() {
        let e = |i, j| I1Element::e(i, j);
        assert_eq!(ass_f_witness(&e(0, 0)).unwrap(), I1Element::d());
        assert_eq!(ass_f_witness(&e(2, 3)).unwrap(), I1Element::d_pow(3));
        assert_eq!(ass_f_witness(&(&e(0, 0) + &e(1, 1))).unwrap(), I1Element::d_pow(2));
        assert!(ass_f_witness(&I1Element::zero()).is_err());
        assert!(ass_f_witness(&I1Element::d()).is_err());
    }

    #[test]
    fn ore_solve_examples() {
        let d = I1Element::d();
        let (c1, r1) = ore_solve(&d, &I1Element::int()).unwrap();
        assert_eq!((c1.clone(), r1.clone()), (I1Element::d_pow(2), I1Element::one()));
        let (c2, r2) = ore_solve(&d, &I1Element::x()).unwrap();
        assert_eq!(&c2 * &I1Element::x(), &r2 * &d);
        assert!(is_left_regular(&c2).unwrap());
        let (c3, r3) = ore_solve(&I1Element::h(), &d).unwrap();
        assert_eq!(&c3 * &d, &r3 * &I1Element::h());
        assert!(is_left_regular(&c3).unwrap());
        let (c4, r4) = ore_solve(&d, &I1Element::e(2, 0)).unwrap();
        assert_eq!(&c4 * &I1Element::e(2, 0), &r4 * &d);
        assert!(ore_solve(&I1Element::int(), &d).is_err());
    }
}
