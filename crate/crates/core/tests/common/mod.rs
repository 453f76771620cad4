//! Seeded generators and independent oracles shared by the integration tests.

#![allow(dead_code)]

use num_traits::{Signed, ToPrimitive, Zero};
use oreq::i1::{pprime_matrix, I1Element};
use oreq::numeric::{nullspace, rat, Poly, RatFunc, Rational};
use oreq::ore::SkewLaurentRF;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rat(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn nonzero_rat(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let c = small_rat(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Poly::from_coeffs((0..=deg).map(|_| small_rat(rng)).collect())
}

pub fn nonzero_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    loop {
        let p = poly(rng, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A polynomial with natural roots, so regularity degrees are nontrivial.
pub fn rooted_poly(rng: &mut ChaCha8Rng) -> Poly {
    let k = rng.gen_range(0..=2);
    let roots: Vec<i64> = (0..k).map(|_| rng.gen_range(0..=6)).collect();
    Poly::from_roots(&roots).scale(&nonzero_rat(rng))
}

/// Shape of random elements.
#[derive(Clone, Copy)]
pub struct Shape {
    pub d: u32,
    pub int: u32,
    pub f: u32,
    pub h: usize,
    pub terms: usize,
}

pub const SMALL: Shape = Shape { d: 3, int: 3, f: 4, h: 2, terms: 3 };

pub fn element(rng: &mut ChaCha8Rng, shape: Shape) -> I1Element {
    let mut dpart = Vec::new();
    let mut ipart = Vec::new();
    let mut fpart = Vec::new();
    let mut zpart = Poly::zero();
    for _ in 0..rng.gen_range(1..=shape.terms) {
        match rng.gen_range(0..4) {
            0 if shape.d > 0 => dpart.push((rng.gen_range(1..=shape.d), poly(rng, shape.h))),
            1 if shape.int > 0 => ipart.push((rng.gen_range(1..=shape.int), poly(rng, shape.h))),
            2 => fpart.push(((rng.gen_range(0..=shape.f), rng.gen_range(0..=shape.f)), small_rat(rng))),
            _ => zpart = &zpart + &poly(rng, shape.h),
        }
    }
    I1Element::from_parts(dpart, zpart, ipart, fpart)
}

/// An element of `Γ`: nonzero `a_0`, integrals and an `F` part.
pub fn gamma(rng: &mut ChaCha8Rng) -> I1Element {
    let a0 = rooted_poly(rng);
    let ipart: Vec<(u32, Poly)> = (0..rng.gen_range(0..=2)).map(|_| (rng.gen_range(1..=3), poly(rng, 1))).collect();
    let fpart: Vec<((u32, u32), Rational)> =
        (0..rng.gen_range(0..=3)).map(|_| ((rng.gen_range(0..=4), rng.gen_range(0..=4)), small_rat(rng))).collect();
    I1Element::from_parts([], a0, ipart, fpart)
}

/// Structured corpus: `∂^i p(H) ∂^j`, integral mixtures and `F`
/// perturbations with indices ≤ 6.
pub fn structured_corpus() -> Vec<I1Element> {
    let polys = [
        Poly::one(),
        Poly::h(),
        Poly::from_roots(&[2]),
        Poly::from_roots(&[1, 3]),
        Poly::from_ints(&[1, 1]),
        Poly::from_roots(&[0, 4]),
    ];
    let mut out = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            for p in &polys {
                let base = &(&I1Element::d_pow(i) * &I1Element::poly(p.clone())) * &I1Element::d_pow(j);
                out.push(base.clone());
                let mixed = &base + &I1Element::int_term(1 + (i + j) % 3, p.clone());
                out.push(mixed.clone());
                out.push(&mixed + &I1Element::e(i + 3, j));
                out.push(&base + &I1Element::e(j, (i * 2) % 7));
                out.push(&base - &I1Element::e(6, 6));
                out.push(&mixed - &I1Element::int_term(3, Poly::one()));
            }
        }
    }
    out
}

pub fn random_corpus(seed: u64, n: usize) -> Vec<I1Element> {
    let mut r = rng(seed);
    (0..n).map(|_| element(&mut r, SMALL)).collect()
}

/// Fujiwara bound: every root `z` of `p` has
/// `|z| ≤ 2·max_i |c_{n−i} / c_n|^{1/i}`. Evaluated in floating point with a
/// margin, since it only sizes a search window.
fn root_bound(p: &Poly) -> i64 {
    let coeffs = p.coeffs();
    let n = coeffs.len() - 1;
    let lead = p.leading();
    let m = (1..=n)
        .map(|i| (&coeffs[n - i] / &lead).abs().to_f64().unwrap().powf(1.0 / i as f64))
        .fold(0.0, f64::max);
    (2.0 * m).ceil() as i64 + 2
}

/// Left regularity by a direct kernel computation of `·a` on `P′`.
///
/// A kernel vector with top index `k > s` has `v_k·a` leading at `v_{k+m}`
/// with coefficient `p(k + 1)`, where `∂^m p` is the top `∂` term (or
/// `m = 0`, `p = a_0`), and nothing else reaches that index. So kernel
/// vectors live in `P′_{≤K}` with `K = max(s, root bound)`. Without a `∂`
/// part or `a_0`, `·a` lowers degrees off `F` and has a kernel in
/// `P′_{≤s+1}`.
pub fn oracle_left_regular(a: &I1Element) -> bool {
    if a.is_zero() {
        return false;
    }
    let s = a.f_size().max(0);
    let top = if let Some(m) = a.max_d_power() {
        Some((m as i64, a.dpart()[&m].clone()))
    } else if !a.zpart().is_zero() {
        Some((0, a.zpart().clone()))
    } else {
        None
    };
    let (k, m) = match &top {
        Some((m, p)) => (s.max(root_bound(p)) + 1, *m),
        None => (s + 1, 0),
    };
    let rows = (k + 1) as usize;
    let cols = (k + m + s + 2) as usize;
    let matrix = pprime_matrix(a, rows, cols).expect("columns cover every image");
    let transpose: Vec<Vec<Rational>> = (0..cols).map(|j| matrix.iter().map(|row| row[j].clone()).collect()).collect();
    nullspace(&transpose).is_empty()
}

/// Least `i ≤ cap` with `∂^i a` left regular by the oracle.
pub fn oracle_regularity_degree(a: &I1Element, cap: u32) -> Option<u32> {
    (0..=cap).find(|&i| oracle_left_regular(&(&I1Element::d_pow(i) * a)))
}

pub fn ratfunc(rng: &mut ChaCha8Rng, num_deg: usize, den_deg: usize) -> RatFunc {
    let num = nonzero_poly(rng, num_deg);
    let den = nonzero_poly(rng, den_deg);
    RatFunc::new(num, den)
}

/// A skew Laurent element with `∂` powers in `lo..=hi`.
pub fn skew(rng: &mut ChaCha8Rng, lo: i64, hi: i64, num_deg: usize, den_deg: usize) -> SkewLaurentRF {
    loop {
        let mut terms: Vec<(i64, RatFunc)> = Vec::new();
        for k in lo..=hi {
            if rng.gen_bool(0.6) {
                terms.push((k, ratfunc(rng, num_deg, den_deg)));
            }
        }
        let x = SkewLaurentRF::from_terms(terms);
        if !x.is_zero() {
            return x;
        }
    }
}
