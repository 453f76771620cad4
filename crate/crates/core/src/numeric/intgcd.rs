//! Dense modular gcd of primitive integer polynomials (coefficients in
//! ascending order), with a final exact trial division so the result never
//! depends on a lucky choice of primes.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

const PRIME_COUNT: usize = 256;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Miller-Rabin with the first twelve prime bases, deterministic on `u64`.
fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    if let Some(&b) = BASES.iter().find(|&&b| n % b == 0) {
        return n == b;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    BASES.iter().all(|&a| {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            return true;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                return true;
            }
        }
        false
    })
}

/// The largest primes below `2^62`, cached.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| (1..).map(|k| (1u64 << 62) - k).filter(|&n| is_prime(n)).take(PRIME_COUNT).collect())
}

fn reduce(v: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    v.iter().map(|c| u64::try_from(c.mod_floor(&pb)).unwrap()).collect()
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Monic gcd over `F_p`; both inputs have nonzero leading coefficients.
fn gcd_mod(mut x: Vec<u64>, mut y: Vec<u64>, p: u64) -> Vec<u64> {
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let inv = powmod(*y.last().unwrap(), p - 2, p);
        while x.len() >= y.len() {
            let c = mulmod(*x.last().unwrap(), inv, p);
            let shift = x.len() - y.len();
            for (j, &yj) in y.iter().enumerate() {
                x[shift + j] = (x[shift + j] + p - mulmod(c, yj, p)) % p;
            }
            trim(&mut x);
        }
        std::mem::swap(&mut x, &mut y);
    }
    let inv = powmod(*x.last().unwrap(), p - 2, p);
    x.iter().map(|&c| mulmod(c, inv, p)).collect()
}

/// The quotient `a / b` over the integers, if `b` divides `a` there.
pub(super) fn exact_quotient(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut r = a.to_vec();
    let lb = b.last().unwrap();
    if r.len() < b.len() {
        return r.iter().all(Zero::is_zero).then(Vec::new);
    }
    let mut q = vec![BigInt::zero(); r.len() + 1 - b.len()];
    while r.len() >= b.len() {
        let top = r.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let (t, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = r.len() + 1 - b.len();
        for (j, bj) in b[..b.len() - 1].iter().enumerate() {
            r[shift + j] -= &t * bj;
        }
        q[shift] = t;
    }
    r.iter().all(Zero::is_zero).then_some(q)
}

fn divides(b: &[BigInt], a: &[BigInt]) -> bool {
    exact_quotient(a, b).is_some()
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let g = if v.last().unwrap().is_negative() { -g } else { g };
    v.into_iter().map(|c| c / &g).collect()
}

/// Primitive gcd with positive leading coefficient, or `None` when the
/// cached primes run out.
pub(super) fn modular_gcd(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if a.len() == 1 || b.len() == 1 {
        return Some(vec![BigInt::one()]);
    }
    let (la, lb) = (a.last().unwrap(), b.last().unwrap());
    let gamma = la.gcd(lb);
    let mut deg = usize::MAX;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last: Option<Vec<BigInt>> = None;
    for &p in primes() {
        let pb = BigInt::from(p);
        if (la % &pb).is_zero() || (lb % &pb).is_zero() {
            continue;
        }
        let g = gcd_mod(reduce(a, p), reduce(b, p), p);
        let d = g.len() - 1;
        if d == 0 {
            return Some(vec![BigInt::one()]);
        }
        if d > deg {
            continue;
        }
        let gm = u64::try_from(gamma.mod_floor(&pb)).unwrap();
        let g: Vec<u64> = g.iter().map(|&c| mulmod(c, gm, p)).collect();
        if d < deg {
            deg = d;
            acc = g.into_iter().map(BigInt::from).collect();
            modulus = pb;
            last = None;
            continue;
        }
        // Chinese remaindering of acc (mod modulus) with g (mod p).
        let minv = powmod(u64::try_from(modulus.mod_floor(&pb)).unwrap(), p - 2, p);
        for (c, &r) in acc.iter_mut().zip(&g) {
            let cm = u64::try_from(c.mod_floor(&pb)).unwrap();
            let t = mulmod((r + p - cm) % p, minv, p);
            *c += &modulus * t;
        }
        modulus *= &pb;
        let half = &modulus >> 1;
        let symmetric: Vec<BigInt> =
            acc.iter().map(|c| if c > &half { c - &modulus } else { c.clone() }).collect();
        let candidate = primitive(symmetric);
        if last.as_ref() == Some(&candidate) && divides(&candidate, a) && divides(&candidate, b) {
            return Some(candidate);
        }
        last = Some(candidate);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn primes_are_prime() {
        assert!(is_prime(4_611_686_018_427_387_847));
        assert!(!is_prime(4_611_686_018_427_387_849));
        assert_eq!(primes().len(), PRIME_COUNT);
        assert!(primes().windows(2).all(|w| w[0] > w[1] && is_prime(w[1])));
    }

    #[test]
    fn gcd_examples() {
        // (H + 1)(2H − 3) and (H + 1)(H + 5)
        let g = modular_gcd(&ints(&[-3, -1, 2]), &ints(&[5, 6, 1])).unwrap();
        assert_eq!(g, ints(&[1, 1]));
        assert_eq!(modular_gcd(&ints(&[1, 1]), &ints(&[2, 1])).unwrap(), ints(&[1]));
        // Large coefficients that exceed a single prime.
        let big = BigInt::from(3u8).pow(80);
        let f = vec![big.clone(), BigInt::one()];
        let a = vec![&big * 7, big.clone() + 7, BigInt::one()];
        let b = vec![-&big * 2, &big - 2, BigInt::one()];
        // a = (H + 3^80)(H + 7), b = (H + 3^80)(H − 2)
        assert_eq!(modular_gcd(&a, &b).unwrap(), f);
    }
}
