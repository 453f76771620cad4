//! Two-sided ideals, primes, radicals and semisimplicity.

use super::ideals::{additive_span, join_closure, two_sided_closure};
use super::{ElementSet, TableRing};
use crate::{Error, Guards};

/// Additive span of `{ab | a ∈ A, b ∈ B}`.
pub fn ideal_product(r: &TableRing, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let products: Vec<usize> = a.iter().flat_map(|x| b.iter().map(move |y| r.mul(x, y))).collect();
    additive_span(r, products)
}

/// Proper two-sided `P` with `aRb ⊆ P ⇒ a ∈ P or b ∈ P`.
pub fn is_prime(r: &TableRing, p: &ElementSet) -> bool {
    if p.len() == r.order() {
        return false;
    }
    let outside: Vec<usize> = r.elements().filter(|&a| !p.contains(a)).collect();
    outside.iter().all(|&a| {
        outside.iter().all(|&b| r.elements().any(|x| !p.contains(r.mul(r.mul(a, x), b))))
    })
}

/// `aRa ⊆ P ⇒ a ∈ P`.
pub fn is_semiprime(r: &TableRing, p: &ElementSet) -> bool {
    r.elements()
        .filter(|&a| !p.contains(a))
        .all(|a| r.elements().any(|x| !p.contains(r.mul(r.mul(a, x), a))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSpectrum {
    /// All two-sided ideals, ordered by size.
    pub two_sided: Vec<ElementSet>,
    pub primes: Vec<ElementSet>,
    /// Minimal primes of the ring.
    pub minimal_primes: Vec<ElementSet>,
    /// Intersection of the minimal primes.
    pub prime_radical: ElementSet,
}

impl PrimeSpectrum {
    /// Minimal elements among the primes containing `ideal`.
    pub fn minimal_primes_over(&self, ideal: &ElementSet) -> Vec<ElementSet> {
        let over: Vec<&ElementSet> = self.primes.iter().filter(|p| ideal.is_subset(p)).collect();
        over.iter()
            .filter(|p| !over.iter().any(|q| q != *p && q.is_subset(p)))
            .map(|p| (*p).clone())
            .collect()
    }
}

/// Two-sided ideals as the join closure of the principal ones `RxR`.
pub fn two_sided_ideals(r: &TableRing, guards: &Guards) -> Result<Vec<ElementSet>, Error> {
    let principal = r
        .elements()
        .skip(1)
        .map(|x| two_sided_closure(r, &ElementSet::from_indices(r.order(), [x])))
        .collect();
    join_closure(r, principal, guards.ideals)
}

/// Two-sided ideals, primes and the prime radical, with the radical checked
/// against the largest nilpotent ideal.
pub fn prime_spectrum(r: &TableRing, guards: &Guards) -> Result<PrimeSpectrum, Error> {
    let two_sided = two_sided_ideals(r, guards)?;
    let primes: Vec<ElementSet> = two_sided.iter().filter(|p| is_prime(r, p)).cloned().collect();
    let mut spectrum = PrimeSpectrum { two_sided, primes, minimal_primes: Vec::new(), prime_radical: r.full_set() };
    spectrum.minimal_primes = spectrum.minimal_primes_over(&r.zero_set());
    spectrum.prime_radical = spectrum.minimal_primes.iter().fold(r.full_set(), |acc, p| acc.intersection(p));
    let nil = largest_nilpotent_from(r, &spectrum.two_sided);
    assert_eq!(spectrum.prime_radical, nil, "prime radical of a finite ring is its largest nilpotent ideal");
    Ok(spectrum)
}

fn is_nilpotent(r: &TableRing, ideal: &ElementSet) -> bool {
    let mut power = ideal.clone();
    // Powers strictly decrease until they stabilize.
    loop {
        if power.is_zero_ideal() {
            return true;
        }
        let next = ideal_product(r, &power, ideal);
        if next == power {
            return false;
        }
        power = next;
    }
}

fn largest_nilpotent_from(r: &TableRing, two_sided: &[ElementSet]) -> ElementSet {
    let nilpotent: Vec<&ElementSet> = two_sided.iter().filter(|i| is_nilpotent(r, i)).collect();
    let largest = nilpotent.iter().max_by_key(|i| i.len()).expect("zero ideal is nilpotent");
    assert!(nilpotent.iter().all(|i| i.is_subset(largest)), "nilpotent ideals have a largest element");
    (*largest).clone()
}

/// The largest nilpotent two-sided ideal.
pub fn largest_nilpotent_ideal(r: &TableRing, guards: &Guards) -> Result<ElementSet, Error> {
    Ok(largest_nilpotent_from(r, &two_sided_ideals(r, guards)?))
}

/// `{ a | 1 − ra is a unit for every r }`.
pub fn jacobson_radical(r: &TableRing) -> ElementSet {
    let units = r.units();
    ElementSet::from_indices(
        r.order(),
        r.elements().filter(|&a| r.elements().all(|x| units.contains(r.sub(r.one(), r.mul(x, a))))),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semisimplicity {
    pub jacobson: ElementSet,
    pub semisimple: bool,
}

/// Semisimple iff the Jacobson radical vanishes; the radical is checked
/// against the prime radical.
pub fn semisimplicity(r: &TableRing, guards: &Guards) -> Result<Semisimplicity, Error> {
    let jacobson = jacobson_radical(r);
    let spectrum = prime_spectrum(r, guards)?;
    assert_eq!(jacobson, spectrum.prime_radical, "Jacobson and prime radicals agree on finite rings");
    let semisimple = jacobson.is_zero_ideal();
    Ok(Semisimplicity { jacobson, semisimple })
}
