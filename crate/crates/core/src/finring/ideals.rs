//! Left and two-sided ideals, essentiality, uniformity and uniform dimension.

use std::collections::BTreeSet;

use super::{ElementSet, Side, TableRing};
use crate::{Error, Guards};

/// Additive subgroup generated by `seeds`.
pub(crate) fn additive_span(r: &TableRing, seeds: impl IntoIterator<Item = usize>) -> ElementSet {
    let seeds: Vec<usize> = seeds.into_iter().filter(|&s| s != 0).collect();
    let mut set = r.zero_set();
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for &s in &seeds {
            let y = r.add(x, s);
            if set.insert(y) {
                queue.push(y);
            }
        }
    }
    set
}

/// `I + J` for additive subgroups.
pub(crate) fn subgroup_sum(r: &TableRing, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut out = r.empty_set();
    for x in a.iter() {
        for y in b.iter() {
            out.insert(r.add(x, y));
        }
    }
    out
}

/// Smallest left ideal containing `gens`: the additive span of `R·gens`.
pub fn left_ideal_closure(r: &TableRing, gens: &ElementSet) -> ElementSet {
    let products: BTreeSet<usize> = gens.iter().flat_map(|g| r.elements().map(move |x| r.mul(x, g))).collect();
    additive_span(r, products)
}

/// Smallest two-sided ideal containing `gens`: the additive span of `R·gens·R`.
pub fn two_sided_closure(r: &TableRing, gens: &ElementSet) -> ElementSet {
    let mut products = BTreeSet::new();
    for g in gens.iter() {
        for x in r.elements() {
            let xg = r.mul(x, g);
            for y in r.elements() {
                products.insert(r.mul(xg, y));
            }
        }
    }
    additive_span(r, products)
}

fn is_subgroup(r: &TableRing, s: &ElementSet) -> bool {
    s.contains(0) && s.iter().all(|a| s.iter().all(|b| s.contains(r.add(a, b))))
}

pub fn is_left_ideal(r: &TableRing, s: &ElementSet) -> bool {
    is_subgroup(r, s) && s.iter().all(|a| r.elements().all(|x| s.contains(r.mul(x, a))))
}

pub fn is_two_sided(r: &TableRing, s: &ElementSet) -> bool {
    is_left_ideal(r, s) && s.iter().all(|a| r.elements().all(|x| s.contains(r.mul(a, x))))
}

/// Closes `generators` under pairwise sums, failing once more than `limit`
/// ideals appear. Every ideal in the result is a sum of generators.
pub(crate) fn join_closure(r: &TableRing, generators: Vec<ElementSet>, limit: usize) -> Result<Vec<ElementSet>, Error> {
    let mut seen: BTreeSet<ElementSet> = BTreeSet::new();
    seen.insert(r.zero_set());
    let gens: Vec<ElementSet> = generators.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    let mut queue: Vec<ElementSet> = Vec::new();
    for g in &gens {
        if seen.insert(g.clone()) {
            queue.push(g.clone());
        }
    }
    while let Some(ideal) = queue.pop() {
        for g in &gens {
            if g.is_subset(&ideal) {
                continue;
            }
            let sum = subgroup_sum(r, &ideal, g);
            if !seen.contains(&sum) {
                if seen.len() >= limit {
                    return Err(Error::Guard(format!("more than {limit} ideals")));
                }
                seen.insert(sum.clone());
                queue.push(sum);
            }
        }
    }
    let mut all: Vec<ElementSet> = seen.into_iter().collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(all)
}

/// Cyclic left ideals `Rx` for nonzero `x`, without repeats.
pub(crate) fn cyclic_left_ideals(r: &TableRing) -> Vec<ElementSet> {
    let set: BTreeSet<ElementSet> = r
        .elements()
        .skip(1)
        .map(|x| left_ideal_closure(r, &ElementSet::from_indices(r.order(), [x])))
        .collect();
    set.into_iter().collect()
}

/// Every left ideal of `R`, ordered by size and then by content.
pub fn all_left_ideals(r: &TableRing, guards: &Guards) -> Result<Vec<ElementSet>, Error> {
    join_closure(r, cyclic_left_ideals(r), guards.ideals)
}

/// Nonzero left ideals containing no smaller nonzero left ideal. These are
/// the minimal cyclic ideals, since every nonzero ideal contains some `Rx`.
pub fn minimal_left_ideals(r: &TableRing) -> Vec<ElementSet> {
    let cyclic = cyclic_left_ideals(r);
    cyclic
        .iter()
        .filter(|c| !cyclic.iter().any(|d| d != *c && d.is_subset(c)))
        .cloned()
        .collect()
}

/// `I` meets every nonzero left ideal, equivalently every `Rx` with `x ≠ 0`.
pub fn essential(r: &TableRing, ideal: &ElementSet) -> bool {
    r.elements()
        .skip(1)
        .all(|x| !left_ideal_closure(r, &ElementSet::from_indices(r.order(), [x])).intersection(ideal).is_zero_ideal())
}

/// `I ≠ 0` and any two nonzero cyclic subideals meet nontrivially.
pub fn uniform(r: &TableRing, ideal: &ElementSet) -> bool {
    if ideal.is_zero_ideal() {
        return false;
    }
    let cyclic: Vec<ElementSet> = ideal
        .iter()
        .skip(1)
        .map(|x| left_ideal_closure(r, &ElementSet::from_indices(r.order(), [x])))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    cyclic.iter().enumerate().all(|(i, a)| cyclic[i + 1..].iter().all(|b| !a.intersection(b).is_zero_ideal()))
}

/// Largest independent family of nonzero left subideals of `I`, by depth
/// first search. Any independent family can be shrunk to one of minimal
/// ideals of the same size, so only minimal ideals inside `I` are tried.
pub fn independent_family_max(r: &TableRing, ideal: &ElementSet) -> usize {
    let minimal: Vec<ElementSet> = minimal_left_ideals(r).into_iter().filter(|m| m.is_subset(ideal)).collect();
    fn dfs(r: &TableRing, minimal: &[ElementSet], start: usize, sum: &ElementSet, depth: usize, best: &mut usize) {
        *best = (*best).max(depth);
        for (k, m) in minimal.iter().enumerate().skip(start) {
            if !m.intersection(sum).is_zero_ideal() {
                continue;
            }
            let next = subgroup_sum(r, sum, m);
            dfs(r, minimal, k + 1, &next, depth + 1, best);
        }
    }
    let mut best = 0;
    dfs(r, &minimal, 0, &r.zero_set(), 0, &mut best);
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealPredicates {
    pub essential: bool,
    pub uniform: bool,
    pub udim: usize,
}

pub fn ideal_predicates(r: &TableRing, ideal: &ElementSet) -> IdealPredicates {
    IdealPredicates { essential: essential(r, ideal), uniform: uniform(r, ideal), udim: independent_family_max(r, ideal) }
}

/// Which elements `regular_on_ideal` scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularMode {
    /// Elements `i ∈ I` with `x ↦ xi` injective on `I`.
    WithinIdeal,
    /// Elements `r ∈ R` with `x ↦ xr` injective on the ideal.
    FromRing,
}

pub fn regular_on_ideal(r: &TableRing, ideal: &ElementSet, mode: RegularMode) -> ElementSet {
    let injective = |c: usize| ideal.iter().all(|x| x == 0 || r.mul(x, c) != 0);
    let candidates: Vec<usize> = match mode {
        RegularMode::WithinIdeal => ideal.to_vec(),
        RegularMode::FromRing => r.elements().collect(),
    };
    ElementSet::from_indices(r.order(), candidates.into_iter().filter(|&c| injective(c)))
}

/// `Side::Left`: `{ r | rX = 0 }`; `Side::Right`: `{ r | Xr = 0 }`.
pub fn annihilator(r: &TableRing, x: &ElementSet, side: Side) -> ElementSet {
    let kills = |a: usize| {
        x.iter().all(|b| match side {
            Side::Left => r.mul(a, b) == 0,
            Side::Right => r.mul(b, a) == 0,
        })
    };
    ElementSet::from_indices(r.order(), r.elements().filter(|&a| kills(a)))
}

#[cfg(test)]
mod tests {
    use super::super::{build_ring, RingSpec};
    use super::*;

    fn ring(s: &str) -> TableRing {
        build_ring(&RingSpec::parse(s).unwrap(), &Guards::default()).unwrap()
    }

    fn set(r: &TableRing, items: &[usize]) -> ElementSet {
        ElementSet::from_indices(r.order(), items.iter().copied())
    }

    #[test]
    fn closures() {
        let z4 = ring("Z4");
        assert_eq!(left_ideal_closure(&z4, &set(&z4, &[2])).to_vec(), vec![0, 2]);
        assert_eq!(left_ideal_closure(&z4, &z4.empty_set()).to_vec(), vec![0]);
        let m2 = ring("matrix(Z2,2)");
        let e11 = m2.labels().unwrap().iter().position(|l| l == "[[1,0],[0,0]]").unwrap();
        let col = left_ideal_closure(&m2, &set(&m2, &[e11]));
        assert_eq!(col.len(), 4);
        assert!(is_left_ideal(&m2, &col));
        assert!(!is_two_sided(&m2, &col));
        assert_eq!(two_sided_closure(&m2, &col), m2.full_set());
    }

    #[test]
    fn ideal_lists() {
        let g = Guards::default();
        assert_eq!(all_left_ideals(&ring("Z4"), &g).unwrap().len(), 3);
        assert_eq!(all_left_ideals(&ring("product(Z2,Z2)"), &g).unwrap().len(), 4);
        let t2 = ring("triangular(Z2,2)");
        let ideals = all_left_ideals(&t2, &g).unwrap();
        let strict = t2.labels().unwrap().iter().position(|l| l == "[[0,1],[0,0]]").unwrap();
        assert!(ideals.contains(&set(&t2, &[0, strict])));
        assert!(ideals.iter().all(|i| is_left_ideal(&t2, i)));
        let tight = Guards { ideals: 2, ..g };
        assert!(matches!(all_left_ideals(&t2, &tight), Err(Error::Guard(_))));
    }

    #[test]
    fn predicates() {
        let z4 = ring("Z4");
        assert!(essential(&z4, &set(&z4, &[0, 2])));
        assert_eq!(independent_family_max(&z4, &z4.full_set()), 1);
        assert!(uniform(&z4, &z4.full_set()));
        let m2 = ring("matrix(Z2,2)");
        assert_eq!(independent_family_max(&m2, &m2.full_set()), 2);
        assert!(!uniform(&m2, &m2.full_set()));
        let f2f2 = ring("product(Z2,Z2)");
        let first = minimal_left_ideals(&f2f2)[0].clone();
        assert!(!essential(&f2f2, &first));
        assert!(uniform(&f2f2, &first));
    }

    #[test]
    fn regular_elements_on_ideals() {
        let z4 = ring("Z4");
        let two = set(&z4, &[0, 2]);
        assert!(regular_on_ideal(&z4, &two, RegularMode::WithinIdeal).is_empty());
        assert_eq!(regular_on_ideal(&z4, &z4.zero_set(), RegularMode::FromRing), z4.full_set());
        let m2 = ring("matrix(Z2,2)");
        for col in minimal_left_ideals(&m2) {
            assert!(!regular_on_ideal(&m2, &col, RegularMode::WithinIdeal).is_empty());
        }
    }

    #[test]
    fn annihilators() {
        let z4 = ring("Z4");
        assert_eq!(annihilator(&z4, &set(&z4, &[2]), Side::Right).to_vec(), vec![0, 2]);
        assert_eq!(annihilator(&z4, &z4.full_set(), Side::Right).to_vec(), vec![0]);
        let t2 = ring("triangular(Z2,2)");
        let e00 = t2.labels().unwrap().iter().position(|l| l == "[[1,0],[0,0]]").unwrap();
        let lann = annihilator(&t2, &set(&t2, &[e00]), Side::Left);
        // Matrices with zero first column.
        assert!(lann.iter().all(|a| t2.mul(a, e00) == 0));
        assert!(is_left_ideal(&t2, &lann));
        assert_eq!(lann.len(), 4);
    }

    /// Greedy socle count: add minimal ideals independent of the running sum.
    fn greedy_udim(r: &TableRing, ideal: &ElementSet) -> usize {
        let mut sum = r.zero_set();
        let mut count = 0;
        for m in minimal_left_ideals(r).into_iter().filter(|m| m.is_subset(ideal)) {
            if m.intersection(&sum).is_zero_ideal() {
                sum = subgroup_sum(r, &sum, &m);
                count += 1;
            }
        }
        count
    }

    #[test]
    fn udim_matches_greedy_socle() {
        let g = Guards::default();
        for s in ["Z4", "Z6", "Z8", "product(Z2,Z2)", "matrix(Z2,2)", "triangular(Z2,2)", "F4", "triangular(Z2,3)"] {
            let r = ring(s);
            for ideal in all_left_ideals(&r, &g).unwrap() {
                assert_eq!(independent_family_max(&r, &ideal), greedy_udim(&r, &ideal), "{s} {ideal}");
            }
        }
    }

    #[test]
    fn udim_is_additive_on_products() {
        let parts = ["Z4", "Z2", "Z6", "matrix(Z2,2)", "triangular(Z2,2)", "F4"];
        for a in parts {
            for b in parts {
                let (ra, rb) = (ring(a), ring(b));
                let Ok(prod) = build_ring(&RingSpec::parse(&format!("product({a},{b})")).unwrap(), &Guards::default())
                else {
                    continue;
                };
                let udim = |r: &TableRing| independent_family_max(r, &r.full_set());
                assert_eq!(udim(&prod), udim(&ra) + udim(&rb), "{a} x {b}");
            }
        }
    }
}
