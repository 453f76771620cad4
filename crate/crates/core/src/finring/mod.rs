//! Finite rings given by addition and multiplication tables.
//!
//! Elements are indices `0..order` with `0` the additive identity. All
//! predicates are decided by exhaustive scans in index order, so results and
//! witnesses are deterministic.

mod builders;
mod ideals;
mod iso;
mod set;
mod spectrum;

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{Error, Guards};

pub use builders::{build_ring, product_ring, RingSpec};
pub use ideals::{
    all_left_ideals, annihilator, essential, ideal_predicates, independent_family_max, is_left_ideal,
    is_two_sided, left_ideal_closure, minimal_left_ideals, regular_on_ideal, two_sided_closure,
    uniform, IdealPredicates, RegularMode,
};
pub use iso::find_isomorphism;
pub use set::ElementSet;
pub use spectrum::{
    ideal_product, is_prime, is_semiprime, jacobson_radical, largest_nilpotent_ideal, prime_spectrum,
    semisimplicity, two_sided_ideals, PrimeSpectrum, Semisimplicity,
};

/// A ring with identity, validated on construction.
#[derive(Clone, PartialEq, Eq)]
pub struct TableRing {
    name: String,
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    one: usize,
    labels: Option<Vec<String>>,
}

/// On-disk form: `{ "order", "add", "mul", "one", "labels" }`, zero at 0.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingFile {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub one: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

/// Which element classes a scan is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Units and the three kinds of regular elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSets {
    pub units: ElementSet,
    /// `'C_R`: `x ↦ xr` injective.
    pub left_regular: ElementSet,
    /// `C′_R`: `x ↦ rx` injective.
    pub right_regular: ElementSet,
    pub regular: ElementSet,
}

impl TableRing {
    /// Validates tables and builds the ring. `add[a][b]` is `a + b`.
    pub fn from_tables(
        name: impl Into<String>,
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        one: usize,
        labels: Option<Vec<String>>,
        guards: &Guards,
    ) -> Result<Self, Error> {
        let n = add.len();
        if n == 0 {
            return Err(Error::Axiom("nonempty carrier".into()));
        }
        if n > guards.order || n > usize::from(u16::MAX) {
            return Err(Error::Guard(format!("ring order {n} exceeds order guard {}", guards.order)));
        }
        let flat = |t: &[Vec<usize>], what: &str| -> Result<Vec<u16>, Error> {
            if t.len() != n || t.iter().any(|r| r.len() != n) {
                return Err(Error::Axiom(format!("{what} table shape {n}x{n}")));
            }
            t.iter()
                .flatten()
                .map(|&v| {
                    if v < n {
                        Ok(v as u16)
                    } else {
                        Err(Error::Axiom(format!("{what} table entries below {n}")))
                    }
                })
                .collect()
        };
        let add = flat(add, "addition")?;
        let mul = flat(mul, "multiplication")?;
        if one >= n {
            return Err(Error::Axiom("identity index in range".into()));
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::Axiom("one label per element".into()));
            }
        }
        let mut neg = vec![0u16; n];
        for a in 0..n {
            neg[a] = (0..n)
                .find(|&b| add[a * n + b] == 0)
                .ok_or_else(|| Error::Axiom(format!("additive inverse of element {a}")))? as u16;
        }
        let ring = TableRing { name: name.into(), order: n, add, mul, neg, one, labels };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<(), Error> {
        let n = self.order;
        for a in 0..n {
            if self.add(0, a) != a || self.add(a, 0) != a {
                return Err(Error::Axiom("0 is the additive identity".into()));
            }
            if self.mul(self.one, a) != a || self.mul(a, self.one) != a {
                return Err(Error::Axiom("the identity element is a two-sided identity".into()));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(Error::Axiom(format!("commutativity of addition at ({a},{b})")));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab_sum = self.add(a, b);
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.add(ab_sum, c) != self.add(a, self.add(b, c)) {
                        return Err(Error::Axiom(format!("associativity of addition at ({a},{b},{c})")));
                    }
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::Axiom(format!("associativity of multiplication at ({a},{b},{c})")));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(ab, self.mul(a, c)) {
                        return Err(Error::Axiom(format!("left distributivity at ({a},{b},{c})")));
                    }
                    if self.mul(ab_sum, c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        return Err(Error::Axiom(format!("right distributivity at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn from_file_data(data: RingFile, default_name: &str, guards: &Guards) -> Result<Self, Error> {
        if data.order != data.add.len() {
            return Err(Error::Axiom("order matches the table size".into()));
        }
        let name = data.name.unwrap_or_else(|| default_name.to_string());
        TableRing::from_tables(name, &data.add, &data.mul, data.one, data.labels, guards)
    }

    pub fn load(path: &Path, guards: &Guards) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
        let data: RingFile = serde_json::from_str(&text)
            .map_err(|e| Error::Invalid(format!("malformed ring file {}: {e}", path.display())))?;
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("ring");
        TableRing::from_file_data(data, stem, guards)
    }

    pub fn to_file_data(&self) -> RingFile {
        let n = self.order;
        let table = |t: &[u16]| (0..n).map(|a| (0..n).map(|b| usize::from(t[a * n + b])).collect()).collect();
        RingFile {
            order: n,
            add: table(&self.add),
            mul: table(&self.mul),
            one: self.one,
            labels: self.labels.clone(),
            name: Some(self.name.clone()),
        }
    }

    pub fn save(&self, path: &Path) -> Result<(), Error> {
        let text = serde_json::to_string(&self.to_file_data()).expect("ring tables serialize");
        std::fs::write(path, text).map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        usize::from(self.add[a * self.order + b])
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        usize::from(self.mul[a * self.order + b])
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        usize::from(self.neg[a])
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.order)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn zero_set(&self) -> ElementSet {
        ElementSet::from_indices(self.order, [0])
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.elements().any(|b| self.mul(a, b) == self.one && self.mul(b, a) == self.one)
    }

    /// Two-sided inverse, if any.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.elements().find(|&b| self.mul(a, b) == self.one && self.mul(b, a) == self.one)
    }

    /// `x ↦ xr` is injective.
    pub fn is_left_regular(&self, r: usize) -> bool {
        self.elements().all(|x| x == 0 || self.mul(x, r) != 0)
    }

    /// `x ↦ rx` is injective.
    pub fn is_right_regular(&self, r: usize) -> bool {
        self.elements().all(|x| x == 0 || self.mul(r, x) != 0)
    }

    pub fn units(&self) -> ElementSet {
        ElementSet::from_indices(self.order, self.elements().filter(|&a| self.is_unit(a)))
    }

    /// Exhaustive scans of the element classes. On a finite ring all four
    /// coincide: an injective self-map of a finite set is bijective.
    pub fn element_sets(&self) -> ElementSets {
        let left_regular = ElementSet::from_indices(self.order, self.elements().filter(|&a| self.is_left_regular(a)));
        let right_regular =
            ElementSet::from_indices(self.order, self.elements().filter(|&a| self.is_right_regular(a)));
        let regular = left_regular.intersection(&right_regular);
        let units = self.units();
        assert_eq!(units, left_regular, "finite ring: left regular elements are units");
        assert_eq!(units, right_regular, "finite ring: right regular elements are units");
        ElementSets { units, left_regular, right_regular, regular }
    }

    /// The ring with multiplication `a ∘ b = b a`.
    pub fn opposite(&self) -> TableRing {
        let n = self.order;
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = self.mul[b * n + a];
            }
        }
        TableRing { name: format!("{}^op", self.name), mul, ..self.clone() }
    }

    /// `R/I` with cosets indexed in order of their least element, and the
    /// projection `R → R/I`.
    pub fn quotient(&self, ideal: &ElementSet) -> Result<(TableRing, Vec<usize>), Error> {
        if !is_two_sided(self, ideal) {
            return Err(Error::Precondition("quotient needs a two-sided ideal".into()));
        }
        let n = self.order;
        let mut proj = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if proj[a] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(a);
            for i in ideal.iter() {
                proj[self.add(a, i)] = idx;
            }
        }
        let m = reps.len();
        let table = |op: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..m).map(|x| (0..m).map(|y| proj[op(reps[x], reps[y])]).collect()).collect()
        };
        let add = table(&|a, b| self.add(a, b));
        let mul = table(&|a, b| self.mul(a, b));
        let labels = Some(reps.iter().map(|&r| format!("{}+I", self.label(r))).collect());
        let guards = Guards { order: usize::MAX, ..Guards::default() };
        let q = TableRing::from_tables(format!("{}/I", self.name), &add, &mul, proj[self.one], labels, &guards)?;
        Ok((q, proj))
    }
}

impl fmt::Debug for TableRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TableRing({}, order {})", self.name, self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> TableRing {
        build_ring(&RingSpec::Cyclic(n), &Guards::default()).unwrap()
    }

    #[test]
    fn element_classes() {
        let r = z(4);
        assert_eq!(r.element_sets().units.to_vec(), vec![1, 3]);
        let m2 = build_ring(&RingSpec::parse("matrix(cyclic(2),2)").unwrap(), &Guards::default()).unwrap();
        assert_eq!(m2.order(), 16);
        let sets = m2.element_sets();
        assert_eq!(sets.units.len(), 6);
        assert_eq!(sets.regular, sets.units);
        let t2 = build_ring(&RingSpec::parse("triangular(cyclic(2),2)").unwrap(), &Guards::default()).unwrap();
        assert_eq!(t2.order(), 8);
        assert_eq!(t2.element_sets().units.len(), 2);
    }

    #[test]
    fn rejects_bad_tables() {
        let g = Guards::default();
        let add = vec![vec![0, 1], vec![1, 0]];
        let bad_mul = vec![vec![0, 0], vec![0, 0]];
        assert!(matches!(TableRing::from_tables("x", &add, &bad_mul, 1, None, &g), Err(Error::Axiom(_))));
        let mut file = z(4).to_file_data();
        file.mul[2][3] = 1;
        assert!(matches!(TableRing::from_file_data(file, "z4", &g), Err(Error::Axiom(_))));
        let small = Guards { order: 3, ..g };
        assert!(matches!(build_ring(&RingSpec::Cyclic(4), &small), Err(Error::Guard(_))));
    }

    #[test]
    fn opposite_and_quotient() {
        let r = z(4);
        assert_eq!(r.opposite().to_file_data().mul, r.to_file_data().mul);
        let t2 = build_ring(&RingSpec::parse("triangular(cyclic(2),2)").unwrap(), &Guards::default()).unwrap();
        assert_eq!(t2.opposite().opposite().to_file_data().mul, t2.to_file_data().mul);
        assert_ne!(t2.opposite().to_file_data().mul, t2.to_file_data().mul);
        let (q, proj) = r.quotient(&ElementSet::from_indices(4, [0, 2])).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj, vec![0, 1, 0, 1]);
        assert!(r.quotient(&ElementSet::from_indices(4, [0, 1])).is_err());
        let (same, _) = r.quotient(&r.zero_set()).unwrap();
        assert_eq!(same.to_file_data().mul, r.to_file_data().mul);
    }

    #[test]
    fn file_round_trip() {
        let dir = std::env::temp_dir().join(format!("oreq-ring-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("z6.json");
        let r = z(6);
        r.save(&path).unwrap();
        let back = TableRing::load(&path, &Guards::default()).unwrap();
        assert_eq!(back, r);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
