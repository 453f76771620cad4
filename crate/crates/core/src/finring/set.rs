use std::fmt;

/// A subset of the element indices of a finite ring, as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    bits: Vec<u64>,
    universe: usize,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet { bits: vec![0; universe.div_ceil(64)], universe }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(universe: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for i in items {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "element {i} outside ring of order {}", self.universe);
        let (w, b) = (i / 64, i % 64);
        let fresh = self.bits[w] & (1 << b) == 0;
        self.bits[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, i: usize) {
        self.bits[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.bits[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// True if the set is `{0}` or empty.
    pub fn is_zero_ideal(&self) -> bool {
        self.iter().all(|i| i == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        ElementSet {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect(),
            universe: self.universe,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        ElementSet {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect(),
            universe: self.universe,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        ElementSet {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & !b).collect(),
            universe: self.universe,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
