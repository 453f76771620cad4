//! Multiplicative sets, Ore and denominator conditions, and localizations of
//! finite rings built from pairs `s⁻¹r`.

use crate::finring::{
    annihilator, essential, find_isomorphism, all_left_ideals, is_two_sided, two_sided_ideals, ElementSet, Side,
    TableRing,
};
use crate::{Error, Guards};

/// A set containing 1, closed under products and free of 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultSet {
    elements: ElementSet,
}

impl MultSet {
    /// Validates an explicit set.
    pub fn new(r: &TableRing, elements: ElementSet) -> Result<Self, Error> {
        if elements.contains(0) {
            return Err(Error::ContainsZero);
        }
        if !elements.contains(r.one()) {
            return Err(Error::Precondition("multiplicative sets contain 1".into()));
        }
        if !elements.iter().all(|a| elements.iter().all(|b| elements.contains(r.mul(a, b)))) {
            return Err(Error::Precondition("multiplicative sets are closed under products".into()));
        }
        Ok(MultSet { elements })
    }

    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }

    pub fn into_elements(self) -> ElementSet {
        self.elements
    }
}

/// Monoid generated by `gens`.
pub fn mult_closure(r: &TableRing, gens: &ElementSet) -> Result<MultSet, Error> {
    let mut set = ElementSet::from_indices(r.order(), [r.one()]);
    let mut queue = vec![r.one()];
    while let Some(x) = queue.pop() {
        for g in gens.iter() {
            for y in [r.mul(x, g), r.mul(g, x)] {
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
    }
    if set.contains(0) {
        return Err(Error::ContainsZero);
    }
    Ok(MultSet { elements: set })
}

/// `{ r | sr = 0 for some s ∈ S }`.
pub fn ass_left(r: &TableRing, s: &ElementSet) -> ElementSet {
    ElementSet::from_indices(r.order(), r.elements().filter(|&x| s.iter().any(|t| r.mul(t, x) == 0)))
}

/// `{ r | rs = 0 for some s ∈ S }`.
pub fn ass_right(r: &TableRing, s: &ElementSet) -> ElementSet {
    ElementSet::from_indices(r.order(), r.elements().filter(|&x| s.iter().any(|t| r.mul(x, t) == 0)))
}

/// `∀ s ∈ S, r ∈ R ∃ s′ ∈ S, r′ ∈ R: s′r = r′s`.
pub fn is_left_ore(r: &TableRing, s: &ElementSet) -> bool {
    s.iter().all(|t| {
        let multiples = ElementSet::from_indices(r.order(), r.elements().map(|x| r.mul(x, t)));
        r.elements().all(|x| s.iter().any(|u| multiples.contains(r.mul(u, x))))
    })
}

/// `∀ s ∈ S, r ∈ R ∃ s′ ∈ S, r′ ∈ R: rs′ = sr′`.
pub fn is_right_ore(r: &TableRing, s: &ElementSet) -> bool {
    s.iter().all(|t| {
        let multiples = ElementSet::from_indices(r.order(), r.elements().map(|x| r.mul(t, x)));
        r.elements().all(|x| s.iter().any(|u| multiples.contains(r.mul(x, u))))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OreReport {
    pub left_ore: bool,
    pub right_ore: bool,
    /// `rs = 0` with `s ∈ S` forces `s′r = 0` for some `s′ ∈ S`.
    pub left_reversible: bool,
    /// `sr = 0` with `s ∈ S` forces `rs′ = 0` for some `s′ ∈ S`.
    pub right_reversible: bool,
    pub left_denominator: bool,
    pub right_denominator: bool,
    pub ass_left: ElementSet,
    pub ass_right: ElementSet,
}

pub fn ore_denominator_check(r: &TableRing, s: &ElementSet) -> OreReport {
    let left = ass_left(r, s);
    let right = ass_right(r, s);
    let left_ore = is_left_ore(r, s);
    let right_ore = is_right_ore(r, s);
    let left_reversible = right.is_subset(&left);
    let right_reversible = left.is_subset(&right);
    OreReport {
        left_ore,
        right_ore,
        left_reversible,
        right_reversible,
        left_denominator: left_ore && left_reversible,
        right_denominator: right_ore && right_reversible,
        ass_left: left,
        ass_right: right,
    }
}

fn check_left_denominator(r: &TableRing, s: &ElementSet) -> Result<OreReport, Error> {
    MultSet::new(r, s.clone())?;
    let report = ore_denominator_check(r, s);
    if !report.left_denominator {
        return Err(Error::Precondition("set is not a left denominator set".into()));
    }
    Ok(report)
}

/// `S⁻¹R` as a table ring with the canonical map `R → S⁻¹R`.
#[derive(Debug, Clone)]
pub struct LocalizedRing {
    pub carrier: TableRing,
    /// `r ↦ 1⁻¹r`.
    pub hom: Vec<usize>,
    pub denominators: ElementSet,
    pub ass: ElementSet,
    /// Class index of each pair `(s, r)`, or `usize::MAX` when `s ∉ S`.
    classes: Vec<usize>,
}

impl LocalizedRing {
    /// Class of the fraction `s⁻¹r`.
    pub fn class_of(&self, s: usize, r: usize) -> Option<usize> {
        let n = self.hom.len();
        self.classes.get(s * n + r).copied().filter(|&c| c != usize::MAX)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Pair construction of `S⁻¹R`. Pairs `(s, r)` and `(us, ur)` with `us ∈ S`
/// are identified; two pairs are equivalent exactly when they have a common
/// expansion of this kind. Sums and products use Ore witnesses.
pub fn ore_localize(r: &TableRing, s: &ElementSet) -> Result<LocalizedRing, Error> {
    let report = check_left_denominator(r, s)?;
    let n = r.order();
    let idx = |d: usize, x: usize| d * n + x;
    let mut parent: Vec<usize> = (0..n * n).collect();
    for d in s.iter() {
        for u in r.elements() {
            let ud = r.mul(u, d);
            if !s.contains(ud) {
                continue;
            }
            for x in r.elements() {
                let (a, b) = (find(&mut parent, idx(d, x)), find(&mut parent, idx(ud, r.mul(u, x))));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    // Number classes so that 1⁻¹0 is 0, then 1⁻¹r in order, then the rest.
    let mut class_of_root = vec![usize::MAX; n * n];
    let mut reps: Vec<(usize, usize)> = Vec::new();
    let mut classes = vec![usize::MAX; n * n];
    let order = std::iter::once(r.one()).chain(s.iter().filter(|&d| d != r.one()));
    for d in order {
        for x in r.elements() {
            let root = find(&mut parent, idx(d, x));
            if class_of_root[root] == usize::MAX {
                class_of_root[root] = reps.len();
                reps.push((d, x));
            }
            classes[idx(d, x)] = class_of_root[root];
        }
    }
    // Left Ore witnesses: for (t, x) find s′ ∈ S, r′ with s′x = r′t.
    let ore = |t: usize, x: usize| -> (usize, usize) {
        for sp in s.iter() {
            let target = r.mul(sp, x);
            if let Some(rp) = r.elements().find(|&y| r.mul(y, t) == target) {
                return (sp, rp);
            }
        }
        unreachable!("left Ore condition was verified")
    };
    let m = reps.len();
    let mut add = vec![vec![0; m]; m];
    let mut mul = vec![vec![0; m]; m];
    for (i, &(s1, x1)) in reps.iter().enumerate() {
        for (j, &(s2, x2)) in reps.iter().enumerate() {
            // s′s₁ = r′s₂ gives a common denominator t = s′s₁.
            let (sp, rp) = ore(s2, s1);
            let t = r.mul(sp, s1);
            add[i][j] = classes[idx(t, r.add(r.mul(sp, x1), r.mul(rp, x2)))];
            // x₁s₂⁻¹ = s′⁻¹r′ when s′x₁ = r′s₂.
            let (sp, rp) = ore(s2, x1);
            mul[i][j] = classes[idx(r.mul(sp, s1), r.mul(rp, x2))];
        }
    }
    let labels = reps
        .iter()
        .map(|&(d, x)| if d == r.one() { r.label(x) } else { format!("{}^-1*{}", r.label(d), r.label(x)) })
        .collect();
    let guards = Guards { order: usize::MAX, ..Guards::default() };
    let one = classes[idx(r.one(), r.one())];
    let carrier = TableRing::from_tables(format!("S^-1 {}", r.name()), &add, &mul, one, Some(labels), &guards)?;
    let hom: Vec<usize> = r.elements().map(|x| classes[idx(r.one(), x)]).collect();
    let loc = LocalizedRing { carrier, hom, denominators: s.clone(), ass: report.ass_left, classes };
    loc.assert_structure(r);
    Ok(loc)
}

impl LocalizedRing {
    /// The map is a ring morphism with kernel `ass(S)`, sends `S` to units and
    /// the carrier is isomorphic to `R/ass(S)`.
    fn assert_structure(&self, r: &TableRing) {
        let c = &self.carrier;
        for x in r.elements() {
            for y in r.elements() {
                assert_eq!(self.hom[r.add(x, y)], c.add(self.hom[x], self.hom[y]), "localization map is additive");
                assert_eq!(self.hom[r.mul(x, y)], c.mul(self.hom[x], self.hom[y]), "localization map is multiplicative");
            }
        }
        let kernel = ElementSet::from_indices(r.order(), r.elements().filter(|&x| self.hom[x] == 0));
        assert_eq!(kernel, self.ass, "kernel of the localization map is ass(S)");
        assert!(self.denominators.iter().all(|d| c.is_unit(self.hom[d])), "denominators become units");
        let (quotient, _) = r.quotient(&self.ass).expect("ass of a denominator set is an ideal");
        assert!(find_isomorphism(c, &quotient).is_some(), "S⁻¹R is isomorphic to R/ass(S)");
    }

    /// An explicit isomorphism onto `R/ass(S)`, for reporting.
    pub fn iso_to_quotient(&self, r: &TableRing) -> Option<Vec<usize>> {
        let (quotient, _) = r.quotient(&self.ass).ok()?;
        find_isomorphism(&self.carrier, &quotient)
    }
}

/// The canonical map `S⁻¹R → T⁻¹R` for `S ⊆ T`, with its properties computed
/// on carriers and through the annihilator criteria.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationHom {
    pub map: Vec<usize>,
    pub mono: bool,
    pub epi: bool,
    pub iso: bool,
    /// `ass(S) = ass(T)`.
    pub mono_by_criterion: bool,
    /// `∀ t ∃ r: rt ∈ S + ass(T)`.
    pub epi_by_criterion: bool,
    /// `ass(S) = ass(T)` and `S` dense in `T`.
    pub iso_by_criterion: bool,
}

impl LocalizationHom {
    pub fn routes_agree(&self) -> bool {
        self.mono == self.mono_by_criterion && self.epi == self.epi_by_criterion && self.iso == self.iso_by_criterion
    }
}

pub fn localization_hom(r: &TableRing, s: &ElementSet, t: &ElementSet) -> Result<LocalizationHom, Error> {
    if !s.is_subset(t) {
        return Err(Error::Precondition("S ⊆ T".into()));
    }
    let ls = ore_localize(r, s)?;
    let lt = ore_localize(r, t)?;
    let m = ls.carrier.order();
    let mut map = vec![usize::MAX; m];
    for d in s.iter() {
        for x in r.elements() {
            let src = ls.class_of(d, x).unwrap();
            let dst = lt.class_of(d, x).unwrap();
            assert!(map[src] == usize::MAX || map[src] == dst, "canonical map is well defined");
            map[src] = dst;
        }
    }
    let (cs, ct) = (&ls.carrier, &lt.carrier);
    for x in cs.elements() {
        for y in cs.elements() {
            assert_eq!(map[cs.add(x, y)], ct.add(map[x], map[y]), "canonical map is additive");
            assert_eq!(map[cs.mul(x, y)], ct.mul(map[x], map[y]), "canonical map is multiplicative");
        }
    }
    let mut image = map.clone();
    image.sort_unstable();
    image.dedup();
    let mono = image.len() == m;
    let epi = image.len() == ct.order();
    let mono_by_criterion = ls.ass == lt.ass;
    let s_plus_ass: ElementSet = {
        let mut out = r.empty_set();
        for a in s.iter() {
            for b in lt.ass.iter() {
                out.insert(r.add(a, b));
            }
        }
        out
    };
    let epi_by_criterion = t.iter().all(|u| r.elements().any(|x| s_plus_ass.contains(r.mul(x, u))));
    let iso_by_criterion = mono_by_criterion && dense_check(r, s, t)?;
    Ok(LocalizationHom { map, mono, epi, iso: mono && epi, mono_by_criterion, epi_by_criterion, iso_by_criterion })
}

/// `S` is dense in `T`: every `t ∈ T` has some `r` with `rt ∈ S`.
pub fn dense_check(r: &TableRing, s: &ElementSet, t: &ElementSet) -> Result<bool, Error> {
    if !s.is_subset(t) {
        return Err(Error::Precondition("S ⊆ T".into()));
    }
    Ok(t.iter().all(|u| r.elements().any(|x| s.contains(r.mul(x, u)))))
}

/// `S_p = { c | c + p is regular in R/p }`.
pub fn s_p_set(r: &TableRing, p: &ElementSet) -> Result<MultSet, Error> {
    let (quotient, proj) = r.quotient(p)?;
    let regular = quotient.element_sets().regular;
    let preimage = ElementSet::from_indices(r.order(), r.elements().filter(|&x| regular.contains(proj[x])));
    MultSet::new(r, preimage)
}

/// `ζ_l(R, a) = { r | Ir = 0 for an essential left ideal I ⊇ a }`, checked
/// to be a two-sided ideal.
pub fn singular_ideal(r: &TableRing, a: &ElementSet, guards: &Guards) -> Result<ElementSet, Error> {
    if !is_two_sided(r, a) || a.len() == r.order() {
        return Err(Error::Precondition("singular ideal over a proper two-sided ideal".into()));
    }
    let mut zeta = r.zero_set();
    for ideal in all_left_ideals(r, guards)? {
        if a.is_subset(&ideal) && essential(r, &ideal) {
            zeta = zeta.union(&annihilator(r, &ideal, Side::Right));
        }
    }
    assert!(is_two_sided(r, &zeta), "singular ideal is a two-sided ideal");
    Ok(zeta)
}

/// A left denominator set with its annihilator ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenominatorSet {
    pub set: ElementSet,
    pub ass: ElementSet,
}

/// Maximal left denominator sets. A maximal `S` with `ass(S) = a` is the
/// preimage of the units of `R/a`, since `S⁻¹R ≅ R/a` on a finite ring and a
/// maximal set contains every element that becomes a unit. So it suffices
/// to saturate each proper two-sided ideal and keep the maximal results.
pub fn max_denominator_sets(r: &TableRing, guards: &Guards) -> Result<Vec<DenominatorSet>, Error> {
    if r.order() > guards.maxden {
        return Err(Error::Guard(format!("maximal denominator search limited to order {}", guards.maxden)));
    }
    let mut candidates: Vec<DenominatorSet> = Vec::new();
    for a in two_sided_ideals(r, guards)? {
        if a.len() == r.order() {
            continue;
        }
        let (quotient, proj) = r.quotient(&a)?;
        let units = quotient.units();
        let saturated = ElementSet::from_indices(r.order(), r.elements().filter(|&x| units.contains(proj[x])));
        let report = ore_denominator_check(r, &saturated);
        if report.left_denominator && !candidates.iter().any(|c| c.set == saturated) {
            candidates.push(DenominatorSet { set: saturated, ass: report.ass_left });
        }
    }
    let maximal = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|d| d.set != c.set && c.set.is_subset(&d.set)))
        .cloned()
        .collect();
    Ok(maximal)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargestSets {
    /// Largest left Ore set of regular elements.
    pub s_l: ElementSet,
    /// Largest left denominator set of left regular elements.
    pub s_l_left_regular: ElementSet,
    /// `None` when the order exceeds the maximal denominator guard.
    pub max_den: Option<Vec<DenominatorSet>>,
    /// Intersection of `ass(S)` over maximal denominator sets.
    pub ll_radical: Option<ElementSet>,
}

/// On a finite ring the regular and left regular elements are the units,
/// which always form a left denominator set; both largest sets are checked
/// to be the full unit group.
pub fn largest_sets(r: &TableRing, guards: &Guards) -> Result<LargestSets, Error> {
    let sets = r.element_sets();
    if !is_left_ore(r, &sets.regular) {
        return Err(Error::Precondition("regular elements are not left Ore".into()));
    }
    if !ore_denominator_check(r, &sets.left_regular).left_denominator {
        return Err(Error::Precondition("left regular elements are not a left denominator set".into()));
    }
    assert_eq!(sets.regular, sets.units, "largest left Ore set of regular elements is the unit group");
    let (max_den, ll_radical) = match max_denominator_sets(r, guards) {
        Ok(list) => {
            let radical = list.iter().fold(r.full_set(), |acc, d| acc.intersection(&d.ass));
            (Some(list), Some(radical))
        }
        Err(Error::Guard(_)) => (None, None),
        Err(e) => return Err(e),
    };
    Ok(LargestSets { s_l: sets.regular, s_l_left_regular: sets.left_regular, max_den, ll_radical })
}
