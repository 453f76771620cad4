//! Semisimplicity criteria for left regular left quotient rings, evaluated on
//! finite rings with every hypothesis computed literally.
//!
//! The conclusion "`'Q = 'C⁻¹R` is semisimple Artinian" is decided by checking
//! that the left regular elements `'C` form a left denominator set, building
//! the localization from pairs and testing its Jacobson radical. Each
//! criterion's hypotheses are computed independently of that, so agreement is
//! a real check.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::finloc::{
    dense_check, largest_sets, max_denominator_sets, ore_denominator_check, ore_localize, s_p_set, singular_ideal,
    LocalizedRing, MultSet,
};
use crate::finring::{
    all_left_ideals, annihilator, build_ring, essential, find_isomorphism, independent_family_max, is_prime,
    is_semiprime, is_two_sided, prime_spectrum, product_ring, regular_on_ideal, semisimplicity, two_sided_ideals,
    uniform, ElementSet, PrimeSpectrum, RegularMode, RingSpec, Side, TableRing,
};
use crate::{Error, Guards};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremKind {
    /// Hypotheses hold iff the conclusion holds.
    Equivalence,
    /// Hypotheses imply the conclusion; no converse is claimed.
    Sufficiency,
    /// An identity that holds unconditionally.
    Identity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Checked,
    /// A guard stopped the computation; nothing was verified.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub elements: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremRecord {
    pub name: String,
    pub kind: TheoremKind,
    pub status: Status,
    pub hypotheses: Vec<Condition>,
    /// The parts whose conjunction is the conclusion.
    pub conclusion_parts: Vec<Condition>,
    pub conclusion: Option<bool>,
    /// For equivalences, hypotheses ⟺ conclusion; for sufficiency results,
    /// hypotheses ⇒ conclusion; for identities, the identity. `None` when
    /// skipped.
    pub biconditional_ok: Option<bool>,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TheoremRecord {
    fn new(name: &str, kind: TheoremKind, hypotheses: Vec<Condition>, conclusion_parts: Vec<Condition>) -> Self {
        let hyp = hypotheses.iter().all(|c| c.holds);
        let conclusion = conclusion_parts.iter().all(|c| c.holds);
        let ok = match kind {
            TheoremKind::Equivalence => hyp == conclusion,
            TheoremKind::Sufficiency => !hyp || conclusion,
            TheoremKind::Identity => conclusion,
        };
        TheoremRecord {
            name: name.to_string(),
            kind,
            status: Status::Checked,
            hypotheses,
            conclusion_parts,
            conclusion: Some(conclusion),
            biconditional_ok: Some(ok),
            witnesses: Vec::new(),
            note: None,
        }
    }

    fn skipped(name: &str, kind: TheoremKind, reason: &Error) -> Self {
        TheoremRecord {
            name: name.to_string(),
            kind,
            status: Status::Skipped,
            hypotheses: Vec::new(),
            conclusion_parts: Vec::new(),
            conclusion: None,
            biconditional_ok: None,
            witnesses: Vec::new(),
            note: Some(reason.to_string()),
        }
    }

    fn witness(mut self, label: &str, set: &ElementSet) -> Self {
        self.witnesses.push(Witness { label: label.to_string(), elements: set.to_vec() });
        self
    }

    pub fn falsified(&self) -> bool {
        self.biconditional_ok == Some(false)
    }
}

fn cond(name: &str, holds: bool) -> Condition {
    Condition { name: name.to_string(), holds }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlobalFacts {
    /// `a = ass('C)`.
    pub ass_left_regular: Vec<usize>,
    pub prime_radical: Vec<usize>,
    pub left_regular: Vec<usize>,
    pub units: Vec<usize>,
    pub left_regular_quotient_semisimple: bool,
    pub classical_quotient_semisimple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriteriaReport {
    pub ring: String,
    pub order: usize,
    pub facts: GlobalFacts,
    pub theorems: Vec<TheoremRecord>,
}

impl CriteriaReport {
    pub fn record(&self, name: &str) -> Option<&TheoremRecord> {
        self.theorems.iter().find(|t| t.name == name)
    }

    pub fn falsified(&self) -> Vec<&TheoremRecord> {
        self.theorems.iter().filter(|t| t.falsified()).collect()
    }
}

/// Theorem record names, in report order.
pub const THEOREMS: &[&str] = &[
    "goldie",
    "finite_ring_collapse",
    "semiprime_ass_with_uniform_ideals",
    "semiprime_ass_with_classical_factor_quotient",
    "simple_iff_ass_prime",
    "localization_factors_through_ass_quotient",
    "uniform_ideals_with_left_regular_elements",
    "uniform_ideal_plus_kernel_is_essential",
    "classical_quotient_via_right_annihilators",
    "classical_quotient_via_left_regular_kernels",
    "classical_quotient_via_all_kernels",
    "classical_quotient_via_left_regular_equals_regular",
    "right_noetherian_semiprime_sufficient",
    "prime_radical_inside_ass",
    "singular_ideal_inside_ass",
    "maximal_denominator_sets",
    "localization_radical_inside_ass",
    "minimal_primes_over_ass",
    "maximal_denominator_sets_are_prime_complements",
    "goldie_factors_by_minimal_primes",
    "simple_artinian_localizations",
    "dense_image_with_semisimple_radical_quotient",
    "denominator_transfer_to_factor",
    "largest_left_regular_denominator_set",
    "factor_quotient_isomorphism",
];

/// A localization attempt at a multiplicative candidate.
struct Quotient {
    denominator: bool,
    loc: Option<LocalizedRing>,
    semisimple: bool,
}

fn localize_at(r: &TableRing, s: &ElementSet, guards: &Guards) -> Result<Quotient, Error> {
    if MultSet::new(r, s.clone()).is_err() || !ore_denominator_check(r, s).left_denominator {
        return Ok(Quotient { denominator: false, loc: None, semisimple: false });
    }
    let loc = ore_localize(r, s)?;
    let semisimple = semisimplicity(&loc.carrier, guards)?.semisimple;
    Ok(Quotient { denominator: true, loc: Some(loc), semisimple })
}

/// `C⁻¹R` for the regular elements `C`.
fn classical_quotient(r: &TableRing, guards: &Guards) -> Result<Quotient, Error> {
    localize_at(r, &r.element_sets().regular, guards)
}

fn simple_artinian(r: &TableRing, guards: &Guards) -> Result<bool, Error> {
    Ok(r.order() > 1 && semisimplicity(r, guards)?.semisimple && two_sided_ideals(r, guards)?.len() == 2)
}

/// The family of one-sided annihilators `{ann(X)}`, as the intersection
/// closure of the annihilators of single elements. It is finite, so the
/// ascending chain condition holds; the size is reported.
fn annihilator_family(r: &TableRing, side: Side) -> Vec<ElementSet> {
    let singles: Vec<ElementSet> =
        r.elements().map(|x| annihilator(r, &ElementSet::from_indices(r.order(), [x]), side)).collect();
    let mut family = vec![r.full_set()];
    let mut i = 0;
    while i < family.len() {
        for s in &singles {
            let meet = family[i].intersection(s);
            if !family.contains(&meet) {
                family.push(meet);
            }
        }
        i += 1;
    }
    family
}

/// Length of the longest strictly ascending chain in `family`.
fn longest_chain(family: &[ElementSet]) -> usize {
    let mut order: Vec<&ElementSet> = family.iter().collect();
    order.sort_by_key(|s| s.len());
    let mut best = vec![1usize; order.len()];
    for i in 0..order.len() {
        for j in 0..i {
            if order[j].len() < order[i].len() && order[j].is_subset(order[i]) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Every ascending chain stabilizes iff chain lengths are bounded; for a
/// finite family the bound is at most its size.
fn acc_holds(family: &[ElementSet]) -> bool {
    longest_chain(family) <= family.len()
}

/// `{ker(c·) | c ∈ X}` with `ker(c·) = {x | cx = 0}`.
fn kernel_family(r: &TableRing, xs: &ElementSet) -> Vec<ElementSet> {
    let mut family: Vec<ElementSet> = xs
        .iter()
        .map(|c| ElementSet::from_indices(r.order(), r.elements().filter(|&x| r.mul(c, x) == 0)))
        .collect();
    family.sort();
    family.dedup();
    family
}

/// True when `'C_U ≠ ∅` for all uniform left ideals `U`; otherwise returns
/// a uniform ideal without such elements.
fn uniform_ideals_have_regular(r: &TableRing, ideals: &[ElementSet]) -> (bool, Option<ElementSet>) {
    for u in ideals {
        if uniform(r, u) && regular_on_ideal(r, u, RegularMode::WithinIdeal).is_empty() {
            return (false, Some(u.clone()));
        }
    }
    (true, None)
}

fn left_goldie(r: &TableRing, guards: &Guards) -> Result<bool, Error> {
    let family = annihilator_family(r, Side::Left);
    let udim = independent_family_max(r, &r.full_set());
    all_left_ideals(r, guards)?;
    Ok(acc_holds(&family) && udim <= r.order())
}

fn image(set: &ElementSet, proj: &[usize], order: usize) -> ElementSet {
    ElementSet::from_indices(order, set.iter().map(|x| proj[x]))
}

/// `S ⊆ T` and `S` dense in `T`.
fn dense_in(r: &TableRing, s: &ElementSet, t: &ElementSet) -> bool {
    s.is_subset(t) && dense_check(r, s, t).unwrap_or(false)
}

fn isomorphic(a: &TableRing, b: &TableRing) -> bool {
    find_isomorphism(a, b).is_some()
}

/// `R/a` with its projection, when `a` is a proper two-sided ideal.
struct Factor {
    ring: TableRing,
    proj: Vec<usize>,
}

struct Ctx<'a> {
    r: &'a TableRing,
    guards: &'a Guards,
    /// `'C`.
    lreg: ElementSet,
    /// `C`.
    reg: ElementSet,
    units: ElementSet,
    /// `ass('C)`.
    a: ElementSet,
    a_ideal: bool,
    bar: Option<Factor>,
    spectrum: PrimeSpectrum,
    ideals: Vec<ElementSet>,
    udim: usize,
    /// `'C⁻¹R`.
    lrq: Quotient,
    /// `C⁻¹R`.
    qcl: Quotient,
}

impl<'a> Ctx<'a> {
    fn new(r: &'a TableRing, guards: &'a Guards) -> Result<Self, Error> {
        let sets = r.element_sets();
        let lreg = sets.left_regular.clone();
        let a = crate::finloc::ass_left(r, &lreg);
        let a_ideal = is_two_sided(r, &a) && a.len() < r.order();
        let bar = if a_ideal {
            let (ring, proj) = r.quotient(&a)?;
            Some(Factor { ring, proj })
        } else {
            None
        };
        let spectrum = prime_spectrum(r, guards)?;
        let ideals = all_left_ideals(r, guards)?;
        let udim = independent_family_max(r, &r.full_set());
        let lrq = localize_at(r, &lreg, guards)?;
        let qcl = localize_at(r, &sets.regular, guards)?;
        Ok(Ctx { r, guards, lreg, reg: sets.regular, units: sets.units, a, a_ideal, bar, spectrum, ideals, udim, lrq, qcl })
    }

    fn q_semisimple(&self) -> bool {
        self.lrq.denominator && self.lrq.semisimple
    }

    fn a_semiprime_ideal(&self) -> bool {
        self.a_ideal && is_semiprime(self.r, &self.a)
    }

    /// `π('C)` in `R/a`.
    fn lreg_image(&self) -> Option<ElementSet> {
        self.bar.as_ref().map(|b| image(&self.lreg, &b.proj, b.ring.order()))
    }

    /// `π('C)` dense in the regular elements of `R/a`.
    fn dense_in_bar_regular(&self) -> bool {
        match (&self.bar, self.lreg_image()) {
            (Some(b), Some(img)) => dense_in(&b.ring, &img, &b.ring.element_sets().regular),
            _ => false,
        }
    }

    fn minimal_primes_over_a(&self) -> Vec<ElementSet> {
        if self.a_ideal {
            self.spectrum.minimal_primes_over(&self.a)
        } else {
            Vec::new()
        }
    }

    fn facts(&self) -> GlobalFacts {
        GlobalFacts {
            ass_left_regular: self.a.to_vec(),
            prime_radical: self.spectrum.prime_radical.to_vec(),
            left_regular: self.lreg.to_vec(),
            units: self.units.to_vec(),
            left_regular_quotient_semisimple: self.q_semisimple(),
            classical_quotient_semisimple: self.qcl.denominator && self.qcl.semisimple,
        }
    }

    fn goldie(&self) -> Result<TheoremRecord, Error> {
        let family = annihilator_family(self.r, Side::Left);
        let rec = TheoremRecord::new(
            "goldie",
            TheoremKind::Equivalence,
            vec![
                cond("semiprime", is_semiprime(self.r, &self.r.zero_set())),
                cond("finite_uniform_dimension", self.udim <= self.r.order()),
                cond("acc_left_annihilators", acc_holds(&family)),
            ],
            vec![cond("classical_quotient_semisimple", self.qcl.denominator && self.qcl.semisimple)],
        );
        Ok(rec.witness("prime_radical", &self.spectrum.prime_radical))
    }

    /// `'C = C = units`, `'Q ≅ R`, and semisimplicity of `R` decided two ways.
    fn collapse(&self) -> Result<TheoremRecord, Error> {
        let sets = self.r.element_sets();
        let q_iso_r = self.lrq.loc.as_ref().is_some_and(|l| isomorphic(&l.carrier, self.r));
        let by_jacobson = semisimplicity(self.r, self.guards)?.semisimple;
        let by_primes = self.spectrum.prime_radical.is_zero_ideal() && is_semiprime(self.r, &self.r.zero_set());
        Ok(TheoremRecord::new(
            "finite_ring_collapse",
            TheoremKind::Identity,
            vec![],
            vec![
                cond("left_regular_equals_units", sets.left_regular == sets.units),
                cond("right_regular_equals_units", sets.right_regular == sets.units),
                cond("regular_equals_units", sets.regular == sets.units),
                cond("ass_is_zero", self.a.is_zero_ideal()),
                cond("left_regular_quotient_isomorphic_to_ring", q_iso_r),
                cond("semisimple_by_jacobson_matches_prime_radical", by_jacobson == by_primes),
                cond("semisimple_matches_left_regular_quotient", by_jacobson == self.q_semisimple()),
            ],
        ))
    }

    fn semiprime_ass_uniform(&self) -> Result<TheoremRecord, Error> {
        let (dense, udim_bar, uniform_ok, bad) = match (&self.bar, self.lreg_image()) {
            (Some(b), Some(img)) => {
                let lreg_bar = b.ring.element_sets().left_regular;
                let ideals = all_left_ideals(&b.ring, self.guards)?;
                let (ok, bad) = uniform_ideals_have_regular(&b.ring, &ideals);
                let udim = independent_family_max(&b.ring, &b.ring.full_set());
                (dense_in(&b.ring, &img, &lreg_bar), udim <= b.ring.order(), ok, bad)
            }
            _ => (false, false, false, None),
        };
        let mut rec = TheoremRecord::new(
            "semiprime_ass_with_uniform_ideals",
            TheoremKind::Equivalence,
            vec![
                cond("ass_is_semiprime_ideal", self.a_semiprime_ideal()),
                cond("image_dense_in_factor_left_regular", dense),
                cond("factor_finite_uniform_dimension", udim_bar),
                cond("factor_uniform_ideals_have_left_regular", uniform_ok),
            ],
            vec![cond("left_regular_quotient_semisimple", self.q_semisimple())],
        )
        .witness("ass", &self.a);
        if let Some(u) = bad {
            rec = rec.witness("uniform_ideal_without_left_regular", &u);
        }
        Ok(rec)
    }

    fn semiprime_ass_classical(&self) -> Result<TheoremRecord, Error> {
        let qcl_bar = match &self.bar {
            Some(b) => {
                let q = classical_quotient(&b.ring, self.guards)?;
                q.denominator && q.semisimple
            }
            None => false,
        };
        Ok(TheoremRecord::new(
            "semiprime_ass_with_classical_factor_quotient",
            TheoremKind::Equivalence,
            vec![
                cond("ass_is_semiprime_ideal", self.a_semiprime_ideal()),
                cond("image_dense_in_factor_regular", self.dense_in_bar_regular()),
                cond("factor_classical_quotient_semisimple", qcl_bar),
            ],
            vec![cond("left_regular_quotient_semisimple", self.q_semisimple())],
        ))
    }

    fn simple_iff_prime(&self) -> Result<TheoremRecord, Error> {
        let simple = match &self.lrq.loc {
            Some(l) => simple_artinian(&l.carrier, self.guards)?,
            None => false,
        };
        let prime = self.a_ideal && is_prime(self.r, &self.a);
        Ok(TheoremRecord::new(
            "simple_iff_ass_prime",
            TheoremKind::Sufficiency,
            vec![cond("left_regular_quotient_semisimple", self.q_semisimple())],
            vec![cond("quotient_simple_iff_ass_prime", simple == prime)],
        ))
    }

    /// `π('C) ∈ Den_l(R/a, 0)`, dense in `C_{R/a}`, and
    /// `'Q ≅ π('C)⁻¹(R/a) ≅ Q_cl(R/a)`.
    fn factors_through(&self) -> Result<TheoremRecord, Error> {
        let mut parts = vec![];
        if let (Some(b), Some(img), Some(q)) = (&self.bar, self.lreg_image(), &self.lrq.loc) {
            let rep = ore_denominator_check(&b.ring, &img);
            let loc_bar = localize_at(&b.ring, &img, self.guards)?;
            let qcl_bar = classical_quotient(&b.ring, self.guards)?;
            parts.push(cond("image_left_denominator_with_zero_ass", rep.left_denominator && rep.ass_left.is_zero_ideal()));
            parts.push(cond("image_dense_in_factor_regular", self.dense_in_bar_regular()));
            let iso1 = loc_bar.loc.as_ref().is_some_and(|l| isomorphic(&q.carrier, &l.carrier));
            let iso2 = qcl_bar.loc.as_ref().is_some_and(|l| isomorphic(&q.carrier, &l.carrier));
            parts.push(cond("quotient_isomorphic_to_factor_localization", iso1));
            parts.push(cond("quotient_isomorphic_to_factor_classical_quotient", iso2));
        } else {
            parts.push(cond("ass_ideal_and_quotient_exists", false));
        }
        Ok(TheoremRecord::new(
            "localization_factors_through_ass_quotient",
            TheoremKind::Sufficiency,
            vec![cond("left_regular_quotient_semisimple", self.q_semisimple())],
            parts,
        ))
    }

    fn uniform_sufficient(&self) -> Result<TheoremRecord, Error> {
        let (uniform_ok, bad) = uniform_ideals_have_regular(self.r, &self.ideals);
        let r = self.r;
        let mut parts = vec![
            cond("left_regular_left_denominator_with_ass", self.lrq.denominator),
            cond("left_regular_quotient_semisimple", self.q_semisimple()),
        ];
        let qcl_bar = match &self.bar {
            Some(b) => classical_quotient(&b.ring, self.guards)?,
            None => Quotient { denominator: false, loc: None, semisimple: false },
        };
        let iso = match (&self.lrq.loc, &qcl_bar.loc) {
            (Some(x), Some(y)) => isomorphic(&x.carrier, &y.carrier),
            _ => false,
        };
        parts.push(cond("quotient_isomorphic_to_factor_classical_quotient", iso));
        // 'C = { c | ·c̄ injective on R/a and ·c injective on a }.
        let described = match &self.bar {
            Some(b) => {
                let lreg_bar = b.ring.element_sets().left_regular;
                let on_a = regular_on_ideal(r, &self.a, RegularMode::FromRing);
                let set = ElementSet::from_indices(
                    r.order(),
                    r.elements().filter(|&c| lreg_bar.contains(b.proj[c]) && on_a.contains(c)),
                );
                let units_q = match &self.lrq.loc {
                    Some(l) => ElementSet::from_indices(
                        r.order(),
                        r.elements().filter(|&c| l.carrier.is_unit(l.hom[c]) && on_a.contains(c)),
                    ),
                    None => r.empty_set(),
                };
                let bar_sets = b.ring.element_sets();
                set == self.lreg && units_q == self.lreg && bar_sets.left_regular == bar_sets.regular
            }
            None => false,
        };
        parts.push(cond("left_regular_described_by_factor_and_ass", described));
        let essential_meet = self.ideals.iter().filter(|i| essential(r, i)).all(|i| !i.intersection(&self.lreg).is_empty());
        parts.push(cond("essential_left_ideals_meet_left_regular", essential_meet));
        parts.push(cond("prime_radical_inside_ass", self.spectrum.prime_radical.is_subset(&self.a)));
        let mut rec = TheoremRecord::new(
            "uniform_ideals_with_left_regular_elements",
            TheoremKind::Sufficiency,
            vec![
                cond("finite_uniform_dimension", self.udim <= r.order()),
                cond("uniform_ideals_have_left_regular", uniform_ok),
            ],
            parts,
        );
        if let Some(u) = bad {
            rec = rec.witness("uniform_ideal_without_left_regular", &u);
        }
        Ok(rec)
    }

    /// For uniform `U` and `u ∈ 'C_U`, `U ∩ ker(·u) = 0` and `U ⊕ ker(·u)` is
    /// an essential left ideal.
    fn uniform_plus_kernel(&self) -> Result<TheoremRecord, Error> {
        let r = self.r;
        let mut ok = true;
        let mut pairs = 0usize;
        for u_ideal in self.ideals.iter().filter(|i| uniform(r, i)) {
            for u in regular_on_ideal(r, u_ideal, RegularMode::WithinIdeal).iter() {
                let kernel = ElementSet::from_indices(r.order(), r.elements().filter(|&x| r.mul(x, u) == 0));
                let sum = crate::finring::left_ideal_closure(r, &u_ideal.union(&kernel));
                let direct = u_ideal.intersection(&kernel).is_zero_ideal();
                ok &= direct && essential(r, &sum);
                pairs += 1;
            }
        }
        let mut rec = TheoremRecord::new(
            "uniform_ideal_plus_kernel_is_essential",
            TheoremKind::Identity,
            vec![],
            vec![cond("direct_and_essential_for_all_pairs", ok)],
        );
        rec.note = Some(format!("{pairs} (U, u) pairs checked"));
        Ok(rec)
    }

    fn classical_base(&self) -> (Condition, Condition, Condition, Option<ElementSet>) {
        let (uniform_ok, bad) = uniform_ideals_have_regular(self.r, &self.ideals);
        (
            cond("semiprime", is_semiprime(self.r, &self.r.zero_set())),
            cond("finite_uniform_dimension", self.udim <= self.r.order()),
            cond("uniform_ideals_have_left_regular", uniform_ok),
            bad,
        )
    }

    fn classical_variant(&self, name: &str, chain: Condition) -> TheoremRecord {
        let (semiprime, udim, uniform_ok, bad) = self.classical_base();
        let mut rec = TheoremRecord::new(
            name,
            TheoremKind::Equivalence,
            vec![semiprime, udim, chain, uniform_ok],
            vec![cond("classical_quotient_semisimple", self.qcl.denominator && self.qcl.semisimple)],
        );
        if let Some(u) = bad {
            rec = rec.witness("uniform_ideal_without_left_regular", &u);
        }
        rec
    }

    fn classical_records(&self) -> Vec<TheoremRecord> {
        let r = self.r;
        let right = annihilator_family(r, Side::Right);
        let lreg_kernels = kernel_family(r, &self.lreg);
        let all_kernels = kernel_family(r, &r.full_set());
        let mut out = vec![
            self.classical_variant(
                "classical_quotient_via_right_annihilators",
                cond("acc_right_annihilators", acc_holds(&right)),
            ),
            self.classical_variant(
                "classical_quotient_via_left_regular_kernels",
                cond("acc_kernels_of_left_regular", acc_holds(&lreg_kernels)),
            ),
            self.classical_variant(
                "classical_quotient_via_all_kernels",
                cond("acc_kernels_of_all_elements", acc_holds(&all_kernels)),
            ),
            self.classical_variant(
                "classical_quotient_via_left_regular_equals_regular",
                cond("left_regular_equals_regular", self.lreg == self.reg),
            ),
        ];
        let (semiprime, udim, uniform_ok, _) = self.classical_base();
        out.push(TheoremRecord::new(
            "right_noetherian_semiprime_sufficient",
            TheoremKind::Sufficiency,
            vec![semiprime, cond("right_noetherian", true), udim, uniform_ok],
            vec![cond("classical_quotient_semisimple", self.qcl.denominator && self.qcl.semisimple)],
        ));
        out
    }

    fn radical_inside(&self) -> Result<TheoremRecord, Error> {
        Ok(TheoremRecord::new(
            "prime_radical_inside_ass",
            TheoremKind::Sufficiency,
            vec![cond("left_regular_quotient_semisimple", self.q_semisimple())],
            vec![cond("prime_radical_inside_ass", self.spectrum.prime_radical.is_subset(&self.a))],
        ))
    }

    fn singular_inside(&self) -> Result<TheoremRecord, Error> {
        let zeta = if self.a_ideal { Some(singular_ideal(self.r, &self.a, self.guards)?) } else { None };
        let inside = zeta.as_ref().is_some_and(|z| z.is_subset(&self.a));
        let mut rec = TheoremRecord::new(
            "singular_ideal_inside_ass",
            TheoremKind::Sufficiency,
            vec![cond("left_regular_quotient_semisimple", self.q_semisimple())],
            vec![cond("singular_ideal_over_ass_inside_ass", inside)],
        );
        if let Some(z) = zeta {
            rec = rec.witness("singular_ideal_over_ass", &z);
        }
        Ok(rec)
    }

    /// `'M`: maximal denominator sets containing `'C`.
    fn m_prime(&self) -> Result<Vec<crate::finloc::DenominatorSet>, Error> {
        Ok(max_denominator_sets(self.r, self.guards)?.into_iter().filter(|d| self.lreg.is_subset(&d.set)).collect())
    }

    fn maximal_denominator(&self) -> Result<TheoremRecord, Error> {
        let m = self.m_prime()?;
        let meet = m.iter().fold(self.r.full_set(), |acc, d| acc.intersection(&d.ass));
        let mut all_simple = true;
        for d in &m {
            let q = localize_at(self.r, &d.set, self.guards)?;
            all_simple &= match &q.loc {
                Some(l) => simple_artinian(&l.carrier, self.guards)?,
                None => false,
            };
        }
        Ok(TheoremRecord::new(
            "maximal_denominator_sets",
            TheoremKind::Equivalence,
            vec![
                cond("finite_nonempty", !m.is_empty()),
                cond("intersection_of_ass_is_ass", meet == self.a),
                cond("localizations_simple_artinian", all_simple),
                cond("image_dense_in_factor_regular", self.dense_in_bar_regular()),
            ],
            vec![cond("left_regular_quotient_semisimple", self.q_semisimple())],
        ))
    }

    fn localization_radical(&self) -> Result<TheoremRecord, Error> {
        let sets = largest_sets(self.r, self.guards)?;
        let Some(ll) = sets.ll_radical else {
            return Err(Error::Guard(format!("maximal denominator search limited to order {}", self.guards.maxden)));
        };
        Ok(TheoremRecord::new(
            "localization_radical_inside_ass",
            TheoremKind::Sufficiency,
            vec![cond("left_regular_quotient_semisimple", self.q_semisimple())],
            vec![cond("localization_radical_inside_ass", ll.is_subset(&self.a))],
        )
        .witness("localization_radical", &ll))
    }

    /// `S_p` for each minimal prime over `a`, with its localization.
    fn s_p_family(&self) -> Result<Vec<(ElementSet, ElementSet, Quotient)>, Error> {
        let mut out = Vec::new();
        for p in self.minimal_primes_over_a() {
            let s = s_p_set(self.r, &p)?.into_elements();
            let q = localize_at(self.r, &s, self.guards)?;
            out.push((p, s, q));
        }
        Ok(out)
    }

    fn minimal_primes(&self) -> Result<TheoremRecord, Error> {
        let family = self.s_p_family()?;
        let mut den_ass = self.a_ideal;
        let mut simple = self.a_ideal;
        for (p, s, q) in &family {
            den_ass &= q.denominator && &ore_denominator_check(self.r, s).ass_left == p;
            simple &= match &q.loc {
                Some(l) => simple_artinian(&l.carrier, self.guards)?,
                None => false,
            };
        }
        Ok(TheoremRecord::new(
            "minimal_primes_over_ass",
            TheoremKind::Equivalence,
            vec![
                cond("ass_semiprime_with_finitely_many_minimal_primes", self.a_semiprime_ideal()),
                cond("prime_complements_are_denominators_with_ass_p", den_ass),
                cond("prime_complement_localizations_simple_artinian", simple),
                cond("image_dense_in_factor_regular", self.dense_in_bar_regular()),
            ],
            vec![cond("left_regular_quotient_semisimple", self.q_semisimple())],
        ))
    }

    fn prime_complements_maximal(&self) -> Result<TheoremRecord, Error> {
        let m = self.m_prime()?;
        let family = self.s_p_family()?;
        let mut from_m: Vec<ElementSet> = m.iter().map(|d| d.set.clone()).collect();
        let mut from_p: Vec<ElementSet> = family.iter().map(|(_, s, _)| s.clone()).collect();
        from_m.sort();
        from_p.sort();
        let ass_ok = family.iter().all(|(p, s, _)| &ore_denominator_check(self.r, s).ass_left == p);
        Ok(TheoremRecord::new(
            "maximal_denominator_sets_are_prime_complements",
            TheoremKind::Sufficiency,
            vec![cond("left_regular_quotient_semisimple", self.q_semisimple())],
            vec![cond("maximal_sets_equal_prime_complements", from_m == from_p), cond("ass_of_complement_is_prime", ass_ok)],
        ))
    }

    fn goldie_factors(&self) -> Result<TheoremRecord, Error> {
        let mut goldie = self.a_ideal;
        for p in self.minimal_primes_over_a() {
            let (factor, _) = self.r.quotient(&p)?;
            goldie &= left_goldie(&factor, self.guards)?;
        }
        Ok(TheoremRecord::new(
            "goldie_factors_by_minimal_primes",
            TheoremKind::Equivalence,
            vec![
                cond("ass_semiprime_with_finitely_many_minimal_primes", self.a_semiprime_ideal()),
                cond("factors_by_minimal_primes_left_goldie", goldie),
                cond("image_dense_in_factor_regular", self.dense_in_bar_regular()),
            ],
            vec![cond("left_regular_quotient_semisimple", self.q_semisimple())],
        ))
    }

    /// The existential family is instantiated with the prime complements.
    fn simple_localizations(&self) -> Result<TheoremRecord, Error> {
        let family = self.s_p_family()?;
        let mut simple = !family.is_empty();
        let mut meet = self.r.full_set();
        for (_, s, q) in &family {
            simple &= match &q.loc {
                Some(l) => simple_artinian(&l.carrier, self.guards)?,
                None => false,
            };
            meet = meet.intersection(&ore_denominator_check(self.r, s).ass_left);
        }
        Ok(TheoremRecord::new(
            "simple_artinian_localizations",
            TheoremKind::Equivalence,
            vec![
                cond("denominator_sets_with_simple_artinian_localizations", simple),
                cond("intersection_of_ass_is_ass", family.iter().all(|(_, _, q)| q.denominator) && meet == self.a),
                cond("image_dense_in_factor_regular", self.dense_in_bar_regular()),
            ],
            vec![cond("left_regular_quotient_semisimple", self.q_semisimple())],
        ))
    }

    fn dense_image_radical(&self) -> Result<TheoremRecord, Error> {
        let r = self.r;
        let n = &self.spectrum.prime_radical;
        let (r_n, _) = r.quotient(n)?;
        let qcl_n = classical_quotient(&r_n, self.guards)?;
        // a is an intersection of minimal primes iff it equals the intersection
        // of all minimal primes containing it.
        let over: Vec<&ElementSet> = self.spectrum.minimal_primes.iter().filter(|p| self.a.is_subset(p)).collect();
        let meet = over.iter().fold(r.full_set(), |acc, p| acc.intersection(p));
        let a_is_meet = self.a_ideal && !over.is_empty() && meet == self.a;
        let mut parts = vec![cond("left_regular_quotient_semisimple", self.q_semisimple())];
        let mut primes_over: Vec<ElementSet> = self.minimal_primes_over_a();
        let mut chosen: Vec<ElementSet> = over.iter().map(|p| (*p).clone()).collect();
        primes_over.sort();
        chosen.sort();
        parts.push(cond("minimal_primes_over_ass_are_the_chosen_primes", primes_over == chosen));
        let family = self.s_p_family()?;
        let mut locals = Vec::new();
        let mut den_ok = true;
        for (p, s, q) in &family {
            den_ok &= q.denominator && &ore_denominator_check(r, s).ass_left == p;
            if let Some(l) = &q.loc {
                den_ok &= simple_artinian(&l.carrier, self.guards)?;
                locals.push(l.carrier.clone());
            }
        }
        parts.push(cond("prime_complements_denominators_with_simple_localizations", den_ok));
        let product_iso = match (&qcl_n.loc, locals.len() == family.len() && !locals.is_empty()) {
            (Some(q), true) => match product_ring(&locals, self.guards) {
                Ok(prod) => isomorphic(&q.carrier, &prod),
                Err(e) if e.is_resource_limit() => return Err(e),
                Err(_) => false,
            },
            _ => false,
        };
        parts.push(cond("radical_factor_quotient_is_product_of_localizations", product_iso));
        Ok(TheoremRecord::new(
            "dense_image_with_semisimple_radical_quotient",
            TheoremKind::Sufficiency,
            vec![
                cond("radical_factor_classical_quotient_semisimple", qcl_n.denominator && qcl_n.semisimple),
                cond("ass_is_intersection_of_minimal_primes", a_is_meet),
                cond("image_dense_in_factor_regular", self.dense_in_bar_regular()),
            ],
            parts,
        ))
    }

    /// For `S = 'C` with `a` an ideal: `S ∈ Den_l(R, a)` iff `π(S) ∈ Den_l(R/a, 0)`
    /// iff `π(S)` left Ore iff `S` left Ore; and a left Ore image forces a
    /// denominator set.
    fn denominator_transfer(&self) -> Result<TheoremRecord, Error> {
        let r = self.r;
        let mut parts = Vec::new();
        if let (Some(b), Some(img)) = (&self.bar, self.lreg_image()) {
            let rep = ore_denominator_check(r, &self.lreg);
            let rep_bar = ore_denominator_check(&b.ring, &img);
            let flags = [
                rep.left_denominator && rep.ass_left == self.a,
                rep_bar.left_denominator && rep_bar.ass_left.is_zero_ideal(),
                rep_bar.left_ore,
                rep.left_ore,
            ];
            parts.push(cond("four_denominator_flags_agree", flags.iter().all(|&f| f == flags[0])));
            parts.push(cond("image_inside_factor_regular", img.is_subset(&b.ring.element_sets().regular)));
            parts.push(cond("left_ore_image_forces_denominator", !rep_bar.left_ore || rep.left_denominator));
        } else {
            parts.push(cond("ass_is_ideal", false));
        }
        Ok(TheoremRecord::new("denominator_transfer_to_factor", TheoremKind::Identity, vec![], parts))
    }

    fn largest_left_regular(&self) -> Result<TheoremRecord, Error> {
        let r = self.r;
        let sets = largest_sets(r, self.guards)?;
        let s = &sets.s_l_left_regular;
        let a_prime = ore_denominator_check(r, s).ass_left;
        let mut s_plus = r.empty_set();
        for x in s.iter() {
            for y in a_prime.iter() {
                s_plus.insert(r.add(x, y));
            }
        }
        let first = *s == self.lreg.intersection(&s_plus);
        let rep = ore_denominator_check(r, &s_plus);
        let den = MultSet::new(r, s_plus.clone()).is_ok() && rep.left_denominator && rep.ass_left == a_prime;
        let iso = match (localize_at(r, s, self.guards)?.loc, localize_at(r, &s_plus, self.guards)?.loc) {
            (Some(x), Some(y)) => isomorphic(&x.carrier, &y.carrier),
            _ => false,
        };
        Ok(TheoremRecord::new(
            "largest_left_regular_denominator_set",
            TheoremKind::Identity,
            vec![],
            vec![
                cond("largest_set_is_left_regular_part_of_saturation", first),
                cond("saturation_is_denominator_with_same_ass", den),
                cond("localizations_isomorphic", iso),
            ],
        ))
    }

    /// The Ore hypothesis on `C_{R/a}` is taken in `R/a`.
    fn factor_quotient_iso(&self) -> Result<TheoremRecord, Error> {
        let r = self.r;
        let (hyps, parts) = match (&self.bar, self.lreg_image()) {
            (Some(b), Some(img)) => {
                let reg_bar = b.ring.element_sets().regular;
                let ore_bar = crate::finloc::is_left_ore(&b.ring, &reg_bar);
                let hyps = vec![
                    cond("ass_is_ideal", true),
                    cond("image_dense_in_factor_regular", self.dense_in_bar_regular()),
                    cond("factor_regular_left_ore", ore_bar),
                ];
                let rep = ore_denominator_check(r, &self.lreg);
                let rep_bar = ore_denominator_check(&b.ring, &img);
                let pre = ElementSet::from_indices(r.order(), r.elements().filter(|&x| reg_bar.contains(b.proj[x])));
                let rep_pre = ore_denominator_check(r, &pre);
                let q_img = localize_at(&b.ring, &img, self.guards)?;
                let q_pre = localize_at(r, &pre, self.guards)?;
                let q_bar = classical_quotient(&b.ring, self.guards)?;
                let carriers: Vec<Option<&TableRing>> = vec![
                    self.lrq.loc.as_ref().map(|l| &l.carrier),
                    q_img.loc.as_ref().map(|l| &l.carrier),
                    q_pre.loc.as_ref().map(|l| &l.carrier),
                    q_bar.loc.as_ref().map(|l| &l.carrier),
                ];
                let chain = carriers.iter().all(Option::is_some)
                    && carriers.windows(2).all(|w| isomorphic(w[0].unwrap(), w[1].unwrap()));
                let parts = vec![
                    cond("left_regular_denominator_with_ass", rep.left_denominator && rep.ass_left == self.a),
                    cond("image_denominator_with_zero_ass", rep_bar.left_denominator && rep_bar.ass_left.is_zero_ideal()),
                    cond("preimage_denominator_with_ass", rep_pre.left_denominator && rep_pre.ass_left == self.a),
                    cond("left_regular_inside_preimage", self.lreg.is_subset(&pre)),
                    cond("four_localizations_isomorphic", chain),
                ];
                (hyps, parts)
            }
            _ => (vec![cond("ass_is_ideal", false)], vec![]),
        };
        Ok(TheoremRecord::new("factor_quotient_isomorphism", TheoremKind::Sufficiency, hyps, parts))
    }
}

fn guarded(name: &str, kind: TheoremKind, f: impl FnOnce() -> Result<TheoremRecord, Error>) -> Result<TheoremRecord, Error> {
    match f() {
        Ok(rec) => Ok(rec),
        Err(e) if e.is_resource_limit() => Ok(TheoremRecord::skipped(name, kind, &e)),
        Err(e) => Err(e),
    }
}

/// Evaluates every criterion on `r`. Guard failures mark the affected
/// records as skipped.
pub fn evaluate(r: &TableRing, guards: &Guards) -> Result<CriteriaReport, Error> {
    let ctx = Ctx::new(r, guards)?;
    use TheoremKind::*;
    let mut theorems = vec![
        guarded("goldie", Equivalence, || ctx.goldie())?,
        guarded("finite_ring_collapse", Identity, || ctx.collapse())?,
        guarded("semiprime_ass_with_uniform_ideals", Equivalence, || ctx.semiprime_ass_uniform())?,
        guarded("semiprime_ass_with_classical_factor_quotient", Equivalence, || ctx.semiprime_ass_classical())?,
        guarded("simple_iff_ass_prime", Sufficiency, || ctx.simple_iff_prime())?,
        guarded("localization_factors_through_ass_quotient", Sufficiency, || ctx.factors_through())?,
        guarded("uniform_ideals_with_left_regular_elements", Sufficiency, || ctx.uniform_sufficient())?,
        guarded("uniform_ideal_plus_kernel_is_essential", Identity, || ctx.uniform_plus_kernel())?,
    ];
    theorems.extend(ctx.classical_records());
    theorems.extend([
        guarded("prime_radical_inside_ass", Sufficiency, || ctx.radical_inside())?,
        guarded("singular_ideal_inside_ass", Sufficiency, || ctx.singular_inside())?,
        guarded("maximal_denominator_sets", Equivalence, || ctx.maximal_denominator())?,
        guarded("localization_radical_inside_ass", Sufficiency, || ctx.localization_radical())?,
        guarded("minimal_primes_over_ass", Equivalence, || ctx.minimal_primes())?,
        guarded("maximal_denominator_sets_are_prime_complements", Sufficiency, || ctx.prime_complements_maximal())?,
        guarded("goldie_factors_by_minimal_primes", Equivalence, || ctx.goldie_factors())?,
        guarded("simple_artinian_localizations", Equivalence, || ctx.simple_localizations())?,
        guarded("dense_image_with_semisimple_radical_quotient", Sufficiency, || ctx.dense_image_radical())?,
        guarded("denominator_transfer_to_factor", Identity, || ctx.denominator_transfer())?,
        guarded("largest_left_regular_denominator_set", Identity, || ctx.largest_left_regular())?,
        guarded("factor_quotient_isomorphism", Sufficiency, || ctx.factor_quotient_iso())?,
    ]);
    debug_assert_eq!(theorems.iter().map(|t| t.name.as_str()).collect::<Vec<_>>(), THEOREMS);
    Ok(CriteriaReport { ring: r.name().to_string(), order: r.order(), facts: ctx.facts(), theorems })
}

/// Evaluates only the named records, keeping report order.
pub fn evaluate_selected(r: &TableRing, guards: &Guards, names: &[String]) -> Result<CriteriaReport, Error> {
    if let Some(bad) = names.iter().find(|n| !THEOREMS.contains(&n.as_str())) {
        return Err(Error::Invalid(format!("unknown theorem '{bad}'")));
    }
    let mut report = evaluate(r, guards)?;
    report.theorems.retain(|t| names.iter().any(|n| n == &t.name));
    Ok(report)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub skipped: usize,
    pub falsified: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub reports: Vec<CriteriaReport>,
    pub per_theorem: BTreeMap<String, Tally>,
    /// `(ring, theorem)` pairs whose statement failed.
    pub falsifications: Vec<(String, String)>,
}

impl CorpusSummary {
    pub fn ok(&self) -> bool {
        self.falsifications.is_empty()
    }
}

/// Evaluates each ring on its own thread and merges reports in input order.
pub fn corpus_run(rings: &[TableRing], guards: &Guards) -> Result<CorpusSummary, Error> {
    let results: Vec<Result<CriteriaReport, Error>> = std::thread::scope(|scope| {
        let handles: Vec<_> = rings.iter().map(|r| scope.spawn(move || evaluate(r, guards))).collect();
        handles.into_iter().map(|h| h.join().expect("criteria evaluation panicked")).collect()
    });
    let mut summary = CorpusSummary::default();
    for report in results {
        let report = report?;
        for t in &report.theorems {
            let tally = summary.per_theorem.entry(t.name.clone()).or_default();
            match t.status {
                Status::Checked => tally.checked += 1,
                Status::Skipped => tally.skipped += 1,
            }
            if t.falsified() {
                tally.falsified += 1;
                summary.falsifications.push((report.ring.clone(), t.name.clone()));
            }
        }
        summary.reports.push(report);
    }
    Ok(summary)
}

/// Ring specs of the default corpus.
pub const DEFAULT_CORPUS: &[&str] = &[
    "Z4",
    "Z6",
    "product(F2,F2)",
    "matrix(F2,2)",
    "triangular(F2,2)",
    "product(matrix(F2,2),Z4)",
    "Z8",
    "F4",
    "triangular(F2,3)",
    "Z9",
    "Z2",
    "Z12",
];

/// The default corpus, plus each non-semiprime ring modulo its prime radical.
pub fn default_corpus(guards: &Guards) -> Result<Vec<TableRing>, Error> {
    let mut rings = Vec::new();
    for spec in DEFAULT_CORPUS {
        let r = match build_ring(&RingSpec::parse(spec)?, guards) {
            Ok(r) => r,
            Err(Error::Guard(_)) => continue,
            Err(e) => return Err(e),
        };
        let radical = prime_spectrum(&r, guards)?.prime_radical;
        let factor = if radical.is_zero_ideal() {
            None
        } else {
            let (q, _) = r.quotient(&radical)?;
            Some(q.with_name(format!("{}/n", r.name())))
        };
        rings.push(r);
        rings.extend(factor);
    }
    Ok(rings)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> TableRing {
        build_ring(&RingSpec::parse(s).unwrap(), &Guards::default()).unwrap()
    }

    fn report(s: &str) -> CriteriaReport {
        evaluate(&ring(s), &Guards::default()).unwrap()
    }

    #[test]
    fn cyclic_four_goldie_both_false() {
        let rep = report("Z4");
        let g = rep.record("goldie").unwrap();
        assert_eq!(g.conclusion, Some(false));
        assert!(!g.hypotheses.iter().all(|h| h.holds));
        assert_eq!(g.biconditional_ok, Some(true));
        assert!(rep.falsified().is_empty());
    }

    #[test]
    fn matrices_satisfy_everything() {
        let rep = report("matrix(F2,2)");
        for name in ["goldie", "semiprime_ass_with_uniform_ideals", "classical_quotient_via_right_annihilators", "minimal_primes_over_ass"] {
            let rec = rep.record(name).unwrap();
            assert_eq!(rec.conclusion, Some(true), "{name}");
            assert!(rec.hypotheses.iter().all(|h| h.holds), "{name}");
        }
        let simple = rep.record("simple_iff_ass_prime").unwrap();
        assert_eq!(simple.biconditional_ok, Some(true));
        assert!(rep.falsified().is_empty());
    }

    #[test]
    fn triangular_and_its_radical_quotient() {
        let t2 = ring("triangular(F2,2)");
        let rep = evaluate(&t2, &Guards::default()).unwrap();
        assert_eq!(rep.record("goldie").unwrap().conclusion, Some(false));
        assert!(rep.falsified().is_empty(), "{:?}", rep.falsified());
        let n = prime_spectrum(&t2, &Guards::default()).unwrap().prime_radical;
        let (q, _) = t2.quotient(&n).unwrap();
        let rep = evaluate(&q, &Guards::default()).unwrap();
        assert_eq!(rep.record("goldie").unwrap().conclusion, Some(true));
        assert!(rep.falsified().is_empty());
    }

    #[test]
    fn guards_mark_records_skipped() {
        let guards = Guards { maxden: 2, ..Guards::default() };
        let rep = evaluate(&ring("Z4"), &guards).unwrap();
        let rec = rep.record("maximal_denominator_sets").unwrap();
        assert_eq!(rec.status, Status::Skipped);
        assert_eq!(rec.biconditional_ok, None);
        assert_eq!(rep.record("goldie").unwrap().status, Status::Checked);
    }

    #[test]
    fn chains_in_annihilator_families() {
        let z8 = ring("Z8");
        // Left annihilators of Z8 are the ideals 0 ⊂ (4) ⊂ (2) ⊂ Z8.
        let family = annihilator_family(&z8, Side::Left);
        assert_eq!(family.len(), 4);
        assert_eq!(longest_chain(&family), 4);
    }

    #[test]
    fn empty_corpus() {
        let summary = corpus_run(&[], &Guards::default()).unwrap();
        assert!(summary.reports.is_empty() && summary.ok());
    }

    #[test]
    fn selection_filters_records() {
        let rep = evaluate_selected(&ring("Z6"), &Guards::default(), &["goldie".to_string()]).unwrap();
        assert_eq!(rep.theorems.len(), 1);
        assert!(evaluate_selected(&ring("Z6"), &Guards::default(), &["nope".to_string()]).is_err());
    }

    #[test]
    fn report_serializes() {
        let json = serde_json::to_value(report("Z4")).unwrap();
        assert_eq!(json["ring"], "Z4");
        assert_eq!(json["theorems"][0]["name"], "goldie");
        assert_eq!(json["theorems"][0]["biconditional_ok"], true);
        assert_eq!(json["theorems"][0]["kind"], "equivalence");
    }
}
