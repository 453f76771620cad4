//! End-to-end acceptance checks. Runs without the libtest harness so every
//! criterion prints exactly one PASS or FAIL line.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use oreq::criteria::{corpus_run, default_corpus, TheoremKind};
use oreq::finloc::{
    localization_hom, mult_closure, ore_denominator_check, ore_localize, s_p_set, singular_ideal, MultSet,
};
use oreq::finring::{build_ring, is_two_sided, prime_spectrum, ElementSet, RingSpec, TableRing};
use oreq::i1::{act_kx, I1Element, KxPoly, DEFAULT_FINDEX_GUARD};
use oreq::ore::{divmod_right, lclm_gcrd, localize_i1, reexpress_with_regular_denominator, DEFAULT_RFDEG_GUARD};
use oreq::regularity::{
    ass_f_witness, gamma_decompose, is_gamma, ore_solve, regularity, regularity_degree, Decomposition, Side,
};
use oreq::Guards;
use rand::Rng;

use common::*;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// ≥ 500 structured elements plus 200 random ones.
fn regularity_corpus() -> Vec<I1Element> {
    let mut corpus = structured_corpus();
    corpus.extend(random_corpus(11, 200));
    corpus
}

fn gamma_corpus(n: usize) -> Vec<I1Element> {
    let mut r = rng(23);
    let mut out = vec![
        &(&I1Element::one() - &I1Element::e(0, 0)) + &I1Element::int_pow(2),
        I1Element::h(),
        I1Element::poly(oreq::numeric::Poly::from_roots(&[3])),
    ];
    while out.len() < n {
        out.push(gamma(&mut r));
    }
    out
}

fn regularity_vs_oracle() -> Check {
    let start = Instant::now();
    let corpus = regularity_corpus();
    ensure(corpus.len() >= 700, || format!("corpus has only {} elements", corpus.len()))?;
    let mut regular = 0;
    for a in &corpus {
        let fast = regularity(a, Side::Left).map_err(|e| format!("{a}: {e}"))?.regular;
        let oracle = oracle_left_regular(a);
        ensure(fast == oracle, || format!("{a}: classifier {fast}, kernel oracle {oracle}"))?;
        regular += usize::from(fast);
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{} elements, {regular} left regular, {elapsed:.1?}", corpus.len()))
}

fn regularity_degree_vs_brute_force() -> Check {
    let corpus = gamma_corpus(220);
    let mut nonzero = 0;
    for g in &corpus {
        let d = regularity_degree(g).map_err(|e| format!("{g}: {e}"))?;
        let brute = oracle_regularity_degree(g, 40).ok_or_else(|| format!("{g}: no regular power up to 40"))?;
        ensure(d == u64::from(brute), || format!("{g}: formula {d}, brute force {brute}"))?;
        nonzero += usize::from(d > 0);
    }
    Ok(format!("{} elements of Γ, {nonzero} with positive degree", corpus.len()))
}

fn left_regular_set_description() -> Check {
    // Every ∂^{d(γ)+i}γ is left regular.
    let gammas = gamma_corpus(220);
    let mut forward = 0;
    for g in &gammas {
        let d = regularity_degree(g).map_err(|e| e.to_string())? as u32;
        for i in 0..3 {
            let c = &I1Element::d_pow(d + i) * g;
            ensure(oracle_left_regular(&c), || format!("∂^{}·({g}) is not left regular", d + i))?;
            forward += 1;
        }
    }
    // Every left regular element is ∂^m γ with m ≥ d(γ).
    let mut backward = 0;
    let mut f_changed = 0;
    let mut candidates = regularity_corpus();
    for g in gammas.iter().take(100) {
        let d = regularity_degree(g).map_err(|e| e.to_string())? as u32;
        candidates.push(&I1Element::d_pow(d + 1) * g);
    }
    for a in candidates.iter().filter(|a| oracle_left_regular(a)) {
        let Decomposition::Gamma(form) = gamma_decompose(a).map_err(|e| e.to_string())? else {
            return Err(format!("left regular {a} has no Γ decomposition"));
        };
        ensure(is_gamma(&form.gamma), || format!("{} is not in Γ", form.gamma))?;
        ensure(&I1Element::d_pow(form.m) * &form.gamma == *a, || format!("∂^{}·γ ≠ {a}", form.m))?;
        let d = regularity_degree(&form.gamma).map_err(|e| e.to_string())?;
        ensure(u64::from(form.m) >= d, || format!("{a}: m = {} < d(γ) = {d}", form.m))?;
        backward += 1;
        f_changed += usize::from(form.gamma.f_only() != a.f_only());
    }
    ensure(f_changed > 0, || "no sample changed its F part under re-decomposition".into())?;
    Ok(format!("{forward} forward, {backward} backward samples, {f_changed} with F-part change"))
}

fn side_duality() -> Check {
    let corpus = regularity_corpus();
    for a in &corpus {
        let right = regularity(a, Side::Right).map_err(|e| e.to_string())?.regular;
        let left_star = regularity(&a.star(), Side::Left).map_err(|e| e.to_string())?.regular;
        let oracle = oracle_left_regular(&a.star());
        ensure(right == left_star && right == oracle, || format!("{a}: right {right}, star-left {left_star}"))?;
    }
    let s = &I1Element::d() + &I1Element::int();
    let both = regularity(&s, Side::Left).unwrap().regular && regularity(&s, Side::Right).unwrap().regular;
    ensure(both, || "∂ + ∫ should be left and right regular".into())?;
    Ok(format!("{} elements; ∂ + ∫ regular on both sides", corpus.len()))
}

fn localization_map() -> Check {
    let mut r = rng(31);
    let shape = Shape { d: 2, int: 2, f: 3, h: 1, terms: 3 };
    for _ in 0..300 {
        let (a, b) = (element(&mut r, shape), element(&mut r, shape));
        let lhs = localize_i1(&(&a * &b));
        let rhs = localize_i1(&a).mul(&localize_i1(&b)).map_err(|e| e.to_string())?;
        ensure(lhs.equals(&rhs).map_err(|e| e.to_string())?, || format!("ψ not multiplicative on {a}, {b}"))?;
    }
    for a in regularity_corpus() {
        ensure(localize_i1(&a).is_zero() == a.is_in_f(), || format!("kernel of ψ disagrees with F at {a}"))?;
    }
    for i in 0..=10 {
        for j in 0..=10 {
            let e = I1Element::e(i, j);
            let c = ass_f_witness(&e).map_err(|err| err.to_string())?;
            ensure(oracle_left_regular(&c) && (&c * &e).is_zero(), || format!("bad witness {c} for e[{i},{j}]"))?;
        }
    }
    let one = localize_i1(&I1Element::one());
    let mut inverses = 0;
    while inverses < 100 {
        let (a, b) = (element(&mut r, shape), element(&mut r, shape));
        if a.is_in_f() || b.is_in_f() {
            continue;
        }
        let f = localize_i1(&a).inv().and_then(|ia| ia.mul(&localize_i1(&b))).map_err(|e| e.to_string())?;
        let g = f.inv().map_err(|e| e.to_string())?;
        let left = g.mul(&f).map_err(|e| e.to_string())?;
        let right = f.mul(&g).map_err(|e| e.to_string())?;
        ensure(left.equals(&one).unwrap() && right.equals(&one).unwrap(), || format!("{f} has no two-sided inverse"))?;
        inverses += 1;
    }
    Ok("300 products, kernel = F on corpus, 121 witnesses, 100 inverses".into())
}

fn constructive_ore() -> Check {
    let mut r = rng(47);
    let shape = Shape { d: 2, int: 2, f: 3, h: 1, terms: 3 };
    let mut solved = 0;
    while solved < 100 {
        let g = gamma(&mut r);
        let d = regularity_degree(&g).map_err(|e| e.to_string())? as u32;
        let c = &I1Element::d_pow(d + r.gen_range(0..2)) * &g;
        let x = element(&mut r, shape);
        let (c2, x2) = ore_solve(&c, &x).map_err(|e| format!("ore_solve({c}, {x}): {e}"))?;
        ensure(&c2 * &x == &x2 * &c, || format!("c′r ≠ r′c for c = {c}, r = {x}"))?;
        ensure(oracle_left_regular(&c2), || format!("c′ = {c2} is not left regular"))?;
        solved += 1;
    }
    let mut reexpressed = 0;
    while reexpressed < 100 {
        let (a, b) = (element(&mut r, shape), element(&mut r, shape));
        if a.is_in_f() {
            continue;
        }
        let f = localize_i1(&a).inv().and_then(|ia| ia.mul(&localize_i1(&b))).map_err(|e| e.to_string())?;
        let (c, num) = reexpress_with_regular_denominator(&f).map_err(|e| format!("{f}: {e}"))?;
        let back = localize_i1(&c).inv().and_then(|ic| ic.mul(&localize_i1(&num))).map_err(|e| e.to_string())?;
        ensure(oracle_left_regular(&c) && back.equals(&f).unwrap(), || format!("bad re-expression of {f}"))?;
        reexpressed += 1;
    }
    Ok("100 Ore pairs, 100 fractions re-expressed".into())
}

fn multiplication_soundness() -> Check {
    let mut r = rng(59);
    let shape = Shape { d: 3, int: 3, f: 4, h: 2, terms: 4 };
    for _ in 0..1000 {
        let (a, b) = (element(&mut r, shape), element(&mut r, shape));
        let c = a.checked_mul(&b, DEFAULT_FINDEX_GUARD).map_err(|e| e.to_string())?;
        // A nonzero difference c − ab has complexity at most that of c plus
        // a and b, and moves some x^n below twice that bound plus two.
        let bound = 2 * (a.complexity() + b.complexity() + c.complexity()) + 2;
        for n in 0..=bound {
            let xn = KxPoly::x_pow(n);
            ensure(act_kx(&c, &xn) == act_kx(&a, &act_kx(&b, &xn)), || format!("({a})·({b}) wrong on x^{n}"))?;
        }
    }
    for i in 0..=6 {
        for j in 0..=6 {
            for k in 0..=6 {
                for l in 0..=6 {
                    let p = &I1Element::e(i, j) * &I1Element::e(k, l);
                    let want = if j == k { I1Element::e(i, l) } else { I1Element::zero() };
                    ensure(p == want, || format!("e[{i},{j}]e[{k},{l}] = {p}"))?;
                }
            }
        }
    }
    Ok("1000 random pairs, 2401 matrix-unit products".into())
}

fn lclm_contract() -> Check {
    let mut r = rng(71);
    for _ in 0..200 {
        let lo = if r.gen_bool(0.2) { -1 } else { 0 };
        let (ha, hb) = (r.gen_range(0..=6), r.gen_range(0..=6));
        let a = skew(&mut r, lo, ha, 4, 1);
        let b = skew(&mut r, 0, hb, 4, 1);
        let res = lclm_gcrd(&a, &b, DEFAULT_RFDEG_GUARD).map_err(|e| format!("lclm({a}, {b}): {e}"))?;
        let deg = |x: &oreq::ore::SkewLaurentRF| x.ordinary_degree().unwrap();
        ensure(&res.u * &a == res.lclm && &res.v * &b == res.lclm, || format!("cofactors fail for {a}, {b}"))?;
        for x in [&a, &b] {
            let (_, rem) = divmod_right(x, &res.gcrd).map_err(|e| e.to_string())?;
            ensure(rem.is_zero(), || format!("gcrd does not right-divide {x}"))?;
        }
        ensure(deg(&res.lclm) <= deg(&a) + deg(&b), || format!("degree bound fails for {a}, {b}"))?;
        ensure(deg(&res.lclm) + deg(&res.gcrd) == deg(&a) + deg(&b), || format!("degree identity fails for {a}, {b}"))?;
    }
    Ok("200 pairs".into())
}

/// Records that must never be skipped on the default corpus.
const NEVER_SKIPPED: &[&str] = &[
    "goldie",
    "semiprime_ass_with_uniform_ideals",
    "semiprime_ass_with_classical_factor_quotient",
    "simple_iff_ass_prime",
    "localization_factors_through_ass_quotient",
    "classical_quotient_via_right_annihilators",
    "classical_quotient_via_left_regular_kernels",
    "classical_quotient_via_all_kernels",
    "classical_quotient_via_left_regular_equals_regular",
    "minimal_primes_over_ass",
    "goldie_factors_by_minimal_primes",
];

fn finite_ring_suite() -> Check {
    let start = Instant::now();
    let guards = Guards::default();
    let rings = default_corpus(&guards).map_err(|e| e.to_string())?;
    ensure(rings.len() >= 10, || format!("only {} rings", rings.len()))?;
    let summary = corpus_run(&rings, &guards).map_err(|e| e.to_string())?;
    ensure(summary.ok(), || format!("falsified: {:?}", summary.falsifications))?;
    let mut checked = 0;
    for rep in &summary.reports {
        for t in &rep.theorems {
            if NEVER_SKIPPED.contains(&t.name.as_str()) {
                ensure(t.biconditional_ok.is_some(), || format!("{} skipped on {}", t.name, rep.ring))?;
            }
            if t.kind == TheoremKind::Equivalence && t.biconditional_ok.is_some() {
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("{} rings, {checked} equivalences checked, {elapsed:.1?}", rings.len()))
}

fn small_rings() -> Vec<TableRing> {
    ["Z4", "Z6", "Z8", "Z12", "product(F2,F2)", "triangular(F2,2)", "matrix(F2,2)", "F4", "Z9", "product(Z2,Z4)"]
        .iter()
        .map(|s| build_ring(&RingSpec::parse(s).unwrap(), &Guards::default()).unwrap())
        .collect()
}

/// Left denominator sets of `r` from closures of single elements, prime
/// complements and the units.
fn denominator_sets(r: &TableRing) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = Vec::new();
    let mut candidates = vec![r.units()];
    for x in r.elements().skip(1) {
        if let Ok(m) = mult_closure(r, &ElementSet::from_indices(r.order(), [x, r.one()])) {
            candidates.push(m.into_elements());
        }
    }
    for p in prime_spectrum(r, &Guards::default()).unwrap().primes {
        if let Ok(s) = s_p_set(r, &p) {
            candidates.push(s.into_elements());
        }
    }
    for s in candidates {
        if MultSet::new(r, s.clone()).is_ok() && ore_denominator_check(r, &s).left_denominator && !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

fn localization_construction() -> Check {
    let mut pairs = 0;
    let mut maps = 0;
    for r in small_rings() {
        let sets = denominator_sets(&r);
        for s in &sets {
            let loc = ore_localize(&r, s).map_err(|e| format!("{}: {e}", r.name()))?;
            ensure(loc.iso_to_quotient(&r).is_some(), || format!("{} at {s}: carrier ≇ R/ass", r.name()))?;
            pairs += 1;
        }
        for s in &sets {
            for t in sets.iter().filter(|t| s.is_subset(t)) {
                let hom = localization_hom(&r, s, t).map_err(|e| e.to_string())?;
                ensure(hom.routes_agree(), || format!("{} {s} ⊆ {t}: criteria disagree with carrier", r.name()))?;
                maps += 1;
            }
        }
    }
    ensure(pairs >= 20, || format!("only {pairs} denominator pairs"))?;
    Ok(format!("{pairs} (R, S) pairs, {maps} localization maps"))
}

fn singular_ideal_checks() -> Check {
    let guards = Guards::default();
    let rings = default_corpus(&guards).map_err(|e| e.to_string())?;
    let mut pairs = 0;
    let mut contained = 0;
    for r in &rings {
        let spectrum = prime_spectrum(r, &guards).map_err(|e| e.to_string())?;
        for a in spectrum.two_sided.iter().filter(|a| a.len() < r.order()) {
            let z = singular_ideal(r, a, &guards).map_err(|e| e.to_string())?;
            ensure(is_two_sided(r, &z), || format!("{}: ζ over {a} is not two-sided", r.name()))?;
            pairs += 1;
        }
        let lreg = r.element_sets().left_regular;
        let a = oreq::finloc::ass_left(r, &lreg);
        let q = ore_localize(r, &lreg).map_err(|e| e.to_string())?;
        if oreq::finring::semisimplicity(&q.carrier, &guards).map_err(|e| e.to_string())?.semisimple {
            let z = singular_ideal(r, &a, &guards).map_err(|e| e.to_string())?;
            ensure(z.is_subset(&a), || format!("{}: ζ ⊄ ass", r.name()))?;
            contained += 1;
        }
    }
    Ok(format!("{pairs} (R, a) pairs two-sided, {contained} semisimple cases contained"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("regularity classifier agrees with the kernel oracle", regularity_vs_oracle),
        ("regularity degree formula agrees with brute force", regularity_degree_vs_brute_force),
        ("left regular elements are exactly the regularized Γ powers", left_regular_set_description),
        ("right regularity is left regularity of the involution", side_duality),
        ("localization map is a multiplicative map onto a division ring", localization_map),
        ("constructive left Ore condition", constructive_ore),
        ("multiplication agrees with the action on K[x]", multiplication_soundness),
        ("lclm and gcrd degree contract", lclm_contract),
        ("finite-ring criteria hold on the default corpus", finite_ring_suite),
        ("pair localization matches the quotient by ass", localization_construction),
        ("singular ideal is two-sided and inside ass", singular_ideal_checks),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}) [{:.1?}]", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
