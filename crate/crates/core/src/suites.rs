//! Verification campaigns over exhaustive and seeded random instances.
//!
//! Each campaign evaluates instances in parallel and merges per-instance
//! outcomes in instance order, so a report is a pure function of its inputs.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::betti::{
    ek_betti, euler_characteristic_mismatch, koszul_betti_capped, spp_terms, vbetti, BettiTable,
    GradedVectorSpaceHF,
};
use crate::bounds::{bhp_bound, dominates, lpp_bound, verify_main_theorem};
use crate::degseq::DegreeSequence;
use crate::enumerate::{all_ideals_containing, enumerate_ideals, stable_ideals};
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_function, HilbertFunction};
use crate::ideal::MonomialIdeal;
use crate::linkage::{check_linkage, LinkagePair};
use crate::lpp::{is_spp, lpp_from_hf};
use crate::random::{random_artinian, random_spp, random_stable, rng};
use crate::text::format_generators;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: u64,
    pub passed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub property: String,
    pub ideal: String,
    pub degrees: Option<String>,
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: u64,
    pub properties: BTreeMap<String, Tally>,
    pub skipped: BTreeMap<String, u64>,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            instances: 0,
            properties: BTreeMap::new(),
            skipped: BTreeMap::new(),
            counterexamples: Vec::new(),
        }
    }

    pub fn passes(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn tally(&self, property: &str) -> Tally {
        self.properties.get(property).copied().unwrap_or_default()
    }

    fn absorb(&mut self, outcome: Outcome) {
        self.instances += 1;
        for (p, ok) in outcome.checks {
            let t = self.properties.entry(p.to_string()).or_default();
            t.checked += 1;
            t.passed += ok as u64;
        }
        for reason in outcome.skipped {
            *self.skipped.entry(reason).or_default() += 1;
        }
        self.counterexamples.extend(outcome.counterexamples);
    }

    fn merge(mut self, other: SuiteReport) -> Self {
        self.instances += other.instances;
        for (p, t) in other.properties {
            let e = self.properties.entry(p).or_default();
            e.checked += t.checked;
            e.passed += t.passed;
        }
        for (r, c) in other.skipped {
            *self.skipped.entry(r).or_default() += c;
        }
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

/// Results of checking one instance.
#[derive(Default)]
struct Outcome {
    checks: Vec<(&'static str, bool)>,
    skipped: Vec<String>,
    counterexamples: Vec<Counterexample>,
}

impl Outcome {
    fn check(
        &mut self,
        property: &'static str,
        ok: bool,
        ideal: &MonomialIdeal,
        d: Option<&DegreeSequence>,
        detail: impl FnOnce() -> Value,
    ) {
        self.checks.push((property, ok));
        if !ok {
            self.counterexamples.push(Counterexample {
                property: property.to_string(),
                ideal: format!("ring n={}; {}", ideal.n(), format_generators(ideal)),
                degrees: d.map(|d| d.to_string()),
                detail: detail(),
            });
        }
    }

    fn euler(&mut self, ideal: &MonomialIdeal, table: &BettiTable) {
        let bad = euler_characteristic_mismatch(ideal, table);
        self.check(
            "euler-characteristic",
            bad.is_none(),
            ideal,
            None,
            || json!({ "degree": bad, "table": table }),
        );
    }

    fn error(
        &mut self,
        property: &'static str,
        ideal: &MonomialIdeal,
        d: Option<&DegreeSequence>,
        e: &Error,
    ) {
        self.check(
            property,
            false,
            ideal,
            d,
            || json!({ "error": e.to_string() }),
        );
    }
}

fn run(
    suite: &str,
    instances: Vec<(MonomialIdeal, Option<DegreeSequence>)>,
    f: impl Fn(&MonomialIdeal, Option<&DegreeSequence>) -> Outcome + Sync,
) -> SuiteReport {
    let outcomes: Vec<Outcome> = instances
        .par_iter()
        .map(|(i, d)| f(i, d.as_ref()))
        .collect();
    let mut report = SuiteReport::new(suite);
    for o in outcomes {
        report.absorb(o);
    }
    report
}

/// Random Artinian ideals `℘ ⊊ I ⊊ S`, cycling through `sequences`: double
/// link, the Hilbert function identity and the component/SPP/LPP clauses.
pub fn linkage_suite(sequences: &[DegreeSequence], trials: u64, seed: u64) -> Result<SuiteReport> {
    let instances = (0..trials)
        .map(|t| {
            let d = &sequences[(t % sequences.len() as u64) as usize];
            Ok((
                random_artinian(&mut rng(seed.wrapping_add(t)), d, 5)?,
                Some(d.clone()),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(run("linkage", instances, |i, d| {
        let d = d.expect("degree sequence");
        let mut o = Outcome::default();
        match LinkagePair::new(i.clone(), d.clone()) {
            Err(e) => o.error("link", i, Some(d), &e),
            Ok(pair) => {
                o.check(
                    "involution",
                    pair.is_involution(),
                    i,
                    Some(d),
                    || json!({ "linked": format_generators(&pair.linked) }),
                );
                let bad = pair.hilbert_identity_failure();
                o.check(
                    "hilbert-identity",
                    bad.is_none(),
                    i,
                    Some(d),
                    || json!({ "degree": bad }),
                );
                let lhf = crate::linkage::linked_hf(&hilbert_function(i, pair.socle), d);
                let ok = lhf
                    .as_ref()
                    .is_ok_and(|h| *h == hilbert_function(&pair.linked, pair.socle));
                o.check(
                    "linked-hf",
                    ok,
                    i,
                    Some(d),
                    || json!({ "linked": format_generators(&pair.linked) }),
                );
            }
        }
        match check_linkage(i, d) {
            Err(e) => o.error("components", i, Some(d), &e),
            Ok(r) => {
                o.check(
                    "components",
                    r.components_hold(),
                    i,
                    Some(d),
                    || json!({ "components": r.components }),
                );
                o.check(
                    "spp-biconditional",
                    r.spp_biconditional(),
                    i,
                    Some(d),
                    || json!({ "ideal": r.ideal_spp, "linked": r.linked_spp }),
                );
                o.check(
                    "lpp-biconditional",
                    r.lpp_biconditional(),
                    i,
                    Some(d),
                    || json!({ "ideal": r.ideal_lpp, "linked": r.linked_lpp }),
                );
            }
        }
        o
    }))
}

fn compare_tables(
    o: &mut Outcome,
    property: &'static str,
    i: &MonomialIdeal,
    d: Option<&DegreeSequence>,
    a: &BettiTable,
    b: &BettiTable,
) {
    o.check(property, a == b, i, d, || json!({ "left": a, "right": b }));
}

/// Eliahou–Kervaire against the Koszul oracle: every stable ideal in
/// `1..=max_n` variables generated in degrees `<= max_degree`, then `trials`
/// random stable ideals in `max_n` variables.
pub fn ek_oracle_suite(
    max_n: usize,
    max_degree: u32,
    trials: u64,
    seed: u64,
    cap: usize,
) -> Result<SuiteReport> {
    let mut instances = Vec::new();
    for n in 1..=max_n {
        instances.extend(
            stable_ideals(n, max_degree, cap)?
                .into_iter()
                .map(|i| (i, None)),
        );
    }
    instances.extend((0..trials).map(|t| {
        (
            random_stable(&mut rng(seed.wrapping_add(t)), max_n, 6, 4),
            None,
        )
    }));
    Ok(run("ek-oracle", instances, |i, _| {
        let mut o = Outcome::default();
        match (ek_betti(i), koszul_betti_capped(i, cap)) {
            (Ok(ek), Ok(k)) => {
                compare_tables(&mut o, "ek-equals-koszul", i, None, &ek, &k);
                o.euler(i, &k);
            }
            (Err(e), _) | (_, Err(e)) => o.error("ek-equals-koszul", i, None, &e),
        }
        o
    }))
}

/// The last-variable recursion against the Koszul oracle, over every `d`-SPP
/// ideal for each `d` in `exhaustive` and `trials` random ones for each `d`
/// in `random`. Also checks that each summand is bounded by the total and,
/// for Artinian ideals, that `β(S/I) ≤ β(V(S/I))`.
pub fn spp_oracle_suite(
    exhaustive: &[DegreeSequence],
    random: &[DegreeSequence],
    trials: u64,
    seed: u64,
    cap: usize,
) -> Result<SuiteReport> {
    let mut instances = Vec::new();
    for d in exhaustive {
        for i in all_ideals_containing(d, cap)? {
            let i = i?;
            if is_spp(&i, d) && !i.is_unit() {
                instances.push((i, Some(d.clone())));
            }
        }
    }
    for d in random {
        for t in 0..trials {
            let i = random_spp(&mut rng(seed.wrapping_add(t)), d, 4)?;
            instances.push((i, Some(d.clone())));
        }
    }
    Ok(run("spp-oracle", instances, |i, d| {
        let d = d.expect("degree sequence");
        let mut o = Outcome::default();
        let koszul = match koszul_betti_capped(i, cap) {
            Ok(k) => k,
            Err(e) => {
                o.error("spp-equals-koszul", i, Some(d), &e);
                return o;
            }
        };
        match spp_terms(i, d) {
            Err(e) => o.error("spp-equals-koszul", i, Some(d), &e),
            Ok(terms) => {
                compare_tables(
                    &mut o,
                    "spp-equals-koszul",
                    i,
                    Some(d),
                    &terms.total,
                    &koszul,
                );
                let bounded = [&terms.base, &terms.middle, &terms.top]
                    .iter()
                    .all(|t| t.entries().all(|(a, b, v)| v <= terms.total.get(a, b)));
                o.check(
                    "summands-bounded",
                    bounded,
                    i,
                    Some(d),
                    || json!({ "base": terms.base, "middle": terms.middle, "top": terms.top }),
                );
            }
        }
        o.euler(i, &koszul);
        if i.is_artinian() {
            let socle = d.socle_degree().unwrap_or(0);
            let hf = hilbert_function(i, socle);
            let space: GradedVectorSpaceHF = hf
                .values()
                .iter()
                .enumerate()
                .map(|(j, &v)| (j as u32, v))
                .collect();
            let v = vbetti(&space, i.n());
            let quotient = koszul.to_quotient().expect("ideal table");
            let ok = quotient.entries().all(|(a, b, x)| x <= v.get(a, b));
            o.check(
                "vbetti-dominates",
                ok,
                i,
                Some(d),
                || json!({ "quotient": quotient, "v": v }),
            );
        }
        o
    }))
}

/// Which properties [`main_theorem_suite`] checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MainChecks {
    pub dominance: bool,
    pub egh: bool,
}

/// `β(I) ≤ β(L)` for the `d`-LPP ideal `L` with the Hilbert function of `I`,
/// and extremality of `β_0(L)` among all ideals `⊇ ℘` with that Hilbert
/// function. With `trials = None` every ideal `⊇ ℘` is used; otherwise
/// `trials` seeded random ones.
pub fn main_theorem_suite(
    d: &DegreeSequence,
    trials: Option<u64>,
    seed: u64,
    cap: usize,
    checks: MainChecks,
) -> Result<SuiteReport> {
    let instances: Vec<(MonomialIdeal, Option<DegreeSequence>)> = match trials {
        None => all_ideals_containing(d, cap)?
            .map(|i| i.map(|i| (i, Some(d.clone()))))
            .collect::<Result<_>>()?,
        Some(t) => (0..t)
            .map(|k| {
                Ok((
                    random_artinian(&mut rng(seed.wrapping_add(k)), d, 5)?,
                    Some(d.clone()),
                ))
            })
            .collect::<Result<_>>()?,
    };
    let name = match (checks.dominance, checks.egh) {
        (true, true) => "main-theorem",
        (false, true) => "egh",
        _ => "main-theorem-dominance",
    };
    Ok(run(name, instances, |i, d| {
        let d = d.expect("degree sequence");
        let mut o = Outcome::default();
        if checks.dominance {
            match verify_main_theorem(i, d) {
                Ok(r) => {
                    o.check(
                        "dominance",
                        r.dominance.holds(),
                        i,
                        Some(d),
                        || json!({ "lpp": format_generators(&r.lpp), "report": r.dominance }),
                    );
                    o.euler(i, &r.dominance.left);
                    o.euler(&r.lpp, &r.dominance.right);
                }
                Err(Error::Infeasible { degree, .. }) => o
                    .skipped
                    .push(format!("no LPP ideal (fails in degree {degree})")),
                Err(e) => o.error("dominance", i, Some(d), &e),
            }
        }
        if checks.egh {
            if let Err(e) = egh_check(&mut o, i, d, cap) {
                o.error("egh", i, Some(d), &e);
            }
        }
        o
    }))
}

fn generator_degree_counts(i: &MonomialIdeal) -> BTreeMap<u32, u64> {
    let mut out = BTreeMap::new();
    for g in i.gens() {
        *out.entry(g.degree()).or_default() += 1;
    }
    out
}

fn egh_check(o: &mut Outcome, i: &MonomialIdeal, d: &DegreeSequence, cap: usize) -> Result<()> {
    let socle = d.socle_degree()?;
    let h = hilbert_function(i, socle + 1);
    let lpp = match lpp_from_hf(&h, d) {
        Ok(l) => l,
        Err(Error::Infeasible { degree, .. }) => {
            o.skipped
                .push(format!("no LPP ideal (fails in degree {degree})"));
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    let lpp_counts = generator_degree_counts(&lpp);
    let mut member = false;
    let mut max: BTreeMap<u32, u64> = BTreeMap::new();
    for other in enumerate_ideals(d, &h, cap)? {
        let other = other?;
        member |= other == lpp;
        for (j, c) in generator_degree_counts(&other) {
            let e = max.entry(j).or_default();
            *e = (*e).max(c);
        }
    }
    let attains = member
        && max
            .iter()
            .all(|(j, &c)| lpp_counts.get(j).copied().unwrap_or(0) == c);
    o.check("egh", attains, i, Some(d), || {
        json!({ "lpp": format_generators(&lpp), "lpp_generators": lpp_counts, "max_generators": max, "member": member })
    });
    Ok(())
}

/// For one Hilbert function: `β(L^d) ≤ β(L^e)` for every comparable pair
/// `d ≤ e` among `sequences` whose LPP ideals exist, and `β(L^d) ≤ β(lex)`.
pub fn monotonicity_suite(
    h: &HilbertFunction,
    sequences: &[DegreeSequence],
    widen_limit: u32,
) -> Result<SuiteReport> {
    use crate::bounds::widen_until_certified;
    let lex_table = widen_until_certified(h, widen_limit, bhp_bound)?;
    let bounds: Vec<(DegreeSequence, Option<BettiTable>)> = sequences
        .par_iter()
        .map(|d| {
            let t = match widen_until_certified(h, widen_limit, |h| lpp_bound(h, d)) {
                Ok(t) => Some(t),
                Err(Error::Infeasible { .. }) => None,
                Err(e) => return Err(e),
            };
            Ok((d.clone(), t))
        })
        .collect::<Result<_>>()?;
    let placeholder = MonomialIdeal::zero(h.n());
    let mut o = Outcome::default();
    for (d, t) in &bounds {
        let Some(t) = t else {
            o.skipped.push(format!("no LPP ideal for {d}"));
            continue;
        };
        let r = dominates(t, &lex_table)?;
        o.check(
            "below-lex",
            r.holds(),
            &placeholder,
            Some(d),
            || json!({ "report": r }),
        );
        for (e, u) in &bounds {
            if d == e || !d.le(e) {
                continue;
            }
            if let Some(u) = u {
                let r = dominates(t, u)?;
                o.check(
                    "monotone",
                    r.holds(),
                    &placeholder,
                    Some(d),
                    || json!({ "larger": e.to_string(), "report": r }),
                );
            }
        }
    }
    let mut report = SuiteReport::new("monotonicity");
    report.absorb(o);
    Ok(report)
}

/// Concatenates reports under a common name.
pub fn combine(name: &str, reports: Vec<SuiteReport>) -> SuiteReport {
    let mut out = SuiteReport::new(name);
    for r in reports {
        out = out.merge(r);
    }
    out
}
