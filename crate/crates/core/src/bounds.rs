//! Upper bounds on Betti tables and entrywise comparisons between tables.

use serde::Serialize;

use crate::betti::{ek_betti, koszul_betti, spp_betti, BettiTable};
use crate::degseq::{DegreeSequence, PowerDegree};
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_function, HilbertFunction};
use crate::ideal::MonomialIdeal;
use crate::lexmac::lex_ideal_from_hf;
use crate::lpp::{is_spp, lpp_from_hf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// `left ≤ right` entrywise with at least one strict inequality.
    Dominated,
    Equal,
    Incomparable,
}

/// An entry where the left table exceeds the right one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub i: usize,
    pub j: u32,
    pub left: u64,
    pub right: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominanceReport {
    pub left: BettiTable,
    pub right: BettiTable,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

impl DominanceReport {
    /// True unless some entry of the left table exceeds the right one.
    pub fn holds(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Compares `a ≤ b` entrywise.
pub fn dominates(a: &BettiTable, b: &BettiTable) -> Result<DominanceReport> {
    if a.convention() != b.convention() || a.n() != b.n() {
        return Err(Error::Mismatch(format!(
            "cannot compare a {:?} table in {} variables with a {:?} table in {} variables",
            a.convention(),
            a.n(),
            b.convention(),
            b.n()
        )));
    }
    let witnesses: Vec<Witness> = a
        .entries()
        .filter(|&(i, j, v)| v > b.get(i, j))
        .map(|(i, j, left)| Witness {
            i,
            j,
            left,
            right: b.get(i, j),
        })
        .collect();
    let verdict = if a == b {
        Verdict::Equal
    } else if witnesses.is_empty() {
        Verdict::Dominated
    } else {
        Verdict::Incomparable
    };
    Ok(DominanceReport {
        left: a.clone(),
        right: b.clone(),
        verdict,
        witnesses,
    })
}

/// Runs `f` on `h` listed through successively larger degrees until the
/// declared tail is certified, stopping at `limit`.
pub fn widen_until_certified<T>(
    h: &HilbertFunction,
    limit: u32,
    f: impl Fn(&HilbertFunction) -> Result<T>,
) -> Result<T> {
    let mut bound = h.bound();
    loop {
        match f(&h.extended_to(bound)?) {
            Err(Error::InsufficientBound { .. }) if bound < limit => bound += 1,
            other => return other,
        }
    }
}

/// Betti table of the lex ideal with quotient Hilbert function `h`.
pub fn bhp_bound(h: &HilbertFunction) -> Result<BettiTable> {
    ek_betti(&lex_ideal_from_hf(h)?)
}

/// How the Betti table of an LPP ideal was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundMethod {
    /// Last-variable recursion with the given degree sequence.
    Spp,
    /// Last-variable recursion after replacing `d` by the pure powers the
    /// ideal actually contains.
    SppMinimalPowers,
    Koszul,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LppBound {
    pub ideal: MonomialIdeal,
    pub table: BettiTable,
    pub method: BoundMethod,
}

/// Betti table of the `d`-LPP ideal with quotient Hilbert function `h`.
pub fn lpp_bound(h: &HilbertFunction, d: &DegreeSequence) -> Result<BettiTable> {
    Ok(lpp_bound_detailed(h, d)?.table)
}

pub fn lpp_bound_detailed(h: &HilbertFunction, d: &DegreeSequence) -> Result<LppBound> {
    let ideal = lpp_from_hf(h, d)?;
    let (table, method) = betti_of_spp_candidate(&ideal, d)?;
    Ok(LppBound {
        ideal,
        table,
        method,
    })
}

fn betti_of_spp_candidate(
    ideal: &MonomialIdeal,
    d: &DegreeSequence,
) -> Result<(BettiTable, BoundMethod)> {
    if d.all_finite() && is_spp(ideal, d) {
        return Ok((spp_betti(ideal, d)?, BoundMethod::Spp));
    }
    if ideal.is_artinian() {
        let (e, perm) = minimal_power_sequence(ideal)?;
        let identity = perm.iter().enumerate().all(|(k, &v)| k == v);
        if identity && is_spp(ideal, &e) {
            return Ok((spp_betti(ideal, &e)?, BoundMethod::SppMinimalPowers));
        }
    }
    Ok((koszul_betti(ideal)?, BoundMethod::Koszul))
}

/// `d_i = min { e : x_i^e ∈ I }`, sorted ascending. The permutation lists the
/// variable index behind each sorted entry.
pub fn minimal_power_sequence(ideal: &MonomialIdeal) -> Result<(DegreeSequence, Vec<usize>)> {
    let exps = (0..ideal.n())
        .map(|v| {
            ideal
                .pure_power_exponent(v)
                .ok_or(Error::NotArtinian(v + 1))
        })
        .collect::<Result<Vec<u32>>>()?;
    let mut perm: Vec<usize> = (0..ideal.n()).collect();
    perm.sort_by_key(|&v| (exps[v], v));
    let sorted = perm.iter().map(|&v| PowerDegree::Finite(exps[v])).collect();
    Ok((DegreeSequence::new(sorted)?, perm))
}

/// Outcome of comparing `β(I)` with the Betti table of its `d`-LPP ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainTheoremReport {
    pub ideal: MonomialIdeal,
    pub degrees: DegreeSequence,
    pub lpp: MonomialIdeal,
    /// Whether `d_i ≥ Σ_{j<i} (d_j − 1) + 1` holds for `i ≥ 3`.
    pub growth_hypothesis: bool,
    pub dominance: DominanceReport,
}

/// Checks `β_{i,j}(I) ≤ β_{i,j}(L)` for the `d`-LPP ideal `L` with the
/// Hilbert function of `I`. Requires `℘ ⊆ I` with every `d_i` finite.
pub fn verify_main_theorem(ideal: &MonomialIdeal, d: &DegreeSequence) -> Result<MainTheoremReport> {
    let entries = d.finite_entries()?;
    if d.n() != ideal.n() {
        return Err(Error::Mismatch(format!(
            "degree sequence {d} does not fit a ring in {} variables",
            ideal.n()
        )));
    }
    if !ideal.contains_ideal(&d.power_ideal()) {
        return Err(Error::Containment(format!(
            "{d} power ideal is not contained in {ideal:?}"
        )));
    }
    let socle: u32 = entries.iter().map(|e| e - 1).sum();
    let h = hilbert_function(ideal, socle + 1);
    let lpp = lpp_from_hf(&h, d)?;
    let own = if is_spp(ideal, d) {
        spp_betti(ideal, d)?
    } else {
        koszul_betti(ideal)?
    };
    let (bound, _) = betti_of_spp_candidate(&lpp, d)?;
    Ok(MainTheoremReport {
        ideal: ideal.clone(),
        degrees: d.clone(),
        lpp,
        growth_hypothesis: d.satisfies_growth_hypothesis(),
        dominance: dominates(&own, &bound)?,
    })
}
