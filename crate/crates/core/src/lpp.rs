//! Stable-plus-powers and lex-plus-powers ideals.
//!
//! A monomial ideal `I ⊆ k[x_1..x_n]` splits uniquely as
//! `I = I_0 ⊕ I_1 x_n ⊕ I_2 x_n^2 ⊕ ...` with an increasing chain of ideals
//! `I_h ⊆ k[x_1..x_{n-1}]`. Most predicates here are phrased in terms of that
//! chain.

use std::collections::HashSet;

use serde::Serialize;

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_function, HfConvention, HilbertFunction, Tail};
use crate::ideal::MonomialIdeal;
use crate::lexmac::upper_shadow;
use crate::monomial::{count_monomials, monomials_of_degree, Monomial};

/// The components `I_0 ⊆ I_1 ⊆ ... ⊆ I_H` of a monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XnDecomposition {
    n: usize,
    components: Vec<MonomialIdeal>,
}

impl XnDecomposition {
    /// Ambient variable count of the decomposed ideal.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[MonomialIdeal] {
        &self.components
    }

    /// `I_h`; indices past the window repeat the last component, which is
    /// exact once `H` reaches the largest `x_n`-exponent of a generator.
    pub fn component(&self, h: usize) -> &MonomialIdeal {
        &self.components[h.min(self.components.len() - 1)]
    }

    /// Reassembles `Σ_h I_h x_n^h`.
    pub fn recombine(&self) -> MonomialIdeal {
        let gens = self
            .components
            .iter()
            .enumerate()
            .flat_map(|(h, c)| c.gens().iter().map(move |g| g.extend(h as u32)))
            .collect();
        MonomialIdeal::from_unchecked(self.n, gens)
    }
}

/// `I_h` is generated by the generators of `I` with `x_n`-exponent at most
/// `h`, with `x_n` set to 1.
pub fn decompose(ideal: &MonomialIdeal, bound: usize) -> XnDecomposition {
    let n = ideal.n();
    assert!(n >= 1, "cannot decompose an ideal in zero variables");
    let components = (0..=bound)
        .map(|h| {
            MonomialIdeal::from_unchecked(
                n - 1,
                ideal
                    .gens()
                    .iter()
                    .filter(|g| g.exponents()[n - 1] as usize <= h)
                    .map(Monomial::truncate_last)
                    .collect(),
            )
        })
        .collect();
    XnDecomposition { n, components }
}

/// Largest `x_n`-exponent among the generators.
pub fn max_last_exponent(ideal: &MonomialIdeal) -> usize {
    let n = ideal.n();
    ideal
        .gens()
        .iter()
        .map(|g| g.exponents()[n - 1] as usize)
        .max()
        .unwrap_or(0)
}

/// `x_i u / x_n ∈ I` for every `u ∈ I` divisible by `x_n` and every `i < n`.
///
/// Checking minimal generators suffices: if `w = u v` with `u` a generator
/// and `x_n | w`, then either `x_n | u` and `x_i w / x_n = (x_i u / x_n) v`,
/// or `x_n | v` and `x_i w / x_n = u (x_i v / x_n)`.
pub fn is_xn_stable(ideal: &MonomialIdeal) -> bool {
    let n = ideal.n();
    if n == 0 {
        return true;
    }
    ideal.gens().iter().all(|u| match u.div_var(n - 1) {
        None => true,
        Some(q) => (0..n - 1).all(|i| ideal.contains(&q.mul_var(i))),
    })
}

/// `m_S̄ · upper ⊆ lower` for ideals in the same ring.
fn maximal_ideal_times_within(upper: &MonomialIdeal, lower: &MonomialIdeal) -> bool {
    let n = upper.n();
    upper
        .gens()
        .iter()
        .all(|g| (0..n).all(|i| lower.contains(&g.mul_var(i))))
}

/// `℘ ⊆ I` and `m_S̄ I_h ⊆ I_{h-1}` for `0 < h < d_n`. For `d_n = ∞` the
/// chain is checked up to the largest `x_n`-exponent of a generator, past
/// which it is constant.
pub fn is_spp(ideal: &MonomialIdeal, d: &DegreeSequence) -> bool {
    let n = ideal.n();
    if d.n() != n {
        return false;
    }
    if !ideal.contains_ideal(&d.power_ideal()) {
        return false;
    }
    if n == 0 {
        return true;
    }
    let bound = match d.get(n - 1).finite() {
        Some(dn) => dn as usize - 1,
        None => max_last_exponent(ideal),
    };
    let dec = decompose(ideal, bound);
    (1..=bound).all(|h| maximal_ideal_times_within(dec.component(h), dec.component(h - 1)))
}

/// Degree-`j` monomials not in `℘`, lex-largest first.
fn non_power_monomials(power: &MonomialIdeal, n: usize, j: u32) -> Vec<Monomial> {
    monomials_of_degree(n, j)
        .into_iter()
        .filter(|m| !power.contains(m))
        .collect()
}

/// `I = L + ℘` for a lex ideal `L`.
///
/// Equivalent to: `℘ ⊆ I` and in every degree up to the largest generator
/// degree, the monomials of `I` outside `℘` form an initial lex segment of the
/// monomials outside `℘`. The segments then generate a lex ideal `L` (shadows
/// and unions of lex segments are lex segments) with `L + ℘ = I`.
pub fn is_lpp(ideal: &MonomialIdeal, d: &DegreeSequence) -> bool {
    let n = ideal.n();
    if d.n() != n {
        return false;
    }
    let power = d.power_ideal();
    if !ideal.contains_ideal(&power) {
        return false;
    }
    let top = ideal.max_degree().unwrap_or(0);
    (0..=top).all(|j| {
        let outside = non_power_monomials(&power, n, j);
        let k = outside.iter().take_while(|m| ideal.contains(m)).count();
        outside[k..].iter().all(|m| !ideal.contains(m))
    })
}

/// Every degree sequence `d` with entries in `1..=max_entry` or `∞` for which
/// `I` is `d`-LPP.
pub fn lpp_degree_sequences(ideal: &MonomialIdeal, max_entry: u32) -> Vec<DegreeSequence> {
    use crate::degseq::PowerDegree;
    let n = ideal.n();
    let choices: Vec<PowerDegree> = (1..=max_entry)
        .map(PowerDegree::Finite)
        .chain(std::iter::once(PowerDegree::Infinite))
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn rec(
        ideal: &MonomialIdeal,
        choices: &[PowerDegree],
        start: usize,
        current: &mut Vec<PowerDegree>,
        out: &mut Vec<DegreeSequence>,
    ) {
        if current.len() == ideal.n() {
            let d = DegreeSequence::new(current.clone()).expect("increasing by construction");
            if is_lpp(ideal, &d) {
                out.push(d);
            }
            return;
        }
        for (k, &c) in choices.iter().enumerate().skip(start) {
            current.push(c);
            rec(ideal, choices, k, current, out);
            current.pop();
        }
    }
    rec(ideal, &choices, 0, &mut current, &mut out);
    out
}

/// The unique `d`-LPP ideal with quotient Hilbert function `h` on `0..=D`.
///
/// In each degree the candidate is `℘_j` plus the lex-first non-`℘` monomials
/// filling the required dimension. Since a `d`-LPP ideal with given Hilbert
/// function is unique, a candidate that fails to be an ideal proves that none
/// exists; the error names the first failing degree.
///
/// A zero or constant tail is certified by requiring that degree `D + 1`
/// needs no generators beyond those of `℘`, and then by comparing the
/// resulting Hilbert function with the tail through degree `2D + 2`.
pub fn lpp_from_hf(h: &HilbertFunction, d: &DegreeSequence) -> Result<MonomialIdeal> {
    if h.convention() != HfConvention::Quotient {
        return Err(Error::Mismatch(
            "expected a quotient Hilbert function".into(),
        ));
    }
    let n = h.n();
    if d.n() != n {
        return Err(Error::Mismatch(format!(
            "degree sequence {d} has {} entries, ring has {n} variables",
            d.n()
        )));
    }
    let power = d.power_ideal();
    let bound = h.bound();

    let mut gens: Vec<Monomial> = power.gens().to_vec();
    let mut prev: Vec<Monomial> = Vec::new();
    for j in 0..=bound {
        let layer = lpp_layer(&power, n, j, h.values()[j as usize])?;
        check_extension(&prev, &layer, n, j)?;
        let shadow = upper_shadow(&prev, n);
        gens.extend(layer.iter().filter(|m| !shadow.contains(*m)).cloned());
        prev = layer;
    }
    let ideal = MonomialIdeal::from_unchecked(n, gens);

    let tail_value = match h.tail() {
        Tail::Zero => Some(0),
        Tail::Constant(c) => Some(c),
        Tail::Open => None,
    };
    if let Some(t) = tail_value {
        let j = bound + 1;
        let layer = lpp_layer(&power, n, j, t).map_err(|e| match e {
            Error::Infeasible { reason, .. } => Error::InsufficientBound { bound, reason },
            e => e,
        })?;
        check_extension(&prev, &layer, n, j)?;
        let shadow = upper_shadow(&prev, n);
        let fresh: Vec<&Monomial> = layer
            .iter()
            .filter(|m| !shadow.contains(*m) && !power.gens().contains(m))
            .collect();
        if !fresh.is_empty() {
            return Err(Error::InsufficientBound {
                bound,
                reason: format!(
                    "degree {j} still needs {} new generators for tail {}",
                    fresh.len(),
                    h.tail()
                ),
            });
        }
        let window = 2 * bound + 2;
        let got = hilbert_function(&ideal, window);
        if let Some(k) = (j..=window).find(|&k| got.values()[k as usize] != t) {
            return Err(Error::InsufficientBound {
                bound,
                reason: format!(
                    "constructed ideal has h_{k} = {} but the tail is {}",
                    got.values()[k as usize],
                    h.tail()
                ),
            });
        }
    }

    let got = hilbert_function(&ideal, bound);
    if got.values() != h.values() {
        let k = got
            .values()
            .iter()
            .zip(h.values())
            .position(|(a, b)| a != b)
            .unwrap_or(0);
        return Err(Error::Infeasible {
            degree: k as u32,
            reason: "LPP candidate does not realize the Hilbert function".into(),
        });
    }
    Ok(ideal)
}

/// `[℘]_j` together with the lex-first non-`℘` monomials, sized so that the
/// quotient has dimension `hj`.
fn lpp_layer(power: &MonomialIdeal, n: usize, j: u32, hj: u64) -> Result<Vec<Monomial>> {
    let total = count_monomials(n, j);
    if hj > total {
        return Err(Error::Infeasible {
            degree: j,
            reason: format!("h_{j} = {hj} exceeds {total}"),
        });
    }
    let all = monomials_of_degree(n, j);
    let (in_power, outside): (Vec<Monomial>, Vec<Monomial>) =
        all.into_iter().partition(|m| power.contains(m));
    let needed = total - hj;
    let extra = needed
        .checked_sub(in_power.len() as u64)
        .ok_or_else(|| Error::Infeasible {
            degree: j,
            reason: format!(
                "h_{j} = {hj} exceeds HF(S/℘; {j}) = {}",
                total - in_power.len() as u64
            ),
        })?;
    let mut layer = in_power;
    layer.extend(outside.into_iter().take(extra as usize));
    Ok(layer)
}

fn check_extension(prev: &[Monomial], layer: &[Monomial], n: usize, j: u32) -> Result<()> {
    let set: HashSet<&Monomial> = layer.iter().collect();
    for m in prev {
        for v in 0..n {
            let up = m.mul_var(v);
            if !set.contains(&up) {
                return Err(Error::Infeasible {
                    degree: j,
                    reason: format!("no LPP ideal: {up} is forced into degree {j} but lies past the lex segment"),
                });
            }
        }
    }
    Ok(())
}

/// One counterexample to the sum inequality of the recursive LPP test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumViolation {
    pub adversary: usize,
    pub i: usize,
    pub p: u32,
    pub adversary_sum: u64,
    pub lpp_sum: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecursiveLppReport {
    /// `L` is `d`-SPP.
    pub spp: bool,
    /// Every component `L_h` is `d̄`-LPP.
    pub components_lpp: bool,
    /// `L` itself passes [`is_lpp`].
    pub lpp: bool,
    /// Adversaries failing their preconditions, with the reason.
    pub precondition_failures: Vec<(usize, String)>,
    pub violations: Vec<SumViolation>,
    /// Number of inequalities checked that held with equality.
    pub equalities: usize,
    pub checked: usize,
}

impl RecursiveLppReport {
    pub fn passes(&self) -> bool {
        self.spp
            && self.components_lpp
            && self.violations.is_empty()
            && self.precondition_failures.is_empty()
    }
}

/// Checks the recursive characterization of `L` against a list of
/// adversaries: for every `d`-SPP ideal `I` with `HF(I) = HF(L)` and all
/// `i, p` in the window, `Σ_{j<=i} HF(I_j; p-j) >= Σ_{j<=i} HF(L_j; p-j)`.
pub fn check_recursive_lpp(
    lpp: &MonomialIdeal,
    d: &DegreeSequence,
    adversaries: &[MonomialIdeal],
    window: u32,
) -> Result<RecursiveLppReport> {
    let n = lpp.n();
    if n == 0 || d.n() != n {
        return Err(Error::Mismatch(
            "degree sequence does not match the ring".into(),
        ));
    }
    let dbar = d.truncated();
    let depth = match d.get(n - 1).finite() {
        Some(dn) => dn as usize - 1,
        None => adversaries
            .iter()
            .chain(std::iter::once(lpp))
            .map(max_last_exponent)
            .max()
            .unwrap_or(0),
    };
    let ldec = decompose(lpp, depth);
    let spp = is_spp(lpp, d);
    let components_lpp = n == 1 || ldec.components().iter().all(|c| is_lpp(c, &dbar));
    let lhf = hilbert_function(lpp, window);

    let component_dims = |dec: &XnDecomposition| -> Vec<Vec<u64>> {
        dec.components()
            .iter()
            .map(|c| (0..=window).map(|p| c.dim_in_degree(p)).collect())
            .collect()
    };
    let prefix = |dims: &[Vec<u64>], i: usize, p: u32| -> u64 {
        (0..=i.min(p as usize))
            .map(|j| dims[j][(p as usize) - j])
            .sum()
    };
    let ldims = component_dims(&ldec);

    let mut report = RecursiveLppReport {
        spp,
        components_lpp,
        lpp: is_lpp(lpp, d),
        precondition_failures: Vec::new(),
        violations: Vec::new(),
        equalities: 0,
        checked: 0,
    };
    for (idx, adv) in adversaries.iter().enumerate() {
        if adv.n() != n {
            report
                .precondition_failures
                .push((idx, "wrong number of variables".into()));
            continue;
        }
        if !is_spp(adv, d) {
            report
                .precondition_failures
                .push((idx, format!("{adv:?} is not {d}-SPP")));
            continue;
        }
        if hilbert_function(adv, window).values() != lhf.values() {
            report
                .precondition_failures
                .push((idx, format!("{adv:?} has a different Hilbert function")));
            continue;
        }
        let adims = component_dims(&decompose(adv, depth));
        for i in 0..=depth {
            for p in 0..=window {
                let a = prefix(&adims, i, p);
                let l = prefix(&ldims, i, p);
                report.checked += 1;
                if a == l {
                    report.equalities += 1;
                }
                if a < l {
                    report.violations.push(SumViolation {
                        adversary: idx,
                        i,
                        p,
                        adversary_sum: a,
                        lpp_sum: l,
                    });
                }
            }
        }
    }
    Ok(report)
}
