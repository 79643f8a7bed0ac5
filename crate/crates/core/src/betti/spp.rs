//! Betti tables of stable-plus-powers ideals by peeling off the last variable.
//!
//! For a `d`-SPP ideal `I` with `d_n < ∞`, `x_n` is a nonzerodivisor on `S`
//! and on `I`, so `β^S(I) = β^S̄(I / x_n I)`. As an `S̄`-module,
//!
//! ```text
//! I / x_n I ≅ I_0 ⊕ V(⊕_{h=1}^{d_n−1} I_h / I_{h−1} (−h)) ⊕ S̄/I_{d_n−1} (−d_n)
//! ```
//!
//! where the middle summand is annihilated by `m_S̄` because `m_S̄ I_h ⊆ I_{h−1}`.
//! The outer summands are handled recursively when they are SPP for the
//! truncated degree sequence, otherwise by the Koszul oracle.

use super::koszul::koszul_betti;
use super::table::{vbetti, BettiConvention, BettiTable, GradedVectorSpaceHF};
use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lpp::{decompose, is_spp};

/// The three summands of the decomposition and their sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SppTerms {
    pub base: BettiTable,
    pub middle: BettiTable,
    pub top: BettiTable,
    pub total: BettiTable,
}

pub fn spp_betti(ideal: &MonomialIdeal, d: &DegreeSequence) -> Result<BettiTable> {
    Ok(spp_terms(ideal, d)?.total)
}

pub fn spp_terms(ideal: &MonomialIdeal, d: &DegreeSequence) -> Result<SppTerms> {
    let n = ideal.n();
    if n == 0 || d.n() != n {
        return Err(Error::Mismatch(format!(
            "degree sequence {d} does not fit a ring in {n} variables"
        )));
    }
    let dn = d
        .get(n - 1)
        .finite()
        .ok_or_else(|| Error::InfiniteDegree(format!("last entry of {d}")))?;
    if !is_spp(ideal, d) {
        return Err(Error::NotStable("stable-plus-powers"));
    }

    if n == 1 {
        // (x_1^a): a single generator.
        let mut total = BettiTable::new(BettiConvention::Ideal, 1);
        total.add(0, ideal.gens()[0].degree(), 1);
        let empty = BettiTable::new(BettiConvention::Ideal, 1);
        return Ok(SppTerms {
            base: total.clone(),
            middle: empty.clone(),
            top: empty,
            total,
        });
    }

    let dbar = d.truncated();
    let dec = decompose(ideal, dn as usize - 1);

    let base = relabel(component_betti(dec.component(0), &dbar)?, n);

    let mut socle = GradedVectorSpaceHF::new();
    for h in 1..dn as usize {
        let upper = dec.component(h);
        let lower = dec.component(h - 1);
        // I_h / I_{h−1} is spanned by the generators of I_h outside I_{h−1}.
        for g in upper.gens().iter().filter(|g| !lower.contains(g)) {
            socle.add(g.degree() + h as u32, 1);
        }
    }
    let middle = relabel(vbetti(&socle, n - 1), n);

    let last = dec.component(dn as usize - 1);
    let mut top = BettiTable::new(BettiConvention::Ideal, n);
    if !last.is_unit() {
        top.add(0, dn, 1);
        for (i, j, b) in component_betti(last, &dbar)?.entries() {
            top.add(i + 1, j + dn, b);
        }
    }

    let mut total = BettiTable::new(BettiConvention::Ideal, n);
    total.accumulate(&base);
    total.accumulate(&middle);
    total.accumulate(&top);
    Ok(SppTerms {
        base,
        middle,
        top,
        total,
    })
}

fn component_betti(component: &MonomialIdeal, dbar: &DegreeSequence) -> Result<BettiTable> {
    if is_spp(component, dbar) && dbar.last().is_some_and(|e| e.is_finite()) {
        spp_betti(component, dbar)
    } else {
        koszul_betti(component)
    }
}

fn relabel(table: BettiTable, n: usize) -> BettiTable {
    let mut out = BettiTable::new(BettiConvention::Ideal, n);
    out.accumulate(&table);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap()
    }

    #[test]
    fn complete_intersection() {
        let d: DegreeSequence = "2,2".parse().unwrap();
        let t = spp_betti(&d.power_ideal(), &d).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 2, 2), (1, 4, 1)]);
    }

    #[test]
    fn matches_koszul_on_small_example() {
        let d: DegreeSequence = "2,3".parse().unwrap();
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(spp_betti(&i, &d).unwrap(), koszul_betti(&i).unwrap());
    }

    #[test]
    fn errors() {
        let d: DegreeSequence = "2,inf".parse().unwrap();
        assert!(matches!(
            spp_betti(&ideal(2, &[&[2, 0]]), &d),
            Err(Error::InfiniteDegree(_))
        ));
        let d: DegreeSequence = "2,2".parse().unwrap();
        assert_eq!(
            spp_betti(&ideal(2, &[&[3, 0], &[0, 2]]), &d),
            Err(Error::NotStable("stable-plus-powers"))
        );
        // (x2) is not x2-stable and does not contain x1^2.
        assert!(spp_betti(&ideal(2, &[&[0, 1]]), &d).is_err());
    }
}
