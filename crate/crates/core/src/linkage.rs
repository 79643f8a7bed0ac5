//! Direct linkage through the monomial complete intersection `℘`.

use serde::Serialize;

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_function, HfConvention, HilbertFunction, Tail};
use crate::ideal::MonomialIdeal;
use crate::lpp::{decompose, is_lpp, is_spp};

/// `J = ℘ : I`, requiring `℘ ⊊ I ⊊ S` and a finite degree sequence.
pub fn link(ideal: &MonomialIdeal, d: &DegreeSequence) -> Result<MonomialIdeal> {
    check_linkable(ideal, d)?;
    d.power_ideal().colon(ideal)
}

fn check_linkable(ideal: &MonomialIdeal, d: &DegreeSequence) -> Result<()> {
    if d.n() != ideal.n() {
        return Err(Error::Mismatch(format!(
            "degree sequence {d} does not fit a ring in {} variables",
            ideal.n()
        )));
    }
    d.finite_entries()?;
    let power = d.power_ideal();
    if !ideal.contains_ideal(&power) {
        return Err(Error::Containment(format!(
            "{power:?} is not contained in {ideal:?}"
        )));
    }
    if *ideal == power {
        return Err(Error::Containment("I equals ℘".into()));
    }
    if ideal.is_unit() {
        return Err(Error::Containment("I is the unit ideal".into()));
    }
    Ok(())
}

/// Hilbert function of any direct link: `j ↦ HF(S/℘; s−j) − h_{s−j}`.
pub fn linked_hf(h: &HilbertFunction, d: &DegreeSequence) -> Result<HilbertFunction> {
    if h.convention() != HfConvention::Quotient || h.n() != d.n() {
        return Err(Error::Mismatch(
            "expected a quotient Hilbert function of the same ring".into(),
        ));
    }
    let s = d.socle_degree()?;
    let ci = hilbert_function(&d.power_ideal(), s + 1);
    let value = |j: u32| {
        h.value_at(j).ok_or_else(|| Error::InsufficientBound {
            bound: h.bound(),
            reason: format!("value at degree {j} is needed up to the socle degree {s}"),
        })
    };
    for j in 0..=s.max(h.bound()) {
        let hj = value(j)?;
        let cj = ci.value_at(j).unwrap_or(0);
        if hj > cj {
            return Err(Error::OutOfRange {
                what: "Hilbert function",
                detail: format!("h_{j} = {hj} exceeds HF(S/℘; {j}) = {cj}"),
            });
        }
    }
    let values = (0..=s)
        .map(|j| Ok(ci.values()[(s - j) as usize] - value(s - j)?))
        .collect::<Result<Vec<u64>>>()?;
    HilbertFunction::quotient(h.n(), values, Tail::Zero)
}

/// A pair of directly linked Artinian monomial ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkagePair {
    pub d: DegreeSequence,
    pub ideal: MonomialIdeal,
    pub linked: MonomialIdeal,
    pub socle: u32,
}

impl LinkagePair {
    pub fn new(ideal: MonomialIdeal, d: DegreeSequence) -> Result<Self> {
        let linked = link(&ideal, &d)?;
        let socle = d.socle_degree()?;
        Ok(LinkagePair {
            d,
            ideal,
            linked,
            socle,
        })
    }

    /// `℘ : J = I`.
    pub fn is_involution(&self) -> bool {
        link(&self.linked, &self.d).is_ok_and(|back| back == self.ideal)
    }

    /// First degree `j <= s` where `HF(S/I; j) + HF(S/J; s−j) = HF(S/℘; j)`
    /// fails, if any.
    pub fn hilbert_identity_failure(&self) -> Option<u32> {
        let s = self.socle;
        let hi = hilbert_function(&self.ideal, s);
        let hj = hilbert_function(&self.linked, s);
        let hp = hilbert_function(&self.d.power_ideal(), s);
        (0..=s).find(|&j| {
            hi.values()[j as usize] + hj.values()[(s - j) as usize] != hp.values()[j as usize]
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkageReport {
    pub linked: MonomialIdeal,
    /// `(i, J_i == ℘̄ : I_{d_n−i−1})` for `0 <= i < d_n`.
    pub components: Vec<(usize, bool)>,
    pub ideal_spp: bool,
    pub linked_spp: bool,
    pub ideal_lpp: bool,
    pub linked_lpp: bool,
}

impl LinkageReport {
    pub fn components_hold(&self) -> bool {
        self.components.iter().all(|&(_, ok)| ok)
    }

    pub fn spp_biconditional(&self) -> bool {
        self.ideal_spp == self.linked_spp
    }

    pub fn lpp_biconditional(&self) -> bool {
        self.ideal_lpp == self.linked_lpp
    }

    pub fn passes(&self) -> bool {
        self.components_hold() && self.spp_biconditional() && self.lpp_biconditional()
    }
}

/// Computes `J = ℘ : I` and checks the component identity
/// `J_i = ℘̄ : I_{d_n−i−1}` together with the SPP and LPP biconditionals,
/// each direction evaluated independently.
pub fn check_linkage(ideal: &MonomialIdeal, d: &DegreeSequence) -> Result<LinkageReport> {
    let linked = link(ideal, d)?;
    let n = ideal.n();
    let dn = d.finite_entries()?[n - 1] as usize;
    let pbar = d.truncated().power_ideal();
    let idec = decompose(ideal, dn);
    let jdec = decompose(&linked, dn);
    let components = (0..dn)
        .map(|i| {
            let other = idec.component(dn - i - 1);
            // ℘̄ : 0 is the whole ring; only reachable when n = 1.
            let expected = if other.is_zero() {
                MonomialIdeal::unit(n - 1)
            } else {
                pbar.colon(other)?
            };
            Ok((i, *jdec.component(i) == expected))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinkageReport {
        components,
        ideal_spp: is_spp(ideal, d),
        linked_spp: is_spp(&linked, d),
        ideal_lpp: is_lpp(ideal, d),
        linked_lpp: is_lpp(&linked, d),
        linked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{monomials_of_degree, Monomial};

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap()
    }

    fn ds(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    /// `{ m : m·I ⊆ ℘ }` restricted to degrees `<= top`.
    fn brute_colon(power: &MonomialIdeal, i: &MonomialIdeal, top: u32) -> Vec<Monomial> {
        (0..=top)
            .flat_map(|j| monomials_of_degree(power.n(), j))
            .filter(|m| i.gens().iter().all(|g| power.contains(&m.mul(g))))
            .collect()
    }

    #[test]
    fn self_linked() {
        let i = ideal(2, &[&[1, 0], &[0, 2]]);
        let d = ds("2,2");
        let j = link(&i, &d).unwrap();
        assert_eq!(j, i);
        let brute = brute_colon(&d.power_ideal(), &i, 3);
        for m in (0..=3).flat_map(|k| monomials_of_degree(2, k)) {
            assert_eq!(brute.contains(&m), j.contains(&m));
        }
    }

    #[test]
    fn maximal_ideal_links_to_square() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let d = ds("2,2");
        let j = link(&i, &d).unwrap();
        assert_eq!(j, ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        let pair = LinkagePair::new(i, d).unwrap();
        assert!(pair.is_involution());
        assert_eq!(pair.hilbert_identity_failure(), None);
    }

    #[test]
    fn one_variable() {
        let i = ideal(1, &[&[1]]);
        assert_eq!(link(&i, &ds("2")).unwrap(), i);
        let report = check_linkage(&i, &ds("2")).unwrap();
        assert!(report.passes(), "{report:?}");
    }

    #[test]
    fn containment_errors() {
        let d = ds("2,2");
        assert!(matches!(
            link(&d.power_ideal(), &d),
            Err(Error::Containment(_))
        ));
        assert!(matches!(
            link(&MonomialIdeal::unit(2), &d),
            Err(Error::Containment(_))
        ));
        assert!(matches!(
            link(&ideal(2, &[&[3, 0], &[0, 1]]), &d),
            Err(Error::Containment(_))
        ));
        assert!(matches!(
            link(&ideal(2, &[&[1, 0], &[0, 1]]), &ds("2,inf")),
            Err(Error::InfiniteDegree(_))
        ));
    }

    #[test]
    fn linked_hilbert_functions() {
        let d = ds("2,2");
        let h = HilbertFunction::quotient(2, vec![1, 1, 0], Tail::Zero).unwrap();
        assert_eq!(linked_hf(&h, &d).unwrap().values(), &[1, 1, 0]);
        let h = HilbertFunction::quotient(2, vec![1, 0], Tail::Zero).unwrap();
        assert_eq!(linked_hf(&h, &d).unwrap().values(), &[1, 2, 0]);
        let h = HilbertFunction::quotient(1, vec![1, 0], Tail::Zero).unwrap();
        assert_eq!(linked_hf(&h, &ds("2")).unwrap().values(), &[1, 0]);
        let h = HilbertFunction::quotient(2, vec![1, 2, 2], Tail::Zero).unwrap();
        assert!(matches!(linked_hf(&h, &d), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn linkage_report_examples() {
        let d = ds("2,2");
        let r = check_linkage(&ideal(2, &[&[1, 0], &[0, 1]]), &d).unwrap();
        assert_eq!(r.linked, ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert!(r.passes(), "{r:?}");
        let r = check_linkage(&ideal(2, &[&[1, 0], &[0, 2]]), &d).unwrap();
        assert!(r.passes() && r.ideal_spp && r.linked_spp);
    }
}
