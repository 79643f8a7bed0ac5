//! Graded Betti tables of monomial ideals.
//!
//! Three independent routes are provided: closed formulas for stable ideals
//! ([`ek_betti`]), simplicial homology over the rationals for arbitrary
//! monomial ideals ([`koszul_betti`]), and the last-variable decomposition for
//! stable-plus-powers ideals ([`spp_betti`]).

mod ek;
mod koszul;
mod rank;
mod spp;
mod table;

pub use ek::{ek_betti, is_stable};
pub use koszul::{koszul_betti, koszul_betti_capped, lcm_lattice, DEFAULT_LATTICE_CAP};
pub use rank::integer_rank;
pub use spp::{spp_betti, spp_terms, SppTerms};
pub use table::{vbetti, BettiConvention, BettiTable, GradedVectorSpaceHF};

use crate::hilbert::hilbert_function;
use crate::ideal::MonomialIdeal;

/// Checks `Σ (−1)^i β_{i,j}(S/I) t^j = HS(S/I) (1 − t)^n` coefficientwise,
/// given the table of the ideal `I`. Returns the first mismatching degree.
pub fn euler_characteristic_mismatch(ideal: &MonomialIdeal, table: &BettiTable) -> Option<u32> {
    let quotient = table.to_quotient().ok()?;
    let lhs = quotient.k_polynomial();
    let top = quotient.max_j().unwrap_or(0);
    let hf = hilbert_function(ideal, top);
    // Multiply the truncated Hilbert series by (1 − t)^n.
    let mut series: Vec<i64> = hf.values().iter().map(|&v| v as i64).collect();
    for _ in 0..ideal.n() {
        for j in (1..series.len()).rev() {
            series[j] -= series[j - 1];
        }
    }
    (0..=top).find(|&j| {
        let l = lhs.get(j as usize).copied().unwrap_or(0);
        l != series[j as usize]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    #[test]
    fn euler_characteristic_on_examples() {
        let i = MonomialIdeal::new(
            3,
            [[1, 1, 0], [0, 1, 1], [1, 0, 1]].map(|e| Monomial::new(e.to_vec())),
        )
        .unwrap();
        let t = koszul_betti(&i).unwrap();
        assert_eq!(euler_characteristic_mismatch(&i, &t), None);
        let mut wrong = t.clone();
        wrong.add(1, 3, 1);
        assert_eq!(euler_characteristic_mismatch(&i, &wrong), Some(3));
    }
}
