//! Betti numbers of arbitrary monomial ideals from the upper Koszul
//! simplicial complexes
//! `K^b(I) = { squarefree σ ⊆ supp(b) : x^{b−σ} ∈ I }`, using
//! `β_{i,b}(I) = dim H̃_{i−1}(K^b(I); Q)`. Only multidegrees in the lcm lattice
//! of the minimal generators can carry nonzero Betti numbers.

use std::collections::HashSet;

use rayon::prelude::*;

use super::rank::integer_rank;
use super::table::{BettiConvention, BettiTable};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub const DEFAULT_LATTICE_CAP: usize = 1 << 16;

/// All lcms of nonempty subsets of the minimal generators.
pub fn lcm_lattice(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>> {
    let gens = ideal.gens();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in gens {
                let l = f.lcm(g);
                if seen.insert(l.clone()) {
                    next.push(l);
                    if seen.len() > cap {
                        return Err(Error::CapExceeded {
                            what: "lcm lattice",
                            count: seen.len(),
                            cap,
                        });
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Reduced homology ranks `dim H̃_{k}(K^b)` for `k = −1, 0, 1, ...`, returned
/// as a vector indexed by `k + 1` (i.e. by face cardinality).
pub(crate) fn upper_koszul_homology(ideal: &MonomialIdeal, b: &Monomial) -> Vec<u64> {
    let support: Vec<usize> = (0..b.n()).filter(|&v| b.exponents()[v] > 0).collect();
    let s = support.len();
    // Faces as bitmasks over `support`.
    let faces_by_size: Vec<Vec<u32>> = {
        let mut by = vec![Vec::new(); s + 1];
        for mask in 0u32..(1 << s) {
            let mut e = b.exponents().to_vec();
            for (k, &v) in support.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    e[v] -= 1;
                }
            }
            if ideal.contains(&Monomial::new(e)) {
                by[mask.count_ones() as usize].push(mask);
            }
        }
        by
    };
    if faces_by_size[0].is_empty() {
        return vec![0; s + 1];
    }
    // rank of ∂_k : C_k → C_{k−1}, faces of size k to size k−1.
    let ranks: Vec<usize> = (0..=s + 1)
        .map(|k| {
            if k == 0 || k > s || faces_by_size[k].is_empty() || faces_by_size[k - 1].is_empty() {
                return 0;
            }
            let lower = &faces_by_size[k - 1];
            let rows: Vec<Vec<i128>> = faces_by_size[k]
                .iter()
                .map(|&face| {
                    let mut row = vec![0i128; lower.len()];
                    let mut sign = 1i128;
                    for bit in 0..s {
                        if face & (1 << bit) != 0 {
                            let sub = face & !(1 << bit);
                            if let Ok(pos) = lower.binary_search(&sub) {
                                row[pos] = sign;
                            }
                            sign = -sign;
                        }
                    }
                    row
                })
                .collect();
            integer_rank(rows)
        })
        .collect();
    (0..=s)
        .map(|k| {
            let dim = faces_by_size[k].len() as i64;
            (dim - ranks[k] as i64 - ranks[k + 1] as i64) as u64
        })
        .collect()
}

/// Graded Betti table of the ideal via upper Koszul complexes over `Q`.
pub fn koszul_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    koszul_betti_capped(ideal, DEFAULT_LATTICE_CAP)
}

pub fn koszul_betti_capped(ideal: &MonomialIdeal, cap: usize) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::malformed("the zero ideal has no Betti table"));
    }
    let lattice = lcm_lattice(ideal, cap)?;
    let contributions: Vec<(u32, Vec<u64>)> = lattice
        .par_iter()
        .map(|b| (b.degree(), upper_koszul_homology(ideal, b)))
        .collect();
    let mut table = BettiTable::new(BettiConvention::Ideal, ideal.n());
    for (deg, homology) in contributions {
        for (i, &h) in homology.iter().enumerate() {
            table.add(i, deg, h);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap()
    }

    fn entries(t: &BettiTable) -> Vec<(usize, u32, u64)> {
        t.entries().collect()
    }

    #[test]
    fn complete_intersection() {
        let t = koszul_betti(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(entries(&t), vec![(0, 2, 1), (0, 3, 1), (1, 5, 1)]);
    }

    #[test]
    fn triangle_edge_ideal() {
        let t = koszul_betti(&ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])).unwrap();
        assert_eq!(entries(&t), vec![(0, 2, 3), (1, 3, 2)]);
    }

    #[test]
    fn square_of_maximal_ideal() {
        let t = koszul_betti(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(entries(&t), vec![(0, 2, 3), (1, 3, 2)]);
    }

    #[test]
    fn unit_and_zero() {
        let t = koszul_betti(&MonomialIdeal::unit(2)).unwrap();
        assert_eq!(entries(&t), vec![(0, 0, 1)]);
        assert!(koszul_betti(&MonomialIdeal::zero(2)).is_err());
    }

    #[test]
    fn lattice_cap() {
        let i = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[1, 1, 1]]);
        assert!(matches!(
            koszul_betti_capped(&i, 5),
            Err(Error::CapExceeded { .. })
        ));
    }
}
