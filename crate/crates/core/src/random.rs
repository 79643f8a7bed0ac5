//! Seeded random monomial ideals.
//!
//! Every generator draws from a `ChaCha8Rng` seeded by the caller, so an
//! instance is a pure function of its parameters and seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::degseq::DegreeSequence;
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_monomial(rng: &mut impl Rng, n: usize, min_degree: u32, max_degree: u32) -> Monomial {
    let j = rng.gen_range(min_degree..=max_degree);
    monomials_of_degree(n, j)
        .choose(rng)
        .cloned()
        .expect("every degree has monomials")
}

/// `℘ ⊊ I ⊊ S`: starts from `℘` and adds up to `extra` random monomials of
/// degree `1..=s`, retrying until the ideal grows.
pub fn random_artinian(
    rng: &mut impl Rng,
    d: &DegreeSequence,
    extra: usize,
) -> Result<MonomialIdeal> {
    let n = d.n();
    let power = d.power_ideal();
    let socle = d.socle_degree()?;
    loop {
        let k = rng.gen_range(1..=extra.max(1));
        let mut gens = power.gens().to_vec();
        gens.extend((0..k).map(|_| random_monomial(rng, n, 1, socle.max(1))));
        let ideal = MonomialIdeal::new(n, gens)?;
        if ideal != power && !ideal.is_unit() {
            return Ok(ideal);
        }
    }
}

/// Closes `gens` under `u ↦ x_i u / x_max(u)` for `i < max(u)`; the ideal
/// they generate is then stable.
fn stable_closure(n: usize, mut gens: Vec<Monomial>) -> MonomialIdeal {
    let mut k = 0;
    while k < gens.len() {
        let u = gens[k].clone();
        if let Some(m) = u.max_var() {
            let q = u.div_var(m).expect("max_var divides");
            for i in 0..m {
                let moved = q.mul_var(i);
                if !gens.contains(&moved) {
                    gens.push(moved);
                }
            }
        }
        k += 1;
    }
    MonomialIdeal::from_unchecked(n, gens)
}

/// Stable ideal generated by the stable closure of `1..=count` random
/// monomials of degree `1..=max_degree`.
pub fn random_stable(rng: &mut impl Rng, n: usize, max_degree: u32, count: usize) -> MonomialIdeal {
    let k = rng.gen_range(1..=count.max(1));
    let gens = (0..k)
        .map(|_| random_monomial(rng, n, 1, max_degree))
        .collect();
    stable_closure(n, gens)
}

/// `d`-SPP ideal: `℘` plus random monomials, closed under
/// `u ↦ x_i u / x_n` for `x_n | u` and `i < n`.
pub fn random_spp(rng: &mut impl Rng, d: &DegreeSequence, extra: usize) -> Result<MonomialIdeal> {
    let n = d.n();
    let socle = d.socle_degree()?;
    let k = rng.gen_range(0..=extra);
    let mut gens = d.power_ideal().gens().to_vec();
    gens.extend((0..k).map(|_| random_monomial(rng, n, 1, socle.max(1))));
    let last = n - 1;
    let mut idx = 0;
    while idx < gens.len() {
        if let Some(q) = gens[idx].div_var(last) {
            for i in 0..last {
                let moved = q.mul_var(i);
                if !gens.contains(&moved) {
                    gens.push(moved);
                }
            }
        }
        idx += 1;
    }
    Ok(MonomialIdeal::from_unchecked(n, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::is_stable;
    use crate::lpp::is_spp;

    #[test]
    fn generators_are_deterministic_and_valid() {
        let d: DegreeSequence = "2,2,3".parse().unwrap();
        for seed in 0..50 {
            let a = random_artinian(&mut rng(seed), &d, 4).unwrap();
            assert_eq!(a, random_artinian(&mut rng(seed), &d, 4).unwrap());
            assert!(a.contains_ideal(&d.power_ideal()) && a != d.power_ideal() && !a.is_unit());

            let s = random_stable(&mut rng(seed), 3, 5, 4);
            assert!(is_stable(&s));

            let p = random_spp(&mut rng(seed), &d, 4).unwrap();
            assert!(is_spp(&p, &d));
        }
    }
}
