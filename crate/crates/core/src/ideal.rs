//! Monomial ideals in canonical form.
//!
//! An ideal is stored as its minimal generating set sorted lex-largest first,
//! so two ideals are equal exactly when their canonical forms are equal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, removing redundant generators.
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|m| m.n() != n) {
            return Err(Error::malformed(format!(
                "monomial {bad} has {} exponents, expected {n}",
                bad.n()
            )));
        }
        Ok(Self::from_unchecked(n, gens))
    }

    pub(crate) fn from_unchecked(n: usize, mut gens: Vec<Monomial>) -> Self {
        // Sorting by degree first means a generator can only be divided by one
        // already kept.
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { n, gens: kept }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generators, lex-largest first.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.n, other.n);
        Self::from_unchecked(
            self.n,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        )
    }

    /// Intersection via pairwise lcms of generators.
    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.n, other.n);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::from_unchecked(self.n, gens)
    }

    /// `self : (m)`.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        Self::from_unchecked(
            self.n,
            self.gens.iter().map(|g| g.saturating_div(m)).collect(),
        )
    }

    /// `self : other = ⋂_{g ∈ G(other)} (self : g)`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::Mismatch(format!(
                "colon of ideals in {} and {} variables",
                self.n, other.n
            )));
        }
        let mut gens = other.gens.iter();
        let first = gens.next().ok_or(Error::UndefinedColon)?;
        Ok(gens.fold(self.colon_monomial(first), |acc, g| {
            acc.intersection(&self.colon_monomial(g))
        }))
    }

    /// Degree-`j` monomials of the ideal, lex-largest first.
    pub fn monomials_in_degree(&self, j: u32) -> Vec<Monomial> {
        monomials_of_degree(self.n, j)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    /// Number of degree-`j` monomials in the ideal.
    pub fn dim_in_degree(&self, j: u32) -> u64 {
        monomials_of_degree(self.n, j)
            .iter()
            .filter(|m| self.contains(m))
            .count() as u64
    }

    /// Number of minimal generators per degree, indexed by degree.
    pub fn generator_degrees(&self) -> Vec<u64> {
        let top = self.max_degree().unwrap_or(0) as usize;
        let mut out = vec![0; top + 1];
        for g in &self.gens {
            out[g.degree() as usize] += 1;
        }
        out
    }

    /// The smallest `e >= 1` with `x_var^e` in the ideal, if any.
    pub fn pure_power_exponent(&self, var: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter(|g| {
                g.exponents()
                    .iter()
                    .enumerate()
                    .all(|(k, &e)| k == var || e == 0)
            })
            .map(|g| g.exponents()[var].max(1))
            .min()
    }

    pub fn is_artinian(&self) -> bool {
        (0..self.n).all(|v| self.pure_power_exponent(v).is_some())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.gens
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap()
    }

    #[test]
    fn normalize_removes_multiples() {
        assert_eq!(ideal(2, &[&[2, 0], &[2, 1]]), ideal(2, &[&[2, 0]]));
        assert_eq!(ideal(2, &[]), MonomialIdeal::zero(2));
        assert_eq!(
            ideal(2, &[&[1, 1], &[0, 2], &[1, 3]]).gens(),
            ideal(2, &[&[1, 1], &[0, 2]]).gens()
        );
    }

    #[test]
    fn normalize_rejects_bad_lengths() {
        let err = MonomialIdeal::new(2, [Monomial::new(vec![1, 0, 0])]).unwrap_err();
        assert!(matches!(err, Error::Malformed(_)));
    }

    #[test]
    fn membership() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(!i.contains(&Monomial::new(vec![1, 1])));
        assert!(i.contains(&Monomial::new(vec![2, 1])));
        assert!(!MonomialIdeal::zero(2).contains(&Monomial::new(vec![5, 5])));
    }

    #[test]
    fn colon_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(
            i.colon(&ideal(2, &[&[1, 0]])).unwrap(),
            ideal(2, &[&[1, 0], &[0, 2]])
        );
        assert_eq!(i.colon(&MonomialIdeal::unit(2)).unwrap(), i);
        assert_eq!(
            ideal(2, &[&[2, 1]]).colon(&ideal(2, &[&[0, 1]])).unwrap(),
            ideal(2, &[&[2, 0]])
        );
        assert_eq!(i.colon(&MonomialIdeal::zero(2)), Err(Error::UndefinedColon));
    }

    #[test]
    fn colon_against_enumeration() {
        // (x1^2, x2^2) : (x1) enumerated over degrees <= 3.
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        let x1 = Monomial::new(vec![1, 0]);
        let expected = ideal(2, &[&[1, 0], &[0, 2]]);
        for j in 0..=3 {
            for m in monomials_of_degree(2, j) {
                assert_eq!(i.contains(&m.mul(&x1)), expected.contains(&m), "{m}");
            }
        }
    }

    #[test]
    fn pure_powers() {
        let i = ideal(2, &[&[3, 0], &[1, 1]]);
        assert_eq!(i.pure_power_exponent(0), Some(3));
        assert_eq!(i.pure_power_exponent(1), None);
        assert_eq!(MonomialIdeal::unit(2).pure_power_exponent(1), Some(1));
    }
}
