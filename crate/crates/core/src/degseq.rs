//! Degree sequences `d = (d_1 <= ... <= d_n)` with entries in `N ∪ {∞}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// One entry of a degree sequence; `x^∞ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PowerDegree {
    Finite(u32),
    Infinite,
}

impl PowerDegree {
    pub fn finite(self) -> Option<u32> {
        match self {
            PowerDegree::Finite(d) => Some(d),
            PowerDegree::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, PowerDegree::Finite(_))
    }
}

impl fmt::Display for PowerDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PowerDegree::Finite(d) => write!(f, "{d}"),
            PowerDegree::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeSequence(Vec<PowerDegree>);

impl DegreeSequence {
    pub fn new(entries: Vec<PowerDegree>) -> Result<Self> {
        if entries.contains(&PowerDegree::Finite(0)) {
            return Err(Error::malformed("degree sequence entries must be >= 1"));
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::malformed(format!(
                "degree sequence {} is not weakly increasing",
                DegreeSequence(entries)
            )));
        }
        Ok(DegreeSequence(entries))
    }

    pub fn finite(entries: &[u32]) -> Result<Self> {
        Self::new(entries.iter().map(|&d| PowerDegree::Finite(d)).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[PowerDegree] {
        &self.0
    }

    pub fn get(&self, i: usize) -> PowerDegree {
        self.0[i]
    }

    pub fn last(&self) -> Option<PowerDegree> {
        self.0.last().copied()
    }

    pub fn all_finite(&self) -> bool {
        self.0.iter().all(|e| e.is_finite())
    }

    /// The finite entries, or an error naming the first infinite one.
    pub fn finite_entries(&self) -> Result<Vec<u32>> {
        self.0
            .iter()
            .map(|e| e.finite())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InfiniteDegree(self.to_string()))
    }

    /// The first `n - 1` entries.
    pub fn truncated(&self) -> DegreeSequence {
        DegreeSequence(self.0[..self.0.len().saturating_sub(1)].to_vec())
    }

    /// Socle degree `Σ d_i − n` of `S/℘`, for finite sequences.
    pub fn socle_degree(&self) -> Result<u32> {
        Ok(self.finite_entries()?.iter().map(|d| d - 1).sum())
    }

    /// `d_i >= Σ_{j<i} (d_j − 1) + 1` for all `i >= 3`.
    pub fn satisfies_growth_hypothesis(&self) -> bool {
        let mut partial: u64 = 0;
        for (i, e) in self.0.iter().enumerate() {
            let Some(d) = e.finite() else { return true };
            if i >= 2 && (d as u64) < partial + 1 {
                return false;
            }
            partial += d as u64 - 1;
        }
        true
    }

    /// The monomial complete intersection `℘ = (x_1^{d_1}, ..., x_n^{d_n})`.
    pub fn power_ideal(&self) -> MonomialIdeal {
        let n = self.n();
        MonomialIdeal::from_unchecked(
            n,
            self.0
                .iter()
                .enumerate()
                .filter_map(|(i, e)| e.finite().map(|d| Monomial::power(n, i, d)))
                .collect(),
        )
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &DegreeSequence) -> bool {
        self.n() == other.n() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Parses `4,4,8` or `3,3,inf`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|t| match t.trim() {
                "inf" | "∞" => Ok(PowerDegree::Infinite),
                t => t
                    .parse()
                    .map(PowerDegree::Finite)
                    .map_err(|_| Error::malformed(format!("bad degree `{t}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

/// `℘` for `d`.
pub fn power_ideal(d: &DegreeSequence) -> MonomialIdeal {
    d.power_ideal()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap()
    }

    #[test]
    fn power_ideals() {
        let d: DegreeSequence = "2,2".parse().unwrap();
        assert_eq!(d.power_ideal(), ideal(2, &[&[2, 0], &[0, 2]]));
        let d: DegreeSequence = "3,3,inf".parse().unwrap();
        assert_eq!(d.power_ideal(), ideal(3, &[&[3, 0, 0], &[0, 3, 0]]));
        let d: DegreeSequence = "1,1,1".parse().unwrap();
        assert_eq!(
            d.power_ideal(),
            ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
        );
    }

    #[test]
    fn validation() {
        assert!("3,2".parse::<DegreeSequence>().is_err());
        assert!("inf,2".parse::<DegreeSequence>().is_err());
        assert!("0,2".parse::<DegreeSequence>().is_err());
        assert!("2,x".parse::<DegreeSequence>().is_err());
        assert_eq!(
            "3,3,inf".parse::<DegreeSequence>().unwrap().to_string(),
            "(3,3,inf)"
        );
    }

    #[test]
    fn growth_hypothesis() {
        let ok = |s: &str| {
            s.parse::<DegreeSequence>()
                .unwrap()
                .satisfies_growth_hypothesis()
        };
        assert!(ok("3,3,5,inf"));
        assert!(!ok("3,3,3,inf"));
        assert!(ok("4,4,8"));
        assert!(ok("2,2"));
        assert!(!ok("2,2,2"));
    }

    #[test]
    fn socle() {
        assert_eq!(
            "4,4,8"
                .parse::<DegreeSequence>()
                .unwrap()
                .socle_degree()
                .unwrap(),
            13
        );
        assert!("4,inf"
            .parse::<DegreeSequence>()
            .unwrap()
            .socle_degree()
            .is_err());
    }
}
