//! Hilbert functions on an explicit degree window.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::count_monomials;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HfConvention {
    /// `j ↦ dim [I]_j`
    Ideal,
    /// `j ↦ dim [S/I]_j`
    Quotient,
}

/// Behaviour of the Hilbert function past the last listed degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tail {
    Zero,
    Constant(u64),
    /// Nothing is claimed past the window.
    Open,
}

impl fmt::Display for Tail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tail::Zero => write!(f, "zero"),
            Tail::Constant(c) => write!(f, "const:{c}"),
            Tail::Open => write!(f, "open"),
        }
    }
}

impl FromStr for Tail {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "zero" => Ok(Tail::Zero),
            "open" => Ok(Tail::Open),
            _ => s
                .strip_prefix("const:")
                .and_then(|c| c.trim().parse().ok())
                .map(Tail::Constant)
                .ok_or_else(|| Error::malformed(format!("unknown tail mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertFunction {
    convention: HfConvention,
    n: usize,
    values: Vec<u64>,
    tail: Tail,
}

impl HilbertFunction {
    /// A quotient Hilbert function `h_0, ..., h_D` of `S/I` in `n` variables.
    pub fn quotient(n: usize, values: Vec<u64>, tail: Tail) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::malformed("Hilbert function needs at least h_0"));
        }
        for (j, &h) in values.iter().enumerate() {
            let max = count_monomials(n, j as u32);
            if h > max {
                return Err(Error::OutOfRange {
                    what: "Hilbert function value",
                    detail: format!("h_{j} = {h} exceeds {max} monomials of degree {j}"),
                });
            }
        }
        if let Tail::Constant(c) = tail {
            if *values.last().unwrap() != c {
                return Err(Error::malformed(format!(
                    "constant tail {c} disagrees with last listed value {}",
                    values.last().unwrap()
                )));
            }
        }
        Ok(HilbertFunction {
            convention: HfConvention::Quotient,
            n,
            values,
            tail,
        })
    }

    /// Parses `"1,3,6,10"`.
    pub fn parse_values(s: &str) -> Result<Vec<u64>> {
        s.split(',')
            .map(|t| {
                t.trim().parse::<u64>().map_err(|_| {
                    Error::malformed(format!("bad Hilbert function entry `{}`", t.trim()))
                })
            })
            .collect()
    }

    pub fn convention(&self) -> HfConvention {
        self.convention
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    /// Last listed degree `D`.
    pub fn bound(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    /// Value at `j`, consulting the tail past the window.
    pub fn value_at(&self, j: u32) -> Option<u64> {
        if let Some(&v) = self.values.get(j as usize) {
            return Some(v);
        }
        match self.tail {
            Tail::Zero => Some(0),
            Tail::Constant(c) => Some(c),
            Tail::Open => None,
        }
    }

    /// Same function listed through degree `d` (padding with the tail).
    pub fn extended_to(&self, d: u32) -> Result<Self> {
        let mut values = Vec::with_capacity(d as usize + 1);
        for j in 0..=d {
            values.push(self.value_at(j).ok_or_else(|| Error::InsufficientBound {
                bound: self.bound(),
                reason: format!("open tail cannot be extended to degree {d}"),
            })?);
        }
        let mut out = self.clone();
        out.values = values;
        Ok(out)
    }

    /// Converts between quotient and ideal conventions degree by degree.
    pub fn complement(&self) -> Self {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(j, &h)| count_monomials(self.n, j as u32) - h)
            .collect();
        let convention = match self.convention {
            HfConvention::Ideal => HfConvention::Quotient,
            HfConvention::Quotient => HfConvention::Ideal,
        };
        HilbertFunction {
            convention,
            n: self.n,
            values,
            // The complement of a tail is not a constant in general.
            tail: Tail::Open,
        }
    }
}

/// Hilbert function of `S/I` on degrees `0..=bound`, by enumeration.
pub fn hilbert_function(ideal: &MonomialIdeal, bound: u32) -> HilbertFunction {
    let n = ideal.n();
    let values: Vec<u64> = (0..=bound)
        .map(|j| count_monomials(n, j) - ideal.dim_in_degree(j))
        .collect();
    let artinian_by = (0..n)
        .map(|v| ideal.pure_power_exponent(v).map(|e| e.saturating_sub(1)))
        .sum::<Option<u32>>();
    let tail = match artinian_by {
        Some(s) if bound >= s || ideal.is_unit() => Tail::Zero,
        _ => Tail::Open,
    };
    HilbertFunction {
        convention: HfConvention::Quotient,
        n,
        values,
        tail,
    }
}

/// Hilbert function of the ideal itself, `j ↦ dim [I]_j`.
pub fn ideal_dims(ideal: &MonomialIdeal, bound: u32) -> Vec<u64> {
    (0..=bound).map(|j| ideal.dim_in_degree(j)).collect()
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
        let hf = hilbert_function(&ideal(2, &[&[2, 0], &[0, 2]]), 3);
        assert_eq!(hf.values(), &[1, 2, 1, 0]);
        assert_eq!(hf.tail(), Tail::Zero);
    }

    #[test]
    fn full_ring() {
        let hf = hilbert_function(&MonomialIdeal::zero(2), 3);
        assert_eq!(hf.values(), &[1, 2, 3, 4]);
        assert_eq!(hf.tail(), Tail::Open);
    }

    #[test]
    fn standard_monomials() {
        // Standard monomials: 1 | x1, x2 | x2^2 | none.
        let hf = hilbert_function(&ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]), 3);
        assert_eq!(hf.values(), &[1, 2, 1, 0]);
    }

    #[test]
    fn tail_parsing() {
        assert_eq!("zero".parse::<Tail>().unwrap(), Tail::Zero);
        assert_eq!("const:17".parse::<Tail>().unwrap(), Tail::Constant(17));
        assert_eq!("open".parse::<Tail>().unwrap(), Tail::Open);
        assert!("const:x".parse::<Tail>().is_err());
    }

    #[test]
    fn quotient_validation() {
        assert!(HilbertFunction::quotient(2, vec![1, 3], Tail::Open).is_err());
        assert!(HilbertFunction::quotient(2, vec![1, 2, 2], Tail::Constant(3)).is_err());
        let h = HilbertFunction::quotient(2, vec![1, 2, 2], Tail::Constant(2)).unwrap();
        assert_eq!(h.value_at(10), Some(2));
        assert_eq!(h.extended_to(4).unwrap().values(), &[1, 2, 2, 2, 2]);
    }
}
