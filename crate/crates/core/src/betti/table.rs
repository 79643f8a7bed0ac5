use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::binomial;

/// Which module a table describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BettiConvention {
    /// The ideal `I` (column 0 = minimal generators).
    Ideal,
    /// The quotient `S/I` (column 0 = the single generator in degree 0).
    Quotient,
    /// Any other graded module.
    Module,
}

/// Graded Betti numbers `β_{i,j}`, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiTable {
    convention: BettiConvention,
    n: usize,
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    pub fn new(convention: BettiConvention, n: usize) -> Self {
        BettiTable {
            convention,
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn convention(&self) -> BettiConvention {
        self.convention
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Entry at column `i`, row `r` of the Macaulay grid (`j = i + r`).
    pub fn at_row(&self, i: usize, row: u32) -> u64 {
        self.get(i, row + i as u32)
    }

    pub fn add(&mut self, i: usize, j: u32, b: u64) {
        if b > 0 {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
    }

    /// Nonzero entries sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_j(&self) -> Option<u32> {
        self.entries.keys().map(|&(_, j)| j).max()
    }

    pub fn max_i(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Total Betti number in homological degree `i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .range((i, 0)..=(i, u32::MAX))
            .map(|(_, &b)| b)
            .sum()
    }

    /// Entrywise sum; conventions must agree.
    pub fn accumulate(&mut self, other: &BettiTable) {
        for (i, j, b) in other.entries() {
            self.add(i, j, b);
        }
    }

    /// Shifts internal degrees by `by`.
    pub fn twisted(&self, by: u32) -> BettiTable {
        let mut out = BettiTable::new(self.convention, self.n);
        for (i, j, b) in self.entries() {
            out.add(i, j + by, b);
        }
        out
    }

    /// Table of `S/I` from the table of `I`: `β_{i,j}(S/I) = β_{i−1,j}(I)`
    /// and `β_{0,0}(S/I) = 1`.
    pub fn to_quotient(&self) -> Result<BettiTable> {
        if self.convention != BettiConvention::Ideal {
            return Err(Error::Mismatch(
                "only ideal tables convert to quotient tables".into(),
            ));
        }
        let mut out = BettiTable::new(BettiConvention::Quotient, self.n);
        out.add(0, 0, 1);
        // (S/S has no resolution; the unit ideal maps to the empty table.)
        if self.get(0, 0) == 1 && self.entries.len() == 1 {
            return Ok(BettiTable::new(BettiConvention::Quotient, self.n));
        }
        for (i, j, b) in self.entries() {
            out.add(i + 1, j, b);
        }
        Ok(out)
    }

    /// `Σ_{i,j} (−1)^i β_{i,j} t^j` as coefficients indexed by `j`.
    pub fn k_polynomial(&self) -> Vec<i64> {
        let top = self.max_j().unwrap_or(0) as usize;
        let mut out = vec![0i64; top + 1];
        for (i, j, b) in self.entries() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out[j as usize] += sign * b as i64;
        }
        out
    }

    /// Macaulay grid: `β_{i,j}` in column `i`, row `j − i`, `-` for zero.
    pub fn format_grid(&self) -> String {
        let Some(max_i) = self.max_i() else {
            return "\n".to_string();
        };
        let rows: Vec<u32> = self.entries.keys().map(|&(i, j)| j - i as u32).collect();
        let (lo, hi) = (*rows.iter().min().unwrap(), *rows.iter().max().unwrap());
        let cell = |i: usize, r: u32| match self.at_row(i, r) {
            0 => "-".to_string(),
            b => b.to_string(),
        };
        let width = (0..=max_i)
            .flat_map(|i| (lo..=hi).map(move |r| (i, r)))
            .map(|(i, r)| cell(i, r).len())
            .chain((0..=max_i).map(|i| i.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = (lo..=hi)
            .map(|r| r.to_string().len() + 1)
            .max()
            .unwrap_or(1);

        let mut out = String::new();
        let mut line = " ".repeat(label);
        for i in 0..=max_i {
            let _ = write!(line, " {:>width$}", i);
        }
        out.push_str(line.trim_end());
        out.push('\n');
        for r in lo..=hi {
            let mut line = format!("{:>label$}", format!("{r}:"));
            for i in 0..=max_i {
                let _ = write!(line, " {:>width$}", cell(i, r));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// Parses a grid written by [`format_grid`](Self::format_grid) (any
    /// whitespace layout; `-` is zero).
    pub fn parse_grid(text: &str, convention: BettiConvention, n: usize) -> Result<BettiTable> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let mut table = BettiTable::new(convention, n);
        let Some(header) = lines.next() else {
            return Ok(table);
        };
        let cols = header
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::malformed(format!("bad column label `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        for line in lines {
            let (label, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::malformed(format!("row without label: `{line}`")))?;
            let row: u32 = label
                .trim()
                .parse()
                .map_err(|_| Error::malformed(format!("bad row label `{label}`")))?;
            let cells: Vec<&str> = rest.split_whitespace().collect();
            if cells.len() > cols.len() {
                return Err(Error::malformed(format!("row {row} has too many entries")));
            }
            for (&i, c) in cols.iter().zip(&cells) {
                let b = match *c {
                    "-" => 0,
                    c => c
                        .parse()
                        .map_err(|_| Error::malformed(format!("bad entry `{c}`")))?,
                };
                table.add(i, row + i as u32, b);
            }
        }
        Ok(table)
    }

    /// `{"convention":"ideal","entries":[{"i":0,"j":4,"b":3},...]}`, sorted
    /// by `(i, j)`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    pub fn from_json(text: &str, n: usize) -> Result<BettiTable> {
        let wire: Wire = serde_json::from_str(text).map_err(|e| Error::malformed(e.to_string()))?;
        let mut table = BettiTable::new(wire.convention, n);
        for e in wire.entries {
            table.add(e.i, e.j, e.b);
        }
        Ok(table)
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            convention: self.convention,
            entries: self
                .entries()
                .map(|(i, j, b)| JsonEntry { i, j, b })
                .collect(),
        }
        .serialize(serializer)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    convention: BettiConvention,
    entries: Vec<JsonEntry>,
}

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    i: usize,
    j: u32,
    b: u64,
}

/// A graded vector space given by its Hilbert function (finite support).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedVectorSpaceHF(BTreeMap<u32, u64>);

impl GradedVectorSpaceHF {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, degree: u32, dim: u64) {
        if dim > 0 {
            *self.0.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.0.iter().map(|(&a, &h)| (a, h))
    }

    /// Length `Σ h_a`.
    pub fn length(&self) -> u64 {
        self.0.values().sum()
    }
}

impl FromIterator<(u32, u64)> for GradedVectorSpaceHF {
    fn from_iter<T: IntoIterator<Item = (u32, u64)>>(iter: T) -> Self {
        let mut out = Self::new();
        for (a, h) in iter {
            out.add(a, h);
        }
        out
    }
}

/// Betti table of `V(M) = ⊕ k(−a)^{h_a}` over a polynomial ring in `m`
/// variables: each copy of `k(−a)` contributes the Koszul complex,
/// `β_{i,a+i} = h_a · binomial(m, i)`.
pub fn vbetti(h: &GradedVectorSpaceHF, m: usize) -> BettiTable {
    let mut out = BettiTable::new(BettiConvention::Module, m);
    for (a, ha) in h.iter() {
        for i in 0..=m {
            out.add(i, a + i as u32, ha * binomial(m as u64, i as u64));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vbetti_examples() {
        let t = vbetti(&[(0, 1)].into_iter().collect(), 2);
        assert_eq!(
            t.entries().collect::<Vec<_>>(),
            vec![(0, 0, 1), (1, 1, 2), (2, 2, 1)]
        );
        let t = vbetti(&[(3, 2)].into_iter().collect(), 1);
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 3, 2), (1, 4, 2)]);
        let t = vbetti(&[(1, 1), (2, 1)].into_iter().collect(), 2);
        assert_eq!(
            t.entries().collect::<Vec<_>>(),
            vec![
                (0, 1, 1),
                (0, 2, 1),
                (1, 2, 2),
                (1, 3, 2),
                (2, 3, 1),
                (2, 4, 1)
            ]
        );
    }

    #[test]
    fn grid_roundtrip() {
        let mut t = BettiTable::new(BettiConvention::Ideal, 2);
        t.add(0, 1, 2);
        t.add(1, 2, 1);
        let grid = t.format_grid();
        assert_eq!(grid, "   0 1\n1: 2 1\n");
        assert_eq!(
            BettiTable::parse_grid(&grid, BettiConvention::Ideal, 2).unwrap(),
            t
        );
    }

    #[test]
    fn empty_grid() {
        let t = BettiTable::new(BettiConvention::Ideal, 2);
        assert_eq!(t.format_grid(), "\n");
        assert!(BettiTable::parse_grid("\n", BettiConvention::Ideal, 2)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn zero_rows_are_printed() {
        let mut t = BettiTable::new(BettiConvention::Ideal, 3);
        t.add(0, 4, 4);
        t.add(0, 6, 1);
        t.add(1, 7, 3);
        assert_eq!(t.format_grid(), "   0 1\n4: 4 -\n5: - -\n6: 1 3\n");
    }

    #[test]
    fn json_shape() {
        let mut t = BettiTable::new(BettiConvention::Ideal, 3);
        t.add(1, 5, 2);
        t.add(0, 4, 3);
        assert_eq!(
            t.to_json(),
            r#"{"convention":"ideal","entries":[{"i":0,"j":4,"b":3},{"i":1,"j":5,"b":2}]}"#
        );
        assert_eq!(BettiTable::from_json(&t.to_json(), 3).unwrap(), t);
    }

    #[test]
    fn quotient_conversion() {
        let mut t = BettiTable::new(BettiConvention::Ideal, 2);
        t.add(0, 2, 2);
        t.add(1, 4, 1);
        let q = t.to_quotient().unwrap();
        assert_eq!(
            q.entries().collect::<Vec<_>>(),
            vec![(0, 0, 1), (1, 2, 2), (2, 4, 1)]
        );
        assert_eq!(q.k_polynomial(), vec![1, 0, -2, 0, 1]);
    }
}
