//! Exhaustive enumeration of small families of monomial ideals.
//!
//! Ideals containing an Artinian power ideal `℘` are enumerated through their
//! standard monomials: in each degree the monomials outside `I` form a set
//! whose one-variable divisors all lie outside `I` in the previous degree.
//! Choosing these sets degree by degree up to the socle degree of `S/℘`
//! reaches every such ideal exactly once.

use std::collections::HashSet;

use itertools::Itertools;

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use crate::hilbert::{HfConvention, HilbertFunction};
use crate::ideal::MonomialIdeal;
use crate::lexmac::upper_shadow;
use crate::monomial::{monomials_of_degree, Monomial};

type Choices = Box<dyn Iterator<Item = Vec<Monomial>>>;

struct Frame {
    /// Degree-`j` monomials outside `℘` whose divisors are all standard.
    candidates: Vec<Monomial>,
    choices: Choices,
}

/// Lazy stream of the ideals `I ⊇ ℘` whose quotient Hilbert function meets
/// the per-degree constraints; see [`enumerate_ideals`].
pub struct IdealStream {
    n: usize,
    power: MonomialIdeal,
    socle: u32,
    constraint: Vec<Option<u64>>,
    stack: Vec<Frame>,
    /// Standard monomials chosen in degrees `0..stack.len()`.
    standard: Vec<Vec<Monomial>>,
    visited: usize,
    cap: usize,
    done: bool,
}

/// Every monomial ideal `I ⊇ ℘` with `hilbert_function(I, D) = h` on the
/// listed degrees, in canonical form and a fixed order. Degrees past `D`
/// follow the tail of `h` (unconstrained for an open tail).
pub fn enumerate_ideals(
    d: &DegreeSequence,
    h: &HilbertFunction,
    cap: usize,
) -> Result<IdealStream> {
    if h.convention() != HfConvention::Quotient || h.n() != d.n() {
        return Err(Error::Mismatch(format!(
            "Hilbert function in {} variables does not fit {d}",
            h.n()
        )));
    }
    let socle = d.socle_degree()?;
    let constraint = (0..=socle).map(|j| h.value_at(j)).collect();
    let mut stream = IdealStream::new(d, constraint, cap);
    // S/I vanishes past the socle degree of S/℘.
    let beyond =
        (socle + 1..=h.bound().max(socle + 1)).any(|j| h.value_at(j).is_some_and(|v| v > 0));
    stream.done = beyond;
    Ok(stream)
}

/// Every monomial ideal containing `℘`, whatever its Hilbert function.
pub fn all_ideals_containing(d: &DegreeSequence, cap: usize) -> Result<IdealStream> {
    let socle = d.socle_degree()?;
    Ok(IdealStream::new(d, vec![None; socle as usize + 1], cap))
}

impl IdealStream {
    fn new(d: &DegreeSequence, constraint: Vec<Option<u64>>, cap: usize) -> Self {
        let mut stream = IdealStream {
            n: d.n(),
            power: d.power_ideal(),
            socle: constraint.len() as u32 - 1,
            constraint,
            stack: Vec::new(),
            standard: Vec::new(),
            visited: 0,
            cap,
            done: false,
        };
        stream.push_frame();
        stream
    }

    fn push_frame(&mut self) {
        let j = self.standard.len() as u32;
        let candidates: Vec<Monomial> = if j == 0 {
            vec![Monomial::one(self.n)]
        } else {
            let prev: HashSet<&Monomial> = self.standard[j as usize - 1].iter().collect();
            monomials_of_degree(self.n, j)
                .into_iter()
                .filter(|m| !self.power.contains(m))
                .filter(|m| (0..self.n).all(|v| m.div_var(v).is_none_or(|q| prev.contains(&q))))
                .collect()
        };
        let sizes: Vec<usize> = match self.constraint[j as usize] {
            Some(k) if k as usize <= candidates.len() => vec![k as usize],
            Some(_) => Vec::new(),
            None => (0..=candidates.len()).rev().collect(),
        };
        let pool = candidates.clone();
        let choices: Choices = Box::new(
            sizes
                .into_iter()
                .flat_map(move |k| pool.clone().into_iter().combinations(k)),
        );
        self.stack.push(Frame {
            candidates,
            choices,
        });
    }

    fn assemble(&self) -> MonomialIdeal {
        let mut gens = self.power.gens().to_vec();
        for (frame, chosen) in self.stack.iter().zip(&self.standard) {
            let chosen: HashSet<&Monomial> = chosen.iter().collect();
            gens.extend(
                frame
                    .candidates
                    .iter()
                    .filter(|m| !chosen.contains(m))
                    .cloned(),
            );
        }
        MonomialIdeal::from_unchecked(self.n, gens)
    }
}

impl Iterator for IdealStream {
    type Item = Result<MonomialIdeal>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            let depth = self.stack.len();
            if depth == 0 {
                self.done = true;
                break;
            }
            if self.standard.len() == depth {
                self.standard.pop();
            }
            match self.stack[depth - 1].choices.next() {
                None => {
                    self.stack.pop();
                }
                Some(chosen) => {
                    self.visited += 1;
                    if self.visited > self.cap {
                        self.done = true;
                        return Some(Err(Error::CapExceeded {
                            what: "ideal enumeration frontier",
                            count: self.visited,
                            cap: self.cap,
                        }));
                    }
                    let empty = chosen.is_empty();
                    self.standard.push(chosen);
                    // Past an empty degree every later degree is empty too.
                    if depth as u32 == self.socle + 1 || empty {
                        let tail_ok = (depth as u32..=self.socle)
                            .all(|j| self.constraint[j as usize].is_none_or(|k| k == 0));
                        if tail_ok {
                            return Some(Ok(self.assemble()));
                        }
                    } else {
                        self.push_frame();
                    }
                }
            }
        }
        None
    }
}

/// Every stable monomial ideal in `n` variables generated in degrees
/// `1..=max_degree`, together with the unit ideal.
///
/// Degree-`j` components are chosen as stable sets containing the shadow of
/// the previous component. Monomials are decided in lex-descending order, and
/// every stable move `x_i u / x_max(u)` is lex-larger than `u`, so closure can
/// be checked at the moment `u` is considered.
pub fn stable_ideals(n: usize, max_degree: u32, cap: usize) -> Result<Vec<MonomialIdeal>> {
    let mut out = vec![MonomialIdeal::unit(n)];
    let mut layers: Vec<Vec<Monomial>> = vec![Vec::new()];
    stable_rec(n, max_degree, cap, &mut layers, &mut out)?;
    Ok(out)
}

fn stable_rec(
    n: usize,
    max_degree: u32,
    cap: usize,
    layers: &mut Vec<Vec<Monomial>>,
    out: &mut Vec<MonomialIdeal>,
) -> Result<()> {
    let j = layers.len() as u32;
    if j > max_degree {
        let gens: Vec<Monomial> = layers.iter().flatten().cloned().collect();
        if !gens.is_empty() {
            out.push(MonomialIdeal::from_unchecked(n, gens));
            if out.len() > cap {
                return Err(Error::CapExceeded {
                    what: "stable ideal enumeration",
                    count: out.len(),
                    cap,
                });
            }
        }
        return Ok(());
    }
    let required = upper_shadow(layers.last().expect("nonempty"), n);
    let all = monomials_of_degree(n, j);
    let mut chosen: Vec<Monomial> = Vec::new();
    let mut included: HashSet<Monomial> = HashSet::new();
    choose_stable(
        n,
        max_degree,
        cap,
        &all,
        0,
        &required,
        &mut chosen,
        &mut included,
        layers,
        out,
    )
}

#[allow(clippy::too_many_arguments)]
fn choose_stable(
    n: usize,
    max_degree: u32,
    cap: usize,
    all: &[Monomial],
    k: usize,
    required: &HashSet<Monomial>,
    chosen: &mut Vec<Monomial>,
    included: &mut HashSet<Monomial>,
    layers: &mut Vec<Vec<Monomial>>,
    out: &mut Vec<MonomialIdeal>,
) -> Result<()> {
    if k == all.len() {
        // Keep the whole component so the next shadow is right; redundant
        // generators are removed when the ideal is assembled.
        layers.push(chosen.clone());
        let r = stable_rec(n, max_degree, cap, layers, out);
        layers.pop();
        return r;
    }
    let u = &all[k];
    let closed = match u.max_var() {
        None => true,
        Some(m) => {
            let q = u.div_var(m).expect("max_var divides");
            (0..m).all(|i| included.contains(&q.mul_var(i)))
        }
    };
    if closed {
        chosen.push(u.clone());
        included.insert(u.clone());
        choose_stable(
            n,
            max_degree,
            cap,
            all,
            k + 1,
            required,
            chosen,
            included,
            layers,
            out,
        )?;
        included.remove(u);
        chosen.pop();
    }
    if !required.contains(u) {
        choose_stable(
            n,
            max_degree,
            cap,
            all,
            k + 1,
            required,
            chosen,
            included,
            layers,
            out,
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::is_stable;
    use crate::hilbert::{hilbert_function, Tail};

    fn ds(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap()
    }

    fn collect(stream: IdealStream) -> Vec<MonomialIdeal> {
        stream.collect::<Result<Vec<_>>>().unwrap()
    }

    #[test]
    fn ideals_with_fixed_hf() {
        let d = ds("2,2");
        let h = HilbertFunction::quotient(2, vec![1, 2, 0], Tail::Zero).unwrap();
        let found = collect(enumerate_ideals(&d, &h, 1000).unwrap());
        assert_eq!(found, vec![ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])]);

        let h = hilbert_function(&d.power_ideal(), 2);
        assert_eq!(
            collect(enumerate_ideals(&d, &h, 1000).unwrap()),
            vec![d.power_ideal()]
        );

        let d = ds("1,1");
        let h = HilbertFunction::quotient(2, vec![1, 0], Tail::Zero).unwrap();
        assert_eq!(
            collect(enumerate_ideals(&d, &h, 1000).unwrap()),
            vec![d.power_ideal()]
        );
    }

    #[test]
    fn all_ideals_match_brute_force() {
        // Brute force: every set of monomials of degree <= 2 generates an
        // ideal; keep those containing (x1^2, x2^2).
        let d = ds("2,2");
        let pool: Vec<Monomial> = (0..=2).flat_map(|j| monomials_of_degree(2, j)).collect();
        let mut expected: Vec<MonomialIdeal> = pool
            .iter()
            .cloned()
            .powerset()
            .map(|g| MonomialIdeal::new(2, g).unwrap())
            .filter(|i| i.contains_ideal(&d.power_ideal()))
            .collect();
        expected.sort();
        expected.dedup();
        let mut found = collect(all_ideals_containing(&d, 1000).unwrap());
        let len = found.len();
        found.sort();
        found.dedup();
        assert_eq!(found.len(), len, "duplicates");
        assert_eq!(found, expected);
    }

    #[test]
    fn cap_is_reported() {
        let d = ds("3,3,3");
        let r: Result<Vec<_>> = all_ideals_containing(&d, 10).unwrap().collect();
        assert!(matches!(r, Err(Error::CapExceeded { cap: 10, .. })));
    }

    #[test]
    fn stable_enumeration() {
        let two = stable_ideals(2, 2, 10_000).unwrap();
        assert!(two.iter().all(is_stable));
        let mut dedup = two.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), two.len());
        // Brute force over generating sets of degree 1..=2.
        let pool: Vec<Monomial> = (1..=2).flat_map(|j| monomials_of_degree(2, j)).collect();
        let mut expected: Vec<MonomialIdeal> = pool
            .into_iter()
            .powerset()
            .filter(|g| !g.is_empty())
            .map(|g| MonomialIdeal::new(2, g).unwrap())
            .filter(is_stable)
            .chain(std::iter::once(MonomialIdeal::unit(2)))
            .collect();
        expected.sort();
        expected.dedup();
        assert_eq!(dedup, expected);
    }
}
