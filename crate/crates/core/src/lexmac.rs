//! Lex order, lex segments, Macaulay bounds and lex ideals.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::hilbert::{HfConvention, HilbertFunction, Tail};
use crate::ideal::MonomialIdeal;
use crate::monomial::{binomial, count_monomials, monomials_of_degree, Monomial};

/// `>_lex` on exponent vectors. Across degrees this is still the plain
/// exponent-vector comparison.
pub fn lex_compare(u: &Monomial, v: &Monomial) -> Ordering {
    u.exponents().cmp(v.exponents())
}

/// The `k` lex-largest monomials of degree `j` in `n` variables.
pub fn lex_segment(j: u32, k: u64, n: usize) -> Result<Vec<Monomial>> {
    let total = count_monomials(n, j);
    if k > total {
        return Err(Error::OutOfRange {
            what: "lex segment size",
            detail: format!("{k} > {total} monomials of degree {j} in {n} variables"),
        });
    }
    let mut all = monomials_of_degree(n, j);
    all.truncate(k as usize);
    Ok(all)
}

/// The `j`-th Macaulay representation `a = Σ_t binomial(a_t, t)`, as pairs
/// `(a_t, t)` with `a_j > a_{j-1} > ... > a_t >= t >= 1`.
pub fn macaulay_representation(a: u64, j: u32) -> Vec<(u64, u32)> {
    let mut rest = a;
    let mut out = Vec::new();
    let mut t = j;
    while rest > 0 && t >= 1 {
        // Largest top with binomial(top, t) <= rest.
        let mut top = t as u64;
        while binomial(top + 1, t as u64) <= rest {
            top += 1;
        }
        rest -= binomial(top, t as u64);
        out.push((top, t));
        t -= 1;
    }
    out
}

/// `a^<j>`: the largest possible `HF(S/I; j+1)` when `HF(S/I; j) = a`.
pub fn macaulay_growth(a: u64, j: u32) -> u64 {
    assert!(j >= 1, "Macaulay growth is defined for j >= 1");
    macaulay_representation(a, j)
        .into_iter()
        .map(|(top, t)| binomial(top + 1, t as u64 + 1))
        .sum()
}

/// Degree-`j` monomials obtained by multiplying `prev` by every variable.
pub(crate) fn upper_shadow(prev: &[Monomial], n: usize) -> HashSet<Monomial> {
    let mut out = HashSet::with_capacity(prev.len() * n);
    for m in prev {
        for v in 0..n {
            out.insert(m.mul_var(v));
        }
    }
    out
}

/// The unique lex ideal `L` with `HF(S/L; j) = h_j` for `0 <= j <= D`.
///
/// Each degree is checked both against Macaulay's bound and by testing that
/// the previous segment's shadow lies in the next one; either failure names
/// the degree. A zero or constant tail is certified by requiring that degree
/// `D + 1` needs no new generators, which by Gotzmann persistence fixes the
/// function in all higher degrees.
pub fn lex_ideal_from_hf(h: &HilbertFunction) -> Result<MonomialIdeal> {
    if h.convention() != HfConvention::Quotient {
        return Err(Error::Mismatch(
            "expected a quotient Hilbert function".into(),
        ));
    }
    let n = h.n();
    let bound = h.bound();
    let values = h.values();
    if values[0] > 1 {
        return Err(Error::Infeasible {
            degree: 0,
            reason: format!("h_0 = {} but S_0 is one-dimensional", values[0]),
        });
    }

    let mut gens: Vec<Monomial> = Vec::new();
    let mut prev: Vec<Monomial> = Vec::new();
    for j in 0..=bound {
        let hj = values[j as usize];
        if j >= 1 {
            let hp = values[j as usize - 1];
            let cap = if j == 1 {
                hp * n as u64
            } else {
                macaulay_growth(hp, j - 1)
            };
            if hj > cap {
                return Err(Error::Infeasible {
                    degree: j,
                    reason: format!(
                        "h_{j} = {hj} exceeds the maximal growth {cap} of h_{} = {hp}",
                        j - 1
                    ),
                });
            }
        }
        let seg = lex_segment(j, count_monomials(n, j) - hj, n)?;
        extend_segment(&prev, &seg, n, j, &mut gens)?;
        prev = seg;
    }

    if let Some(next) = match h.tail() {
        Tail::Zero => Some(0),
        Tail::Constant(c) => Some(c),
        Tail::Open => None,
    } {
        let j = bound + 1;
        let total = count_monomials(n, j);
        let seg = lex_segment(j, total.saturating_sub(next), n)?;
        let shadow = upper_shadow(&prev, n);
        if !shadow.iter().all(|m| seg.contains(m)) {
            return Err(Error::Infeasible {
                degree: j,
                reason: format!(
                    "declared tail value {next} exceeds the growth allowed at degree {j}"
                ),
            });
        }
        if seg.len() != shadow.len() {
            return Err(Error::InsufficientBound {
                bound,
                reason: format!(
                    "degree {j} still needs {} new generators for tail {}",
                    seg.len() - shadow.len(),
                    h.tail()
                ),
            });
        }
    }
    Ok(MonomialIdeal::from_unchecked(n, gens))
}

/// Checks `m · prev ⊆ seg` and records the new minimal generators in `seg`.
fn extend_segment(
    prev: &[Monomial],
    seg: &[Monomial],
    n: usize,
    j: u32,
    gens: &mut Vec<Monomial>,
) -> Result<()> {
    let shadow = upper_shadow(prev, n);
    let seg_set: HashSet<&Monomial> = seg.iter().collect();
    if let Some(m) = shadow.iter().find(|m| !seg_set.contains(m)) {
        return Err(Error::Infeasible {
            degree: j,
            reason: format!(
                "segment in degree {j} does not contain {m}, a multiple of degree {}",
                j - 1
            ),
        });
    }
    gens.extend(seg.iter().filter(|m| !shadow.contains(*m)).cloned());
    Ok(())
}

/// Whether `ideal` is a lex ideal: every degree up to the largest generator
/// degree is a lex segment.
pub fn is_lex(ideal: &MonomialIdeal) -> bool {
    let top = ideal.max_degree().unwrap_or(0);
    (0..=top).all(|j| {
        let ms = monomials_of_degree(ideal.n(), j);
        let k = ms.iter().take_while(|m| ideal.contains(m)).count();
        ms[k..].iter().all(|m| !ideal.contains(m))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_function;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn compare() {
        assert_eq!(lex_compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(
            lex_compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Greater
        );
        assert_eq!(lex_compare(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
    }

    #[test]
    fn segments() {
        assert_eq!(lex_segment(2, 2, 2).unwrap(), vec![m(&[2, 0]), m(&[1, 1])]);
        assert!(lex_segment(2, 0, 3).unwrap().is_empty());
        assert_eq!(
            lex_segment(2, 2, 3).unwrap(),
            vec![m(&[2, 0, 0]), m(&[1, 1, 0])]
        );
        assert!(lex_segment(2, 7, 3).is_err());
    }

    #[test]
    fn growth_values() {
        for j in 1..6 {
            assert_eq!(macaulay_growth(1, j), 1);
        }
        assert_eq!(macaulay_growth(3, 1), 6);
        assert_eq!(macaulay_growth(6, 2), 10);
        assert_eq!(macaulay_growth(0, 3), 0);
        assert_eq!(macaulay_representation(6, 2), vec![(4, 2)]);
    }

    #[test]
    fn lex_from_hf() {
        let h = HilbertFunction::quotient(2, vec![1, 2, 1, 0], Tail::Zero).unwrap();
        let l = lex_ideal_from_hf(&h).unwrap();
        let expected = MonomialIdeal::new(2, [m(&[2, 0]), m(&[1, 1]), m(&[0, 3])]).unwrap();
        assert_eq!(l, expected);
        assert_eq!(hilbert_function(&l, 3).values(), h.values());

        let full = HilbertFunction::quotient(2, vec![1, 2, 3, 4], Tail::Open).unwrap();
        assert_eq!(lex_ideal_from_hf(&full).unwrap(), MonomialIdeal::zero(2));
    }

    #[test]
    fn lex_from_hf_errors() {
        let bad = HilbertFunction::quotient(3, vec![1, 2, 4], Tail::Open).unwrap();
        assert!(matches!(
            lex_ideal_from_hf(&bad),
            Err(Error::Infeasible { degree: 2, .. })
        ));
        let short = HilbertFunction::quotient(2, vec![1, 2, 1], Tail::Zero).unwrap();
        assert!(matches!(
            lex_ideal_from_hf(&short),
            Err(Error::InsufficientBound { bound: 2, .. })
        ));
        let unit = HilbertFunction::quotient(2, vec![0, 0], Tail::Zero).unwrap();
        assert_eq!(lex_ideal_from_hf(&unit).unwrap(), MonomialIdeal::unit(2));
    }

    #[test]
    fn lex_predicate() {
        assert!(is_lex(
            &MonomialIdeal::new(2, [m(&[2, 0]), m(&[1, 1]), m(&[0, 3])]).unwrap()
        ));
        assert!(!is_lex(&MonomialIdeal::new(2, [m(&[0, 2])]).unwrap()));
    }
}
