//! Text and JSON forms of monomial ideals.
//!
//! ```text
//! ring n=3
//! ideal: x1^3*x2, x3^4
//! ```
//!
//! `1` is the unit monomial; an empty list after `ideal:` is the zero ideal.
//! Whitespace is ignored and `#` starts a comment.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Parses a product such as `x1^3*x2` (or `1`) in `n` variables.
pub fn parse_monomial(term: &str, n: usize) -> Result<Monomial> {
    let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
    let mut exps = vec![0u32; n];
    if term == "1" {
        return Ok(Monomial::new(exps));
    }
    if term.is_empty() {
        return Err(Error::malformed("empty monomial"));
    }
    for factor in term.split('*') {
        let (var, exp) = match factor.split_once('^') {
            Some((v, e)) => (
                v,
                e.parse::<u32>()
                    .map_err(|_| Error::malformed(format!("bad exponent in `{factor}`")))?,
            ),
            None => (factor, 1),
        };
        let k: usize = var
            .strip_prefix('x')
            .and_then(|k| k.parse().ok())
            .ok_or_else(|| Error::malformed(format!("bad variable `{var}`")))?;
        if k == 0 || k > n {
            return Err(Error::malformed(format!("variable x{k} outside x1..x{n}")));
        }
        exps[k - 1] += exp;
    }
    Ok(Monomial::new(exps))
}

/// Parses the two-line ideal format.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let ring = lines
        .next()
        .ok_or_else(|| Error::malformed("missing `ring n=<int>` line"))?;
    let ring: String = ring.chars().filter(|c| !c.is_whitespace()).collect();
    let n: usize = ring
        .strip_prefix("ringn=")
        .and_then(|k| k.parse().ok())
        .ok_or_else(|| Error::malformed(format!("expected `ring n=<int>`, found `{ring}`")))?;
    let body = lines
        .next()
        .ok_or_else(|| Error::malformed("missing `ideal:` line"))?;
    let list = body
        .strip_prefix("ideal")
        .map(str::trim_start)
        .and_then(|rest| rest.strip_prefix(':'))
        .ok_or_else(|| Error::malformed(format!("expected `ideal: ...`, found `{body}`")))?;
    if let Some(extra) = lines.next() {
        return Err(Error::malformed(format!(
            "unexpected trailing line `{extra}`"
        )));
    }
    let gens = if list.trim().is_empty() {
        Vec::new()
    } else {
        list.split(',')
            .map(|t| parse_monomial(t, n))
            .collect::<Result<Vec<_>>>()?
    };
    MonomialIdeal::new(n, gens)
}

/// The two-line ideal format with generators in canonical order.
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    format!("ring n={}\n{}\n", ideal.n(), format_generators(ideal))
}

/// `ideal: x1^2, x1*x2, x2^3`
pub fn format_generators(ideal: &MonomialIdeal) -> String {
    let gens: Vec<String> = ideal.gens().iter().map(|g| g.to_string()).collect();
    if gens.is_empty() {
        "ideal:".to_string()
    } else {
        format!("ideal: {}", gens.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    gens: Vec<Vec<u32>>,
}

/// `{"n":3,"gens":[[3,1,0],[0,0,4]]}`
pub fn ideal_to_json(ideal: &MonomialIdeal) -> String {
    let wire = IdealJson {
        n: ideal.n(),
        gens: ideal
            .gens()
            .iter()
            .map(|g| g.exponents().to_vec())
            .collect(),
    };
    serde_json::to_string(&wire).expect("ideal serializes")
}

pub fn ideal_from_json(text: &str) -> Result<MonomialIdeal> {
    let wire: IdealJson =
        serde_json::from_str(text).map_err(|e| Error::malformed(e.to_string()))?;
    MonomialIdeal::new(wire.n, wire.gens.into_iter().map(Monomial::new))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let i = parse_ideal("ring n=3\nideal: x3^4, x1^3 * x2, x1^4*x2^2\n").unwrap();
        assert_eq!(i.gens().len(), 2);
        assert_eq!(format_ideal(&i), "ring n=3\nideal: x1^3*x2, x3^4\n");
        assert_eq!(parse_ideal(&format_ideal(&i)).unwrap(), i);
    }

    #[test]
    fn unit_zero_and_repeated_factors() {
        assert!(parse_ideal("ring n=2\nideal: 1").unwrap().is_unit());
        let zero = parse_ideal("# comment\nring n = 2\nideal:\n").unwrap();
        assert!(zero.is_zero());
        assert_eq!(format_ideal(&zero), "ring n=2\nideal:\n");
        assert_eq!(
            parse_monomial("x1*x1^2*x2", 2).unwrap(),
            Monomial::new(vec![3, 1])
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_ideal("ideal: x1").is_err());
        assert!(parse_ideal("ring n=2\nideal: x3").is_err());
        assert!(parse_ideal("ring n=2\nideal: y1").is_err());
        assert!(parse_ideal("ring n=2\nideal: x1^a").is_err());
        assert!(parse_ideal("ring n=2\nideal: x1,").is_err());
        assert!(parse_ideal("ring n=2").is_err());
    }

    #[test]
    fn json_roundtrip() {
        let i = parse_ideal("ring n=3\nideal: x1^3*x2, x3^4").unwrap();
        let j = ideal_to_json(&i);
        assert_eq!(j, r#"{"n":3,"gens":[[3,1,0],[0,0,4]]}"#);
        assert_eq!(ideal_from_json(&j).unwrap(), i);
    }
}
