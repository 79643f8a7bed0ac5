use super::table::{BettiConvention, BettiTable};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::binomial;

/// Classical stability: `x_i u / x_{max(u)} ∈ I` for every minimal generator
/// `u` and every `i < max(u)`.
pub fn is_stable(ideal: &MonomialIdeal) -> bool {
    ideal.gens().iter().all(|u| match u.max_var() {
        None => true,
        Some(m) => {
            let q = u.div_var(m).expect("max_var divides");
            (0..m).all(|i| ideal.contains(&q.mul_var(i)))
        }
    })
}

/// Eliahou–Kervaire: `β_{i, deg(u)+i}(I) = Σ_{u ∈ G(I)} binomial(max(u) − 1, i)`
/// with `max(u)` the 1-based index of the last variable dividing `u`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !is_stable(ideal) {
        return Err(Error::NotStable("stable"));
    }
    let mut table = BettiTable::new(BettiConvention::Ideal, ideal.n());
    for u in ideal.gens() {
        let m = u.max_var().map_or(0, |v| v as u64);
        for i in 0..=m {
            table.add(i as usize, u.degree() + i as u32, binomial(m, i));
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap()
    }

    #[test]
    fn stability() {
        assert!(is_stable(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])));
        assert!(!is_stable(&ideal(2, &[&[0, 2]])));
        assert!(is_stable(&MonomialIdeal::unit(3)));
    }

    #[test]
    fn koszul_of_variables() {
        let t = ek_betti(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 1, 2), (1, 2, 1)]);
    }

    #[test]
    fn square_of_maximal_ideal() {
        let t = ek_betti(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 2, 3), (1, 3, 2)]);
    }

    #[test]
    fn rejects_unstable() {
        assert_eq!(
            ek_betti(&ideal(2, &[&[0, 2]])),
            Err(Error::NotStable("stable"))
        );
    }
}
