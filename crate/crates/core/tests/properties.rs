//! Randomized invariants over small rings.

use std::collections::HashSet;

use proptest::prelude::*;

use lexpow_core::betti::{
    ek_betti, euler_characteristic_mismatch, is_stable, koszul_betti, BettiConvention, BettiTable,
};
use lexpow_core::bounds::{bhp_bound, dominates, lpp_bound};
use lexpow_core::degseq::DegreeSequence;
use lexpow_core::hilbert::{hilbert_function, ideal_dims, HilbertFunction, Tail};
use lexpow_core::ideal::MonomialIdeal;
use lexpow_core::lexmac::{is_lex, lex_ideal_from_hf, macaulay_growth};
use lexpow_core::linkage::{link, linked_hf, LinkagePair};
use lexpow_core::lpp::{decompose, is_lpp, is_spp, lpp_from_hf};
use lexpow_core::monomial::{count_monomials, monomials_of_degree, Monomial};
use lexpow_core::random::{random_artinian, random_spp, rng};
use lexpow_core::text::{format_ideal, ideal_from_json, ideal_to_json, parse_ideal};

fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

fn ideal_in(n: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(n, max_exp), 0..6)
        .prop_map(move |g| MonomialIdeal::new(n, g).expect("lengths match"))
}

fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(|n| ideal_in(n, 4))
}

fn nonzero_ideal() -> impl Strategy<Value = MonomialIdeal> {
    ideal().prop_filter("nonzero", |i| !i.is_zero())
}

/// Finite degree sequences with entries in `2..=4`, `n <= 3`.
fn finite_degrees() -> impl Strategy<Value = DegreeSequence> {
    prop::collection::vec(2u32..=4, 1..=3).prop_map(|mut v| {
        v.sort_unstable();
        DegreeSequence::finite(&v).expect("sorted")
    })
}

/// A feasible quotient Hilbert function in `n` variables through degree `top`,
/// each step drawn below Macaulay's bound.
fn feasible_hf() -> impl Strategy<Value = HilbertFunction> {
    (1usize..=3, 1u32..=8, prop::collection::vec(0.0f64..=1.0, 8)).prop_map(
        |(n, top, fractions)| {
            let mut values = vec![1u64];
            for j in 0..top {
                let prev = values[j as usize];
                let max = if j == 0 {
                    n as u64
                } else {
                    macaulay_growth(prev, j)
                };
                let max = max.min(count_monomials(n, j + 1));
                values.push((fractions[j as usize] * max as f64).floor() as u64);
            }
            HilbertFunction::quotient(n, values, Tail::Open).expect("within range")
        },
    )
}

fn grid_strategy() -> impl Strategy<Value = BettiTable> {
    prop::collection::vec((0usize..4, 0u32..12, 1u64..40), 0..12).prop_map(|cells| {
        let mut t = BettiTable::new(BettiConvention::Ideal, 4);
        for (i, r, b) in cells {
            t.add(i, r + i as u32, b);
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normalize_is_idempotent(i in ideal()) {
        let again = MonomialIdeal::new(i.n(), i.gens().to_vec()).unwrap();
        prop_assert_eq!(&again, &i);
        for a in i.gens() {
            for b in i.gens() {
                prop_assert!(a == b || !a.divides(b));
            }
        }
    }

    #[test]
    fn colon_matches_brute_force(
        (i, j) in (1usize..=3).prop_flat_map(|n| (ideal_in(n, 3), ideal_in(n, 3)))
    ) {
        prop_assume!(!j.is_zero());
        let c = i.colon(&j).unwrap();
        prop_assert!(c.contains_ideal(&i));
        for g in c.gens() {
            for h in j.gens() {
                prop_assert!(i.contains(&g.mul(h)));
            }
        }
        for deg in 0..=6 {
            for m in monomials_of_degree(i.n(), deg) {
                let expected = j.gens().iter().all(|h| i.contains(&m.mul(h)));
                prop_assert_eq!(c.contains(&m), expected, "monomial {}", m);
            }
        }
    }

    #[test]
    fn hilbert_function_complements_ideal(i in ideal()) {
        let h = hilbert_function(&i, 8);
        let dims = ideal_dims(&i, 8);
        for j in 0..=8u32 {
            prop_assert_eq!(h.values()[j as usize] + dims[j as usize], count_monomials(i.n(), j));
        }
    }

    #[test]
    fn lex_construction_roundtrips(h in feasible_hf()) {
        let l = lex_ideal_from_hf(&h).unwrap();
        let got = hilbert_function(&l, h.bound());
        prop_assert_eq!(got.values(), h.values());
        prop_assert!(is_lex(&l));
        prop_assert!(is_stable(&l));
        // Each degree component is an initial lex segment.
        for j in 0..=h.bound() {
            let all = monomials_of_degree(h.n(), j);
            let k = all.iter().take_while(|m| l.contains(m)).count();
            prop_assert!(all[k..].iter().all(|m| !l.contains(m)));
        }
    }

    #[test]
    fn growth_bound_is_sharp(h in feasible_hf()) {
        let d = h.bound();
        let g = macaulay_growth(h.values()[d as usize], d);
        let mut at = h.values().to_vec();
        at.push(g);
        prop_assert!(lex_ideal_from_hf(&HilbertFunction::quotient(h.n(), at, Tail::Open).unwrap()).is_ok());
        if g < count_monomials(h.n(), d + 1) {
            let mut over = h.values().to_vec();
            over.push(g + 1);
            prop_assert!(lex_ideal_from_hf(&HilbertFunction::quotient(h.n(), over, Tail::Open).unwrap()).is_err());
        }
    }

    #[test]
    fn koszul_tables_satisfy_euler_characteristic(i in nonzero_ideal()) {
        let t = koszul_betti(&i).unwrap();
        prop_assert_eq!(euler_characteristic_mismatch(&i, &t), None);
        prop_assert_eq!(t.total(0), i.gens().len() as u64);
        prop_assert!(t.max_i().unwrap_or(0) < i.n());
    }

    #[test]
    fn ek_agrees_with_koszul_on_lex_ideals(h in feasible_hf()) {
        let l = lex_ideal_from_hf(&h).unwrap();
        prop_assume!(!l.is_zero());
        prop_assert_eq!(ek_betti(&l).unwrap(), koszul_betti(&l).unwrap());
    }

    #[test]
    fn tables_roundtrip_through_grid_and_json(t in grid_strategy()) {
        prop_assert_eq!(&BettiTable::parse_grid(&t.format_grid(), BettiConvention::Ideal, 4).unwrap(), &t);
        prop_assert_eq!(&BettiTable::from_json(&t.to_json(), 4).unwrap(), &t);
    }

    #[test]
    fn ideals_roundtrip_through_text_and_json(i in ideal()) {
        prop_assert_eq!(&parse_ideal(&format_ideal(&i)).unwrap(), &i);
        prop_assert_eq!(&ideal_from_json(&ideal_to_json(&i)).unwrap(), &i);
    }

    #[test]
    fn linkage_is_an_involution_with_dual_hilbert_function(d in finite_degrees(), seed in any::<u64>()) {
        let i = random_artinian(&mut rng(seed), &d, 5).unwrap();
        let pair = LinkagePair::new(i.clone(), d.clone()).unwrap();
        prop_assert!(pair.is_involution());
        prop_assert_eq!(pair.hilbert_identity_failure(), None);
        let s = d.socle_degree().unwrap();
        prop_assert_eq!(linked_hf(&hilbert_function(&i, s), &d).unwrap(), hilbert_function(&pair.linked, s));
        prop_assert_eq!(is_spp(&i, &d), is_spp(&pair.linked, &d));
        prop_assert_eq!(is_lpp(&i, &d), is_lpp(&pair.linked, &d));
    }

    #[test]
    fn lpp_structure(d in finite_degrees(), seed in any::<u64>()) {
        let i = random_artinian(&mut rng(seed), &d, 5).unwrap();
        let s = d.socle_degree().unwrap();
        let h = hilbert_function(&i, s + 1);
        if let Ok(l) = lpp_from_hf(&h, &d) {
            prop_assert!(is_lpp(&l, &d));
            prop_assert!(is_spp(&l, &d));
            prop_assert_eq!(hilbert_function(&l, s + 1), h.clone());
            let n = d.n();
            if n > 1 {
                let dn = d.finite_entries().unwrap()[n - 1] as usize;
                let dec = decompose(&l, dn);
                for c in dec.components() {
                    prop_assert!(is_lpp(c, &d.truncated()));
                }
                // (L : x_n^h) restricted to x_n = 0 is the h-th component.
                for hh in 0..dn {
                    let colon = l.colon_monomial(&Monomial::power(n, n - 1, hh as u32));
                    let cdec = decompose(&colon, dn);
                    prop_assert_eq!(cdec.component(0), dec.component(hh));
                }
            }
            let lex = bhp_bound(&h).unwrap();
            prop_assert!(dominates(&lpp_bound(&h, &d).unwrap(), &lex).unwrap().holds());
        }
    }

    #[test]
    fn lpp_ideals_are_nested_by_hilbert_function(d in finite_degrees(), a in any::<u64>(), b in any::<u64>()) {
        let s = d.socle_degree().unwrap();
        let i1 = random_artinian(&mut rng(a), &d, 4).unwrap();
        let i2 = random_artinian(&mut rng(b), &d, 4).unwrap();
        let (h1, h2) = (hilbert_function(&i1, s + 1), hilbert_function(&i2, s + 1));
        if let (Ok(l1), Ok(l2)) = (lpp_from_hf(&h1, &d), lpp_from_hf(&h2, &d)) {
            // Larger quotient means smaller ideal.
            if h1.values().iter().zip(h2.values()).all(|(x, y)| x >= y) {
                prop_assert!(l2.contains_ideal(&l1));
            }
        }
    }

    #[test]
    fn spp_decomposition_is_additive(d in finite_degrees(), seed in any::<u64>()) {
        let i = random_spp(&mut rng(seed), &d, 4).unwrap();
        prop_assert!(is_spp(&i, &d));
        let s = d.socle_degree().unwrap();
        let dec = decompose(&i, s as usize + 1);
        prop_assert_eq!(&dec.recombine(), &i);
        let whole = ideal_dims(&i, s + 1);
        for j in 0..=s + 1 {
            let sum: u64 = (0..=j).map(|h| dec.component(h as usize).dim_in_degree(j - h)).sum();
            prop_assert_eq!(sum, whole[j as usize]);
        }
        for w in dec.components().windows(2) {
            prop_assert!(w[1].contains_ideal(&w[0]));
        }
    }
}

#[test]
fn link_rejects_degenerate_inputs() {
    let d: DegreeSequence = "2,2".parse().unwrap();
    assert!(link(&d.power_ideal(), &d).is_err());
    assert!(link(&MonomialIdeal::unit(2), &d).is_err());
    let small = MonomialIdeal::new(2, [Monomial::new(vec![3, 0])]).unwrap();
    assert!(link(&small, &d).is_err());
}

#[test]
fn seeded_generators_are_reproducible() {
    let d: DegreeSequence = "2,3,3".parse().unwrap();
    let a: HashSet<MonomialIdeal> = (0..20)
        .map(|s| random_artinian(&mut rng(s), &d, 5).unwrap())
        .collect();
    let b: HashSet<MonomialIdeal> = (0..20)
        .map(|s| random_artinian(&mut rng(s), &d, 5).unwrap())
        .collect();
    assert_eq!(a, b);
}
