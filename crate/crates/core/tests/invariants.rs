use std::sync::Arc;

use num_traits::{One, Zero};
use proptest::prelude::*;

use peritwist::classical::{jb_carrier_basis, omega_form, phi_map, r_formula, same_span, Bivector, Params};
use peritwist::exactring::{jet_invert, q, Jet, Rational};
use peritwist::hopfverify::{check_counit, check_drinfeld};
use peritwist::liealg::{
    build_sl, cartan_hp, cartan_hperp, e, half_rank, max_links, subalgebra_closure, LieAlgebra, LieElement,
};
use peritwist::tensorexpr::{Node, Representation, TensorExpr};
use peritwist::twistlib::{nu_rho_to_psi_zeta, psi_zeta_to_nu_rho, ChainSpec};

fn sl(n: usize) -> Arc<LieAlgebra> {
    Arc::new(build_sl(n).unwrap())
}

fn rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(a, b)| q(a, b))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn jet() -> impl Strategy<Value = Jet<2>> {
    prop::collection::vec(rat(), 3).prop_map(Jet::new)
}

fn params(pairs: &[(&str, Vec<Rational>)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// (N, ψ, ζ) with every parameter nonzero.
fn chain_point(ns: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (usize, Vec<Rational>, Vec<Rational>)> {
    ns.prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(nonzero(), max_links(n)),
            prop::collection::vec(nonzero(), half_rank(n) - 1),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_form_a_field(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.recip()).is_one());
        }
    }

    #[test]
    fn jets_form_a_ring(a in jet(), b in jet(), c in jet()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.coeff(0).is_zero() {
            prop_assert!((&jet_invert(&a).unwrap() * &a).is_one());
        } else {
            prop_assert!(jet_invert(&a).is_err());
        }
    }

    #[test]
    fn nu_rho_round_trip((n, psi, zeta) in chain_point(3..=8)) {
        let (nu, rho) = psi_zeta_to_nu_rho(&psi, &zeta).unwrap();
        let (psi2, zeta2) = nu_rho_to_psi_zeta(&nu, &rho).unwrap();
        prop_assert_eq!(psi2, psi, "N = {}", n);
        prop_assert_eq!(zeta2, zeta);
    }

    #[test]
    fn bivectors_are_antisymmetric_and_read_back(
        n in 2usize..=4,
        terms in prop::collection::vec((0usize..15, 0usize..15, rat()), 1..6),
    ) {
        let g = sl(n);
        let d = g.dim();
        let terms: Vec<_> = terms
            .into_iter()
            .map(|(a, b, c)| (LieElement::unit(a % d), LieElement::unit(b % d), c))
            .collect();
        let r = Bivector::from_terms(d, &terms);
        let t = r.tensor();
        for i in 0..d {
            for j in 0..d {
                prop_assert_eq!(&t[i][j], &-&t[j][i]);
            }
        }
        let rep = Representation::defining(&g).unwrap();
        prop_assert_eq!(Bivector::from_op(&r.eval(&rep), &rep).unwrap(), r);
    }

    #[test]
    fn exponentials_of_nilpotents_invert(n in 2usize..=5, i in 0usize..5, j in 0usize..5, c in rat()) {
        let (i, j) = (i % n + 1, j % n + 1);
        prop_assume!(i != j);
        let g = sl(n);
        let rep = Representation::defining(&g).unwrap();
        let x = |s: Rational| {
            TensorExpr::new(Node::gen(e(i, j), 1).times(Node::gen(e(i, j), 2)).scaled(s).exp(), 2).unwrap()
        };
        let prod = x(c.clone()).eval(&rep).unwrap().mul(&x(-c).eval(&rep).unwrap());
        prop_assert!(prod.is_identity());
    }

    #[test]
    fn closure_is_idempotent_and_order_free(n in 3usize..=4, picks in prop::collection::vec(0usize..15, 1..4)) {
        let g = sl(n);
        let seeds: Vec<_> = picks.iter().map(|p| LieElement::unit(p % g.dim())).collect();
        let a = subalgebra_closure(&g, &seeds);
        let mut rev = seeds.clone();
        rev.reverse();
        prop_assert!(same_span(&a, &subalgebra_closure(&g, &rev), g.dim()));
        prop_assert!(same_span(&a, &subalgebra_closure(&g, &a), g.dim()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn enlarged_chains_are_twists((n, psi, zeta) in chain_point(3..=5)) {
        let g = sl(n);
        let rep = Representation::defining(&g).unwrap();
        let f = ChainSpec::enlarged_jordanian(n, &psi, &zeta).build(&g, &Rational::one()).unwrap();
        prop_assert!(check_drinfeld("chain", &f, &rep).unwrap().pass);
        prop_assert!(check_counit("chain", &f, &rep).unwrap().pass);
    }

    #[test]
    fn phi_is_a_homomorphism_onto_the_carrier((n, psi, zeta) in chain_point(3..=6)) {
        let g = sl(n);
        let phi = phi_map(&g, &zeta).unwrap();
        prop_assert!(phi.check_homomorphism(&g).unwrap().pass);
        let images: Vec<_> = jb_carrier_basis(n)
            .unwrap()
            .iter()
            .map(|l| phi.apply(&g.elem(l), g.dim()).unwrap())
            .collect();
        let r = r_formula(&g, "r_JB", &params(&[("psi", psi), ("zeta", zeta)])).unwrap();
        prop_assert!(same_span(&images, &peritwist::classical::carrier(&r, &g), g.dim()));
    }

    #[test]
    fn omega_jb_is_nondegenerate((n, psi, zeta) in chain_point(3..=7)) {
        let g = sl(n);
        let w = omega_form(&g, "omega_JB", &params(&[("psi", psi), ("zeta", zeta)])).unwrap();
        prop_assert!(w.is_antisymmetric());
        prop_assert!(w.is_nondegenerate());
    }
}

#[test]
fn cartan_elements_have_their_defining_brackets() {
    for n in 3..=8 {
        let g = sl(n);
        for k in 0..max_links(n) {
            let hp = cartan_hp(k, n).unwrap();
            for s in k + 2..n - k {
                assert!(g.bracket(&hp, &g.elem(&e(s, n - k))).is_zero(), "N={n} k={k} s={s}");
            }
        }
        for i in 1..half_rank(n) {
            let h = cartan_hperp(i, n).unwrap();
            for j in 1..half_rank(n) {
                let x = g.elem(&e(j, n - j));
                let want = if i == j { x.clone() } else { LieElement::zero() };
                assert_eq!(g.bracket(&h, &x), want, "N={n} i={i} j={j}");
            }
            for k in 0..max_links(n) {
                assert!(g.bracket(&h, &g.elem(&e(k + 1, n - k))).is_zero(), "N={n} i={i} k={k}");
            }
        }
    }
}
