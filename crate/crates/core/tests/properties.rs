mod common;

use common::*;
use modo_core::parser::{parse_element, parse_operator, parse_spectral, render_operator};
use modo_core::polyring::EvalRing;
use modo_core::{
    bp_gcd, bp_sqrt, bp_squarefree, op_eval_poly, BivarPoly, DiffField, Frac, Matrix, Modo, ModoRing, Operator,
    Ring, SpectralPoly,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn gauss() -> impl Strategy<Value = Q> {
    (-4i64..=4, -4i64..=4).prop_map(|(a, b)| g(a, b))
}

fn xpoly(deg: usize) -> impl Strategy<Value = Frac> {
    prop::collection::vec(gauss(), 1..=deg + 1).prop_map(|cs| {
        cs.into_iter().enumerate().fold(Frac::zero(), |acc, (k, c)| acc + Frac::constant(c) * x().pow(k as u32))
    })
}

fn xfrac() -> impl Strategy<Value = Frac> {
    (xpoly(2), xpoly(2)).prop_filter_map("nonzero denominator", |(n, d)| (!d.is_zero()).then(|| n / d))
}

fn bivar() -> impl Strategy<Value = BivarPoly> {
    prop::collection::vec(((0u32..=3, 0u32..=2), gauss()), 0..6).prop_map(BivarPoly::from_terms)
}

fn operator(size: usize, order: usize) -> impl Strategy<Value = Modo> {
    prop::collection::vec(xpoly(1), size * size * (order + 1)).prop_map(move |es| {
        let coeffs = es
            .chunks(size * size)
            .map(|c| Matrix::from_rows(c.chunks(size).map(|r| r.to_vec()).collect()).unwrap())
            .collect();
        Operator::from_coeffs(size, coeffs).unwrap()
    })
}

fn akns_field() -> DiffField {
    instance("akns").field
}

/// Polynomial in `u, v` and their first three derivatives.
fn jet_poly() -> impl Strategy<Value = Frac> {
    prop::collection::vec((gauss(), prop::collection::vec((0usize..2, 0u32..4), 0..3)), 1..4).prop_map(|terms| {
        let k = akns_field();
        terms.into_iter().fold(Frac::zero(), |acc, (c, jets)| {
            let mono = jets.into_iter().fold(Frac::one(), |m, (s, o)| m * k.jet(s, o));
            acc + Frac::constant(c) * mono
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn leibniz_ratfunc(a in xfrac(), b in xfrac()) {
        let k = xfield();
        prop_assert_eq!(k.derive(&(a.clone() * b.clone())), k.derive(&a) * b.clone() + a * k.derive(&b));
    }

    #[test]
    fn leibniz_diffpoly(a in jet_poly(), b in jet_poly()) {
        let k = akns_field();
        let (a, b) = (k.reduce(&a), k.reduce(&b));
        prop_assert_eq!(k.derive(&(a.clone() * b.clone())), k.derive(&a) * b.clone() + a * k.derive(&b));
    }

    #[test]
    fn reduce_commutes_with_derive(a in jet_poly()) {
        let k = akns_field();
        prop_assert_eq!(k.reduce(&k.derive(&a)), k.derive(&k.reduce(&a)));
    }

    #[test]
    fn operator_associativity(a in operator(2, 1), b in operator(2, 1), c in operator(2, 1)) {
        let k = xfield();
        let left = a.mul(&b, &k).unwrap().mul(&c, &k).unwrap();
        let right = a.mul(&b.mul(&c, &k).unwrap(), &k).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn operator_distributes(a in operator(2, 1), b in operator(2, 2), c in operator(2, 1)) {
        let k = xfield();
        let left = a.mul(&b.try_add(&c).unwrap(), &k).unwrap();
        let right = a.mul(&b, &k).unwrap().try_add(&a.mul(&c, &k).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in bivar(), q in bivar()) {
        let inst = instance("ex72");
        let ring = ModoRing::new(&inst.field, 2);
        let ev = |h: &BivarPoly| op_eval_poly(h, &inst.l, &inst.b, &ring).unwrap();
        prop_assert_eq!(ev(&(p.clone() * q.clone())), ring.mul(&ev(&p), &ev(&q)));
        prop_assert_eq!(ev(&(p.clone() + q.clone())), ring.add(&ev(&p), &ev(&q)));
    }

    #[test]
    fn gcd_divides(p in bivar(), q in bivar(), h in bivar()) {
        prop_assume!(!h.is_zero() && !(p.is_zero() && q.is_zero()));
        let (a, b) = (p * h.clone(), q * h.clone());
        let d = bp_gcd(&a, &b).unwrap();
        prop_assert!(d.divides(&a) && d.divides(&b));
        if !a.is_zero() && !b.is_zero() {
            prop_assert!(h.divides(&d), "common factor lost");
        }
    }

    #[test]
    fn squarefree_reconstructs(p in bivar(), q in bivar()) {
        let f = p * q.clone() * q;
        prop_assume!(!f.is_zero());
        let sqf = bp_squarefree(&f).unwrap();
        prop_assert_eq!(sqf.expand(), f);
        for (h, _) in &sqf.factors {
            prop_assert!(bp_gcd(h, &h.d_lambda()).unwrap().is_constant() || bp_gcd(h, &h.d_mu()).unwrap().is_constant());
        }
    }

    #[test]
    fn sqrt_of_square(cs in prop::collection::vec(gauss(), 1..5)) {
        let p = BivarPoly::from_lambda_coeffs(&cs);
        let s = bp_sqrt(&(p.clone() * p.clone())).unwrap();
        prop_assert!(s == p || s == -p);
    }

    #[test]
    fn element_round_trip(a in xfrac()) {
        let k = xfield();
        prop_assert_eq!(parse_element(&k.render(&a), &k).unwrap(), a);
    }

    #[test]
    fn jet_round_trip(a in jet_poly()) {
        let k = akns_field();
        let a = k.reduce(&a);
        prop_assert_eq!(parse_element(&k.render(&a), &k).unwrap(), a);
    }

    #[test]
    fn operator_round_trip(a in operator(2, 2)) {
        let k = xfield();
        let text = render_operator(&a, &k);
        prop_assert_eq!(parse_operator(&text, &k, 2).unwrap(), a);
    }

    #[test]
    fn spectral_round_trip(terms in prop::collection::vec(((0u32..=3, 0u32..=2), xpoly(1)), 0..5)) {
        let k = xfield();
        let p = SpectralPoly::from_terms(terms);
        prop_assert_eq!(parse_spectral(&p.render(&k), &k).unwrap(), p);
    }
}
