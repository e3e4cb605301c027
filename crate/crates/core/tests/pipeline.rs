mod common;

use common::*;
use modo_core::dres::m_from_coeffs;
use modo_core::spectral::on_curve_k;
use modo_core::{
    bc_generator, companion, BivarPoly, is_bc, is_bc_poly, kernel_at_point, m_matrix, p_seq, phi_ratio, spectral_curve,
    spectral_matrix, spectral_matrix_at, CurvePoint, Frac, Matrix, Modo, Operator, Ring, SpectralPoly,
};
use num_traits::{One, Zero};

/// Remainder of `T` on the right by `D − N`, by cancelling leading terms.
fn right_rem(t: &Modo, n: &Matrix<Frac>, k: &modo_core::DiffField) -> Matrix<Frac> {
    let size = n.size();
    let d_minus_n = Operator::from_coeffs(size, vec![-n.clone(), Matrix::identity(size)]).unwrap();
    let mut t = t.clone();
    while t.order() >= 1 && !t.is_zero() {
        let ord = t.order();
        let mut head = vec![Matrix::zeros(size); ord];
        head[ord - 1] = t.coeff(ord);
        let q = Operator::from_coeffs(size, head).unwrap();
        t = t.try_sub(&q.mul(&d_minus_n, k).unwrap()).unwrap();
    }
    t.coeff(0)
}

#[test]
fn p_seq_matches_operator_division() {
    let k = xfield();
    let mut r = rng(1);
    for _ in 0..5 {
        let l = rand_order_one(&mut r, 2);
        let n = companion(&l).unwrap();
        let ps = p_seq(&n, 4, &k);
        for (j, p) in ps.iter().enumerate() {
            let dj = Operator::d(2).pow(j as u32, &k);
            assert_eq!(&right_rem(&dj, &n, &k), p, "p_{j}");
        }
    }
}

#[test]
fn m_is_left_linear() {
    let k = xfield();
    let mut r = rng(2);
    for _ in 0..5 {
        let p = rand_order_one(&mut r, 2);
        let q1 = Operator::from_coeffs(2, (0..3).map(|_| rand_matrix(&mut r, 2, 1, 2)).collect()).unwrap();
        let q2 = Operator::from_coeffs(2, (0..2).map(|_| rand_matrix(&mut r, 2, 1, 2)).collect()).unwrap();
        let c = rand_matrix(&mut r, 2, 1, 2);
        let combo = q1.try_add(&q2.left_mul(&c)).unwrap();
        let lhs = m_matrix(&p, &combo, &k).unwrap();
        let rhs = m_matrix(&p, &q1, &k).unwrap() + &c * &m_matrix(&p, &q2, &k).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn cleared_spectral_matrix_agrees_with_direct_recursion() {
    let k = xfield();
    let mut r = rng(3);
    for _ in 0..6 {
        let l = rand_order_one(&mut r, 2);
        let b = Operator::from_coeffs(2, (0..3).map(|_| rand_matrix(&mut r, 2, 1, 2)).collect()).unwrap();
        let n = companion(&l).unwrap();
        let a1inv = l.coeff(1).inv().unwrap();
        let lift = |m: &Matrix<Frac>| m.map(|e| SpectralPoly::constant(e.clone()));
        let n_lambda = lift(&n) + lift(&a1inv).scale(&SpectralPoly::lambda());
        let bs: Vec<_> = b.coeffs().iter().map(lift).collect();
        let direct = m_from_coeffs(&bs, &n_lambda, &k) - Matrix::scalar(2, SpectralPoly::mu());
        let fast = spectral_matrix(&l, &b, &k).unwrap();
        assert_eq!(fast, direct);
        // and specialising commutes with building M
        let (lam, mu) = (g(2, -1), g(0, 3));
        let at = spectral_matrix_at(&l, &b, &lam, &mu, &k).unwrap();
        let (lf, mf) = (Frac::constant(lam), Frac::constant(mu));
        assert_eq!(fast.map(|e| e.eval(&lf, &mf)), at);
    }
}

#[test]
fn degree_structure_general_pairs() {
    // commuting is not needed for the degree statements
    let k = xfield();
    let mut r = rng(4);
    for _ in 0..6 {
        let l = rand_order_one(&mut r, 2);
        let b = Operator::from_coeffs(2, (0..3).map(|_| rand_matrix(&mut r, 2, 1, 2)).collect()).unwrap();
        let rep = spectral_curve(&l, &b, &k).unwrap();
        assert!(!rep.commutator_is_zero);
        assert_eq!(rep.degree_mu, 2);
        assert_eq!(rep.f.coeff(0, 2), Frac::one());
        assert!(rep.degree_lambda <= 4);
        assert_eq!(rep.leading_lambda_coeff, rep.expected_lambda_coeff);
    }
}

#[test]
fn generator_chain_and_minimality() {
    let inst = instance("ex72");
    let rep = bc_generator(&inst.l, &inst.b, &inst.field, None).unwrap();
    assert!(rep.f.exact_div(&rep.big_f).is_some());
    assert!(rep.big_f.exact_div(&rep.f_red).is_some());
    // multiples stay in the ideal, removing any factor leaves it
    let f = rep.big_f.to_bivar().unwrap();
    assert!(is_bc_poly(&(f.clone() * BivarPoly::lambda()), &inst.l, &inst.b, &inst.field).unwrap());
    for h in &rep.factors {
        let smaller = rep.big_f.exact_div(&h.poly).unwrap();
        assert!(!is_bc(&smaller, &inst.l, &inst.b, &inst.field).unwrap());
    }
}

#[test]
fn trivial_case_detected() {
    let k = xfield();
    let mut r = rng(5);
    for n in 1..=3 {
        let l = rand_order_one(&mut r, 2);
        let cs = rand_coeffs(&mut r, n);
        let b = poly_in(&l, &cs, &k);
        let rep = bc_generator(&l, &b, &k, None).unwrap();
        let h = SpectralPoly::mu() - lambda_poly(&cs);
        let trivial = rep.trivial_case.clone().expect("B is a polynomial in L");
        assert!(trivial == h || trivial == -h.clone());
        assert!(rep.big_f == h || rep.big_f == -h.clone());
        assert_eq!(rep.f, h.pow(2));
        assert_eq!(rep.factors.len(), 1);
        assert_eq!(rep.factors[0].sigma, 2);
        assert_eq!(rep.factors[0].r, 1);
    }
}

#[test]
fn generator_equals_curve_for_akns_instances() {
    for inst in akns_instances() {
        let rep = bc_generator(&inst.l, &inst.b, &inst.field, None).unwrap();
        assert!(rep.trivial_case.is_none(), "{}", inst.name);
        assert_eq!(rep.big_f, rep.f, "{}", inst.name);
    }
}

#[test]
fn phi_matches_kernel_vectors() {
    let inst = instance("ex72");
    let (num, den) = phi_ratio(&inst.l, &inst.b, &inst.field).unwrap();
    let f = spectral_curve(&inst.l, &inst.b, &inst.field).unwrap().f;
    for lam in [g(1, 0), g(-2, 1), g(0, 3)] {
        let mu = g(0, 2) * lam.clone() * lam.clone();
        let pt = CurvePoint::new(lam.clone(), mu.clone());
        assert!(on_curve_k(&f, &pt));
        let kb = kernel_at_point(&inst.l, &inst.b, &pt, &inst.field).unwrap();
        assert_eq!(kb.nullity(), 1);
        let v = &kb.vectors[0];
        let (lf, mf) = (Frac::constant(lam), Frac::constant(mu));
        let (pn, pd) = (num.eval(&lf, &mf), den.eval(&lf, &mf));
        // v ∝ (M₁₂, −M₁₁) = (den, num)
        assert_eq!(v[1].clone() * pd, v[0].clone() * pn);
    }
}

#[test]
fn off_curve_akns_points_have_trivial_kernel() {
    let inst = instance("akns");
    for (a, b) in [(0, 0), (1, 2), (-1, 3)] {
        let kb = kernel_at_point(&inst.l, &inst.b, &CurvePoint::new(g(a, 0), g(b, 1)), &inst.field).unwrap();
        assert_eq!(kb.nullity(), 0);
    }
}

#[test]
fn kernel_vectors_are_annihilated() {
    let inst = instance("ex71");
    let pt = CurvePoint::new(gauss_str("1/2"), gauss_str("9*i/2"));
    let kb = kernel_at_point(&inst.l, &inst.b, &pt, &inst.field).unwrap();
    assert_eq!(kb.nullity(), 1);
    for v in &kb.vectors {
        assert!(kb.matrix.mul_vec(v).iter().all(|e| e.is_zero()));
    }
}
