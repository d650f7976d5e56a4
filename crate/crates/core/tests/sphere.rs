use proptest::prelude::*;
use qhopf::forms::WMP;
use qhopf::hodge::{laplacian3, spectrum_sphere, HodgeParams};
use qhopf::random::Sampler;
use qhopf::sphere::{del, delbar, sphere_d, sphere_generators, sphere_laplacian, sphere_laplacian_compositional, CElem, SphereForm};
use qhopf::uq::eigenbasis;
use qhopf::{AlgElem, Error, Form, Rat, ScalarQ, Surd};

fn params() -> Vec<HodgeParams> {
    vec![HodgeParams::default(), HodgeParams::new(Rat::int(-3), Rat::new(5, 2)).unwrap()]
}

fn one_form(s: &mut Sampler) -> SphereForm {
    SphereForm::one_form(s.elem_in(-2), s.elem_in(2))
}

fn sphere_form(s: &mut Sampler, k: usize) -> SphereForm {
    match k {
        0 => SphereForm::function(s.elem_in(0)),
        1 => one_form(s),
        _ => SphereForm::two_form(s.elem_in(0)),
    }
}

fn sign(k: usize) -> ScalarQ {
    ScalarQ::int(if k.is_multiple_of(2) { 1 } else { -1 })
}

#[test]
fn generators() {
    let (bm, b0, bp) = sphere_generators();
    assert_eq!(bm, AlgElem::a().mul(&AlgElem::c_star()).neg());
    assert_eq!(bp, AlgElem::c().mul(&AlgElem::a_star()).scale(&ScalarQ::q()));
    for b in [&bm, &b0, &bp] {
        assert!(b.is_in(0));
    }
    assert_eq!(b0.star(), b0);
    assert_eq!(bp.star(), bm.scale(&ScalarQ::q().neg()));
}

#[test]
fn holomorphic_split() {
    let (bm, b0, bp) = sphere_generators();
    let (a, ast, c, cs) = (AlgElem::a(), AlgElem::a_star(), AlgElem::c(), AlgElem::c_star());
    let q = ScalarQ::q;
    let minus = |x: AlgElem| SphereForm::one_form(x, AlgElem::zero());
    let plus = |x: AlgElem| SphereForm::one_form(AlgElem::zero(), x);
    assert_eq!(delbar(&bm).unwrap(), minus(a.pow(2).scale(&ScalarQ::q_pow(-1))));
    assert_eq!(delbar(&b0).unwrap(), minus(c.mul(&a).scale(&q())));
    assert_eq!(delbar(&bp).unwrap(), minus(c.pow(2).scale(&q())));
    assert_eq!(del(&bp).unwrap(), plus(ast.pow(2).scale(&ScalarQ::q_pow(2))));
    assert_eq!(del(&b0).unwrap(), plus(cs.mul(&ast).scale(&ScalarQ::q_pow(2).neg())));
    assert_eq!(del(&bm).unwrap(), plus(cs.pow(2).scale(&ScalarQ::q_pow(2))));
    assert!(sphere_d(&AlgElem::one()).unwrap().is_zero());
    for b in [&bm, &b0, &bp] {
        assert_eq!(sphere_d(b).unwrap(), del(b).unwrap().add(&delbar(b).unwrap()));
    }
}

#[test]
fn relation_among_differentials() {
    // ∂B₀ = q⁻¹ B₋ ∂B₊ - q³ B₊ ∂B₋
    let (bm, b0, bp) = sphere_generators();
    let lhs = del(&b0).unwrap();
    let rhs = del(&bp)
        .unwrap()
        .left_mul(&bm)
        .scale(&ScalarQ::q_pow(-1))
        .sub(&del(&bm).unwrap().left_mul(&bp).scale(&ScalarQ::q_pow(3)));
    assert_eq!(lhs, rhs);
    // ∂̄B₀ = q B₊ ∂̄B₋ - q⁻³ B₋ ∂̄B₊
    let lhs = delbar(&b0).unwrap();
    let rhs = delbar(&bm)
        .unwrap()
        .left_mul(&bp)
        .scale(&ScalarQ::q())
        .sub(&delbar(&bp).unwrap().left_mul(&bm).scale(&ScalarQ::q_pow(-3)));
    assert_eq!(lhs, rhs);
}

#[test]
fn not_coinvariant() {
    assert!(matches!(delbar(&AlgElem::a()), Err(Error::NotCoinvariant(_))));
    assert!(sphere_laplacian(&AlgElem::c(), &HodgeParams::default()).is_err());
    let bad = SphereForm::new(CElem::zero(), CElem::real(AlgElem::a()), CElem::zero(), CElem::zero());
    assert!(bad.is_err());
    assert!(SphereForm::from_form(&Form::basis(qhopf::forms::WZ)).is_err());
}

#[test]
fn wedge_degree_overflow() {
    let w = SphereForm::two_form(AlgElem::one());
    let e = SphereForm::one_form(AlgElem::a().pow(2), AlgElem::zero());
    assert!(matches!(w.wedge(&e), Err(Error::DegreeOverflow(3))));
    assert!(e.wedge(&e).unwrap().is_zero());
}

#[test]
fn hodge_values() {
    for p in params() {
        let sg = ScalarQ::int(p.sign_dprime());
        let one = SphereForm::function(AlgElem::one());
        let vol = one.hodge(&p);
        assert_eq!(vol.f2, CElem::imag(AlgElem::from_scalar(p.alpha_dprime.clone())));
        assert_eq!(vol.hodge(&p), one);
        // ∫ ★1 = 1
        assert_eq!(vol.integral(&p), (Surd::one(), Surd::zero()));
        let x = AlgElem::a().pow(2);
        let e = SphereForm::one_form(x.clone(), AlgElem::zero());
        assert_eq!(e.hodge(&p).fm, CElem::imag(x.scale(&sg)));
        assert_eq!(e.hodge(&p).hodge(&p), e.neg());
    }
    let p = HodgeParams::default();
    let x = AlgElem::a().pow(2);
    assert_eq!(SphereForm::one_form(x.clone(), AlgElem::zero()).hodge(&p).fm, CElem::imag(x.neg()));
}

#[test]
fn non_degenerate_pairing() {
    let p = HodgeParams::default();
    let a2 = AlgElem::a().pow(2);
    let as2 = AlgElem::a_star().pow(2);
    let pairs = [
        (SphereForm::function(AlgElem::one()), SphereForm::two_form(AlgElem::one())),
        (SphereForm::one_form(a2.clone(), AlgElem::zero()), SphereForm::one_form(AlgElem::zero(), as2.clone())),
        (SphereForm::one_form(AlgElem::zero(), as2), SphereForm::one_form(a2, AlgElem::zero())),
        (SphereForm::two_form(AlgElem::one()), SphereForm::function(AlgElem::one())),
    ];
    for (eta, witness) in pairs {
        let (re, im) = witness.wedge(&eta).unwrap().integral(&p);
        assert!(!re.is_zero() || !im.is_zero(), "no witness for {}", eta);
    }
}

#[test]
fn laplacian_on_generators() {
    // each B is orthogonal to constants, so it sits in the spin-one box
    let p = HodgeParams::default();
    let lam = spectrum_sphere(1, &p).unwrap();
    let (bm, b0, bp) = sphere_generators();
    for b in [&bm, &b0, &bp] {
        assert!(b.haar().is_zero());
        assert_eq!(sphere_laplacian(b, &p).unwrap(), b.scale(&lam));
    }
    assert!(sphere_laplacian(&AlgElem::one(), &p).unwrap().is_zero());
}

#[test]
fn sphere_eigenvalues() {
    for p in params() {
        for j in 0..=3 {
            let lam = spectrum_sphere(j, &p).unwrap();
            for phi in eigenbasis(0, 2 * j, 8).unwrap() {
                assert_eq!(sphere_laplacian(&phi, &p).unwrap(), phi.scale(&lam));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hodge_graded_symmetry(seed in any::<u64>(), k in 0usize..3) {
        let mut s = Sampler::new(seed);
        let (e1, e2) = (sphere_form(&mut s, k), sphere_form(&mut s, k));
        for p in params() {
            let lhs = e1.hodge(&p).wedge(&e2).unwrap();
            let rhs = e1.wedge(&e2.hodge(&p)).unwrap().scale(&sign(k * (2 - k)));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn hodge_right_linear(seed in any::<u64>(), k in 0usize..3) {
        let mut s = Sampler::new(seed);
        let e = sphere_form(&mut s, k);
        let f = s.elem_in(0);
        for p in params() {
            prop_assert_eq!(e.right_mul(&f).hodge(&p), e.hodge(&p).right_mul(&f));
        }
    }

    #[test]
    fn hodge_twisted_bilinear(seed in any::<u64>(), n in -3i64..=3) {
        let mut s = Sampler::new(seed);
        let phi = s.small_elem_in(n);
        let phi2 = s.small_elem_in(-n);
        let e = one_form(&mut s);
        for p in params() {
            let lhs = e.left_mul(&phi2).right_mul(&phi).hodge(&p);
            let rhs = e.hodge(&p).left_mul(&phi2).right_mul(&phi);
            prop_assert_eq!(lhs, rhs);
            let vol = SphereForm::two_form(AlgElem::one());
            let lhs = vol.left_mul(&phi2).right_mul(&phi).hodge(&p);
            let rhs = vol.hodge(&p).left_mul(&phi2).right_mul(&phi).scale(&ScalarQ::q_pow(2 * n));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn laplacian_is_restriction(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let f = s.elem_in(0);
        for p in params() {
            let lap = sphere_laplacian(&f, &p).unwrap();
            prop_assert_eq!(&lap, &laplacian3(&f, &p));
            prop_assert_eq!(sphere_laplacian_compositional(&f, &p).unwrap(), CElem::real(lap));
        }
    }

    #[test]
    fn embedding_commutes_with_d(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let f = s.elem_in(0);
        prop_assert_eq!(sphere_d(&f).unwrap().real_to_form(), Form::function(f).d());
        let e = one_form(&mut s);
        let d3 = e.real_to_form().d();
        prop_assert_eq!(e.d().f2, CElem::real(d3.coeff(WMP).clone()));
    }

    #[test]
    fn embedding_commutes_with_wedge(seed in any::<u64>(), k in 0usize..3, l in 0usize..3) {
        prop_assume!(k + l <= 2);
        let mut s = Sampler::new(seed);
        let (e1, e2) = (sphere_form(&mut s, k), sphere_form(&mut s, l));
        let w = e1.wedge(&e2).unwrap();
        prop_assert_eq!(w.real_to_form(), e1.real_to_form().wedge(&e2.real_to_form()).unwrap());
        prop_assert_eq!(SphereForm::from_form(&w.real_to_form()).unwrap(), w);
    }
}
