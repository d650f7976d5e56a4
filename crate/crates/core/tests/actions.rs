use proptest::prelude::*;
use qhopf::random::Sampler;
use qhopf::uq::{
    act_left_word, act_right_word, casimir_eigenvalue, casimir_left, casimir_right, eigenbasis, pairing, pw_basis, x_minus, x_plus,
};
use qhopf::{act_left, act_right, qnum, AlgElem, Gen, ScalarQ, UqWord};

/// `u ⊳ x = x₍₁₎ ⟨u, x₍₂₎⟩`
fn left_via_pairing(w: &UqWord, x: &AlgElem) -> AlgElem {
    let mut out = AlgElem::zero();
    for ((l, r), k) in x.coproduct().terms() {
        let p = pairing(w, &AlgElem::monomial(*r));
        out.add_assign(&AlgElem::monomial(*l).scale_surd(&p.mul(k)));
    }
    out
}

/// `x ◁ u = ⟨u, x₍₁₎⟩ x₍₂₎`
fn right_via_pairing(x: &AlgElem, w: &UqWord) -> AlgElem {
    let mut out = AlgElem::zero();
    for ((l, r), k) in x.coproduct().terms() {
        let p = pairing(w, &AlgElem::monomial(*l));
        out.add_assign(&AlgElem::monomial(*r).scale_surd(&p.mul(k)));
    }
    out
}

fn random_word(s: &mut Sampler) -> UqWord {
    let gens = [Gen::K, Gen::KInv, Gen::E, Gen::F];
    let len = s.range(1, 3) as usize;
    UqWord::new((0..len).map(|_| gens[s.range(0, 3) as usize]).collect())
}

#[test]
fn generator_values() {
    let (a, ast, c, cs) = (AlgElem::a(), AlgElem::a_star(), AlgElem::c(), AlgElem::c_star());
    let q = ScalarQ::q();
    let qi = ScalarQ::q_pow(-1);
    assert_eq!(act_left(Gen::E, &a), cs.scale(&q.neg()));
    assert_eq!(act_left(Gen::E, &c), ast);
    assert_eq!(act_left(Gen::F, &ast), c);
    assert_eq!(act_left(Gen::F, &cs), a.scale(&qi.neg()));
    assert_eq!(act_right(&c, Gen::E), a);
    assert_eq!(act_right(&ast, Gen::E), cs.scale(&q.neg()));
    assert_eq!(act_right(&a, Gen::F), c);
    assert_eq!(act_right(&cs, Gen::F), ast.scale(&qi.neg()));
    for g in [&a, &c] {
        assert!(act_left(Gen::E, &act_left(Gen::E, g)).is_zero());
    }
}

#[test]
fn lowering_powers_of_a_star() {
    // F ⊳ a*^p = q^{(1-p)/2} [p] c a*^{p-1}
    for p in 1..=6u32 {
        let x = AlgElem::a_star().pow(p);
        let k = ScalarQ::s_pow(1 - p as i64).mul(&qnum(p as i64));
        let expect = AlgElem::c().mul(&AlgElem::a_star().pow(p - 1)).scale(&k);
        assert_eq!(act_left(Gen::F, &x), expect, "p = {}", p);
    }
}

#[test]
fn k_acts_by_winding() {
    let mut s = Sampler::new(3);
    for n in -3..=3 {
        let x = s.elem_in(n);
        assert_eq!(act_left(Gen::K, &x), x.scale(&ScalarQ::s_pow(n)));
        assert_eq!(act_left(Gen::KInv, &act_left(Gen::K, &x)), x);
    }
}

#[test]
fn casimir_on_boxes() {
    for p in 0..=4 {
        let lam = casimir_eigenvalue(p);
        for (t, row) in pw_basis(p).unwrap().iter().enumerate() {
            for w in row {
                assert!(!w.is_zero());
                assert!(w.is_in(p - 2 * t as i64));
                assert_eq!(casimir_left(w), w.scale(&lam), "p = {}", p);
                assert_eq!(casimir_right(w), w.scale(&lam), "p = {}", p);
            }
        }
    }
}

#[test]
fn casimir_values() {
    // the shift by 1/4 only cancels [1/2]² at q = 1
    let half = qhopf::qnum_half(1);
    assert_eq!(casimir_eigenvalue(0), half.mul(&half).sub(&ScalarQ::ratio(1, 4)));
    assert!(!casimir_eigenvalue(0).is_zero());
    // p = 1: [1]² - 1/4
    assert_eq!(casimir_eigenvalue(1), ScalarQ::ratio(3, 4));
    for p in 0..=8 {
        let four = casimir_eigenvalue(p).limit_at_one().unwrap();
        assert_eq!(four, qhopf::Rat::new(p * (p + 2), 4));
    }
}

#[test]
fn eigenbasis_in_boxes() {
    for n in -2..=2i64 {
        let mut j2 = n.abs();
        while j2 <= 4 {
            let lam = casimir_eigenvalue(j2);
            for phi in eigenbasis(n, j2, 8).unwrap() {
                assert!(phi.is_in(n));
                assert_eq!(casimir_left(&phi), phi.scale(&lam));
            }
            j2 += 2;
        }
    }
}

#[test]
fn raising_lowering_shift_winding() {
    let mut s = Sampler::new(11);
    for n in -2..=2 {
        let x = s.elem_in(n);
        assert!(x_plus(&x).is_in(n + 2));
        assert!(x_minus(&x).is_in(n - 2));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn actions_match_pairing(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let x = s.small_elem();
        let w = random_word(&mut s);
        prop_assert_eq!(act_left_word(&w, &x), left_via_pairing(&w, &x));
        prop_assert_eq!(act_right_word(&x, &w), right_via_pairing(&x, &w));
    }

    #[test]
    fn actions_commute(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let x = s.small_elem();
        let (u, v) = (random_word(&mut s), random_word(&mut s));
        let lr = act_right_word(&act_left_word(&u, &x), &v);
        let rl = act_left_word(&u, &act_right_word(&x, &v));
        prop_assert_eq!(lr, rl);
    }

    #[test]
    fn module_algebra(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (x, y) = (s.small_elem(), s.small_elem());
        // E ⊳ (xy) = (E ⊳ x)(K ⊳ y) + (K⁻¹ ⊳ x)(E ⊳ y)
        let lhs = act_left(Gen::E, &x.mul(&y));
        let rhs = act_left(Gen::E, &x).mul(&act_left(Gen::K, &y)).add(&act_left(Gen::KInv, &x).mul(&act_left(Gen::E, &y)));
        prop_assert_eq!(lhs, rhs);
    }
}
