use proptest::prelude::*;
use qhopf::bundle::{
    alpha_coeff, beta_coeff, d_matrix, dagger, equivariant_of, fn_mul_form, form_equivariant_of, form_mul_fn, form_section_of, galois_witness,
    hermitian, make_ket, make_ket_with_cap, matmul, section_of,
};
use qhopf::random::Sampler;
use qhopf::{AlgElem, Error, Form, ScalarQ};

#[test]
fn normalization_coefficients() {
    assert!(beta_coeff(3, 0).is_one());
    assert_eq!(beta_coeff(1, 1), ScalarQ::q_pow(2));
    assert_eq!(beta_coeff(2, 1), ScalarQ::q_pow(2).add(&ScalarQ::one()));
    assert!(alpha_coeff(-3, 3).is_one());
    assert!(alpha_coeff(-1, 0).is_one());
    assert_eq!(alpha_coeff(-2, 1), ScalarQ::one().add(&ScalarQ::q_pow(2)));
}

#[test]
fn kets_are_normalized() {
    for n in -4..=4 {
        let ket = make_ket(n).unwrap();
        assert_eq!(ket.len(), n.unsigned_abs() as usize + 1);
        assert!(ket.comps.iter().all(|x| x.is_in(n)));
        assert_eq!(ket.norm(), AlgElem::one(), "n = {}", n);
    }
}

#[test]
fn cap_is_enforced() {
    assert!(matches!(make_ket_with_cap(5, 4), Err(Error::CapExceeded { value: 5, cap: 4 })));
    assert!(make_ket_with_cap(-4, 4).is_ok());
}

#[test]
fn projectors() {
    for n in -4..=4 {
        let p = make_ket(n).unwrap().projector();
        assert_eq!(matmul(&p, &p), p, "p² = p, n = {}", n);
        assert_eq!(dagger(&p), p, "p† = p, n = {}", n);
        assert!(p.iter().flatten().all(|x| x.is_in(0)));
    }
}

#[test]
fn projector_kills_its_differential() {
    // p (dp) p = 0
    for n in [-2, -1, 1, 2] {
        let p = make_ket(n).unwrap().projector();
        let pdpp = form_mul_fn(&fn_mul_form(&p, &d_matrix(&p)), &p);
        assert!(pdpp.iter().flatten().all(Form::is_zero), "n = {}", n);
    }
}

#[test]
fn galois_witnesses() {
    for n in -4..=4 {
        let w = galois_witness(n).unwrap();
        assert!(w.in_kernel, "n = {}", n);
        assert_eq!(w.image, w.expected, "n = {}", n);
        assert!(w.holds());
    }
    assert!(galois_witness(0).unwrap().gamma.is_zero());
}

#[test]
fn rejected_rows() {
    let ket = make_ket(1).unwrap();
    let row = vec![AlgElem::one(), AlgElem::zero()];
    assert!(matches!(equivariant_of(&row, &ket), Err(Error::NotInImage)));
    assert!(matches!(equivariant_of(&[AlgElem::one()], &ket), Err(Error::InvalidIndex(_))));
    assert!(matches!(section_of(&AlgElem::a(), &ket), Err(Error::WrongWinding { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn section_round_trip(seed in any::<u64>(), n in -3i64..=3) {
        let mut s = Sampler::new(seed);
        let ket = make_ket(n).unwrap();
        let phi = s.small_elem_in(n);
        let sigma = section_of(&phi, &ket).unwrap();
        prop_assert_eq!(equivariant_of(&sigma, &ket).unwrap(), phi);
    }

    #[test]
    fn form_section_round_trip(seed in any::<u64>(), n in -2i64..=2) {
        let mut s = Sampler::new(seed);
        let ket = make_ket(n).unwrap();
        let w = Form::one_form(s.small_elem_in(n - 2), s.small_elem_in(n + 2), AlgElem::zero());
        let sigma = form_section_of(&w, &ket).unwrap();
        prop_assert_eq!(form_equivariant_of(&sigma, &ket).unwrap(), w);
    }

    #[test]
    fn hermitian_structure(seed in any::<u64>(), n in -3i64..=3) {
        let mut s = Sampler::new(seed);
        let ket = make_ket(n).unwrap();
        let (phi, psi) = (s.small_elem_in(n), s.small_elem_in(n));
        let h = hermitian(&section_of(&phi, &ket).unwrap(), &section_of(&psi, &ket).unwrap());
        prop_assert_eq!(&h, &phi.mul(&psi.star()));
        prop_assert!(h.is_in(0));
    }
}
