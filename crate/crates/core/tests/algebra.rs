use std::collections::BTreeMap;

use proptest::prelude::*;
use qhopf::algebra::TermJson;
use qhopf::random::Sampler;
use qhopf::{normalize, AlgElem, Letter, Monomial, Rat, ScalarQ, Surd, Tensor2};

fn q() -> ScalarQ {
    ScalarQ::q()
}

fn a() -> AlgElem {
    AlgElem::a()
}
fn ast() -> AlgElem {
    AlgElem::a_star()
}
fn c() -> AlgElem {
    AlgElem::c()
}
fn cst() -> AlgElem {
    AlgElem::c_star()
}

type Tensor3 = BTreeMap<(Monomial, Monomial, Monomial), Surd>;

fn push3(t: &mut Tensor3, k: (Monomial, Monomial, Monomial), v: Surd) {
    let e = t.entry(k).or_insert_with(Surd::zero);
    *e = e.add(&v);
    if e.is_zero() {
        t.remove(&k);
    }
}

fn delta_left(t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((l, r), c) in t.terms() {
        for ((l1, l2), k) in AlgElem::monomial(*l).coproduct().terms() {
            push3(&mut out, (*l1, *l2, *r), c.mul(k));
        }
    }
    out
}

fn delta_right(t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((l, r), c) in t.terms() {
        for ((r1, r2), k) in AlgElem::monomial(*r).coproduct().terms() {
            push3(&mut out, (*l, *r1, *r2), c.mul(k));
        }
    }
    out
}

#[test]
fn defining_relations() {
    assert_eq!(a().mul(&c()), c().mul(&a()).scale(&q()));
    assert_eq!(a().mul(&cst()), cst().mul(&a()).scale(&q()));
    assert_eq!(c().mul(&cst()), cst().mul(&c()));
    assert_eq!(ast().mul(&a()).add(&cst().mul(&c())), AlgElem::one());
    assert_eq!(a().mul(&ast()).add(&c().mul(&cst()).scale(&ScalarQ::q_pow(2))), AlgElem::one());
}

#[test]
fn normal_form_examples() {
    assert_eq!(normalize(&[Letter::A, Letter::C]), AlgElem::monomial(Monomial::new(1, 1, 0)));
    assert_eq!(normalize(&[Letter::C, Letter::A]), AlgElem::monomial(Monomial::new(1, 1, 0)).scale(&ScalarQ::q_pow(-1)));
    let cc = AlgElem::monomial(Monomial::new(0, 1, 1));
    assert_eq!(normalize(&[Letter::AStar, Letter::A]), AlgElem::one().sub(&cc));
    assert_eq!(normalize(&[Letter::A, Letter::AStar]), AlgElem::one().sub(&cc.scale(&ScalarQ::q_pow(2))));
    assert_eq!(normalize(&[Letter::CStar, Letter::C]), cc);
    assert_eq!(normalize(&[]), AlgElem::one());
}

#[test]
fn star_examples() {
    assert_eq!(a().star(), ast());
    assert_eq!(c().star(), cst());
    // (ac)* = c* a* = q a* c*
    assert_eq!(a().mul(&c()).star(), ast().mul(&cst()).scale(&q()));
}

#[test]
fn coproduct_of_generators() {
    let mq = ScalarQ::q().neg();
    let da = Tensor2::pure(&a(), &a()).add(&Tensor2::pure(&cst().scale(&mq), &c()));
    assert_eq!(a().coproduct(), da);
    let dc = Tensor2::pure(&c(), &a()).add(&Tensor2::pure(&ast(), &c()));
    assert_eq!(c().coproduct(), dc);
    assert!(a().counit().is_one());
    assert!(ast().counit().is_one());
    assert!(c().counit().is_zero());
    assert_eq!(a().antipode(), ast());
    assert_eq!(c().antipode(), c().scale(&q().neg()));
}

#[test]
fn winding_of_generators() {
    assert!(a().is_in(-1));
    assert!(c().is_in(-1));
    assert!(ast().is_in(1));
    assert!(cst().is_in(1));
    assert!(a().add(&ast()).winding().is_err());
    assert_eq!(AlgElem::zero().winding().unwrap(), None);
}

#[test]
fn haar_examples() {
    assert!(AlgElem::one().haar().is_one());
    assert!(a().haar().is_zero());
    let cc = AlgElem::monomial(Monomial::new(0, 1, 1));
    // h(cc*) = 1/(1 + q²)
    let expect = ScalarQ::one().add(&ScalarQ::q_pow(2)).inv().unwrap();
    assert_eq!(cc.haar(), Surd::from_scalar(expect));
    // a*a + c*c = 1 and h(a*a) = q² h(cc*)
    assert_eq!(ast().mul(&a()).haar().add(&cc.haar()), Surd::one());
}

#[test]
fn json_form() {
    let x = a().mul(&cst()).scale(&ScalarQ::ratio(3, 2));
    let j = x.to_json();
    assert_eq!(j.len(), 1);
    assert_eq!((j[0].a, j[0].c, j[0].cstar), (1, 0, 1));
    // denominators are monic, so the rational part sits in the numerator
    assert_eq!(j[0].coeff_num, "3/2");
    assert_eq!(j[0].coeff_den, "1");
    assert_eq!(j[0].radicand_num, "1");
    let text = serde_json::to_string(&j).unwrap();
    let back: Vec<TermJson> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, j);
}

fn word(seed: u64, len: usize) -> Vec<Letter> {
    let mut s = Sampler::new(seed);
    let letters = [Letter::A, Letter::AStar, Letter::C, Letter::CStar];
    (0..len).map(|_| letters[s.range(0, 3) as usize]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn confluence(seed in any::<u64>(), len in 0usize..7) {
        let w = word(seed, len);
        let left = normalize(&w);
        let mut right = AlgElem::one();
        for l in w.iter().rev() {
            right = AlgElem::letter(*l).mul(&right);
        }
        prop_assert_eq!(&left, &right);
        if len >= 2 {
            let (x, y) = w.split_at(len / 2);
            prop_assert_eq!(normalize(x).mul(&normalize(y)), left);
        }
    }

    #[test]
    fn associativity(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (x, y, z) = (s.small_elem(), s.small_elem(), s.small_elem());
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
    }

    #[test]
    fn star_antihomomorphism(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (x, y) = (s.elem(), s.small_elem());
        prop_assert_eq!(x.star().star(), x.clone());
        prop_assert_eq!(x.mul(&y).star(), y.star().mul(&x.star()));
    }

    #[test]
    fn coproduct_laws(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (x, y) = (s.small_elem(), s.small_elem());
        let dx = x.coproduct();
        prop_assert_eq!(delta_left(&dx), delta_right(&dx));
        prop_assert_eq!(x.mul(&y).coproduct(), dx.mul(&y.coproduct()));
        prop_assert_eq!(dx.counit_left(), x.clone());
        prop_assert_eq!(dx.counit_right(), x.clone());
        let eps = AlgElem::scalar(x.counit());
        prop_assert_eq!(dx.contract(|l| l.antipode(), |r| r.clone()), eps.clone());
        prop_assert_eq!(dx.contract(|l| l.clone(), |r| r.antipode()), eps);
    }

    #[test]
    fn winding_grading(seed in any::<u64>(), n in -3i64..=3, m in -3i64..=3) {
        let mut s = Sampler::new(seed);
        let x = s.elem_in(n);
        let y = s.elem_in(m);
        prop_assert!(x.mul(&y).is_in(n + m));
        prop_assert!(x.star().is_in(-n));
    }

    #[test]
    fn haar_positive(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let x = s.elem();
        let v = x.star().mul(&x).haar().eval_at(&Rat::new(1, 2)).unwrap();
        prop_assert!(v.signum() > 0);
    }

    #[test]
    fn haar_invariant(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let x = s.elem();
        let hx = AlgElem::scalar(x.haar());
        let mut left = AlgElem::zero();
        let mut right = AlgElem::zero();
        for ((l, r), k) in x.coproduct().terms() {
            left.add_assign(&AlgElem::monomial(*r).scale_surd(&AlgElem::monomial(*l).haar().mul(k)));
            right.add_assign(&AlgElem::monomial(*l).scale_surd(&AlgElem::monomial(*r).haar().mul(k)));
        }
        prop_assert_eq!(left, hx.clone());
        prop_assert_eq!(right, hx);
    }
}
