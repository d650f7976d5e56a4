use std::panic::{self, AssertUnwindSafe};

use clap::ValueEnum;
use serde::Serialize;

use qhopf::bundle::{dagger, equivariant_of, galois_witness, hermitian, make_ket, matmul, section_of};
use qhopf::classical::{calculus_report, spectra_report, structure_constants_report, ClassicalItem};
use qhopf::forms::{basis_d, basis_wedge, d0, WM, WMP, WP, WPZ, WZ, WZM};
use qhopf::gauge::{
    connection_one_form, connection_projector, cov_d0, cov_d0_projector, cov_d1, curvature_scalar, d2_from_connection_form,
    gauged_laplacian, gauged_laplacian_compositional, gauged_laplacian_general, h_omega, h_omega_prime, horizontal_part,
    projected_relations, projector_curvature, relations_hold_unprojected, verify_master_relation, Connection,
};
use qhopf::hodge::{hodge3, hodge3_basis, inner3, inner3_basis, integral3, laplacian3, laplacian3_compositional, spectrum3, spectrum_sphere, HodgeParams};
use qhopf::random::Sampler;
use qhopf::sphere::{del, delbar, sphere_d, sphere_generators, sphere_laplacian, sphere_laplacian_compositional, CElem, SphereForm};
use qhopf::uq::{act_left_word, act_right_word, casimir_eigenvalue, casimir_left, casimir_right, eigenbasis, pairing, pw_basis};
use qhopf::{act_left, act_right, algebra::coassociative_on, qnum, winding_cap, AlgElem, Form, Gen, Rat, ScalarQ, UqWord};

pub type Outcome = Result<(), String>;

pub enum Kind {
    Fixed(fn() -> Outcome),
    Sampled(fn(&mut Sampler) -> Outcome),
}

pub struct Check {
    pub id: String,
    pub property: &'static str,
    pub kind: Kind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Algebra,
    Actions,
    Calculus,
    Hodge,
    Sphere,
    Bundles,
    Gauge,
    Classical,
    All,
}

const SUITES: [Suite; 8] =
    [Suite::Algebra, Suite::Actions, Suite::Calculus, Suite::Hodge, Suite::Sphere, Suite::Bundles, Suite::Gauge, Suite::Classical];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Actions => "actions",
            Suite::Calculus => "calculus",
            Suite::Hodge => "hodge",
            Suite::Sphere => "sphere",
            Suite::Bundles => "bundles",
            Suite::Gauge => "gauge",
            Suite::Classical => "classical",
            Suite::All => "all",
        }
    }

    pub fn checks(self) -> Vec<Check> {
        if self == Suite::All {
            return SUITES.iter().flat_map(|s| s.checks()).collect();
        }
        let table: Vec<(&str, &'static str, Kind)> = match self {
            Suite::Algebra => algebra(),
            Suite::Actions => actions(),
            Suite::Calculus => calculus(),
            Suite::Hodge => hodge(),
            Suite::Sphere => sphere(),
            Suite::Bundles => bundles(),
            Suite::Gauge => gauge(),
            Suite::Classical => classical(),
            Suite::All => unreachable!(),
        };
        table.into_iter().map(|(id, property, kind)| Check { id: format!("{}.{}", self.name(), id), property, kind }).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub property: &'static str,
    pub pass: bool,
    pub runs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// FNV-1a of the id mixed with the run seed, so each check has its own stream.
pub fn sample_seed(seed: u64, id: &str, sample: usize) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed.rotate_left(17) ^ (sample as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

fn guarded<F: FnOnce() -> Outcome>(f: F) -> Outcome {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(r) => r,
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            Err(format!("panic: {}", msg))
        }
    }
}

pub fn run(check: &Check, seed: u64, samples: usize) -> CheckResult {
    let (runs, outcome) = match &check.kind {
        Kind::Fixed(f) => (1, guarded(f)),
        Kind::Sampled(f) => {
            let mut outcome = Ok(());
            let mut runs = 0;
            for i in 0..samples {
                runs += 1;
                let s = sample_seed(seed, &check.id, i);
                let mut sampler = Sampler::new(s);
                if let Err(e) = guarded(|| f(&mut sampler)) {
                    outcome = Err(format!("sample {} (sampler seed {}): {}", i, s, e));
                    break;
                }
            }
            (runs, outcome)
        }
    };
    CheckResult { id: check.id.clone(), property: check.property, pass: outcome.is_ok(), runs, witness: outcome.err() }
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn err<E: ToString>(e: E) -> String {
    e.to_string()
}

fn sign(k: usize) -> ScalarQ {
    ScalarQ::int(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// Largest `|n|` a fixed check walks over.
fn reach(k: i64) -> i64 {
    k.min(winding_cap())
}

fn params() -> Vec<HodgeParams> {
    vec![HodgeParams::default(), HodgeParams::new(Rat::int(-3), Rat::new(5, 2)).expect("nonzero")]
}

fn form_of(s: &mut Sampler, k: usize) -> Form {
    if k == 0 {
        Form::function(s.small_elem())
    } else {
        s.form(k)
    }
}

// ---- algebra

fn algebra() -> Vec<(&'static str, &'static str, Kind)> {
    vec![
        ("relations", "defining relations of the coordinate algebra", Kind::Fixed(alg_relations)),
        ("associativity", "normal-form product is associative and distributive", Kind::Sampled(alg_assoc)),
        ("star", "star is an involutive antihomomorphism", Kind::Sampled(alg_star)),
        ("coassociativity", "coproduct is coassociative", Kind::Sampled(alg_coassoc)),
        ("bialgebra", "coproduct is multiplicative, counit and antipode laws", Kind::Sampled(alg_hopf)),
        ("winding", "winding grading is multiplicative and reversed by star", Kind::Sampled(alg_winding)),
        ("haar", "Haar state is positive and bi-invariant", Kind::Sampled(alg_haar)),
    ]
}

fn alg_relations() -> Outcome {
    let (a, ast, c, cs) = (AlgElem::a(), AlgElem::a_star(), AlgElem::c(), AlgElem::c_star());
    let q = ScalarQ::q();
    ensure(a.mul(&c) == c.mul(&a).scale(&q), || "ac ≠ q ca".into())?;
    ensure(a.mul(&cs) == cs.mul(&a).scale(&q), || "ac* ≠ q c*a".into())?;
    ensure(c.mul(&cs) == cs.mul(&c), || "cc* ≠ c*c".into())?;
    ensure(ast.mul(&a).add(&cs.mul(&c)) == AlgElem::one(), || "a*a + c*c ≠ 1".into())?;
    ensure(a.mul(&ast).add(&c.mul(&cs).scale(&ScalarQ::q_pow(2))) == AlgElem::one(), || "aa* + q²cc* ≠ 1".into())
}

fn alg_assoc(s: &mut Sampler) -> Outcome {
    let (x, y, z) = (s.small_elem(), s.small_elem(), s.small_elem());
    ensure(x.mul(&y).mul(&z) == x.mul(&y.mul(&z)), || format!("x = {}, y = {}, z = {}", x, y, z))?;
    ensure(x.mul(&y.add(&z)) == x.mul(&y).add(&x.mul(&z)), || format!("distributivity at x = {}, y = {}, z = {}", x, y, z))
}

fn alg_star(s: &mut Sampler) -> Outcome {
    let (x, y) = (s.small_elem(), s.small_elem());
    ensure(x.star().star() == x, || format!("x** ≠ x at x = {}", x))?;
    ensure(x.mul(&y).star() == y.star().mul(&x.star()), || format!("(xy)* ≠ y*x* at x = {}, y = {}", x, y))
}

fn alg_coassoc(s: &mut Sampler) -> Outcome {
    let x = s.small_elem();
    ensure(coassociative_on(&x), || format!("x = {}", x))
}

fn alg_hopf(s: &mut Sampler) -> Outcome {
    let (x, y) = (s.small_elem(), s.small_elem());
    let dx = x.coproduct();
    ensure(x.mul(&y).coproduct() == dx.mul(&y.coproduct()), || format!("Δ(xy) at x = {}, y = {}", x, y))?;
    ensure(dx.counit_left() == x && dx.counit_right() == x, || format!("counit at x = {}", x))?;
    let eps = AlgElem::scalar(x.counit());
    ensure(dx.contract(|l| l.antipode(), |r| r.clone()) == eps, || format!("S(x₁)x₂ at x = {}", x))?;
    ensure(dx.contract(|l| l.clone(), |r| r.antipode()) == eps, || format!("x₁S(x₂) at x = {}", x))
}

fn alg_winding(s: &mut Sampler) -> Outcome {
    let (n, m) = (s.range(-3, 3), s.range(-3, 3));
    let (x, y) = (s.elem_in(n), s.elem_in(m));
    ensure(x.mul(&y).is_in(n + m), || format!("x = {} in L_{}, y = {} in L_{}", x, n, y, m))?;
    ensure(x.star().is_in(-n), || format!("x* for x = {} in L_{}", x, n))
}

fn alg_haar(s: &mut Sampler) -> Outcome {
    let x = s.elem();
    let v = x.star().mul(&x).haar().eval_at(&Rat::new(1, 2)).map_err(err)?;
    ensure(v.signum() > 0, || format!("h(x*x) = {} at s = 1/2 for x = {}", v, x))?;
    let hx = AlgElem::scalar(x.haar());
    let (mut left, mut right) = (AlgElem::zero(), AlgElem::zero());
    for ((l, r), k) in x.coproduct().terms() {
        left.add_assign(&AlgElem::monomial(*r).scale_surd(&AlgElem::monomial(*l).haar().mul(k)));
        right.add_assign(&AlgElem::monomial(*l).scale_surd(&AlgElem::monomial(*r).haar().mul(k)));
    }
    ensure(left == hx && right == hx, || format!("invariance at x = {}", x))
}

// ---- actions

fn actions() -> Vec<(&'static str, &'static str, Kind)> {
    vec![
        ("generators", "generator actions on a and a*", Kind::Fixed(act_generators)),
        ("pairing", "left and right actions agree with the dual pairing", Kind::Sampled(act_pairing)),
        ("commute", "left and right actions commute", Kind::Sampled(act_commute)),
        ("module-algebra", "left action of E is twisted-Leibniz", Kind::Sampled(act_module)),
        ("casimir", "Casimir is scalar on Peter-Weyl boxes", Kind::Fixed(act_casimir)),
        ("eigenbasis", "eigenbasis vectors lie in the right box and winding", Kind::Fixed(act_eigenbasis)),
    ]
}

fn random_word(s: &mut Sampler) -> UqWord {
    let gens = [Gen::K, Gen::KInv, Gen::E, Gen::F];
    let len = s.range(1, 3) as usize;
    UqWord::new((0..len).map(|_| gens[s.range(0, 3) as usize]).collect())
}

fn act_generators() -> Outcome {
    let (a, ast, c, cs) = (AlgElem::a(), AlgElem::a_star(), AlgElem::c(), AlgElem::c_star());
    let (q, qi) = (ScalarQ::q(), ScalarQ::q_pow(-1));
    let rows = [
        ("E ⊳ a", act_left(Gen::E, &a), cs.scale(&q.neg())),
        ("E ⊳ c", act_left(Gen::E, &c), ast.clone()),
        ("F ⊳ a*", act_left(Gen::F, &ast), c.clone()),
        ("F ⊳ c*", act_left(Gen::F, &cs), a.scale(&qi.neg())),
        ("c ◁ E", act_right(&c, Gen::E), a.clone()),
        ("a* ◁ E", act_right(&ast, Gen::E), cs.scale(&q.neg())),
        ("a ◁ F", act_right(&a, Gen::F), c.clone()),
        ("c* ◁ F", act_right(&cs, Gen::F), ast.scale(&qi.neg())),
    ];
    for (name, got, want) in rows {
        ensure(got == want, || format!("{} = {}, expected {}", name, got, want))?;
    }
    for p in 1..=6u32 {
        let k = ScalarQ::s_pow(1 - p as i64).mul(&qnum(p as i64));
        let want = c.mul(&ast.pow(p - 1)).scale(&k);
        ensure(act_left(Gen::F, &ast.pow(p)) == want, || format!("F ⊳ a*^{}", p))?;
    }
    Ok(())
}

fn via_pairing(w: &UqWord, x: &AlgElem, left: bool) -> AlgElem {
    let mut out = AlgElem::zero();
    for ((l, r), k) in x.coproduct().terms() {
        let (keep, paired) = if left { (l, r) } else { (r, l) };
        let p = pairing(w, &AlgElem::monomial(*paired));
        out.add_assign(&AlgElem::monomial(*keep).scale_surd(&p.mul(k)));
    }
    out
}

fn act_pairing(s: &mut Sampler) -> Outcome {
    let x = s.small_elem();
    let w = random_word(s);
    ensure(act_left_word(&w, &x) == via_pairing(&w, &x, true), || format!("left, word {:?}, x = {}", w, x))?;
    ensure(act_right_word(&x, &w) == via_pairing(&w, &x, false), || format!("right, word {:?}, x = {}", w, x))
}

fn act_commute(s: &mut Sampler) -> Outcome {
    let x = s.small_elem();
    let (u, v) = (random_word(s), random_word(s));
    let lr = act_right_word(&act_left_word(&u, &x), &v);
    let rl = act_left_word(&u, &act_right_word(&x, &v));
    ensure(lr == rl, || format!("u = {:?}, v = {:?}, x = {}", u, v, x))
}

fn act_module(s: &mut Sampler) -> Outcome {
    let (x, y) = (s.small_elem(), s.small_elem());
    let lhs = act_left(Gen::E, &x.mul(&y));
    let rhs = act_left(Gen::E, &x).mul(&act_left(Gen::K, &y)).add(&act_left(Gen::KInv, &x).mul(&act_left(Gen::E, &y)));
    ensure(lhs == rhs, || format!("x = {}, y = {}", x, y))
}

fn act_casimir() -> Outcome {
    for p in 0..=reach(5) {
        let lam = casimir_eigenvalue(p);
        for (t, row) in pw_basis(p).map_err(err)?.iter().enumerate() {
            for (r, w) in row.iter().enumerate() {
                ensure(casimir_left(w) == w.scale(&lam), || format!("left, p = {}, t = {}, r = {}", p, t, r))?;
                ensure(casimir_right(w) == w.scale(&lam), || format!("right, p = {}, t = {}, r = {}", p, t, r))?;
            }
        }
    }
    Ok(())
}

fn act_eigenbasis() -> Outcome {
    for n in -reach(3)..=reach(3) {
        let mut j2 = n.abs();
        while j2 <= reach(n.abs() + 4) {
            let lam = casimir_eigenvalue(j2);
            let basis = eigenbasis(n, j2, winding_cap()).map_err(err)?;
            ensure(basis.len() as i64 == j2 + 1, || format!("{} vectors for n = {}, J = {}/2", basis.len(), n, j2))?;
            for (l, phi) in basis.iter().enumerate() {
                ensure(phi.is_in(n), || format!("winding, n = {}, J = {}/2, l = {}", n, j2, l))?;
                ensure(casimir_left(phi) == phi.scale(&lam), || format!("Casimir, n = {}, J = {}/2, l = {}", n, j2, l))?;
            }
            j2 += 2;
        }
    }
    Ok(())
}

// ---- calculus

fn calculus() -> Vec<(&'static str, &'static str, Kind)> {
    vec![
        ("wedge-relations", "commutation relations of the basis 1-forms", Kind::Fixed(calc_wedge)),
        ("structure-equations", "exterior derivative of the basis 1-forms", Kind::Fixed(calc_structure)),
        ("generators", "differentials of the four generators", Kind::Fixed(calc_generators)),
        ("bimodule", "basis 1-forms commute with L_n up to q-powers", Kind::Sampled(calc_bimodule)),
        ("d-squared", "d∘d = 0", Kind::Sampled(calc_dd)),
        ("leibniz", "graded Leibniz rule", Kind::Sampled(calc_leibniz)),
        ("star", "star commutes with d and reverses wedge with sign", Kind::Sampled(calc_star)),
        ("equivariance", "d preserves the U(1) charge", Kind::Sampled(calc_equivariant)),
    ]
}

fn calc_wedge() -> Outcome {
    let expect = [
        ((WP, WM), (ScalarQ::q_pow(2).neg(), WMP)),
        ((WZ, WM), (ScalarQ::one(), WZM)),
        ((WM, WZ), (ScalarQ::q_pow(-4).neg(), WZM)),
        ((WZ, WP), (ScalarQ::q_pow(-4).neg(), WPZ)),
    ];
    for ((i, j), e) in expect {
        ensure(basis_wedge(i, j) == Some(e.clone()), || format!("basis {} ∧ basis {}", i, j))?;
    }
    ensure([WM, WP, WZ].iter().all(|&i| basis_wedge(i, i).is_none()), || "nonzero square of a basis 1-form".into())
}

fn calc_structure() -> Outcome {
    let k = |x: ScalarQ| AlgElem::from_scalar(x);
    let one_plus = ScalarQ::one().add(&ScalarQ::q_pow(-2));
    ensure(basis_d(WZ) == Form::single(WMP, k(ScalarQ::int(-1))), || format!("dω_z = {}", basis_d(WZ)))?;
    ensure(basis_d(WP) == Form::single(WPZ, k(one_plus.neg())), || format!("dω₊ = {}", basis_d(WP)))?;
    ensure(basis_d(WM) == Form::single(WZM, k(one_plus.neg())), || format!("dω₋ = {}", basis_d(WM)))
}

fn calc_generators() -> Outcome {
    let q = ScalarQ::q();
    let z = AlgElem::zero;
    let cases = [
        ("a", AlgElem::a(), Form::one_form(z(), AlgElem::c_star().scale(&q.neg()), AlgElem::a())),
        ("c", AlgElem::c(), Form::one_form(z(), AlgElem::a_star(), AlgElem::c())),
        ("a*", AlgElem::a_star(), Form::one_form(AlgElem::c(), z(), AlgElem::a_star().scale(&ScalarQ::q_pow(2).neg()))),
        (
            "c*",
            AlgElem::c_star(),
            Form::one_form(AlgElem::a().scale(&ScalarQ::q_pow(-1).neg()), z(), AlgElem::c_star().scale(&ScalarQ::q_pow(2).neg())),
        ),
    ];
    for (name, x, dx) in cases {
        let got = d0(&x);
        ensure(got == dx, || format!("d{} = {}, expected {}", name, got, dx))?;
    }
    Ok(())
}

fn calc_bimodule(s: &mut Sampler) -> Outcome {
    let n = s.range(-3, 3);
    let x = s.small_elem_in(n);
    let qn = ScalarQ::q_pow(n);
    ensure(Form::basis(WM).right_mul(&x) == Form::single(WM, x.scale(&qn)), || format!("ω₋ x for x = {}", x))?;
    ensure(Form::basis(WP).right_mul(&x) == Form::single(WP, x.scale(&qn)), || format!("ω₊ x for x = {}", x))?;
    ensure(Form::basis(WZ).right_mul(&x) == Form::single(WZ, x.scale(&qn.mul(&qn))), || format!("ω_z x for x = {}", x))
}

fn calc_dd(s: &mut Sampler) -> Outcome {
    let k = s.range(0, 2) as usize;
    let w = form_of(s, k);
    ensure(w.d().d().is_zero(), || format!("w = {}", w))
}

fn calc_leibniz(s: &mut Sampler) -> Outcome {
    let (k, l) = (s.range(0, 2) as usize, s.range(0, 1) as usize);
    let (w, e) = (form_of(s, k), form_of(s, l));
    let lhs = w.wedge_unchecked(&e).d();
    let rhs = w.d().wedge_unchecked(&e).add(&w.wedge_unchecked(&e.d()).scale(&sign(k)));
    ensure(lhs == rhs, || format!("w = {}, e = {}", w, e))
}

fn calc_star(s: &mut Sampler) -> Outcome {
    let (k, l) = (s.range(0, 2) as usize, s.range(0, 1) as usize);
    let (w, e) = (form_of(s, k), form_of(s, l));
    ensure(w.star().star() == w, || format!("w** ≠ w at w = {}", w))?;
    ensure(w.d().star() == w.star().d(), || format!("(dw)* ≠ d(w*) at w = {}", w))?;
    let rhs = e.star().wedge_unchecked(&w.star()).scale(&sign(k * l));
    ensure(w.wedge_unchecked(&e).star() == rhs, || format!("(w∧e)* at w = {}, e = {}", w, e))
}

fn calc_equivariant(s: &mut Sampler) -> Outcome {
    let k = s.range(0, 2) as usize;
    let w = form_of(s, k);
    for (ch, part) in w.charge_components() {
        let dp = part.d();
        ensure(dp.is_zero() || dp.charges() == vec![ch], || format!("charge {} part {}", ch, part))?;
    }
    Ok(())
}

// ---- hodge

fn hodge() -> Vec<(&'static str, &'static str, Kind)> {
    vec![
        ("star-table", "Hodge star maps basis forms to basis forms invertibly", Kind::Fixed(hodge_table)),
        ("star-squared", "Hodge star squares to the identity", Kind::Sampled(hodge_squared)),
        ("inner-product", "basis inner products are integrals of e*∧★e", Kind::Fixed(hodge_inner)),
        ("laplacian-composition", "closed-form Laplacian equals ★d★d", Kind::Sampled(hodge_compose)),
        ("eigenvalues", "eigenbasis vectors have the predicted Laplacian eigenvalue", Kind::Fixed(hodge_eigen)),
        ("positivity", "inner product is positive and symmetric at s = 1/2", Kind::Sampled(hodge_positive)),
    ]
}

fn hodge_table() -> Outcome {
    for p in params() {
        for i in 0..8 {
            let (k1, j) = hodge3_basis(i, &p);
            let (k2, back) = hodge3_basis(j, &p);
            ensure(back == i && k1.mul(&k2).is_one(), || format!("basis {}", i))?;
        }
    }
    Ok(())
}

fn hodge_squared(s: &mut Sampler) -> Outcome {
    let k = s.range(0, 3) as usize;
    let w = form_of(s, k);
    for p in params() {
        ensure(hodge3(&hodge3(&w, &p), &p) == w, || format!("w = {}", w))?;
    }
    Ok(())
}

fn hodge_inner() -> Outcome {
    let p = HodgeParams::default();
    for i in 0..8 {
        let e = Form::basis(i);
        let via = integral3(&e.star().wedge_unchecked(&hodge3(&e, &p)), &p);
        let table = inner3_basis(i, &p);
        ensure(via == qhopf::Surd::from_scalar(table.clone()), || format!("basis {}: {} vs {}", i, via, table))?;
        ensure(inner3(&e, &e, &p).map_err(err)? == via, || format!("inner3 on basis {}", i))?;
    }
    Ok(())
}

fn hodge_compose(s: &mut Sampler) -> Outcome {
    let n = s.range(-3, 3);
    let x = s.elem_in(n);
    for p in params() {
        ensure(laplacian3(&x, &p) == laplacian3_compositional(&x, &p), || format!("x = {}", x))?;
    }
    Ok(())
}

fn hodge_eigen() -> Outcome {
    for p in params() {
        for n in -reach(3)..=reach(3) {
            let mut j2 = n.abs();
            while j2 <= n.abs() + 4 {
                let lam = spectrum3(n, j2, &p).map_err(err)?;
                for (l, phi) in eigenbasis(n, j2, winding_cap()).map_err(err)?.iter().enumerate() {
                    ensure(laplacian3(phi, &p) == phi.scale(&lam), || format!("n = {}, J = {}/2, l = {}", n, j2, l))?;
                }
                j2 += 2;
            }
        }
    }
    Ok(())
}

fn hodge_positive(s: &mut Sampler) -> Outcome {
    let k = s.range(0, 3) as usize;
    let (u, v) = (form_of(s, k), form_of(s, k));
    let p = HodgeParams::default();
    let at = Rat::new(1, 2);
    let vv = inner3(&v, &v, &p).map_err(err)?.eval_at(&at).map_err(err)?;
    ensure(vv.signum() > 0, || format!("⟨v, v⟩ = {} for v = {}", vv, v))?;
    let uv = inner3(&u, &v, &p).map_err(err)?.eval_at(&at).map_err(err)?;
    let vu = inner3(&v, &u, &p).map_err(err)?.eval_at(&at).map_err(err)?;
    ensure(uv == vu, || format!("u = {}, v = {}", u, v))
}

// ---- sphere

fn sphere() -> Vec<(&'static str, &'static str, Kind)> {
    vec![
        ("generators", "sphere generators are coinvariant with the expected stars", Kind::Fixed(sph_generators)),
        ("holomorphic-split", "∂ and ∂̄ of the generators", Kind::Fixed(sph_split)),
        ("relations", "relations among the differentials of the generators", Kind::Fixed(sph_relations)),
        ("non-degenerate", "every basis form pairs nontrivially under the integral", Kind::Fixed(sph_nondegenerate)),
        ("hodge-symmetry", "e∧★e′ = ±★e∧e′", Kind::Sampled(sph_symmetry)),
        ("hodge-bimodule", "Hodge star is twisted-bilinear", Kind::Sampled(sph_bilinear)),
        ("laplacian-restriction", "sphere Laplacian is the restriction of the total one", Kind::Sampled(sph_restriction)),
        ("embedding", "inclusion into 3D forms commutes with d and wedge", Kind::Sampled(sph_embedding)),
        ("eigenvalues", "spin-J boxes are eigenspaces of the sphere Laplacian", Kind::Fixed(sph_eigen)),
    ]
}

fn sphere_form(s: &mut Sampler, k: usize) -> SphereForm {
    match k {
        0 => SphereForm::function(s.small_elem_in(0)),
        1 => SphereForm::one_form(s.small_elem_in(-2), s.small_elem_in(2)),
        _ => SphereForm::two_form(s.small_elem_in(0)),
    }
}

fn sph_generators() -> Outcome {
    let (bm, b0, bp) = sphere_generators();
    ensure(bm == AlgElem::a().mul(&AlgElem::c_star()).neg(), || format!("B₋ = {}", bm))?;
    ensure(bp == AlgElem::c().mul(&AlgElem::a_star()).scale(&ScalarQ::q()), || format!("B₊ = {}", bp))?;
    ensure([&bm, &b0, &bp].iter().all(|b| b.is_in(0)), || "generator outside L₀".into())?;
    ensure(b0.star() == b0, || "B₀* ≠ B₀".into())?;
    ensure(bp.star() == bm.scale(&ScalarQ::q().neg()), || "B₊* ≠ -q B₋".into())
}

fn sph_split() -> Outcome {
    let (bm, b0, bp) = sphere_generators();
    let (a, ast, c, cs) = (AlgElem::a(), AlgElem::a_star(), AlgElem::c(), AlgElem::c_star());
    let minus = |x: AlgElem| SphereForm::one_form(x, AlgElem::zero());
    let plus = |x: AlgElem| SphereForm::one_form(AlgElem::zero(), x);
    let q2 = ScalarQ::q_pow(2);
    let rows = [
        ("∂̄B₋", delbar(&bm), minus(a.pow(2).scale(&ScalarQ::q_pow(-1)))),
        ("∂̄B₀", delbar(&b0), minus(c.mul(&a).scale(&ScalarQ::q()))),
        ("∂̄B₊", delbar(&bp), minus(c.pow(2).scale(&ScalarQ::q()))),
        ("∂B₋", del(&bm), plus(cs.pow(2).scale(&q2))),
        ("∂B₀", del(&b0), plus(cs.mul(&ast).scale(&q2.neg()))),
        ("∂B₊", del(&bp), plus(ast.pow(2).scale(&q2))),
    ];
    for (name, got, want) in rows {
        let got = got.map_err(err)?;
        ensure(got == want, || format!("{} = {}, expected {}", name, got, want))?;
    }
    for b in [&bm, &b0, &bp] {
        ensure(sphere_d(b).map_err(err)? == del(b).map_err(err)?.add(&delbar(b).map_err(err)?), || format!("d ≠ ∂ + ∂̄ on {}", b))?;
    }
    Ok(())
}

fn sph_relations() -> Outcome {
    let (bm, b0, bp) = sphere_generators();
    let lhs = del(&b0).map_err(err)?;
    let rhs = del(&bp)
        .map_err(err)?
        .left_mul(&bm)
        .scale(&ScalarQ::q_pow(-1))
        .sub(&del(&bm).map_err(err)?.left_mul(&bp).scale(&ScalarQ::q_pow(3)));
    ensure(lhs == rhs, || format!("∂B₀: {} vs {}", lhs, rhs))?;
    let lhs = delbar(&b0).map_err(err)?;
    let rhs = delbar(&bm)
        .map_err(err)?
        .left_mul(&bp)
        .scale(&ScalarQ::q())
        .sub(&delbar(&bp).map_err(err)?.left_mul(&bm).scale(&ScalarQ::q_pow(-3)));
    ensure(lhs == rhs, || format!("∂̄B₀: {} vs {}", lhs, rhs))
}

fn sph_nondegenerate() -> Outcome {
    let p = HodgeParams::default();
    let (a2, as2) = (AlgElem::a().pow(2), AlgElem::a_star().pow(2));
    let pairs = [
        (SphereForm::function(AlgElem::one()), SphereForm::two_form(AlgElem::one())),
        (SphereForm::one_form(a2.clone(), AlgElem::zero()), SphereForm::one_form(AlgElem::zero(), as2.clone())),
        (SphereForm::one_form(AlgElem::zero(), as2), SphereForm::one_form(a2, AlgElem::zero())),
        (SphereForm::two_form(AlgElem::one()), SphereForm::function(AlgElem::one())),
    ];
    for (eta, witness) in pairs {
        let (re, im) = witness.wedge(&eta).map_err(err)?.integral(&p);
        ensure(!re.is_zero() || !im.is_zero(), || format!("no partner for {}", eta))?;
    }
    Ok(())
}

fn sph_symmetry(s: &mut Sampler) -> Outcome {
    let k = s.range(0, 2) as usize;
    let (e1, e2) = (sphere_form(s, k), sphere_form(s, k));
    for p in params() {
        let lhs = e1.hodge(&p).wedge(&e2).map_err(err)?;
        let rhs = e1.wedge(&e2.hodge(&p)).map_err(err)?.scale(&sign(k * (2 - k)));
        ensure(lhs == rhs, || format!("e = {}, e′ = {}", e1, e2))?;
        ensure(e1.hodge(&p).hodge(&p) == e1.scale(&sign(k * (2 - k))), || format!("★★ on {}", e1))?;
    }
    Ok(())
}

fn sph_bilinear(s: &mut Sampler) -> Outcome {
    let n = s.range(-2, 2);
    let (phi, phi2) = (s.small_elem_in(n), s.small_elem_in(-n));
    let e = sphere_form(s, 1);
    let f = s.small_elem_in(0);
    let vol = SphereForm::two_form(AlgElem::one());
    for p in params() {
        ensure(e.right_mul(&f).hodge(&p) == e.hodge(&p).right_mul(&f), || format!("right-linear, e = {}, f = {}", e, f))?;
        let lhs = e.left_mul(&phi2).right_mul(&phi).hodge(&p);
        let rhs = e.hodge(&p).left_mul(&phi2).right_mul(&phi);
        ensure(lhs == rhs, || format!("1-form, φ = {}, φ′ = {}, e = {}", phi, phi2, e))?;
        let lhs = vol.left_mul(&phi2).right_mul(&phi).hodge(&p);
        let rhs = vol.hodge(&p).left_mul(&phi2).right_mul(&phi).scale(&ScalarQ::q_pow(2 * n));
        ensure(lhs == rhs, || format!("2-form, φ = {}, φ′ = {}", phi, phi2))?;
    }
    Ok(())
}

fn sph_restriction(s: &mut Sampler) -> Outcome {
    let f = s.elem_in(0);
    for p in params() {
        let lap = sphere_laplacian(&f, &p).map_err(err)?;
        ensure(lap == laplacian3(&f, &p), || format!("f = {}", f))?;
        ensure(sphere_laplacian_compositional(&f, &p).map_err(err)? == CElem::real(lap), || format!("★d★d on f = {}", f))?;
    }
    Ok(())
}

fn sph_embedding(s: &mut Sampler) -> Outcome {
    let f = s.small_elem_in(0);
    ensure(sphere_d(&f).map_err(err)?.real_to_form() == Form::function(f.clone()).d(), || format!("d on f = {}", f))?;
    let k = s.range(0, 2) as usize;
    let l = s.range(0, 2 - k as i64) as usize;
    let (e1, e2) = (sphere_form(s, k), sphere_form(s, l));
    let w = e1.wedge(&e2).map_err(err)?;
    let w3 = e1.real_to_form().wedge(&e2.real_to_form()).map_err(err)?;
    ensure(w.real_to_form() == w3, || format!("e = {}, e′ = {}", e1, e2))?;
    ensure(SphereForm::from_form(&w3).map_err(err)? == w, || format!("round trip of {}", w))
}

fn sph_eigen() -> Outcome {
    for p in params() {
        for j in 0..=reach(4) / 2 + 1 {
            let lam = spectrum_sphere(j, &p).map_err(err)?;
            ensure(spectrum3(0, 2 * j, &p).map_err(err)? == lam, || format!("total and sphere differ at J = {}", j))?;
            for (l, phi) in eigenbasis(0, 2 * j, winding_cap()).map_err(err)?.iter().enumerate() {
                ensure(sphere_laplacian(phi, &p).map_err(err)? == phi.scale(&lam), || format!("J = {}, l = {}", j, l))?;
            }
        }
    }
    Ok(())
}

// ---- bundles

fn bundles() -> Vec<(&'static str, &'static str, Kind)> {
    vec![
        ("kets", "kets have entries in L_n and unit norm", Kind::Fixed(bun_kets)),
        ("projectors", "projectors are self-adjoint idempotents over L₀", Kind::Fixed(bun_projectors)),
        ("curvature", "(dp∧dp)p and p(dp∧dp) are q^{1-n}[n] p ω₋∧ω₊", Kind::Fixed(bun_curvature)),
        ("galois", "translation map witness for the Hopf-Galois condition", Kind::Fixed(bun_galois)),
        ("sections", "sections and equivariant maps correspond", Kind::Sampled(bun_sections)),
        ("hermitian", "hermitian structure of sections is φψ*", Kind::Sampled(bun_hermitian)),
    ]
}

fn bun_kets() -> Outcome {
    for n in -reach(4)..=reach(4) {
        let ket = make_ket(n).map_err(err)?;
        ensure(ket.len() as i64 == n.abs() + 1, || format!("length, n = {}", n))?;
        ensure(ket.comps.iter().all(|x| x.is_in(n)), || format!("winding, n = {}", n))?;
        ensure(ket.norm() == AlgElem::one(), || format!("norm {} at n = {}", ket.norm(), n))?;
    }
    Ok(())
}

fn bun_projectors() -> Outcome {
    for n in -reach(4)..=reach(4) {
        let p = make_ket(n).map_err(err)?.projector();
        ensure(matmul(&p, &p) == p, || format!("p² ≠ p at n = {}", n))?;
        ensure(dagger(&p) == p, || format!("p† ≠ p at n = {}", n))?;
        ensure(p.iter().flatten().all(|x| x.is_in(0)), || format!("entry outside L₀ at n = {}", n))?;
    }
    Ok(())
}

fn bun_curvature() -> Outcome {
    for n in -reach(3)..=reach(3) {
        let pc = projector_curvature(n).map_err(err)?;
        ensure(pc.left == pc.expected, || format!("(dp∧dp)p at n = {}", n))?;
        ensure(pc.right == pc.expected, || format!("p(dp∧dp) at n = {}", n))?;
    }
    Ok(())
}

fn bun_galois() -> Outcome {
    for n in -reach(4)..=reach(4) {
        let w = galois_witness(n).map_err(err)?;
        ensure(w.in_kernel, || format!("γ outside the kernel of multiplication at n = {}", n))?;
        ensure(w.image == w.expected, || format!("χ(γ) ≠ 1⊗(zⁿ - 1) at n = {}", n))?;
    }
    Ok(())
}

fn bun_sections(s: &mut Sampler) -> Outcome {
    let n = s.range(-reach(3), reach(3));
    let ket = make_ket(n).map_err(err)?;
    let phi = s.small_elem_in(n);
    let sigma = section_of(&phi, &ket).map_err(err)?;
    ensure(equivariant_of(&sigma, &ket).map_err(err)? == phi, || format!("φ = {} at n = {}", phi, n))
}

fn bun_hermitian(s: &mut Sampler) -> Outcome {
    let n = s.range(-reach(3), reach(3));
    let ket = make_ket(n).map_err(err)?;
    let (phi, psi) = (s.small_elem_in(n), s.small_elem_in(n));
    let h = hermitian(&section_of(&phi, &ket).map_err(err)?, &section_of(&psi, &ket).map_err(err)?);
    ensure(h == phi.mul(&psi.star()) && h.is_in(0), || format!("φ = {}, ψ = {}, n = {}", phi, psi, n))
}

// ---- gauge

fn gauge() -> Vec<(&'static str, &'static str, Kind)> {
    vec![
        ("projector", "connection projector is idempotent with horizontal kernel", Kind::Sampled(gau_projector)),
        ("vertical", "vertical part of dφ is φ times the connection form", Kind::Sampled(gau_vertical)),
        ("covariant", "covariant derivatives agree across constructions", Kind::Sampled(gau_covariant)),
        ("horizontal-projectors", "the two horizontal projectors agree only for the monopole", Kind::Fixed(gau_horizontal)),
        ("relations", "projected quadratic relations", Kind::Fixed(gau_relations)),
        ("master-relation", "gauged Laplacian relation and eigenvalues on the eigenbasis", Kind::Fixed(gau_master)),
        ("closed-form", "closed-form gauged Laplacian equals the compositional one", Kind::Sampled(gau_closed)),
    ]
}

fn random_connection(s: &mut Sampler) -> Connection {
    match s.range(0, 2) {
        0 => Connection::monopole(),
        _ => Connection::new(s.small_elem_in(2), s.small_elem_in(-2)).expect("windings ±2"),
    }
}

fn show(c: &Connection) -> String {
    format!("U = {}, V = {}", c.u, c.v)
}

fn gau_projector(s: &mut Sampler) -> Outcome {
    let conn = random_connection(s);
    let w = s.form(1);
    let pw = connection_projector(&w, &conn).map_err(err)?;
    ensure(connection_projector(&pw, &conn).map_err(err)? == pw, || format!("Π² ≠ Π at w = {}, {}", w, show(&conn)))?;
    let h = horizontal_part(&w, &conn).map_err(err)?;
    ensure(connection_projector(&h, &conn).map_err(err)?.is_zero(), || format!("Π(1-Π) ≠ 0 at w = {}, {}", w, show(&conn)))
}

fn gau_vertical(s: &mut Sampler) -> Outcome {
    let n = s.range(-3, 3);
    let phi = s.small_elem_in(n);
    let conn = random_connection(s);
    let got = connection_projector(&Form::function(phi.clone()).d(), &conn).map_err(err)?;
    ensure(got == connection_one_form(-n, &conn).left_mul(&phi), || format!("φ = {}, {}", phi, show(&conn)))
}

fn gau_covariant(s: &mut Sampler) -> Outcome {
    let n = s.range(-2, 2);
    let phi = s.small_elem_in(n);
    let conn = random_connection(s);
    let at = || format!("φ = {} in L_{}, {}", phi, n, show(&conn));
    let d1 = cov_d0(&phi, &conn).map_err(err)?;
    ensure(d1 == cov_d0_projector(&phi, &conn).map_err(err)?, || format!("D via projector, {}", at()))?;
    ensure(d1.require_equivariant(n).is_ok(), || format!("Dφ not equivariant, {}", at()))?;
    ensure(d1 == h_omega(&Form::function(phi.clone()).d(), &conn), || format!("D ≠ h∘d, {}", at()))?;
    let d2 = cov_d1(&d1, n, &conn).map_err(err)?;
    ensure(d2 == h_omega(&d1.d(), &conn), || format!("D on 1-forms ≠ h∘d, {}", at()))?;
    ensure(d2 == d2_from_connection_form(&phi, &conn).map_err(err)?, || format!("D² ≠ d(connection form), {}", at()))?;
    ensure(d2 == curvature_scalar(n, &conn).left_mul(&phi), || format!("D² ≠ φF, {}", at()))
}

fn gau_horizontal() -> Outcome {
    let agree = |c: &Connection| (0..8).all(|i| h_omega(&Form::basis(i), c) == h_omega_prime(&Form::basis(i), c));
    ensure(agree(&Connection::monopole()), || "projectors differ for the monopole".into())?;
    let conns = [
        Connection::new(AlgElem::a_star().pow(2), AlgElem::zero()),
        Connection::new(AlgElem::zero(), AlgElem::a().pow(2)),
        Connection::new(AlgElem::c_star().mul(&AlgElem::a_star()), AlgElem::c().pow(2)),
    ];
    for c in conns {
        let c = c.map_err(err)?;
        ensure(!agree(&c), || format!("projectors agree for {}", show(&c)))?;
    }
    Ok(())
}

fn gau_relations() -> Outcome {
    ensure(relations_hold_unprojected(), || "quadratic relations fail on the plain basis".into())?;
    ensure(projected_relations(&Connection::monopole()).iter().all(Form::is_zero), || "monopole breaks a relation".into())?;
    let c = Connection::new(AlgElem::a_star().pow(2), AlgElem::c().mul(&AlgElem::a()).scale(&ScalarQ::int(3))).map_err(err)?;
    let r = projected_relations(&c);
    ensure(r[..3].iter().all(Form::is_zero), || "first three projected relations nonzero".into())?;
    let (q2, q4, one) = (ScalarQ::q_pow(2), ScalarQ::q_pow(4), ScalarQ::one());
    let vol = |x: AlgElem| Form::single(WMP, x);
    ensure(r[3] == vol(c.u.scale(&q2.mul(&one.sub(&q4)))), || format!("fourth relation: {}", r[3]))?;
    ensure(r[4] == vol(c.v.scale(&ScalarQ::q_pow(-4).sub(&one))), || format!("fifth relation: {}", r[4]))?;
    ensure(r[5] == vol(c.v.mul(&c.u).scale(&q2).sub(&c.u.mul(&c.v))), || format!("sixth relation: {}", r[5]))
}

fn gau_master() -> Outcome {
    for p in params() {
        for n in -reach(3)..=reach(3) {
            for row in verify_master_relation(n, n.abs() + 4, &p).map_err(err)? {
                ensure(row.relation, || format!("relation at n = {}, J = {}/2, l = {}", n, row.j2, row.l))?;
                ensure(row.eigenvalue, || format!("eigenvalue at n = {}, J = {}/2, l = {}", n, row.j2, row.l))?;
            }
        }
    }
    Ok(())
}

fn gau_closed(s: &mut Sampler) -> Outcome {
    let n = s.range(-2, 2);
    let phi = s.small_elem_in(n);
    let conn = random_connection(s);
    let p = HodgeParams::default();
    let comp = gauged_laplacian_compositional(&phi, &conn, &p).map_err(err)?;
    ensure(gauged_laplacian_general(&phi, &conn, &p).map_err(err)? == comp, || format!("φ = {}, {}", phi, show(&conn)))?;
    if conn.is_monopole() {
        ensure(comp == CElem::real(gauged_laplacian(&phi, &p).map_err(err)?), || format!("monopole formula at φ = {}", phi))?;
    }
    Ok(())
}

// ---- classical

fn classical() -> Vec<(&'static str, &'static str, Kind)> {
    vec![
        ("structure-constants", "braidings and bimodule weights become trivial at q = 1", Kind::Fixed(cl_structure)),
        ("calculus", "structure equations reduce to the classical ones", Kind::Fixed(cl_calculus)),
        ("spectra", "spectra reduce to the [x] → x substitution", Kind::Fixed(cl_spectra)),
    ]
}

fn first_failure(items: &[ClassicalItem]) -> Outcome {
    match items.iter().find(|i| !i.ok) {
        None => Ok(()),
        Some(i) => Err(format!("{}: {} vs {}{}", i.name, i.at_one.as_deref().unwrap_or("-"), i.oracle, i.error.as_ref().map(|e| format!(" ({})", e)).unwrap_or_default())),
    }
}

fn cl_structure() -> Outcome {
    first_failure(&structure_constants_report())
}

fn cl_calculus() -> Outcome {
    first_failure(&calculus_report())
}

fn cl_spectra() -> Outcome {
    let mut items = spectra_report(reach(3), 3, &Rat::one()).map_err(err)?;
    items.extend(spectra_report(reach(2), 2, &Rat::new(3, 2)).map_err(err)?);
    first_failure(&items)
}
