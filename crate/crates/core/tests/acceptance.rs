use std::time::Instant;

use qhopf::bundle::{dagger, galois_witness, make_ket, matmul};
use qhopf::classical::{calculus_report, spectra_report, structure_constants_report};
use qhopf::forms::{d0, WM, WP, WZ};
use qhopf::gauge::{h_omega, h_omega_prime, projector_curvature, verify_master_relation, Connection};
use qhopf::hodge::{hodge3, laplacian3, spectrum3, spectrum_sphere, HodgeParams};
use qhopf::random::Sampler;
use qhopf::sphere::{sphere_laplacian, SphereForm};
use qhopf::uq::{casimir_eigenvalue, casimir_left, casimir_right, eigenbasis, pw_basis};
use qhopf::{AlgElem, Form, Rat, ScalarQ};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn laplacian_spectrum() -> Outcome {
    let p = HodgeParams::default();
    for n in -3..=3i64 {
        let mut j2 = n.abs();
        while j2 <= n.abs() + 6 {
            let lam = spectrum3(n, j2, &p).map_err(|e| e.to_string())?;
            for (l, phi) in eigenbasis(n, j2, 8).map_err(|e| e.to_string())?.iter().enumerate() {
                check(laplacian3(phi, &p) == phi.scale(&lam), || format!("n = {}, J = {}/2, l = {}", n, j2, l))?;
            }
            j2 += 2;
        }
    }
    Ok(())
}

fn sphere_spectrum() -> Outcome {
    let p = HodgeParams::default();
    for j in 0..=4 {
        let lam = spectrum_sphere(j, &p).map_err(|e| e.to_string())?;
        for (l, phi) in eigenbasis(0, 2 * j, 8).map_err(|e| e.to_string())?.iter().enumerate() {
            let got = sphere_laplacian(phi, &p).map_err(|e| e.to_string())?;
            check(got == phi.scale(&lam), || format!("J = {}, l = {}", j, l))?;
        }
    }
    Ok(())
}

fn gauged_spectrum() -> Outcome {
    let p = HodgeParams::default();
    for n in -3..=3i64 {
        for row in verify_master_relation(n, n.abs() + 6, &p).map_err(|e| e.to_string())? {
            check(row.relation, || format!("master relation at n = {}, J = {}/2, l = {}", n, row.j2, row.l))?;
            check(row.eigenvalue, || format!("eigenvalue at n = {}, J = {}/2, l = {}", n, row.j2, row.l))?;
        }
    }
    Ok(())
}

fn projectors() -> Outcome {
    for n in -4..=4 {
        let ket = make_ket(n).map_err(|e| e.to_string())?;
        check(ket.norm() == AlgElem::one(), || format!("norm, n = {}", n))?;
        let p = ket.projector();
        check(matmul(&p, &p) == p, || format!("p² = p, n = {}", n))?;
        check(dagger(&p) == p, || format!("p† = p, n = {}", n))?;
        check(p.iter().flatten().all(|x| x.is_in(0)), || format!("entries in L₀, n = {}", n))?;
    }
    Ok(())
}

fn curvature_lemma() -> Outcome {
    for n in [1, 2, -1, -2] {
        let pc = projector_curvature(n).map_err(|e| e.to_string())?;
        check(pc.left == pc.expected, || format!("n = {}", n))?;
    }
    Ok(())
}

fn sign(k: usize) -> ScalarQ {
    ScalarQ::int(if k.is_multiple_of(2) { 1 } else { -1 })
}

fn calculus_axioms() -> Outcome {
    let p = HodgeParams::default();
    let mut s = Sampler::new(20240601);
    for i in 0..500 {
        let k = i % 3;
        let w = if k == 0 { Form::function(s.small_elem()) } else { s.form(k) };
        check(w.d().d().is_zero(), || format!("d² at sample {}", i))?;

        let l = (i / 3) % 2;
        let e = if l == 0 { Form::function(s.small_elem()) } else { s.form(l) };
        let lhs = w.wedge_unchecked(&e).d();
        let rhs = w.d().wedge_unchecked(&e).add(&w.wedge_unchecked(&e.d()).scale(&sign(k)));
        check(lhs == rhs, || format!("graded Leibniz at sample {}", i))?;

        let t = if i % 4 == 3 { Form::top(s.small_elem()) } else { w.clone() };
        check(hodge3(&hodge3(&t, &p), &p) == t, || format!("3D ★★ at sample {}", i))?;

        let sk = i % 3;
        let sf = match sk {
            0 => SphereForm::function(s.small_elem_in(0)),
            1 => SphereForm::one_form(s.small_elem_in(-2), s.small_elem_in(2)),
            _ => SphereForm::two_form(s.small_elem_in(0)),
        };
        check(sf.hodge(&p).hodge(&p) == sf.scale(&sign(sk * (2 - sk))), || format!("2D ★★ at sample {}", i))?;

        let n = s.range(-3, 3);
        let x = s.small_elem_in(n);
        let qn = ScalarQ::q_pow(n);
        check(Form::basis(WM).right_mul(&x) == Form::single(WM, x.scale(&qn)), || format!("ω₋ φ at sample {}", i))?;
        check(Form::basis(WP).right_mul(&x) == Form::single(WP, x.scale(&qn)), || format!("ω₊ φ at sample {}", i))?;
        check(Form::basis(WZ).right_mul(&x) == Form::single(WZ, x.scale(&qn.mul(&qn))), || format!("ω_z φ at sample {}", i))?;
        let y = s.small_elem();
        check(d0(&x.mul(&y)) == d0(&x).right_mul(&y).add(&d0(&y).left_mul(&x)), || format!("d(xy) at sample {}", i))?;
    }
    Ok(())
}

fn casimir() -> Outcome {
    for p in 0..=5 {
        let lam = casimir_eigenvalue(p);
        for (t, row) in pw_basis(p).map_err(|e| e.to_string())?.iter().enumerate() {
            for (r, w) in row.iter().enumerate() {
                check(casimir_left(w) == w.scale(&lam), || format!("left, p = {}, t = {}, r = {}", p, t, r))?;
                check(casimir_right(w) == w.scale(&lam), || format!("right, p = {}, t = {}, r = {}", p, t, r))?;
            }
        }
    }
    Ok(())
}

fn galois() -> Outcome {
    for n in -4..=4 {
        let w = galois_witness(n).map_err(|e| e.to_string())?;
        check(w.holds(), || format!("n = {}", n))?;
    }
    Ok(())
}

fn projector_inequivalence() -> Outcome {
    let equal_on_basis = |c: &Connection| (0..8).all(|i| h_omega(&Form::basis(i), c) == h_omega_prime(&Form::basis(i), c));
    check(equal_on_basis(&Connection::monopole()), || "monopole".into())?;
    let conns = [
        Connection::new(AlgElem::a_star().pow(2), AlgElem::zero()),
        Connection::new(AlgElem::zero(), AlgElem::a().pow(2)),
        Connection::new(AlgElem::c_star().mul(&AlgElem::a_star()), AlgElem::c().pow(2)),
    ];
    for c in conns {
        let c = c.map_err(|e| e.to_string())?;
        check(!equal_on_basis(&c), || format!("no witness for U = {}, V = {}", c.u, c.v))?;
    }
    Ok(())
}

fn classical_limit() -> Outcome {
    let mut items = structure_constants_report();
    items.extend(calculus_report());
    items.extend(spectra_report(3, 3, &Rat::one()).map_err(|e| e.to_string())?);
    items.extend(spectra_report(2, 2, &Rat::new(3, 2)).map_err(|e| e.to_string())?);
    match items.iter().find(|i| !i.ok) {
        None => Ok(()),
        Some(i) => Err(format!("{}: {:?} vs {}", i.name, i.at_one, i.oracle)),
    }
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("laplacian spectrum on SU_q(2)", laplacian_spectrum),
        ("sphere spectrum", sphere_spectrum),
        ("gauged spectrum and master relation", gauged_spectrum),
        ("projectors", projectors),
        ("projector curvature", curvature_lemma),
        ("calculus axioms (500 samples)", calculus_axioms),
        ("casimir on Peter-Weyl boxes", casimir),
        ("Hopf-Galois witness", galois),
        ("horizontal projector inequivalence", projector_inequivalence),
        ("classical limit", classical_limit),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(()) => println!("criterion {:>2} PASS  {} ({:.2}s)", i + 1, name, secs),
            Err(e) => {
                println!("criterion {:>2} FAIL  {} ({:.2}s): {}", i + 1, name, secs, e);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
