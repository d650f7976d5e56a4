//! Connections on the quantum Hopf bundle, covariant derivatives, gauge
//! potentials, curvature and the gauged Laplacian.

use serde::Serialize;

use crate::algebra::AlgElem;
use crate::bundle::{d_matrix, fn_mul_form, form_matmul, form_mul_fn, make_ket_with_cap, FormMatrix, Ket};
use crate::config::winding_cap;
use crate::error::Result;
use crate::forms::{basis_wedge, Form, ONE, WM, WMP, WP, WPZ, WZ, WZM};
use crate::hodge::{laplacian3, require_degree, spectrum_gauged, HodgeParams};
use crate::scalar::{qnum, z_factor, ScalarQ};
use crate::sphere::{CElem, SphereForm};
use crate::uq::{eigenbasis, x_minus, x_plus, x_z};

/// `a = U ω₊ + V ω₋` with `U ∈ L₂`, `V ∈ L₋₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    pub u: AlgElem,
    pub v: AlgElem,
}

impl Connection {
    pub fn new(u: AlgElem, v: AlgElem) -> Result<Connection> {
        u.require_winding(2)?;
        v.require_winding(-2)?;
        Ok(Connection { u, v })
    }

    pub fn monopole() -> Connection {
        Connection { u: AlgElem::zero(), v: AlgElem::zero() }
    }

    pub fn is_monopole(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// The base 1-form `a`.
    pub fn a_form(&self) -> Form {
        Form::one_form(self.v.clone(), self.u.clone(), AlgElem::zero())
    }

    pub fn a_sphere(&self) -> SphereForm {
        SphereForm::one_form(self.v.clone(), self.u.clone())
    }

    /// `a* = -a`
    pub fn is_hermitian(&self) -> bool {
        let a = self.a_form();
        a.star() == a.neg()
    }

    fn vertical(&self) -> Form {
        Form::basis(WZ).add(&self.a_form())
    }
}

fn require_one_form(w: &Form) -> Result<()> {
    require_degree(w, 1)
}

/// `Π(x₋ω₋ + x₊ω₊ + x_z ω_z) = x_z (ω_z + a)`
pub fn connection_projector(w: &Form, conn: &Connection) -> Result<Form> {
    require_one_form(w)?;
    Ok(conn.vertical().left_mul(w.coeff(WZ)))
}

/// `(1 - Π) ω` on 1-forms.
pub fn horizontal_part(w: &Form, conn: &Connection) -> Result<Form> {
    Ok(w.sub(&connection_projector(w, conn)?))
}

/// `ω(z^j) = (1 - q^{-2j})/(1 - q^{-2}) (ω_z + a)`
pub fn connection_one_form(j: i64, conn: &Connection) -> Form {
    conn.vertical().scale(&z_factor(-j))
}

fn single_winding(phi: &AlgElem) -> Result<i64> {
    Ok(phi.winding()?.unwrap_or(0))
}

/// `Dφ = dφ - φ ω(z^{-n})` for `φ ∈ L_n`.
pub fn cov_d0(phi: &AlgElem, conn: &Connection) -> Result<Form> {
    let n = single_winding(phi)?;
    let d = Form::function(phi.clone()).d();
    Ok(d.sub(&connection_one_form(-n, conn).left_mul(phi)))
}

/// `Dφ = (1 - Π) dφ`
pub fn cov_d0_projector(phi: &AlgElem, conn: &Connection) -> Result<Form> {
    single_winding(phi)?;
    horizontal_part(&Form::function(phi.clone()).d(), conn)
}

/// `Dφ = dφ + φ ∧ ω(z^{-n})` for `φ ∈ L_n^{(1)}`.
pub fn cov_d1(phi: &Form, n: i64, conn: &Connection) -> Result<Form> {
    require_one_form(phi)?;
    phi.require_equivariant(n)?;
    Ok(phi.d().add(&phi.wedge_unchecked(&connection_one_form(-n, conn))))
}

/// `A⁽ⁿ⁾ = -(1 - q^{2n})/(1 - q^{-2}) |Ψ⟩ a ⟨Ψ|`
pub fn gauge_potential(n: i64, conn: &Connection) -> Result<FormMatrix> {
    let ket = make_ket_with_cap(n, winding_cap())?;
    Ok(sandwich(&ket, &conn.a_form().scale(&z_factor(n).neg())))
}

/// `|Ψ⟩ w ⟨Ψ|`
pub fn sandwich(ket: &Ket, w: &Form) -> FormMatrix {
    let bra = ket.bra();
    ket.comps.iter().map(|k| bra.iter().map(|b| w.left_mul(k).right_mul(b)).collect()).collect()
}

/// `⟨Ψ| M |Ψ⟩`
pub fn expectation(ket: &Ket, m: &FormMatrix) -> Form {
    let mut out = Form::zero();
    for (i, row) in m.iter().enumerate() {
        for (j, w) in row.iter().enumerate() {
            out = out.add(&w.left_mul(&ket.comps[i].star()).right_mul(&ket.comps[j]));
        }
    }
    out
}

/// `ω₋∧ω₊ - da + q^{n+1}[n] a∧a`, the 2-form inside the curvature.
fn curvature_core(n: i64, conn: &Connection) -> Form {
    let a = conn.a_form();
    let k = z_factor(n).neg();
    Form::basis(WMP).sub(&a.d()).add(&a.wedge_unchecked(&a).scale(&k))
}

/// `F = -|Ψ⟩ q^{n+1}[n] (ω₋∧ω₊ - da + q^{n+1}[n] a∧a) ⟨Ψ|`
pub fn curvature(n: i64, conn: &Connection) -> Result<FormMatrix> {
    let ket = make_ket_with_cap(n, winding_cap())?;
    Ok(sandwich(&ket, &curvature_core(n, conn).scale(&z_factor(n))))
}

/// `⟨Ψ|F|Ψ⟩` in closed form.
pub fn curvature_scalar(n: i64, conn: &Connection) -> Form {
    curvature_core(n, conn).scale(&z_factor(n))
}

/// `-φ ∧ (dω(z^{-n}) + ω(z^{-n}) ∧ ω(z^{-n}))`
pub fn d2_from_connection_form(phi: &AlgElem, conn: &Connection) -> Result<Form> {
    let n = single_winding(phi)?;
    let w = connection_one_form(-n, conn);
    Ok(w.d().add(&w.wedge_unchecked(&w)).left_mul(phi).neg())
}

/// Both sides of `(dp∧dp) p = q^{1-n}[n] p ω₋∧ω₊`, plus `p (dp∧dp)`.
pub struct ProjectorCurvature {
    pub left: FormMatrix,
    pub right: FormMatrix,
    pub expected: FormMatrix,
}

pub fn projector_curvature(n: i64) -> Result<ProjectorCurvature> {
    let ket = make_ket_with_cap(n, winding_cap())?;
    let p = ket.projector();
    let dp = d_matrix(&p);
    let dpdp = form_matmul(&dp, &dp);
    let k = ScalarQ::q_pow(1 - n).mul(&qnum(n));
    let expected = p.iter().map(|row| row.iter().map(|x| Form::single(WMP, x.scale(&k))).collect()).collect();
    Ok(ProjectorCurvature { left: form_mul_fn(&dpdp, &p), right: fn_mul_form(&p, &dpdp), expected })
}

/// Horizontal projector built with `ω_z` on the right of 2-forms.
pub fn h_omega(w: &Form, conn: &Connection) -> Form {
    h_generic(w, conn, false)
}

/// Horizontal projector built with `ω_z` on the left of 2-forms.
pub fn h_omega_prime(w: &Form, conn: &Connection) -> Form {
    h_generic(w, conn, true)
}

fn h_generic(w: &Form, conn: &Connection, prime: bool) -> Form {
    let a = conn.a_form();
    let q4 = ScalarQ::q_pow(4);
    let mut out = Form::zero();
    for i in [ONE, WM, WP, WMP] {
        out.set(i, w.coeff(i).clone());
    }
    let images = [
        (WZ, a.neg()),
        (
            WPZ,
            if prime { a.wedge_unchecked(&Form::basis(WP)).scale(&q4) } else { Form::basis(WP).wedge_unchecked(&a).neg() },
        ),
        (
            WZM,
            if prime { a.wedge_unchecked(&Form::basis(WM)).neg() } else { Form::basis(WM).wedge_unchecked(&a).scale(&q4) },
        ),
    ];
    for (i, img) in images {
        let x = w.coeff(i);
        if !x.is_zero() {
            out = out.add(&img.left_mul(x));
        }
    }
    out
}

/// `(1-Π)` applied factorwise to the six quadratic relations of the 3D calculus.
pub fn projected_relations(conn: &Connection) -> Vec<Form> {
    let h = |i: usize| horizontal_part(&Form::basis(i), conn).expect("degree one");
    let wedge = |i: usize, j: usize| h(i).wedge_unchecked(&h(j));
    vec![
        wedge(WP, WP),
        wedge(WM, WM),
        wedge(WM, WP).add(&wedge(WP, WM).scale(&ScalarQ::q_pow(-2))),
        wedge(WZ, WM).add(&wedge(WM, WZ).scale(&ScalarQ::q_pow(4))),
        wedge(WZ, WP).add(&wedge(WP, WZ).scale(&ScalarQ::q_pow(-4))),
        wedge(WZ, WZ),
    ]
}

/// Check that the relations above hold on the plain basis.
pub fn relations_hold_unprojected() -> bool {
    let pairs: [(usize, usize, usize, usize, i64); 3] =
        [(WM, WP, WP, WM, -2), (WZ, WM, WM, WZ, 4), (WZ, WP, WP, WZ, -4)];
    pairs.iter().all(|&(i, j, k, l, e)| {
        let x = Form::basis(i).wedge_unchecked(&Form::basis(j));
        let y = Form::basis(k).wedge_unchecked(&Form::basis(l)).scale(&ScalarQ::q_pow(e));
        x.add(&y).is_zero()
    }) && basis_wedge(WZ, WZ).is_none()
}

/// `-q^{-2n}(ν X₋X₊ + β X₊X₋) ⊳ φ` for `φ ∈ L_n` (monopole connection).
pub fn gauged_laplacian(phi: &AlgElem, p: &HodgeParams) -> Result<AlgElem> {
    let n = single_winding(phi)?;
    let mp = x_minus(&x_plus(phi)).scale(&p.nu);
    let pm = x_plus(&x_minus(phi)).scale(&p.beta);
    Ok(mp.add(&pm).scale(&ScalarQ::q_pow(-2 * n)).neg())
}

type Row = Vec<SphereForm>;

fn row_times_p(row: &Row, p: &[Vec<AlgElem>]) -> Row {
    (0..p.len())
        .map(|nu| {
            let mut acc = SphereForm::zero();
            for (mu, eta) in row.iter().enumerate() {
                acc = acc.add(&eta.right_mul(&p[mu][nu]));
            }
            acc
        })
        .collect()
}

fn row_wedge_a(row: &Row, a: &[Vec<SphereForm>]) -> Row {
    (0..a.len())
        .map(|nu| {
            let mut acc = SphereForm::zero();
            for (mu, eta) in row.iter().enumerate() {
                acc = acc.add(&eta.wedge_unchecked(&a[mu][nu]));
            }
            acc
        })
        .collect()
}

/// `★∇★∇` on the section of `φ`, read back through `|Ψ⟩`.
pub fn gauged_laplacian_compositional(phi: &AlgElem, conn: &Connection, p: &HodgeParams) -> Result<CElem> {
    let n = single_winding(phi)?;
    let ket = make_ket_with_cap(n, winding_cap())?;
    let proj = ket.projector();
    let a: Vec<Vec<SphereForm>> = gauge_potential(n, conn)?
        .iter()
        .map(|row| row.iter().map(SphereForm::from_form).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let sigma: Row = crate::bundle::section_of(phi, &ket)?.into_iter().map(SphereForm::function).collect();
    // ∇σ = (dσ) p + σ A
    let dsig: Row = sigma.iter().map(SphereForm::d).collect();
    let nabla = add_rows(&row_times_p(&dsig, &proj), &row_wedge_a(&sigma, &a));
    let star1: Row = nabla.iter().map(|e| e.hodge(p)).collect();
    // ∇η = (dη) p - η ∧ A on 1-forms
    let d1: Row = star1.iter().map(SphereForm::d).collect();
    let nabla2 = sub_rows(&row_times_p(&d1, &proj), &row_wedge_a(&star1, &a));
    let star2: Row = nabla2.iter().map(|e| e.hodge(p)).collect();
    let mut out = CElem::zero();
    for (s, k) in star2.iter().zip(&ket.comps) {
        out = out.add(&s.f0.mul_real(k));
    }
    Ok(out)
}

fn add_rows(x: &Row, y: &Row) -> Row {
    x.iter().zip(y).map(|(a, b)| a.add(b)).collect()
}

fn sub_rows(x: &Row, y: &Row) -> Row {
    x.iter().zip(y).map(|(a, b)| a.sub(b)).collect()
}

/// The four displayed terms of the gauged Laplacian for a general connection.
pub fn gauged_laplacian_terms(phi: &AlgElem, conn: &Connection, p: &HodgeParams) -> Result<[CElem; 4]> {
    let n = single_winding(phi)?;
    let qn = qnum(n);
    let k = ScalarQ::q_pow(1 - n).mul(&qn);
    let t1 = x_minus(&x_plus(phi)).scale(&p.nu).add(&x_plus(&x_minus(phi)).scale(&p.beta));
    let t1 = CElem::real(t1.scale(&ScalarQ::q_pow(-2 * n)).neg());
    let t2 = x_plus(phi).mul(&conn.v).scale(&p.nu).add(&x_minus(phi).mul(&conn.u).scale(&p.beta));
    let t2 = CElem::real(t2.scale(&k).scale(&ScalarQ::int(-2)));
    let a = conn.a_sphere();
    let sds = a.hodge(p).d().hodge(p).f0;
    let t3 = sds.left_real(phi).scale(&k);
    let saa = a.hodge(p).wedge_unchecked(&a).hodge(p).f0;
    let t4 = saa.left_real(phi).scale(&ScalarQ::q_pow(2).mul(&qn)).neg();
    Ok([t1, t2, t3, t4])
}

/// Closed form for a general connection: the displayed terms with the last
/// one carrying `[n]²` instead of `[n]`, which is what `★∇★∇` produces.
pub fn gauged_laplacian_general(phi: &AlgElem, conn: &Connection, p: &HodgeParams) -> Result<CElem> {
    let n = single_winding(phi)?;
    let [t1, t2, t3, t4] = gauged_laplacian_terms(phi, conn, p)?;
    Ok(t1.add(&t2).add(&t3).add(&t4.scale(&qnum(n))))
}

/// One index of the master relation `q^{2n} □_{D₀} φ = (□_SU + γ X_z X_z) φ`.
#[derive(Clone, Debug, Serialize)]
pub struct MasterRow {
    pub n: i64,
    pub j2: i64,
    pub l: i64,
    pub relation: bool,
    pub eigenvalue: bool,
}

pub fn verify_master_relation(n: i64, j2max: i64, p: &HodgeParams) -> Result<Vec<MasterRow>> {
    let mut rows = Vec::new();
    let mut j2 = n.abs();
    while j2 <= j2max {
        let lam = spectrum_gauged(n, j2, p)?;
        for (l, phi) in eigenbasis(n, j2, winding_cap())?.iter().enumerate() {
            let lhs = gauged_laplacian(phi, p)?;
            let rhs = laplacian3(phi, p).add(&x_z(&x_z(phi)).scale(&p.gamma));
            rows.push(MasterRow {
                n,
                j2,
                l: l as i64,
                relation: lhs.scale(&ScalarQ::q_pow(2 * n)) == rhs,
                eigenvalue: lhs == phi.scale(&lam),
            });
        }
        j2 += 2;
    }
    Ok(rows)
}
