//! Hodge structure, integral and Laplacian on the 3D calculus.

use serde::Serialize;

use crate::algebra::AlgElem;
use crate::error::{Error, Result};
use crate::forms::{degree_of, Form, ONE, TOP, WM, WMP, WP, WPZ, WZ, WZM};
use crate::scalar::{qnum, qnum_half, Rat, ScalarQ, Surd};
use crate::uq::{x_minus, x_plus, x_z};

/// The volume coefficients `α′, α″` and the derived `β, ν, γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeParams {
    pub alpha_prime: ScalarQ,
    pub alpha_dprime: ScalarQ,
    pub beta: ScalarQ,
    pub nu: ScalarQ,
    pub gamma: ScalarQ,
}

impl HodgeParams {
    /// Any nonzero rational volume coefficients; `ν = 1/|α″|`.
    pub fn new(alpha_prime: Rat, alpha_dprime: Rat) -> Result<HodgeParams> {
        if alpha_prime.is_zero() {
            return Err(Error::BadParameter("alpha' must be nonzero"));
        }
        if alpha_dprime.is_zero() {
            return Err(Error::BadParameter("alpha'' must be nonzero"));
        }
        let ap = ScalarQ::constant(alpha_prime);
        let app = ScalarQ::constant(alpha_dprime.clone());
        let nu = ScalarQ::constant(alpha_dprime.abs().recip());
        let gamma = app.mul(&app).div(&ap.mul(&ap))?;
        let beta = ScalarQ::q_pow(2).mul(&nu);
        Ok(HodgeParams { alpha_prime: ap, alpha_dprime: app, beta, nu, gamma })
    }

    /// `α′ = -4α`, `α″ = -2α` for `α > 0`.
    pub fn classical(alpha: Rat) -> Result<HodgeParams> {
        if alpha.signum() <= 0 {
            return Err(Error::BadParameter("alpha must be positive"));
        }
        HodgeParams::new(&Rat::int(-4) * &alpha, &Rat::int(-2) * &alpha)
    }

    /// Both volume coefficients negative.
    pub fn is_standard(&self) -> bool {
        let neg = |x: &ScalarQ| x.as_constant().map(|r| r.signum() < 0).unwrap_or(false);
        neg(&self.alpha_prime) && neg(&self.alpha_dprime)
    }

    /// Sign of `α″`, as `±1`.
    pub fn sign_dprime(&self) -> i64 {
        self.alpha_dprime.as_constant().map(|r| r.signum() as i64).unwrap_or(1)
    }

    fn inv(x: &ScalarQ) -> ScalarQ {
        x.inv().expect("parameters are nonzero")
    }
}

impl Default for HodgeParams {
    fn default() -> HodgeParams {
        HodgeParams::classical(Rat::one()).expect("alpha = 1")
    }
}

/// `★` of a basis form, as `(coefficient, target)`.
pub fn hodge3_basis(i: usize, p: &HodgeParams) -> (ScalarQ, usize) {
    let ap = &p.alpha_prime;
    let api = HodgeParams::inv(ap);
    match i {
        ONE => (ap.clone(), TOP),
        WM => (ap.mul(&p.beta).mul(&ScalarQ::q_pow(-6)).neg(), WZM),
        WP => (ap.mul(&p.nu).neg(), WPZ),
        WZ => (ap.mul(&p.gamma).neg(), WMP),
        WMP => (api.mul(&HodgeParams::inv(&p.gamma)).neg(), WZ),
        WPZ => (api.mul(&HodgeParams::inv(&p.nu)).neg(), WP),
        WZM => (api.mul(&HodgeParams::inv(&p.beta)).mul(&ScalarQ::q_pow(6)).neg(), WM),
        _ => (api, ONE),
    }
}

/// Left-linear Hodge star.
pub fn hodge3(w: &Form, p: &HodgeParams) -> Form {
    let mut out = Form::zero();
    for i in 0..8 {
        let x = w.coeff(i);
        if x.is_zero() {
            continue;
        }
        let (k, j) = hodge3_basis(i, p);
        out.set(j, out.coeff(j).add(&x.scale(&k)));
    }
    out
}

/// `∫ x θ = h(x)` with `θ = α′ ω₋∧ω₊∧ω_z`.
pub fn integral3(w: &Form, p: &HodgeParams) -> Surd {
    let x = w.coeff(TOP);
    x.haar().scale(&HodgeParams::inv(&p.alpha_prime))
}

/// `(e_i, e_i)` for the orthogonal basis.
pub fn inner3_basis(i: usize, p: &HodgeParams) -> ScalarQ {
    let a2 = HodgeParams::inv(&p.alpha_prime.mul(&p.alpha_prime));
    match i {
        ONE => ScalarQ::one(),
        WM => p.beta.clone(),
        WP => p.nu.clone(),
        WZ => p.gamma.clone(),
        WMP => a2.mul(&HodgeParams::inv(&p.gamma)),
        WPZ => a2.mul(&HodgeParams::inv(&p.nu)),
        WZM => a2.mul(&HodgeParams::inv(&p.beta)).mul(&ScalarQ::q_pow(12)),
        _ => a2,
    }
}

/// `⟨x′ω′, xω⟩ = h(x* x′)(ω′, ω)`.
pub fn inner3(a: &Form, b: &Form, p: &HodgeParams) -> Result<Surd> {
    let (da, db) = (a.degree()?, b.degree()?);
    if let (Some(x), Some(y)) = (da, db) {
        if x != y {
            return Err(Error::DegreeMismatch(x, y));
        }
    }
    let mut out = Surd::zero();
    for i in 0..8 {
        let (x1, x) = (a.coeff(i), b.coeff(i));
        if x1.is_zero() || x.is_zero() {
            continue;
        }
        let h = x.star().mul(x1).haar();
        out.add_assign(&h.scale(&inner3_basis(i, p)));
    }
    Ok(out)
}

/// `-(ν X₋X₊ + β X₊X₋ + γ X_z X_z) ⊳ x`
pub fn laplacian3(x: &AlgElem, p: &HodgeParams) -> AlgElem {
    let mp = x_minus(&x_plus(x)).scale(&p.nu);
    let pm = x_plus(&x_minus(x)).scale(&p.beta);
    let zz = x_z(&x_z(x)).scale(&p.gamma);
    mp.add(&pm).add(&zz).neg()
}

/// `★ d ★ d x`
pub fn laplacian3_compositional(x: &AlgElem, p: &HodgeParams) -> AlgElem {
    let w = hodge3(&hodge3(&Form::function(x.clone()).d(), p).d(), p);
    w.coeff(ONE).clone()
}

/// `λ_{n,J}` with `J = j2/2`.
pub fn spectrum3(n: i64, j2: i64, p: &HodgeParams) -> Result<ScalarQ> {
    crate::uq::check_nj(n, j2)?;
    let jj = qnum_half(j2 - n).mul(&qnum_half(j2 + 2 + n));
    let qn = qnum(n);
    let t1 = p.nu.mul(&ScalarQ::q()).mul(&jj);
    let t2 = p.beta.mul(&ScalarQ::q_pow(-1)).mul(&jj.add(&qn));
    let t3 = p.gamma.mul(&ScalarQ::q_pow(n + 2)).mul(&qn).mul(&qn);
    Ok(ScalarQ::q_pow(n).mul(&t1.add(&t2).add(&t3)).neg())
}

/// `-2qν[J][J+1]` for integer `J`.
pub fn spectrum_sphere(j: i64, p: &HodgeParams) -> Result<ScalarQ> {
    if j < 0 {
        return Err(Error::InvalidIndex(format!("J = {}", j)));
    }
    Ok(ScalarQ::int(-2).mul(&ScalarQ::q()).mul(&p.nu).mul(&qnum(j)).mul(&qnum(j + 1)))
}

/// `-q^{1-n} ν (2[J - n/2][J + 1 + n/2] + [n])`, monopole connection.
pub fn spectrum_gauged(n: i64, j2: i64, p: &HodgeParams) -> Result<ScalarQ> {
    crate::uq::check_nj(n, j2)?;
    let jj = qnum_half(j2 - n).mul(&qnum_half(j2 + 2 + n));
    let inner = ScalarQ::int(2).mul(&jj).add(&qnum(n));
    Ok(ScalarQ::q_pow(1 - n).mul(&p.nu).mul(&inner).neg())
}

/// One row of a spectrum table.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumRow {
    pub n: i64,
    pub j: String,
    pub multiplicity: i64,
    pub lambda: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_at_q: Option<String>,
}

/// `J = j2/2` rendered as `k` or `k/2`.
pub fn render_half(j2: i64) -> String {
    if j2 % 2 == 0 {
        format!("{}", j2 / 2)
    } else {
        format!("{}/2", j2)
    }
}

/// Check that a form has degree `k` (zero passes).
pub fn require_degree(w: &Form, k: usize) -> Result<()> {
    for i in 0..8 {
        if !w.coeff(i).is_zero() && degree_of(i) != k {
            return Err(Error::WrongDegree { expected: k, found: degree_of(i) });
        }
    }
    Ok(())
}
