//! The standard Podleś sphere and its 2D calculus.
//!
//! Sphere forms are stored on the basis `1, ω₋, ω₊, ω₋∧ω₊` with complex
//! coefficients `re + i·im`, since the Hodge star on the sphere is `±i`.

use std::fmt;

use crate::algebra::AlgElem;
use crate::error::{Error, Result};
use crate::forms::{twist, Form, ONE, WM, WMP, WP};
use crate::hodge::HodgeParams;
use crate::scalar::{ScalarQ, Surd};
use crate::uq::{x_minus, x_plus};

/// `x + i y` with `x, y` in the coordinate algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CElem {
    pub re: AlgElem,
    pub im: AlgElem,
}

impl CElem {
    pub fn zero() -> CElem {
        CElem::default()
    }

    pub fn real(x: AlgElem) -> CElem {
        CElem { re: x, im: AlgElem::zero() }
    }

    pub fn imag(y: AlgElem) -> CElem {
        CElem { re: AlgElem::zero(), im: y }
    }

    pub fn new(re: AlgElem, im: AlgElem) -> CElem {
        CElem { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, o: &CElem) -> CElem {
        CElem { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &CElem) -> CElem {
        CElem { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> CElem {
        CElem { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn scale(&self, k: &ScalarQ) -> CElem {
        CElem { re: self.re.scale(k), im: self.im.scale(k) }
    }

    /// Multiply by `i`.
    pub fn times_i(&self) -> CElem {
        CElem { re: self.im.neg(), im: self.re.clone() }
    }

    pub fn mul(&self, o: &CElem) -> CElem {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        CElem { re, im }
    }

    pub fn mul_real(&self, x: &AlgElem) -> CElem {
        CElem { re: self.re.mul(x), im: self.im.mul(x) }
    }

    pub fn left_real(&self, x: &AlgElem) -> CElem {
        CElem { re: x.mul(&self.re), im: x.mul(&self.im) }
    }

    pub fn twist(&self, w: i64) -> CElem {
        CElem { re: twist(&self.re, w), im: twist(&self.im, w) }
    }

    pub fn map<F: FnMut(&AlgElem) -> AlgElem>(&self, mut f: F) -> CElem {
        CElem { re: f(&self.re), im: f(&self.im) }
    }

    /// Conjugate-linear `*`.
    pub fn star(&self) -> CElem {
        CElem { re: self.re.star(), im: self.im.star().neg() }
    }

    pub fn windings(&self) -> Vec<i64> {
        let mut w = self.re.windings();
        w.extend(self.im.windings());
        w.sort_unstable();
        w.dedup();
        w
    }

    fn require(&self, n: i64) -> Result<()> {
        self.re.require_winding(n)?;
        self.im.require_winding(n)
    }
}

impl fmt::Display for CElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "i*({})", self.im),
            _ => write!(f, "{} + i*({})", self.re, self.im),
        }
    }
}

/// `B₋ = -a c*`, `B₀ = q²/(1+q²) - q² c c*`, `B₊ = q c a*`.
pub fn sphere_generators() -> (AlgElem, AlgElem, AlgElem) {
    let bm = AlgElem::a().mul(&AlgElem::c_star()).neg();
    let q2 = ScalarQ::q_pow(2);
    let frac = q2.div(&ScalarQ::one().add(&q2)).expect("nonzero");
    let b0 = AlgElem::from_scalar(frac).sub(&AlgElem::c().mul(&AlgElem::c_star()).scale(&q2));
    let bp = AlgElem::c().mul(&AlgElem::a_star()).scale(&ScalarQ::q());
    (bm, b0, bp)
}

/// Element of `Ω(S²_q)`: `f0 + f₋ ω₋ + f₊ ω₊ + f₂ ω₋∧ω₊`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SphereForm {
    pub f0: CElem,
    pub fm: CElem,
    pub fp: CElem,
    pub f2: CElem,
}

impl SphereForm {
    /// Checked constructor: `f0, f₂ ∈ L₀`, `f₋ ∈ L₋₂`, `f₊ ∈ L₂`.
    pub fn new(f0: CElem, fm: CElem, fp: CElem, f2: CElem) -> Result<SphereForm> {
        f0.require(0)?;
        fm.require(-2)?;
        fp.require(2)?;
        f2.require(0)?;
        Ok(SphereForm { f0, fm, fp, f2 })
    }

    /// No winding checks; used for intermediate products like `φ′ η φ`.
    pub fn unchecked(f0: CElem, fm: CElem, fp: CElem, f2: CElem) -> SphereForm {
        SphereForm { f0, fm, fp, f2 }
    }

    pub fn zero() -> SphereForm {
        SphereForm::default()
    }

    pub fn function(f: AlgElem) -> SphereForm {
        SphereForm { f0: CElem::real(f), ..SphereForm::default() }
    }

    pub fn one_form(fm: AlgElem, fp: AlgElem) -> SphereForm {
        SphereForm { fm: CElem::real(fm), fp: CElem::real(fp), ..SphereForm::default() }
    }

    pub fn two_form(f2: AlgElem) -> SphereForm {
        SphereForm { f2: CElem::real(f2), ..SphereForm::default() }
    }

    pub fn is_zero(&self) -> bool {
        self.f0.is_zero() && self.fm.is_zero() && self.fp.is_zero() && self.f2.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.f0.is_real() && self.fm.is_real() && self.fp.is_real() && self.f2.is_real()
    }

    /// Highest degree with a nonzero component.
    pub fn top_degree(&self) -> Option<usize> {
        if !self.f2.is_zero() {
            Some(2)
        } else if !self.fm.is_zero() || !self.fp.is_zero() {
            Some(1)
        } else if !self.f0.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    fn lowest_degree(&self) -> Option<usize> {
        if !self.f0.is_zero() {
            Some(0)
        } else if !self.fm.is_zero() || !self.fp.is_zero() {
            Some(1)
        } else if !self.f2.is_zero() {
            Some(2)
        } else {
            None
        }
    }

    fn zip(&self, o: &SphereForm, f: impl Fn(&CElem, &CElem) -> CElem) -> SphereForm {
        SphereForm { f0: f(&self.f0, &o.f0), fm: f(&self.fm, &o.fm), fp: f(&self.fp, &o.fp), f2: f(&self.f2, &o.f2) }
    }

    pub fn map(&self, mut f: impl FnMut(&CElem) -> CElem) -> SphereForm {
        SphereForm { f0: f(&self.f0), fm: f(&self.fm), fp: f(&self.fp), f2: f(&self.f2) }
    }

    pub fn add(&self, o: &SphereForm) -> SphereForm {
        self.zip(o, CElem::add)
    }

    pub fn sub(&self, o: &SphereForm) -> SphereForm {
        self.zip(o, CElem::sub)
    }

    pub fn neg(&self) -> SphereForm {
        self.map(CElem::neg)
    }

    pub fn scale(&self, k: &ScalarQ) -> SphereForm {
        self.map(|c| c.scale(k))
    }

    pub fn times_i(&self) -> SphereForm {
        self.map(CElem::times_i)
    }

    /// `x · η`
    pub fn left_mul(&self, x: &AlgElem) -> SphereForm {
        self.map(|c| c.left_real(x))
    }

    /// `η · x`, moving `x` left past the basis forms.
    pub fn right_mul(&self, x: &AlgElem) -> SphereForm {
        SphereForm {
            f0: self.f0.mul_real(x),
            fm: self.fm.mul_real(&twist(x, 1)),
            fp: self.fp.mul_real(&twist(x, 1)),
            f2: self.f2.mul_real(&twist(x, 2)),
        }
    }

    /// Wedge product; fails when the total degree exceeds 2.
    pub fn wedge(&self, o: &SphereForm) -> Result<SphereForm> {
        if let (Some(a), Some(b)) = (self.lowest_degree(), o.lowest_degree()) {
            if a + b > 2 {
                return Err(Error::DegreeOverflow(a + b));
            }
        }
        Ok(self.wedge_unchecked(o))
    }

    /// Wedge with `ω₊∧ω₋ = -q² ω₋∧ω₊`; overflowing parts drop out.
    pub fn wedge_unchecked(&self, o: &SphereForm) -> SphereForm {
        let (a, b) = (self, o);
        let f0 = a.f0.mul(&b.f0);
        let fm = a.f0.mul(&b.fm).add(&a.fm.mul(&b.f0.twist(1)));
        let fp = a.f0.mul(&b.fp).add(&a.fp.mul(&b.f0.twist(1)));
        let q2 = ScalarQ::q_pow(2);
        let f2 = a
            .f0
            .mul(&b.f2)
            .add(&a.f2.mul(&b.f0.twist(2)))
            .add(&a.fm.mul(&b.fp.twist(1)))
            .sub(&a.fp.mul(&b.fm.twist(1)).scale(&q2));
        SphereForm { f0, fm, fp, f2 }
    }

    /// Exterior derivative, computed from `X_±` alone.
    pub fn d(&self) -> SphereForm {
        let dm = self.f0.map(x_minus);
        let dp = self.f0.map(x_plus);
        let q2 = ScalarQ::q_pow(2);
        let f2 = self.fp.map(x_minus).sub(&self.fm.map(x_plus).scale(&q2));
        SphereForm { f0: CElem::zero(), fm: dm, fp: dp, f2 }
    }

    /// Left-linear Hodge star.
    pub fn hodge(&self, p: &HodgeParams) -> SphereForm {
        let sg = ScalarQ::int(p.sign_dprime());
        let inv = p.alpha_dprime.inv().expect("nonzero");
        SphereForm {
            f0: self.f2.times_i().scale(&inv).neg(),
            fm: self.fm.times_i().scale(&sg),
            fp: self.fp.times_i().scale(&sg).neg(),
            f2: self.f0.times_i().scale(&p.alpha_dprime),
        }
    }

    /// `∫ f ω₋∧ω₊ = -i h(f) / α″`, returned as `(re, im)`.
    pub fn integral(&self, p: &HodgeParams) -> (Surd, Surd) {
        let inv = p.alpha_dprime.inv().expect("nonzero");
        let hre = self.f2.re.haar().scale(&inv);
        let him = self.f2.im.haar().scale(&inv);
        (him, hre.neg())
    }

    /// Embed the real part into the 3D exterior algebra.
    pub fn real_to_form(&self) -> Form {
        let mut f = Form::zero();
        f.set(ONE, self.f0.re.clone());
        f.set(WM, self.fm.re.clone());
        f.set(WP, self.fp.re.clone());
        f.set(WMP, self.f2.re.clone());
        f
    }

    /// Both parts as 3D forms.
    pub fn to_forms(&self) -> (Form, Form) {
        let im = SphereForm { f0: CElem::real(self.f0.im.clone()), fm: CElem::real(self.fm.im.clone()), fp: CElem::real(self.fp.im.clone()), f2: CElem::real(self.f2.im.clone()) };
        (self.real_to_form(), im.real_to_form())
    }

    /// A 3D form without `ω_z`, read as a sphere form (no winding check).
    pub fn from_form(w: &Form) -> Result<SphereForm> {
        if !w.is_horizontal() {
            return Err(Error::NotHorizontal);
        }
        Ok(SphereForm {
            f0: CElem::real(w.coeff(ONE).clone()),
            fm: CElem::real(w.coeff(WM).clone()),
            fp: CElem::real(w.coeff(WP).clone()),
            f2: CElem::real(w.coeff(WMP).clone()),
        })
    }
}

impl fmt::Display for SphereForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [(&self.f0, ""), (&self.fm, " w-"), (&self.fp, " w+"), (&self.f2, " w-^w+")];
        let mut first = true;
        for (c, name) in parts {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "[{}]{}", c, name)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `∂̄ f = (X₋ f) ω₋`
pub fn delbar(f: &AlgElem) -> Result<SphereForm> {
    f.require_coinvariant()?;
    Ok(SphereForm::one_form(x_minus(f), AlgElem::zero()))
}

/// `∂ f = (X₊ f) ω₊`
pub fn del(f: &AlgElem) -> Result<SphereForm> {
    f.require_coinvariant()?;
    Ok(SphereForm::one_form(AlgElem::zero(), x_plus(f)))
}

pub fn sphere_d(f: &AlgElem) -> Result<SphereForm> {
    f.require_coinvariant()?;
    Ok(SphereForm::function(f.clone()).d())
}

/// `-(ν X₋X₊ + β X₊X₋) ⊳ f`
pub fn sphere_laplacian(f: &AlgElem, p: &HodgeParams) -> Result<AlgElem> {
    f.require_coinvariant()?;
    let mp = x_minus(&x_plus(f)).scale(&p.nu);
    let pm = x_plus(&x_minus(f)).scale(&p.beta);
    Ok(mp.add(&pm).neg())
}

/// `★ d ★ d f` inside the sphere calculus.
pub fn sphere_laplacian_compositional(f: &AlgElem, p: &HodgeParams) -> Result<CElem> {
    let df = sphere_d(f)?;
    Ok(df.hodge(p).d().hodge(p).f0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_coinvariant() {
        let (bm, b0, bp) = sphere_generators();
        for b in [&bm, &b0, &bp] {
            assert!(b.is_in(0));
        }
        assert_eq!(b0.star(), b0);
        assert_eq!(bp.star(), bm.scale(&ScalarQ::q().neg()));
    }

    #[test]
    fn del_table() {
        let (bm, _, bp) = sphere_generators();
        let a2 = AlgElem::a().pow(2).scale(&ScalarQ::q_pow(-1));
        assert_eq!(delbar(&bm).unwrap(), SphereForm::one_form(a2, AlgElem::zero()));
        let as2 = AlgElem::a_star().pow(2).scale(&ScalarQ::q_pow(2));
        assert_eq!(del(&bp).unwrap(), SphereForm::one_form(AlgElem::zero(), as2));
        assert!(sphere_d(&AlgElem::one()).unwrap().is_zero());
        assert!(sphere_d(&AlgElem::a()).is_err());
    }

    #[test]
    fn hodge_squares() {
        let p = HodgeParams::default();
        let x = AlgElem::a().pow(2);
        let w = SphereForm::one_form(x.clone(), AlgElem::zero());
        assert_eq!(w.hodge(&p), SphereForm::unchecked(CElem::zero(), CElem::imag(x.neg()), CElem::zero(), CElem::zero()));
        assert_eq!(w.hodge(&p).hodge(&p), w.neg());
        let one = SphereForm::function(AlgElem::one());
        assert_eq!(one.hodge(&p).hodge(&p), one);
    }

    #[test]
    fn volume_integral() {
        let p = HodgeParams::default();
        let (re, im) = SphereForm::function(AlgElem::one()).hodge(&p).integral(&p);
        assert!(re.is_one() && im.is_zero());
    }
}
