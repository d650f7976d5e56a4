//! Left-covariant 3D exterior algebra over the coordinate algebra.
//!
//! Coefficients sit on the left of the basis
//! `1, ω₋, ω₊, ω_z, ω₋∧ω₊, ω₊∧ω_z, ω_z∧ω₋, ω₋∧ω₊∧ω_z`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{AlgElem, TermJson};
use crate::error::{Error, Result};
use crate::scalar::ScalarQ;
use crate::uq::{x_minus, x_plus, x_z};

pub const ONE: usize = 0;
pub const WM: usize = 1;
pub const WP: usize = 2;
pub const WZ: usize = 3;
pub const WMP: usize = 4;
pub const WPZ: usize = 5;
pub const WZM: usize = 6;
pub const TOP: usize = 7;

pub const BASIS_NAMES: [&str; 8] = ["1", "w-", "w+", "wz", "w-^w+", "w+^wz", "wz^w-", "w-^w+^wz"];

pub fn degree_of(i: usize) -> usize {
    match i {
        ONE => 0,
        WM | WP | WZ => 1,
        WMP | WPZ | WZM => 2,
        _ => 3,
    }
}

/// Bimodule weight: `e φ = q^{w n} φ e` for `φ ∈ L_n`.
pub fn bimodule_weight(i: usize) -> i64 {
    [0, 1, 1, 2, 2, 3, 3, 4][i]
}

/// Right coaction charge of a basis form.
pub fn basis_charge(i: usize) -> i64 {
    [0, -2, 2, 0, 0, 2, -2, 0][i]
}

// letters: 0 = ω₋, 1 = ω₊, 2 = ω_z
fn letters(i: usize) -> &'static [u8] {
    const L: [&[u8]; 8] = [&[], &[0], &[1], &[2], &[0, 1], &[1, 2], &[2, 0], &[0, 1, 2]];
    L[i]
}

/// `ω_x ∧ ω_y = f ω_y ∧ ω_x` for `x > y`.
fn swap_factor(x: u8, y: u8) -> ScalarQ {
    match (x, y) {
        (1, 0) => ScalarQ::q_pow(2).neg(),
        (2, 0) => ScalarQ::q_pow(4).neg(),
        (2, 1) => ScalarQ::q_pow(-4).neg(),
        _ => unreachable!(),
    }
}

/// Reduce a word in basis 1-forms to `coeff * e_idx`.
pub fn reduce_word(word: &[u8]) -> Option<(ScalarQ, usize)> {
    let mut w = word.to_vec();
    let mut coeff = ScalarQ::one();
    for i in 0..w.len() {
        for j in 0..w.len() - 1 - i {
            if w[j] == w[j + 1] {
                return None;
            }
            if w[j] > w[j + 1] {
                coeff = coeff.mul(&swap_factor(w[j], w[j + 1]));
                w.swap(j, j + 1);
            }
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    let idx = match w.as_slice() {
        [] => ONE,
        [0] => WM,
        [1] => WP,
        [2] => WZ,
        [0, 1] => WMP,
        [1, 2] => WPZ,
        [0, 2] => {
            // ω₋∧ω_z = -q^{-4} ω_z∧ω₋
            coeff = coeff.mul(&ScalarQ::q_pow(-4).neg());
            WZM
        }
        [0, 1, 2] => TOP,
        _ => return None,
    };
    Some((coeff, idx))
}

/// `e_i ∧ e_j` in the canonical basis.
pub fn basis_wedge(i: usize, j: usize) -> Option<(ScalarQ, usize)> {
    let mut w = letters(i).to_vec();
    w.extend_from_slice(letters(j));
    if w.len() > 3 {
        return None;
    }
    reduce_word(&w)
}

/// `Σ_n q^{w n} x_n`: the factor picked up moving `x` left past a basis form of weight `w`.
pub fn twist(x: &AlgElem, w: i64) -> AlgElem {
    if w == 0 {
        return x.clone();
    }
    let mut out = AlgElem::zero();
    for (n, xn) in x.winding_components() {
        out.add_assign(&xn.scale(&ScalarQ::q_pow(w * n)));
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Form {
    c: [AlgElem; 8],
}

impl Form {
    pub fn zero() -> Form {
        Form::default()
    }

    pub fn basis(i: usize) -> Form {
        Form::single(i, AlgElem::one())
    }

    pub fn single(i: usize, x: AlgElem) -> Form {
        let mut f = Form::zero();
        f.c[i] = x;
        f
    }

    pub fn function(x: AlgElem) -> Form {
        Form::single(ONE, x)
    }

    /// `m ω₋ + p ω₊ + z ω_z`
    pub fn one_form(m: AlgElem, p: AlgElem, z: AlgElem) -> Form {
        let mut f = Form::zero();
        f.c[WM] = m;
        f.c[WP] = p;
        f.c[WZ] = z;
        f
    }

    /// `mp ω₋∧ω₊ + pz ω₊∧ω_z + zm ω_z∧ω₋`
    pub fn two_form(mp: AlgElem, pz: AlgElem, zm: AlgElem) -> Form {
        let mut f = Form::zero();
        f.c[WMP] = mp;
        f.c[WPZ] = pz;
        f.c[WZM] = zm;
        f
    }

    pub fn top(x: AlgElem) -> Form {
        Form::single(TOP, x)
    }

    pub fn coeff(&self, i: usize) -> &AlgElem {
        &self.c[i]
    }

    pub fn set(&mut self, i: usize, x: AlgElem) {
        self.c[i] = x;
    }

    pub fn coeffs(&self) -> &[AlgElem; 8] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Degrees carrying a nonzero coefficient.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..8).filter(|i| !self.c[*i].is_zero()).map(degree_of).collect();
        d.dedup();
        d
    }

    /// Homogeneous degree; `None` for the zero form.
    pub fn degree(&self) -> Result<Option<usize>> {
        let d = self.degrees();
        match d.len() {
            0 => Ok(None),
            1 => Ok(Some(d[0])),
            _ => Err(Error::DegreeMismatch(d[0], d[1])),
        }
    }

    pub fn part(&self, k: usize) -> Form {
        let mut f = Form::zero();
        for i in (0..8).filter(|i| degree_of(*i) == k) {
            f.c[i] = self.c[i].clone();
        }
        f
    }

    pub fn add(&self, o: &Form) -> Form {
        let mut f = self.clone();
        for i in 0..8 {
            f.c[i].add_assign(&o.c[i]);
        }
        f
    }

    pub fn sub(&self, o: &Form) -> Form {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Form {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, k: &ScalarQ) -> Form {
        self.map(|x| x.scale(k))
    }

    pub fn map<F: FnMut(&AlgElem) -> AlgElem>(&self, mut f: F) -> Form {
        let mut out = Form::zero();
        for i in 0..8 {
            if !self.c[i].is_zero() {
                out.c[i] = f(&self.c[i]);
            }
        }
        out
    }

    /// `x · ω`
    pub fn left_mul(&self, x: &AlgElem) -> Form {
        self.map(|c| x.mul(c))
    }

    /// `ω · x`, commuting `x` to the left.
    pub fn right_mul(&self, x: &AlgElem) -> Form {
        let mut out = Form::zero();
        for i in 0..8 {
            if !self.c[i].is_zero() {
                out.c[i] = self.c[i].mul(&twist(x, bimodule_weight(i)));
            }
        }
        out
    }

    pub fn wedge(&self, o: &Form) -> Result<Form> {
        let (da, db) = (self.degree()?.unwrap_or(0), o.degree()?.unwrap_or(0));
        if da + db > 3 && !self.is_zero() && !o.is_zero() {
            return Err(Error::DegreeOverflow(da + db));
        }
        Ok(self.wedge_unchecked(o))
    }

    /// Wedge of possibly inhomogeneous forms; overflowing degrees drop out.
    pub fn wedge_unchecked(&self, o: &Form) -> Form {
        let mut out = Form::zero();
        for i in 0..8 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if o.c[j].is_zero() {
                    continue;
                }
                if let Some((k, idx)) = basis_wedge(i, j) {
                    let moved = twist(&o.c[j], bimodule_weight(i));
                    let coeff = self.c[i].mul(&moved).scale(&k);
                    out.c[idx].add_assign(&coeff);
                }
            }
        }
        out
    }

    pub fn d(&self) -> Form {
        let mut out = Form::zero();
        for i in 0..TOP {
            let f = &self.c[i];
            if f.is_zero() {
                continue;
            }
            let df = d0(f);
            out = out.add(&df.wedge_unchecked(&Form::basis(i)));
            if i != ONE {
                out = out.add(&basis_d(i).left_mul(f));
            }
        }
        out
    }

    /// Antilinear involution with `ω₋* = -ω₊`, `ω_z* = -ω_z`.
    pub fn star(&self) -> Form {
        let mut out = Form::zero();
        for i in 0..8 {
            if self.c[i].is_zero() {
                continue;
            }
            // (f e)* = e* f*
            out = out.add(&basis_star(i).right_mul(&self.c[i].star()));
        }
        out
    }

    /// Decomposition by right U(1) charge; `Δ_R(ω^(k)) = ω^(k) ⊗ z^k`.
    pub fn charge_components(&self) -> BTreeMap<i64, Form> {
        let mut out: BTreeMap<i64, Form> = BTreeMap::new();
        for i in 0..8 {
            for (n, xn) in self.c[i].winding_components() {
                let k = basis_charge(i) - n;
                out.entry(k).or_default().c[i].add_assign(&xn);
            }
        }
        out
    }

    pub fn charges(&self) -> Vec<i64> {
        self.charge_components().into_keys().collect()
    }

    /// No `ω_z` in any component.
    pub fn is_horizontal(&self) -> bool {
        [WZ, WPZ, WZM, TOP].iter().all(|i| self.c[*i].is_zero())
    }

    /// Membership in `L_n^{(k)}`: horizontal, charge `-n`.
    pub fn require_equivariant(&self, n: i64) -> Result<()> {
        if !self.is_horizontal() {
            return Err(Error::NotHorizontal);
        }
        let ch = self.charges();
        if ch.iter().any(|k| *k != -n) {
            return Err(Error::WrongCharge { expected: -n, found: ch });
        }
        Ok(())
    }

    pub fn to_json(&self) -> Vec<FormTermJson> {
        let mut out = Vec::new();
        for (i, (x, name)) in self.c.iter().zip(BASIS_NAMES).enumerate() {
            if !x.is_zero() {
                out.push(FormTermJson { degree: degree_of(i), basis: name, terms: x.to_json() });
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FormTermJson {
    pub degree: usize,
    pub basis: &'static str,
    pub terms: Vec<TermJson>,
}

/// `dx = (X₊x) ω₊ + (X₋x) ω₋ + (X_z x) ω_z`
pub fn d0(x: &AlgElem) -> Form {
    Form::one_form(x_minus(x), x_plus(x), x_z(x))
}

/// Exterior derivative of a basis form.
pub fn basis_d(i: usize) -> Form {
    let k = |s: ScalarQ| AlgElem::from_scalar(s);
    let one_plus = ScalarQ::one().add(&ScalarQ::q_pow(-2)).neg();
    match i {
        ONE | TOP => Form::zero(),
        WZ => Form::single(WMP, k(ScalarQ::int(-1))),
        WP => Form::single(WPZ, k(one_plus)),
        WM => Form::single(WZM, k(one_plus)),
        _ => {
            // d(e_a ∧ e_b) = de_a ∧ e_b - e_a ∧ de_b
            let l = letters(i);
            let (ea, eb) = (letter_index(l[0]), letter_index(l[1]));
            let first = basis_d(ea).wedge_unchecked(&Form::basis(eb));
            let second = Form::basis(ea).wedge_unchecked(&basis_d(eb));
            first.sub(&second)
        }
    }
}

fn letter_index(l: u8) -> usize {
    [WM, WP, WZ][l as usize]
}

/// `*` on a basis form.
pub fn basis_star(i: usize) -> Form {
    let word = letters(i);
    // (e1 ∧ ... ∧ ek)* = (-1)^{k(k-1)/2} ek* ∧ ... ∧ e1*
    let mut acc = Form::basis(ONE);
    for l in word.iter().rev() {
        let s = match l {
            0 => Form::single(WP, AlgElem::from_scalar(ScalarQ::int(-1))),
            1 => Form::single(WM, AlgElem::from_scalar(ScalarQ::int(-1))),
            _ => Form::single(WZ, AlgElem::from_scalar(ScalarQ::int(-1))),
        };
        acc = acc.wedge_unchecked(&s);
    }
    let k = word.len();
    if (k * (k.saturating_sub(1)) / 2) % 2 == 1 {
        acc.neg()
    } else {
        acc
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (x, name) in self.c.iter().zip(BASIS_NAMES) {
            if x.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{}] {}", x, name)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
