//! U_q(su(2)) acting on the coordinate algebra from both sides.
//!
//! `E` and `F` act through the twisted Leibniz rule coming from
//! `ΔE = E⊗K + K⁻¹⊗E`, `ΔF = F⊗K + K⁻¹⊗F`, seeded by their values on the
//! four generators. Results are memoized per monomial.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::algebra::{AlgElem, Monomial};
use crate::config::{check_cap, winding_cap};
use crate::error::{Error, Result};
use crate::scalar::{qnum_half, z_factor, ScalarQ, Surd};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Gen {
    K,
    KInv,
    E,
    F,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Side {
    Left,
    Right,
}

/// A scaled word `scale * g1 g2 ... gr` in the generators.
#[derive(Clone, PartialEq, Debug)]
pub struct UqWord {
    pub scale: Surd,
    pub gens: Vec<Gen>,
}

impl UqWord {
    pub fn new(gens: Vec<Gen>) -> UqWord {
        UqWord { scale: Surd::one(), gens }
    }

    pub fn gen(g: Gen) -> UqWord {
        UqWord::new(vec![g])
    }

    pub fn scaled(mut self, k: Surd) -> UqWord {
        self.scale = self.scale.mul(&k);
        self
    }
}

/// Exponent of `s = q^{1/2}` picked up under `K`.
fn weight(side: Side, m: &Monomial) -> i64 {
    match side {
        Side::Left => m.winding(),
        Side::Right => -(m.a as i64) + m.c as i64 - m.cs as i64,
    }
}

fn k_scalar(side: Side, g: Gen, m: &Monomial) -> ScalarQ {
    let w = weight(side, m);
    match g {
        Gen::K => ScalarQ::s_pow(w),
        Gen::KInv => ScalarQ::s_pow(-w),
        _ => unreachable!(),
    }
}

fn mono(a: i32, c: u32, cs: u32) -> Monomial {
    Monomial::new(a, c, cs)
}

/// Generator values: `E ⊳ a = -q c*`, `F ⊳ c* = -q^{-1} a`, `a ◁ F = c`, ...
fn seed(side: Side, g: Gen, m: &Monomial) -> AlgElem {
    let t = |k: ScalarQ, m: Monomial| AlgElem::term(m, Surd::from_scalar(k));
    let one = ScalarQ::one;
    let (a, ast, c, cs) = (mono(1, 0, 0), mono(-1, 0, 0), mono(0, 1, 0), mono(0, 0, 1));
    match (side, g) {
        (Side::Left, Gen::E) => {
            if *m == a {
                t(ScalarQ::q().neg(), cs)
            } else if *m == c {
                t(one(), ast)
            } else {
                AlgElem::zero()
            }
        }
        (Side::Left, Gen::F) => {
            if *m == ast {
                t(one(), c)
            } else if *m == cs {
                t(ScalarQ::q_pow(-1).neg(), a)
            } else {
                AlgElem::zero()
            }
        }
        (Side::Right, Gen::E) => {
            if *m == c {
                t(one(), a)
            } else if *m == ast {
                t(ScalarQ::q().neg(), cs)
            } else {
                AlgElem::zero()
            }
        }
        (Side::Right, Gen::F) => {
            if *m == a {
                t(one(), c)
            } else if *m == cs {
                t(ScalarQ::q_pow(-1).neg(), ast)
            } else {
                AlgElem::zero()
            }
        }
        _ => unreachable!(),
    }
}

type Memo = HashMap<(Side, Gen, Monomial), Rc<AlgElem>>;

thread_local! {
    static POWERS: RefCell<Memo> = RefCell::new(HashMap::new());
    static MONOS: RefCell<Memo> = RefCell::new(HashMap::new());
}

/// Twisted Leibniz: `g(xy) = g(x) K(y) + K⁻¹(x) g(y)` (left), and the same
/// shape with the right weights on the other side.
fn leibniz(side: Side, x: &Monomial, gx: &AlgElem, y: &Monomial, gy: &AlgElem) -> AlgElem {
    let xm = AlgElem::monomial(*x);
    let ym = AlgElem::monomial(*y);
    let first = gx.mul(&ym).scale(&k_scalar(side, Gen::K, y));
    let second = xm.mul(gy).scale(&k_scalar(side, Gen::KInv, x));
    first.add(&second)
}

/// Action on a pure power of one letter.
fn power_action(side: Side, g: Gen, m: &Monomial) -> Rc<AlgElem> {
    if let Some(r) = POWERS.with(|c| c.borrow().get(&(side, g, *m)).cloned()) {
        return r;
    }
    let deg = m.degree();
    let out = if deg == 0 {
        AlgElem::zero()
    } else if deg == 1 {
        seed(side, g, m)
    } else {
        let letter = Monomial::new(m.a.signum(), (m.c > 0) as u32, (m.cs > 0) as u32);
        let rest = Monomial::new(m.a - letter.a, m.c - letter.c, m.cs - letter.cs);
        let gl = seed(side, g, &letter);
        let gr = power_action(side, g, &rest);
        leibniz(side, &letter, &gl, &rest, &gr)
    };
    let out = Rc::new(out);
    POWERS.with(|c| c.borrow_mut().insert((side, g, *m), out.clone()));
    out
}

fn mono_action(side: Side, g: Gen, m: &Monomial) -> Rc<AlgElem> {
    if matches!(g, Gen::K | Gen::KInv) {
        return Rc::new(AlgElem::term(*m, Surd::from_scalar(k_scalar(side, g, m))));
    }
    if let Some(r) = MONOS.with(|c| c.borrow().get(&(side, g, *m)).cloned()) {
        return r;
    }
    let x = Monomial::new(m.a, 0, 0);
    let y = Monomial::new(0, m.c, 0);
    let z = Monomial::new(0, 0, m.cs);
    let yz = Monomial::new(0, m.c, m.cs);
    let gx = power_action(side, g, &x);
    let gy = power_action(side, g, &y);
    let gz = power_action(side, g, &z);
    let gyz = leibniz(side, &y, &gy, &z, &gz);
    let out = Rc::new(leibniz(side, &x, &gx, &yz, &gyz));
    MONOS.with(|c| c.borrow_mut().insert((side, g, *m), out.clone()));
    out
}

fn act(side: Side, g: Gen, x: &AlgElem) -> AlgElem {
    let mut out = AlgElem::zero();
    for (m, c) in x.terms() {
        let img = mono_action(side, g, m);
        for (mm, cc) in img.terms() {
            out.add_term(*mm, cc.mul(c));
        }
    }
    out
}

/// `g ⊳ x`
pub fn act_left(g: Gen, x: &AlgElem) -> AlgElem {
    act(Side::Left, g, x)
}

/// `x ◁ g`
pub fn act_right(x: &AlgElem, g: Gen) -> AlgElem {
    act(Side::Right, g, x)
}

/// `(g1 ... gr) ⊳ x`, rightmost generator first.
pub fn act_left_word(w: &UqWord, x: &AlgElem) -> AlgElem {
    let mut y = x.clone();
    for g in w.gens.iter().rev() {
        y = act_left(*g, &y);
    }
    y.scale_surd(&w.scale)
}

/// `x ◁ (g1 ... gr)`, leftmost generator first.
pub fn act_right_word(x: &AlgElem, w: &UqWord) -> AlgElem {
    let mut y = x.clone();
    for g in &w.gens {
        y = act_right(&y, *g);
    }
    y.scale_surd(&w.scale)
}

pub fn pow_left(g: Gen, e: u32, x: &AlgElem) -> AlgElem {
    let mut y = x.clone();
    for _ in 0..e {
        y = act_left(g, &y);
    }
    y
}

pub fn pow_right(x: &AlgElem, g: Gen, e: u32) -> AlgElem {
    let mut y = x.clone();
    for _ in 0..e {
        y = act_right(&y, g);
    }
    y
}

/// Pairing `<u, x>` evaluated in tensor powers of the fundamental
/// representation: `<u, U_{i1 j1} ... U_{im jm}>` is the matrix element of
/// `u` on `V^{⊗m}`. Independent of the action code above.
pub fn pairing(w: &UqWord, x: &AlgElem) -> Surd {
    let mut acc = Surd::zero();
    for (m, c) in x.terms() {
        acc.add_assign(&c.scale(&pairing_mono(&w.gens, m)));
    }
    acc.mul(&w.scale)
}

fn pairing_mono(gens: &[Gen], m: &Monomial) -> ScalarQ {
    // U = [[a, -q c*], [c, a*]]; entries as (row, col)
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    let mut pref = ScalarQ::one();
    let push = |r: u32, c: u32, rows: &mut Vec<u32>, cols: &mut Vec<u32>| {
        rows.push(r);
        cols.push(c);
    };
    for _ in 0..m.a.unsigned_abs() {
        if m.a > 0 {
            push(0, 0, &mut rows, &mut cols);
        } else {
            push(1, 1, &mut rows, &mut cols);
        }
    }
    for _ in 0..m.c {
        push(1, 0, &mut rows, &mut cols);
    }
    for _ in 0..m.cs {
        push(0, 1, &mut rows, &mut cols);
        pref = pref.mul(&ScalarQ::q_pow(-1).neg());
    }
    let n = rows.len();
    let bits = |v: &[u32]| v.iter().enumerate().fold(0u64, |acc, (i, b)| acc | ((*b as u64) << i));
    let target = bits(&rows);
    let mut vec: HashMap<u64, ScalarQ> = HashMap::new();
    vec.insert(bits(&cols), ScalarQ::one());
    let kw = |state: u64, p: usize| if state >> p & 1 == 0 { -1 } else { 1 };
    for g in gens.iter().rev() {
        let mut next: HashMap<u64, ScalarQ> = HashMap::new();
        for (state, c) in &vec {
            match g {
                Gen::K | Gen::KInv => {
                    let e: i64 = (0..n).map(|p| kw(*state, p)).sum();
                    let e = if *g == Gen::K { e } else { -e };
                    let v = c.mul(&ScalarQ::s_pow(e));
                    let slot = next.entry(*state).or_insert_with(ScalarQ::zero);
                    *slot = slot.add(&v);
                }
                Gen::E | Gen::F => {
                    let (from, to) = if *g == Gen::E { (0, 1) } else { (1, 0) };
                    for p in 0..n {
                        if (state >> p) & 1 != from {
                            continue;
                        }
                        let before: i64 = (0..p).map(|i| kw(*state, i)).sum();
                        let after: i64 = (p + 1..n).map(|i| kw(*state, i)).sum();
                        let ns = (state & !(1 << p)) | ((to as u64) << p);
                        let v = c.mul(&ScalarQ::s_pow(after - before));
                        let slot = next.entry(ns).or_insert_with(ScalarQ::zero);
                        *slot = slot.add(&v);
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        vec = next;
    }
    vec.get(&target).cloned().unwrap_or_else(ScalarQ::zero).mul(&pref)
}

/// `X₊ = q^{1/2} E K`
pub fn x_plus(x: &AlgElem) -> AlgElem {
    per_winding(x, |n, xn| act_left(Gen::E, xn).scale(&ScalarQ::s_pow(n + 1)))
}

/// `X₋ = q^{-1/2} F K`
pub fn x_minus(x: &AlgElem) -> AlgElem {
    per_winding(x, |n, xn| act_left(Gen::F, xn).scale(&ScalarQ::s_pow(n - 1)))
}

/// `X_z = (1 - K⁴)/(1 - q^{-2})`
pub fn x_z(x: &AlgElem) -> AlgElem {
    per_winding(x, |n, xn| xn.scale(&z_factor(n)))
}

pub fn per_winding<F>(x: &AlgElem, mut f: F) -> AlgElem
where
    F: FnMut(i64, &AlgElem) -> AlgElem,
{
    let mut out = AlgElem::zero();
    for (n, xn) in x.winding_components() {
        out.add_assign(&f(n, &xn));
    }
    out
}

/// Scalar part of the Casimir on a K-weight `w` (exponent of `s`):
/// `(q K² - 2 + q⁻¹ K⁻²)/(q - q⁻¹)² - 1/4` with `K² = q^w`.
fn casimir_k_part(w: i64) -> ScalarQ {
    qnum_half(w + 1).pow(2).sub(&ScalarQ::ratio(1, 4))
}

/// `C_q ⊳ x`
pub fn casimir_left(x: &AlgElem) -> AlgElem {
    let fe = act_left(Gen::F, &act_left(Gen::E, x));
    per_winding(x, |n, xn| xn.scale(&casimir_k_part(n))).add(&fe)
}

/// `x ◁ C_q`
pub fn casimir_right(x: &AlgElem) -> AlgElem {
    let fe = act_right(&act_right(x, Gen::F), Gen::E);
    let mut out = fe;
    for (m, c) in x.terms() {
        out.add_term(*m, c.scale(&casimir_k_part(weight(Side::Right, m))));
    }
    out
}

/// Eigenvalue `[J + 1/2]² - 1/4` on the box `W_p`, `p = 2J`.
pub fn casimir_eigenvalue(p: i64) -> ScalarQ {
    qnum_half(p + 1).pow(2).sub(&ScalarQ::ratio(1, 4))
}

/// The box `W_p`: entry `[t][r] = F^t ⊳ a*^p ◁ E^r`.
pub fn pw_basis(p: i64) -> Result<Vec<Vec<AlgElem>>> {
    pw_basis_with_cap(p, winding_cap())
}

pub fn pw_basis_with_cap(p: i64, cap: i64) -> Result<Vec<Vec<AlgElem>>> {
    if p < 0 {
        return Err(Error::InvalidIndex(format!("p = {}", p)));
    }
    check_cap(p, cap)?;
    let top = AlgElem::monomial(Monomial::new(-(p as i32), 0, 0));
    let mut out = Vec::new();
    let mut col = top;
    for _ in 0..=p {
        let mut row = Vec::new();
        let mut w = col.clone();
        for _ in 0..=p {
            row.push(w.clone());
            w = act_right(&w, Gen::E);
        }
        out.push(row);
        col = act_left(Gen::F, &col);
    }
    Ok(out)
}

/// Validate `(n, J = j2/2, l)` for `φ_{n,J,l}`.
pub fn check_nj(n: i64, j2: i64) -> Result<()> {
    if j2 < n.abs() || (j2 - n.abs()) % 2 != 0 {
        return Err(Error::InvalidIndex(format!("n = {}, J = {}/2", n, j2)));
    }
    Ok(())
}

/// `φ_{n,J,l} = (c^{J - n/2} a*^{J + n/2}) ◁ E^l` with `J = j2/2`.
pub fn eigenbasis_vector(n: i64, j2: i64, l: i64) -> Result<AlgElem> {
    eigenbasis_vector_with_cap(n, j2, l, winding_cap())
}

pub fn eigenbasis_vector_with_cap(n: i64, j2: i64, l: i64, cap: i64) -> Result<AlgElem> {
    check_nj(n, j2)?;
    if l < 0 || l > j2 {
        return Err(Error::InvalidIndex(format!("l = {} outside 0..={}", l, j2)));
    }
    check_cap(n, cap)?;
    Ok(pow_right(&eigen_seed(n, j2), Gen::E, l as u32))
}

fn eigen_seed(n: i64, j2: i64) -> AlgElem {
    let t = ((j2 - n) / 2) as u32;
    let u = ((j2 + n) / 2) as u32;
    AlgElem::c().pow(t).mul(&AlgElem::a_star().pow(u))
}

/// All `φ_{n,J,l}` for one `(n, J)`.
pub fn eigenbasis(n: i64, j2: i64, cap: i64) -> Result<Vec<AlgElem>> {
    check_nj(n, j2)?;
    check_cap(n, cap)?;
    let mut w = eigen_seed(n, j2);
    let mut out = Vec::new();
    for _ in 0..=j2 {
        out.push(w.clone());
        w = act_right(&w, Gen::E);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qnum;

    #[test]
    fn generator_examples() {
        let (a, ast, c, cs) = (AlgElem::a(), AlgElem::a_star(), AlgElem::c(), AlgElem::c_star());
        assert_eq!(act_left(Gen::E, &c), ast);
        assert_eq!(act_left(Gen::E, &a), cs.scale(&ScalarQ::q().neg()));
        let a2 = ast.mul(&ast);
        let expect = c.mul(&ast).scale(&ScalarQ::s_pow(-1).mul(&qnum(2)));
        assert_eq!(act_left(Gen::F, &a2), expect);
        assert_eq!(act_right(&a, Gen::F), c);
        assert_eq!(act_right(&c, Gen::E), a);
        assert_eq!(act_right(&ast, Gen::K), ast.scale(&ScalarQ::s_pow(1)));
    }

    #[test]
    fn pairing_generators() {
        let k = UqWord::gen(Gen::K);
        assert_eq!(pairing(&k, &AlgElem::a()).as_scalar().unwrap(), ScalarQ::s_pow(-1));
        assert!(pairing(&UqWord::gen(Gen::E), &AlgElem::c()).is_one());
        assert!(pairing(&UqWord::gen(Gen::E), &AlgElem::a()).is_zero());
        let f = pairing(&UqWord::gen(Gen::F), &AlgElem::c_star());
        assert_eq!(f.as_scalar().unwrap(), ScalarQ::q_pow(-1).neg());
    }

    #[test]
    fn small_eigenvectors() {
        assert_eq!(eigenbasis_vector(0, 0, 0).unwrap(), AlgElem::one());
        assert_eq!(eigenbasis_vector(1, 1, 0).unwrap(), AlgElem::a_star());
        assert_eq!(eigenbasis_vector(-1, 1, 0).unwrap(), AlgElem::c());
    }
}
