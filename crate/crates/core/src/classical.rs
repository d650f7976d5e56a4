//! Classical limit: evaluate symbolic results at `q = 1` and compare with
//! formulas where every q-number `[x]` is replaced by `x`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{basis_d, basis_wedge, degree_of, Form, WM, WMP, WP, WPZ, WZ, WZM};
use crate::hodge::{spectrum3, spectrum_gauged, spectrum_sphere, HodgeParams};
use crate::scalar::{Rat, ScalarQ};
use crate::uq::casimir_eigenvalue;

/// One compared quantity.
#[derive(Clone, Debug, Serialize)]
pub struct ClassicalItem {
    pub name: String,
    pub at_one: Option<String>,
    pub oracle: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn item(name: String, value: Result<Rat>, oracle: Rat) -> ClassicalItem {
    match value {
        Ok(v) => ClassicalItem { name, ok: v == oracle, at_one: Some(v.to_string()), oracle: oracle.to_string(), error: None },
        Err(e) => ClassicalItem { name, ok: false, at_one: None, oracle: oracle.to_string(), error: Some(e.to_string()) },
    }
}

fn r(n: i64) -> Rat {
    Rat::int(n)
}

fn half(m: i64) -> Rat {
    Rat::new(m, 2)
}

/// Classical `λ_{n,J}` with `[x] → x`, `q → 1`.
pub fn spectrum3_oracle(n: i64, j2: i64, alpha: &Rat) -> Rat {
    let nu = &r(2) * alpha;
    let nu = nu.recip();
    let gamma = Rat::new(1, 4);
    let jj = &half(j2 - n) * &half(j2 + 2 + n);
    let t = &(&nu * &jj) + &(&nu * &(&jj + &r(n)));
    -(&t + &(&gamma * &(&r(n) * &r(n))))
}

pub fn sphere_oracle(j: i64, alpha: &Rat) -> Rat {
    let nu = (&r(2) * alpha).recip();
    -(&(&r(2) * &nu) * &(&r(j) * &r(j + 1)))
}

pub fn gauged_oracle(n: i64, j2: i64, alpha: &Rat) -> Rat {
    let nu = (&r(2) * alpha).recip();
    let jj = &half(j2 - n) * &half(j2 + 2 + n);
    -(&nu * &(&(&r(2) * &jj) + &r(n)))
}

pub fn casimir_oracle(p: i64) -> Rat {
    &half(p) * &half(p + 2)
}

/// Spectra of the three Laplacians and the Casimir at `q = 1`.
pub fn spectra_report(nmax: i64, extra: i64, alpha: &Rat) -> Result<Vec<ClassicalItem>> {
    let p = HodgeParams::classical(alpha.clone())?;
    let mut out = Vec::new();
    for n in -nmax..=nmax {
        let mut j2 = n.abs();
        while j2 <= n.abs() + 2 * extra {
            let v = spectrum3(n, j2, &p)?.limit_at_one();
            out.push(item(format!("total n={} J={}/2", n, j2), v, spectrum3_oracle(n, j2, alpha)));
            let g = spectrum_gauged(n, j2, &p)?.limit_at_one();
            out.push(item(format!("gauged n={} J={}/2", n, j2), g, gauged_oracle(n, j2, alpha)));
            j2 += 2;
        }
    }
    for j in 0..=nmax + extra {
        let v = spectrum_sphere(j, &p)?.limit_at_one();
        out.push(item(format!("sphere J={}", j), v, sphere_oracle(j, alpha)));
    }
    for pp in 0..=2 * (nmax + extra) {
        out.push(item(format!("casimir p={}", pp), casimir_eigenvalue(pp).limit_at_one(), casimir_oracle(pp)));
    }
    Ok(out)
}

// classical letters: 0 = ω_f, 1 = ω_e, 2 = ω_h
type Classical2 = BTreeMap<(u8, u8), Rat>;

fn push2(m: &mut Classical2, i: u8, j: u8, k: Rat) {
    if i == j || k.is_zero() {
        return;
    }
    let (key, k) = if i < j { ((i, j), k) } else { ((j, i), -k) };
    let v = m.get(&key).cloned().unwrap_or_else(Rat::zero);
    let v = &v + &k;
    if v.is_zero() {
        m.remove(&key);
    } else {
        m.insert(key, v);
    }
}

/// `ω₋ → ω_f`, `ω₊ → ω_e`, `ω_z → -½ ω_h` on a basis letter.
fn dictionary(idx: usize) -> (Rat, u8) {
    match idx {
        WM => (Rat::one(), 0),
        WP => (Rat::one(), 1),
        _ => (Rat::new(-1, 2), 2),
    }
}

fn two_form_letters(i: usize) -> (usize, usize) {
    match i {
        WMP => (WM, WP),
        WPZ => (WP, WZ),
        _ => (WZ, WM),
    }
}

fn constant_at_one(x: &crate::algebra::AlgElem) -> Result<Rat> {
    let s = x.as_scalar().and_then(|s| s.as_scalar()).ok_or(Error::BadParameter("non-constant structure constant"))?;
    s.limit_at_one()
}

/// Image of a constant-coefficient 2-form under the dictionary at `q = 1`.
fn classical_image(w: &Form) -> Result<Classical2> {
    let mut m = Classical2::new();
    for i in [WMP, WPZ, WZM] {
        let x = w.coeff(i);
        if x.is_zero() {
            continue;
        }
        let k = constant_at_one(x)?;
        let (a, b) = two_form_letters(i);
        let ((ka, la), (kb, lb)) = (dictionary(a), dictionary(b));
        push2(&mut m, la, lb, &(&k * &ka) * &kb);
    }
    Ok(m)
}

/// `dω_f = ω_h∧ω_f`, `dω_e = ω_e∧ω_h`, `dω_h = 2 ω_f∧ω_e`.
fn classical_d(letter: u8) -> Classical2 {
    let mut m = Classical2::new();
    match letter {
        0 => push2(&mut m, 2, 0, Rat::one()),
        1 => push2(&mut m, 1, 2, Rat::one()),
        _ => push2(&mut m, 0, 1, Rat::int(2)),
    }
    m
}

fn render2(m: &Classical2) -> String {
    const N: [&str; 3] = ["f", "e", "h"];
    if m.is_empty() {
        return "0".into();
    }
    m.iter().map(|((i, j), k)| format!("{}*w{}^w{}", k, N[*i as usize], N[*j as usize])).collect::<Vec<_>>().join(" + ")
}

/// Exterior derivative of the basis 1-forms through the dictionary.
pub fn calculus_report() -> Vec<ClassicalItem> {
    let mut out = Vec::new();
    for i in [WM, WP, WZ] {
        let (k, l) = dictionary(i);
        let name = format!("d {}", crate::forms::BASIS_NAMES[i]);
        match classical_image(&basis_d(i)) {
            Ok(img) => {
                // d(k ω_l) = k dω_l
                let mut expect = Classical2::new();
                for ((a, b), v) in classical_d(l) {
                    push2(&mut expect, a, b, &v * &k);
                }
                out.push(ClassicalItem {
                    name,
                    at_one: Some(render2(&img)),
                    oracle: render2(&expect),
                    ok: img == expect,
                    error: None,
                });
            }
            Err(e) => out.push(ClassicalItem { name, at_one: None, oracle: String::new(), ok: false, error: Some(e.to_string()) }),
        }
    }
    out
}

/// Braiding of basis 1-forms and the bimodule weights at `q = 1`.
pub fn structure_constants_report() -> Vec<ClassicalItem> {
    let mut out = Vec::new();
    for (i, j) in [(WP, WM), (WZ, WM), (WZ, WP), (WM, WZ)] {
        let (k, target) = basis_wedge(i, j).expect("degree two");
        // e_j ∧ e_i in the canonical basis, for comparison
        let (k2, t2) = basis_wedge(j, i).expect("degree two");
        let ratio = if target == t2 { k.div(&k2) } else { Err(Error::DivisionByZero) };
        let name = format!("{} ^ {} / {} ^ {}", crate::forms::BASIS_NAMES[i], crate::forms::BASIS_NAMES[j], crate::forms::BASIS_NAMES[j], crate::forms::BASIS_NAMES[i]);
        out.push(item(name, ratio.and_then(|r| r.limit_at_one()), Rat::int(-1)));
    }
    for i in 1..8 {
        let w = crate::forms::bimodule_weight(i);
        let v = ScalarQ::q_pow(w).limit_at_one();
        out.push(item(format!("bimodule weight {} (degree {})", crate::forms::BASIS_NAMES[i], degree_of(i)), v, Rat::one()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn calculus_matches() {
        assert!(calculus_report().iter().all(|i| i.ok));
        assert!(structure_constants_report().iter().all(|i| i.ok));
    }

    #[test]
    fn spectra_match() {
        let items = spectra_report(2, 2, &Rat::one()).unwrap();
        assert!(items.iter().all(|i| i.ok), "{:?}", items.iter().find(|i| !i.ok));
    }
}
