//! `ScalarQ`: reduced rational functions in `s = q^(1/2)` over Q.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::{q_power, Poly};
use super::rat::Rat;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ScalarQ {
    num: Poly,
    den: Poly,
}

impl Default for ScalarQ {
    fn default() -> Self {
        ScalarQ::zero()
    }
}

impl ScalarQ {
    pub fn zero() -> ScalarQ {
        ScalarQ { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> ScalarQ {
        ScalarQ::constant(Rat::one())
    }

    pub fn constant(r: Rat) -> ScalarQ {
        ScalarQ { num: Poly::constant(r), den: Poly::one() }
    }

    pub fn int(n: i64) -> ScalarQ {
        ScalarQ::constant(Rat::int(n))
    }

    pub fn ratio(n: i64, d: i64) -> ScalarQ {
        ScalarQ::constant(Rat::new(n, d))
    }

    /// `s^k` for any integer `k`.
    pub fn s_pow(k: i64) -> ScalarQ {
        if k >= 0 {
            ScalarQ { num: Poly::s_pow(k as usize), den: Poly::one() }
        } else {
            ScalarQ { num: Poly::one(), den: Poly::s_pow((-k) as usize) }
        }
    }

    /// `q^k = s^(2k)`.
    pub fn q_pow(k: i64) -> ScalarQ {
        ScalarQ::s_pow(2 * k)
    }

    pub fn q() -> ScalarQ {
        ScalarQ::s_pow(2)
    }

    /// Laurent polynomial `sum c_i s^(low + i)`.
    pub fn laurent(low: i64, coeffs: &[i64]) -> ScalarQ {
        let p = Poly::from_ints(coeffs);
        ScalarQ::from_poly(p).mul(&ScalarQ::s_pow(low))
    }

    pub fn from_poly(p: Poly) -> ScalarQ {
        ScalarQ { num: p, den: Poly::one() }
    }

    pub fn new(num: Poly, den: Poly) -> Result<ScalarQ> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ScalarQ::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> ScalarQ {
        if num.is_zero() {
            return ScalarQ::zero();
        }
        let v = num.valuation().min(den.valuation());
        let (num, den) = if v > 0 { (num.shift_down(v), den.shift_down(v)) } else { (num, den) };
        if den.is_monomial() {
            let lc = den.lc();
            if lc.is_one() {
                return ScalarQ { num, den };
            }
            let inv = lc.recip();
            return ScalarQ { num: num.scale(&inv), den: den.scale(&inv) };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        let inv = den.lc().recip();
        if inv.is_one() {
            ScalarQ { num, den }
        } else {
            ScalarQ { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.num.coeffs().first().cloned().unwrap_or_else(Rat::zero))
        } else {
            None
        }
    }

    /// Denominator is a power of `s`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    pub fn add(&self, o: &ScalarQ) -> ScalarQ {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = self.num.add(&o.num);
            if self.den.is_one() {
                return ScalarQ { num, den: Poly::one() };
            }
            return ScalarQ::normalize(num, self.den.clone());
        }
        if self.den.is_monomial() && o.den.is_monomial() {
            let k = self.den.degree().unwrap();
            let l = o.den.degree().unwrap();
            let m = k.max(l);
            let num = self.num.shift_up(m - k).add(&o.num.shift_up(m - l));
            return ScalarQ::normalize(num, Poly::s_pow(m));
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        ScalarQ::normalize(num, self.den.mul(&o.den))
    }

    pub fn neg(&self) -> ScalarQ {
        ScalarQ { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &ScalarQ) -> ScalarQ {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &ScalarQ) -> ScalarQ {
        if self.is_zero() || o.is_zero() {
            return ScalarQ::zero();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return o.clone();
        }
        if self.den.is_monomial() && o.den.is_monomial() {
            let k = self.den.degree().unwrap() + o.den.degree().unwrap();
            return ScalarQ::normalize(self.num.mul(&o.num), Poly::s_pow(k));
        }
        ScalarQ::normalize(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Result<ScalarQ> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ScalarQ::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &ScalarQ) -> Result<ScalarQ> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> ScalarQ {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut acc = ScalarQ::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn scale_rat(&self, r: &Rat) -> ScalarQ {
        if r.is_zero() {
            return ScalarQ::zero();
        }
        ScalarQ { num: self.num.scale(r), den: self.den.clone() }
    }

    /// Exact value at `s = s0`.
    pub fn eval_at(&self, s0: &Rat) -> Result<Rat> {
        let d = self.den.eval(s0);
        if d.is_zero() {
            return Err(Error::Pole(s0.to_string()));
        }
        Ok(&self.num.eval(s0) / &d)
    }

    /// Value at `s = 1`; removable singularities are gone after reduction.
    pub fn limit_at_one(&self) -> Result<Rat> {
        self.eval_at(&Rat::one()).map_err(|_| Error::PoleAtOne)
    }

    /// Substitute `s -> 1/s`, i.e. `q -> q^-1`.
    pub fn invert_variable(&self) -> ScalarQ {
        let flip = |p: &Poly| -> (Poly, usize) {
            let d = p.degree().unwrap_or(0);
            let mut c: Vec<Rat> = p.coeffs().to_vec();
            c.reverse();
            (Poly::from_coeffs(c), d)
        };
        let (n, dn) = flip(&self.num);
        let (d, dd) = flip(&self.den);
        // num(1/s)/den(1/s) = s^dd n(s) / (s^dn d(s))
        let num = n.shift_up(dd);
        let den = d.shift_up(dn);
        ScalarQ::normalize(num, den)
    }

    pub fn render(&self) -> String {
        render_ratio(&self.num, &self.den)
    }
}

/// Canonical "num/den" text in `q`; a monomial denominator `s^k` is shown as
/// a negative power inside each numerator term.
pub fn render_ratio(num: &Poly, den: &Poly) -> String {
    if num.is_zero() {
        return "0".into();
    }
    if den.is_one() {
        return num.render_q();
    }
    if den.is_monomial() {
        let k = den.degree().unwrap() as i64;
        let mut out = String::new();
        for (i, c) in num.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let var = q_power(i as i64 - k);
            match (a.is_one(), var.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&var),
                (false, true) => out.push_str(&a.to_string()),
                (false, false) => out.push_str(&format!("{}*{}", a, var)),
            }
        }
        return out;
    }
    format!("({})/({})", num.render_q(), den.render_q())
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a ScalarQ> for &'a ScalarQ {
            type Output = ScalarQ;
            fn $m(self, o: &ScalarQ) -> ScalarQ {
                $body(self, o)
            }
        }
    };
}
scalar_binop!(Add, add, |a: &ScalarQ, b: &ScalarQ| ScalarQ::add(a, b));
scalar_binop!(Sub, sub, |a: &ScalarQ, b: &ScalarQ| ScalarQ::sub(a, b));
scalar_binop!(Mul, mul, |a: &ScalarQ, b: &ScalarQ| ScalarQ::mul(a, b));
scalar_binop!(Div, div, |a: &ScalarQ, b: &ScalarQ| ScalarQ::div(a, b).expect("division by zero"));

impl Neg for &ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        ScalarQ::neg(self)
    }
}

impl Neg for ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        ScalarQ::neg(&self)
    }
}

impl From<i64> for ScalarQ {
    fn from(n: i64) -> ScalarQ {
        ScalarQ::int(n)
    }
}

impl From<Rat> for ScalarQ {
    fn from(r: Rat) -> ScalarQ {
        ScalarQ::constant(r)
    }
}

/// The q-number `[x] = (q^x - q^-x)/(q - q^-1)` for integer `x`.
pub fn qnum(x: i64) -> ScalarQ {
    if x == 0 {
        return ScalarQ::zero();
    }
    let n = x.abs();
    // q^(n-1) + q^(n-3) + ... + q^(1-n) in powers of s
    let low = -2 * (n - 1);
    let mut coeffs = vec![0i64; (4 * (n - 1) + 1) as usize];
    for j in 0..n {
        coeffs[(4 * j) as usize] = 1;
    }
    let v = ScalarQ::laurent(low, &coeffs);
    if x < 0 {
        v.neg()
    } else {
        v
    }
}

/// `[m/2]` for any integer `m`; a genuine rational function when `m` is odd.
pub fn qnum_half(m: i64) -> ScalarQ {
    if m % 2 == 0 {
        return qnum(m / 2);
    }
    let top = ScalarQ::s_pow(m).sub(&ScalarQ::s_pow(-m));
    let bottom = ScalarQ::s_pow(2).sub(&ScalarQ::s_pow(-2));
    top.div(&bottom).expect("q - q^-1 is nonzero")
}

/// `(1 - q^(2j)) / (1 - q^-2)`, which equals `-q^(j+1)[j]`.
pub fn z_factor(j: i64) -> ScalarQ {
    let top = ScalarQ::one().sub(&ScalarQ::q_pow(2 * j));
    let bottom = ScalarQ::one().sub(&ScalarQ::q_pow(-2));
    top.div(&bottom).expect("nonzero")
}
