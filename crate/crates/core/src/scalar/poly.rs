//! Dense univariate polynomials in `s` over exact rationals.

use std::cmp::Ordering;
use std::fmt;

use super::rat::Rat;

/// Coefficients stored low degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    c: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn constant(r: Rat) -> Poly {
        Poly::from_coeffs(vec![r])
    }

    pub fn monomial(r: Rat, deg: usize) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::zero(); deg + 1];
        c[deg] = r;
        Poly { c }
    }

    /// `s^deg`
    pub fn s_pow(deg: usize) -> Poly {
        Poly::monomial(Rat::one(), deg)
    }

    pub fn from_coeffs(mut c: Vec<Rat>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_ints(c: &[i64]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&x| Rat::int(x)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn lc(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Lowest power of `s` with a nonzero coefficient.
    pub fn valuation(&self) -> usize {
        self.c.iter().position(|x| !x.is_zero()).unwrap_or(0)
    }

    /// True for `r * s^k`.
    pub fn is_monomial(&self) -> bool {
        !self.c.is_empty() && self.c.iter().filter(|x| !x.is_zero()).count() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut c = vec![Rat::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    /// Divide by `s^k`; caller guarantees `k <= valuation`.
    pub fn shift_down(&self, k: usize) -> Poly {
        if k == 0 {
            return self.clone();
        }
        debug_assert!(k <= self.valuation() || self.is_zero());
        Poly::from_coeffs(self.c.iter().skip(k).cloned().collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => c.push(a + b),
                (Some(a), None) => c.push(a.clone()),
                (None, Some(b)) => c.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn neg(&self) -> Poly {
        Poly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn scale(&self, r: &Rat) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly { c: self.c.iter().map(|x| x * r).collect() }
    }

    /// Euclidean division over Q.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.c.len() - 1;
        if self.c.len() < d.c.len() {
            return (Poly::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut r = self.c.clone();
        let mut q = vec![Rat::zero(); self.c.len() - dd];
        for k in (0..q.len()).rev() {
            let t = &r[k + dd] * &inv;
            if t.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                if !dj.is_zero() {
                    r[k + j] = &r[k + j] - &(&t * dj);
                }
            }
            q[k] = t;
        }
        r.truncate(dd);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    /// Exact division; panics in debug builds if there is a remainder.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = o.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn derivative(&self) -> Poly {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * &Rat::int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Yun's square-free decomposition of a monic polynomial: returns
    /// `[f1, f2, ...]` with `p = f1 * f2^2 * f3^3 * ...`, each `fi` monic
    /// and square-free, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<Poly> {
        let p = self.monic();
        if p.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        let mut b = p.div_exact(&a0);
        let mut c = dp.div_exact(&a0);
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        loop {
            let a = b.gcd(&d);
            out.push(a.clone());
            b = b.div_exact(&a);
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_exact(&a);
            d = c.sub(&b.derivative());
        }
        while out.last().is_some_and(|f| f.is_one()) {
            out.pop();
        }
        out
    }

    pub fn cmp_canonical(&self, o: &Poly) -> Ordering {
        self.c.len().cmp(&o.c.len()).then_with(|| {
            for (a, b) in self.c.iter().zip(o.c.iter()).rev() {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    x => return x,
                }
            }
            Ordering::Equal
        })
    }

    /// Render with `var` raised to `k * scale_num / 2`; used for `s = q^(1/2)`.
    pub fn render_q(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.c.iter().enumerate().rev() {
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
            let var = q_power(k as i64);
            match (a.is_one(), var.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&var),
                (false, true) => out.push_str(&a.to_string()),
                (false, false) => {
                    out.push_str(&a.to_string());
                    out.push('*');
                    out.push_str(&var);
                }
            }
        }
        out
    }
}

/// `s^k` written in terms of `q`.
pub fn q_power(k: i64) -> String {
    match k {
        0 => String::new(),
        2 => "q".into(),
        k if k % 2 == 0 => format!("q^{}", k / 2),
        k => format!("q^({}/2)", k),
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_q())
    }
}
