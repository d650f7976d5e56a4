//! Seeded sampler for property checks.
//!
//! Monomial exponents stay at most 4 and elements have at most 5 terms, so
//! every sample stays cheap to normalize.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgElem, Monomial};
use crate::forms::{degree_of, Form};
use crate::scalar::{ScalarQ, Surd};

pub const MAX_EXP: i32 = 4;
pub const MAX_TERMS: usize = 5;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// `k q^{e/2}` with a small nonzero integer `k`.
    pub fn scalar(&mut self) -> ScalarQ {
        let mut k = self.rng.gen_range(-3i64..=3);
        if k == 0 {
            k = 1;
        }
        let e = self.rng.gen_range(-2i64..=2);
        ScalarQ::int(k).mul(&ScalarQ::s_pow(e))
    }

    pub fn monomial(&mut self) -> Monomial {
        let a = self.rng.gen_range(-MAX_EXP..=MAX_EXP);
        let c = self.rng.gen_range(0..=MAX_EXP as u32);
        let cs = self.rng.gen_range(0..=MAX_EXP as u32);
        Monomial::new(a, c, cs)
    }

    /// Monomial of winding `n`, when one exists within the exponent bound.
    pub fn monomial_in(&mut self, n: i64) -> Monomial {
        loop {
            let c = self.rng.gen_range(0..=MAX_EXP as i64);
            let cs = self.rng.gen_range(0..=MAX_EXP as i64);
            let a = cs - c - n;
            if a.abs() <= MAX_EXP as i64 + n.abs() {
                return Monomial::new(a as i32, c as u32, cs as u32);
            }
        }
    }

    pub fn elem(&mut self) -> AlgElem {
        let k = self.rng.gen_range(1..=MAX_TERMS);
        let mut x = AlgElem::zero();
        for _ in 0..k {
            let m = self.monomial();
            let s = self.scalar();
            x.add_term(m, Surd::from_scalar(s));
        }
        x
    }

    /// Random element of `L_n`.
    pub fn elem_in(&mut self, n: i64) -> AlgElem {
        let k = self.rng.gen_range(1..=MAX_TERMS);
        let mut x = AlgElem::zero();
        for _ in 0..k {
            let m = self.monomial_in(n);
            let s = self.scalar();
            x.add_term(m, Surd::from_scalar(s));
        }
        x
    }

    /// Smaller element, for products that would otherwise blow up.
    pub fn small_elem(&mut self) -> AlgElem {
        let k = self.rng.gen_range(1..=2);
        let mut x = AlgElem::zero();
        for _ in 0..k {
            let a = self.rng.gen_range(-2..=2);
            let c = self.rng.gen_range(0..=2);
            let cs = self.rng.gen_range(0..=2);
            let s = self.scalar();
            x.add_term(Monomial::new(a, c, cs), Surd::from_scalar(s));
        }
        x
    }

    /// Small element of `L_n`.
    pub fn small_elem_in(&mut self, n: i64) -> AlgElem {
        let k = self.rng.gen_range(1..=2);
        let mut x = AlgElem::zero();
        for _ in 0..k {
            let c = self.rng.gen_range(0..=2i64);
            let cs = self.rng.gen_range(0..=2i64);
            let a = cs - c - n;
            let s = self.scalar();
            x.add_term(Monomial::new(a as i32, c as u32, cs as u32), Surd::from_scalar(s));
        }
        x
    }

    /// Homogeneous form of degree `k` with small coefficients.
    pub fn form(&mut self, k: usize) -> Form {
        let mut w = Form::zero();
        for i in 0..8 {
            if degree_of(i) == k && self.rng.gen_bool(0.7) {
                w.set(i, self.small_elem());
            }
        }
        if w.is_zero() {
            let i = (0..8).find(|i| degree_of(*i) == k).unwrap_or(0);
            w.set(i, self.small_elem());
        }
        w
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }
}
