//! Formal square roots over `ScalarQ`.
//!
//! A radicand is kept as a single polynomial `m * f(s)` where `m` is a
//! square-free integer and `f` is monic and square-free; every square factor
//! has been moved into the rational part. With that normal form two radicals
//! are equal iff their radicands are, and distinct radicands are linearly
//! independent over Q(s), so sums of radicals (`Surd`) compare structurally.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_rational::BigRational;

use super::poly::Poly;
use super::rat::{int_square_split, rat_sqrt, Rat};
use super::ratfunc::ScalarQ;
use crate::error::{Error, Result};

/// Square-free radicand; `None` stands for 1.
#[derive(Clone, Debug, Default)]
pub struct Rad(Option<Arc<Poly>>);

impl Rad {
    pub fn one() -> Rad {
        Rad(None)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_none()
    }

    pub fn poly(&self) -> Poly {
        match &self.0 {
            None => Poly::one(),
            Some(p) => (**p).clone(),
        }
    }

    pub fn as_scalar(&self) -> ScalarQ {
        ScalarQ::from_poly(self.poly())
    }
}

impl PartialEq for Rad {
    fn eq(&self, o: &Rad) -> bool {
        match (&self.0, &o.0) {
            (None, None) => true,
            (Some(a), Some(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

impl Eq for Rad {}

impl Hash for Rad {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.as_deref().hash(state)
    }
}

impl PartialOrd for Rad {
    fn partial_cmp(&self, o: &Rad) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Rad {
    fn cmp(&self, o: &Rad) -> Ordering {
        match (&self.0, &o.0) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp_canonical(b),
        }
    }
}

thread_local! {
    static SQRT_CACHE: RefCell<HashMap<ScalarQ, (ScalarQ, Rad)>> = RefCell::new(HashMap::new());
}

/// `sqrt(x) = factor * sqrt(rad)` with `rad` in normal form.
pub fn split_sqrt(x: &ScalarQ) -> (ScalarQ, Rad) {
    if x.is_zero() {
        return (ScalarQ::zero(), Rad::one());
    }
    if let Some(hit) = SQRT_CACHE.with(|c| c.borrow().get(x).cloned()) {
        return hit;
    }
    let out = split_sqrt_uncached(x);
    SQRT_CACHE.with(|c| c.borrow_mut().insert(x.clone(), out.clone()));
    out
}

fn split_sqrt_uncached(x: &ScalarQ) -> (ScalarQ, Rad) {
    // sqrt(N/D) = sqrt(N*D) / D
    let p0 = x.num().mul(x.den());
    let lc = p0.lc();
    let monic = p0.monic();
    let parts = monic.squarefree_decomposition();
    let mut g = Poly::one();
    let mut keep = Poly::one();
    for (i, f) in parts.iter().enumerate() {
        let mult = (i + 1) as u32;
        g = g.mul(&f.pow(mult / 2));
        if mult % 2 == 1 {
            keep = keep.mul(f);
        }
    }
    // sqrt(a/b) = sqrt(a*b)/b, a*b = u^2 m
    let ab = lc.numer() * lc.denom();
    let (u, m) = int_square_split(&ab);
    let int_factor = Rat::from_big(BigRational::new(u, lc.denom()));
    let m_rat = Rat::from(m);
    let rad_poly = keep.scale(&m_rat);
    let factor = ScalarQ::from_poly(g)
        .scale_rat(&int_factor)
        .div(&ScalarQ::from_poly(x.den().clone()))
        .expect("denominator nonzero");
    let rad = if rad_poly.is_one() { Rad::one() } else { Rad(Some(Arc::new(rad_poly))) };
    (factor, rad)
}

/// `rational * sqrt(radicand)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RadScalar {
    pub rational: ScalarQ,
    pub radicand: Rad,
}

impl RadScalar {
    pub fn zero() -> RadScalar {
        RadScalar { rational: ScalarQ::zero(), radicand: Rad::one() }
    }

    pub fn from_scalar(r: ScalarQ) -> RadScalar {
        RadScalar { rational: r, radicand: Rad::one() }
    }

    /// `sqrt(x)` in normal form.
    /// Principal root; `x` is assumed positive for real `q > 0`, which is
    /// what makes `sqrt(x) sqrt(y) = sqrt(xy)` valid.
    pub fn sqrt(x: &ScalarQ) -> RadScalar {
        let (f, rad) = split_sqrt(x);
        RadScalar::new(f, rad)
    }

    pub fn new(rational: ScalarQ, radicand: Rad) -> RadScalar {
        if rational.is_zero() {
            RadScalar::zero()
        } else {
            RadScalar { rational, radicand }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero()
    }

    pub fn mul(&self, o: &RadScalar) -> RadScalar {
        rad_mul(self, o)
    }

    /// Exact rational value at `s0`, when the radical is a perfect square there.
    pub fn eval_at(&self, s0: &Rat) -> Result<Rat> {
        let r = self.rational.eval_at(s0)?;
        if self.radicand.is_one() {
            return Ok(r);
        }
        let v = self.radicand.poly().eval(s0);
        match rat_sqrt(&v) {
            Some(root) => Ok(&r * &root),
            None => Err(Error::IrrationalValue(s0.to_string())),
        }
    }
}

/// Product of two normalized radicals, re-normalized.
pub fn rad_mul(a: &RadScalar, b: &RadScalar) -> RadScalar {
    if a.is_zero() || b.is_zero() {
        return RadScalar::zero();
    }
    let r = a.rational.mul(&b.rational);
    match (a.radicand.is_one(), b.radicand.is_one()) {
        (true, _) => RadScalar::new(r, b.radicand.clone()),
        (_, true) => RadScalar::new(r, a.radicand.clone()),
        _ => {
            let prod = ScalarQ::from_poly(a.radicand.poly().mul(&b.radicand.poly()));
            let (f, rad) = split_sqrt(&prod);
            RadScalar::new(r.mul(&f), rad)
        }
    }
}

impl fmt::Display for RadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_one() {
            write!(f, "{}", self.rational)
        } else {
            write!(f, "({})*sqrt({})", self.rational, self.radicand.poly())
        }
    }
}

/// Finite sum of radicals with distinct radicands, sorted by radicand.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Surd {
    terms: Vec<(Rad, ScalarQ)>,
}

impl Surd {
    pub fn zero() -> Surd {
        Surd { terms: Vec::new() }
    }

    pub fn one() -> Surd {
        Surd::from_scalar(ScalarQ::one())
    }

    pub fn from_scalar(s: ScalarQ) -> Surd {
        if s.is_zero() {
            Surd::zero()
        } else {
            Surd { terms: vec![(Rad::one(), s)] }
        }
    }

    pub fn from_rad(r: RadScalar) -> Surd {
        if r.is_zero() {
            Surd::zero()
        } else {
            Surd { terms: vec![(r.radicand, r.rational)] }
        }
    }

    pub fn int(n: i64) -> Surd {
        Surd::from_scalar(ScalarQ::int(n))
    }

    pub fn terms(&self) -> impl Iterator<Item = RadScalar> + '_ {
        self.terms.iter().map(|(r, s)| RadScalar { rational: s.clone(), radicand: r.clone() })
    }

    pub fn raw_terms(&self) -> &[(Rad, ScalarQ)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value as a plain `ScalarQ`, when no radical is present.
    pub fn as_scalar(&self) -> Option<ScalarQ> {
        match self.terms.as_slice() {
            [] => Some(ScalarQ::zero()),
            [(r, s)] if r.is_one() => Some(s.clone()),
            _ => None,
        }
    }

    /// The value as a single radical, when it is one.
    pub fn as_rad(&self) -> Option<RadScalar> {
        match self.terms.as_slice() {
            [] => Some(RadScalar::zero()),
            [(r, s)] => Some(RadScalar { rational: s.clone(), radicand: r.clone() }),
            _ => None,
        }
    }

    fn push_term(&mut self, rad: &Rad, s: ScalarQ) {
        if s.is_zero() {
            return;
        }
        match self.terms.binary_search_by(|(r, _)| r.cmp(rad)) {
            Ok(i) => {
                let v = self.terms[i].1.add(&s);
                if v.is_zero() {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = v;
                }
            }
            Err(i) => self.terms.insert(i, (rad.clone(), s)),
        }
    }

    pub fn add_assign(&mut self, o: &Surd) {
        for (r, s) in &o.terms {
            self.push_term(r, s.clone());
        }
    }

    pub fn add(&self, o: &Surd) -> Surd {
        if self.is_zero() {
            return o.clone();
        }
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn neg(&self) -> Surd {
        Surd { terms: self.terms.iter().map(|(r, s)| (r.clone(), s.neg())).collect() }
    }

    pub fn sub(&self, o: &Surd) -> Surd {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &ScalarQ) -> Surd {
        if k.is_zero() {
            return Surd::zero();
        }
        Surd { terms: self.terms.iter().map(|(r, s)| (r.clone(), s.mul(k))).collect() }
    }

    pub fn mul(&self, o: &Surd) -> Surd {
        if self.is_zero() || o.is_zero() {
            return Surd::zero();
        }
        if let [(r, s)] = self.terms.as_slice() {
            if r.is_one() {
                return o.scale(s);
            }
        }
        if let [(r, s)] = o.terms.as_slice() {
            if r.is_one() {
                return self.scale(s);
            }
        }
        let mut out = Surd::zero();
        for a in self.terms() {
            for b in o.terms() {
                let p = rad_mul(&a, &b);
                out.push_term(&p.radicand, p.rational);
            }
        }
        out
    }

    /// Exact value at `s0` when every radical evaluates rationally there.
    pub fn eval_at(&self, s0: &Rat) -> Result<Rat> {
        let mut acc = Rat::zero();
        for t in self.terms() {
            acc = &acc + &t.eval_at(s0)?;
        }
        Ok(acc)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms().map(|t| t.to_string()).collect::<Vec<_>>().join(" + ")
    }
}

impl From<ScalarQ> for Surd {
    fn from(s: ScalarQ) -> Surd {
        Surd::from_scalar(s)
    }
}

impl From<RadScalar> for Surd {
    fn from(r: RadScalar) -> Surd {
        Surd::from_rad(r)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_square_collapses() {
        let b = ScalarQ::laurent(0, &[1, 2, 1]);
        let r = RadScalar::sqrt(&b);
        let sq = rad_mul(&r, &r);
        assert!(sq.radicand.is_one());
        assert_eq!(sq.rational, b);
    }

    #[test]
    fn q_squared_root() {
        let r = RadScalar::sqrt(&ScalarQ::q_pow(2));
        assert!(r.radicand.is_one());
        assert_eq!(r.rational, ScalarQ::q());
    }

    #[test]
    fn constant_split() {
        let r = RadScalar::sqrt(&ScalarQ::ratio(8, 3));
        // sqrt(8/3) = 2 sqrt(6) / 3
        assert_eq!(r.rational, ScalarQ::ratio(2, 3));
        assert_eq!(r.radicand.poly(), Poly::from_ints(&[6]));
    }

    #[test]
    fn rational_function_radicand() {
        // sqrt((s+1)^3 / s) = (s+1)/s * sqrt(s (s+1))
        let x = ScalarQ::new(Poly::from_ints(&[1, 1]).pow(3), Poly::from_ints(&[0, 1])).unwrap();
        let r = RadScalar::sqrt(&x);
        assert_eq!(r.radicand.poly(), Poly::from_ints(&[0, 1, 1]));
        assert_eq!(r.rational, ScalarQ::new(Poly::from_ints(&[1, 1]), Poly::from_ints(&[0, 1])).unwrap());
    }

    #[test]
    fn surd_cancellation() {
        let a = Surd::from_rad(RadScalar::sqrt(&ScalarQ::int(2)));
        let z = a.sub(&a);
        assert!(z.is_zero());
        let two = a.mul(&a);
        assert_eq!(two.as_scalar(), Some(ScalarQ::int(2)));
    }
}
