//! The coordinate algebra of SU_q(2) in the normal-ordered basis
//! `a^i c^j c*^k` (or `a*^i c^j c*^k`), with its Hopf *-structure.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{ScalarQ, Surd};

/// `a^a c^c c*^cs`; a negative `a` stands for `a*^{-a}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial {
    pub a: i32,
    pub c: u32,
    pub cs: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, c: 0, cs: 0 };

    pub fn new(a: i32, c: u32, cs: u32) -> Monomial {
        Monomial { a, c, cs }
    }

    /// `(#a* + #c*) - (#a + #c)`
    pub fn winding(&self) -> i64 {
        -(self.a as i64) - self.c as i64 + self.cs as i64
    }

    pub fn degree(&self) -> u32 {
        self.a.unsigned_abs() + self.c + self.cs
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        let pw = |name: &str, e: u32| if e == 1 { name.to_string() } else { format!("{}^{}", name, e) };
        if self.a > 0 {
            parts.push(pw("a", self.a as u32));
        } else if self.a < 0 {
            parts.push(pw("a*", self.a.unsigned_abs()));
        }
        if self.c > 0 {
            parts.push(pw("c", self.c));
        }
        if self.cs > 0 {
            parts.push(pw("c*", self.cs));
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// The four letters of a word in the generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    A,
    AStar,
    C,
    CStar,
}

impl Letter {
    pub fn monomial(self) -> Monomial {
        match self {
            Letter::A => Monomial::new(1, 0, 0),
            Letter::AStar => Monomial::new(-1, 0, 0),
            Letter::C => Monomial::new(0, 1, 0),
            Letter::CStar => Monomial::new(0, 0, 1),
        }
    }
}

type Expansion = Rc<Vec<(i32, u32, ScalarQ)>>;

thread_local! {
    static APOW: RefCell<HashMap<(i32, i32), Expansion>> = RefCell::new(HashMap::new());
}

/// `a^{x1} a^{x2} = sum coeff * a^x (c c*)^k` as triples `(x, k, coeff)`.
fn a_product(x1: i32, x2: i32) -> Expansion {
    if x1 == 0 || x2 == 0 || (x1 > 0) == (x2 > 0) {
        return Rc::new(vec![(x1 + x2, 0, ScalarQ::one())]);
    }
    if let Some(e) = APOW.with(|m| m.borrow().get(&(x1, x2)).cloned()) {
        return e;
    }
    // a^i a*^m = a^{i-1} a*^{m-1} (1 - q^{2m} cc*)
    // a*^i a^m = a*^{i-1} a^{m-1} (1 - q^{-2(m-1)} cc*)
    let (inner, factor) = if x1 > 0 {
        (a_product(x1 - 1, x2 + 1), ScalarQ::q_pow(-2 * x2 as i64).neg())
    } else {
        (a_product(x1 + 1, x2 - 1), ScalarQ::q_pow(-2 * (x2 as i64 - 1)).neg())
    };
    let mut acc: BTreeMap<(i32, u32), ScalarQ> = BTreeMap::new();
    for (x, k, c) in inner.iter() {
        add_into(&mut acc, (*x, *k), c.clone());
        add_into(&mut acc, (*x, k + 1), c.mul(&factor));
    }
    let out: Expansion = Rc::new(acc.into_iter().map(|((x, k), c)| (x, k, c)).collect());
    APOW.with(|m| m.borrow_mut().insert((x1, x2), out.clone()));
    out
}

fn add_into<K: Ord>(acc: &mut BTreeMap<K, ScalarQ>, k: K, v: ScalarQ) {
    if v.is_zero() {
        return;
    }
    match acc.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(v);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add(&v);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Product of two basis monomials in normal form.
pub fn mono_mul(m1: &Monomial, m2: &Monomial) -> Vec<(Monomial, ScalarQ)> {
    // move c^j c*^k of m1 past the a-block of m2
    let jk = (m1.c + m1.cs) as i64;
    let qexp = if m2.a > 0 { -(m2.a as i64) * jk } else { (-m2.a as i64) * jk };
    let shift = ScalarQ::q_pow(qexp);
    a_product(m1.a, m2.a)
        .iter()
        .map(|(x, k, c)| {
            let m = Monomial::new(*x, m1.c + m2.c + k, m1.cs + m2.cs + k);
            let coeff = if qexp == 0 { c.clone() } else { c.mul(&shift) };
            (m, coeff)
        })
        .collect()
}

/// Finite linear combination of normal-ordered monomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct AlgElem {
    terms: BTreeMap<Monomial, Surd>,
}

impl AlgElem {
    pub fn zero() -> AlgElem {
        AlgElem::default()
    }

    pub fn one() -> AlgElem {
        AlgElem::monomial(Monomial::ONE)
    }

    pub fn monomial(m: Monomial) -> AlgElem {
        AlgElem::term(m, Surd::one())
    }

    pub fn term(m: Monomial, c: Surd) -> AlgElem {
        let mut x = AlgElem::zero();
        x.add_term(m, c);
        x
    }

    pub fn scalar(c: Surd) -> AlgElem {
        AlgElem::term(Monomial::ONE, c)
    }

    pub fn from_scalar(c: ScalarQ) -> AlgElem {
        AlgElem::scalar(Surd::from_scalar(c))
    }

    pub fn a() -> AlgElem {
        AlgElem::monomial(Letter::A.monomial())
    }

    pub fn a_star() -> AlgElem {
        AlgElem::monomial(Letter::AStar.monomial())
    }

    pub fn c() -> AlgElem {
        AlgElem::monomial(Letter::C.monomial())
    }

    pub fn c_star() -> AlgElem {
        AlgElem::monomial(Letter::CStar.monomial())
    }

    pub fn letter(l: Letter) -> AlgElem {
        AlgElem::monomial(l.monomial())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Surd)>>(it: I) -> AlgElem {
        let mut x = AlgElem::zero();
        for (m, c) in it {
            x.add_term(m, c);
        }
        x
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Surd)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Surd {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The scalar value when the element is a multiple of 1.
    pub fn as_scalar(&self) -> Option<Surd> {
        match self.terms.len() {
            0 => Some(Surd::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Surd) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, o: &AlgElem) {
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }

    pub fn add(&self, o: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn neg(&self) -> AlgElem {
        AlgElem { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn sub(&self, o: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.neg());
        }
        out
    }

    pub fn scale(&self, k: &ScalarQ) -> AlgElem {
        if k.is_zero() {
            return AlgElem::zero();
        }
        if k.is_one() {
            return self.clone();
        }
        AlgElem { terms: self.terms.iter().map(|(m, c)| (*m, c.scale(k))).collect() }
    }

    pub fn scale_surd(&self, k: &Surd) -> AlgElem {
        if let Some(s) = k.as_scalar() {
            return self.scale(&s);
        }
        AlgElem::from_terms(self.terms.iter().map(|(m, c)| (*m, c.mul(k))))
    }

    pub fn mul(&self, o: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let c = c1.mul(c2);
                for (m, k) in mono_mul(m1, m2) {
                    out.add_term(m, c.scale(&k));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> AlgElem {
        let mut acc = AlgElem::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Apply `f` to every monomial and collect the results linearly.
    pub fn map_linear<F>(&self, mut f: F) -> AlgElem
    where
        F: FnMut(&Monomial) -> AlgElem,
    {
        let mut out = AlgElem::zero();
        for (m, c) in &self.terms {
            let img = f(m);
            for (mm, cc) in img.terms {
                out.add_term(mm, cc.mul(c));
            }
        }
        out
    }

    pub fn star(&self) -> AlgElem {
        let mut out = AlgElem::zero();
        for (m, c) in &self.terms {
            let (i, j, k) = (m.a, m.c as i64, m.cs as i64);
            // (a^i c^j c*^k)* = c^k c*^j a*^i = q^{i(j+k)} a*^i c^k c*^j, and mirror for a*
            let shift = ScalarQ::q_pow(i as i64 * (j + k));
            out.add_term(Monomial::new(-i, m.cs, m.c), c.scale(&shift));
        }
        out
    }

    pub fn counit(&self) -> Surd {
        let mut acc = Surd::zero();
        for (m, c) in &self.terms {
            if m.c == 0 && m.cs == 0 {
                acc.add_assign(c);
            }
        }
        acc
    }

    pub fn antipode(&self) -> AlgElem {
        self.map_linear(|m| {
            // S(a^i c^j c*^k) = S(c*)^k S(c)^j S(a)^i
            let sign = if (m.c + m.cs) % 2 == 0 { 1 } else { -1 };
            let k = ScalarQ::q_pow(m.c as i64 - m.cs as i64).mul(&ScalarQ::int(sign));
            let left = AlgElem::term(Monomial::new(0, m.c, m.cs), Surd::from_scalar(k));
            left.mul(&AlgElem::monomial(Monomial::new(-m.a, 0, 0)))
        })
    }

    pub fn coproduct(&self) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (m, c) in &self.terms {
            let d = mono_coproduct(m);
            for ((l, r), k) in d.terms.iter() {
                out.add_term(*l, *r, k.mul(c));
            }
        }
        out
    }

    pub fn winding_components(&self) -> BTreeMap<i64, AlgElem> {
        let mut out: BTreeMap<i64, AlgElem> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.winding()).or_default().add_term(*m, c.clone());
        }
        out
    }

    /// Winding numbers present, sorted.
    pub fn windings(&self) -> Vec<i64> {
        self.winding_components().into_keys().collect()
    }

    /// The winding of a homogeneous element; zero counts as homogeneous of any winding.
    pub fn winding(&self) -> Result<Option<i64>> {
        let w = self.windings();
        match w.len() {
            0 => Ok(None),
            1 => Ok(Some(w[0])),
            _ => Err(Error::MixedWinding(w)),
        }
    }

    pub fn is_in(&self, n: i64) -> bool {
        self.terms.keys().all(|m| m.winding() == n)
    }

    pub fn require_winding(&self, n: i64) -> Result<()> {
        if self.is_in(n) {
            Ok(())
        } else {
            Err(Error::WrongWinding { expected: n, found: self.windings() })
        }
    }

    pub fn require_coinvariant(&self) -> Result<()> {
        if self.is_in(0) {
            Ok(())
        } else {
            Err(Error::NotCoinvariant(self.windings()))
        }
    }

    pub fn haar(&self) -> Surd {
        let mut acc = Surd::zero();
        for (m, c) in &self.terms {
            if m.a == 0 && m.c == m.cs {
                acc.add_assign(&c.scale(&haar_cc(m.c)));
            }
        }
        acc
    }

    pub fn eval_coeffs<F, T>(&self, f: F) -> Vec<(Monomial, T)>
    where
        F: Fn(&Surd) -> T,
    {
        self.terms.iter().map(|(m, c)| (*m, f(c))).collect()
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            for (r, s) in c.raw_terms() {
                out.push(TermJson {
                    a: m.a,
                    c: m.c,
                    cstar: m.cs,
                    coeff_num: s.num().render_q(),
                    coeff_den: s.den().render_q(),
                    radicand_num: r.poly().render_q(),
                    radicand_den: "1".into(),
                });
            }
        }
        out
    }
}

/// `h((cc*)^k) = 1/(1 + q^2 + ... + q^{2k})`
pub fn haar_cc(k: u32) -> ScalarQ {
    let mut den = ScalarQ::zero();
    for i in 0..=k as i64 {
        den = den.add(&ScalarQ::q_pow(2 * i));
    }
    den.inv().expect("nonzero")
}

/// Product of generators, reduced to normal form.
pub fn normalize(word: &[Letter]) -> AlgElem {
    let mut acc = AlgElem::one();
    for l in word {
        acc = acc.mul(&AlgElem::letter(*l));
    }
    acc
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub a: i32,
    pub c: u32,
    pub cstar: u32,
    pub coeff_num: String,
    pub coeff_den: String,
    pub radicand_num: String,
    pub radicand_den: String,
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "({})", c)?;
            } else if c.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "({})*{}", c, m)?;
            }
        }
        Ok(())
    }
}

macro_rules! alg_binop {
    ($tr:ident, $m:ident) => {
        impl<'a> $tr<&'a AlgElem> for &'a AlgElem {
            type Output = AlgElem;
            fn $m(self, o: &AlgElem) -> AlgElem {
                AlgElem::$m(self, o)
            }
        }
    };
}
alg_binop!(Add, add);
alg_binop!(Sub, sub);
alg_binop!(Mul, mul);

impl Neg for &AlgElem {
    type Output = AlgElem;
    fn neg(self) -> AlgElem {
        AlgElem::neg(self)
    }
}

/// Elements of `A ⊗ A` as maps `(left, right) -> coefficient`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Tensor2 {
    terms: BTreeMap<(Monomial, Monomial), Surd>,
}

impl Tensor2 {
    pub fn zero() -> Tensor2 {
        Tensor2::default()
    }

    pub fn pure(x: &AlgElem, y: &AlgElem) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                out.add_term(*m1, *m2, c1.mul(c2));
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Surd)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, l: Monomial, r: Monomial, c: Surd) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((l, r)).or_default();
        e.add_assign(&c);
        if e.is_zero() {
            self.terms.remove(&(l, r));
        }
    }

    pub fn add(&self, o: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for ((l, r), c) in &o.terms {
            out.add_term(*l, *r, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for ((l, r), c) in &o.terms {
            out.add_term(*l, *r, c.neg());
        }
        out
    }

    /// Factorwise product in `A ⊗ A`.
    pub fn mul(&self, o: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &o.terms {
                let c = c1.mul(c2);
                let ls = mono_mul(l1, l2);
                let rs = mono_mul(r1, r2);
                for (l, kl) in &ls {
                    for (r, kr) in &rs {
                        out.add_term(*l, *r, c.scale(&kl.mul(kr)));
                    }
                }
            }
        }
        out
    }

    /// `(f ⊗ g)` followed by multiplication `m`.
    pub fn contract<F, G>(&self, mut f: F, mut g: G) -> AlgElem
    where
        F: FnMut(&AlgElem) -> AlgElem,
        G: FnMut(&AlgElem) -> AlgElem,
    {
        let mut out = AlgElem::zero();
        for ((l, r), c) in &self.terms {
            let x = f(&AlgElem::monomial(*l)).mul(&g(&AlgElem::monomial(*r)));
            out.add_assign(&x.scale_surd(c));
        }
        out
    }

    pub fn map_left<F>(&self, mut f: F) -> Tensor2
    where
        F: FnMut(&AlgElem) -> AlgElem,
    {
        let mut out = Tensor2::zero();
        for ((l, r), c) in &self.terms {
            for (m, k) in f(&AlgElem::monomial(*l)).terms() {
                out.add_term(*m, *r, c.mul(k));
            }
        }
        out
    }

    pub fn map_right<F>(&self, mut f: F) -> Tensor2
    where
        F: FnMut(&AlgElem) -> AlgElem,
    {
        let mut out = Tensor2::zero();
        for ((l, r), c) in &self.terms {
            for (m, k) in f(&AlgElem::monomial(*r)).terms() {
                out.add_term(*l, *m, c.mul(k));
            }
        }
        out
    }

    /// `(ε ⊗ id)`
    pub fn counit_left(&self) -> AlgElem {
        let mut out = AlgElem::zero();
        for ((l, r), c) in &self.terms {
            if l.c == 0 && l.cs == 0 {
                out.add_term(*r, c.clone());
            }
        }
        out
    }

    /// `(id ⊗ ε)`
    pub fn counit_right(&self) -> AlgElem {
        let mut out = AlgElem::zero();
        for ((l, r), c) in &self.terms {
            if r.c == 0 && r.cs == 0 {
                out.add_term(*l, c.clone());
            }
        }
        out
    }
}

type Tensor3 = BTreeMap<(Monomial, Monomial, Monomial), Surd>;

fn push3(t: &mut Tensor3, k: (Monomial, Monomial, Monomial), v: Surd) {
    let e = t.entry(k).or_insert_with(Surd::zero);
    e.add_assign(&v);
    if e.is_zero() {
        t.remove(&k);
    }
}

/// `(Δ ⊗ id)Δx = (id ⊗ Δ)Δx`
pub fn coassociative_on(x: &AlgElem) -> bool {
    let dx = x.coproduct();
    let (mut left, mut right) = (Tensor3::new(), Tensor3::new());
    for ((l, r), c) in dx.terms() {
        for ((l1, l2), k) in mono_coproduct(l).terms() {
            push3(&mut left, (*l1, *l2, *r), c.mul(k));
        }
        for ((r1, r2), k) in mono_coproduct(r).terms() {
            push3(&mut right, (*l, *r1, *r2), c.mul(k));
        }
    }
    left == right
}

thread_local! {
    static DPOW: RefCell<HashMap<(Letter, u32), Rc<Tensor2>>> = RefCell::new(HashMap::new());
}

fn letter_coproduct(l: Letter) -> Tensor2 {
    let (a, ast, c, cs) = (AlgElem::a(), AlgElem::a_star(), AlgElem::c(), AlgElem::c_star());
    let mq = AlgElem::from_scalar(ScalarQ::q().neg());
    match l {
        Letter::A => Tensor2::pure(&a, &a).add(&Tensor2::pure(&mq.mul(&cs), &c)),
        Letter::AStar => Tensor2::pure(&ast, &ast).add(&Tensor2::pure(&mq.mul(&c), &cs)),
        Letter::C => Tensor2::pure(&c, &a).add(&Tensor2::pure(&ast, &c)),
        Letter::CStar => Tensor2::pure(&cs, &ast).add(&Tensor2::pure(&a, &cs)),
    }
}

fn letter_power_coproduct(l: Letter, e: u32) -> Rc<Tensor2> {
    if let Some(t) = DPOW.with(|m| m.borrow().get(&(l, e)).cloned()) {
        return t;
    }
    let t = if e == 0 {
        Tensor2::pure(&AlgElem::one(), &AlgElem::one())
    } else {
        letter_power_coproduct(l, e - 1).mul(&letter_coproduct(l))
    };
    let t = Rc::new(t);
    DPOW.with(|m| m.borrow_mut().insert((l, e), t.clone()));
    t
}

fn mono_coproduct(m: &Monomial) -> Tensor2 {
    let a = if m.a >= 0 {
        letter_power_coproduct(Letter::A, m.a as u32)
    } else {
        letter_power_coproduct(Letter::AStar, m.a.unsigned_abs())
    };
    let c = letter_power_coproduct(Letter::C, m.c);
    let cs = letter_power_coproduct(Letter::CStar, m.cs);
    a.mul(&c).mul(&cs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> ScalarQ {
        ScalarQ::q_pow(k)
    }

    #[test]
    fn relations() {
        let (a, ast, c, cs) = (AlgElem::a(), AlgElem::a_star(), AlgElem::c(), AlgElem::c_star());
        let cc = AlgElem::monomial(Monomial::new(0, 1, 1));
        assert_eq!(a.mul(&c), c.mul(&a).scale(&q(1)));
        assert_eq!(a.mul(&cs), cs.mul(&a).scale(&q(1)));
        assert_eq!(c.mul(&cs), cs.mul(&c));
        assert_eq!(ast.mul(&a).add(&cs.mul(&c)), AlgElem::one());
        assert_eq!(a.mul(&ast).add(&cc.scale(&q(2))), AlgElem::one());
    }

    #[test]
    fn star_of_ac() {
        let ac = AlgElem::a().mul(&AlgElem::c());
        let expect = AlgElem::a_star().mul(&AlgElem::c_star()).scale(&q(1));
        assert_eq!(ac.star(), expect);
    }

    #[test]
    fn haar_values() {
        assert!(AlgElem::one().haar().is_one());
        let cc = AlgElem::monomial(Monomial::new(0, 1, 1));
        assert_eq!(cc.haar().as_scalar().unwrap(), ScalarQ::one().add(&q(2)).inv().unwrap());
        assert!(AlgElem::a().haar().is_zero());
    }
}
