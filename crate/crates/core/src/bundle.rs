//! Line bundles over the sphere: kets, projectors, sections, and the
//! Hopf–Galois witness.

use std::collections::BTreeMap;

use crate::algebra::{AlgElem, Tensor2};
use crate::config::{check_cap, winding_cap};
use crate::error::{Error, Result};
use crate::forms::Form;
use crate::scalar::{RadScalar, ScalarQ, Surd};

pub type Matrix = Vec<Vec<AlgElem>>;
pub type FormMatrix = Vec<Vec<Form>>;

/// `β_{n,μ}` for `n ≥ 0`.
pub fn beta_coeff(n: i64, mu: i64) -> ScalarQ {
    let mut b = ScalarQ::q_pow(2 * mu);
    for j in 0..mu {
        let top = ScalarQ::one().sub(&ScalarQ::q_pow(-2 * (n - j)));
        let bot = ScalarQ::one().sub(&ScalarQ::q_pow(-2 * (j + 1)));
        b = b.mul(&top.div(&bot).expect("nonzero"));
    }
    b
}

/// `α_{n,μ}` for `n ≤ 0`.
pub fn alpha_coeff(n: i64, mu: i64) -> ScalarQ {
    let m = n.abs();
    let mut a = ScalarQ::one();
    for j in 0..(m - mu) {
        let top = ScalarQ::one().sub(&ScalarQ::q_pow(2 * (m - j)));
        let bot = ScalarQ::one().sub(&ScalarQ::q_pow(2 * (j + 1)));
        a = a.mul(&top.div(&bot).expect("nonzero"));
    }
    a
}

/// Column vector `|Ψ⁽ⁿ⁾⟩` with entries in `L_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ket {
    pub n: i64,
    pub comps: Vec<AlgElem>,
}

pub fn make_ket(n: i64) -> Result<Ket> {
    make_ket_with_cap(n, winding_cap())
}

pub fn make_ket_with_cap(n: i64, cap: i64) -> Result<Ket> {
    check_cap(n, cap)?;
    let m = n.abs();
    let mut comps = Vec::with_capacity(m as usize + 1);
    for mu in 0..=m {
        let elem = if n >= 0 {
            let root = Surd::from_rad(RadScalar::sqrt(&beta_coeff(n, mu)));
            AlgElem::c_star().pow(mu as u32).mul(&AlgElem::a_star().pow((m - mu) as u32)).scale_surd(&root)
        } else {
            let root = Surd::from_rad(RadScalar::sqrt(&alpha_coeff(n, mu)));
            AlgElem::c().pow((m - mu) as u32).mul(&AlgElem::a().pow(mu as u32)).scale_surd(&root)
        };
        comps.push(elem);
    }
    Ok(Ket { n, comps })
}

impl Ket {
    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    /// Row vector `⟨Ψ|` of starred components.
    pub fn bra(&self) -> Vec<AlgElem> {
        self.comps.iter().map(AlgElem::star).collect()
    }

    /// `⟨Ψ|Ψ⟩ = Σ Ψ_μ* Ψ_μ`
    pub fn norm(&self) -> AlgElem {
        let mut s = AlgElem::zero();
        for p in &self.comps {
            s.add_assign(&p.star().mul(p));
        }
        s
    }

    /// `p = |Ψ⟩⟨Ψ|`
    pub fn projector(&self) -> Matrix {
        let bra = self.bra();
        self.comps.iter().map(|k| bra.iter().map(|b| k.mul(b)).collect()).collect()
    }
}

pub fn make_projector(n: i64) -> Result<Matrix> {
    Ok(make_ket(n)?.projector())
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let (r, k, c) = (a.len(), b.len(), b.first().map(Vec::len).unwrap_or(0));
    let mut out = vec![vec![AlgElem::zero(); c]; r];
    for i in 0..r {
        for j in 0..c {
            for l in 0..k {
                out[i][j].add_assign(&a[i][l].mul(&b[l][j]));
            }
        }
    }
    out
}

/// Conjugate transpose.
pub fn dagger(a: &Matrix) -> Matrix {
    let c = a.first().map(Vec::len).unwrap_or(0);
    (0..c).map(|j| a.iter().map(|row| row[j].star()).collect()).collect()
}

/// Entrywise `d`.
pub fn d_matrix(a: &Matrix) -> FormMatrix {
    a.iter().map(|row| row.iter().map(|x| Form::function(x.clone()).d()).collect()).collect()
}

/// Matrix product with wedge on entries.
pub fn form_matmul(a: &FormMatrix, b: &FormMatrix) -> FormMatrix {
    let (r, k, c) = (a.len(), b.len(), b.first().map(Vec::len).unwrap_or(0));
    let mut out = vec![vec![Form::zero(); c]; r];
    for i in 0..r {
        for j in 0..c {
            for l in 0..k {
                out[i][j] = out[i][j].add(&a[i][l].wedge_unchecked(&b[l][j]));
            }
        }
    }
    out
}

/// Form matrix times function matrix.
pub fn form_mul_fn(a: &FormMatrix, b: &Matrix) -> FormMatrix {
    let (r, k, c) = (a.len(), b.len(), b.first().map(Vec::len).unwrap_or(0));
    let mut out = vec![vec![Form::zero(); c]; r];
    for i in 0..r {
        for j in 0..c {
            for l in 0..k {
                out[i][j] = out[i][j].add(&a[i][l].right_mul(&b[l][j]));
            }
        }
    }
    out
}

/// Function matrix times form matrix.
pub fn fn_mul_form(a: &Matrix, b: &FormMatrix) -> FormMatrix {
    let (r, k, c) = (a.len(), b.len(), b.first().map(Vec::len).unwrap_or(0));
    let mut out = vec![vec![Form::zero(); c]; r];
    for i in 0..r {
        for j in 0..c {
            for l in 0..k {
                out[i][j] = out[i][j].add(&b[l][j].left_mul(&a[i][l]));
            }
        }
    }
    out
}

/// `⟨σ_φ| = φ ⟨Ψ⁽ⁿ⁾|`
pub fn section_of(phi: &AlgElem, ket: &Ket) -> Result<Vec<AlgElem>> {
    phi.require_winding(ket.n)?;
    Ok(ket.bra().iter().map(|b| phi.mul(b)).collect())
}

/// `φ = ⟨σ|Ψ⁽ⁿ⁾⟩`, after checking `σ p = σ`.
pub fn equivariant_of(sigma: &[AlgElem], ket: &Ket) -> Result<AlgElem> {
    if sigma.len() != ket.len() {
        return Err(Error::InvalidIndex(format!("row of length {} for n = {}", sigma.len(), ket.n)));
    }
    let p = ket.projector();
    let row = vec![sigma.to_vec()];
    if matmul(&row, &p)[0] != sigma {
        return Err(Error::NotInImage);
    }
    let mut phi = AlgElem::zero();
    for (s, k) in sigma.iter().zip(&ket.comps) {
        phi.add_assign(&s.mul(k));
    }
    Ok(phi)
}

/// Form version: `φ ∈ L_n^{(k)}` to `φ ⟨Ψ|`.
pub fn form_section_of(phi: &Form, ket: &Ket) -> Result<Vec<Form>> {
    phi.require_equivariant(ket.n)?;
    Ok(ket.bra().iter().map(|b| phi.right_mul(b)).collect())
}

pub fn form_equivariant_of(sigma: &[Form], ket: &Ket) -> Result<Form> {
    if sigma.len() != ket.len() {
        return Err(Error::InvalidIndex(format!("row of length {} for n = {}", sigma.len(), ket.n)));
    }
    let p = ket.projector();
    let sp = form_mul_fn(&vec![sigma.to_vec()], &p);
    if sp[0] != sigma {
        return Err(Error::NotInImage);
    }
    let mut phi = Form::zero();
    for (s, k) in sigma.iter().zip(&ket.comps) {
        phi = phi.add(&s.right_mul(k));
    }
    Ok(phi)
}

/// `{σ; σ′} = Σ σ_μ σ′_μ*`
pub fn hermitian(sigma: &[AlgElem], sigma2: &[AlgElem]) -> AlgElem {
    let mut h = AlgElem::zero();
    for (s, t) in sigma.iter().zip(sigma2) {
        h.add_assign(&s.mul(&t.star()));
    }
    h
}

/// Element of `A ⊗ A(U(1))`, keyed by the power of `z`.
pub type ZTensor = BTreeMap<i64, AlgElem>;

/// `χ(x′ ⊗ x) = Σ_k x′ x_k ⊗ z^{-k}` over winding components `x_k`.
pub fn canonical_map(t: &Tensor2) -> ZTensor {
    let mut out: ZTensor = BTreeMap::new();
    for ((l, r), c) in t.terms() {
        let prod = AlgElem::term(*l, c.clone()).mul(&AlgElem::monomial(*r));
        let slot = out.entry(-r.winding()).or_default();
        slot.add_assign(&prod);
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Result of the constructive Hopf–Galois check for one `n`.
#[derive(Clone, Debug)]
pub struct GaloisWitness {
    pub n: i64,
    pub gamma: Tensor2,
    pub in_kernel: bool,
    pub image: ZTensor,
    pub expected: ZTensor,
}

impl GaloisWitness {
    pub fn holds(&self) -> bool {
        self.in_kernel && self.image == self.expected
    }
}

/// `γ = Σ_μ Ψ^{(-n)}_μ* ⊗ Ψ^{(-n)}_μ - 1⊗1`, expected `χ(γ) = 1⊗(zⁿ - 1)`.
pub fn galois_witness(n: i64) -> Result<GaloisWitness> {
    galois_witness_with_cap(n, winding_cap())
}

pub fn galois_witness_with_cap(n: i64, cap: i64) -> Result<GaloisWitness> {
    let ket = make_ket_with_cap(-n, cap)?;
    let mut gamma = Tensor2::zero();
    for psi in &ket.comps {
        gamma = gamma.add(&Tensor2::pure(&psi.star(), psi));
    }
    gamma = gamma.sub(&Tensor2::pure(&AlgElem::one(), &AlgElem::one()));
    let in_kernel = gamma.contract(|x| x.clone(), |y| y.clone()).is_zero();
    let image = canonical_map(&gamma);
    let mut expected: ZTensor = BTreeMap::new();
    if n != 0 {
        expected.insert(n, AlgElem::one());
        expected.insert(0, AlgElem::one().neg());
    }
    Ok(GaloisWitness { n, gamma, in_kernel, image, expected })
}
