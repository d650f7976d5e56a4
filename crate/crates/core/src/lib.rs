pub mod algebra;
pub mod bundle;
pub mod classical;
pub mod config;
pub mod error;
pub mod forms;
pub mod gauge;
pub mod hodge;
pub mod random;
pub mod scalar;
pub mod sphere;
pub mod uq;

pub use algebra::{normalize, AlgElem, Letter, Monomial, Tensor2};
pub use config::{cap_from_env, winding_cap, DEFAULT_CAP};
pub use error::{Error, Result};
pub use forms::Form;
pub use scalar::{qnum, qnum_half, z_factor, Poly, Rad, RadScalar, Rat, ScalarQ, Surd};
pub use uq::{act_left, act_right, Gen, UqWord};
