use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at s = {0}")]
    Pole(String),
    #[error("value has a pole at q = 1")]
    PoleAtOne,
    #[error("radical does not evaluate to a rational at s = {0}")]
    IrrationalValue(String),
    #[error("index {value} exceeds cap {cap}")]
    CapExceeded { value: i64, cap: i64 },
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("element is not homogeneous of winding {expected} (found components {found:?})")]
    WrongWinding { expected: i64, found: Vec<i64> },
    #[error("element mixes winding numbers {0:?}")]
    MixedWinding(Vec<i64>),
    #[error("element is not in A(S^2_q) (windings {0:?})")]
    NotCoinvariant(Vec<i64>),
    #[error("form degree {0} exceeds the top degree")]
    DegreeOverflow(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("expected a form of degree {expected}, got degree {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("form is not horizontal")]
    NotHorizontal,
    #[error("form has coaction charge {found:?}, expected {expected}")]
    WrongCharge { expected: i64, found: Vec<i64> },
    #[error("row vector is not fixed by the projector")]
    NotInImage,
    #[error("invalid parameter: {0}")]
    BadParameter(&'static str),
    #[error("QHOPF_CAP must be a nonnegative integer, got {0:?}")]
    BadCap(String),
    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
    #[error("unknown name {0:?}")]
    Unknown(String),
}

pub type Result<T> = std::result::Result<T, Error>;
