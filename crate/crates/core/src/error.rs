use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grid of {samples} samples cannot resolve a series of order {order} (need at least {})", 2 * .order + 1)]
    GridTooSmall { samples: usize, order: usize },
    #[error("sample count {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("radius {0} is outside [0, 1)")]
    InvalidRadius(f64),
    #[error("disk grid has no radii")]
    EmptyRadii,
    #[error("point {0} is not inside the open unit disk")]
    OutsideDisk(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("boundary samples are not real (max imaginary part {0:e})")]
    NonRealSamples(f64),
    #[error("log-modulus too large to exponentiate (max {0})")]
    Overflow(f64),
    #[error("symbol exceeds the unit ball on the grid (max modulus {0})")]
    NotContractive(f64),
    #[error("symbol is an extreme point: log-integral {margin} below the extremality threshold")]
    ExtremePoint { margin: f64 },
    #[error("supplied inner factor is inconsistent with the quotient (residual {residual:e})")]
    InconsistentInner { residual: f64 },
    #[error("system is ill-conditioned (condition estimate {estimate:e})")]
    IllConditioned { estimate: f64 },
    #[error("truncation window is empty (dim {dim}, symbol degrees {degrees})")]
    WindowEmpty { dim: usize, degrees: usize },
    #[error("rational denominator vanishes on the closed unit disk")]
    PoleOnDisk,
    #[error("symbol is not a polynomial")]
    NotPolynomial,
}
