use alloc::string::String;

/// Errors reported by the kernel.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not coprime")]
    NotCoprime,
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("division by zero tail")]
    DivisionByZeroTail,
    #[error("invalid quadratic irrational: {0}")]
    InvalidSurd(String),
    #[error("not in SL2(Z): determinant is {0}")]
    NotInSl2(String),
    #[error("primitive decomposition defined here only for hyperbolic A")]
    NotHyperbolic,
    #[error("zero vector")]
    ZeroVector,
    #[error("not primitive: ({0}, {1})")]
    NotPrimitive(i64, i64),
    #[error("invalid cone: {0}")]
    InvalidCone(String),
    #[error("not interior to cone")]
    NotInteriorToCone,
    #[error("window too small")]
    WindowTooSmall,
    #[error("insufficient dual-sail depth: {0}")]
    InsufficientDepth(String),
    #[error("coordinate overflow")]
    Overflow,
    #[error("subset not \u{227c}-sorted")]
    SubsetNotSorted,
    #[error("Euler class target must be an even vector")]
    OddTarget,
    #[error("enumeration guard: {size} points exceed the cap of {cap}")]
    EnumerationGuard { size: usize, cap: usize },
    #[error("degenerate boundary slope")]
    DegenerateBoundarySlope,
    #[error("invalid suspension: {0}")]
    InvalidSuspension(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
}
