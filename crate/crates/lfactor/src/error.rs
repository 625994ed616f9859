use thiserror::Error;

/// Rejection reasons for discrete-series tail parameters, checked in a fixed
/// order: strict decrease, then parity, then the -1 floor, then even length.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamViolation {
    #[error("segment lengths must strictly decrease: r[{index}] = {value} is not below r[{}] = {previous}", index - 1)]
    NotStrictlyDecreasing { index: usize, value: i64, previous: i64 },
    #[error("segment lengths must share parity: r[{index}] = {value} differs from r[0] = {first}")]
    ParityMismatch { index: usize, value: i64, first: i64 },
    #[error("segment length r[{index}] = {value} is below -1")]
    BelowFloor { index: usize, value: i64 },
    #[error("segment count {0} is odd; lengths come in pairs")]
    OddCount(usize),
}

/// Errors surfaced by the factor calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid tail parameter: {0}")]
    Param(#[from] ParamViolation),
    #[error("the s-coefficient of an L-factor argument must be nonzero")]
    ZeroCoeff,
    #[error("shift {0} is not a multiple of 1/4")]
    ShiftGranularity(String),
    #[error("{name} = {value} is out of range (minimum {min})")]
    Rank { name: &'static str, value: i64, min: i64 },
    #[error("segment multiplicity {0} is below -1")]
    SegmentRange(i64),
    #[error("composite kernel {0} where an atomic factor is required")]
    NotAtomic(String),
    #[error("{way} requires {requirement}")]
    WayDomain { way: &'static str, requirement: String },
    #[error("unknown decomposition way `{0}`")]
    UnknownWay(String),
}
