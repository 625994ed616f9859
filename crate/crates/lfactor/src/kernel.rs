//! Kernel symbols distinguishing the L-factor families.
//!
//! Atomic kernels (rho, rho^-, tau x sigma, tau x tau) are the irreducible
//! symbols of the calculus; composite kernels carry Speh ranks or a
//! discrete-series tail and expand to atoms through the rewrite rules in
//! `expand`. Two factors denote the same function exactly when they are
//! structurally equal after canonicalization, which is why the constructors
//! here normalize rank-one and diagonal degenerations eagerly.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, ParamViolation};

/// Which of the paired twisted kernels a factor refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Behaviour of the residual tau x sigma factor when the anisotropic kernel
/// degenerates: `Standard` reads it as a standard (GL) factor and `Trivial`
/// drops it entirely; `Generic` keeps the honest tensor factor.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaTail {
    #[default]
    Generic,
    Standard,
    Trivial,
}

impl fmt::Display for SigmaTail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SigmaTail::Generic => "generic",
            SigmaTail::Standard => "standard",
            SigmaTail::Trivial => "trivial",
        })
    }
}

/// Validated tail datum: an even count of segment lengths, strictly
/// decreasing, all of one parity, none below -1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DiscreteSeriesParam {
    #[serde(rename = "r")]
    segments: Vec<i64>,
    #[serde(rename = "sigma")]
    tail: SigmaTail,
}

impl DiscreteSeriesParam {
    pub fn new(segments: Vec<i64>, tail: SigmaTail) -> Result<Self, ParamViolation> {
        for (i, w) in segments.windows(2).enumerate() {
            if w[1] >= w[0] {
                return Err(ParamViolation::NotStrictlyDecreasing {
                    index: i + 1,
                    value: w[1],
                    previous: w[0],
                });
            }
        }
        if let Some(&first) = segments.first() {
            for (i, &v) in segments.iter().enumerate().skip(1) {
                if (v - first).rem_euclid(2) != 0 {
                    return Err(ParamViolation::ParityMismatch { index: i, value: v, first });
                }
            }
        }
        for (i, &v) in segments.iter().enumerate() {
            if v < -1 {
                return Err(ParamViolation::BelowFloor { index: i, value: v });
            }
        }
        if segments.len() % 2 != 0 {
            return Err(ParamViolation::OddCount(segments.len()));
        }
        Ok(DiscreteSeriesParam { segments, tail })
    }

    pub fn empty() -> Self {
        DiscreteSeriesParam { segments: Vec::new(), tail: SigmaTail::Generic }
    }

    pub fn empty_with(tail: SigmaTail) -> Self {
        DiscreteSeriesParam { segments: Vec::new(), tail }
    }

    pub fn segments(&self) -> &[i64] {
        &self.segments
    }

    pub fn tail(&self) -> SigmaTail {
        self.tail
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Splits off the two leading segment lengths; the remainder of a valid
    /// parameter is again valid.
    pub fn split_leading_pair(&self) -> Option<((i64, i64), DiscreteSeriesParam)> {
        if self.segments.len() < 2 {
            return None;
        }
        let rest = DiscreteSeriesParam {
            segments: self.segments[2..].to_vec(),
            tail: self.tail,
        };
        Some(((self.segments[0], self.segments[1]), rest))
    }
}

impl fmt::Display for DiscreteSeriesParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("sigma")?;
        if !self.segments.is_empty() {
            let parts: Vec<String> = self.segments.iter().map(|r| r.to_string()).collect();
            write!(f, "_({})", parts.join(","))?;
        }
        match self.tail {
            SigmaTail::Generic => Ok(()),
            SigmaTail::Standard => f.write_str("^std"),
            SigmaTail::Trivial => f.write_str("^triv"),
        }
    }
}

/// Kernel of an L-factor. The first four variants are atomic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Kernel {
    /// Rank-one twisted kernel carrying the first comb (Asai, Sym^2 or
    /// Lambda^2 depending on the group).
    Rho,
    /// The opposite rank-one twisted kernel.
    RhoMinus,
    /// Rank-one tensor factor against the anisotropic tail.
    TauSigma,
    /// Rank-one tensor factor of the inducing representation with itself.
    TauTau,
    /// Tensor factor of two Speh blocks of ranks a <= b.
    SpehTensor { a: i64, b: i64 },
    /// Twisted factor of a rank-a Speh block.
    TwistedExt { a: i64, sign: Sign },
    /// Tensor factor of a rank-a Speh block against a discrete-series tail.
    TensorDiscrete {
        a: i64,
        #[serde(flatten)]
        param: DiscreteSeriesParam,
    },
}

impl Kernel {
    /// Tensor kernel of two Speh blocks, stored with sorted ranks; the
    /// rank-one diagonal collapses to the atomic pair kernel.
    pub fn speh(a: i64, b: i64) -> Result<Kernel, Error> {
        if a < 1 {
            return Err(Error::Rank { name: "a", value: a, min: 1 });
        }
        if b < 1 {
            return Err(Error::Rank { name: "b", value: b, min: 1 });
        }
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if (lo, hi) == (1, 1) {
            Ok(Kernel::TauTau)
        } else {
            Ok(Kernel::SpehTensor { a: lo, b: hi })
        }
    }

    /// Twisted kernel of a rank-a Speh block; rank one collapses to the
    /// atomic kernels.
    pub fn twisted(a: i64, sign: Sign) -> Result<Kernel, Error> {
        if a < 1 {
            return Err(Error::Rank { name: "a", value: a, min: 1 });
        }
        if a == 1 {
            Ok(match sign {
                Sign::Plus => Kernel::Rho,
                Sign::Minus => Kernel::RhoMinus,
            })
        } else {
            Ok(Kernel::TwistedExt { a, sign })
        }
    }

    /// Tensor kernel against a discrete-series tail; the rank-one factor
    /// with no segments collapses to the atomic tau x sigma kernel unless
    /// the tail is trivial (in which case the symbol expands to nothing and
    /// must stay composite).
    pub fn tensor_discrete(a: i64, param: DiscreteSeriesParam) -> Result<Kernel, Error> {
        if a < 1 {
            return Err(Error::Rank { name: "a", value: a, min: 1 });
        }
        if a == 1 && param.is_empty() && param.tail() != SigmaTail::Trivial {
            Ok(Kernel::TauSigma)
        } else {
            Ok(Kernel::TensorDiscrete { a, param })
        }
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Kernel::Rho | Kernel::RhoMinus | Kernel::TauSigma | Kernel::TauTau)
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kernel::Rho => f.write_str("rho"),
            Kernel::RhoMinus => f.write_str("rho^-"),
            Kernel::TauSigma => f.write_str("tau x sigma"),
            Kernel::TauTau => f.write_str("tau x tau"),
            Kernel::SpehTensor { a, b } => write!(f, "tau_{a} x tau_{b}"),
            Kernel::TwistedExt { a, sign: Sign::Plus } => write!(f, "tau_{a}, rho"),
            Kernel::TwistedExt { a, sign: Sign::Minus } => write!(f, "tau_{a}, rho^-"),
            Kernel::TensorDiscrete { a, param } => write!(f, "tau_{a} x {param}"),
        }
    }
}
