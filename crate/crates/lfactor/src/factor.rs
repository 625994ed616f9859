//! A single formal L-factor L(A*s + B, kernel).

use std::fmt;

use crate::error::Error;
use crate::kernel::Kernel;
use crate::rational::Rat;

/// Formal symbol L(A*s + B, kernel) with A a nonzero integer and B a
/// quarter-integral rational. Constructors only ever see positive A; a
/// negative coefficient arises by reflecting an existing factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LFactor {
    s_coeff: i64,
    shift: Rat,
    kernel: Kernel,
}

impl LFactor {
    pub fn new(s_coeff: i64, shift: Rat, kernel: Kernel) -> Result<LFactor, Error> {
        if s_coeff == 0 {
            return Err(Error::ZeroCoeff);
        }
        if shift.in_quarters().is_none() {
            return Err(Error::ShiftGranularity(shift.to_string()));
        }
        Ok(LFactor { s_coeff, shift, kernel })
    }

    /// L(s + shift, kernel).
    pub fn at1(shift: Rat, kernel: Kernel) -> LFactor {
        LFactor::new(1, shift, kernel).expect("unit coefficient")
    }

    /// L(2s + shift, kernel).
    pub fn at2(shift: Rat, kernel: Kernel) -> LFactor {
        LFactor::new(2, shift, kernel).expect("unit coefficient")
    }

    pub fn s_coeff(&self) -> i64 {
        self.s_coeff
    }

    pub fn shift(&self) -> Rat {
        self.shift
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn is_atomic(&self) -> bool {
        self.kernel.is_atomic()
    }

    /// Substitutes s -> -s.
    pub fn reflect(&self) -> LFactor {
        LFactor { s_coeff: -self.s_coeff, shift: self.shift, kernel: self.kernel.clone() }
    }

    /// Substitutes s -> s + delta.
    pub fn translate(&self, delta: Rat) -> LFactor {
        LFactor {
            s_coeff: self.s_coeff,
            shift: self.shift + delta * self.s_coeff,
            kernel: self.kernel.clone(),
        }
    }

    /// The real part of s at which the argument A*s + B crosses zero.
    pub fn pole_re(&self) -> Rat {
        (-self.shift).div_int(self.s_coeff)
    }
}

impl fmt::Display for LFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("L(")?;
        match self.s_coeff {
            1 => f.write_str("s")?,
            -1 => f.write_str("-s")?,
            n => write!(f, "{n}s")?,
        }
        if self.shift.is_positive() {
            write!(f, "+{}", self.shift)?;
        } else if self.shift.is_negative() {
            write!(f, "{}", self.shift)?;
        }
        write!(f, ", {})", self.kernel)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_coefficient_and_coarse_shifts() {
        assert_eq!(LFactor::new(0, Rat::ZERO, Kernel::Rho).unwrap_err(), Error::ZeroCoeff);
        assert!(matches!(
            LFactor::new(1, Rat::new(1, 3), Kernel::Rho).unwrap_err(),
            Error::ShiftGranularity(_)
        ));
    }

    #[test]
    fn reflect_and_translate() {
        let f = LFactor::at2(Rat::halves(1), Kernel::Rho);
        assert_eq!(f.reflect().s_coeff(), -2);
        assert_eq!(f.reflect().reflect(), f);
        let g = f.translate(Rat::halves(-1));
        assert_eq!(g.shift(), Rat::halves(-1));
        assert_eq!(f.pole_re(), Rat::quarters(-1));
        assert_eq!(f.reflect().pole_re(), Rat::quarters(1));
    }

    #[test]
    fn display() {
        assert_eq!(LFactor::at2(Rat::halves(-1), Kernel::TauTau).to_string(), "L(2s-1/2, tau x tau)");
        assert_eq!(LFactor::at1(Rat::ZERO, Kernel::TauSigma).to_string(), "L(s, tau x sigma)");
        assert_eq!(
            LFactor::at1(Rat::int(2), Kernel::Rho).reflect().to_string(),
            "L(-s+2, rho)"
        );
    }
}
