//! The normalizing factors themselves.
//!
//! For a size-c block of the rank-a Speh representation of tau against a
//! tail with segment data r, the classical factor is
//!   alpha_{c,a}(s) = prod_{i<=ceil(c/2)} L(2s-1-c+2i, tau_a, rho)
//!                    prod_{i<=floor(c/2)} L(2s-c+2i, tau_a, rho^-)
//                     * L(s-(c-1)/2, tau_a x sigma_r),
//! its companion on the other side of the functional equation is
//!   beta_c(s) = prod_{i<=ceil(c/2)} L(2s+c+2-2i, rho)
//!               prod_{i<=floor(c/2)} L(2s+c+1-2i, rho^-)
//!               * L(s+(c+1)/2, tau x sigma),
//! and the general-linear factor for blocks of sizes c and d is
//!   alpha_GL(s, c, d, a, b) = prod_j L(2s-j, tau_a x tau_b),
//! j running from |c-d|/2 to (c+d-2)/2 in integer steps.

use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::factor::LFactor;
use crate::kernel::{DiscreteSeriesParam, Kernel, Sign};
use crate::product::LProduct;
use crate::rational::Rat;

/// Quasi-split family the twisted kernels live on; fixes which classical
/// L-function each of rho and rho^- denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupType {
    UEven,
    UOdd,
    SoOdd,
    Sp,
    SoEven,
}

impl GroupType {
    pub const ALL: [GroupType; 5] =
        [GroupType::UEven, GroupType::UOdd, GroupType::SoOdd, GroupType::Sp, GroupType::SoEven];

    pub fn rho_label(&self) -> &'static str {
        match self {
            GroupType::UEven => "Asai",
            GroupType::UOdd => "Asai x chi",
            GroupType::SoOdd => "Sym^2",
            GroupType::Sp | GroupType::SoEven => "Lambda^2",
        }
    }

    pub fn rho_minus_label(&self) -> &'static str {
        match self {
            GroupType::UEven => "Asai x chi",
            GroupType::UOdd => "Asai",
            GroupType::SoOdd => "Lambda^2",
            GroupType::Sp | GroupType::SoEven => "Sym^2",
        }
    }

    pub fn parse(s: &str) -> Option<GroupType> {
        Some(match s {
            "u-even" => GroupType::UEven,
            "u-odd" => GroupType::UOdd,
            "so-odd" => GroupType::SoOdd,
            "sp" => GroupType::Sp,
            "so-even" => GroupType::SoEven,
            _ => return None,
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            GroupType::UEven => "u-even",
            GroupType::UOdd => "u-odd",
            GroupType::SoOdd => "so-odd",
            GroupType::Sp => "sp",
            GroupType::SoEven => "so-even",
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Analytic hypotheses on the inducing datum: which twisted kernel carries
/// the pole on Re(z) = 0, and whether the tau x sigma factor poles there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TauConfig {
    pub pole_side: Sign,
    pub sigma_pole: bool,
}

impl TauConfig {
    /// All four hypothesis combinations, in a fixed enumeration order.
    pub const ALL: [TauConfig; 4] = [
        TauConfig { pole_side: Sign::Plus, sigma_pole: false },
        TauConfig { pole_side: Sign::Plus, sigma_pole: true },
        TauConfig { pole_side: Sign::Minus, sigma_pole: false },
        TauConfig { pole_side: Sign::Minus, sigma_pole: true },
    ];

    pub fn label(&self) -> String {
        format!(
            "tau-pole={}, sigma-pole={}",
            match self.pole_side {
                Sign::Plus => "rho",
                Sign::Minus => "rho-",
            },
            self.sigma_pole
        )
    }
}

impl fmt::Display for TauConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// alpha_{c,a}(s) at the composite level: ceil(c/2) + floor(c/2) twisted
/// factors and one tensor factor against the tail.
pub fn alpha_classical(c: i64, a: i64, param: &DiscreteSeriesParam) -> Result<LProduct, Error> {
    if c < 1 {
        return Err(Error::Rank { name: "c", value: c, min: 1 });
    }
    if a < 1 {
        return Err(Error::Rank { name: "a", value: a, min: 1 });
    }
    let mut out = LProduct::one();
    for i in 1..=(c + 1) / 2 {
        out.insert(
            LFactor::new(2, Rat::int(2 * i - 1 - c), Kernel::twisted(a, Sign::Plus)?)?,
            1,
        );
    }
    for i in 1..=c / 2 {
        out.insert(
            LFactor::new(2, Rat::int(2 * i - c), Kernel::twisted(a, Sign::Minus)?)?,
            1,
        );
    }
    out.insert(
        LFactor::new(1, Rat::halves(1 - c), Kernel::tensor_discrete(a, param.clone())?)?,
        1,
    );
    Ok(out)
}

/// beta_c(s) for the rank-one inducing datum; already atomic.
pub fn beta_classical(c: i64) -> Result<LProduct, Error> {
    if c < 1 {
        return Err(Error::Rank { name: "c", value: c, min: 1 });
    }
    let mut out = LProduct::one();
    for i in 1..=(c + 1) / 2 {
        out.insert(LFactor::new(2, Rat::int(c + 2 - 2 * i), Kernel::Rho)?, 1);
    }
    for i in 1..=c / 2 {
        out.insert(LFactor::new(2, Rat::int(c + 1 - 2 * i), Kernel::RhoMinus)?, 1);
    }
    out.insert(LFactor::new(1, Rat::halves(c + 1), Kernel::TauSigma)?, 1);
    Ok(out)
}

/// alpha_GL with a general argument z = s_coeff*s + shift in place of 2s:
/// min(c,d) tensor factors L(z - j, tau_a x tau_b).
pub fn alpha_gl_at(
    s_coeff: i64,
    shift: Rat,
    c: i64,
    d: i64,
    a: i64,
    b: i64,
) -> Result<LProduct, Error> {
    if c < 0 {
        return Err(Error::Rank { name: "c", value: c, min: 0 });
    }
    if d < 0 {
        return Err(Error::Rank { name: "d", value: d, min: 0 });
    }
    let mut out = LProduct::one();
    if c == 0 || d == 0 {
        return Ok(out);
    }
    let mut j2 = (c - d).abs();
    while j2 <= c + d - 2 {
        out.mul_segment(s_coeff, shift - Rat::halves(j2), a, b, 1)?;
        j2 += 2;
    }
    Ok(out)
}

/// alpha_GL(s + offset, c blocks of tau_a, d blocks of tau_b).
pub fn alpha_gl(c: i64, d: i64, a: i64, b: i64, offset: Rat) -> Result<LProduct, Error> {
    if c < 1 {
        return Err(Error::Rank { name: "c", value: c, min: 1 });
    }
    if d < 1 {
        return Err(Error::Rank { name: "d", value: d, min: 1 });
    }
    alpha_gl_at(2, offset * 2, c, d, a, b)
}

/// Greatest common divisor of two products: keys present in both with the
/// same sign, at the exponent closer to zero.
pub fn gcd_products(x: &LProduct, y: &LProduct) -> LProduct {
    let mut out = LProduct::one();
    for (f, ex) in x.iter() {
        let ey = y.exponent_of(f);
        if ex > 0 && ey > 0 {
            out.insert(f.clone(), ex.min(ey));
        } else if ex < 0 && ey < 0 {
            out.insert(f.clone(), ex.max(ey));
        }
    }
    out
}
