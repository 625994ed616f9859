//! Pole and zero loci of atomized products.
//!
//! An atom L(A*s + B, K) can only pole on the line Re(A*s + B) = 0, i.e. at
//! Re(s) = -B/A, and whether it actually does is gated by the analytic
//! hypotheses on the inducing datum: rho fires when the twisted pole sits on
//! the plus side, rho^- when it sits on the minus side, tau x sigma when the
//! tensor factor against the tail poles. Positive exponents contribute
//! poles; negative exponents contribute zeros and are reported separately,
//! never cancelled against poles.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::expand::atomize;
use crate::factor::LFactor;
use crate::kernel::{Kernel, Sign};
use crate::normalization::TauConfig;
use crate::product::LProduct;
use crate::rational::Rat;

/// Hypothesis switch controlling whether an atom's candidate locus is real.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Gate {
    Plus,
    Minus,
    Sigma,
}

impl Gate {
    pub fn of(kernel: &Kernel) -> Result<Gate, Error> {
        match kernel {
            Kernel::Rho => Ok(Gate::Plus),
            Kernel::RhoMinus => Ok(Gate::Minus),
            Kernel::TauSigma => Ok(Gate::Sigma),
            other => Err(Error::NotAtomic(other.to_string())),
        }
    }

    pub fn fires(&self, cfg: &TauConfig) -> bool {
        match self {
            Gate::Plus => cfg.pole_side == Sign::Plus,
            Gate::Minus => cfg.pole_side == Sign::Minus,
            Gate::Sigma => cfg.sigma_pole,
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gate::Plus => "plus",
            Gate::Minus => "minus",
            Gate::Sigma => "sigma",
        })
    }
}

/// One candidate locus of an atom under a pole hypothesis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoleLocus {
    pub re_s: Rat,
    pub kernel: Kernel,
    pub gate: Gate,
    pub order: i64,
}

fn loci_with(p: &LProduct, cfg: &TauConfig, want_poles: bool) -> Result<Vec<PoleLocus>, Error> {
    let mut out = Vec::new();
    for (f, exp) in p.iter() {
        let gate = Gate::of(f.kernel())?;
        if (want_poles && exp <= 0) || (!want_poles && exp >= 0) {
            continue;
        }
        if gate.fires(cfg) {
            out.push(PoleLocus {
                re_s: f.pole_re(),
                kernel: f.kernel().clone(),
                gate,
                order: exp.abs(),
            });
        }
    }
    out.sort_by(|a, b| (a.re_s, &a.kernel).cmp(&(b.re_s, &b.kernel)));
    Ok(out)
}

/// Pole loci of a fully atomic product under one hypothesis configuration.
pub fn pole_loci(p: &LProduct, cfg: &TauConfig) -> Result<Vec<PoleLocus>, Error> {
    loci_with(p, cfg, true)
}

/// Zero loci (negative-exponent atoms) under one hypothesis configuration.
pub fn zero_loci(p: &LProduct, cfg: &TauConfig) -> Result<Vec<PoleLocus>, Error> {
    loci_with(p, cfg, false)
}

/// Coarse classification of where a product can pole, over all hypothesis
/// configurations at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignClass {
    /// No candidate pole at all.
    Empty,
    /// Candidate poles only on Re(s) = 0.
    ZeroOnly,
    /// All candidate poles at Re(s) <= 0, at least one strictly negative.
    Nonpositive,
    /// All candidate poles at Re(s) >= 0, at least one strictly positive.
    Nonnegative,
    /// Candidate poles on both sides.
    Mixed,
}

impl SignClass {
    /// Compatible with a claim that real parts of possible poles are <= 0.
    pub fn within_nonpositive(&self) -> bool {
        matches!(self, SignClass::Empty | SignClass::ZeroOnly | SignClass::Nonpositive)
    }

    /// Compatible with a claim that real parts of possible poles are >= 0.
    pub fn within_nonnegative(&self) -> bool {
        matches!(self, SignClass::Empty | SignClass::ZeroOnly | SignClass::Nonnegative)
    }
}

impl fmt::Display for SignClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignClass::Empty => "empty",
            SignClass::ZeroOnly => "zero-only",
            SignClass::Nonpositive => "nonpositive",
            SignClass::Nonnegative => "nonnegative",
            SignClass::Mixed => "mixed",
        })
    }
}

/// Sign class of the candidate pole set of `p` (atomized first, positive
/// exponents only, gates ignored since the class quantifies over all
/// configurations).
pub fn sign_class(p: &LProduct) -> SignClass {
    let at = atomize(p);
    let mut neg = false;
    let mut zero = false;
    let mut pos = false;
    for (f, exp) in at.iter() {
        if exp <= 0 {
            continue;
        }
        let re = f.pole_re();
        if re.is_negative() {
            neg = true;
        } else if re.is_zero() {
            zero = true;
        } else {
            pos = true;
        }
    }
    match (neg, zero, pos) {
        (false, false, false) => SignClass::Empty,
        (false, true, false) => SignClass::ZeroOnly,
        (true, _, false) => SignClass::Nonpositive,
        (false, _, true) => SignClass::Nonnegative,
        (true, _, true) => SignClass::Mixed,
    }
}

/// A locus where two products both pole under at least one shared
/// hypothesis configuration.
#[derive(Debug, Clone, Serialize)]
pub struct SharedLocus {
    pub re_s: Rat,
    /// Configurations under which both sides pole there.
    pub configs: Vec<TauConfig>,
    /// One witnessing kernel on each side, from the first firing config.
    pub witness_left: Kernel,
    pub witness_right: Kernel,
}

/// Common candidate poles of two products across all four hypothesis
/// configurations.
pub fn common_poles(x: &LProduct, y: &LProduct) -> Result<Vec<SharedLocus>, Error> {
    let (ax, ay) = (atomize(x), atomize(y));
    let mut rows: BTreeMap<Rat, SharedLocus> = BTreeMap::new();
    for cfg in TauConfig::ALL {
        let lx = pole_loci(&ax, &cfg)?;
        let ly = pole_loci(&ay, &cfg)?;
        for px in &lx {
            if let Some(py) = ly.iter().find(|py| py.re_s == px.re_s) {
                rows.entry(px.re_s)
                    .and_modify(|row| row.configs.push(cfg))
                    .or_insert_with(|| SharedLocus {
                        re_s: px.re_s,
                        configs: vec![cfg],
                        witness_left: px.kernel.clone(),
                        witness_right: py.kernel.clone(),
                    });
            }
        }
    }
    Ok(rows.into_values().collect())
}

/// A common zero of two inverse products: the locus-granularity notion of a
/// common divisor.
#[derive(Debug, Clone, Serialize)]
pub struct SharedZero {
    pub re_s: Rat,
    pub configs: Vec<TauConfig>,
    pub left: LFactorDto,
    pub right: LFactorDto,
}

/// Serializable view of one factor with its exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LFactorDto {
    pub s_coeff: i64,
    pub shift: Rat,
    pub kernel: Kernel,
    pub exponent: i64,
    pub display: String,
}

pub fn factor_dto(f: &LFactor, exponent: i64) -> LFactorDto {
    let display = if exponent == 1 {
        f.to_string()
    } else {
        format!("{f}^{exponent}")
    };
    LFactorDto {
        s_coeff: f.s_coeff(),
        shift: f.shift(),
        kernel: f.kernel().clone(),
        exponent,
        display,
    }
}

pub fn product_dto(p: &LProduct) -> Vec<LFactorDto> {
    p.iter().map(|(f, e)| factor_dto(f, e)).collect()
}

/// Common zero loci of two products, pairing one negative-exponent factor
/// from each side per locus (first witnesses in sorted order).
pub fn common_zeros(x: &LProduct, y: &LProduct) -> Result<Vec<SharedZero>, Error> {
    let (ax, ay) = (atomize(x), atomize(y));
    let mut rows: BTreeMap<Rat, SharedZero> = BTreeMap::new();
    for cfg in TauConfig::ALL {
        let lx = zero_loci(&ax, &cfg)?;
        let ly = zero_loci(&ay, &cfg)?;
        for px in &lx {
            if let Some(py) = ly.iter().find(|py| py.re_s == px.re_s) {
                let left = ax
                    .iter()
                    .find(|(f, _)| f.kernel() == &px.kernel && f.pole_re() == px.re_s)
                    .map(|(f, e)| factor_dto(f, e))
                    .expect("locus came from this product");
                let right = ay
                    .iter()
                    .find(|(f, _)| f.kernel() == &py.kernel && f.pole_re() == py.re_s)
                    .map(|(f, e)| factor_dto(f, e))
                    .expect("locus came from this product");
                rows.entry(px.re_s)
                    .and_modify(|row| row.configs.push(cfg))
                    .or_insert_with(|| SharedZero { re_s: px.re_s, configs: vec![cfg], left, right });
            }
        }
    }
    Ok(rows.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expand::expand_segment;

    fn cfg(side: Sign, sigma: bool) -> TauConfig {
        TauConfig { pole_side: side, sigma_pole: sigma }
    }

    #[test]
    fn gates_follow_configuration() {
        let mut p = LProduct::one();
        p.insert(LFactor::at2(Rat::ZERO, Kernel::Rho), 1);
        p.insert(LFactor::at2(Rat::int(1), Kernel::RhoMinus), 1);
        p.insert(LFactor::at1(Rat::halves(1), Kernel::TauSigma), 1);
        let plus = pole_loci(&p, &cfg(Sign::Plus, false)).unwrap();
        assert_eq!(plus.len(), 1);
        assert_eq!(plus[0].re_s, Rat::ZERO);
        let minus_sigma = pole_loci(&p, &cfg(Sign::Minus, true)).unwrap();
        let res: Vec<Rat> = minus_sigma.iter().map(|l| l.re_s).collect();
        assert_eq!(res, vec![Rat::halves(-1), Rat::halves(-1)]);
    }

    #[test]
    fn zeros_and_poles_do_not_mix() {
        let mut p = LProduct::one();
        p.insert(LFactor::at2(Rat::ZERO, Kernel::Rho), 1);
        p.insert(LFactor::at2(Rat::int(1), Kernel::Rho), -2);
        let c = cfg(Sign::Plus, false);
        let poles = pole_loci(&p, &c).unwrap();
        let zeros = zero_loci(&p, &c).unwrap();
        assert_eq!(poles.len(), 1);
        assert_eq!(poles[0].re_s, Rat::ZERO);
        assert_eq!(zeros.len(), 1);
        assert_eq!(zeros[0].re_s, Rat::halves(-1));
        assert_eq!(zeros[0].order, 2);
    }

    #[test]
    fn composite_kernels_are_rejected() {
        let p = LProduct::factor(LFactor::at2(Rat::ZERO, Kernel::speh(2, 2).unwrap()));
        assert!(pole_loci(&p, &cfg(Sign::Plus, false)).is_err());
    }

    #[test]
    fn sign_classes() {
        assert_eq!(sign_class(&LProduct::one()), SignClass::Empty);
        let z = LProduct::factor(LFactor::at2(Rat::ZERO, Kernel::Rho));
        assert_eq!(sign_class(&z), SignClass::ZeroOnly);
        let np = z.mul(&LProduct::factor(LFactor::at2(Rat::int(1), Kernel::Rho)));
        assert_eq!(sign_class(&np), SignClass::Nonpositive);
        assert!(np.iter().all(|(_, e)| e > 0));
        let nn = LProduct::factor(LFactor::at2(Rat::int(-1), Kernel::TauSigma));
        assert_eq!(sign_class(&nn), SignClass::Nonnegative);
        assert_eq!(sign_class(&np.mul(&nn)), SignClass::Mixed);
        // a pair factor counts through its refinement, irrespective of gate
        let tt = expand_segment(2, Rat::int(1), 1, 1).unwrap();
        assert_eq!(sign_class(&tt), SignClass::Nonpositive);
        // negative exponents never contribute candidate poles
        assert_eq!(sign_class(&np.inverse()), SignClass::Empty);
    }

    #[test]
    fn common_poles_require_shared_locus_and_live_gates() {
        let x = LProduct::factor(LFactor::at2(Rat::ZERO, Kernel::Rho));
        let y = LProduct::factor(LFactor::at2(Rat::ZERO, Kernel::RhoMinus));
        // plus and minus gates never fire together
        assert!(common_poles(&x, &y).unwrap().is_empty());
        let z = LProduct::factor(LFactor::at1(Rat::ZERO, Kernel::TauSigma));
        let shared = common_poles(&x, &z).unwrap();
        assert_eq!(shared.len(), 1);
        assert_eq!(shared[0].re_s, Rat::ZERO);
        assert_eq!(shared[0].configs.len(), 1);
        assert_eq!(shared[0].configs[0], cfg(Sign::Plus, true));
    }
}
