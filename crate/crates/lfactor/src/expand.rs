//! Rewrite rules taking composite factors to atoms.
//!
//! Three expansions generate everything:
//!   twisted:   L(z, tau_a, rho)     = prod_{i<=ceil(a/2)} L(z+a+1-2i, rho)
//!                                     prod_{i<=floor(a/2)} L(z+a-2i, rho^-)
//!              (kernels swapped for rho^-),
//!   segment:   L(z, tau_a x tau_r)  = prod of min(a,r) pair factors centered
//!                                     at z + (max(a,r)-1)/2,
//!   tail peel: L(z, tau_a x sigma_r) = prod_t L(z, tau_a x tau_{r_t})
//!                                      * L(z+(a-1)/2, tau x sigma).
//! The diagonal identity L(z, tau x tau) = L(z, rho) L(z, rho^-) closes the
//! system, so `atomize` lands in the three gated kernels rho, rho^-,
//! tau x sigma.

use crate::error::Error;
use crate::factor::LFactor;
use crate::kernel::{DiscreteSeriesParam, Kernel, Sign, SigmaTail};
use crate::product::LProduct;
use crate::rational::Rat;

/// Expands L(z, tau_a, rho^sign), z = s_coeff*s + shift, into rank-one
/// twisted factors.
pub fn expand_twisted(s_coeff: i64, shift: Rat, a: i64, sign: Sign) -> Result<LProduct, Error> {
    if a < 1 {
        return Err(Error::Rank { name: "a", value: a, min: 1 });
    }
    let mut out = LProduct::one();
    for i in 1..=(a + 1) / 2 {
        out.insert(
            LFactor::new(s_coeff, shift + Rat::int(a + 1 - 2 * i), Kernel::twisted(1, sign)?)?,
            1,
        );
    }
    for i in 1..=a / 2 {
        out.insert(
            LFactor::new(s_coeff, shift + Rat::int(a - 2 * i), Kernel::twisted(1, sign.flip())?)?,
            1,
        );
    }
    Ok(out)
}

/// Expands L(z, tau_a x tau_r) into rank-one pair factors; r = 0 gives the
/// empty product and r = -1 the inverse of the r = 1 factor.
pub fn expand_segment(s_coeff: i64, shift: Rat, a: i64, r: i64) -> Result<LProduct, Error> {
    if a < 1 {
        return Err(Error::Rank { name: "a", value: a, min: 1 });
    }
    if r < -1 {
        return Err(Error::SegmentRange(r));
    }
    let (r, exp) = match r {
        0 => return Ok(LProduct::one()),
        -1 => (1, -1),
        r => (r, 1),
    };
    let (hi, lo) = (a.max(r), a.min(r));
    let mut out = LProduct::one();
    for k in 0..lo {
        let delta = Rat::halves(hi - 1) + Rat::int(k) - Rat::halves(lo - 1);
        out.insert(LFactor::new(s_coeff, shift + delta, Kernel::TauTau)?, exp);
    }
    Ok(out)
}

/// One step of the diagonal split L(z, tau_a x tau_a) = L(z, tau_a, rho)
/// L(z, tau_a, rho^-), left at the twisted-composite level.
pub fn expand_tautau(s_coeff: i64, shift: Rat, a: i64) -> Result<LProduct, Error> {
    let mut out = LProduct::one();
    out.insert(LFactor::new(s_coeff, shift, Kernel::twisted(a, Sign::Plus)?)?, 1);
    out.insert(LFactor::new(s_coeff, shift, Kernel::twisted(a, Sign::Minus)?)?, 1);
    Ok(out)
}

/// Peels L(z, tau_a x sigma_r) into pair factors plus the residual
/// tau x sigma factor (dropped for a trivial tail).
pub fn expand_tensor_discrete(
    s_coeff: i64,
    shift: Rat,
    a: i64,
    param: &DiscreteSeriesParam,
) -> Result<LProduct, Error> {
    if a < 1 {
        return Err(Error::Rank { name: "a", value: a, min: 1 });
    }
    let mut out = LProduct::one();
    for &rt in param.segments() {
        out = out.mul(&expand_segment(s_coeff, shift, a, rt)?);
    }
    if param.tail() != SigmaTail::Trivial {
        out.insert(
            LFactor::new(s_coeff, shift + Rat::halves(a - 1), Kernel::TauSigma)?,
            1,
        );
    }
    Ok(out)
}

/// Fully expands a product into the gated atoms rho, rho^- and tau x sigma,
/// refining every diagonal pair factor along the way.
pub fn atomize(p: &LProduct) -> LProduct {
    let mut out = LProduct::one();
    for (f, exp) in p.iter() {
        let (coeff, shift) = (f.s_coeff(), f.shift());
        match f.kernel() {
            Kernel::Rho | Kernel::RhoMinus | Kernel::TauSigma => out.insert(f.clone(), exp),
            Kernel::TauTau => {
                out.insert(LFactor::new(coeff, shift, Kernel::Rho).expect("atom"), exp);
                out.insert(LFactor::new(coeff, shift, Kernel::RhoMinus).expect("atom"), exp);
            }
            Kernel::SpehTensor { a, b } => {
                let pairs = expand_segment(coeff, shift, *a, *b).expect("valid ranks");
                out = out.mul(&atomize(&pairs).pow(exp));
            }
            Kernel::TwistedExt { a, sign } => {
                let tw = expand_twisted(coeff, shift, *a, *sign).expect("valid rank");
                out = out.mul(&tw.pow(exp));
            }
            Kernel::TensorDiscrete { a, param } => {
                let peeled = expand_tensor_discrete(coeff, shift, *a, param).expect("valid tail");
                out = out.mul(&atomize(&peeled).pow(exp));
            }
        }
    }
    out
}

/// The two sides of the one-step tensor recursion for L(2s, tau_a x tau_b):
/// the factor itself on the left and, on the right, the peel of the smaller
/// rank, L(2s-(b-1)/2, tau_a x tau) L(2s+1/2, tau_a x tau_{b-1}) when
/// a >= b and the mirrored form otherwise.
pub fn expand_gl_tensor_recursion(a: i64, b: i64) -> Result<(LProduct, LProduct), Error> {
    if a < 1 {
        return Err(Error::Rank { name: "a", value: a, min: 1 });
    }
    if b < 1 {
        return Err(Error::Rank { name: "b", value: b, min: 1 });
    }
    let mut lhs = LProduct::one();
    lhs.mul_segment(2, Rat::ZERO, a, b, 1)?;
    let mut rhs = LProduct::one();
    if a >= b {
        rhs.mul_segment(2, Rat::halves(1 - b), a, 1, 1)?;
        rhs.mul_segment(2, Rat::halves(1), a, b - 1, 1)?;
    } else {
        rhs.mul_segment(2, Rat::halves(1 - a), b, 1, 1)?;
        rhs.mul_segment(2, Rat::halves(1), b, a - 1, 1)?;
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_rank_one_is_identity() {
        let p = expand_twisted(2, Rat::ZERO, 1, Sign::Plus).unwrap();
        assert_eq!(p, LProduct::factor(LFactor::at2(Rat::ZERO, Kernel::Rho)));
        let m = expand_twisted(2, Rat::ZERO, 1, Sign::Minus).unwrap();
        assert_eq!(m, LProduct::factor(LFactor::at2(Rat::ZERO, Kernel::RhoMinus)));
    }

    #[test]
    fn atomize_is_idempotent() {
        let mut p = LProduct::one();
        p.insert(LFactor::at2(Rat::halves(1), Kernel::speh(3, 2).unwrap()), 2);
        p.insert(LFactor::at2(Rat::ZERO, Kernel::twisted(4, Sign::Minus).unwrap()), -1);
        p.insert(
            LFactor::at1(
                Rat::ZERO,
                Kernel::tensor_discrete(
                    2,
                    DiscreteSeriesParam::new(vec![3, 1], SigmaTail::Generic).unwrap(),
                )
                .unwrap(),
            ),
            1,
        );
        let once = atomize(&p);
        assert!(once.is_fully_atomic());
        assert!(!once.iter().any(|(f, _)| f.kernel() == &Kernel::TauTau));
        assert_eq!(atomize(&once), once);
    }

    #[test]
    fn trivial_tail_drops_residual_factor() {
        let triv = DiscreteSeriesParam::new(vec![3, 1], SigmaTail::Trivial).unwrap();
        let p = expand_tensor_discrete(1, Rat::ZERO, 1, &triv).unwrap();
        assert!(p.iter().all(|(f, _)| f.kernel() == &Kernel::TauTau));
        let empty_triv = DiscreteSeriesParam::empty_with(SigmaTail::Trivial);
        assert!(expand_tensor_discrete(1, Rat::ZERO, 1, &empty_triv).unwrap().is_one());
    }

    #[test]
    fn gl_recursion_degenerate_edge() {
        // b = 1 peel leaves the factor itself
        let (lhs, rhs) = expand_gl_tensor_recursion(3, 1).unwrap();
        assert_eq!(atomize(&lhs), atomize(&rhs));
        assert_eq!(rhs.len(), 1);
    }
}
