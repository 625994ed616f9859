//! Verdicts for the holomorphy strategy on a block datum.
//!
//! The strategy pairs two decomposition ways whose residual products pole on
//! opposite half planes, intersects their candidate pole sets, and then
//! discharges whatever survives by one of two arguments:
//!
//!   center-self-inverse: at the center the normalized operator squares to
//!     the identity on a multiplicity-free induced representation, so a
//!     pole there would force a zero that is not available;
//!   low-rank-diagram: the surviving locus sits in a rank so small that the
//!     operator can be written out and checked to be scalar or zero there.
//!
//! When only one way is available the verdict rests on its sign class
//! alone. The rank-one base case with empty tail datum is vacuously fine.

use serde::Serialize;

use crate::error::Error;
use crate::kernel::{DiscreteSeriesParam, Kernel};
use crate::normalization::{alpha_classical, beta_classical, gcd_products, TauConfig};
use crate::poles::{common_zeros, factor_dto, sign_class, LFactorDto, SharedZero, SignClass};
use crate::product::LProduct;
use crate::rational::Rat;
use crate::ways::{closed_forms, decompose, Way, WayCtx};
use crate::poles::common_poles;

// --- strategy check ---

/// Argument used to rule out a surviving common pole locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DischargeRule {
    CenterSelfInverse,
    LowRankDiagram,
}

/// How the verdict for this datum is organized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyMode {
    /// Two ways; intersect their candidate poles, discharge the remainder.
    PairedPoles,
    /// One way; its sign class alone must confine the candidate poles.
    SingleSign,
    /// Nothing to check.
    Vacuous,
}

/// Sign class of one way's residual, with the claim it must satisfy.
#[derive(Debug, Clone, Serialize)]
pub struct SignRow {
    pub way: Way,
    pub class: SignClass,
    /// "nonpositive", "nonnegative", or none when no side is claimed.
    pub claim: Option<&'static str>,
    pub satisfied: bool,
}

/// One common candidate pole locus and whether a rule discharges it.
#[derive(Debug, Clone, Serialize)]
pub struct StrategyLocus {
    pub re_s: Rat,
    pub configs: Vec<TauConfig>,
    pub witness_left: Kernel,
    pub witness_right: Kernel,
    pub discharge: Option<DischargeRule>,
}

/// Full verdict for one block datum.
#[derive(Debug, Clone, Serialize)]
pub struct StrategyReport {
    pub c: i64,
    pub a: i64,
    pub param: DiscreteSeriesParam,
    pub mode: StrategyMode,
    pub ways: Vec<Way>,
    pub signs: Vec<SignRow>,
    pub loci: Vec<StrategyLocus>,
    pub undischarged: Vec<Rat>,
    pub pass: bool,
}

fn sign_row(way: Way, p: &LProduct, claim: Option<&'static str>) -> SignRow {
    let class = sign_class(p);
    let satisfied = match claim {
        Some("nonpositive") => class.within_nonpositive(),
        Some("nonnegative") => class.within_nonnegative(),
        _ => true,
    };
    SignRow { way, class, claim, satisfied }
}

/// Allowed surviving loci and the rule that discharges them.
fn discharge_table(c: i64, a: i64, param: &DiscreteSeriesParam) -> (Vec<Rat>, DischargeRule) {
    if a == 1 && param.is_empty() {
        let allowed = match c {
            2 => vec![Rat::ZERO, Rat::halves(-1)],
            3 => vec![Rat::ZERO],
            _ => vec![],
        };
        (allowed, DischargeRule::LowRankDiagram)
    } else {
        (vec![Rat::ZERO], DischargeRule::CenterSelfInverse)
    }
}

/// Run the strategy on the datum (c, a, tail parameter) and report whether
/// every candidate pole is confined or discharged.
pub fn strategy_check(c: i64, a: i64, param: &DiscreteSeriesParam) -> Result<StrategyReport, Error> {
    if c < 1 {
        return Err(Error::Rank { name: "c", value: c, min: 1 });
    }
    if a < 1 {
        return Err(Error::Rank { name: "a", value: a, min: 1 });
    }

    // pick the designated ways
    let pair: Option<(Way, Way)> = if c >= 2 {
        Some(match (a >= 2, param.is_empty()) {
            (true, _) => (Way::Cl1, Way::Cl1p),
            (false, false) => (Way::Cl1, Way::Cl3),
            (false, true) => (Way::Cl1, Way::Cl2),
        })
    } else {
        None
    };

    match pair {
        Some((left, right)) => {
            let dl = decompose(&WayCtx::classical(left, c, a, param.clone())?)?;
            let dr = decompose(&WayCtx::classical(right, c, a, param.clone())?)?;
            let signs = vec![
                sign_row(left, &dl.residual, Some("nonpositive")),
                sign_row(
                    right,
                    &dr.residual,
                    if right == Way::Cl2 { None } else { Some("nonnegative") },
                ),
            ];
            let (allowed, rule) = discharge_table(c, a, param);
            let loci: Vec<StrategyLocus> = common_poles(&dl.residual, &dr.residual)?
                .into_iter()
                .map(|l| {
                    let discharge = allowed.contains(&l.re_s).then_some(rule);
                    StrategyLocus {
                        re_s: l.re_s,
                        configs: l.configs,
                        witness_left: l.witness_left,
                        witness_right: l.witness_right,
                        discharge,
                    }
                })
                .collect();
            let undischarged: Vec<Rat> =
                loci.iter().filter(|l| l.discharge.is_none()).map(|l| l.re_s).collect();
            let pass = undischarged.is_empty() && signs.iter().all(|s| s.satisfied);
            Ok(StrategyReport {
                c,
                a,
                param: param.clone(),
                mode: StrategyMode::PairedPoles,
                ways: vec![left, right],
                signs,
                loci,
                undischarged,
                pass,
            })
        }
        None => {
            // c == 1: at most one way applies
            let single = if a >= 2 {
                Some(Way::Cl1p)
            } else if !param.is_empty() {
                Some(Way::Cl3)
            } else {
                None
            };
            match single {
                Some(way) => {
                    let dec = decompose(&WayCtx::classical(way, c, a, param.clone())?)?;
                    let signs = vec![sign_row(way, &dec.residual, Some("nonnegative"))];
                    let pass = signs.iter().all(|s| s.satisfied);
                    Ok(StrategyReport {
                        c,
                        a,
                        param: param.clone(),
                        mode: StrategyMode::SingleSign,
                        ways: vec![way],
                        signs,
                        loci: vec![],
                        undischarged: vec![],
                        pass,
                    })
                }
                None => Ok(StrategyReport {
                    c,
                    a,
                    param: param.clone(),
                    mode: StrategyMode::Vacuous,
                    ways: vec![],
                    signs: vec![],
                    loci: vec![],
                    undischarged: vec![],
                    pass: true,
                }),
            }
        }
    }
}

// --- coprimality corollary ---

/// Coprimality report for the inverse of the one-sided factor against the
/// inverse of the doubled two-sided factor.
#[derive(Debug, Clone, Serialize)]
pub struct GcdCorollaryReport {
    pub c: i64,
    /// Structural common divisor: identical factor symbols on both sides.
    pub structural: Vec<LFactorDto>,
    pub structural_trivial: bool,
    /// Locus-level common zeros under at least one shared configuration.
    pub shared_zeros: Vec<SharedZero>,
    /// The single stated shared-zero pair, when the rank admits it.
    pub stated_pair: Option<(LFactorDto, LFactorDto)>,
    /// c == 1 leaves the doubled product without the witnessing factor.
    pub stated_pair_vacuous: bool,
    pub pass: bool,
}

/// Compare alpha_c(s)^-1 with (beta_c(s) beta_c(-s))^-1 for common
/// divisors, at both granularities.
pub fn gcd_corollary(c: i64) -> Result<GcdCorollaryReport, Error> {
    let x = crate::expand::atomize(&alpha_classical(c, 1, &DiscreteSeriesParam::empty())?).inverse();
    let beta = beta_classical(c)?;
    let y = crate::expand::atomize(&beta.mul(&beta.reflect())).inverse();

    let structural = gcd_products(&x, &y);
    let structural_trivial = structural.is_one();
    let shared_zeros = common_zeros(&x, &y)?;

    let want_left = crate::factor::LFactor::new(1, Rat::halves(1 - c), Kernel::TauSigma)?;
    let want_right = crate::factor::LFactor::new(-2, Rat::int(c - 1), Kernel::RhoMinus)?;
    let stated_pair = (c >= 2).then(|| (factor_dto(&want_left, -1), factor_dto(&want_right, -1)));
    let stated_pair_vacuous = c == 1;

    let pass = structural_trivial
        && match &stated_pair {
            Some((l, r)) => {
                shared_zeros.len() == 1
                    && shared_zeros[0].re_s == Rat::halves(c - 1)
                    && shared_zeros[0].left == *l
                    && shared_zeros[0].right == *r
            }
            None => shared_zeros.is_empty(),
        };

    Ok(GcdCorollaryReport {
        c,
        structural: crate::poles::product_dto(&structural),
        structural_trivial,
        shared_zeros,
        stated_pair,
        stated_pair_vacuous,
        pass,
    })
}

// --- closed-form verification sweeps ---

/// Outcome of replaying every applicable stated closed form at one datum.
#[derive(Debug, Clone, Serialize)]
pub struct ClosedFormOutcome {
    pub way: Way,
    pub c: i64,
    pub d: i64,
    pub a: i64,
    pub b: i64,
    pub param: DiscreteSeriesParam,
    pub label: String,
    pub matches: bool,
    pub mismatch: String,
}

/// Replay the stated closed forms for one context.
pub fn closed_form_outcomes(ctx: &WayCtx) -> Result<Vec<ClosedFormOutcome>, Error> {
    let dec = decompose(ctx)?;
    Ok(closed_forms(&dec)?
        .into_iter()
        .map(|row| ClosedFormOutcome {
            way: ctx.way,
            c: ctx.c,
            d: ctx.d,
            a: ctx.a,
            b: ctx.b,
            param: ctx.param.clone(),
            label: row.label,
            matches: row.matches,
            mismatch: row.mismatch.to_string(),
        })
        .collect())
}

// --- tests ---

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::SigmaTail;

    fn p(entries: &[i64]) -> DiscreteSeriesParam {
        DiscreteSeriesParam::new(entries.to_vec(), SigmaTail::Generic).unwrap()
    }

    #[test]
    fn empty_tail_low_rank_sets() {
        let r2 = strategy_check(2, 1, &DiscreteSeriesParam::empty()).unwrap();
        assert_eq!(r2.mode, StrategyMode::PairedPoles);
        assert_eq!(r2.ways, vec![Way::Cl1, Way::Cl2]);
        let res: Vec<Rat> = r2.loci.iter().map(|l| l.re_s).collect();
        assert_eq!(res, vec![Rat::halves(-1), Rat::ZERO]);
        assert!(r2.pass);

        let r3 = strategy_check(3, 1, &DiscreteSeriesParam::empty()).unwrap();
        let res: Vec<Rat> = r3.loci.iter().map(|l| l.re_s).collect();
        assert_eq!(res, vec![Rat::ZERO]);
        assert_eq!(r3.loci[0].configs.len(), 1);
        assert!(r3.loci[0].configs[0].sigma_pole);
        assert!(r3.pass);

        for c in 4..=8 {
            let r = strategy_check(c, 1, &DiscreteSeriesParam::empty()).unwrap();
            assert!(r.loci.is_empty(), "c={c}: {:?}", r.loci);
            assert!(r.pass);
        }
    }

    #[test]
    fn paired_modes_for_larger_ranks() {
        let r = strategy_check(3, 2, &p(&[5, 1])).unwrap();
        assert_eq!(r.ways, vec![Way::Cl1, Way::Cl1p]);
        assert!(r.pass, "{r:?}");
        let r = strategy_check(2, 1, &p(&[3, 1])).unwrap();
        assert_eq!(r.ways, vec![Way::Cl1, Way::Cl3]);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn single_and_vacuous_modes() {
        let r = strategy_check(1, 3, &p(&[5, 1])).unwrap();
        assert_eq!(r.mode, StrategyMode::SingleSign);
        assert_eq!(r.ways, vec![Way::Cl1p]);
        assert!(r.pass, "{r:?}");
        let r = strategy_check(1, 1, &p(&[2, 0])).unwrap();
        assert_eq!(r.ways, vec![Way::Cl3]);
        assert!(r.pass, "{r:?}");
        let r = strategy_check(1, 1, &DiscreteSeriesParam::empty()).unwrap();
        assert_eq!(r.mode, StrategyMode::Vacuous);
        assert!(r.pass);
    }

    #[test]
    fn corollary_pair_present_above_rank_one() {
        for c in 2..=8 {
            let rep = gcd_corollary(c).unwrap();
            assert!(rep.structural_trivial);
            assert_eq!(rep.shared_zeros.len(), 1, "c={c}");
            assert_eq!(rep.shared_zeros[0].re_s, Rat::halves(c - 1));
            assert!(rep.pass, "c={c}: {rep:?}");
        }
        let r1 = gcd_corollary(1).unwrap();
        assert!(r1.structural_trivial);
        assert!(r1.shared_zeros.is_empty());
        assert!(r1.stated_pair_vacuous);
        assert!(r1.pass);
    }
}
