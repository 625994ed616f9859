//! Reduced decompositions of an intertwining operator and their residual
//! factor products.
//!
//! Each "way" realizes the operator attached to a block datum as a
//! composition of smaller operators. On normalizing factors this turns into
//! a product identity up to a residual product P:
//!
//!   product(constituent factors) = P * (target factor)
//!
//! The engine computes P exactly as an atomized ratio. The closed-form
//! catalog then replays stated shapes for P and checks them against the
//! computed product, factor by factor.
//!
//! Classical-side ways (target alpha_{c,a}(s; r)):
//!   cl1 : peel the last co-rank block on the left,
//!         alpha_{c-1,a}(s-1/2) * single pair factor * alpha_{1,a}(s+(c-1)/2)
//!   cl2 : mirror of cl1,
//!         alpha_{1,a}(s-(c-1)/2) * single pair factor * alpha_{c-1,a}(s+1/2)
//!   cl1p: peel one rank off the cuspidal support,
//!         alpha_{c,a-1}(s+1/2) * c pair factors * alpha_{c,1}(s-(a-1)/2)
//!   cl2p: mirror of cl1p
//!   cl3 : absorb the leading tail pair (r1, r2) into the tail,
//!         one GL factor on each side of alpha_{c,a}(s; rest)
//!
//! GL-side ways (target alpha_gl(c,d,a,b) at offset 0) peel one block or one
//! rank off either tensor slot: gl1..gl4 on blocks, gl1p..gl4p on ranks.

use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::expand::atomize;
use crate::factor::LFactor;
use crate::kernel::{DiscreteSeriesParam, Kernel, Sign};
use crate::normalization::{alpha_classical, alpha_gl_at};
use crate::product::LProduct;
use crate::rational::Rat;

// --- way names ---

/// One reduced decomposition shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Way {
    Cl1,
    Cl2,
    Cl1p,
    Cl2p,
    Cl3,
    Gl1,
    Gl2,
    Gl3,
    Gl4,
    Gl1p,
    Gl2p,
    Gl3p,
    Gl4p,
}

impl Way {
    pub const ALL: [Way; 13] = [
        Way::Cl1,
        Way::Cl2,
        Way::Cl1p,
        Way::Cl2p,
        Way::Cl3,
        Way::Gl1,
        Way::Gl2,
        Way::Gl3,
        Way::Gl4,
        Way::Gl1p,
        Way::Gl2p,
        Way::Gl3p,
        Way::Gl4p,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Way::Cl1 => "cl1",
            Way::Cl2 => "cl2",
            Way::Cl1p => "cl1p",
            Way::Cl2p => "cl2p",
            Way::Cl3 => "cl3",
            Way::Gl1 => "gl1",
            Way::Gl2 => "gl2",
            Way::Gl3 => "gl3",
            Way::Gl4 => "gl4",
            Way::Gl1p => "gl1p",
            Way::Gl2p => "gl2p",
            Way::Gl3p => "gl3p",
            Way::Gl4p => "gl4p",
        }
    }

    pub fn parse(text: &str) -> Result<Way, Error> {
        Way::ALL
            .into_iter()
            .find(|w| w.as_str() == text)
            .ok_or_else(|| Error::UnknownWay(text.to_string()))
    }

    /// Classical-side ways target alpha_{c,a}; the rest target a GL block
    /// product.
    pub fn is_classical(&self) -> bool {
        matches!(self, Way::Cl1 | Way::Cl2 | Way::Cl1p | Way::Cl2p | Way::Cl3)
    }
}

impl fmt::Display for Way {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

// --- contexts ---

/// A way together with the block datum it decomposes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WayCtx {
    pub way: Way,
    pub c: i64,
    pub d: i64,
    pub a: i64,
    pub b: i64,
    pub param: DiscreteSeriesParam,
}

fn domain(way: Way, ok: bool, requirement: &str) -> Result<(), Error> {
    if ok {
        Ok(())
    } else {
        Err(Error::WayDomain { way: way.as_str(), requirement: requirement.to_string() })
    }
}

impl WayCtx {
    /// Context for a classical-side way on alpha_{c,a}(s; r).
    pub fn classical(way: Way, c: i64, a: i64, param: DiscreteSeriesParam) -> Result<WayCtx, Error> {
        domain(way, way.is_classical(), "targets a GL block product, use WayCtx::gl")?;
        domain(way, c >= 1, "c >= 1")?;
        domain(way, a >= 1, "a >= 1")?;
        match way {
            Way::Cl1 | Way::Cl2 => domain(way, c >= 2, "c >= 2 (one co-rank block must split off)")?,
            Way::Cl1p | Way::Cl2p => domain(way, a >= 2, "a >= 2 (one rank must split off)")?,
            Way::Cl3 => domain(
                way,
                param.segments().len() >= 2,
                "tail datum needs a leading pair (at least two entries)",
            )?,
            _ => unreachable!(),
        }
        Ok(WayCtx { way, c, d: 1, a, b: 1, param })
    }

    /// Context for a GL-side way on the block pair (c, a) x (d, b).
    pub fn gl(way: Way, c: i64, d: i64, a: i64, b: i64) -> Result<WayCtx, Error> {
        domain(way, !way.is_classical(), "targets alpha_{c,a}, use WayCtx::classical")?;
        domain(way, c >= 1 && d >= 1, "c >= 1 and d >= 1")?;
        domain(way, a >= 1 && b >= 1, "a >= 1 and b >= 1")?;
        match way {
            Way::Gl1 | Way::Gl2 => domain(way, c >= 2, "c >= 2")?,
            Way::Gl3 | Way::Gl4 => domain(way, d >= 2, "d >= 2")?,
            Way::Gl1p | Way::Gl2p => domain(way, a >= 2, "a >= 2")?,
            Way::Gl3p | Way::Gl4p => domain(way, b >= 2, "b >= 2")?,
            _ => unreachable!(),
        }
        Ok(WayCtx { way, c, d, a, b, param: DiscreteSeriesParam::empty() })
    }
}

// --- decompositions ---

/// One named factor of a decomposition.
#[derive(Debug, Clone, Serialize)]
pub struct Constituent {
    pub label: String,
    #[serde(skip)]
    pub product: LProduct,
}

/// A way applied to a datum: the constituent factors, the target factor,
/// and the residual product P (atomized ratio of the two).
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub ctx: WayCtx,
    pub constituents: Vec<Constituent>,
    pub target: Constituent,
    pub residual: LProduct,
}

fn shifted_s(delta: Rat) -> String {
    if delta.is_zero() {
        "s".to_string()
    } else if delta.is_negative() {
        format!("s-{}", -delta)
    } else {
        format!("s+{delta}")
    }
}

fn cl_block(label_c: i64, label_a: i64, param: &DiscreteSeriesParam, delta: Rat) -> Result<Constituent, Error> {
    let product = alpha_classical(label_c, label_a, param)?.translate(delta);
    let label = if param.is_empty() {
        format!("alpha[c={label_c},a={label_a}]({})", shifted_s(delta))
    } else {
        format!("alpha[c={label_c},a={label_a}]({}; {param})", shifted_s(delta))
    };
    Ok(Constituent { label, product })
}

fn gl_block(s_coeff: i64, shift: Rat, c: i64, d: i64, a: i64, b: i64) -> Result<Constituent, Error> {
    let product = alpha_gl_at(s_coeff, shift, c, d, a, b)?;
    let var = LFactor::new(s_coeff, shift, Kernel::TauTau)
        .expect("valid variable expression")
        .to_string();
    let var = var
        .strip_prefix("L(")
        .and_then(|v| v.strip_suffix(", tau x tau)"))
        .expect("display shape is stable")
        .to_string();
    Ok(Constituent {
        label: format!("alpha_gl[c={c},d={d},a={a},b={b}]({var})"),
        product,
    })
}

/// Compute the constituents, target, and residual product of a way.
pub fn decompose(ctx: &WayCtx) -> Result<Decomposition, Error> {
    let WayCtx { way, c, d, a, b, ref param } = *ctx;
    let half = Rat::halves(1);
    let (constituents, target) = match way {
        Way::Cl1 => (
            vec![
                cl_block(c - 1, a, param, -half)?,
                gl_block(2, Rat::halves(c - 2), c - 1, 1, a, a)?,
                cl_block(1, a, param, Rat::halves(c - 1))?,
            ],
            cl_block(c, a, param, Rat::ZERO)?,
        ),
        Way::Cl2 => (
            vec![
                cl_block(1, a, param, Rat::halves(1 - c))?,
                gl_block(2, Rat::halves(2 - c), 1, c - 1, a, a)?,
                cl_block(c - 1, a, param, half)?,
            ],
            cl_block(c, a, param, Rat::ZERO)?,
        ),
        Way::Cl1p => (
            vec![
                cl_block(c, a - 1, param, half)?,
                gl_block(2, Rat::halves(2 - a), c, c, a - 1, 1)?,
                cl_block(c, 1, param, Rat::halves(1 - a))?,
            ],
            cl_block(c, a, param, Rat::ZERO)?,
        ),
        Way::Cl2p => (
            vec![
                cl_block(c, a - 1, param, -half)?,
                gl_block(2, Rat::halves(a - 2), c, c, 1, a - 1)?,
                cl_block(c, 1, param, Rat::halves(a - 1))?,
            ],
            cl_block(c, a, param, Rat::ZERO)?,
        ),
        Way::Cl3 => {
            let ((r1, r2), rest) = param
                .split_leading_pair()
                .expect("domain check guarantees a leading pair");
            let m = (r1 + r2) / 2;
            let delta = Rat::quarters(r1 - r2);
            (
                vec![
                    gl_block(1, -delta, c, 1, a, m)?,
                    cl_block(c, a, &rest, Rat::ZERO)?,
                    gl_block(1, delta, c, 1, a, m)?,
                ],
                cl_block(c, a, param, Rat::ZERO)?,
            )
        }
        Way::Gl1 => (
            vec![
                gl_block(2, Rat::halves(c - 1), 1, d, a, b)?,
                gl_block(2, -half, c - 1, d, a, b)?,
            ],
            gl_block(2, Rat::ZERO, c, d, a, b)?,
        ),
        Way::Gl2 => (
            vec![
                gl_block(2, half, c - 1, d, a, b)?,
                gl_block(2, Rat::halves(1 - c), 1, d, a, b)?,
            ],
            gl_block(2, Rat::ZERO, c, d, a, b)?,
        ),
        Way::Gl3 => (
            vec![
                gl_block(2, half, c, d - 1, a, b)?,
                gl_block(2, Rat::halves(1 - d), c, 1, a, b)?,
            ],
            gl_block(2, Rat::ZERO, c, d, a, b)?,
        ),
        Way::Gl4 => (
            vec![
                gl_block(2, Rat::halves(d - 1), c, 1, a, b)?,
                gl_block(2, -half, c, d - 1, a, b)?,
            ],
            gl_block(2, Rat::ZERO, c, d, a, b)?,
        ),
        Way::Gl1p => (
            vec![
                gl_block(2, Rat::halves(1 - a), c, d, 1, b)?,
                gl_block(2, half, c, d, a - 1, b)?,
            ],
            gl_block(2, Rat::ZERO, c, d, a, b)?,
        ),
        Way::Gl2p => (
            vec![
                gl_block(2, -half, c, d, a - 1, b)?,
                gl_block(2, Rat::halves(a - 1), c, d, 1, b)?,
            ],
            gl_block(2, Rat::ZERO, c, d, a, b)?,
        ),
        Way::Gl3p => (
            vec![
                gl_block(2, -half, c, d, a, b - 1)?,
                gl_block(2, Rat::halves(b - 1), c, d, a, 1)?,
            ],
            gl_block(2, Rat::ZERO, c, d, a, b)?,
        ),
        Way::Gl4p => (
            vec![
                gl_block(2, Rat::halves(1 - b), c, d, a, 1)?,
                gl_block(2, half, c, d, a, b - 1)?,
            ],
            gl_block(2, Rat::ZERO, c, d, a, b)?,
        ),
    };

    let mut numerator = LProduct::one();
    for part in &constituents {
        numerator = numerator.mul(&part.product);
    }
    let residual = atomize(&numerator).mul(&atomize(&target.product).inverse());
    Ok(Decomposition { ctx: ctx.clone(), constituents, target, residual })
}

// --- closed-form catalog ---

/// Which target the stated form is measured against: the full factor, or
/// the factor with its trailing tail terms removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetReading {
    Full,
    ReducedTail,
}

/// One stated closed form for a residual product, checked against the
/// engine.
#[derive(Debug, Clone)]
pub struct ClosedFormRow {
    pub label: String,
    pub reading: TargetReading,
    /// The stated product, at whatever kernel granularity it was given.
    pub stated: LProduct,
    /// The engine residual it was compared against, atomized.
    pub engine: LProduct,
    /// atomize(stated) / engine; one() exactly when the row matches.
    pub mismatch: LProduct,
    pub matches: bool,
    pub notes: Vec<String>,
}

fn row(
    label: &str,
    reading: TargetReading,
    stated: LProduct,
    engine: &LProduct,
    notes: Vec<String>,
) -> ClosedFormRow {
    let stated_atoms = atomize(&stated);
    let mismatch = stated_atoms.mul(&engine.inverse());
    ClosedFormRow {
        label: label.to_string(),
        reading,
        matches: mismatch.is_one(),
        stated,
        engine: engine.clone(),
        mismatch,
        notes,
    }
}

fn parity_twisted(a: i64, even_sign: Sign, parity_of: i64, shift: Rat) -> Result<LFactor, Error> {
    let sign = if parity_of % 2 == 0 { even_sign } else { even_sign.flip() };
    LFactor::new(2, shift, Kernel::twisted(a, sign)?)
}

fn tensor_tail_factor(a: i64, param: &DiscreteSeriesParam, shift: Rat) -> Result<LFactor, Error> {
    LFactor::new(1, shift, Kernel::tensor_discrete(a, param.clone())?)
}

fn cl1_plain(c: i64, a: i64, param: &DiscreteSeriesParam) -> Result<LProduct, Error> {
    let mut p = LProduct::one();
    p.insert(parity_twisted(a, Sign::Plus, c, Rat::ZERO)?, 1);
    p.insert(LFactor::new(2, Rat::int(c - 1), Kernel::twisted(a, Sign::Plus)?)?, 1);
    p.insert(tensor_tail_factor(a, param, Rat::halves(c - 1))?, 1);
    Ok(p)
}

fn cl1_prefixed(c: i64, a: i64, param: &DiscreteSeriesParam) -> Result<LProduct, Error> {
    let mut p = cl1_plain(c, a, param)?;
    for j in 1..=(c - 2) {
        p.mul_segment(2, Rat::int(j), a, a, 1)?;
    }
    Ok(p)
}

fn cl2_plain(c: i64, a: i64, param: &DiscreteSeriesParam) -> Result<LProduct, Error> {
    let mut p = LProduct::one();
    p.insert(LFactor::new(2, Rat::int(2 - c), Kernel::twisted(a, Sign::Plus)?)?, 1);
    p.insert(parity_twisted(a, Sign::Plus, c, Rat::int(1))?, 1);
    p.insert(tensor_tail_factor(a, param, Rat::halves(3 - c))?, 1);
    Ok(p)
}

fn cl1p_bracketed(c: i64, a: i64, r2: i64) -> LProduct {
    let mut p = LProduct::one();
    if r2 >= 1 {
        p.insert(LFactor::at1(Rat::halves(r2 - a) + Rat::halves(1 - c), Kernel::TauTau), 1);
    }
    for i in 1..=(c + 1) / 2 {
        p.insert(LFactor::at2(Rat::int(-c - 1 + 2 * i), Kernel::RhoMinus), 1);
        p.insert(LFactor::at2(Rat::int(-(a - 1) - c - 1 + 2 * i), Kernel::Rho), 1);
    }
    p.insert(LFactor::at1(Rat::halves(1 - a) + Rat::halves(1 - c), Kernel::TauSigma), 1);
    for i in 1..=c / 2 {
        p.insert(LFactor::at2(Rat::int(-c + 2 * i), Kernel::Rho), 1);
        p.insert(LFactor::at2(Rat::int(-(a - 1) - c + 2 * i), Kernel::RhoMinus), 1);
    }
    p
}

fn cl1p_rank_one_parity(a: i64, r2: i64) -> LProduct {
    let mut p = LProduct::one();
    let lead = if a % 2 == 0 { Kernel::Rho } else { Kernel::RhoMinus };
    p.insert(LFactor::at2(Rat::ZERO, lead), 1);
    p.insert(LFactor::at2(Rat::int(1 - a), Kernel::Rho), 1);
    if r2 > 0 {
        p.insert(LFactor::at1(Rat::halves(r2 - a), Kernel::TauTau), 1);
        p.insert(LFactor::at1(Rat::halves(1 - a), Kernel::TauSigma), 1);
    }
    p
}

fn cl3_full(c: i64, r2: i64) -> LProduct {
    let mut p = LProduct::one();
    if r2 == 0 {
        p.insert(LFactor::at1(Rat::halves(r2 - c), Kernel::TauTau), 1);
    } else if r2 < 0 {
        p.insert(LFactor::at1(Rat::halves(1 - c), Kernel::TauSigma), 1);
        p.insert(LFactor::at1(Rat::halves(r2 - c), Kernel::TauTau), 1);
    }
    p
}

fn cl3_reduced(r2: i64) -> LProduct {
    let mut p = LProduct::one();
    p.insert(LFactor::at1(Rat::ZERO, Kernel::TauSigma), 1);
    p.insert(LFactor::at1(Rat::halves(r2 - 1), Kernel::TauTau), 1);
    p
}

/// Trailing tail terms of the target that the reduced reading removes:
/// the pair factor against the second tail entry and the cuspidal tail
/// factor, both at the leftmost block argument w = s - (c-1)/2.
fn reduced_tail_adjustment(c: i64, a: i64, r2: i64) -> Result<LProduct, Error> {
    let w = Rat::halves(1 - c);
    let mut extra = LProduct::one();
    extra.mul_segment(1, w, a, r2, 1)?;
    extra.insert(LFactor::new(1, w + Rat::halves(a - 1), Kernel::TauSigma)?, 1);
    Ok(extra)
}

/// Stated closed forms applicable to this decomposition, each checked
/// against the engine residual.
pub fn closed_forms(dec: &Decomposition) -> Result<Vec<ClosedFormRow>, Error> {
    let WayCtx { way, c, d, a, b, ref param } = dec.ctx;
    let mut rows = Vec::new();
    match way {
        Way::Cl1 => {
            rows.push(row(
                "cl1/prefixed",
                TargetReading::Full,
                cl1_prefixed(c, a, param)?,
                &dec.residual,
                vec![format!(
                    "includes pair factors L(2s+j, tau_{a} x tau_{a}) for j in 1..={}",
                    c - 2
                )],
            ));
            rows.push(row(
                "cl1/plain",
                TargetReading::Full,
                cl1_plain(c, a, param)?,
                &dec.residual,
                vec!["no pair-factor prefix".to_string()],
            ));
        }
        Way::Cl2 => {
            rows.push(row("cl2/plain", TargetReading::Full, cl2_plain(c, a, param)?, &dec.residual, vec![]));
        }
        Way::Cl1p => {
            if let Some(((_, r2), _)) = param.split_leading_pair() {
                rows.push(row(
                    "cl1p/bracketed",
                    TargetReading::Full,
                    cl1p_bracketed(c, a, r2),
                    &dec.residual,
                    vec![
                        "pair term present iff second tail entry r2 >= 1".to_string(),
                        "comb kernels fixed as for odd rank".to_string(),
                    ],
                ));
                if c == 1 {
                    rows.push(row(
                        "cl1p/rank-one-parity",
                        TargetReading::Full,
                        cl1p_rank_one_parity(a, r2),
                        &dec.residual,
                        vec![
                            "leading comb kernel follows the parity of a".to_string(),
                            "pair and tail terms present iff r2 > 0".to_string(),
                        ],
                    ));
                }
            }
        }
        Way::Cl3 if a == 1 => {
            let ((_, r2), _) = param.split_leading_pair().expect("cl3 domain");
            rows.push(row(
                "cl3/full-target",
                TargetReading::Full,
                cl3_full(c, r2),
                &dec.residual,
                vec!["shape split on the sign of the second tail entry r2".to_string()],
            ));
            if c == 1 && a == 1 && r2 <= 0 {
                let engine = dec.residual.mul(&atomize(&reduced_tail_adjustment(c, a, r2)?));
                rows.push(row(
                    "cl3/reduced-target",
                    TargetReading::ReducedTail,
                    cl3_reduced(r2),
                    &engine,
                    vec![
                        "target truncated after its first pair factor".to_string(),
                        "removed terms: L(w, tau x tau_{r2}) L(w, tau x sigma) at w = s".to_string(),
                    ],
                ));
            }
        }
        Way::Cl2p => {}
        Way::Gl1 if d == 1 && a == 1 && b == 1 => {
            let stated =
                LProduct::factor(LFactor::new(2, Rat::halves(c - 1), Kernel::TauTau)?);
            rows.push(row("gl1/plain", TargetReading::Full, stated, &dec.residual, vec![]));
        }
        Way::Gl2 if d == 1 && a == 1 && b == 1 => {
            let stated =
                LProduct::factor(LFactor::new(2, Rat::halves(3 - c), Kernel::TauTau)?);
            rows.push(row("gl2/plain", TargetReading::Full, stated, &dec.residual, vec![]));
        }
        Way::Gl1p if c == 1 && d == 1 && b == 1 => {
            let stated =
                LProduct::factor(LFactor::new(2, Rat::halves(1 - a), Kernel::TauTau)?);
            rows.push(row("gl1p/plain", TargetReading::Full, stated, &dec.residual, vec![]));
        }
        _ => {}
    }
    Ok(rows)
}

// --- block-splitting and rank-splitting identities ---

/// Check the two-block splitting of a GL factor product: the side with the
/// smaller block count peels off one length-one block.
pub fn gl_two_block_check(c: i64, d: i64) -> Result<bool, Error> {
    let lhs = alpha_gl_at(2, Rat::ZERO, c, d, 1, 1)?;
    let rhs = if c >= d {
        alpha_gl_at(2, Rat::halves(d - 1), c, 1, 1, 1)?
            .mul(&alpha_gl_at(2, -Rat::halves(1), c, d - 1, 1, 1)?)
    } else {
        alpha_gl_at(2, Rat::halves(c - 1), 1, d, 1, 1)?
            .mul(&alpha_gl_at(2, -Rat::halves(1), c - 1, d, 1, 1)?)
    };
    Ok(atomize(&lhs) == atomize(&rhs))
}

// --- dual-pair identity audit ---

/// One sample point of the dual-pair identity audit.
#[derive(Debug, Clone, Serialize)]
pub struct DualPairSample {
    pub a: i64,
    pub r1: i64,
    pub r2: i64,
    /// L(s - (r1-r2)/4, pair) * L(s + (r1+r2)/4, pair) == split?
    pub second_shift_sum: bool,
    /// L(s - (r1-r2)/4, pair) * L(s + (r1-r2)/4, pair) == split?
    pub second_shift_diff: bool,
}

/// Audit of the identity
///   L(s - (r1-r2)/4, tau_a x tau_m) L(s + delta, tau_a x tau_m)
///     = L(s, tau_a x tau_{r1}) L(s, tau_a x tau_{r2}),   m = (r1+r2)/2,
/// over its stated domain (a >= r1 > r2 or r1 > r2 >= a, same parity,
/// r2 >= -1), for the two candidate second shifts delta = (r1+r2)/4 and
/// delta = (r1-r2)/4.
#[derive(Debug, Clone, Serialize)]
pub struct DualPairAudit {
    pub samples: Vec<DualPairSample>,
    pub sum_shift_uniform: bool,
    pub diff_shift_uniform: bool,
}

pub fn dual_pair_audit(max_a: i64, max_r: i64) -> Result<DualPairAudit, Error> {
    let mut samples = Vec::new();
    for a in 1..=max_a {
        for r1 in 0..=max_r {
            for r2 in (-1..r1).rev() {
                if (r1 - r2) % 2 != 0 || !(a >= r1 || r2 >= a) {
                    continue;
                }
                let m = (r1 + r2) / 2;
                let delta = Rat::quarters(r1 - r2);
                let mut rhs = LProduct::one();
                rhs.mul_segment(1, Rat::ZERO, a, r1, 1)?;
                rhs.mul_segment(1, Rat::ZERO, a, r2, 1)?;
                let rhs = atomize(&rhs);
                let mut left = LProduct::one();
                left.mul_segment(1, -delta, a, m, 1)?;
                let mut sum = left.clone();
                sum.mul_segment(1, Rat::quarters(r1 + r2), a, m, 1)?;
                let mut diff = left;
                diff.mul_segment(1, delta, a, m, 1)?;
                samples.push(DualPairSample {
                    a,
                    r1,
                    r2,
                    second_shift_sum: atomize(&sum) == rhs,
                    second_shift_diff: atomize(&diff) == rhs,
                });
            }
        }
    }
    Ok(DualPairAudit {
        sum_shift_uniform: samples.iter().all(|s| s.second_shift_sum),
        diff_shift_uniform: samples.iter().all(|s| s.second_shift_diff),
        samples,
    })
}

// --- tests ---
