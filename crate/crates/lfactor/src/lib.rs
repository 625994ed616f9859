//! Exact calculus for products of local L-factors attached to normalized
//! intertwining operators on quasi-split classical groups.
//!
//! A factor is a formal symbol L(k*s + q, K): an integer coefficient k, a
//! rational shift q in (1/4)Z, and a kernel K naming the representation
//! datum the factor is taken against. Products are exponent-weighted
//! multisets of factors with exact cancellation, so every identity checked
//! here is an identity of finite combinatorial data, not of analytic
//! functions.
//!
//! The crate provides:
//!
//! - the factor/product algebra ([`LFactor`], [`LProduct`], [`Rat`]);
//! - kernel expansions to atomic factors ([`atomize`] and the `expand_*`
//!   family), with composite kernels for one-step displays;
//! - the normalizing factors alpha_{c,a}(s; r), beta_c(s), and the GL block
//!   factor alpha_gl ([`alpha_classical`], [`beta_classical`], [`alpha_gl`]);
//! - reduced decompositions of the corresponding operators and their
//!   residual products ([`ways`]);
//! - pole bookkeeping under the four analytic gate configurations
//!   ([`poles`]) and strategy verdicts built on it ([`strategy`]).
//!
//! All containers are ordered, so equal inputs give byte-identical output.

pub mod error;
pub mod expand;
pub mod factor;
pub mod kernel;
pub mod normalization;
pub mod poles;
pub mod product;
pub mod rational;
pub mod strategy;
pub mod ways;

pub use error::{Error, ParamViolation};
pub use expand::{
    atomize, expand_gl_tensor_recursion, expand_segment, expand_tautau, expand_tensor_discrete,
    expand_twisted,
};
pub use factor::LFactor;
pub use kernel::{DiscreteSeriesParam, Kernel, Sign, SigmaTail};
pub use normalization::{
    alpha_classical, alpha_gl, alpha_gl_at, beta_classical, gcd_products, GroupType, TauConfig,
};
pub use poles::{
    common_poles, common_zeros, factor_dto, pole_loci, product_dto, sign_class, zero_loci, Gate,
    LFactorDto, PoleLocus, SharedLocus, SharedZero, SignClass,
};
pub use product::LProduct;
pub use rational::Rat;
pub use strategy::{
    closed_form_outcomes, gcd_corollary, strategy_check, ClosedFormOutcome, DischargeRule,
    GcdCorollaryReport, StrategyMode, StrategyReport,
};
pub use ways::{
    closed_forms, decompose, dual_pair_audit, gl_two_block_check, ClosedFormRow, Constituent,
    Decomposition, DualPairAudit, TargetReading, Way, WayCtx,
};
