//! Independent oracle enumerators for the integration suites.
//!
//! Everything here works over plain tuples `(s_coeff, shift_in_quarters,
//! kernel_tag, exponent)` and walks the defining index ranges directly, with
//! no help from the library's product algebra. The library is only touched
//! by `atoms_of`, which converts a fully expanded `LProduct` into the same
//! tuple form for comparison.

use std::collections::BTreeMap;

use lfactor::{Kernel, LProduct};

/// `(s_coeff, 4 * shift, kernel tag, exponent)` with tags
/// `"rho" | "rho-" | "tausigma" | "tautau"`.
pub type Atom = (i64, i64, &'static str, i64);

pub type AtomMap = BTreeMap<(i64, i64, &'static str), i64>;

pub fn push(out: &mut AtomMap, coeff: i64, quarters: i64, tag: &'static str, exp: i64) {
    let e = out.entry((coeff, quarters, tag)).or_insert(0);
    *e += exp;
    if *e == 0 {
        out.remove(&(coeff, quarters, tag));
    }
}

pub fn sorted(map: AtomMap) -> Vec<Atom> {
    map.into_iter().map(|((c, q, t), e)| (c, q, t, e)).collect()
}

// ---------------------------------------------------------------------------
// expansion oracles
// ---------------------------------------------------------------------------

/// L(coeff*s + q/4, tau_a, rho) for `plus`, rho^- otherwise, to rank-one
/// twisted atoms: the rho comb sits at +a+1-2i for i = 1..ceil(a/2) and the
/// opposite-kernel comb at +a-2i for i = 1..floor(a/2).
pub fn o_twisted(coeff: i64, q: i64, a: i64, plus: bool, exp: i64, out: &mut AtomMap) {
    assert!(a >= 1);
    let (same, swapped) = if plus { ("rho", "rho-") } else { ("rho-", "rho") };
    for i in 1..=(a + 1) / 2 {
        push(out, coeff, q + 4 * (a + 1 - 2 * i), same, exp);
    }
    for i in 1..=a / 2 {
        push(out, coeff, q + 4 * (a - 2 * i), swapped, exp);
    }
}

/// L(coeff*s + q/4, tau_a x tau_r) to pair atoms: min(a,r) factors centered
/// at +(max(a,r)-1)/2.
pub fn o_segment(coeff: i64, q: i64, a: i64, r: i64, exp: i64, out: &mut AtomMap) {
    assert!(a >= 1 && r >= 1);
    let (hi, lo) = (a.max(r), a.min(r));
    for k in 0..lo {
        push(out, coeff, q + 2 * (hi - 1) + 4 * k - 2 * (lo - 1), "tautau", exp);
    }
}

/// Diagonal refinement of a single pair atom: L(z, tau x tau) = L(z, rho) L(z, rho^-).
pub fn o_refine(map: AtomMap) -> AtomMap {
    let mut out = AtomMap::new();
    for ((c, q, t), e) in map {
        if t == "tautau" {
            push(&mut out, c, q, "rho", e);
            push(&mut out, c, q, "rho-", e);
        } else {
            push(&mut out, c, q, t, e);
        }
    }
    out
}

/// L(coeff*s + q/4, tau_a x sigma_r) peeled to segments plus the residual
/// tau x sigma factor at +(a-1)/2. Length-0 segments drop out and length
/// -1 segments contribute the inverse of a length-1 segment.
pub fn o_tensor_discrete(coeff: i64, q: i64, a: i64, r: &[i64], exp: i64, out: &mut AtomMap) {
    for &rt in r {
        if rt >= 1 {
            o_segment(coeff, q, a, rt, exp, out);
        } else if rt == -1 {
            o_segment(coeff, q, a, 1, -exp, out);
        } else {
            assert_eq!(rt, 0);
        }
    }
    push(out, coeff, q + 2 * (a - 1), "tausigma", exp);
}

// ---------------------------------------------------------------------------
// normalizing-factor oracles
// ---------------------------------------------------------------------------

/// alpha_{c,a}(s + off/4) with tail segments `r`, fully atomized
/// (pair atoms refined away so only rho / rho- / tausigma remain).
pub fn o_alpha(off: i64, c: i64, a: i64, r: &[i64], exp: i64, out: &mut AtomMap) {
    assert!(c >= 1 && a >= 1);
    let mut raw = AtomMap::new();
    for i in 1..=(c + 1) / 2 {
        o_twisted(2, 2 * off + 4 * (2 * i - 1 - c), a, true, exp, &mut raw);
    }
    for i in 1..=c / 2 {
        o_twisted(2, 2 * off + 4 * (2 * i - c), a, false, exp, &mut raw);
    }
    o_tensor_discrete(1, off - 2 * (c - 1), a, r, exp, &mut raw);
    for ((cc, q, t), e) in o_refine(raw) {
        push(out, cc, q, t, e);
    }
}

/// beta_c(s + off/4) for the rank-one inducing datum.
pub fn o_beta(off: i64, c: i64, exp: i64, out: &mut AtomMap) {
    assert!(c >= 1);
    for i in 1..=(c + 1) / 2 {
        push(out, 2, 2 * off + 4 * (c + 2 - 2 * i), "rho", exp);
    }
    for i in 1..=c / 2 {
        push(out, 2, 2 * off + 4 * (c + 1 - 2 * i), "rho-", exp);
    }
    push(out, 1, off + 2 * (c + 1), "tausigma", exp);
}

/// alpha_GL(s + off/4, c blocks of tau_a, d blocks of tau_b): min(c,d)
/// tensor factors L(2s + 2*off/4 - j, tau_a x tau_b) with 2j running from
/// |c-d| to c+d-2 in steps of 2, kept at pair-atom granularity.
pub fn o_alpha_gl(off: i64, c: i64, d: i64, a: i64, b: i64, exp: i64, out: &mut AtomMap) {
    assert!(c >= 1 && d >= 1);
    let mut j2 = (c - d).abs();
    while j2 <= c + d - 2 {
        o_segment(2, 2 * off - 2 * j2, a, b, exp, out);
        j2 += 2;
    }
}

// ---------------------------------------------------------------------------
// library -> tuple conversion
// ---------------------------------------------------------------------------

/// Tuple view of a fully expanded product. Panics on composite kernels and
/// on shifts that are not quarter-integers, so it doubles as a granularity
/// assertion.
pub fn atoms_of(p: &LProduct) -> Vec<Atom> {
    let mut out = AtomMap::new();
    for (f, exp) in p.iter() {
        let tag = match f.kernel() {
            Kernel::Rho => "rho",
            Kernel::RhoMinus => "rho-",
            Kernel::TauSigma => "tausigma",
            Kernel::TauTau => "tautau",
            other => panic!("composite kernel {other} in atomized product"),
        };
        let q = f
            .shift()
            .in_quarters()
            .unwrap_or_else(|| panic!("shift {} not quarter-integral", f.shift()));
        push(&mut out, f.s_coeff(), q, tag, exp);
    }
    sorted(out)
}

#[allow(dead_code)]
pub fn show(atoms: &[Atom]) -> String {
    let rows: Vec<String> = atoms
        .iter()
        .map(|(c, q, t, e)| format!("({c}s + {q}/4, {t})^{e}"))
        .collect();
    rows.join(" ")
}
