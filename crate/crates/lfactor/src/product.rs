//! Exponent-weighted multisets of L-factors.
//!
//! A product is a finite map factor -> nonzero integer exponent; multiplying
//! cancels exactly, so `x.mul(&x.inverse())` is the empty product. The map
//! is ordered, which makes iteration and every derived report deterministic.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::factor::LFactor;
use crate::kernel::Kernel;
use crate::rational::Rat;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LProduct {
    terms: BTreeMap<LFactor, i64>,
}

impl LProduct {
    pub fn one() -> LProduct {
        LProduct::default()
    }

    pub fn factor(f: LFactor) -> LProduct {
        let mut p = LProduct::one();
        p.insert(f, 1);
        p
    }

    pub fn insert(&mut self, f: LFactor, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.terms.entry(f) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += exp;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(exp);
            }
        }
    }

    /// Multiplies in one tensor-segment factor L(z, tau_a x tau_r), applying
    /// the boundary conventions: a length-0 segment contributes nothing and
    /// a length -1 segment contributes the inverse of the length-1 factor.
    pub fn mul_segment(
        &mut self,
        s_coeff: i64,
        shift: Rat,
        a: i64,
        r: i64,
        exp: i64,
    ) -> Result<(), Error> {
        if r < -1 {
            return Err(Error::SegmentRange(r));
        }
        let (r, exp) = match r {
            0 => return Ok(()),
            -1 => (1, -exp),
            r => (r, exp),
        };
        self.insert(LFactor::new(s_coeff, shift, Kernel::speh(a, r)?)?, exp);
        Ok(())
    }

    pub fn mul(&self, other: &LProduct) -> LProduct {
        let mut out = self.clone();
        for (f, e) in &other.terms {
            out.insert(f.clone(), *e);
        }
        out
    }

    pub fn div(&self, other: &LProduct) -> LProduct {
        self.mul(&other.inverse())
    }

    pub fn pow(&self, k: i64) -> LProduct {
        let mut out = LProduct::one();
        if k != 0 {
            for (f, e) in &self.terms {
                out.insert(f.clone(), e * k);
            }
        }
        out
    }

    pub fn inverse(&self) -> LProduct {
        self.pow(-1)
    }

    pub fn is_one(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct factors.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn exponent_of(&self, f: &LFactor) -> i64 {
        self.terms.get(f).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LFactor, i64)> {
        self.terms.iter().map(|(f, e)| (f, *e))
    }

    /// Substitutes s -> s + delta in every factor.
    pub fn translate(&self, delta: Rat) -> LProduct {
        let mut out = LProduct::one();
        for (f, e) in &self.terms {
            out.insert(f.translate(delta), *e);
        }
        out
    }

    /// Substitutes s -> -s in every factor.
    pub fn reflect(&self) -> LProduct {
        let mut out = LProduct::one();
        for (f, e) in &self.terms {
            out.insert(f.reflect(), *e);
        }
        out
    }

    pub fn is_fully_atomic(&self) -> bool {
        self.terms.keys().all(LFactor::is_atomic)
    }
}

impl fmt::Display for LProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (factor, e) in &self.terms {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{factor}")?;
            } else {
                write!(f, "{factor}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromIterator<(LFactor, i64)> for LProduct {
    fn from_iter<T: IntoIterator<Item = (LFactor, i64)>>(iter: T) -> LProduct {
        let mut p = LProduct::one();
        for (f, e) in iter {
            p.insert(f, e);
        }
        p
    }
}
