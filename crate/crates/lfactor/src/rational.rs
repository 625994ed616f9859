//! Exact rational shifts.
//!
//! Every argument shift in the calculus is a quarter-integer, so `i64`
//! numerators and denominators are far more than enough; arithmetic here
//! never rounds and panics on a zero denominator.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// Rational number in lowest terms with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i64,
    den: i64,
}

impl Rat {
    pub const ZERO: Rat = Rat { num: 0, den: 1 };
    pub const ONE: Rat = Rat { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Rat { num, den }
    }

    pub fn int(n: i64) -> Rat {
        Rat { num: n, den: 1 }
    }

    pub fn halves(n: i64) -> Rat {
        Rat::new(n, 2)
    }

    pub fn quarters(n: i64) -> Rat {
        Rat::new(n, 4)
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    /// The shift expressed in quarter-integers, when it is one.
    pub fn in_quarters(&self) -> Option<i64> {
        if 4 % self.den == 0 {
            Some(self.num * (4 / self.den))
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn div_int(self, n: i64) -> Rat {
        Rat::new(self.num, self.den * n)
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat::new(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat::new(self.num * rhs.den - rhs.num * self.den, self.den * rhs.den)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat { num: -self.num, den: self.den }
    }
}

impl Mul<i64> for Rat {
    type Output = Rat;
    fn mul(self, rhs: i64) -> Rat {
        Rat::new(self.num * rhs, self.den)
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Reports always spell rationals as `num/den`, denominator included.
impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format!("{}/{}", self.num, self.den))
    }
}

impl FromStr for Rat {
    type Err = String;

    fn from_str(s: &str) -> Result<Rat, String> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<i64>().map_err(|e| e.to_string())?,
                d.trim().parse::<i64>().map_err(|e| e.to_string())?,
            ),
            None => (s.trim().parse::<i64>().map_err(|e| e.to_string())?, 1),
        };
        if den == 0 {
            return Err("zero denominator".into());
        }
        Ok(Rat::new(num, den))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        struct RatVisitor;
        impl Visitor<'_> for RatVisitor {
            type Value = Rat;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as `num/den` or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rat, E> {
                v.parse().map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rat, E> {
                Ok(Rat::int(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rat, E> {
                Ok(Rat::int(v as i64))
            }
        }
        deserializer.deserialize_any(RatVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(Rat::new(2, 4), Rat::halves(1));
        assert_eq!(Rat::new(1, -2), Rat::halves(-1));
        assert_eq!(Rat::new(-3, -6), Rat::halves(1));
        assert_eq!(Rat::new(0, -7), Rat::ZERO);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(Rat::halves(1) + Rat::quarters(1), Rat::quarters(3));
        assert_eq!(Rat::int(1) - Rat::quarters(1), Rat::quarters(3));
        assert_eq!(-Rat::halves(3), Rat::new(-3, 2));
        assert_eq!(Rat::quarters(3) * 2, Rat::halves(3));
        assert_eq!(Rat::halves(3).div_int(2), Rat::quarters(3));
    }

    #[test]
    fn ordering_crosses_denominators() {
        assert!(Rat::quarters(-1) < Rat::ZERO);
        assert!(Rat::halves(1) < Rat::quarters(3));
        assert!(Rat::int(2) > Rat::quarters(7));
    }

    #[test]
    fn quarter_view() {
        assert_eq!(Rat::halves(-3).in_quarters(), Some(-6));
        assert_eq!(Rat::int(2).in_quarters(), Some(8));
        assert_eq!(Rat::new(1, 3).in_quarters(), None);
    }

    #[test]
    fn display_and_parse_round_trip() {
        for r in [Rat::ZERO, Rat::int(-3), Rat::quarters(5), Rat::halves(-1)] {
            assert_eq!(r.to_string().parse::<Rat>().unwrap(), r);
        }
        assert_eq!("6/8".parse::<Rat>().unwrap(), Rat::quarters(3));
    }

    #[test]
    fn serializes_with_denominator() {
        assert_eq!(serde_json::to_string(&Rat::int(3)).unwrap(), "\"3/1\"");
        assert_eq!(serde_json::to_string(&Rat::halves(-1)).unwrap(), "\"-1/2\"");
    }
}
