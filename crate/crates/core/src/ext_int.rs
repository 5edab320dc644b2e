//! Integers extended with `-inf` and `+inf`.
//!
//! Bounds, `accept_worst` and `reject_best` all live in this type. Adding a
//! finite cost to an infinity leaves it unchanged; finite arithmetic is checked
//! and reports [`Error::Overflow`] instead of wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, Visitor};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
    PosInf,
}

impl ExtInt {
    pub const ZERO: ExtInt = ExtInt::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// `self + c`, leaving infinities untouched.
    #[inline]
    pub fn add(self, c: i64) -> Result<ExtInt> {
        match self {
            ExtInt::Finite(v) => v.checked_add(c).map(ExtInt::Finite).ok_or(Error::Overflow),
            inf => Ok(inf),
        }
    }

    /// `self - c`, leaving infinities untouched.
    #[inline]
    pub fn sub(self, c: i64) -> Result<ExtInt> {
        match self {
            ExtInt::Finite(v) => v.checked_sub(c).map(ExtInt::Finite).ok_or(Error::Overflow),
            inf => Ok(inf),
        }
    }

    /// Predecessor on the integer line; infinities are their own predecessor.
    pub fn pred(self) -> Result<ExtInt> {
        self.sub(1)
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl PartialEq<i64> for ExtInt {
    fn eq(&self, other: &i64) -> bool {
        *self == ExtInt::Finite(*other)
    }
}

impl PartialOrd<i64> for ExtInt {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&ExtInt::Finite(*other)))
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => f.write_str("-inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::PosInf => f.write_str("+inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid extended integer {0:?}: expected an integer, -inf or +inf")]
pub struct ParseExtIntError(String);

impl FromStr for ExtInt {
    type Err = ParseExtIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "-inf" | "-Inf" | "-INF" => Ok(ExtInt::NegInf),
            "+inf" | "inf" | "+Inf" | "Inf" | "+INF" | "INF" => Ok(ExtInt::PosInf),
            t => t
                .parse::<i64>()
                .map(ExtInt::Finite)
                .map_err(|_| ParseExtIntError(s.to_string())),
        }
    }
}

/// Finite values serialize as JSON integers, infinities as the strings
/// `"-inf"` and `"+inf"`.
impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtInt::Finite(v) => serializer.serialize_i64(*v),
            ExtInt::NegInf => serializer.serialize_str("-inf"),
            ExtInt::PosInf => serializer.serialize_str("+inf"),
        }
    }
}

impl<'de> serde::Deserialize<'de> for ExtInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ExtIntVisitor;

        impl Visitor<'_> for ExtIntVisitor {
            type Value = ExtInt;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or one of \"-inf\", \"+inf\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExtInt, E> {
                Ok(ExtInt::Finite(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExtInt, E> {
                i64::try_from(v)
                    .map(ExtInt::Finite)
                    .map_err(|_| E::custom("integer out of range"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExtInt, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(ExtIntVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_order() {
        assert!(ExtInt::NegInf < ExtInt::Finite(i64::MIN));
        assert!(ExtInt::Finite(i64::MAX) < ExtInt::PosInf);
        assert!(ExtInt::Finite(-3) < ExtInt::Finite(2));
        assert!(ExtInt::Finite(5) > 4);
    }

    #[test]
    fn infinities_absorb_finite_addition() {
        assert_eq!(ExtInt::NegInf.add(7).unwrap(), ExtInt::NegInf);
        assert_eq!(ExtInt::PosInf.sub(-7).unwrap(), ExtInt::PosInf);
        assert_eq!(ExtInt::Finite(3).add(4).unwrap(), ExtInt::Finite(7));
    }

    #[test]
    fn overflow_is_an_error() {
        assert_eq!(ExtInt::Finite(i64::MAX).add(1), Err(Error::Overflow));
        assert_eq!(ExtInt::Finite(i64::MIN).sub(1), Err(Error::Overflow));
    }

    #[test]
    fn parse_and_display() {
        for s in ["-inf", "+inf", "0", "-12", "18040"] {
            let v: ExtInt = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("inf".parse::<ExtInt>().unwrap(), ExtInt::PosInf);
        assert!("1e3".parse::<ExtInt>().is_err());
    }

    #[test]
    fn json_encoding() {
        let v = vec![ExtInt::NegInf, ExtInt::Finite(-4), ExtInt::PosInf];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"["-inf",-4,"+inf"]"#);
        let back: Vec<ExtInt> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
