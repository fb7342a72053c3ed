//! Exact rationals extended by +∞, serialized as `"p/q"` and `"inf"`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = Ratio<i64>;

/// Graph distance; `INF` marks different components.
pub const INF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    Finite(Rational),
    Infinite,
}

impl Bound {
    pub fn zero() -> Self {
        Bound::Finite(Rational::from_integer(0))
    }

    pub fn int(v: i64) -> Self {
        Bound::Finite(Rational::from_integer(v))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Bound::Finite(Rational::new(p, q))
    }

    pub fn half(twice: i64) -> Self {
        Bound::Finite(Rational::new(twice, 2))
    }

    pub fn from_dist(d: u32) -> Self {
        if d == INF {
            Bound::Infinite
        } else {
            Bound::int(d as i64)
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Bound::Finite(_))
    }

    pub fn finite(&self) -> Option<Rational> {
        match self {
            Bound::Finite(r) => Some(*r),
            Bound::Infinite => None,
        }
    }
}

impl Default for Bound {
    fn default() -> Self {
        Bound::zero()
    }
}

impl From<Rational> for Bound {
    fn from(r: Rational) -> Self {
        Bound::Finite(r)
    }
}

pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: i64 = p.parse().map_err(|_| format!("bad rational `{s}`"))?;
    let q: i64 = q.parse().map_err(|_| format!("bad rational `{s}`"))?;
    if q == 0 {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Rational::new(p, q))
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(r) => f.write_str(&format_rational(r)),
            Bound::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Bound {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            Ok(Bound::Infinite)
        } else {
            parse_rational(s).map(Bound::Finite)
        }
    }
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Bound {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for plain `Rational` fields.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_puts_infinity_last() {
        assert!(Bound::int(1_000_000) < Bound::Infinite);
        assert!(Bound::half(1) < Bound::int(1));
    }

    #[test]
    fn string_round_trip() {
        for b in [Bound::half(3), Bound::int(2), Bound::Infinite, Bound::ratio(4, 3)] {
            let s = b.to_string();
            assert_eq!(s.parse::<Bound>().unwrap(), b);
        }
        assert_eq!(Bound::int(2).to_string(), "2/1");
        assert_eq!(Bound::half(3).to_string(), "3/2");
    }
}
