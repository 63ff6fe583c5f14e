//! Exact nonnegative rationals with an infinity sentinel.
//!
//! Toughness values such as `(k+1)/(k-1)` are not dyadic, so every
//! comparison in the crate goes through cross-multiplied integers.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::RatioError;

/// A nonnegative rational in lowest terms, or `Infinity`.
///
/// The derived representation is always normalized, so structural equality
/// coincides with numeric equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ratio {
    Finite { num: u64, den: u64 },
    Infinity,
}

impl Ratio {
    pub const ZERO: Ratio = Ratio::Finite { num: 0, den: 1 };
    pub const INFINITY: Ratio = Ratio::Infinity;

    /// Builds `num/den` in lowest terms.
    pub fn new(num: u64, den: u64) -> Result<Ratio, RatioError> {
        if den == 0 {
            return Err(RatioError::ZeroDenominator);
        }
        let g = num.gcd(&den);
        Ok(Ratio::Finite {
            num: num / g,
            den: den / g,
        })
    }

    pub fn integer(value: u64) -> Ratio {
        Ratio::Finite { num: value, den: 1 }
    }

    /// `|S| / c` for a cut of size `size` leaving `components` pieces.
    pub fn of_cut(size: usize, components: usize) -> Ratio {
        Ratio::new(size as u64, components as u64).expect("a cut ratio needs at least one component")
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Ratio::Finite { .. })
    }

    pub fn numer(&self) -> Option<u64> {
        match *self {
            Ratio::Finite { num, .. } => Some(num),
            Ratio::Infinity => None,
        }
    }

    pub fn denom(&self) -> Option<u64> {
        match *self {
            Ratio::Finite { den, .. } => Some(den),
            Ratio::Infinity => None,
        }
    }

    /// Smallest integer not below the value; `None` for infinity.
    pub fn ceil(&self) -> Option<u64> {
        match *self {
            Ratio::Finite { num, den } => Some(num.div_ceil(den)),
            Ratio::Infinity => None,
        }
    }

    /// Multiplies by a nonnegative integer.
    pub fn scale(&self, factor: u64) -> Ratio {
        match *self {
            Ratio::Finite { num, den } => {
                let g = factor.gcd(&den);
                Ratio::Finite {
                    num: num * (factor / g),
                    den: den / g,
                }
            }
            Ratio::Infinity if factor == 0 => Ratio::ZERO,
            Ratio::Infinity => Ratio::Infinity,
        }
    }

    /// True iff `size < self * components`, the strict certificate inequality
    /// `t * c(G - W) > |W|`. Always true for infinity when `components > 0`.
    pub fn exceeds_cut(&self, size: usize, components: usize) -> bool {
        match *self {
            Ratio::Finite { num, den } => (size as u128) * (den as u128) < (num as u128) * (components as u128),
            Ratio::Infinity => components > 0,
        }
    }

    /// True iff `size / components >= self`, i.e. the cut cannot beat `self`.
    pub fn at_most_cut(&self, size: usize, components: usize) -> bool {
        !self.exceeds_cut(size, components)
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        match (*self, *other) {
            (Ratio::Infinity, Ratio::Infinity) => Ordering::Equal,
            (Ratio::Infinity, _) => Ordering::Greater,
            (_, Ratio::Infinity) => Ordering::Less,
            (Ratio::Finite { num: a, den: b }, Ratio::Finite { num: c, den: d }) => {
                ((a as u128) * (d as u128)).cmp(&((c as u128) * (b as u128)))
            }
        }
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ratio::Finite { num, den } => write!(f, "{num}/{den}"),
            Ratio::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Ratio {
    type Err = RatioError;

    /// Accepts `inf`, `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Ratio::Infinity);
        }
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| RatioError::Malformed(s.to_string()))
        };
        match s.split_once('/') {
            Some((p, q)) => Ratio::new(parse(p)?, parse(q)?),
            None => Ok(Ratio::integer(parse(s)?)),
        }
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ratio {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
