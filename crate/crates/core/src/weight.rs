//! Weights in `N ∪ {∞}`, used both as orbifold branch indices and as
//! relator exponents. An infinite weight deletes the corresponding relation.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::exact::{rat, ratio};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Weight {
    Finite(u64),
    Infinite,
}

impl Weight {
    pub fn finite(self) -> Option<u64> {
        match self {
            Weight::Finite(b) => Some(b),
            Weight::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Weight::Infinite)
    }

    /// `1/b`, with `1/∞ = 0`.
    pub fn reciprocal(self) -> BigRational {
        match self {
            Weight::Finite(b) => ratio(1, b as i64),
            Weight::Infinite => rat(0),
        }
    }
}

impl From<u64> for Weight {
    fn from(b: u64) -> Self {
        Weight::Finite(b)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(b) => write!(f, "{b}"),
            Weight::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid weight {0:?}: expected a positive integer or `inf`")]
pub struct WeightParseError(pub String);

impl FromStr for Weight {
    type Err = WeightParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Weight::Infinite);
        }
        match t.parse::<u64>() {
            Ok(b) if b >= 1 => Ok(Weight::Finite(b)),
            _ => Err(WeightParseError(s.to_string())),
        }
    }
}

/// Parses a comma-separated weight list such as `2,3,inf`.
pub fn parse_weights(s: &str) -> Result<Vec<Weight>, WeightParseError> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(str::parse).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("inf".parse::<Weight>().unwrap(), Weight::Infinite);
        assert_eq!(" 7 ".parse::<Weight>().unwrap(), Weight::Finite(7));
        assert!("0".parse::<Weight>().is_err());
        assert!("x".parse::<Weight>().is_err());
        assert_eq!(parse_weights("2, 3,inf").unwrap().len(), 3);
        assert_eq!(Weight::Infinite.to_string(), "inf");
        assert_eq!(Weight::Infinite.reciprocal(), rat(0));
    }
}
