//! Ground rings: the integers, the rationals and prime fields.
//!
//! Chains are always stored with integer coefficients. A [`Ring`] only
//! matters when coefficients are reduced (prime fields) or when homology
//! is computed.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Ring {
    Integers,
    Rationals,
    PrimeField { p: u64 },
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Ring, AlgebraError> {
        if is_prime(p) {
            Ok(Ring::PrimeField { p })
        } else {
            Err(AlgebraError::NotPrime(p))
        }
    }

    /// Characteristic of the ring, 0 for Z and Q.
    pub fn characteristic(&self) -> u64 {
        match self {
            Ring::PrimeField { p } => *p,
            _ => 0,
        }
    }

    /// Canonical representative of an integer coefficient in this ring.
    pub fn reduce(&self, c: i64) -> i64 {
        match self {
            Ring::PrimeField { p } => c.rem_euclid(*p as i64),
            _ => c,
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Ring::Integers)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "z"),
            Ring::Rationals => write!(f, "q"),
            Ring::PrimeField { p } => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = AlgebraError;

    /// Accepts `z`, `q` and `fp:<p>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "z" => Ok(Ring::Integers),
            "q" => Ok(Ring::Rationals),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .and_then(|t| t.parse::<u64>().ok())
                    .ok_or_else(|| AlgebraError::BadRing(s.to_string()))?;
                Ring::prime_field(p)
            }
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in ["z", "q", "fp:2", "fp:7"] {
            let r: Ring = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("fp:4".parse::<Ring>().is_err());
        assert!("r".parse::<Ring>().is_err());
    }

    #[test]
    fn reduction() {
        let r = Ring::prime_field(3).unwrap();
        assert_eq!(r.reduce(-1), 2);
        assert_eq!(Ring::Integers.reduce(-1), -1);
    }
}
