//! Exact rational scalars and points.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::subset::SubsetMask;

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::arg(format!("{s:?} is not a rational number"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::arg(format!("{s:?} has a zero denominator")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// A point of `Q^n` with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint(Vec<Rational>);

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalPoint(coords)
    }

    pub fn zero(n: usize) -> Self {
        RationalPoint(vec![Rational::zero(); n])
    }

    /// The 0/1 indicator vector `e_S`.
    pub fn indicator(s: &SubsetMask) -> Self {
        RationalPoint(
            (1..=s.n())
                .map(|i| if s.contains(i) { Rational::one() } else { Rational::zero() })
                .collect(),
        )
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RationalPoint(v.iter().map(|&x| int(x)).collect())
    }

    pub fn parse(coords: &[&str]) -> Result<Self> {
        Ok(RationalPoint(coords.iter().map(|c| parse_rational(c)).collect::<Result<_>>()?))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    /// `x_i + ... + x_n` for 1-based `i`.
    pub fn suffix_sum(&self, i: usize) -> Rational {
        self.0[i.saturating_sub(1)..].iter().sum()
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        let half = rat(1, 2);
        RationalPoint(self.0.iter().zip(&other.0).map(|(a, b)| (a + b) * &half).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        RationalPoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Index<usize> for RationalPoint {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl FromStr for RationalPoint {
    type Err = Error;

    /// Comma- or whitespace-separated coordinates, optionally bracketed.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts: Vec<&str> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .map(|p| p.trim_matches('"'))
            .filter(|p| !p.is_empty())
            .collect();
        RationalPoint::parse(&parts)
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(format_rational))
    }
}

/// Serializes a rational as its `"p/q"` string.
pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}
