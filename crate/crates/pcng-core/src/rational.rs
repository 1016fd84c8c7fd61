//! Exact rational scalars and the extended rational line.
//!
//! Costs are rational as long as the network is connected; a disconnected
//! player has infinite closeness cost. [`ExtRat`] models the rationals
//! extended with `+inf` and `-inf` (the latter only appears in cost *deltas*,
//! e.g. when a deviation turns an infinite cost into a finite one).

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational number used for all weights, centralities and costs.
pub type Rat = num_rational::BigRational;

/// Builds the rational `p / q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Builds the integer rational `v`.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// A rational extended with signed infinities, totally ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtRat {
    /// Smaller than every finite value; arises only in cost differences.
    NegInf,
    /// An ordinary finite rational.
    Finite(Rat),
    /// Larger than every finite value; the cost of a disconnected player.
    PosInf,
}

impl ExtRat {
    /// The finite value zero.
    pub fn zero() -> Self {
        ExtRat::Finite(Rat::zero())
    }

    /// Wraps a finite rational.
    pub fn finite(v: Rat) -> Self {
        ExtRat::Finite(v)
    }

    /// Wraps an integer as a finite value.
    pub fn from_int(v: i64) -> Self {
        ExtRat::Finite(rat_int(v))
    }

    /// True for finite values.
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Finite(_))
    }

    /// Borrows the finite value, if any.
    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            ExtRat::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Consumes the value, returning the finite rational if there is one.
    pub fn into_finite(self) -> Option<Rat> {
        match self {
            ExtRat::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Exact sum. Panics on `(+inf) + (-inf)`, which never arises from
    /// well-formed cost terms.
    pub fn add(&self, other: &ExtRat) -> ExtRat {
        match (self, other) {
            (ExtRat::Finite(a), ExtRat::Finite(b)) => ExtRat::Finite(a + b),
            (ExtRat::PosInf, ExtRat::NegInf) | (ExtRat::NegInf, ExtRat::PosInf) => {
                panic!("indeterminate sum of opposite infinities")
            }
            (ExtRat::PosInf, _) | (_, ExtRat::PosInf) => ExtRat::PosInf,
            (ExtRat::NegInf, _) | (_, ExtRat::NegInf) => ExtRat::NegInf,
        }
    }

    /// Exact difference `self - other`. Panics on `inf - inf` of equal sign.
    pub fn sub(&self, other: &ExtRat) -> ExtRat {
        let negated = match other {
            ExtRat::Finite(v) => ExtRat::Finite(-v),
            ExtRat::PosInf => ExtRat::NegInf,
            ExtRat::NegInf => ExtRat::PosInf,
        };
        self.add(&negated)
    }

    /// Multiplies by a finite scale factor. The scale must be strictly
    /// positive when the value is infinite (`0 * inf` is indeterminate and
    /// never arises: only the strictly positive closeness weight multiplies
    /// a possibly-infinite term).
    pub fn scale(&self, k: &Rat) -> ExtRat {
        match self {
            ExtRat::Finite(v) => ExtRat::Finite(v * k),
            ExtRat::PosInf | ExtRat::NegInf => {
                assert!(
                    k.is_positive(),
                    "scaling an infinite value requires a positive factor"
                );
                self.clone()
            }
        }
    }

    /// Renders the value as an exact token: `p/q`, an integer, `inf` or
    /// `-inf`.
    pub fn to_token(&self) -> String {
        use alloc::string::ToString;
        self.to_string()
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRat::Finite(a), ExtRat::Finite(b)) => a.cmp(b),
            (ExtRat::NegInf, ExtRat::NegInf) => Ordering::Equal,
            (ExtRat::PosInf, ExtRat::PosInf) => Ordering::Equal,
            (ExtRat::NegInf, _) => Ordering::Less,
            (_, ExtRat::NegInf) => Ordering::Greater,
            (ExtRat::PosInf, _) => Ordering::Greater,
            (_, ExtRat::PosInf) => Ordering::Less,
        }
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(v) => write!(f, "{v}"),
            ExtRat::PosInf => write!(f, "inf"),
            ExtRat::NegInf => write!(f, "-inf"),
        }
    }
}

impl From<Rat> for ExtRat {
    fn from(v: Rat) -> Self {
        ExtRat::Finite(v)
    }
}

/// Error produced when a numeric token cannot be parsed as an exact rational.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {input:?}: {reason}")]
pub struct RationalParseError {
    /// The offending token.
    pub input: String,
    /// What went wrong.
    pub reason: &'static str,
}

/// Parses an exact rational from an integer (`-3`), fraction (`7/10`) or
/// decimal (`0.35`) literal. Decimals are converted exactly, so `0.1`
/// becomes `1/10` with no floating-point rounding.
pub fn parse_rational(input: &str) -> Result<Rat, RationalParseError> {
    let text = input.trim();
    let err = |reason: &'static str| RationalParseError {
        input: String::from(input),
        reason,
    };
    if text.is_empty() {
        return Err(err("empty token"));
    }
    if let Some((num, den)) = text.split_once('/') {
        let p: BigInt = num
            .trim()
            .parse()
            .map_err(|_| err("numerator is not an integer"))?;
        let q: BigInt = den
            .trim()
            .parse()
            .map_err(|_| err("denominator is not an integer"))?;
        if q.is_zero() {
            return Err(err("denominator is zero"));
        }
        return Ok(Rat::new(p, q));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let (sign, whole_digits) = match whole.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, whole.strip_prefix('+').unwrap_or(whole)),
        };
        if !whole_digits.chars().all(|ch| ch.is_ascii_digit())
            || !frac.chars().all(|ch| ch.is_ascii_digit())
            || (whole_digits.is_empty() && frac.is_empty())
        {
            return Err(err("malformed decimal"));
        }
        let whole_part: BigInt = if whole_digits.is_empty() {
            BigInt::zero()
        } else {
            whole_digits.parse().map_err(|_| err("malformed decimal"))?
        };
        let frac_part: BigInt = if frac.is_empty() {
            BigInt::zero()
        } else {
            frac.parse().map_err(|_| err("malformed decimal"))?
        };
        let mut scale = BigInt::one();
        for _ in 0..frac.len() {
            scale *= 10;
        }
        let magnitude = Rat::new(whole_part * &scale + frac_part, scale);
        return Ok(if sign < 0 { -magnitude } else { magnitude });
    }
    let v: BigInt = text.parse().map_err(|_| err("not an integer"))?;
    Ok(Rat::from_integer(v))
}
