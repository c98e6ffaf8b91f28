//! Exact scalar abstraction for weight coordinates.
//!
//! Everything in this crate is computed in exact rational arithmetic; the
//! scalar type is generic so that the same code runs over arbitrary-precision
//! rationals (the default, see the crate-root aliases) or over `Ratio<i64>`
//! when speed matters more than overflow headroom.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num::rational::Ratio;
use num::{BigInt, BigRational, Num, Signed, ToPrimitive};

/// An exact rational scalar.
///
/// The bounds deliberately exclude floating point: `Eq + Ord + Hash` plus the
/// integrality queries below only make sense for exact types.
pub trait Scalar:
    Clone + Eq + Ord + Hash + Debug + Display + Num + Signed + FromStr + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    /// Whether the value is an integer.
    fn is_integer(&self) -> bool;

    /// The value as an `i64`, when it is an integer that fits.
    fn to_int(&self) -> Option<i64>;

    /// Parse `"p/q"` or `"p"`.
    fn parse_frac(s: &str) -> Option<Self> {
        Self::from_str(s.trim()).ok()
    }

    /// Canonical rendering: reduced `"p/q"`, plain `"p"` for integers.
    fn to_frac_string(&self) -> String {
        format!("{self}")
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }

    fn to_int(&self) -> Option<i64> {
        if Ratio::is_integer(self) {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

impl Scalar for Ratio<i64> {
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n)
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }

    fn to_int(&self) -> Option<i64> {
        if Ratio::is_integer(self) {
            Some(*self.numer())
        } else {
            None
        }
    }
}
