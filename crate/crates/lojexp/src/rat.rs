//! Exact rational scalars.
//!
//! Every numeric quantity in the engine is a [`Rat`] (arbitrary-precision
//! rational, always in lowest terms with positive denominator) or an integer.
//! There is no floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::EngineError;

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses "a/b" or "a" (lowest terms are restored on construction).
pub fn parse_rat(s: &str) -> Result<Rat, EngineError> {
    let s = s.trim();
    let bad = || EngineError::InvalidInput(format!("cannot parse rational `{s}`"));
    match s.split_once('/') {
        Some((a, b)) => {
            let num: BigInt = a.trim().parse().map_err(|_| bad())?;
            let den: BigInt = b.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(EngineError::InvalidInput(format!(
                    "zero denominator in `{s}`"
                )));
            }
            Ok(Rat::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(num))
        }
    }
}

/// Formats in lowest terms as "a/b", or "a" when integral.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

pub fn rat_ceil(r: &Rat) -> BigInt {
    r.ceil().to_integer()
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Least common multiple of the denominators of a slice of rationals.
pub fn denominator_lcm(rs: &[Rat]) -> BigInt {
    let mut l = BigInt::one();
    for r in rs {
        l = l.lcm(r.denom());
    }
    l
}

/// Exact integer square root (floor).
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative");
    n.sqrt()
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = isqrt(n);
    &r * &r == *n
}
