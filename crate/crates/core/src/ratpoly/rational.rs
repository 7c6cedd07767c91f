//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`: always stored reduced with a
//! positive denominator, zero is 0/1, and `Display`/`FromStr` use the
//! "p/q" (or bare "p") string form used throughout the config formats.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for n/d from machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses "p/q", "p", or a plain decimal such as "0.25" or "-1.5".
///
/// Decimals are converted exactly (0.3 becomes 3/10); exponent notation is
/// rejected so the exact/inexact boundary stays visible to callers.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Ok(r) = s.parse::<Rational>() {
        if r.denom().is_zero() {
            return Err(Error::Parse(format!("zero denominator in '{s}'")));
        }
        return Ok(r);
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let sign = if int_part.trim_start().starts_with('-') { -1 } else { 1 };
        let int_digits = int_part.trim_start_matches(['+', '-']);
        let ip: BigInt = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            int_digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational '{s}'")))?
        };
        let fp: BigInt = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            frac_part
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational '{s}'")))?
        };
        if fp.is_negative() {
            return Err(Error::Parse(format!("bad rational '{s}'")));
        }
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let unsigned = Rational::new(ip.abs() * &scale + fp, scale);
        return Ok(if sign < 0 { -unsigned } else { unsigned });
    }
    Err(Error::Parse(format!("bad rational '{s}'")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat_int(-4));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("1e-3").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn display_round_trip() {
        for r in [rat(1, 2), rat(-7, 3), rat_int(0), rat_int(5)] {
            assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
        }
    }

    #[test]
    fn normalization_invariants() {
        let r = Rational::new(BigInt::from(2), BigInt::from(-4));
        assert_eq!(r, rat(-1, 2));
        assert!(r.denom() > &BigInt::zero());
    }
}
