//! Exact rational arithmetic. Every probability in the crate is a
//! [`Rational`]; nothing on the verification path ever rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (maintained by `num-rational`).
pub type Rational = BigRational;

/// Rational from an integer pair. Panics on zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn integer(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Lowest-terms `"num/den"` form with the denominator always written, so
/// that report files are uniform (`"1/1"`, never `"1"`).
pub fn to_frac_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` (or a bare integer) back into a rational.
pub fn from_frac_string(s: &str) -> Result<Rational, Error> {
    let bad = || Error::InvalidArgument(format!("malformed rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// True if `r` is a probability-style value: `0 <= r <= 1`.
pub fn is_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r <= BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frac_strings_round_trip() {
        let r = ratio(-6, 8);
        assert_eq!(to_frac_string(&r), "-3/4");
        assert_eq!(from_frac_string("-3/4").unwrap(), r);
        assert_eq!(from_frac_string("5").unwrap(), integer(5));
        assert_eq!(to_frac_string(&integer(1)), "1/1");
    }

    #[test]
    fn frac_string_rejects_zero_denominator() {
        assert!(from_frac_string("1/0").is_err());
        assert!(from_frac_string("x/2").is_err());
    }
}
