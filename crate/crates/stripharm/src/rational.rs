//! Exact arbitrary-precision rational scalars.
//!
//! Thin helpers around [`num_rational::BigRational`], which already keeps
//! values in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as an exact rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"a/b"` or `"a"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| format!("invalid rational {s:?}: {e}"))
}

/// Always-explicit `"num/den"` form, e.g. `3` serializes as `"3/1"`.
pub fn frac_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn binomial(n: u32, k: u32) -> Rational {
    Rational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// `r^e` for a signed exponent; `0^negative` panics.
pub fn pow_rat(r: &Rational, e: i32) -> Rational {
    if e == 0 {
        return rat_int(1);
    }
    let mut acc = rat_int(1);
    let base = if e > 0 {
        r.clone()
    } else {
        assert!(!r.is_zero(), "zero to a negative power");
        r.recip()
    };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// True if `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

/// `r` as `i64` when it is an integer in range.
pub fn as_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Exact sign as -1, 0 or 1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_normalize() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-2").unwrap(), rat_int(-2));
        assert_eq!(frac_string(&rat(3, 2)), "3/2");
        assert_eq!(frac_string(&rat_int(5)), "5/1");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(pow_rat(&rat(2, 3), 2), rat(4, 9));
        assert_eq!(pow_rat(&rat(2, 3), -1), rat(3, 2));
        assert_eq!(pow_rat(&rat(7, 5), 0), rat_int(1));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), rat_int(6));
        assert_eq!(binomial(8, 0), rat_int(1));
    }
}
