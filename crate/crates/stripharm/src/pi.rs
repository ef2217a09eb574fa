//! Exact scalars in the ring of Laurent polynomials in pi over the rationals.
//!
//! Shifting a mode `t^m sin(kt) e^(k.y)` by a rational multiple of pi, or
//! dividing a Fourier integral by pi, produces coefficients of the form
//! `sum_n c_n pi^n` with rational `c_n`. Since pi is transcendental, such an
//! expression is zero exactly when every `c_n` is zero, so equality tests on
//! [`PiScalar`] are exact.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::rational::{rat_int, to_f64, Rational};

/// An exact value `sum_n c_n * pi^n` with rational coefficients and a finite
/// set of (possibly negative) integer powers `n`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PiScalar {
    terms: BTreeMap<i32, Rational>,
}

impl PiScalar {
    pub fn zero() -> Self {
        PiScalar::default()
    }

    pub fn one() -> Self {
        PiScalar::from_rational(rat_int(1))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(0, r);
        }
        PiScalar { terms }
    }

    pub fn from_int(n: i64) -> Self {
        PiScalar::from_rational(rat_int(n))
    }

    /// `c * pi^n`.
    pub fn pi_pow(c: Rational, n: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(n, c);
        }
        PiScalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The plain rational value when no pi power is present.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(rat_int(0)),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &PiScalar) -> PiScalar {
        let mut terms = self.terms.clone();
        for (n, c) in &other.terms {
            let entry = terms.entry(*n).or_insert_with(|| rat_int(0));
            *entry += c;
            if entry.is_zero() {
                terms.remove(n);
            }
        }
        PiScalar { terms }
    }

    pub fn sub(&self, other: &PiScalar) -> PiScalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PiScalar {
        PiScalar {
            terms: self.terms.iter().map(|(n, c)| (*n, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &PiScalar) -> PiScalar {
        let mut terms: BTreeMap<i32, Rational> = BTreeMap::new();
        for (n1, c1) in &self.terms {
            for (n2, c2) in &other.terms {
                let entry = terms.entry(n1 + n2).or_insert_with(|| rat_int(0));
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        PiScalar { terms }
    }

    pub fn scale(&self, r: &Rational) -> PiScalar {
        if r.is_zero() {
            return PiScalar::zero();
        }
        PiScalar {
            terms: self.terms.iter().map(|(n, c)| (*n, c * r)).collect(),
        }
    }

    /// Multiplies by `pi^n` (shifts all powers).
    pub fn mul_pi_pow(&self, n: i32) -> PiScalar {
        PiScalar {
            terms: self.terms.iter().map(|(p, c)| (p + n, c.clone())).collect(),
        }
    }

    pub fn eval(&self) -> f64 {
        self.terms
            .iter()
            .map(|(n, c)| to_f64(c) * std::f64::consts::PI.powi(*n))
            .sum()
    }

    /// Iterates `(power, coefficient)` pairs in increasing power order.
    pub fn iter(&self) -> impl Iterator<Item = (&i32, &Rational)> {
        self.terms.iter()
    }
}

impl fmt::Display for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in &self.terms {
            let mag = if c < &rat_int(0) { -c.clone() } else { c.clone() };
            if first {
                if c < &rat_int(0) {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < &rat_int(0) {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "{mag}")?,
                1 if mag == rat_int(1) => write!(f, "pi")?,
                1 => write!(f, "{mag}*pi")?,
                _ if mag == rat_int(1) => write!(f, "pi^{n}")?,
                _ => write!(f, "{mag}*pi^{n}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn arithmetic_and_zero_detection() {
        let a = PiScalar::pi_pow(rat_int(2), 1); // 2 pi
        let b = PiScalar::pi_pow(rat_int(-2), 1);
        assert!(a.add(&b).is_zero());
        let c = a.mul(&a); // 4 pi^2
        assert_eq!(c, PiScalar::pi_pow(rat_int(4), 2));
        assert!((c.eval() - 4.0 * std::f64::consts::PI.powi(2)).abs() < 1e-12);
    }

    #[test]
    fn laurent_powers() {
        let inv = PiScalar::pi_pow(rat_int(3), -1);
        let p = PiScalar::pi_pow(rat_int(1), 1);
        assert_eq!(inv.mul(&p), PiScalar::from_int(3));
        assert_eq!(inv.mul_pi_pow(1), PiScalar::from_int(3));
    }

    #[test]
    fn rational_extraction() {
        assert_eq!(PiScalar::from_rational(rat(3, 2)).as_rational(), Some(rat(3, 2)));
        assert_eq!(PiScalar::zero().as_rational(), Some(rat_int(0)));
        assert_eq!(PiScalar::pi_pow(rat_int(1), 2).as_rational(), None);
    }

    #[test]
    fn display_forms() {
        let x = PiScalar::from_int(2)
            .add(&PiScalar::pi_pow(rat(-1, 3), 2))
            .add(&PiScalar::pi_pow(rat_int(1), 1));
        assert_eq!(x.to_string(), "2 + pi - 1/3*pi^2");
        assert_eq!(PiScalar::zero().to_string(), "0");
    }
}
