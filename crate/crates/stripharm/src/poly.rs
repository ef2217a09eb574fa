//! Dense univariate polynomials with exact rational coefficients.
//!
//! These polynomials live in the scaled axial variable `x = t / pi`, so that
//! every identity of the deflation-chain machinery becomes an exact identity
//! over the rationals. Division is exact-or-error: a nonzero remainder is
//! reported, never rounded away.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::rational::{rat_int, to_f64, Rational};

/// Coefficient list indexed by degree; the leading coefficient is nonzero
/// unless the polynomial is zero (empty list).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    /// Division left a nonzero remainder; carries the remainder as a witness.
    InexactDivision { remainder: Poly },
    /// A family index was outside its valid range.
    IndexOutOfRange { j: u32, l: i64 },
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::InexactDivision { remainder } => {
                write!(f, "inexact polynomial division, remainder {remainder}")
            }
            PolyError::IndexOutOfRange { j, l } => {
                write!(f, "index l={l} out of range for j={j}")
            }
        }
    }
}

impl std::error::Error for PolyError {}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(rat_int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The variable `x` itself.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![rat_int(0), rat_int(1)])
    }

    /// `c * x^deg`.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![rat_int(0); deg + 1];
        coeffs[deg] = c;
        Poly::from_coeffs(coeffs)
    }

    /// Builds from a coefficient list (index = degree), trimming zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&n| rat_int(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> Rational {
        self.coeffs.get(deg).cloned().unwrap_or_else(|| rat_int(0))
    }

    pub fn scale(&self, r: &Rational) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = rat_int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + to_f64(c);
        }
        acc
    }

    /// Exact composition `p(a*x + b)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Poly {
        let inner = Poly::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect(),
        )
    }

    /// Euclidean division; `q` must be nonzero.
    pub fn div_rem(&self, q: &Poly) -> (Poly, Poly) {
        assert!(!q.is_zero(), "division by the zero polynomial");
        let dq = q.degree().unwrap();
        let lead = q.coeffs[dq].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![rat_int(0); self.coeffs.len().saturating_sub(dq)];
        while rem.len() > dq {
            let dr = rem.len() - 1;
            let factor = rem[dr].clone() / lead.clone();
            let shift = dr - dq;
            for (i, qc) in q.coeffs.iter().enumerate() {
                rem[shift + i] -= qc * &factor;
            }
            quot[shift] = factor;
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            if rem.len() <= dq {
                break;
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact division: returns `r` with `self = q * r`, or the remainder as
    /// an error witness when the division does not come out even.
    pub fn divide_exact(&self, q: &Poly) -> Result<Poly, PolyError> {
        let (quot, rem) = self.div_rem(q);
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(PolyError::InexactDivision { remainder: rem })
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![rat_int(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
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
            match deg {
                0 => write!(f, "{mag}")?,
                1 if mag == rat_int(1) => write!(f, "x")?,
                1 => write!(f, "{mag}*x")?,
                _ if mag == rat_int(1) => write!(f, "x^{deg}")?,
                _ => write!(f, "{mag}*x^{deg}")?,
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
    fn add_cancellation() {
        // (1+x) + (1-x) = 2
        let p = Poly::from_ints(&[1, 1]);
        let q = Poly::from_ints(&[1, -1]);
        assert_eq!(&p + &q, Poly::from_ints(&[2]));
    }

    #[test]
    fn mul_expansion() {
        // (1+x)(2+x) = x^2 + 3x + 2
        let p = Poly::from_ints(&[1, 1]);
        let q = Poly::from_ints(&[2, 1]);
        assert_eq!(&p * &q, Poly::from_ints(&[2, 3, 1]));
    }

    #[test]
    fn affine_composition() {
        // p(x) = 1 - x shifted to p(x+1) = -x
        let p = Poly::from_ints(&[1, -1]);
        assert_eq!(
            p.compose_affine(&rat_int(1), &rat_int(1)),
            Poly::from_ints(&[0, -1])
        );
        // scale: p(2x) = 1 - 2x
        assert_eq!(
            p.compose_affine(&rat_int(2), &rat_int(0)),
            Poly::from_ints(&[1, -2])
        );
    }

    #[test]
    fn exact_division() {
        // 2x(4 - x^2) / x = 2(4 - x^2)
        let num = Poly::from_ints(&[0, 8, 0, -2]);
        let den = Poly::x();
        assert_eq!(num.divide_exact(&den).unwrap(), Poly::from_ints(&[8, 0, -2]));
        // (x^2+3x+2)/(1+x) = 2+x
        let num = Poly::from_ints(&[2, 3, 1]);
        let den = Poly::from_ints(&[1, 1]);
        assert_eq!(num.divide_exact(&den).unwrap(), Poly::from_ints(&[2, 1]));
    }

    #[test]
    fn inexact_division_reports_remainder() {
        // (x^2 + 1) / x leaves remainder 1
        let num = Poly::from_ints(&[1, 0, 1]);
        match num.divide_exact(&Poly::x()) {
            Err(PolyError::InexactDivision { remainder }) => {
                assert_eq!(remainder, Poly::one());
            }
            other => panic!("expected inexact division, got {other:?}"),
        }
    }

    #[test]
    fn eval_exact_and_float() {
        let p = Poly::from_coeffs(vec![rat(1, 2), rat_int(0), rat_int(1)]); // x^2 + 1/2
        assert_eq!(p.eval(&rat(1, 2)), rat(3, 4));
        assert!((p.eval_f64(0.5) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn derivative_rule() {
        let p = Poly::from_ints(&[5, 0, 3, 2]); // 2x^3 + 3x^2 + 5
        assert_eq!(p.derivative(), Poly::from_ints(&[0, 6, 6]));
        assert_eq!(Poly::one().derivative(), Poly::zero());
    }

    #[test]
    fn display_readable() {
        assert_eq!(Poly::from_ints(&[2, 3, 1]).to_string(), "2 + 3*x + x^2");
        assert_eq!(Poly::from_ints(&[0, -1]).to_string(), "-x");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
