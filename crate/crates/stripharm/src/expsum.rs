//! Transverse-only symbolic sums `sum c * q(y) * exp(<kappa, y>)` and the
//! exact modified-Helmholtz calculus on them.
//!
//! This is the class the Fourier coefficients of a mode sum live in. Terms
//! are stored fully expanded (direction, monomial) -> coefficient, so
//! addition, the operator `Delta_y - k^2`, and exact zero tests are all
//! coefficient-map operations.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::multipoly::MultiPoly;
use crate::pi::PiScalar;
use crate::rational::{rat_int, to_f64, Rational};

/// Fully expanded term key: exponential direction and monomial exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExpKey {
    pub kappa: Vec<Rational>,
    pub mono: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct ExpPolySum {
    dim: usize,
    terms: BTreeMap<ExpKey, PiScalar>,
}

/// Verdict of the strict-growth uniqueness decision for kernel elements of
/// `(Delta_y - k^2)^N`.
#[derive(Clone, Debug, PartialEq)]
pub enum KernelVerdict {
    /// The function is identically zero: both hypotheses hold.
    IdenticallyZero,
    /// Nonzero kernel element; every surviving direction has `|kappa| = k`,
    /// so the growth is exactly `e^(k|y|)` and the little-o bound fails.
    GrowthViolated { rate_sq: Rational },
}

/// The operand was not annihilated by `(Delta_y - k^2)^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct NotInKernel {
    pub surviving: ExpPolySum,
}

impl fmt::Display for NotInKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not annihilated; surviving terms: {}", self.surviving)
    }
}

impl std::error::Error for NotInKernel {}

impl ExpPolySum {
    pub fn zero(dim: usize) -> Self {
        ExpPolySum {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpKey, &PiScalar)> {
        self.terms.iter()
    }

    /// Adds `coeff * q(y) * exp(<kappa, y>)`, expanding the polynomial.
    pub fn add_term(&mut self, coeff: &PiScalar, q: &MultiPoly, kappa: Vec<Rational>) {
        assert_eq!(q.dim(), self.dim, "polynomial dimension mismatch");
        assert_eq!(kappa.len(), self.dim, "direction dimension mismatch");
        for (mono, c) in q.terms() {
            self.insert(
                ExpKey {
                    kappa: kappa.clone(),
                    mono: mono.clone(),
                },
                coeff.scale(c),
            );
        }
    }

    /// Adds a pure exponential `coeff * exp(<kappa, y>)`.
    pub fn add_exponential(&mut self, coeff: &PiScalar, kappa: Vec<Rational>) {
        assert_eq!(kappa.len(), self.dim, "direction dimension mismatch");
        self.insert(
            ExpKey {
                kappa,
                mono: vec![0; self.dim],
            },
            coeff.clone(),
        );
    }

    fn insert(&mut self, key: ExpKey, value: PiScalar) {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(value);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&value);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &ExpPolySum) -> ExpPolySum {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, s: &PiScalar) -> ExpPolySum {
        let mut out = ExpPolySum::zero(self.dim);
        for (k, v) in &self.terms {
            out.insert(k.clone(), v.mul(s));
        }
        out
    }

    /// One exact application of `Delta_y - k^2`.
    ///
    /// On a term `y^a exp(<kappa, y>)` the Laplacian splits into
    /// `|kappa|^2 y^a + 2 sum_i kappa_i a_i y^(a - e_i)
    ///  + sum_i a_i (a_i - 1) y^(a - 2 e_i)`, all times the exponential.
    pub fn apply_helmholtz(&self, k_sq: &Rational) -> ExpPolySum {
        let mut out = ExpPolySum::zero(self.dim);
        for (key, coeff) in &self.terms {
            let norm_sq: Rational = key.kappa.iter().map(|c| c * c).sum();
            let head = &norm_sq - k_sq;
            out.insert(key.clone(), coeff.scale(&head));
            for i in 0..self.dim {
                let a = key.mono[i];
                if a >= 1 {
                    let mut mono = key.mono.clone();
                    mono[i] -= 1;
                    out.insert(
                        ExpKey {
                            kappa: key.kappa.clone(),
                            mono,
                        },
                        coeff.scale(&(rat_int(2 * a as i64) * &key.kappa[i])),
                    );
                }
                if a >= 2 {
                    let mut mono = key.mono.clone();
                    mono[i] -= 2;
                    out.insert(
                        ExpKey {
                            kappa: key.kappa.clone(),
                            mono,
                        },
                        coeff.scale(&rat_int(a as i64 * (a as i64 - 1))),
                    );
                }
            }
        }
        out
    }

    /// `(Delta_y - k^2)^n`, exactly.
    pub fn apply_helmholtz_power(&self, k_sq: &Rational, n: u32) -> ExpPolySum {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.apply_helmholtz(k_sq);
        }
        out
    }

    pub fn eval(&self, y: &[f64]) -> f64 {
        assert_eq!(y.len(), self.dim, "evaluation point dimension mismatch");
        self.terms
            .iter()
            .map(|(key, c)| {
                let expo: f64 = key
                    .kappa
                    .iter()
                    .zip(y)
                    .map(|(k, v)| to_f64(k) * v)
                    .sum();
                let mono: f64 = key
                    .mono
                    .iter()
                    .zip(y)
                    .map(|(&e, &v)| v.powi(e as i32))
                    .product();
                c.eval() * mono * expo.exp()
            })
            .sum()
    }

    /// Decides the two-hypothesis uniqueness question for the operator
    /// `(Delta_y - k^2)^N` with the strict growth bound below `e^(k|y|)`.
    ///
    /// If the sum is not in the kernel the question does not arise and the
    /// surviving terms are returned as the error. A nonzero kernel element
    /// necessarily has every direction at `|kappa| = k` exactly, which
    /// saturates the growth bound, so the hypotheses hold iff the function
    /// is identically zero.
    pub fn kernel_decide(&self, k: &Rational, n: u32) -> Result<KernelVerdict, NotInKernel> {
        let k_sq = k * k;
        let image = self.apply_helmholtz_power(&k_sq, n);
        if !image.is_zero() {
            return Err(NotInKernel { surviving: image });
        }
        if self.is_zero() {
            return Ok(KernelVerdict::IdenticallyZero);
        }
        let rate_sq = self
            .terms
            .keys()
            .map(|key| key.kappa.iter().map(|c| c * c).sum::<Rational>())
            .max()
            .unwrap_or_else(|| rat_int(0));
        debug_assert_eq!(rate_sq, k_sq, "kernel element off the critical sphere");
        Ok(KernelVerdict::GrowthViolated { rate_sq })
    }
}

impl fmt::Display for ExpPolySum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (j, &e) in key.mono.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*y{}", j + 1)?,
                    _ => write!(f, "*y{}^{}", j + 1, e)?,
                }
            }
            if key.kappa.iter().any(|v| !v.is_zero()) {
                write!(f, "*exp([")?;
                for (j, v) in key.kappa.iter().enumerate() {
                    if j > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "].y)")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn exp_y(dim: usize, kappa: Vec<Rational>) -> ExpPolySum {
        let mut s = ExpPolySum::zero(dim);
        s.add_exponential(&PiScalar::one(), kappa);
        s
    }

    #[test]
    fn helmholtz_annihilates_matched_exponential() {
        // (d^2/dy^2 - 1) e^y = 0
        let f = exp_y(1, vec![rat_int(1)]);
        assert!(f.apply_helmholtz(&rat_int(1)).is_zero());
        // (d^2/dy^2 - 1) e^{y/2} = -(3/4) e^{y/2}
        let g = exp_y(1, vec![rat(1, 2)]);
        let image = g.apply_helmholtz(&rat_int(1));
        let expected = exp_y(1, vec![rat(1, 2)]).scale(&PiScalar::from_rational(rat(-3, 4)));
        assert_eq!(image, expected);
    }

    #[test]
    fn helmholtz_on_polynomial_terms() {
        // (Delta - 1)(2y) = -2y
        let mut f = ExpPolySum::zero(1);
        f.add_term(
            &PiScalar::from_int(2),
            &MultiPoly::var(1, 0),
            vec![rat_int(0)],
        );
        let image = f.apply_helmholtz(&rat_int(1));
        assert_eq!(image, f.scale(&PiScalar::from_int(-1)));
    }

    #[test]
    fn power_kernel_with_polynomial_factor() {
        // y e^y is killed by (d^2/dy^2 - 1)^2 but not by one application
        let mut f = ExpPolySum::zero(1);
        f.add_term(&PiScalar::one(), &MultiPoly::var(1, 0), vec![rat_int(1)]);
        assert!(!f.apply_helmholtz(&rat_int(1)).is_zero());
        assert!(f.apply_helmholtz_power(&rat_int(1), 2).is_zero());
    }

    #[test]
    fn kernel_decisions() {
        let zero = ExpPolySum::zero(1);
        assert_eq!(
            zero.kernel_decide(&rat_int(1), 1).unwrap(),
            KernelVerdict::IdenticallyZero
        );
        let f = exp_y(1, vec![rat_int(1)]);
        assert_eq!(
            f.kernel_decide(&rat_int(1), 1).unwrap(),
            KernelVerdict::GrowthViolated {
                rate_sq: rat_int(1)
            }
        );
        let g = exp_y(1, vec![rat(1, 2)]);
        let err = g.kernel_decide(&rat_int(1), 1).unwrap_err();
        assert!(!err.surviving.is_zero());
    }

    #[test]
    fn eval_matches_closed_form() {
        let mut f = ExpPolySum::zero(2);
        f.add_term(
            &PiScalar::from_int(3),
            &MultiPoly::var(2, 1),
            vec![rat(3, 5), rat(4, 5)],
        );
        let y = [0.2, -0.4];
        let expected = 3.0 * (-0.4) * (0.6f64 * 0.2 + 0.8 * (-0.4)).exp();
        assert!((f.eval(&y) - expected).abs() < 1e-14);
    }
}
