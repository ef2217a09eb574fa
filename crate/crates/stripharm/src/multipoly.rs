//! Multivariate polynomials in the transverse coordinates, with exact
//! rational coefficients. Just enough algebra for harmonic polynomial
//! factors: construction, Laplacian, gradient, scaling and evaluation.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::rational::{pow_rat, rat_int, to_f64, Rational};

/// Sparse monomial map: exponent vector (length = dimension) -> coefficient.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultiPoly {
    dim: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(dim: usize) -> Self {
        MultiPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(dim);
        p.add_term(vec![0; dim], c);
        p
    }

    /// The coordinate `y_i` (zero-based index).
    pub fn var(dim: usize, i: usize) -> Self {
        assert!(i < dim, "variable index out of range");
        let mut mono = vec![0; dim];
        mono[i] = 1;
        let mut p = MultiPoly::zero(dim);
        p.add_term(mono, rat_int(1));
        p
    }

    pub fn from_terms(dim: usize, terms: Vec<(Vec<u32>, Rational)>) -> Self {
        let mut p = MultiPoly::zero(dim);
        for (mono, c) in terms {
            assert_eq!(mono.len(), dim, "monomial length mismatch");
            p.add_term(mono, c);
        }
        p
    }

    fn add_term(&mut self, mono: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.scale(&rat_int(-1)))
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.dim, other.dim);
        let mut out = MultiPoly::zero(self.dim);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mono: Vec<u32> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(mono, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> MultiPoly {
        if r.is_zero() {
            return MultiPoly::zero(self.dim);
        }
        MultiPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    /// Partial derivative with respect to `y_i`.
    pub fn partial(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.dim);
        for (m, c) in &self.terms {
            if m[i] == 0 {
                continue;
            }
            let mut mono = m.clone();
            mono[i] -= 1;
            out.add_term(mono, c * rat_int(m[i] as i64));
        }
        out
    }

    /// Sum of second partials over all coordinates.
    pub fn laplacian(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.dim);
        for i in 0..self.dim {
            out = out.add(&self.partial(i).partial(i));
        }
        out
    }

    pub fn is_harmonic(&self) -> bool {
        self.laplacian().is_zero()
    }

    /// Exact substitution `y -> r * y`: each monomial picks up `r^|mono|`.
    pub fn compose_scale(&self, r: &Rational) -> MultiPoly {
        MultiPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let deg: u32 = m.iter().sum();
                    (m.clone(), c * pow_rat(r, deg as i32))
                })
                .collect(),
        }
    }

    pub fn eval(&self, y: &[f64]) -> f64 {
        assert_eq!(y.len(), self.dim, "evaluation point dimension mismatch");
        self.terms
            .iter()
            .map(|(m, c)| {
                let mono: f64 = m
                    .iter()
                    .zip(y)
                    .map(|(&e, &v)| v.powi(e as i32))
                    .product();
                to_f64(c) * mono
            })
            .sum()
    }

    /// Splits off the leading (lexicographically largest monomial)
    /// coefficient so the remaining polynomial is monic. Returns
    /// `(scale, monic)` with `self = scale * monic`. Zero stays zero.
    pub fn monic(&self) -> (Rational, MultiPoly) {
        match self.terms.iter().next_back() {
            None => (rat_int(1), self.clone()),
            Some((_, lead)) => {
                let scale = lead.clone();
                (scale.clone(), self.scale(&scale.recip()))
            }
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*y{}", i + 1)?,
                    _ => write!(f, "*y{}^{}", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}
