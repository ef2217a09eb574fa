//! The representable class of functions on the strip: finite sums of
//! separated modes.
//!
//! Two mode shapes exist. A trig-exponential mode is
//! `c * t^m * trig(k t) * exp(<kappa, y>)` with rational frequency `k > 0`
//! and a rational direction vector `kappa` satisfying `|kappa|^2 = k^2`
//! exactly, so one strip-Laplacian application stays inside the class. A
//! polynomial-harmonic mode is `c * t^m * h(y)` with `h` a harmonic
//! polynomial (checked at construction).
//!
//! Coefficients are exact [`PiScalar`] values. Operations that leave the
//! exact class (shifts by a generic real offset) switch the sum to a numeric
//! coefficient overlay: the mode skeletons stay exact, the coefficients
//! become floats, and the exact-only operations refuse such input.

mod calculus;
mod checks;
mod transform;

pub use checks::{Growth, GrowthClass, OddnessReport, PairCheck, Vanishing, YProfile};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::multipoly::MultiPoly;
use crate::pi::PiScalar;
use crate::rational::{rat_int, to_f64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Trig {
    Sin,
    Cos,
}

impl Trig {
    pub fn eval(self, x: f64) -> f64 {
        match self {
            Trig::Sin => x.sin(),
            Trig::Cos => x.cos(),
        }
    }
}

impl fmt::Display for Trig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Trig::Sin => write!(f, "sin"),
            Trig::Cos => write!(f, "cos"),
        }
    }
}

/// A rational direction vector in the transverse coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FrequencyVector {
    components: Vec<Rational>,
}

impl FrequencyVector {
    pub fn new(components: Vec<Rational>) -> Self {
        FrequencyVector { components }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Rational] {
        &self.components
    }

    /// Exact squared Euclidean norm.
    pub fn norm_sq(&self) -> Rational {
        self.components.iter().map(|c| c * c).sum()
    }

    pub fn scale(&self, r: &Rational) -> FrequencyVector {
        FrequencyVector {
            components: self.components.iter().map(|c| c * r).collect(),
        }
    }

    pub fn dot_f64(&self, y: &[f64]) -> f64 {
        self.components
            .iter()
            .zip(y)
            .map(|(c, v)| to_f64(c) * v)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModeKind {
    TrigExp {
        trig: Trig,
        freq: Rational,
        direction: FrequencyVector,
    },
    PolyHarm {
        h: MultiPoly,
    },
}

/// One separated mode `coeff * t^m * (shape)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mode {
    pub coeff: PiScalar,
    pub m: u32,
    pub kind: ModeKind,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ModeError {
    DimensionMismatch { expected: usize, got: usize },
    /// `|kappa|^2 != k^2`.
    FrequencyMismatch,
    NonPositiveFrequency,
    NotHarmonic,
    /// Exact operation invoked on a sum carrying a numeric overlay.
    InexactInput,
    /// Spacing or scale argument must be an exact rational multiple of pi.
    SpacingNotExact,
}

impl fmt::Display for ModeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModeError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            ModeError::FrequencyMismatch => {
                write!(f, "direction norm does not match the frequency")
            }
            ModeError::NonPositiveFrequency => write!(f, "frequency must be positive"),
            ModeError::NotHarmonic => write!(f, "polynomial factor is not harmonic"),
            ModeError::InexactInput => {
                write!(f, "operation requires exact coefficients (numeric overlay present)")
            }
            ModeError::SpacingNotExact => {
                write!(f, "spacing must be an exact rational multiple of pi")
            }
        }
    }
}

impl std::error::Error for ModeError {}

impl Mode {
    /// Validated trig-exponential mode; requires `freq > 0` and
    /// `|direction|^2 = freq^2` exactly.
    pub fn trig_exp(
        coeff: PiScalar,
        m: u32,
        trig: Trig,
        freq: Rational,
        direction: Vec<Rational>,
    ) -> Result<Mode, ModeError> {
        if !freq.is_positive() {
            return Err(ModeError::NonPositiveFrequency);
        }
        let direction = FrequencyVector::new(direction);
        if direction.norm_sq() != &freq * &freq {
            return Err(ModeError::FrequencyMismatch);
        }
        Ok(Mode {
            coeff,
            m,
            kind: ModeKind::TrigExp {
                trig,
                freq,
                direction,
            },
        })
    }

    /// Validated polynomial-harmonic mode; the polynomial factor is
    /// normalized to a monic representative with the scale folded into the
    /// coefficient.
    pub fn poly_harm(coeff: PiScalar, m: u32, h: MultiPoly) -> Result<Mode, ModeError> {
        if !h.is_harmonic() {
            return Err(ModeError::NotHarmonic);
        }
        let (scale, monic) = h.monic();
        Ok(Mode {
            coeff: coeff.scale(&scale),
            m,
            kind: ModeKind::PolyHarm { h: monic },
        })
    }

    pub fn dim(&self) -> usize {
        match &self.kind {
            ModeKind::TrigExp { direction, .. } => direction.dim(),
            ModeKind::PolyHarm { h } => h.dim(),
        }
    }

    /// Upper bound on the polyharmonic order contributed by this mode.
    pub fn order_bound(&self) -> u32 {
        match &self.kind {
            ModeKind::TrigExp { .. } => self.m + 1,
            ModeKind::PolyHarm { .. } => self.m / 2 + 1,
        }
    }

    fn key(&self) -> ModeKey {
        match &self.kind {
            ModeKind::TrigExp {
                trig, direction, ..
            } => ModeKey::TrigExp {
                direction: direction.components.clone(),
                trig: *trig,
                m: self.m,
            },
            ModeKind::PolyHarm { h } => ModeKey::PolyHarm {
                h: h.terms().map(|(k, v)| (k.clone(), v.clone())).collect(),
                m: self.m,
            },
        }
    }

    /// Shape value without the coefficient: `t^m * trig(kt) * exp(<kappa,y>)`
    /// or `t^m * h(y)`.
    pub fn shape_eval(&self, t: f64, y: &[f64]) -> f64 {
        let tp = t.powi(self.m as i32);
        match &self.kind {
            ModeKind::TrigExp {
                trig,
                freq,
                direction,
            } => tp * trig.eval(to_f64(freq) * t) * direction.dot_f64(y).exp(),
            ModeKind::PolyHarm { h } => tp * h.eval(y),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum ModeKey {
    TrigExp {
        direction: Vec<Rational>,
        trig: Trig,
        m: u32,
    },
    PolyHarm {
        h: Vec<(Vec<u32>, Rational)>,
        m: u32,
    },
}

/// A finite sum of modes sharing one transverse dimension.
///
/// Like modes (same shape and `t` power) are combined at construction and
/// the list is kept sorted, so structural equality is semantic equality for
/// exact sums. The empty sum is the zero function.
#[derive(Clone, Debug, PartialEq)]
pub struct ModeSum {
    dim: usize,
    modes: Vec<Mode>,
    /// When present, `overlay[i]` replaces `modes[i].coeff` (which is then 1).
    overlay: Option<Vec<f64>>,
}

impl ModeSum {
    pub fn zero(dim: usize) -> Self {
        ModeSum {
            dim,
            modes: Vec::new(),
            overlay: None,
        }
    }

    /// Builds an exact sum, validating dimensions and combining like modes.
    pub fn new(dim: usize, modes: Vec<Mode>) -> Result<Self, ModeError> {
        for mode in &modes {
            if mode.dim() != dim {
                return Err(ModeError::DimensionMismatch {
                    expected: dim,
                    got: mode.dim(),
                });
            }
        }
        Ok(Self::collect_exact(dim, modes))
    }

    pub fn single(mode: Mode) -> Self {
        let dim = mode.dim();
        Self::collect_exact(dim, vec![mode])
    }

    fn collect_exact(dim: usize, modes: Vec<Mode>) -> ModeSum {
        let mut map: BTreeMap<ModeKey, Mode> = BTreeMap::new();
        for mode in modes {
            let key = mode.key();
            match map.get_mut(&key) {
                Some(existing) => existing.coeff = existing.coeff.add(&mode.coeff),
                None => {
                    map.insert(key, mode);
                }
            }
        }
        let modes = map
            .into_values()
            .filter(|m| !m.coeff.is_zero())
            .collect();
        ModeSum {
            dim,
            modes,
            overlay: None,
        }
    }

    pub(crate) fn collect_numeric(dim: usize, parts: Vec<(Mode, f64)>) -> ModeSum {
        let mut map: BTreeMap<ModeKey, (Mode, f64)> = BTreeMap::new();
        for (mut mode, value) in parts {
            mode.coeff = PiScalar::one();
            let key = mode.key();
            match map.get_mut(&key) {
                Some((_, acc)) => *acc += value,
                None => {
                    map.insert(key, (mode, value));
                }
            }
        }
        let (modes, overlay): (Vec<Mode>, Vec<f64>) =
            map.into_values().filter(|(_, v)| *v != 0.0).unzip();
        ModeSum {
            dim,
            modes,
            overlay: Some(overlay),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modes(&self) -> &[Mode] {
        &self.modes
    }

    /// True when coefficients are exact (no numeric overlay).
    pub fn is_exact(&self) -> bool {
        self.overlay.is_none()
    }

    /// True for the (structurally) zero function.
    pub fn is_zero(&self) -> bool {
        self.modes.is_empty()
    }

    /// Semantic zero test for exact sums: no surviving trig-exponential mode
    /// and the polynomial-harmonic part cancels monomial by monomial (two
    /// distinct harmonic factors can overlap on monomials). Overlay sums are
    /// judged structurally.
    pub fn is_identically_zero(&self) -> bool {
        if self.overlay.is_some() {
            return self.modes.is_empty();
        }
        let mut poly: BTreeMap<(u32, Vec<u32>), PiScalar> = BTreeMap::new();
        for mode in &self.modes {
            match &mode.kind {
                ModeKind::TrigExp { .. } => return false,
                ModeKind::PolyHarm { h } => {
                    for (mono, c) in h.terms() {
                        let entry = poly
                            .entry((mode.m, mono.clone()))
                            .or_insert_with(PiScalar::zero);
                        *entry = entry.add(&mode.coeff.scale(c));
                    }
                }
            }
        }
        poly.values().all(PiScalar::is_zero)
    }

    pub fn numeric_coefficients(&self) -> Option<&[f64]> {
        self.overlay.as_deref()
    }

    /// Effective coefficient of mode `i` as a float.
    pub fn coefficient_f64(&self, i: usize) -> f64 {
        match &self.overlay {
            Some(ov) => ov[i],
            None => self.modes[i].coeff.eval(),
        }
    }

    /// Discards exactness, turning the coefficients into floats.
    pub fn demote_to_numeric(&self) -> ModeSum {
        match &self.overlay {
            Some(_) => self.clone(),
            None => ModeSum::collect_numeric(
                self.dim,
                self.modes
                    .iter()
                    .map(|m| (m.clone(), m.coeff.eval()))
                    .collect(),
            ),
        }
    }

    /// Pointwise evaluation. Panics if `y.len() != dim`.
    pub fn eval(&self, t: f64, y: &[f64]) -> f64 {
        assert_eq!(
            y.len(),
            self.dim,
            "evaluation point has dimension {}, mode sum has {}",
            y.len(),
            self.dim
        );
        self.modes
            .iter()
            .enumerate()
            .map(|(i, m)| self.coefficient_f64(i) * m.shape_eval(t, y))
            .sum()
    }

    /// Sum of the absolute values of the individual mode contributions;
    /// the scale against which residuals at `(t, y)` are judged.
    pub fn magnitude(&self, t: f64, y: &[f64]) -> f64 {
        self.modes
            .iter()
            .enumerate()
            .map(|(i, m)| (self.coefficient_f64(i) * m.shape_eval(t, y)).abs())
            .sum()
    }

    /// Exact addition when both sides are exact; otherwise numeric.
    pub fn add(&self, other: &ModeSum) -> ModeSum {
        assert_eq!(self.dim, other.dim, "mode sum dimensions differ");
        if self.is_exact() && other.is_exact() {
            let mut modes = self.modes.clone();
            modes.extend(other.modes.iter().cloned());
            Self::collect_exact(self.dim, modes)
        } else {
            let mut parts: Vec<(Mode, f64)> = Vec::new();
            for (i, m) in self.modes.iter().enumerate() {
                parts.push((m.clone(), self.coefficient_f64(i)));
            }
            for (i, m) in other.modes.iter().enumerate() {
                parts.push((m.clone(), other.coefficient_f64(i)));
            }
            Self::collect_numeric(self.dim, parts)
        }
    }

    pub fn neg(&self) -> ModeSum {
        self.scale_rational(&rat_int(-1))
    }

    pub fn sub(&self, other: &ModeSum) -> ModeSum {
        self.add(&other.neg())
    }

    pub fn scale_rational(&self, r: &Rational) -> ModeSum {
        match &self.overlay {
            None => ModeSum::collect_exact(
                self.dim,
                self.modes
                    .iter()
                    .map(|m| {
                        let mut m = m.clone();
                        m.coeff = m.coeff.scale(r);
                        m
                    })
                    .collect(),
            ),
            Some(ov) => {
                let rf = to_f64(r);
                ModeSum::collect_numeric(
                    self.dim,
                    self.modes
                        .iter()
                        .zip(ov)
                        .map(|(m, v)| (m.clone(), v * rf))
                        .collect(),
                )
            }
        }
    }

    pub fn scale_pi(&self, s: &PiScalar) -> Result<ModeSum, ModeError> {
        if !self.is_exact() {
            return Err(ModeError::InexactInput);
        }
        Ok(ModeSum::collect_exact(
            self.dim,
            self.modes
                .iter()
                .map(|m| {
                    let mut m = m.clone();
                    m.coeff = m.coeff.mul(s);
                    m
                })
                .collect(),
        ))
    }

    pub(crate) fn require_exact(&self) -> Result<(), ModeError> {
        if self.is_exact() {
            Ok(())
        } else {
            Err(ModeError::InexactInput)
        }
    }
}

impl fmt::Display for ModeSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modes.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.modes.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match &self.overlay {
                Some(ov) => write!(f, "({})", ov[i])?,
                None => write!(f, "({})", m.coeff)?,
            }
            if m.m == 1 {
                write!(f, "*t")?;
            } else if m.m > 1 {
                write!(f, "*t^{}", m.m)?;
            }
            match &m.kind {
                ModeKind::TrigExp {
                    trig,
                    freq,
                    direction,
                } => {
                    write!(f, "*{trig}({freq} t)*exp([")?;
                    for (i, c) in direction.components().iter().enumerate() {
                        if i > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "{c}")?;
                    }
                    write!(f, "].y)")?;
                }
                ModeKind::PolyHarm { h } => write!(f, "*({h})")?,
            }
        }
        Ok(())
    }
}

/// A point (or spacing) on the `t` axis: an exact rational multiple of pi,
/// or a plain float.
#[derive(Clone, Debug, PartialEq)]
pub enum TPoint {
    Pi(Rational),
    Value(f64),
}

impl TPoint {
    /// `(n/d) * pi`.
    pub fn pi(n: i64, d: i64) -> TPoint {
        TPoint::Pi(crate::rational::rat(n, d))
    }

    pub fn zero() -> TPoint {
        TPoint::Pi(rat_int(0))
    }

    pub fn value(x: f64) -> TPoint {
        TPoint::Value(x)
    }

    /// Zero is exactly representable regardless of spelling.
    pub fn canonical(&self) -> TPoint {
        match self {
            TPoint::Value(x) if *x == 0.0 => TPoint::Pi(rat_int(0)),
            other => other.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            TPoint::Pi(q) => to_f64(q) * std::f64::consts::PI,
            TPoint::Value(x) => *x,
        }
    }

    pub fn as_pi(&self) -> Option<&Rational> {
        match self {
            TPoint::Pi(q) => Some(q),
            TPoint::Value(_) => None,
        }
    }

    pub fn neg(&self) -> TPoint {
        match self {
            TPoint::Pi(q) => TPoint::Pi(-q),
            TPoint::Value(x) => TPoint::Value(-x),
        }
    }

    /// Divides by an exact rational factor.
    pub fn div_rational(&self, r: &Rational) -> TPoint {
        match self {
            TPoint::Pi(q) => TPoint::Pi(q / r),
            TPoint::Value(x) => TPoint::Value(x / to_f64(r)),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            TPoint::Pi(q) => q.is_positive(),
            TPoint::Value(x) => *x > 0.0,
        }
    }
}

impl fmt::Display for TPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TPoint::Pi(q) if q.is_zero() => write!(f, "0"),
            TPoint::Pi(q) if *q == rat_int(1) => write!(f, "pi"),
            TPoint::Pi(q) => write!(f, "{q}*pi"),
            TPoint::Value(x) => write!(f, "{x}"),
        }
    }
}

/// Exact `sin` or `cos` of `n * pi/2`.
pub(crate) fn trig_half_value(trig: Trig, n: i64) -> Rational {
    match (trig, n.rem_euclid(4)) {
        (Trig::Sin, 0) | (Trig::Sin, 2) | (Trig::Cos, 1) | (Trig::Cos, 3) => rat_int(0),
        (Trig::Sin, 1) | (Trig::Cos, 0) => rat_int(1),
        (Trig::Sin, 3) | (Trig::Cos, 2) => rat_int(-1),
        _ => unreachable!(),
    }
}

/// Whether `freq * q * pi` lands on the exact-trig lattice `(pi/2) Z`;
/// returns the lattice index `n` with angle `n * pi/2`.
pub(crate) fn half_lattice_index(freq: &Rational, q: &Rational) -> Option<i64> {
    let twice = freq * q * rat_int(2);
    if twice.is_integer() {
        twice.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    pub(crate) fn sin_exp_1d(coeff: i64, m: u32, k: Rational) -> Mode {
        Mode::trig_exp(
            PiScalar::from_int(coeff),
            m,
            Trig::Sin,
            k.clone(),
            vec![k],
        )
        .unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(Mode::trig_exp(
            PiScalar::one(),
            0,
            Trig::Sin,
            rat_int(1),
            vec![rat_int(1), rat_int(1)]
        )
        .is_err());
        // pythagorean direction is fine: |(3/5, 4/5)| = 1
        assert!(Mode::trig_exp(
            PiScalar::one(),
            0,
            Trig::Sin,
            rat_int(1),
            vec![rat(3, 5), rat(4, 5)]
        )
        .is_ok());
        assert!(Mode::trig_exp(PiScalar::one(), 0, Trig::Sin, rat_int(-1), vec![rat_int(-1)])
            .is_err());
        let y1sq = MultiPoly::var(2, 0).mul(&MultiPoly::var(2, 0));
        assert!(Mode::poly_harm(PiScalar::one(), 0, y1sq).is_err());
    }

    #[test]
    fn eval_examples() {
        // sin t * e^y at (0, 5) and (pi/2, 0)
        let u = ModeSum::single(sin_exp_1d(1, 0, rat_int(1)));
        assert_eq!(u.eval(0.0, &[5.0]), 0.0);
        assert!((u.eval(std::f64::consts::FRAC_PI_2, &[0.0]) - 1.0).abs() < 1e-15);
        // t * y at (2, 3)
        let ty = ModeSum::single(
            Mode::poly_harm(PiScalar::one(), 1, MultiPoly::var(1, 0)).unwrap(),
        );
        assert!((ty.eval(2.0, &[3.0]) - 6.0).abs() < 1e-15);
    }

    #[test]
    fn like_modes_combine_and_cancel() {
        let a = sin_exp_1d(2, 1, rat_int(1));
        let b = sin_exp_1d(3, 1, rat_int(1));
        let sum = ModeSum::new(1, vec![a.clone(), b]).unwrap();
        assert_eq!(sum.modes().len(), 1);
        assert_eq!(sum.modes()[0].coeff, PiScalar::from_int(5));

        let u = ModeSum::single(a);
        assert!(u.sub(&u).is_zero());
    }

    #[test]
    fn trig_half_lattice() {
        assert_eq!(trig_half_value(Trig::Sin, 2), rat_int(0)); // sin(pi)
        assert_eq!(trig_half_value(Trig::Sin, 1), rat_int(1)); // sin(pi/2)
        assert_eq!(trig_half_value(Trig::Cos, 2), rat_int(-1)); // cos(pi)
        assert_eq!(trig_half_value(Trig::Sin, -1), rat_int(-1)); // sin(-pi/2)
        // k = 1/3 at t0 = pi is off-lattice
        assert_eq!(half_lattice_index(&rat(1, 3), &rat_int(1)), None);
        assert_eq!(half_lattice_index(&rat(1, 2), &rat_int(1)), Some(1));
    }

    #[test]
    fn shape_eval_matches_closed_form() {
        // trig-exp evaluation against the inlined formula on a spot grid
        let mode = Mode::trig_exp(
            PiScalar::from_int(3),
            2,
            Trig::Cos,
            rat(3, 2),
            vec![rat(9, 10), rat(6, 5)],
        )
        .unwrap();
        let u = ModeSum::single(mode);
        for t in [-1.7, 0.0, 0.9, 2.4] {
            for y in [[-1.0, 0.5], [0.3, -0.2]] {
                let expected =
                    3.0 * t * t * (1.5f64 * t).cos() * (0.9f64 * y[0] + 1.2 * y[1]).exp();
                assert!((u.eval(t, &y) - expected).abs() <= 1e-14 * expected.abs().max(1.0));
            }
        }
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<ModeSum>();
        assert_send_sync::<Mode>();
        assert_send_sync::<PiScalar>();
        assert_send_sync::<crate::poly::Poly>();
        assert_send_sync::<crate::expsum::ExpPolySum>();
    }

    #[test]
    fn numeric_overlay_basics() {
        let u = ModeSum::single(sin_exp_1d(2, 0, rat_int(1)));
        let v = u.demote_to_numeric();
        assert!(!v.is_exact());
        assert_eq!(v.eval(1.0, &[0.5]), u.eval(1.0, &[0.5]));
        assert!(v.require_exact().is_err());
        // mixed addition demotes
        let w = u.add(&v.neg());
        assert!(!w.is_exact());
        assert!(w.is_zero() || w.numeric_coefficients().unwrap().iter().all(|c| *c == 0.0));
    }
}
