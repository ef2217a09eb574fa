//! The deflation chain: even-part extraction, division by `t` with
//! removable-singularity handling, the level-by-level chain construction,
//! and the closed-form evaluation of chain members as weighted sums of
//! shifted even-part copies.
//!
//! Level numbering: the chain of an order-`N` sum has `N - 1` members. The
//! first member is the even part at 0 divided by `t`; each later member is
//! the even part of its predecessor at pi, divided by `t`. The closed form
//! at level `j` reproduces the `(j+1)`-th member: its numerator combines the
//! copies `w((j-2l) pi + t, y)` with the [`chain_weight`] polynomials and its
//! denominator is `t * prod_{i=1..j} (i^2 pi^2 - t^2)`, whose zeros are all
//! simple and are removed by a single derivative quotient.

use std::fmt;

use crate::family::chain_weight;
use crate::grid::GridSpec;
use crate::mode::{ModeError, ModeKind, ModeSum, OddnessReport, TPoint, Trig, Vanishing};
use crate::poly::Poly;
use crate::rational::rat_int;
use crate::tolerances::{
    DEFLATE_SERIES_DELTA, REL_RESIDUAL, SINGULAR_NUMERATOR_TOL, SINGULAR_SNAP,
};

#[derive(Clone, Debug, PartialEq)]
pub enum ChainError {
    /// The operand of a deflation step is not even in `t`.
    NotEven { residual: f64 },
    /// The operand does not vanish on the hyperplane `t = 0`.
    NotVanishingAtZero { residual: f64 },
    /// A closed-form denominator zero is not matched by the numerator.
    SingularityNotRemovable { t: f64, residual: f64 },
    /// Chain level outside `1..=N-1`.
    LevelOutOfRange { j: u32, order: u32 },
    /// A numeric (non-mode-sum) member would need an exact shift to build
    /// the next level.
    InexactCascade { level: usize },
    Mode(ModeError),
}

impl fmt::Display for ChainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainError::NotEven { residual } => {
                write!(f, "operand is not even in t (residual {residual:.3e})")
            }
            ChainError::NotVanishingAtZero { residual } => {
                write!(f, "operand does not vanish at t = 0 (residual {residual:.3e})")
            }
            ChainError::SingularityNotRemovable { t, residual } => write!(
                f,
                "numerator does not vanish at denominator zero t = {t} (residual {residual:.3e})"
            ),
            ChainError::LevelOutOfRange { j, order } => {
                write!(f, "level {j} outside 1..={} for order {order}", order - 1)
            }
            ChainError::InexactCascade { level } => write!(
                f,
                "chain member {level} is numeric; deeper levels need an exact member"
            ),
            ChainError::Mode(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ChainError {}

impl From<ModeError> for ChainError {
    fn from(e: ModeError) -> Self {
        ChainError::Mode(e)
    }
}

/// The even part `u(t0 + t, y) + u(t0 - t, y)`; exact whenever the two
/// shifts stay exact.
pub fn even_part(u: &ModeSum, t0: &TPoint) -> ModeSum {
    u.shifted(t0, false).add(&u.shifted(t0, true))
}

/// A deflated chain member `H(t, y) = w(t, y) / t`.
///
/// When every term of `w` carries a positive power of `t` the quotient is
/// again a mode sum and stays exact. Otherwise the member is an evaluator:
/// away from `t = 0` it computes the quotient directly, and inside a small
/// window it uses the series form `t * w''(0, y) / 2` (forced by `w` even
/// with `w(0, .) = 0`, so `H` is odd with `H(0, .) = 0`).
#[derive(Clone, Debug)]
pub enum HFunction {
    Exact(ModeSum),
    Ratio {
        w: ModeSum,
        /// Second symbolic `t` derivative of `w`, for the series window.
        d2w: ModeSum,
    },
}

impl HFunction {
    pub fn dim(&self) -> usize {
        match self {
            HFunction::Exact(ms) => ms.dim(),
            HFunction::Ratio { w, .. } => w.dim(),
        }
    }

    pub fn as_mode_sum(&self) -> Option<&ModeSum> {
        match self {
            HFunction::Exact(ms) => Some(ms),
            HFunction::Ratio { .. } => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            HFunction::Exact(ms) => ms.is_identically_zero(),
            HFunction::Ratio { w, .. } => w.is_identically_zero(),
        }
    }

    pub fn eval(&self, t: f64, y: &[f64]) -> f64 {
        match self {
            HFunction::Exact(ms) => ms.eval(t, y),
            HFunction::Ratio { w, d2w } => {
                if t.abs() < DEFLATE_SERIES_DELTA {
                    t * d2w.eval(0.0, y) / 2.0
                } else {
                    w.eval(t, y) / t
                }
            }
        }
    }
}

/// Structural evenness for exact sums: `t^m sin` needs odd `m`, `t^m cos`
/// and polynomial-harmonic modes need even `m`.
fn structurally_even(w: &ModeSum) -> bool {
    w.modes().iter().all(|mode| match &mode.kind {
        ModeKind::TrigExp { trig: Trig::Sin, .. } => mode.m % 2 == 1,
        ModeKind::TrigExp { trig: Trig::Cos, .. } => mode.m % 2 == 0,
        ModeKind::PolyHarm { .. } => mode.m % 2 == 0,
    })
}

fn evenness_residual(w: &ModeSum) -> f64 {
    let grid = GridSpec::default_for(w.dim());
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for t in grid.t_values() {
        for y in grid.y_points() {
            worst = worst.max((w.eval(t, &y) - w.eval(-t, &y)).abs());
            scale = scale.max(w.magnitude(t, &y));
        }
    }
    worst / scale.max(f64::MIN_POSITIVE)
}

/// Divides an even, zero-at-zero sum by `t`.
///
/// Exact sums divide term by term (evenness plus exact vanishing force
/// `m >= 1` on every mode). Numeric-overlay sums become a [`HFunction::Ratio`]
/// evaluator with the removable singularity handled by the series window.
pub fn deflate_once(w: &ModeSum) -> Result<HFunction, ChainError> {
    if w.is_exact() {
        match w.vanishing_at(&TPoint::zero()) {
            Vanishing::ExactZero => {}
            v => {
                return Err(ChainError::NotVanishingAtZero {
                    residual: v.residual(),
                })
            }
        }
        // exact division whenever every term carries a power of t; an even
        // sum vanishing at zero always does, and non-even sums with m >= 1
        // divide just as well
        if w.modes().iter().all(|mode| mode.m >= 1) {
            let modes = w
                .modes()
                .iter()
                .map(|mode| {
                    let mut m = mode.clone();
                    m.m -= 1;
                    m
                })
                .collect();
            return Ok(HFunction::Exact(
                ModeSum::new(w.dim(), modes).map_err(ChainError::Mode)?,
            ));
        }
        // leftover m = 0 sine terms: the quotient is no mode sum, and the
        // series window below would need evenness this operand lacks
        debug_assert!(!structurally_even(w));
        Err(ChainError::NotEven {
            residual: evenness_residual(w),
        })
    } else {
        let resid = evenness_residual(w);
        if resid > REL_RESIDUAL {
            return Err(ChainError::NotEven { residual: resid });
        }
        if let Vanishing::Nonzero { residual } = w.vanishing_at(&TPoint::zero()) {
            return Err(ChainError::NotVanishingAtZero { residual });
        }
        let d2w = w.t_derivative().t_derivative();
        Ok(HFunction::Ratio { w: w.clone(), d2w })
    }
}

/// One member of the constructed chain with its own hypothesis residuals.
#[derive(Clone, Debug)]
pub struct ChainLevel {
    /// 1-based position: member `j` is the `j`-th deflation.
    pub position: u32,
    pub h: HFunction,
    /// Residuals at the vanishing set `{0, pi, ..., (N-1-position) pi}`.
    pub vanishing: Vec<(u32, f64)>,
    pub oddness: OddnessReport,
}

/// The chain produced by alternating even parts and deflations.
#[derive(Clone, Debug)]
pub struct DeflationChain {
    pub order: u32,
    /// Antisymmetry residuals `u(j pi, .) + u(-j pi, .)` for `j < N`.
    pub hypothesis: Vec<(u32, f64)>,
    pub levels: Vec<ChainLevel>,
}

/// Builds the chain of an order-`N` sum: the even part at 0 is deflated,
/// then each member's even part at pi is deflated in turn. Hypothesis and
/// per-member vanishing residuals are recorded, not enforced.
pub fn h_chain_direct(u: &ModeSum, order: u32) -> Result<DeflationChain, ChainError> {
    assert!(order >= 1, "order must be at least 1");
    let mut hypothesis = Vec::new();
    for j in 0..order {
        let pair = u.antisymmetry(&TPoint::pi(j as i64, 1), &TPoint::pi(-(j as i64), 1));
        hypothesis.push((j, pair.residual));
    }
    let mut levels: Vec<ChainLevel> = Vec::new();
    if order >= 2 {
        let mut w = even_part(u, &TPoint::zero());
        for position in 1..order {
            let h = deflate_once(&w)?;
            levels.push(make_level(position, order, h));
            if position + 1 < order {
                let ms = match &levels.last().unwrap().h {
                    HFunction::Exact(ms) => ms.clone(),
                    HFunction::Ratio { .. } => {
                        return Err(ChainError::InexactCascade {
                            level: position as usize,
                        })
                    }
                };
                w = even_part(&ms, &TPoint::pi(1, 1));
            }
        }
    }
    Ok(DeflationChain {
        order,
        hypothesis,
        levels,
    })
}

fn make_level(position: u32, order: u32, h: HFunction) -> ChainLevel {
    let grid = GridSpec::default_for(h.dim());
    let mut scale = 0.0f64;
    for t in grid.t_values() {
        for y in grid.y_points() {
            scale = scale.max(h.eval(t, &y).abs());
        }
    }
    let scale = scale.max(f64::MIN_POSITIVE);
    let mut vanishing = Vec::new();
    let top = order.saturating_sub(1 + position);
    for i in 0..=top {
        let t = i as f64 * std::f64::consts::PI;
        let mut worst = 0.0f64;
        for y in grid.y_points() {
            worst = worst.max(h.eval(t, &y).abs());
        }
        vanishing.push((i, worst / scale));
    }
    let oddness = match &h {
        HFunction::Exact(ms) => ms.oddness_at(&TPoint::zero(), &grid),
        HFunction::Ratio { .. } => {
            let mut worst = 0.0f64;
            for t in grid.t_values() {
                for y in grid.y_points() {
                    worst = worst.max((h.eval(t, &y) + h.eval(-t, &y)).abs());
                }
            }
            OddnessReport {
                exact: None,
                residual: worst / scale,
            }
        }
    };
    ChainLevel {
        position,
        h,
        vanishing,
        oddness,
    }
}

/// Closed-form evaluator for chain members in terms of the even part alone.
pub struct HChainEvaluator {
    order: u32,
    w: ModeSum,
    dw: ModeSum,
    /// Per level `j` (index `j - 1`): the weights, their derivatives, and
    /// the scaled denominator with its derivative.
    tables: Vec<LevelTable>,
}

struct LevelTable {
    weights: Vec<(Poly, Poly)>,
    den: Poly,
    dden: Poly,
}

impl HChainEvaluator {
    /// Prepares the evaluator for an exact sum of order at most `order`.
    pub fn new(u: &ModeSum, order: u32) -> Result<Self, ChainError> {
        assert!(order >= 2, "closed form needs order at least 2");
        u.require_exact()?;
        let w = even_part(u, &TPoint::zero());
        let dw = w.t_derivative();
        let mut tables = Vec::new();
        for j in 1..order {
            let mut weights = Vec::new();
            for l in 0..=j {
                let p = chain_weight(j, l as i64).expect("index in range");
                let dp = p.derivative();
                weights.push((p, dp));
            }
            // x * prod_{i=1..j} (i^2 - x^2) in the scaled variable
            let mut den = Poly::x();
            for i in 1..=j {
                den = &den
                    * &Poly::from_coeffs(vec![
                        rat_int((i as i64) * (i as i64)),
                        rat_int(0),
                        rat_int(-1),
                    ]);
            }
            let dden = den.derivative();
            tables.push(LevelTable { weights, den, dden });
        }
        Ok(HChainEvaluator {
            order,
            w,
            dw,
            tables,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// The even part `w(t, y) = u(t, y) + u(-t, y)` the evaluator is built on.
    pub fn even_part(&self) -> &ModeSum {
        &self.w
    }

    /// Denominator zeros of level `j`: `{0, +-pi, ..., +-j pi}`.
    pub fn singular_points(&self, j: u32) -> Vec<f64> {
        let mut pts = Vec::new();
        for i in -(j as i64)..=(j as i64) {
            pts.push(i as f64 * std::f64::consts::PI);
        }
        pts
    }

    /// Numerator `sum_l p_{j,l}(t) w((j-2l) pi + t, y)`.
    fn numerator(&self, j: u32, t: f64, y: &[f64]) -> (f64, f64) {
        let pi = std::f64::consts::PI;
        let tau = t / pi;
        let table = &self.tables[(j - 1) as usize];
        let pi_j = pi.powi(j as i32);
        let mut value = 0.0;
        let mut scale = 0.0;
        for (l, (p, _)) in table.weights.iter().enumerate() {
            let shift = (j as f64 - 2.0 * l as f64) * pi;
            let term = pi_j * p.eval_f64(tau) * self.w.eval(shift + t, y);
            value += term;
            scale += term.abs();
        }
        (value, scale)
    }

    /// `d/dt` of the numerator.
    fn numerator_derivative(&self, j: u32, t: f64, y: &[f64]) -> f64 {
        let pi = std::f64::consts::PI;
        let tau = t / pi;
        let table = &self.tables[(j - 1) as usize];
        let pi_j = pi.powi(j as i32);
        let pi_jm1 = pi.powi(j as i32 - 1);
        let mut value = 0.0;
        for (l, (p, dp)) in table.weights.iter().enumerate() {
            let shift = (j as f64 - 2.0 * l as f64) * pi;
            value += pi_jm1 * dp.eval_f64(tau) * self.w.eval(shift + t, y)
                + pi_j * p.eval_f64(tau) * self.dw.eval(shift + t, y);
        }
        value
    }

    /// Evaluates the `(j+1)`-th chain member at `(t, y)`.
    ///
    /// Level `j = order - 1` corresponds to the member past the end of the
    /// chain, which is identically zero when the chain hypotheses hold; the
    /// formula is still evaluated, making the zero impostor checkable. On a
    /// denominator zero one derivative quotient is applied after verifying
    /// that the numerator vanishes there.
    pub fn eval(&self, j: u32, t: f64, y: &[f64]) -> Result<f64, ChainError> {
        if j < 1 || j >= self.order {
            return Err(ChainError::LevelOutOfRange {
                j,
                order: self.order,
            });
        }
        let pi = std::f64::consts::PI;
        let tau = t / pi;
        let table = &self.tables[(j - 1) as usize];
        let nearest = tau.round();
        let on_zero = (tau - nearest).abs() < SINGULAR_SNAP && nearest.abs() <= j as f64;
        if on_zero {
            let t_star = nearest * pi;
            let (num, num_scale) = self.numerator(j, t_star, y);
            if num.abs() > SINGULAR_NUMERATOR_TOL * num_scale.max(1.0) {
                return Err(ChainError::SingularityNotRemovable {
                    t: t_star,
                    residual: num.abs() / num_scale.max(1.0),
                });
            }
            let dnum = self.numerator_derivative(j, t_star, y);
            let dden = pi.powi(2 * j as i32) * table.dden.eval_f64(nearest);
            Ok(dnum / dden)
        } else {
            let (num, _) = self.numerator(j, t, y);
            let den = pi.powi(2 * j as i32 + 1) * table.den.eval_f64(tau);
            Ok(num / den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mode::Mode;
    use crate::pi::PiScalar;
    use crate::rational::rat_int;

    fn sin_exp(coeff: i64, m: u32) -> ModeSum {
        ModeSum::single(
            Mode::trig_exp(
                PiScalar::from_int(coeff),
                m,
                Trig::Sin,
                rat_int(1),
                vec![rat_int(1)],
            )
            .unwrap(),
        )
    }

    #[test]
    fn even_part_examples() {
        // even function doubles, odd function cancels
        let even = sin_exp(1, 1);
        assert_eq!(even_part(&even, &TPoint::zero()), even.scale_rational(&rat_int(2)));
        let odd = sin_exp(1, 0);
        assert!(even_part(&odd, &TPoint::zero()).is_zero());
        // cos t at pi/2: cos(pi/2 + t) + cos(pi/2 - t) = 0
        let cos = ModeSum::single(
            Mode::trig_exp(PiScalar::one(), 0, Trig::Cos, rat_int(1), vec![rat_int(1)]).unwrap(),
        );
        assert!(even_part(&cos, &TPoint::pi(1, 2)).is_zero());
    }

    #[test]
    fn deflate_exact_paths() {
        // 2t sin t e^y -> 2 sin t e^y
        let w = sin_exp(2, 1);
        match deflate_once(&w).unwrap() {
            HFunction::Exact(h) => assert_eq!(h, sin_exp(2, 0)),
            other => panic!("expected exact member, got {other:?}"),
        }
        // 2t^2 sin t e^y -> 2t sin t e^y (not even, but every term divides)
        let w = sin_exp(2, 2);
        match deflate_once(&w).unwrap() {
            HFunction::Exact(h) => assert_eq!(h, sin_exp(2, 1)),
            other => panic!("expected exact member, got {other:?}"),
        }
        // zero deflates to zero
        match deflate_once(&ModeSum::zero(1)).unwrap() {
            HFunction::Exact(h) => assert!(h.is_zero()),
            other => panic!("expected exact zero, got {other:?}"),
        }
        // a bare sine leaves the class: vanishes at 0 but is not even
        assert!(matches!(
            deflate_once(&sin_exp(1, 0)),
            Err(ChainError::NotEven { .. })
        ));
    }

    #[test]
    fn deflate_rejects_nonvanishing() {
        let cos = ModeSum::single(
            Mode::trig_exp(PiScalar::one(), 0, Trig::Cos, rat_int(1), vec![rat_int(1)]).unwrap(),
        );
        assert!(matches!(
            deflate_once(&cos),
            Err(ChainError::NotVanishingAtZero { .. })
        ));
    }

    #[test]
    fn deflate_numeric_ratio_matches_exact() {
        // demote an exact even part and deflate numerically
        let w = even_part(&sin_exp(1, 1), &TPoint::zero()); // 2t sin t e^y
        let numeric = w.demote_to_numeric();
        let h = deflate_once(&numeric).unwrap();
        assert!(matches!(h, HFunction::Ratio { .. }));
        let exact = deflate_once(&w).unwrap();
        for t in [-2.0, -0.5, 1e-4, 0.0, 0.3, 2.7] {
            for y in [-1.0, 0.5] {
                let a = h.eval(t, &[y]);
                let b = exact.eval(t, &[y]);
                assert!(
                    (a - b).abs() <= 1e-9 * b.abs().max(1.0),
                    "ratio vs exact at ({t}, {y}): {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn chain_for_t_times_sine() {
        // u = t sin t e^y declared at N = 3: members 2 sin t e^y, then 0
        // (the even part of 2 sin t at pi cancels)
        let u = sin_exp(1, 1);
        let chain = h_chain_direct(&u, 3).unwrap();
        assert_eq!(chain.levels.len(), 2);
        assert_eq!(chain.levels[0].h.as_mode_sum().unwrap(), &sin_exp(2, 0));
        assert!(chain.levels[1].h.is_zero());
        for (_, r) in &chain.hypothesis {
            assert!(*r <= 1e-12);
        }
        for level in &chain.levels {
            assert!(level.oddness.passes());
            for (_, r) in &level.vanishing {
                assert!(*r <= 1e-9);
            }
        }
    }

    #[test]
    fn chain_of_odd_input_is_zero() {
        // t^2 sin t is odd in t, so its even part at 0 already vanishes
        let u = sin_exp(1, 2);
        let chain = h_chain_direct(&u, 3).unwrap();
        assert!(chain.levels.iter().all(|l| l.h.is_zero()));
    }

    #[test]
    fn chain_rejects_hypothesis_violations() {
        // t^2 cos t is even with u(pi) != 0; the second deflation fails
        let u = ModeSum::single(
            Mode::trig_exp(PiScalar::one(), 2, Trig::Cos, rat_int(1), vec![rat_int(1)]).unwrap(),
        );
        assert!(matches!(
            h_chain_direct(&u, 3),
            Err(ChainError::NotVanishingAtZero { .. })
        ));
    }

    #[test]
    fn chain_for_cube_times_sine_carries_pi() {
        // u = t^3 sin t e^y, N = 4: members 2t^2 sin t, -8 pi sin t, 0
        let u = sin_exp(1, 3);
        let chain = h_chain_direct(&u, 4).unwrap();
        assert_eq!(chain.levels.len(), 3);
        assert_eq!(chain.levels[0].h.as_mode_sum().unwrap(), &sin_exp(2, 2));
        let expected_h2 = sin_exp(1, 0)
            .scale_pi(&PiScalar::pi_pow(rat_int(-8), 1))
            .unwrap();
        assert_eq!(chain.levels[1].h.as_mode_sum().unwrap(), &expected_h2);
        assert!(chain.levels[2].h.is_zero());
    }

    #[test]
    fn chain_of_order_one_is_empty() {
        let chain = h_chain_direct(&sin_exp(1, 0), 1).unwrap();
        assert!(chain.levels.is_empty());
    }

    #[test]
    fn closed_form_matches_direct_members() {
        let u = sin_exp(1, 3);
        let chain = h_chain_direct(&u, 4).unwrap();
        let closed = HChainEvaluator::new(&u, 4).unwrap();
        let grid = GridSpec::default_for(1).with_exclusions(closed.singular_points(3), 0.05);
        for j in 1..=2u32 {
            let direct = &chain.levels[j as usize].h; // member j+1
            let mut worst = 0.0f64;
            let mut scale = 0.0f64;
            for t in grid.t_values() {
                for y in grid.y_points() {
                    let a = direct.eval(t, &y);
                    let b = closed.eval(j, t, &y).unwrap();
                    worst = worst.max((a - b).abs());
                    scale = scale
                        .max(a.abs())
                        .max(closed.even_part().magnitude(t, &y));
                }
            }
            assert!(
                worst / scale.max(1e-300) < 1e-9,
                "level {j}: residual {}",
                worst / scale
            );
        }
    }

    #[test]
    fn closed_form_derivative_quotient_at_zeros() {
        let u = sin_exp(1, 3);
        let closed = HChainEvaluator::new(&u, 4).unwrap();
        // member 2 is -8 pi sin t e^y; at t = 0 and t = pi it vanishes
        for t in [0.0, std::f64::consts::PI] {
            let v = closed.eval(1, t, &[0.3]).unwrap();
            assert!(v.abs() < 1e-9, "value {v} at removable zero t = {t}");
        }
        // near-zero t snaps to the derivative quotient consistently
        let v = closed.eval(1, 1e-12, &[0.0]).unwrap();
        assert!(v.abs() < 1e-9);
    }

    #[test]
    fn closed_form_detects_hypothesis_violation() {
        // u = cos t e^y does not vanish at 0; the level-1 numerator keeps a
        // nonzero value at the denominator zero t = 0
        let u = ModeSum::single(
            Mode::trig_exp(PiScalar::one(), 0, Trig::Cos, rat_int(1), vec![rat_int(1)]).unwrap(),
        );
        let closed = HChainEvaluator::new(&u, 2).unwrap();
        assert!(matches!(
            closed.eval(1, 0.0, &[0.0]),
            Err(ChainError::SingularityNotRemovable { .. })
        ));
    }

    #[test]
    fn level_recursion_consistency() {
        // t * S_j(t) = -(j pi - t)((j-1) pi - t) S_{j-1}(pi + t)
        //              + (j pi + t)((j-1) pi + t) S_{j-1}(t - pi)
        let u = sin_exp(1, 3);
        let closed = HChainEvaluator::new(&u, 4).unwrap();
        let pi = std::f64::consts::PI;
        for j in 2..=3u32 {
            for t in [-2.9, -1.1, 0.4, 1.7, 2.8] {
                for y in [-0.5, 0.8] {
                    let (sj, scale) = closed.numerator(j, t, &[y]);
                    let (s_up, _) = closed.numerator(j - 1, pi + t, &[y]);
                    let (s_down, _) = closed.numerator(j - 1, t - pi, &[y]);
                    let jf = j as f64;
                    let rhs = -(jf * pi - t) * ((jf - 1.0) * pi - t) * s_up
                        + (jf * pi + t) * ((jf - 1.0) * pi + t) * s_down;
                    assert!(
                        (t * sj - rhs).abs() <= 1e-9 * scale.max(1.0) * 40.0,
                        "recursion at j={j}, t={t}, y={y}"
                    );
                }
            }
        }
    }

    #[test]
    fn chain_level_out_of_range() {
        let u = sin_exp(1, 3);
        let closed = HChainEvaluator::new(&u, 4).unwrap();
        assert!(matches!(
            closed.eval(0, 1.0, &[0.0]),
            Err(ChainError::LevelOutOfRange { .. })
        ));
        assert!(matches!(
            closed.eval(4, 1.0, &[0.0]),
            Err(ChainError::LevelOutOfRange { .. })
        ));
    }
}
