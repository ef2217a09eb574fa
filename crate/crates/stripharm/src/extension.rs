//! Periodic extension of a function that is odd at two points.
//!
//! Oddness at `t1 < t2` forces `2(t2 - t1)`-periodicity, so the restriction
//! of the input to the window `[t1 - d, t2 + d)`, `d = t2 - t1`, tiles the
//! whole axis. The extension evaluates by translating the argument into the
//! window by the unique integer multiple of `2d`.
//!
//! Verification reports (i) the periodicity residual, (ii) agreement with
//! the original on the core window (exact by construction: same evaluation
//! path), and (iii) a seam-smoothness proxy comparing the two one-sided
//! tile continuations and their first four centred finite differences
//! across each window boundary. A deliberately corrupted tile (a test
//! fixture for the seam detector) is injectable via [`ExtendedFunction::corrupt_tile`].

use std::fmt;

use crate::grid::GridSpec;
use crate::mode::{ModeSum, TPoint};
use crate::rational::Rational;
use crate::tolerances::{REL_RESIDUAL, SEAM_FD_STEP};

#[derive(Clone, Debug, PartialEq)]
pub enum ExtendError {
    NotOddAtPoint { t: f64, residual: f64 },
    /// The declared domain does not leave a full window margin.
    InsufficientMargin,
}

impl fmt::Display for ExtendError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendError::NotOddAtPoint { t, residual } => {
                write!(f, "not odd at t = {t} (residual {residual:.3e})")
            }
            ExtendError::InsufficientMargin => write!(
                f,
                "domain must strictly contain [t1 - d, t2 + d] for d = t2 - t1"
            ),
        }
    }
}

impl std::error::Error for ExtendError {}

/// The tiled periodic extension.
#[derive(Clone, Debug)]
pub struct ExtendedFunction {
    core: ModeSum,
    t1: f64,
    delta: f64,
    /// Fault injection: `(tile index, replacement core)`.
    corrupted: Option<(i64, ModeSum)>,
}

/// Checks oddness of `u` at both points and builds the extension.
///
/// The oddness residual is sampled on offsets filling one window half
/// (which the margin condition keeps inside the declared domain).
pub fn build_extension(
    u: &ModeSum,
    t1: &TPoint,
    t2: &TPoint,
    domain: (f64, f64),
) -> Result<ExtendedFunction, ExtendError> {
    let (a, b) = domain;
    let t1f = t1.to_f64();
    let t2f = t2.to_f64();
    assert!(t2f > t1f, "window points must satisfy t1 < t2");
    let delta = t2f - t1f;
    if !(a < t1f - delta && t2f + delta < b) {
        return Err(ExtendError::InsufficientMargin);
    }
    let grid = oddness_grid(u.dim(), delta);
    for point in [t1, t2] {
        let report = u.oddness_at(point, &grid);
        if !report.passes() {
            return Err(ExtendError::NotOddAtPoint {
                t: point.to_f64(),
                residual: report.residual,
            });
        }
    }
    Ok(ExtendedFunction {
        core: u.clone(),
        t1: t1f,
        delta,
        corrupted: None,
    })
}

fn oddness_grid(dim: usize, delta: f64) -> GridSpec {
    let mut grid = GridSpec::default_for(dim);
    grid.t = crate::grid::Axis {
        min: 0.0,
        max: 0.95 * delta,
        step: delta / 24.0,
    };
    grid
}

impl ExtendedFunction {
    pub fn period(&self) -> f64 {
        2.0 * self.delta
    }

    pub fn dim(&self) -> usize {
        self.core.dim()
    }

    /// Left edge of the core window `[t1 - d, t2 + d)`.
    pub fn window_start(&self) -> f64 {
        self.t1 - self.delta
    }

    /// Tile index whose translated window contains `t`.
    pub fn tile_index(&self, t: f64) -> i64 {
        ((t - self.window_start()) / self.period()).floor() as i64
    }

    fn core_for(&self, tile: i64) -> &ModeSum {
        match &self.corrupted {
            Some((k, replacement)) if *k == tile => replacement,
            _ => &self.core,
        }
    }

    /// Evaluation via the tile containing `t`; total on the whole axis.
    pub fn eval(&self, t: f64, y: &[f64]) -> f64 {
        let tile = self.tile_index(t);
        self.eval_in_tile(t, y, tile)
    }

    /// Evaluation using a specific tile's continuation (the tile's core is
    /// entire, so this is defined beyond the tile's own window).
    pub fn eval_in_tile(&self, t: f64, y: &[f64], tile: i64) -> f64 {
        self.core_for(tile).eval(t - self.period() * tile as f64, y)
    }

    /// Replaces one tile's core by a rationally rescaled copy. This breaks
    /// the extension on purpose; it exists to exercise the seam detector.
    pub fn corrupt_tile(mut self, tile: i64, factor: Rational) -> ExtendedFunction {
        self.corrupted = Some((tile, self.core.scale_rational(&factor)));
        self
    }
}

/// One seam/derivative-order row of the smoothness table.
#[derive(Clone, Debug, PartialEq)]
pub struct SeamRow {
    pub seam_t: f64,
    pub order: u32,
    /// Jump of the order-`order` centred difference across the seam, in
    /// derivative units.
    pub jump: f64,
    /// The same mismatch normalized to be dimensionless.
    pub jump_rel: f64,
}

#[derive(Clone, Debug)]
pub struct ExtensionReport {
    /// `max |u~(t + 2d, y) - u~(t, y)|` over the grid, relative.
    pub periodicity_residual: f64,
    /// `max |u~ - u|` over grid points inside the core window, relative.
    pub core_agreement: f64,
    /// Largest dimensionless seam mismatch over all seams and orders 0..=4.
    pub seam_jump_rel: f64,
    pub seams: Vec<SeamRow>,
}

impl ExtensionReport {
    pub fn passes(&self) -> bool {
        self.periodicity_residual <= REL_RESIDUAL
            && self.core_agreement <= REL_RESIDUAL
            && self.seam_jump_rel <= REL_RESIDUAL
    }
}

/// Centred finite-difference stencils for orders 0..=4.
const STENCILS: [&[(i32, f64)]; 5] = [
    &[(0, 1.0)],
    &[(-1, -0.5), (1, 0.5)],
    &[(-1, 1.0), (0, -2.0), (1, 1.0)],
    &[(-2, -0.5), (-1, 1.0), (1, -1.0), (2, 0.5)],
    &[(-2, 1.0), (-1, -4.0), (0, 6.0), (1, -4.0), (2, 1.0)],
];

/// Samples the extension over the grid and reports periodicity, core
/// agreement, and seam smoothness.
pub fn verify_extension(e: &ExtendedFunction, grid: &GridSpec) -> ExtensionReport {
    let y_points = grid.y_points();
    let t_values = grid.t_values();
    let period = e.period();

    let mut scale = 0.0f64;
    for &t in &t_values {
        for y in &y_points {
            scale = scale.max(e.eval(t, y).abs());
        }
    }
    let scale = scale.max(f64::MIN_POSITIVE);

    let mut periodicity = 0.0f64;
    for &t in &t_values {
        for y in &y_points {
            periodicity = periodicity.max((e.eval(t + period, y) - e.eval(t, y)).abs());
        }
    }

    let mut core_agreement = 0.0f64;
    let window_start = e.window_start();
    for &t in &t_values {
        if t < window_start || t >= window_start + period {
            continue;
        }
        for y in &y_points {
            core_agreement = core_agreement.max((e.eval(t, y) - e.core_for(0).eval(t, y)).abs());
        }
    }

    // seams inside the sampled range
    let mut seams = Vec::new();
    let mut seam_jump_rel = 0.0f64;
    let h = SEAM_FD_STEP;
    let first = ((grid.t.min - window_start) / period).ceil() as i64;
    let last = ((grid.t.max - window_start) / period).floor() as i64;
    for k in first..=last {
        let s = window_start + period * k as f64;
        for (order, stencil) in STENCILS.iter().enumerate() {
            let mut jump_num = 0.0f64;
            let mut coeff_sum = 0.0f64;
            for y in &y_points {
                let mut left = 0.0;
                let mut right = 0.0;
                for &(i, c) in *stencil {
                    let x = s + h * i as f64;
                    left += c * e.eval_in_tile(x, y, k - 1);
                    right += c * e.eval_in_tile(x, y, k);
                }
                jump_num = jump_num.max((left - right).abs());
            }
            for &(_, c) in *stencil {
                coeff_sum += c.abs();
            }
            let jump = jump_num / h.powi(order as i32);
            let jump_rel = jump_num / (coeff_sum * scale);
            seam_jump_rel = seam_jump_rel.max(jump_rel);
            seams.push(SeamRow {
                seam_t: s,
                order: order as u32,
                jump,
                jump_rel,
            });
        }
    }

    ExtensionReport {
        periodicity_residual: periodicity / scale,
        core_agreement: core_agreement / scale,
        seam_jump_rel,
        seams,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mode::{Mode, Trig};
    use crate::multipoly::MultiPoly;
    use crate::pi::PiScalar;
    use crate::rational::{rat, rat_int};

    fn sine(k: i64) -> ModeSum {
        ModeSum::single(
            Mode::trig_exp(
                PiScalar::one(),
                0,
                Trig::Sin,
                rat_int(k),
                vec![rat_int(k)],
            )
            .unwrap(),
        )
    }

    fn wide_grid() -> GridSpec {
        let mut g = GridSpec::default_for(1);
        g.t = crate::grid::Axis {
            min: -7.0,
            max: 7.0,
            step: 0.35,
        };
        g
    }

    #[test]
    fn sine_extension_is_global() {
        let u = sine(1);
        let e = build_extension(
            &u,
            &TPoint::zero(),
            &TPoint::pi(1, 1),
            (-3.0 * std::f64::consts::PI / 2.0 - 0.2, 5.0 * std::f64::consts::PI / 2.0 + 0.2),
        )
        .unwrap();
        // extension equals sin t e^y everywhere
        for t in [-6.0, -2.5, 0.3, 4.9, 6.7] {
            for y in [-1.0, 0.5] {
                let diff = (e.eval(t, &[y]) - u.eval(t, &[y])).abs();
                assert!(diff <= 1e-12 * u.eval(t, &[y]).abs().max(1.0));
            }
        }
        let report = verify_extension(&e, &wide_grid());
        assert!(report.passes(), "{report:?}");
        assert!(report.periodicity_residual <= 1e-12);
        assert_eq!(report.core_agreement, 0.0);
    }

    #[test]
    fn integer_sine_sum_extension() {
        let u = sine(1).add(&sine(2).scale_rational(&rat(1, 3)));
        let e = build_extension(&u, &TPoint::zero(), &TPoint::pi(1, 1), (-6.0, 9.0)).unwrap();
        let report = verify_extension(&e, &wide_grid());
        assert!(report.periodicity_residual < 1e-12, "{report:?}");
        assert!(report.seam_jump_rel < 1e-12);
    }

    #[test]
    fn rejects_non_odd_input() {
        // t y is odd at 0 only
        let ty = ModeSum::single(
            Mode::poly_harm(PiScalar::one(), 1, MultiPoly::var(1, 0)).unwrap(),
        );
        let err = build_extension(&ty, &TPoint::zero(), &TPoint::value(1.0), (-10.0, 10.0))
            .unwrap_err();
        match err {
            ExtendError::NotOddAtPoint { t, .. } => assert!((t - 1.0).abs() < 1e-12),
            other => panic!("expected NotOddAtPoint, got {other:?}"),
        }
    }

    #[test]
    fn rejects_insufficient_margin() {
        let u = sine(1);
        let err = build_extension(
            &u,
            &TPoint::zero(),
            &TPoint::pi(1, 1),
            (-std::f64::consts::PI, 7.0),
        )
        .unwrap_err();
        assert_eq!(err, ExtendError::InsufficientMargin);
    }

    #[test]
    fn corrupted_tile_is_detected() {
        let u = sine(1);
        let e = build_extension(&u, &TPoint::zero(), &TPoint::pi(1, 1), (-6.0, 9.0))
            .unwrap()
            .corrupt_tile(1, rat(3, 2));
        let report = verify_extension(&e, &wide_grid());
        assert!(!report.passes());
        // the seams sit where the sine vanishes, so the defect shows up in
        // the first derivative rather than the raw value
        assert!(report.seam_jump_rel > 1e-5, "{}", report.seam_jump_rel);
        assert!(report
            .seams
            .iter()
            .any(|row| row.order == 1 && row.jump > 1e-1));
        // the periodicity sweep sees the corrupted tile as well
        assert!(report.periodicity_residual > 1e-3);
    }

    #[test]
    fn tile_translation_is_exact_floor() {
        let u = sine(1);
        let e = build_extension(&u, &TPoint::zero(), &TPoint::pi(1, 1), (-6.0, 9.0)).unwrap();
        let start = e.window_start();
        assert_eq!(e.tile_index(start), 0);
        assert_eq!(e.tile_index(start - 1e-9), -1);
        assert_eq!(e.tile_index(start + e.period()), 1);
        // total evaluation far outside the declared domain
        let far = 1000.0;
        assert!((e.eval(far, &[0.0]) - u.eval(far, &[0.0])).abs() < 1e-9);
    }
}
