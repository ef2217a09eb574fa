//! Frozen numeric thresholds used by the verification routines.
//!
//! Every tolerance in the crate lives here so that report semantics are
//! pinned in one place.

/// Relative residual below which a sampled quantity counts as zero.
///
/// Double precision leaves ~7 orders of headroom over the rounding noise of
/// the angle-addition and binomial expansions used by shifted evaluation.
pub const REL_RESIDUAL: f64 = 1e-9;

/// Agreement threshold between closed-form and quadrature Fourier
/// coefficients (absolute, integrands are entire and O(1) on the period).
pub const QUADRATURE_AGREEMENT: f64 = 1e-10;

/// Pivot threshold for the floating-point null-space elimination, applied
/// after columns are normalized to unit max magnitude.
pub const PIVOT_TOL: f64 = 1e-10;

/// A closed-form denominator zero is removable only if the numerator
/// vanishes to this relative level there.
pub const SINGULAR_NUMERATOR_TOL: f64 = 1e-8;

/// Half-width of the small-`t` window where the deflated ratio `w(t)/t`
/// switches to its series form `t * w''(0)/2`; keeps the cancellation noise
/// of the direct quotient below the residual budget.
pub const DEFLATE_SERIES_DELTA: f64 = 1e-3;

/// Distance from a denominator zero below which closed-form evaluation
/// switches to the one-step derivative quotient.
pub const SINGULAR_SNAP: f64 = 1e-9;

/// Default exclusion margin around singular `t` values for comparison grids.
pub const GRID_MARGIN: f64 = 0.05;

/// Step for the seam-smoothness finite differences of periodic extensions.
pub const SEAM_FD_STEP: f64 = 1e-3;

/// Round-trip shift reproduction threshold (pointwise, relative).
pub const SHIFT_ROUNDTRIP: f64 = 1e-12;
