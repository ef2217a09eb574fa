//! Sine-series coefficients of mode sums on the period `[-pi, pi]`:
//! an exact closed form for integer frequencies and a fixed-panel
//! Gauss-Legendre quadrature for everything else.
//!
//! The closed form reduces each mode to integrals `int t^m trig(q t) dt`
//! over the symmetric period via product-to-sum, and evaluates those by an
//! exact integration-by-parts recurrence whose values live in the pi-scalar
//! ring. The `1/pi` prefactor of the coefficient stays exact as well.

use std::fmt;
use std::sync::OnceLock;

use crate::expsum::ExpPolySum;
use crate::mode::{ModeKind, ModeSum, Trig};
use crate::pi::PiScalar;
use crate::rational::{as_i64, rat, rat_int};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FourierError {
    /// Closed form needs exact coefficients and integer mode frequencies.
    ClosedFormUnavailable { reason: String },
}

impl fmt::Display for FourierError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FourierError::ClosedFormUnavailable { reason } => {
                write!(f, "closed form unavailable: {reason}")
            }
        }
    }
}

impl std::error::Error for FourierError {}

/// `int_{-pi}^{pi} t^m cos(q t) dt` for integer `q >= 0`, exactly.
fn cos_integral(m: u32, q: i64) -> PiScalar {
    debug_assert!(q >= 0);
    if q == 0 {
        return if m % 2 == 0 {
            PiScalar::pi_pow(rat(2, m as i64 + 1), m as i32 + 1)
        } else {
            PiScalar::zero()
        };
    }
    if m == 0 {
        return PiScalar::zero();
    }
    sin_integral(m - 1, q).scale(&rat(-(m as i64), q))
}

/// `int_{-pi}^{pi} t^m sin(q t) dt` for integer `q >= 0`, exactly.
fn sin_integral(m: u32, q: i64) -> PiScalar {
    debug_assert!(q >= 0);
    if q == 0 || m == 0 {
        return PiScalar::zero();
    }
    // boundary term of one integration by parts: -[t^m cos(qt)/q]
    let mut acc = if m % 2 == 1 {
        let sign = if q % 2 == 0 { 1 } else { -1 };
        PiScalar::pi_pow(rat(-2 * sign, q), m as i32)
    } else {
        PiScalar::zero()
    };
    acc = acc.add(&cos_integral(m - 1, q).scale(&rat(m as i64, q)));
    acc
}

/// Signed wrapper: `sin` integrals are odd in `q`, `cos` integrals even.
fn sin_integral_signed(m: u32, q: i64) -> PiScalar {
    if q >= 0 {
        sin_integral(m, q)
    } else {
        sin_integral(m, -q).neg()
    }
}

/// The exact sine coefficient `a_k(y) = (1/pi) int u(t, y) sin(kt) dt` as a
/// transverse symbolic sum. Requires exact coefficients and integer mode
/// frequencies.
pub fn fourier_closed_form(u: &ModeSum, k: u32) -> Result<ExpPolySum, FourierError> {
    assert!(k >= 1, "sine index must be positive");
    if !u.is_exact() {
        return Err(FourierError::ClosedFormUnavailable {
            reason: "numeric coefficient overlay present".into(),
        });
    }
    let mut out = ExpPolySum::zero(u.dim());
    for mode in u.modes() {
        match &mode.kind {
            ModeKind::TrigExp {
                trig,
                freq,
                direction,
            } => {
                let c = as_i64(freq).ok_or_else(|| FourierError::ClosedFormUnavailable {
                    reason: format!("non-integer mode frequency {freq}"),
                })?;
                let integral = match trig {
                    // sin(ct) sin(kt) = [cos((c-k)t) - cos((c+k)t)] / 2
                    Trig::Sin => cos_integral(mode.m, (c - k as i64).abs())
                        .sub(&cos_integral(mode.m, c + k as i64))
                        .scale(&rat(1, 2)),
                    // cos(ct) sin(kt) = [sin((c+k)t) + sin((k-c)t)] / 2
                    Trig::Cos => sin_integral(mode.m, c + k as i64)
                        .add(&sin_integral_signed(mode.m, k as i64 - c))
                        .scale(&rat(1, 2)),
                };
                let coeff = mode.coeff.mul(&integral).mul_pi_pow(-1);
                if !coeff.is_zero() {
                    out.add_exponential(&coeff, direction.components().to_vec());
                }
            }
            ModeKind::PolyHarm { h } => {
                let integral = sin_integral(mode.m, k as i64);
                let coeff = mode.coeff.mul(&integral).mul_pi_pow(-1);
                if !coeff.is_zero() {
                    out.add_term(&coeff, h, vec![rat_int(0); u.dim()]);
                }
            }
        }
    }
    Ok(out)
}

/// 64-point Gauss-Legendre nodes and weights on `[-1, 1]`.
fn gauss_legendre_64() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = 64usize;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            // Newton iteration on P_n(x)
            for _ in 0..100 {
                let (p, dp) = legendre(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre(n, x);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    })
}

/// Value and derivative of the Legendre polynomial `P_n` via the three-term
/// recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for j in 2..=n {
        let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Number of equal panels the period is split into for quadrature.
pub const QUADRATURE_PANELS: usize = 8;

/// `(1/pi) int_{-pi}^{pi} u(t, y) sin(kt) dt` by the fixed 8x64 panel rule.
pub fn fourier_quadrature(u: &ModeSum, k: u32, y: &[f64]) -> f64 {
    let (nodes, weights) = gauss_legendre_64();
    let pi = std::f64::consts::PI;
    let kf = k as f64;
    let mut total = 0.0;
    for panel in 0..QUADRATURE_PANELS {
        let a = -pi + 2.0 * pi * panel as f64 / QUADRATURE_PANELS as f64;
        let b = -pi + 2.0 * pi * (panel + 1) as f64 / QUADRATURE_PANELS as f64;
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        for (x, w) in nodes.iter().zip(weights) {
            let t = mid + half * x;
            total += w * half * u.eval(t, y) * (kf * t).sin();
        }
    }
    total / pi
}

/// How to compute a sine coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FourierMethod {
    ClosedForm,
    Quadrature,
}

/// The sine coefficient `a_k(y)` evaluated at one transverse point.
pub fn fourier_coeff(
    u: &ModeSum,
    k: u32,
    y: &[f64],
    method: FourierMethod,
) -> Result<f64, FourierError> {
    match method {
        FourierMethod::ClosedForm => Ok(fourier_closed_form(u, k)?.eval(y)),
        FourierMethod::Quadrature => Ok(fourier_quadrature(u, k, y)),
    }
}

/// Result of testing `(Delta_y - k^2)^N a_k = 0` exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct HelmholtzReport {
    pub k: u32,
    pub order: u32,
    /// The symbolic coefficient `a_k(y)`.
    pub coefficient: ExpPolySum,
    pub pass: bool,
    /// Surviving terms when the check fails; zero otherwise.
    pub surviving: ExpPolySum,
}

/// Applies the modified Helmholtz operator `N` times to the exact sine
/// coefficient and reports whether it is annihilated.
pub fn helmholtz_annihilation_check(
    u: &ModeSum,
    k: u32,
    order: u32,
) -> Result<HelmholtzReport, FourierError> {
    let coefficient = fourier_closed_form(u, k)?;
    let k_sq = rat_int(k as i64 * k as i64);
    let surviving = coefficient.apply_helmholtz_power(&k_sq, order);
    Ok(HelmholtzReport {
        k,
        order,
        pass: surviving.is_zero(),
        coefficient,
        surviving,
    })
}
