//! Exact symbolic calculus on mode sums: the strip Laplacian, the axial
//! derivative, and the certified polyharmonic order.

use super::{Mode, ModeError, ModeKind, ModeSum, Trig};
use crate::rational::{rat_int, to_f64};

impl ModeSum {
    /// One application of the strip Laplacian `d^2/dt^2 + Delta_y`, exactly.
    ///
    /// On a trig-exponential mode the transverse part contributes `+k^2` and
    /// the axial part `-k^2` plus the product-rule terms, leaving
    /// `m(m-1) t^(m-2) trig +- 2mk t^(m-1) cotrig`; on a polynomial-harmonic
    /// mode only `m(m-1) t^(m-2) h` survives.
    pub fn apply_laplacian(&self) -> Result<ModeSum, ModeError> {
        self.require_exact()?;
        let mut out = Vec::new();
        for mode in &self.modes {
            let m = mode.m;
            if m >= 2 {
                let mut lower = mode.clone();
                lower.m = m - 2;
                lower.coeff = mode.coeff.scale(&rat_int((m as i64) * (m as i64 - 1)));
                out.push(lower);
            }
            if let ModeKind::TrigExp {
                trig,
                freq,
                direction,
            } = &mode.kind
            {
                if m >= 1 {
                    // 2mk t^(m-1) with the trig function swapped; sign from
                    // the derivative of the trig factor.
                    let (new_trig, sign) = match trig {
                        Trig::Sin => (Trig::Cos, 1),
                        Trig::Cos => (Trig::Sin, -1),
                    };
                    let factor = rat_int(2 * m as i64 * sign) * freq;
                    out.push(Mode {
                        coeff: mode.coeff.scale(&factor),
                        m: m - 1,
                        kind: ModeKind::TrigExp {
                            trig: new_trig,
                            freq: freq.clone(),
                            direction: direction.clone(),
                        },
                    });
                }
            }
        }
        Ok(ModeSum::collect_exact(self.dim, out))
    }

    /// Least `N >= 0` with `L^N u = 0`, certified by exact iteration.
    pub fn polyharmonic_order(&self) -> Result<u32, ModeError> {
        self.require_exact()?;
        let bound = self
            .modes
            .iter()
            .map(Mode::order_bound)
            .max()
            .unwrap_or(0);
        let mut current = self.clone();
        for n in 0..=bound {
            if current.is_zero() {
                return Ok(n);
            }
            current = current.apply_laplacian()?;
        }
        debug_assert!(current.is_zero(), "order bound violated");
        Ok(bound)
    }

    /// Symbolic `d/dt`; works on both exact and overlay sums.
    pub fn t_derivative(&self) -> ModeSum {
        match &self.overlay {
            None => {
                let mut out = Vec::new();
                for mode in &self.modes {
                    for (part, coeff) in derivative_parts(mode) {
                        let mut p = part;
                        p.coeff = mode.coeff.scale(&coeff);
                        out.push(p);
                    }
                }
                ModeSum::collect_exact(self.dim, out)
            }
            Some(ov) => {
                let mut out = Vec::new();
                for (mode, v) in self.modes.iter().zip(ov) {
                    for (part, coeff) in derivative_parts(mode) {
                        out.push((part, v * to_f64(&coeff)));
                    }
                }
                ModeSum::collect_numeric(self.dim, out)
            }
        }
    }
}

/// The product-rule pieces of `d/dt` applied to one mode, as (skeleton,
/// rational factor) pairs; the caller multiplies in the mode coefficient.
fn derivative_parts(mode: &Mode) -> Vec<(Mode, crate::rational::Rational)> {
    let mut parts = Vec::new();
    if mode.m >= 1 {
        let mut lower = mode.clone();
        lower.m = mode.m - 1;
        parts.push((lower, rat_int(mode.m as i64)));
    }
    if let ModeKind::TrigExp {
        trig,
        freq,
        direction,
    } = &mode.kind
    {
        let (new_trig, sign) = match trig {
            Trig::Sin => (Trig::Cos, 1),
            Trig::Cos => (Trig::Sin, -1),
        };
        parts.push((
            Mode {
                coeff: mode.coeff.clone(),
                m: mode.m,
                kind: ModeKind::TrigExp {
                    trig: new_trig,
                    freq: freq.clone(),
                    direction: direction.clone(),
                },
            },
            rat_int(sign) * freq,
        ));
    }
    parts
}
