//! Axial shifts, reflections, and the rescaling that moves hyperplanes onto
//! integer multiples of pi.
//!
//! Shifting by a rational multiple of pi keeps the sum exact as long as all
//! trig arguments land on the lattice `(pi/2) Z`: the angle-addition values
//! are then 0 or +-1 and the binomial expansion of `(+-t + t0)^m` produces
//! coefficients in the pi-scalar ring. Everything else falls back to a
//! numeric coefficient overlay on the same mode skeletons.

use super::{
    half_lattice_index, trig_half_value, Mode, ModeError, ModeKind, ModeSum, TPoint, Trig,
};
use crate::pi::PiScalar;
use crate::rational::{binomial, pow_rat, rat_int, to_f64, Rational};

use num_traits::Signed;

impl ModeSum {
    /// Represents `u(t0 + t, y)` (or `u(t0 - t, y)` with `reflect`) in the
    /// mode basis. Exact when `t0` is a rational multiple of pi compatible
    /// with every mode frequency; numeric overlay otherwise.
    pub fn shifted(&self, t0: &TPoint, reflect: bool) -> ModeSum {
        let t0 = t0.canonical();
        if self.is_exact() {
            if let TPoint::Pi(q) = &t0 {
                if let Some(exact) = self.shifted_exact(q, reflect) {
                    return exact;
                }
            }
        }
        self.shifted_numeric(t0.to_f64(), reflect)
    }

    fn shifted_exact(&self, q: &Rational, reflect: bool) -> Option<ModeSum> {
        let sign = if reflect { -1i64 } else { 1i64 };
        // all trig arguments must land on the half-pi lattice
        let mut lattice = Vec::with_capacity(self.modes.len());
        for mode in &self.modes {
            match &mode.kind {
                ModeKind::TrigExp { freq, .. } => lattice.push(half_lattice_index(freq, q)?),
                ModeKind::PolyHarm { .. } => lattice.push(0),
            }
        }
        let mut out = Vec::new();
        for (mode, n) in self.modes.iter().zip(lattice) {
            // (sign*t + q*pi)^m = sum_i binom(m,i) (q pi)^(m-i) sign^i t^i
            for i in 0..=mode.m {
                let mut factor = binomial(mode.m, i) * pow_rat(q, (mode.m - i) as i32);
                if sign < 0 && i % 2 == 1 {
                    factor = -factor;
                }
                let t_coeff = PiScalar::pi_pow(factor, (mode.m - i) as i32);
                if t_coeff.is_zero() {
                    continue;
                }
                match &mode.kind {
                    ModeKind::PolyHarm { h } => out.push(Mode {
                        coeff: mode.coeff.mul(&t_coeff),
                        m: i,
                        kind: ModeKind::PolyHarm { h: h.clone() },
                    }),
                    ModeKind::TrigExp {
                        trig,
                        freq,
                        direction,
                    } => {
                        let cos_b = trig_half_value(Trig::Cos, n);
                        let sin_b = trig_half_value(Trig::Sin, n);
                        let s = rat_int(sign);
                        // sin(k(st + t0)) = s cosB sin(kt) + sinB cos(kt)
                        // cos(k(st + t0)) = cosB cos(kt) - s sinB sin(kt)
                        let (sin_part, cos_part) = match trig {
                            Trig::Sin => (&s * &cos_b, sin_b),
                            Trig::Cos => (-(&s * &sin_b), cos_b),
                        };
                        for (new_trig, val) in
                            [(Trig::Sin, sin_part), (Trig::Cos, cos_part)]
                        {
                            if val == rat_int(0) {
                                continue;
                            }
                            out.push(Mode {
                                coeff: mode.coeff.mul(&t_coeff).scale(&val),
                                m: i,
                                kind: ModeKind::TrigExp {
                                    trig: new_trig,
                                    freq: freq.clone(),
                                    direction: direction.clone(),
                                },
                            });
                        }
                    }
                }
            }
        }
        Some(ModeSum::collect_exact(self.dim, out))
    }

    fn shifted_numeric(&self, t0: f64, reflect: bool) -> ModeSum {
        let sign: f64 = if reflect { -1.0 } else { 1.0 };
        let mut out = Vec::new();
        for (idx, mode) in self.modes.iter().enumerate() {
            let base = self.coefficient_f64(idx);
            for i in 0..=mode.m {
                let factor = to_f64(&binomial(mode.m, i))
                    * t0.powi((mode.m - i) as i32)
                    * sign.powi(i as i32);
                if factor == 0.0 {
                    continue;
                }
                match &mode.kind {
                    ModeKind::PolyHarm { h } => out.push((
                        Mode {
                            coeff: PiScalar::one(),
                            m: i,
                            kind: ModeKind::PolyHarm { h: h.clone() },
                        },
                        base * factor,
                    )),
                    ModeKind::TrigExp {
                        trig,
                        freq,
                        direction,
                    } => {
                        let b = to_f64(freq) * t0;
                        let (sin_part, cos_part) = match trig {
                            Trig::Sin => (sign * b.cos(), b.sin()),
                            Trig::Cos => (-sign * b.sin(), b.cos()),
                        };
                        for (new_trig, val) in
                            [(Trig::Sin, sin_part), (Trig::Cos, cos_part)]
                        {
                            out.push((
                                Mode {
                                    coeff: PiScalar::one(),
                                    m: i,
                                    kind: ModeKind::TrigExp {
                                        trig: new_trig,
                                        freq: freq.clone(),
                                        direction: direction.clone(),
                                    },
                                },
                                base * factor * val,
                            ));
                        }
                    }
                }
            }
        }
        ModeSum::collect_numeric(self.dim, out)
    }

    /// The rescaled function `u(t1 + (c/pi) t, (c/pi) y)`: hyperplanes with
    /// spacing `c` move to spacing pi and the growth rate is multiplied by
    /// `c/pi`. The spacing must be an exact rational multiple of pi, or the
    /// rescaled frequencies would leave the rational mode class.
    pub fn normalized(&self, t1: &TPoint, c: &TPoint) -> Result<ModeSum, ModeError> {
        let ratio = match c {
            TPoint::Pi(q) if q.is_positive() => q.clone(),
            _ => return Err(ModeError::SpacingNotExact),
        };
        let scaled = self.scaled(&ratio);
        Ok(scaled.shifted(&t1.div_rational(&ratio), false))
    }

    /// Exact substitution `t -> r t`, `y -> r y` for rational `r > 0`.
    fn scaled(&self, r: &Rational) -> ModeSum {
        let build = |mode: &Mode| -> (Mode, Rational) {
            let t_factor = pow_rat(r, mode.m as i32);
            match &mode.kind {
                ModeKind::TrigExp {
                    trig,
                    freq,
                    direction,
                } => (
                    Mode {
                        coeff: mode.coeff.clone(),
                        m: mode.m,
                        kind: ModeKind::TrigExp {
                            trig: *trig,
                            freq: freq * r,
                            direction: direction.scale(r),
                        },
                    },
                    t_factor,
                ),
                ModeKind::PolyHarm { h } => {
                    // y -> r y rescales each monomial; keep h monic
                    let (scale, monic) = h.compose_scale(r).monic();
                    (
                        Mode {
                            coeff: mode.coeff.clone(),
                            m: mode.m,
                            kind: ModeKind::PolyHarm { h: monic },
                        },
                        t_factor * scale,
                    )
                }
            }
        };
        match &self.overlay {
            None => ModeSum::collect_exact(
                self.dim,
                self.modes
                    .iter()
                    .map(|mode| {
                        let (mut m, factor) = build(mode);
                        m.coeff = m.coeff.scale(&factor);
                        m
                    })
                    .collect(),
            ),
            Some(ov) => ModeSum::collect_numeric(
                self.dim,
                self.modes
                    .iter()
                    .zip(ov)
                    .map(|(mode, v)| {
                        let (m, factor) = build(mode);
                        (m, v * to_f64(&factor))
                    })
                    .collect(),
            ),
        }
    }
}
