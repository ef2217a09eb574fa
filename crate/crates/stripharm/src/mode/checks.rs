//! Hypothesis checks on mode sums: growth classification, hyperplane
//! vanishing, antisymmetry pairs, and grid oddness residuals.
//!
//! Residuals are relative: the defect is divided by the summed magnitude of
//! the individual mode contributions on the same sample set, so scaling the
//! input never changes a verdict.

use std::collections::BTreeMap;

use super::{half_lattice_index, trig_half_value, ModeKind, ModeSum, TPoint};
use crate::grid::GridSpec;
use crate::pi::PiScalar;
use crate::rational::{pow_rat, rat_int, to_f64, Rational};
use crate::tolerances::REL_RESIDUAL;

/// Exponential growth data of a mode sum relative to a hyperplane spacing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Growth {
    /// Largest transverse exponential rate (0 for purely polynomial sums).
    pub rate: Rational,
    pub class: GrowthClass,
}

/// Position of `rate * c` relative to the threshold pi.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthClass {
    Subcritical,
    Critical,
    Supercritical,
}

impl Growth {
    pub fn is_subcritical(&self) -> bool {
        self.class == GrowthClass::Subcritical
    }
}

impl std::fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GrowthClass::Subcritical => write!(f, "subcritical"),
            GrowthClass::Critical => write!(f, "critical"),
            GrowthClass::Supercritical => write!(f, "supercritical"),
        }
    }
}

/// Outcome of a hyperplane vanishing check.
#[derive(Clone, Debug, PartialEq)]
pub enum Vanishing {
    /// Every combined coefficient cancels exactly.
    ExactZero,
    /// Sampled residual below the relative tolerance.
    NumericZero { residual: f64 },
    Nonzero { residual: f64 },
}

impl Vanishing {
    pub fn passes(&self) -> bool {
        !matches!(self, Vanishing::Nonzero { .. })
    }

    pub fn residual(&self) -> f64 {
        match self {
            Vanishing::ExactZero => 0.0,
            Vanishing::NumericZero { residual } | Vanishing::Nonzero { residual } => *residual,
        }
    }
}

/// Outcome of an antisymmetry pair check `u(a, .) + u(b, .) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairCheck {
    /// Exact verdict when both slices are exactly representable.
    pub exact: Option<bool>,
    pub residual: f64,
}

impl PairCheck {
    pub fn passes(&self) -> bool {
        match self.exact {
            Some(v) => v,
            None => self.residual <= REL_RESIDUAL,
        }
    }
}

/// Grid oddness check result at a centre point.
#[derive(Clone, Debug, PartialEq)]
pub struct OddnessReport {
    /// Exact verdict when the shifted representations stay exact.
    pub exact: Option<bool>,
    /// `max |u(t0+t) + u(t0-t)|` over the grid, relative.
    pub residual: f64,
}

impl OddnessReport {
    pub fn passes(&self) -> bool {
        match self.exact {
            Some(v) => v,
            None => self.residual <= REL_RESIDUAL,
        }
    }
}

/// The transverse profile `u(t0, y)` of an exactly evaluated `t` slice:
/// exponential terms keyed by direction plus a polynomial part keyed by
/// monomial, both with exact pi-scalar coefficients.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct YProfile {
    pub exp: BTreeMap<Vec<Rational>, PiScalar>,
    pub poly: BTreeMap<Vec<u32>, PiScalar>,
}

impl YProfile {
    pub fn is_zero(&self) -> bool {
        self.exp.is_empty() && self.poly.is_empty()
    }

    fn insert_exp(&mut self, key: Vec<Rational>, value: PiScalar) {
        if value.is_zero() {
            return;
        }
        let entry = self.exp.entry(key);
        use std::collections::btree_map::Entry;
        match entry {
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

    fn insert_poly(&mut self, key: Vec<u32>, value: PiScalar) {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.poly.entry(key) {
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

    pub fn add(&self, other: &YProfile) -> YProfile {
        let mut out = self.clone();
        for (k, v) in &other.exp {
            out.insert_exp(k.clone(), v.clone());
        }
        for (k, v) in &other.poly {
            out.insert_poly(k.clone(), v.clone());
        }
        out
    }
}

impl ModeSum {
    /// Growth classification against hyperplane spacing `c`: the rate is the
    /// largest mode frequency, and the sum is subcritical when
    /// `rate * c < pi` strictly. Exact for pi-rational spacings.
    pub fn growth(&self, c: &TPoint) -> Growth {
        let rate = self
            .modes
            .iter()
            .filter_map(|m| match &m.kind {
                ModeKind::TrigExp { freq, .. } => Some(freq.clone()),
                ModeKind::PolyHarm { .. } => None,
            })
            .max()
            .unwrap_or_else(|| rat_int(0));
        let class = match c {
            TPoint::Pi(q) => {
                let product = &rate * q;
                match product.cmp(&rat_int(1)) {
                    std::cmp::Ordering::Less => GrowthClass::Subcritical,
                    std::cmp::Ordering::Equal => GrowthClass::Critical,
                    std::cmp::Ordering::Greater => GrowthClass::Supercritical,
                }
            }
            TPoint::Value(x) => {
                let product = to_f64(&rate) * x;
                let pi = std::f64::consts::PI;
                if (product - pi).abs() <= 1e-12 * pi {
                    GrowthClass::Critical
                } else if product < pi {
                    GrowthClass::Subcritical
                } else {
                    GrowthClass::Supercritical
                }
            }
        };
        Growth { rate, class }
    }

    /// The exact transverse profile `u(q*pi, y)`, when representable: needs
    /// exact coefficients and all trig arguments on the half-pi lattice.
    pub fn profile_at_pi(&self, q: &Rational) -> Option<YProfile> {
        if !self.is_exact() {
            return None;
        }
        let mut profile = YProfile::default();
        for mode in &self.modes {
            // t^m at t = q pi
            let t_power = PiScalar::pi_pow(pow_rat(q, mode.m as i32), mode.m as i32);
            match &mode.kind {
                ModeKind::TrigExp {
                    trig,
                    freq,
                    direction,
                } => {
                    let n = half_lattice_index(freq, q)?;
                    let value = trig_half_value(*trig, n);
                    let coeff = mode.coeff.mul(&t_power).scale(&value);
                    profile.insert_exp(direction.components().to_vec(), coeff);
                }
                ModeKind::PolyHarm { h } => {
                    let coeff = mode.coeff.mul(&t_power);
                    for (mono, c) in h.terms() {
                        profile.insert_poly(mono.clone(), coeff.scale(c));
                    }
                }
            }
        }
        Some(profile)
    }

    /// Largest magnitude scale over a grid (sum of per-mode magnitudes).
    pub fn magnitude_scale(&self, grid: &GridSpec) -> f64 {
        let mut scale = 0.0f64;
        for t in grid.t_values() {
            for y in grid.y_points() {
                scale = scale.max(self.magnitude(t, &y));
            }
        }
        scale
    }

    /// Does `u(t0, .)` vanish? Exact cancellation is certified when the
    /// slice is exactly representable; otherwise the transverse default grid
    /// is sampled and judged at the relative tolerance.
    pub fn vanishing_at(&self, t0: &TPoint) -> Vanishing {
        let t0 = t0.canonical();
        if let TPoint::Pi(q) = &t0 {
            if let Some(profile) = self.profile_at_pi(q) {
                if profile.is_zero() {
                    return Vanishing::ExactZero;
                }
            }
        }
        let grid = GridSpec::default_for(self.dim);
        let scale = self.magnitude_scale(&grid).max(f64::MIN_POSITIVE);
        let t = t0.to_f64();
        let mut worst = 0.0f64;
        for y in grid.y_points() {
            worst = worst.max(self.eval(t, &y).abs());
        }
        let residual = worst / scale;
        if residual <= REL_RESIDUAL {
            Vanishing::NumericZero { residual }
        } else {
            Vanishing::Nonzero { residual }
        }
    }

    /// Checks `u(a, y) + u(b, y) = 0` for all `y`, exactly when possible.
    pub fn antisymmetry(&self, a: &TPoint, b: &TPoint) -> PairCheck {
        let (a, b) = (&a.canonical(), &b.canonical());
        let exact = match (a, b) {
            (TPoint::Pi(qa), TPoint::Pi(qb)) => {
                match (self.profile_at_pi(qa), self.profile_at_pi(qb)) {
                    (Some(pa), Some(pb)) => Some(pa.add(&pb).is_zero()),
                    _ => None,
                }
            }
            _ => None,
        };
        let grid = GridSpec::default_for(self.dim);
        let scale = self.magnitude_scale(&grid).max(f64::MIN_POSITIVE);
        let (ta, tb) = (a.to_f64(), b.to_f64());
        let mut worst = 0.0f64;
        for y in grid.y_points() {
            worst = worst.max((self.eval(ta, &y) + self.eval(tb, &y)).abs());
        }
        PairCheck {
            exact,
            residual: worst / scale,
        }
    }

    /// Oddness at `t0`: reports `max |u(t0+t,y) + u(t0-t,y)|` over the grid
    /// (relative), plus the exact verdict when shifting stays exact.
    pub fn oddness_at(&self, t0: &TPoint, grid: &GridSpec) -> OddnessReport {
        let plus = self.shifted(t0, false);
        let minus = self.shifted(t0, true);
        let exact = if plus.is_exact() && minus.is_exact() {
            Some(plus.add(&minus).is_identically_zero())
        } else {
            None
        };
        let mut worst = 0.0f64;
        let mut scale = 0.0f64;
        let t0f = t0.to_f64();
        for t in grid.t_values() {
            for y in grid.y_points() {
                let a = self.eval(t0f + t, &y);
                let b = self.eval(t0f - t, &y);
                worst = worst.max((a + b).abs());
                scale = scale
                    .max(self.magnitude(t0f + t, &y))
                    .max(self.magnitude(t0f - t, &y));
            }
        }
        OddnessReport {
            exact,
            residual: worst / scale.max(f64::MIN_POSITIVE),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::sin_exp_1d;
    use super::super::*;
    use crate::multipoly::MultiPoly;
    use crate::rational::{rat, rat_int};

    #[test]
    fn growth_examples() {
        let critical = ModeSum::single(sin_exp_1d(1, 0, rat_int(1)));
        let g = critical.growth(&TPoint::pi(1, 1));
        assert_eq!(g.rate, rat_int(1));
        assert_eq!(g.class, GrowthClass::Critical);

        let sub = ModeSum::single(sin_exp_1d(1, 0, rat(1, 2)));
        assert!(sub.growth(&TPoint::pi(1, 1)).is_subcritical());

        let ty = ModeSum::single(
            Mode::poly_harm(PiScalar::one(), 3, MultiPoly::var(1, 0)).unwrap(),
        );
        let g = ty.growth(&TPoint::value(1.0));
        assert_eq!(g.rate, rat_int(0));
        assert!(g.is_subcritical());

        let sup = ModeSum::single(sin_exp_1d(1, 0, rat_int(2)));
        assert_eq!(sup.growth(&TPoint::pi(1, 1)).class, GrowthClass::Supercritical);
    }

    #[test]
    fn vanishing_examples() {
        let u = ModeSum::single(sin_exp_1d(1, 0, rat_int(1)));
        assert_eq!(u.vanishing_at(&TPoint::pi(1, 1)), Vanishing::ExactZero);
        assert!(matches!(
            u.vanishing_at(&TPoint::pi(1, 2)),
            Vanishing::Nonzero { .. }
        ));
        // cancellation across modes
        let cancel = u.sub(&u);
        assert_eq!(cancel.vanishing_at(&TPoint::pi(1, 3)), Vanishing::ExactZero);
    }

    #[test]
    fn numeric_vanishing_at_float_point() {
        let u = ModeSum::single(sin_exp_1d(1, 0, rat_int(1)));
        // sin(pi) sampled as a float point
        let v = u.vanishing_at(&TPoint::value(std::f64::consts::PI));
        assert!(matches!(v, Vanishing::NumericZero { .. }));
        assert!(matches!(
            u.vanishing_at(&TPoint::value(1.0)),
            Vanishing::Nonzero { .. }
        ));
    }

    #[test]
    fn antisymmetry_pairs() {
        // odd: u(pi) = -u(-pi)
        let u = ModeSum::single(sin_exp_1d(1, 0, rat(1, 2)));
        let pc = u.antisymmetry(&TPoint::pi(1, 1), &TPoint::pi(-1, 1));
        assert_eq!(pc.exact, Some(true));
        // t sin(t/2): even, fails the pair
        let even = ModeSum::single(sin_exp_1d(1, 1, rat(1, 2)));
        let pc = even.antisymmetry(&TPoint::pi(1, 1), &TPoint::pi(-1, 1));
        assert_eq!(pc.exact, Some(false));
        assert!(!pc.passes());
    }

    #[test]
    fn oddness_reports() {
        let grid = crate::grid::GridSpec::default_for(1);
        let odd = ModeSum::single(sin_exp_1d(1, 0, rat_int(1)));
        let r = odd.oddness_at(&TPoint::zero(), &grid);
        assert_eq!(r.exact, Some(true));
        assert!(r.residual <= 1e-12);
        // odd at pi as well: sin(pi + t) = -sin(pi - t)
        let r = odd.oddness_at(&TPoint::pi(1, 1), &grid);
        assert_eq!(r.exact, Some(true));

        let even = ModeSum::single(sin_exp_1d(1, 1, rat_int(1)));
        let r = even.oddness_at(&TPoint::zero(), &grid);
        assert_eq!(r.exact, Some(false));
        assert!(r.residual > 1e-3);
    }

    #[test]
    fn profile_combines_across_shapes() {
        // u = t^2 y + t y: at t = pi the profile is (pi^2 + pi) y
        let a = Mode::poly_harm(PiScalar::one(), 2, MultiPoly::var(1, 0)).unwrap();
        let b = Mode::poly_harm(PiScalar::one(), 1, MultiPoly::var(1, 0)).unwrap();
        let u = ModeSum::new(1, vec![a, b]).unwrap();
        let p = u.profile_at_pi(&rat_int(1)).unwrap();
        assert_eq!(p.poly.len(), 1);
        let c = &p.poly[&vec![1u32]];
        let expected = PiScalar::pi_pow(rat_int(1), 2).add(&PiScalar::pi_pow(rat_int(1), 1));
        assert_eq!(*c, expected);
    }
}
