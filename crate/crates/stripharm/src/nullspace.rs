//! Independent linear-algebra oracle for hyperplane-vanishing constraints.
//!
//! Given a template of modes with undetermined coefficients, the vanishing
//! conditions `u(t_j, .) = 0` (and optional antisymmetry pairs
//! `u(a, .) + u(b, .) = 0`) split by transverse structure: distinct
//! exponential directions and distinct monomials are linearly independent,
//! so each (structure, constraint) pair is one linear equation in the mode
//! coefficients. The null space of that system is computed exactly by
//! rational elimination when every trig entry lands on the half-pi lattice,
//! and in floating point with a pivot tolerance otherwise.
//!
//! For the exact route the `t^m` entry at `t = q pi` carries `pi^m`; the
//! substitution `d_i = c_i pi^(m_i)` makes the system rational without
//! changing its null space, and the basis is mapped back through the
//! inverse powers, which the pi-scalar ring represents exactly.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::mode::{half_lattice_index, trig_half_value, Mode, ModeKind, ModeSum, TPoint};
use crate::pi::PiScalar;
use crate::rational::{pow_rat, rat_int, to_f64, Rational};
use crate::tolerances::PIVOT_TOL;

/// A vanishing or antisymmetry constraint on the `t` axis.
#[derive(Clone, Debug, PartialEq)]
pub enum Constraint {
    /// `u(t, .) = 0`.
    Point(TPoint),
    /// `u(a, .) + u(b, .) = 0`.
    Pair(TPoint, TPoint),
}

/// Null-space basis over the template's coefficient vector.
#[derive(Clone, Debug, PartialEq)]
pub enum NullspaceBasis {
    /// Exact coefficients (entries may carry negative pi powers).
    Exact(Vec<Vec<PiScalar>>),
    Numeric(Vec<Vec<f64>>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct NullspaceResult {
    /// Dimension of the solution space.
    pub dim: usize,
    pub basis: NullspaceBasis,
}

impl NullspaceResult {
    pub fn is_trivial(&self) -> bool {
        self.dim == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum GroupKey {
    Exp(Vec<Rational>),
    Mono(Vec<u32>),
}

fn group_keys(template: &ModeSum) -> Vec<GroupKey> {
    let mut keys = BTreeSet::new();
    for mode in template.modes() {
        match &mode.kind {
            ModeKind::TrigExp { direction, .. } => {
                keys.insert(GroupKey::Exp(direction.components().to_vec()));
            }
            ModeKind::PolyHarm { h } => {
                for (mono, _) in h.terms() {
                    keys.insert(GroupKey::Mono(mono.clone()));
                }
            }
        }
    }
    keys.into_iter().collect()
}

/// Exact matrix entry at `t = q pi` in the pi-power-scaled coordinates;
/// `None` when a trig argument falls off the half-pi lattice.
fn entry_exact(mode: &Mode, key: &GroupKey, q: &Rational) -> Option<Rational> {
    let t_pow = pow_rat(q, mode.m as i32);
    match (&mode.kind, key) {
        (
            ModeKind::TrigExp {
                trig,
                freq,
                direction,
            },
            GroupKey::Exp(kappa),
        ) => {
            if direction.components() != &kappa[..] {
                return Some(rat_int(0));
            }
            let n = half_lattice_index(freq, q)?;
            Some(t_pow * trig_half_value(*trig, n))
        }
        (ModeKind::PolyHarm { h }, GroupKey::Mono(mono)) => {
            let c = h
                .terms()
                .find(|(m, _)| *m == mono)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(|| rat_int(0));
            Some(t_pow * c)
        }
        _ => Some(rat_int(0)),
    }
}

fn entry_float(mode: &Mode, key: &GroupKey, t: f64) -> f64 {
    let t_pow = t.powi(mode.m as i32);
    match (&mode.kind, key) {
        (
            ModeKind::TrigExp {
                trig,
                freq,
                direction,
            },
            GroupKey::Exp(kappa),
        ) => {
            if direction.components() != &kappa[..] {
                0.0
            } else {
                t_pow * trig.eval(to_f64(freq) * t)
            }
        }
        (ModeKind::PolyHarm { h }, GroupKey::Mono(mono)) => {
            let c = h
                .terms()
                .find(|(m, _)| *m == mono)
                .map(|(_, c)| to_f64(c))
                .unwrap_or(0.0);
            t_pow * c
        }
        _ => 0.0,
    }
}

fn constraint_points(c: &Constraint) -> Vec<&TPoint> {
    match c {
        Constraint::Point(p) => vec![p],
        Constraint::Pair(a, b) => vec![a, b],
    }
}

/// Null space of the vanishing system for `template` under `constraints`.
pub fn vanishing_nullspace(template: &ModeSum, constraints: &[Constraint]) -> NullspaceResult {
    let keys = group_keys(template);
    let modes = template.modes();

    // exact route: every point pi-rational, every trig entry on the lattice
    let exact_rows: Option<Vec<Vec<Rational>>> = (|| {
        let mut rows = Vec::new();
        for key in &keys {
            for c in constraints {
                let mut row = Vec::with_capacity(modes.len());
                for mode in modes {
                    let mut acc = rat_int(0);
                    for p in constraint_points(c) {
                        let q = p.canonical();
                        let q = q.as_pi()?.clone();
                        acc += entry_exact(mode, key, &q)?;
                    }
                    row.push(acc);
                }
                rows.push(row);
            }
        }
        Some(rows)
    })();

    if let Some(rows) = exact_rows {
        let basis_scaled = rational_nullspace(rows, modes.len());
        let dim = basis_scaled.len();
        let basis = basis_scaled
            .into_iter()
            .map(|v| {
                v.into_iter()
                    .zip(modes)
                    .map(|(d, mode)| PiScalar::pi_pow(d, -(mode.m as i32)))
                    .collect()
            })
            .collect();
        return NullspaceResult {
            dim,
            basis: NullspaceBasis::Exact(basis),
        };
    }

    let mut rows = Vec::new();
    for key in &keys {
        for c in constraints {
            let row: Vec<f64> = modes
                .iter()
                .map(|mode| {
                    constraint_points(c)
                        .iter()
                        .map(|p| entry_float(mode, key, p.to_f64()))
                        .sum()
                })
                .collect();
            rows.push(row);
        }
    }
    let basis = float_nullspace(rows, modes.len());
    NullspaceResult {
        dim: basis.len(),
        basis: NullspaceBasis::Numeric(basis),
    }
}

/// Materializes an exact basis vector as a mode sum over the template.
pub fn nullspace_member(template: &ModeSum, coeffs: &[PiScalar]) -> ModeSum {
    assert_eq!(coeffs.len(), template.modes().len());
    let modes = template
        .modes()
        .iter()
        .zip(coeffs)
        .map(|(mode, c)| {
            let mut m = mode.clone();
            m.coeff = mode.coeff.mul(c);
            m
        })
        .collect();
    ModeSum::new(template.dim(), modes).expect("template modes are valid")
}

/// Exact reduced-row-echelon null space over the rationals.
fn rational_nullspace(mut rows: Vec<Vec<Rational>>, cols: usize) -> Vec<Vec<Rational>> {
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut rank = 0usize;
    for col in 0..cols {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone().recip();
        for v in rows[rank].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c2 in 0..cols {
                    let sub = &rows[rank][c2] * &factor;
                    rows[r][c2] -= sub;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![rat_int(0); cols];
        v[free] = rat_int(1);
        for (col, pr) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pr {
                v[col] = -rows[*r][free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Floating-point null space with partial pivoting; columns are normalized
/// to unit max magnitude first so the pivot tolerance is meaningful.
fn float_nullspace(mut rows: Vec<Vec<f64>>, cols: usize) -> Vec<Vec<f64>> {
    let global = rows
        .iter()
        .flat_map(|r| r.iter().map(|v| v.abs()))
        .fold(0.0f64, f64::max);
    let mut scales = vec![1.0f64; cols];
    for col in 0..cols {
        let s = rows
            .iter()
            .map(|r| r[col].abs())
            .fold(0.0f64, f64::max);
        // a column whose entries sit at rounding level is numerically zero;
        // rescaling it would amplify noise into a fake pivot
        if s > PIVOT_TOL * global {
            scales[col] = s;
            for r in rows.iter_mut() {
                r[col] /= s;
            }
        }
    }
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut rank = 0usize;
    for col in 0..cols {
        let pivot = (rank..rows.len())
            .max_by(|&a, &b| rows[a][col].abs().total_cmp(&rows[b][col].abs()));
        let Some(pivot) = pivot else { continue };
        if rows[pivot][col].abs() <= PIVOT_TOL {
            continue;
        }
        rows.swap(rank, pivot);
        let inv = 1.0 / rows[rank][col];
        for v in rows[rank].iter_mut() {
            *v *= inv;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0.0 {
                let factor = rows[r][col];
                for c2 in 0..cols {
                    rows[r][c2] -= rows[rank][c2] * factor;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0.0; cols];
        v[free] = 1.0;
        for (col, pr) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pr {
                v[col] = -rows[*r][free];
            }
        }
        // undo the column normalization
        for (val, s) in v.iter_mut().zip(&scales) {
            *val /= s;
        }
        let norm = v.iter().map(|x| x.abs()).fold(0.0f64, f64::max);
        if norm > 0.0 {
            for val in v.iter_mut() {
                *val /= norm;
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mode::Trig;
    use crate::rational::rat;

    fn template_1d(parts: &[(u32, Trig, Rational)]) -> ModeSum {
        let modes = parts
            .iter()
            .map(|(m, trig, k)| {
                Mode::trig_exp(PiScalar::one(), *m, *trig, k.clone(), vec![k.clone()]).unwrap()
            })
            .collect();
        ModeSum::new(1, modes).unwrap()
    }

    fn points(ps: &[(i64, i64)]) -> Vec<Constraint> {
        ps.iter()
            .map(|(n, d)| Constraint::Point(TPoint::pi(*n, *d)))
            .collect()
    }

    #[test]
    fn single_mode_pinned_by_quarter_point() {
        // sin(t) e^y at t = 0 and t = pi/2: sin(pi/2) = 1 forces c = 0
        let t = template_1d(&[(0, Trig::Sin, rat_int(1))]);
        let r = vanishing_nullspace(&t, &points(&[(0, 1), (1, 2)]));
        assert!(r.is_trivial());
        assert!(matches!(r.basis, NullspaceBasis::Exact(_)));
    }

    #[test]
    fn critical_modes_make_constraints_vacuous() {
        // sin t and t sin t vanish on every multiple of pi
        let t = template_1d(&[(0, Trig::Sin, rat_int(1)), (1, Trig::Sin, rat_int(1))]);
        let r = vanishing_nullspace(&t, &points(&[(0, 1), (1, 1), (2, 1), (3, 1)]));
        assert_eq!(r.dim, 2);
    }

    #[test]
    fn subcritical_half_frequency_template_is_pinned() {
        // {sin(t/2), t sin(t/2), cos(t/2), t cos(t/2)} e^{y/2} on 4 points
        let t = template_1d(&[
            (0, Trig::Sin, rat(1, 2)),
            (1, Trig::Sin, rat(1, 2)),
            (0, Trig::Cos, rat(1, 2)),
            (1, Trig::Cos, rat(1, 2)),
        ]);
        let r = vanishing_nullspace(&t, &points(&[(0, 1), (1, 1), (2, 1), (3, 1)]));
        assert!(r.is_trivial(), "dim = {}", r.dim);
        assert!(matches!(r.basis, NullspaceBasis::Exact(_)));
    }

    #[test]
    fn exact_members_vanish_on_all_points() {
        // underdetermined: 2 points cannot pin 4 half-frequency modes
        let t = template_1d(&[
            (0, Trig::Sin, rat(1, 2)),
            (1, Trig::Sin, rat(1, 2)),
            (0, Trig::Cos, rat(1, 2)),
            (1, Trig::Cos, rat(1, 2)),
        ]);
        let cs = points(&[(1, 1), (2, 1)]);
        let r = vanishing_nullspace(&t, &cs);
        assert_eq!(r.dim, 2);
        let NullspaceBasis::Exact(basis) = &r.basis else {
            panic!("expected exact basis");
        };
        for v in basis {
            let member = nullspace_member(&t, v);
            for c in &cs {
                let Constraint::Point(p) = c else { unreachable!() };
                assert!(
                    member.vanishing_at(p).passes(),
                    "member {member} fails at {p}"
                );
            }
        }
    }

    #[test]
    fn float_route_for_off_lattice_frequencies() {
        // k = 1/3 on integer-pi points is off the half-pi lattice
        let t = template_1d(&[
            (0, Trig::Sin, rat(1, 3)),
            (1, Trig::Sin, rat(1, 3)),
            (0, Trig::Cos, rat(1, 3)),
            (1, Trig::Cos, rat(1, 3)),
        ]);
        let r = vanishing_nullspace(&t, &points(&[(0, 1), (1, 1), (2, 1), (3, 1)]));
        assert!(matches!(r.basis, NullspaceBasis::Numeric(_)));
        assert!(r.is_trivial(), "dim = {}", r.dim);
    }

    #[test]
    fn pair_constraints_pick_odd_combinations() {
        // {sin(t/2), t sin(t/2), cos(t/2), t cos(t/2)}: antisymmetry pairs at
        // j = 0, 1 leave exactly {sin, t cos}
        let t = template_1d(&[
            (0, Trig::Sin, rat(1, 2)),
            (1, Trig::Sin, rat(1, 2)),
            (0, Trig::Cos, rat(1, 2)),
            (1, Trig::Cos, rat(1, 2)),
        ]);
        let cs = vec![
            Constraint::Pair(TPoint::pi(0, 1), TPoint::pi(0, 1)),
            Constraint::Pair(TPoint::pi(1, 1), TPoint::pi(-1, 1)),
        ];
        let r = vanishing_nullspace(&t, &cs);
        assert_eq!(r.dim, 2);
        let NullspaceBasis::Exact(basis) = &r.basis else {
            panic!("expected exact basis");
        };
        for v in basis {
            let member = nullspace_member(&t, v);
            // members must satisfy both pairs
            for c in &cs {
                let Constraint::Pair(a, b) = c else { unreachable!() };
                assert!(member.antisymmetry(a, b).passes());
            }
        }
    }

    #[test]
    fn polyharm_monomial_grouping_catches_dependence() {
        // h1 = y1, h2 = y2, h3 = y1 + y2 are linearly dependent; vanishing at
        // one nonzero point must leave a 2-dimensional space, not fail to
        // see the cross-monomial cancellation
        let y1 = crate::multipoly::MultiPoly::var(2, 0);
        let y2 = crate::multipoly::MultiPoly::var(2, 1);
        let h3 = y1.add(&y2);
        let modes = vec![
            Mode::poly_harm(PiScalar::one(), 0, y1).unwrap(),
            Mode::poly_harm(PiScalar::one(), 0, y2).unwrap(),
            Mode::poly_harm(PiScalar::one(), 0, h3).unwrap(),
        ];
        let t = ModeSum::new(2, modes).unwrap();
        let r = vanishing_nullspace(&t, &points(&[(1, 1)]));
        assert_eq!(r.dim, 1);
        let NullspaceBasis::Exact(basis) = &r.basis else {
            panic!("expected exact basis");
        };
        let member = nullspace_member(&t, &basis[0]);
        assert!(
            member.is_identically_zero(),
            "dependent combination must collapse"
        );
    }
}
