//! Rectangular sampling grids in `(t, y)` with exclusion margins around a
//! declared set of singular `t` values.

use std::fmt;

/// One sampled axis: closed range with a positive step.
#[derive(Clone, Debug, PartialEq)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

impl Axis {
    pub fn new(min: f64, max: f64, step: f64) -> Result<Self, GridError> {
        if !(step > 0.0) {
            return Err(GridError::NonPositiveStep);
        }
        if max < min {
            return Err(GridError::EmptyRange);
        }
        Ok(Axis { min, max, step })
    }

    pub fn values(&self) -> Vec<f64> {
        let n = ((self.max - self.min) / self.step).round() as usize;
        (0..=n)
            .map(|i| self.min + i as f64 * self.step)
            .filter(|v| *v <= self.max + 1e-12)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    pub t: Axis,
    /// One axis per transverse coordinate.
    pub y: Vec<Axis>,
    /// Singular `t` values to avoid.
    pub exclusions: Vec<f64>,
    /// Points with `|t - s| < margin` for an excluded `s` are dropped.
    pub margin: f64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GridError {
    NonPositiveStep,
    EmptyRange,
    NegativeMargin,
    EmptyAfterExclusion,
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridError::NonPositiveStep => write!(f, "grid step must be positive"),
            GridError::EmptyRange => write!(f, "grid range is empty"),
            GridError::NegativeMargin => write!(f, "exclusion margin must be nonnegative"),
            GridError::EmptyAfterExclusion => {
                write!(f, "no t samples remain after exclusion")
            }
        }
    }
}

impl std::error::Error for GridError {}

impl GridSpec {
    pub fn new(
        t: Axis,
        y: Vec<Axis>,
        exclusions: Vec<f64>,
        margin: f64,
    ) -> Result<Self, GridError> {
        if margin < 0.0 {
            return Err(GridError::NegativeMargin);
        }
        let grid = GridSpec {
            t,
            y,
            exclusions,
            margin,
        };
        if grid.t_values().is_empty() {
            return Err(GridError::EmptyAfterExclusion);
        }
        Ok(grid)
    }

    /// Default desk-scale grid: `t` in `[-3.3, 3.3]`, each `y` coordinate in
    /// `[-1, 1]`, no exclusions.
    pub fn default_for(dim: usize) -> GridSpec {
        GridSpec {
            t: Axis {
                min: -3.3,
                max: 3.3,
                step: 0.3,
            },
            y: vec![
                Axis {
                    min: -1.0,
                    max: 1.0,
                    step: 0.5,
                };
                dim
            ],
            exclusions: Vec::new(),
            margin: 0.0,
        }
    }

    pub fn with_exclusions(mut self, exclusions: Vec<f64>, margin: f64) -> GridSpec {
        self.exclusions = exclusions;
        self.margin = margin;
        self
    }

    pub fn dim(&self) -> usize {
        self.y.len()
    }

    pub fn t_values(&self) -> Vec<f64> {
        self.t
            .values()
            .into_iter()
            .filter(|t| {
                self.exclusions
                    .iter()
                    .all(|s| (t - s).abs() >= self.margin)
            })
            .collect()
    }

    /// Cartesian product of the `y` axes.
    pub fn y_points(&self) -> Vec<Vec<f64>> {
        let mut points = vec![Vec::new()];
        for axis in &self.y {
            let vals = axis.values();
            let mut next = Vec::with_capacity(points.len() * vals.len());
            for p in &points {
                for v in &vals {
                    let mut q = p.clone();
                    q.push(*v);
                    next.push(q);
                }
            }
            points = next;
        }
        points
    }
}
