//! Sweeps over the kinematic parameter x, local extremum location, and
//! numeric optimization of measurement directions.
//!
//! Extremum search runs a coarse grid scan for sign changes of the
//! discrete first difference, then refines each bracket by golden-section
//! search; extrema sitting exactly on the interval boundary produce no
//! sign change and are deliberately not reported. Direction optimization
//! is a seeded multi-restart Nelder-Mead over the polar angles of each
//! measurement axis, so results are deterministic for a given seed.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bell::{Inequality, Quantity};
use crate::correlation::{Correlator, MomentumConfig, MomentumFamily};
use crate::error::{Error, Result};
use crate::kinematics::{random_direction, Direction, Spin};
use crate::observables::SpinOperator;

/// One grid point of a sweep.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SweepPoint {
    pub x: f64,
    pub value: f64,
}

/// A quantity evaluated on a uniform inclusive grid in x.
#[derive(Clone, Debug, Serialize)]
pub struct SweepResult {
    pub label: String,
    pub points: Vec<SweepPoint>,
}

fn check_x_range(x_min: f64, x_max: f64) -> Result<()> {
    if !x_min.is_finite() || !x_max.is_finite() || x_min < 0.0 || x_max <= x_min {
        return Err(Error::InvalidRange(format!(
            "x range [{x_min}, {x_max}] must satisfy 0 <= x_min < x_max"
        )));
    }
    Ok(())
}

fn grid_point(x_min: f64, x_max: f64, i: usize, steps: usize) -> f64 {
    if i == 0 {
        x_min
    } else if i == steps - 1 {
        x_max
    } else {
        x_min + (x_max - x_min) * (i as f64) / ((steps - 1) as f64)
    }
}

/// Evaluates `f` on `steps` uniformly spaced points covering
/// [x_min, x_max] inclusive.
pub fn sweep_x<F>(label: &str, f: F, x_min: f64, x_max: f64, steps: usize) -> Result<SweepResult>
where
    F: Fn(f64) -> Result<f64>,
{
    check_x_range(x_min, x_max)?;
    if steps < 2 {
        return Err(Error::InvalidRange(format!(
            "steps must be >= 2, got {steps}"
        )));
    }
    let mut points = Vec::with_capacity(steps);
    for i in 0..steps {
        let x = grid_point(x_min, x_max, i, steps);
        let value = f(x)?;
        if !value.is_finite() {
            return Err(Error::NonFiniteValue(x));
        }
        points.push(SweepPoint { x, value });
    }
    Ok(SweepResult {
        label: label.into(),
        points,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremumKind {
    Max,
    Min,
}

impl ExtremumKind {
    pub fn label(self) -> &'static str {
        match self {
            ExtremumKind::Max => "max",
            ExtremumKind::Min => "min",
        }
    }
}

/// A local extremum strictly inside the scanned interval.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Extremum {
    pub x_star: f64,
    pub value: f64,
    pub kind: ExtremumKind,
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section maximization on [lo, hi]; never evaluates f outside the
/// bracket.
fn golden_max<F>(f: &F, mut lo: f64, mut hi: f64, x_tol: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    while hi - lo > x_tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1)?;
        }
    }
    let x = 0.5 * (lo + hi);
    Ok((x, f(x)?))
}

/// Locates the local extrema of `f` strictly inside [x_min, x_max]:
/// a coarse scan on `coarse_steps` grid points brackets every sign change
/// of the first difference, and each bracket is refined to width `x_tol`.
pub fn find_local_extrema<F>(
    f: F,
    x_min: f64,
    x_max: f64,
    coarse_steps: usize,
    x_tol: f64,
) -> Result<Vec<Extremum>>
where
    F: Fn(f64) -> Result<f64>,
{
    check_x_range(x_min, x_max)?;
    if coarse_steps < 8 {
        return Err(Error::InvalidRange(format!(
            "coarse_steps must be >= 8, got {coarse_steps}"
        )));
    }
    if !x_tol.is_finite() || x_tol <= 0.0 {
        return Err(Error::InvalidRange(format!(
            "x_tol must be > 0, got {x_tol}"
        )));
    }

    let xs: Vec<f64> = (0..coarse_steps)
        .map(|i| grid_point(x_min, x_max, i, coarse_steps))
        .collect();
    let mut values = Vec::with_capacity(coarse_steps);
    for &x in &xs {
        let v = f(x)?;
        if !v.is_finite() {
            return Err(Error::NonFiniteValue(x));
        }
        values.push(v);
    }

    // Indices and signs of the nonzero first differences; plateaus are
    // skipped so a flat stretch does not hide the surrounding change.
    let marks: Vec<(usize, bool)> = values
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] != w[0])
        .map(|(i, w)| (i, w[1] > w[0]))
        .collect();

    let mut extrema = Vec::new();
    for pair in marks.windows(2) {
        let ((i, rising), (j, rising_after)) = (pair[0], pair[1]);
        if rising == rising_after {
            continue;
        }
        let (lo, hi) = (xs[i], xs[j + 1]);
        let extremum = if rising {
            let (x_star, value) = golden_max(&f, lo, hi, x_tol)?;
            Extremum {
                x_star,
                value,
                kind: ExtremumKind::Max,
            }
        } else {
            let neg = |x: f64| f(x).map(|v| -v);
            let (x_star, value) = golden_max(&neg, lo, hi, x_tol)?;
            Extremum {
                x_star,
                value: -value,
                kind: ExtremumKind::Min,
            }
        };
        extrema.push(extremum);
    }
    Ok(extrema)
}

/// Standard Nelder-Mead minimization with reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2. Returns the best vertex.
fn nelder_mead<F>(f: &F, start: &[f64], step: f64, max_iter: usize, f_tol: f64) -> (Vec<f64>, f64)
where
    F: Fn(&[f64]) -> f64,
{
    let n = start.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    simplex.push((start.to_vec(), f(start)));
    for i in 0..n {
        let mut v = start.to_vec();
        v[i] += step;
        let fv = f(&v);
        simplex.push((v, fv));
    }

    for _ in 0..max_iter {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        if simplex[n].1 - simplex[0].1 < f_tol {
            break;
        }

        let mut centroid = vec![0.0; n];
        for (v, _) in &simplex[..n] {
            for (c, vi) in centroid.iter_mut().zip(v) {
                *c += vi / n as f64;
            }
        }
        let worst = simplex[n].clone();
        let at = |coef: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&worst.0)
                .map(|(c, w)| c + coef * (c - w))
                .collect()
        };

        let reflected = at(1.0);
        let fr = f(&reflected);
        if fr < simplex[0].1 {
            let expanded = at(2.0);
            let fe = f(&expanded);
            simplex[n] = if fe < fr {
                (expanded, fe)
            } else {
                (reflected, fr)
            };
        } else if fr < simplex[n - 1].1 {
            simplex[n] = (reflected, fr);
        } else {
            let contracted = if fr < worst.1 { at(0.5) } else { at(-0.5) };
            let fc = f(&contracted);
            if fc < worst.1.min(fr) {
                simplex[n] = (contracted, fc);
            } else {
                let best = simplex[0].0.clone();
                for entry in simplex.iter_mut().skip(1) {
                    for (v, b) in entry.0.iter_mut().zip(&best) {
                        *v = b + 0.5 * (*v - b);
                    }
                    entry.1 = f(&entry.0);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (best, value) = simplex.swap_remove(0);
    (best, value)
}

fn dirs_from_angles(angles: &[f64]) -> Vec<Direction> {
    angles
        .chunks(2)
        .map(|c| Direction::from_angles(c[0], c[1]))
        .collect()
}

fn angles_from_dirs(dirs: &[Direction]) -> Vec<f64> {
    dirs.iter()
        .flat_map(|d| {
            let v = d.vector();
            [v.z.clamp(-1.0, 1.0).acos(), v.y.atan2(v.x)]
        })
        .collect()
}

/// An inequality whose value is maximized over measurement directions,
/// with the kinematics family and spin/operator choice held fixed.
#[derive(Clone, Debug)]
pub struct OptimizeProblem {
    pub inequality: Inequality,
    pub spin: Spin,
    pub operator: SpinOperator,
    pub family: MomentumFamily,
    pub mass: f64,
}

impl OptimizeProblem {
    fn correlator_at(&self, x: f64) -> Correlator {
        Correlator::with_best_backend(
            self.spin,
            self.operator,
            MomentumConfig {
                family: self.family,
                x,
                mass: self.mass,
            },
        )
    }

    /// Inequality value at kinematic point x with the given directions.
    pub fn value(&self, x: f64, dirs: &[Direction]) -> Result<f64> {
        Quantity::from_inequality(self.inequality, dirs)?.evaluate(&self.correlator_at(x))
    }
}

/// Best directions found for a fixed kinematic point.
#[derive(Clone, Debug)]
pub struct DirectionOptimum {
    pub directions: Vec<Direction>,
    pub value: f64,
}

/// Maximizes the inequality over directions at fixed x by multi-restart
/// Nelder-Mead on the direction angles. When `initial` is given it seeds
/// the first restart; remaining restarts start from seeded random
/// directions. Deterministic for a given seed; ties keep the earliest
/// restart.
pub fn optimize_directions(
    problem: &OptimizeProblem,
    x: f64,
    restarts: usize,
    seed: u64,
    initial: Option<&[Direction]>,
) -> Result<DirectionOptimum> {
    if restarts == 0 {
        return Err(Error::InvalidRange("restarts must be >= 1".into()));
    }
    let count = problem.inequality.direction_count();
    if let Some(dirs) = initial {
        if dirs.len() != count {
            return Err(Error::InvalidArgument(format!(
                "expected {count} initial directions, got {}",
                dirs.len()
            )));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probe: Vec<Direction> = (0..count).map(|_| random_direction(&mut rng)).collect();
    problem.value(x, initial.unwrap_or(&probe))?;

    let objective = |angles: &[f64]| -> f64 {
        let dirs = dirs_from_angles(angles);
        problem.value(x, &dirs).map_or(f64::INFINITY, |v| -v)
    };

    let dim = 2 * count;
    let mut best: Option<(Vec<f64>, f64)> = None;
    for restart in 0..restarts {
        let start = match (restart, initial) {
            (0, Some(dirs)) => angles_from_dirs(dirs),
            _ => {
                let dirs: Vec<Direction> = (0..count).map(|_| random_direction(&mut rng)).collect();
                angles_from_dirs(&dirs)
            }
        };
        let (coarse, _) = nelder_mead(&objective, &start, 0.35, 300 * dim, 1e-12);
        let (fine, value) = nelder_mead(&objective, &coarse, 0.02, 300 * dim, 1e-14);
        if best.as_ref().is_none_or(|(_, b)| value < *b) {
            best = Some((fine, value));
        }
    }

    let (angles, neg_value) = best.expect("at least one restart");
    Ok(DirectionOptimum {
        directions: dirs_from_angles(&angles),
        value: -neg_value,
    })
}

/// Best (x, directions) pair over an x interval.
#[derive(Clone, Debug)]
pub struct JointOptimum {
    pub x_star: f64,
    pub directions: Vec<Direction>,
    pub value: f64,
}

/// Alternates extremum search in x with direction optimization until the
/// optimum stops improving by more than 1e-9. Interval endpoints compete
/// with interior maxima. With `fix_directions` the supplied directions are
/// kept and only x is searched.
pub fn optimize_joint(
    problem: &OptimizeProblem,
    x_range: (f64, f64),
    restarts: usize,
    seed: u64,
    initial: Option<&[Direction]>,
    fix_directions: bool,
) -> Result<JointOptimum> {
    let (lo, hi) = x_range;
    check_x_range(lo, hi)?;
    if fix_directions && initial.is_none() {
        return Err(Error::InvalidArgument(
            "fixed-direction search needs the directions to hold fixed".into(),
        ));
    }

    let count = problem.inequality.direction_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xA5A5_5A5A_C3C3_3C3C);
    let mut dirs: Vec<Direction> = match initial {
        Some(d) if d.len() == count => d.to_vec(),
        Some(d) => {
            return Err(Error::InvalidArgument(format!(
                "expected {count} initial directions, got {}",
                d.len()
            )))
        }
        None => (0..count).map(|_| random_direction(&mut rng)).collect(),
    };

    let mut best = JointOptimum {
        x_star: lo,
        directions: dirs.clone(),
        value: f64::NEG_INFINITY,
    };
    let mut round_seed = seed;
    for round in 0..50 {
        let g = |x: f64| problem.value(x, &dirs);
        let (mut bx, mut bv) = (lo, g(lo)?);
        let at_hi = g(hi)?;
        if at_hi > bv {
            (bx, bv) = (hi, at_hi);
        }
        for e in find_local_extrema(g, lo, hi, 512, 1e-8)? {
            if e.kind == ExtremumKind::Max && e.value > bv {
                (bx, bv) = (e.x_star, e.value);
            }
        }

        let improvement = bv - best.value;
        if bv > best.value {
            best = JointOptimum {
                x_star: bx,
                directions: dirs.clone(),
                value: bv,
            };
        }
        if fix_directions || (round > 0 && improvement < 1e-9) {
            break;
        }

        let refined = optimize_directions(problem, best.x_star, restarts, round_seed, Some(&dirs))?;
        dirs = refined.directions;
        round_seed = round_seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    }
    Ok(best)
}
