//! Bell-type inequalities built from pair correlations.
//!
//! The CHSH combination |C(a,b) - C(a,d) + C(c,b) + C(c,d)| is bounded by
//! 2 for local hidden variables; the signed Bell-Mermin combination
//! C(a,b) + C(b,c) + C(c,a) for two spin-1 particles is bounded by 1.

use serde::Serialize;

use crate::correlation::{Correlator, MomentumFamily};
use crate::error::{Error, Result};
use crate::kinematics::{Direction, Spin};

/// Margin above the classical bound required before a value counts as a
/// violation, guarding against rounding at the boundary.
pub const VIOLATION_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Inequality {
    Chsh,
    BellMermin,
}

impl Inequality {
    /// Local-hidden-variable bound.
    pub fn bound(self) -> f64 {
        match self {
            Inequality::Chsh => 2.0,
            Inequality::BellMermin => 1.0,
        }
    }

    pub fn direction_count(self) -> usize {
        match self {
            Inequality::Chsh => 4,
            Inequality::BellMermin => 3,
        }
    }

    pub fn is_violated(self, value: f64) -> bool {
        value > self.bound() + VIOLATION_TOL
    }

    pub fn label(self) -> &'static str {
        match self {
            Inequality::Chsh => "chsh",
            Inequality::BellMermin => "mermin",
        }
    }
}

/// Echo of the configuration an inequality was evaluated at.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub spin: &'static str,
    pub operator: &'static str,
    pub backend: &'static str,
    pub momenta: &'static str,
    pub x: f64,
    pub mass: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axis: Option<[f64; 3]>,
    pub directions: Vec<[f64; 3]>,
}

impl ConfigEcho {
    pub fn new(correlator: &Correlator, directions: &[Direction]) -> Self {
        let (momenta, axis) = match correlator.config.family {
            MomentumFamily::Boosted => ("eq13", None),
            MomentumFamily::CenterOfMass { axis } => ("cm", Some(axis.components())),
        };
        Self {
            spin: match correlator.spin {
                Spin::Half => "half",
                Spin::One => "one",
            },
            operator: correlator.operator.label(),
            backend: match correlator.backend {
                crate::correlation::Backend::ClosedForm => "closed",
                crate::correlation::Backend::Oracle => "oracle",
            },
            momenta,
            x: correlator.config.x,
            mass: correlator.config.mass,
            axis,
            directions: directions.iter().map(Direction::components).collect(),
        }
    }
}

/// Value, bound, and violation flag of one inequality evaluation.
#[derive(Clone, Debug, Serialize)]
pub struct InequalityResult {
    pub inequality: &'static str,
    pub value: f64,
    pub bound: f64,
    pub violated: bool,
    pub config: ConfigEcho,
}

fn result(inequality: Inequality, value: f64, config: ConfigEcho) -> InequalityResult {
    InequalityResult {
        inequality: inequality.label(),
        value,
        bound: inequality.bound(),
        violated: inequality.is_violated(value),
        config,
    }
}

/// CHSH combination of an arbitrary correlation functional.
pub fn chsh_value<F>(
    corr: F,
    a: &Direction,
    b: &Direction,
    c: &Direction,
    d: &Direction,
) -> Result<f64>
where
    F: Fn(&Direction, &Direction) -> Result<f64>,
{
    Ok((corr(a, b)? - corr(a, d)? + corr(c, b)? + corr(c, d)?).abs())
}

/// CHSH evaluated through a [`Correlator`].
pub fn chsh(
    correlator: &Correlator,
    a: &Direction,
    b: &Direction,
    c: &Direction,
    d: &Direction,
) -> Result<InequalityResult> {
    let value = chsh_value(|u, v| correlator.correlation(u, v), a, b, c, d)?;
    let echo = ConfigEcho::new(correlator, &[*a, *b, *c, *d]);
    Ok(result(Inequality::Chsh, value, echo))
}

/// Signed Bell-Mermin combination of an arbitrary correlation functional.
pub fn bell_mermin_value<F>(corr: F, a: &Direction, b: &Direction, c: &Direction) -> Result<f64>
where
    F: Fn(&Direction, &Direction) -> Result<f64>,
{
    Ok(corr(a, b)? + corr(b, c)? + corr(c, a)?)
}

/// Bell-Mermin inequality evaluated through a [`Correlator`]; defined for
/// spin-1 pairs only.
pub fn bell_mermin(
    correlator: &Correlator,
    a: &Direction,
    b: &Direction,
    c: &Direction,
) -> Result<InequalityResult> {
    if correlator.spin != Spin::One {
        return Err(Error::SpinOneRequired("the Bell-Mermin inequality".into()));
    }
    let value = bell_mermin_value(|u, v| correlator.correlation(u, v), a, b, c)?;
    let echo = ConfigEcho::new(correlator, &[*a, *b, *c]);
    Ok(result(Inequality::BellMermin, value, echo))
}

/// A scalar quantity evaluated at one kinematic point; the unit shared by
/// sweeps, extremum searches, and figure datasets.
#[derive(Clone, Debug)]
pub enum Quantity {
    Correlation {
        a: Direction,
        b: Direction,
    },
    Chsh {
        a: Direction,
        b: Direction,
        c: Direction,
        d: Direction,
    },
    BellMermin {
        a: Direction,
        b: Direction,
        c: Direction,
    },
}

impl Quantity {
    pub fn from_inequality(inequality: Inequality, dirs: &[Direction]) -> Result<Self> {
        if dirs.len() != inequality.direction_count() {
            return Err(Error::InvalidArgument(format!(
                "{} takes {} directions, got {}",
                inequality.label(),
                inequality.direction_count(),
                dirs.len()
            )));
        }
        Ok(match inequality {
            Inequality::Chsh => Quantity::Chsh {
                a: dirs[0],
                b: dirs[1],
                c: dirs[2],
                d: dirs[3],
            },
            Inequality::BellMermin => Quantity::BellMermin {
                a: dirs[0],
                b: dirs[1],
                c: dirs[2],
            },
        })
    }

    pub fn directions(&self) -> Vec<Direction> {
        match self {
            Quantity::Correlation { a, b } => vec![*a, *b],
            Quantity::Chsh { a, b, c, d } => vec![*a, *b, *c, *d],
            Quantity::BellMermin { a, b, c } => vec![*a, *b, *c],
        }
    }

    pub fn direction_count(&self) -> usize {
        match self {
            Quantity::Correlation { .. } => 2,
            Quantity::Chsh { .. } => 4,
            Quantity::BellMermin { .. } => 3,
        }
    }

    /// The same quantity with its directions replaced.
    pub fn with_directions(&self, dirs: &[Direction]) -> Result<Self> {
        if dirs.len() != self.direction_count() {
            return Err(Error::InvalidArgument(format!(
                "expected {} directions, got {}",
                self.direction_count(),
                dirs.len()
            )));
        }
        Ok(match self {
            Quantity::Correlation { .. } => Quantity::Correlation {
                a: dirs[0],
                b: dirs[1],
            },
            Quantity::Chsh { .. } => Quantity::Chsh {
                a: dirs[0],
                b: dirs[1],
                c: dirs[2],
                d: dirs[3],
            },
            Quantity::BellMermin { .. } => Quantity::BellMermin {
                a: dirs[0],
                b: dirs[1],
                c: dirs[2],
            },
        })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Quantity::Correlation { .. } => "correlation",
            Quantity::Chsh { .. } => "chsh",
            Quantity::BellMermin { .. } => "mermin",
        }
    }

    pub fn evaluate(&self, correlator: &Correlator) -> Result<f64> {
        match self {
            Quantity::Correlation { a, b } => correlator.correlation(a, b),
            Quantity::Chsh { a, b, c, d } => {
                chsh_value(|u, v| correlator.correlation(u, v), a, b, c, d)
            }
            Quantity::BellMermin { a, b, c } => {
                if correlator.spin != Spin::One {
                    return Err(Error::SpinOneRequired("the Bell-Mermin inequality".into()));
                }
                bell_mermin_value(|u, v| correlator.correlation(u, v), a, b, c)
            }
        }
    }
}
