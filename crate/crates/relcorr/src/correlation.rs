//! Spin-spin correlation functions, both as a brute-force trace over an
//! explicit pair state and as closed-form expressions in the momenta.
//!
//! The correlation of observables A (on the k leg) and B (on the p leg) in
//! a state psi is
//!
//! ```text
//! C = tr(psi^dag A psi B^T) / (s^2 tr(psi^dag psi))
//! ```
//!
//! normalized so that perfect anticorrelation of spin components along a
//! common axis gives -1 for spin 1/2. Closed forms exist for every
//! spin/operator pairing except the Newton-Wigner spin-1 case away from
//! the center-of-mass frame, which only the trace backend covers.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kinematics::{
    cm_momenta, common_mass, momenta_from_x, random_direction, Direction, Momentum, Spin, XParam,
};
use crate::observables::{czachor_matrix, nw_spin_matrix, Observable, SpinOperator};
use crate::states::{spin_half_pair_state, spin_one_pair_state, PairState};

/// How a correlation value is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    ClosedForm,
    Oracle,
}

/// The two-parameter momentum families the correlations are evaluated on.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MomentumFamily {
    /// k = m(sqrt(4x+1), sqrt(x), 0, -sqrt(3x)) and p with the x-component
    /// negated: a center-of-mass pair boosted along -z.
    Boosted,
    /// Back-to-back pair along `axis` in the center-of-mass frame.
    CenterOfMass { axis: Direction },
}

/// A momentum family pinned to a kinematic point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentumConfig {
    pub family: MomentumFamily,
    pub x: f64,
    pub mass: f64,
}

impl MomentumConfig {
    pub fn momenta(&self) -> Result<(Momentum, Momentum)> {
        match self.family {
            MomentumFamily::Boosted => momenta_from_x(self.x, self.mass),
            MomentumFamily::CenterOfMass { axis } => cm_momenta(self.x, self.mass, &axis),
        }
    }
}

/// Whether a closed form covers the given combination.
pub fn closed_form_available(spin: Spin, operator: SpinOperator, family: &MomentumFamily) -> bool {
    match (spin, operator) {
        (Spin::Half, _) | (Spin::One, SpinOperator::Czachor) => true,
        (Spin::One, SpinOperator::NewtonWigner) => {
            matches!(family, MomentumFamily::CenterOfMass { .. })
        }
    }
}

/// Brute-force correlation: builds the trace above from an explicit state
/// and observable matrices. Observables carrying a momentum must have been
/// built at the leg they act on.
pub fn correlation_oracle(state: &PairState, alice: &Observable, bob: &Observable) -> Result<f64> {
    let dim = state.spin.dim();
    for obs in [alice, bob] {
        if obs.matrix.nrows() != dim || obs.matrix.ncols() != dim {
            return Err(Error::DimensionMismatch {
                observable: obs.matrix.nrows(),
                state: dim,
            });
        }
    }
    check_leg(alice, &state.k)?;
    check_leg(bob, &state.p)?;

    let num =
        (state.coeffs.adjoint() * &alice.matrix * &state.coeffs * bob.matrix.transpose()).trace();
    let s = state.spin.value();
    let den = s * s * state.norm_sq();
    assert!(
        (num.im / den).abs() <= 1e-12,
        "correlation numerator acquired an imaginary part: {num}"
    );
    Ok(num.re / den)
}

fn check_leg(obs: &Observable, leg: &Momentum) -> Result<()> {
    let Some(built_at) = obs.momentum else {
        return Ok(());
    };
    let d = built_at.four_vector() - leg.four_vector();
    let tol = 1e-9 * (1.0 + leg.energy().abs());
    if d.t.abs() > tol || d.x.abs() > tol || d.y.abs() > tol || d.z.abs() > tol {
        return Err(Error::MomentumMismatch);
    }
    Ok(())
}

/// Closed-form Newton-Wigner correlation for spin 1/2 at general momenta:
///
/// ```text
/// C = -a.b + (k x p) . [ a x b + ((a.k)(b x p) - (b.p)(a x k)) / ((k0+m)(p0+m)) ]
///           / (m^2 + k.p)
/// ```
pub fn corr_nw_half(k: &Momentum, p: &Momentum, a: &Direction, b: &Direction) -> Result<f64> {
    let m = common_mass(k, p)?;
    let (kv, pv) = (k.spatial(), p.spatial());
    let (av, bv) = (a.vector(), b.vector());
    let kp = k.four_vector().minkowski_dot(&p.four_vector());
    let inner = av.cross(&bv)
        + (av.dot(&kv) * bv.cross(&pv) - bv.dot(&pv) * av.cross(&kv))
            / ((k.energy() + m) * (p.energy() + m));
    Ok(-av.dot(&bv) + kv.cross(&pv).dot(&inner) / (m * m + kp))
}

/// Closed-form Czachor correlation for spin 1/2 at general momenta:
///
/// ```text
/// C = m^2 / sqrt((m^2+(a.k)^2)(m^2+(b.p)^2))
///     * [ -a.b + (a.k)(b.p)/m^2 - (a.(k+p))(b.(k+p)) / (m^2 + k.p) ]
/// ```
pub fn corr_cz_half(k: &Momentum, p: &Momentum, a: &Direction, b: &Direction) -> Result<f64> {
    let m = common_mass(k, p)?;
    let (kv, pv) = (k.spatial(), p.spatial());
    let (av, bv) = (a.vector(), b.vector());
    let (ak, bp) = (av.dot(&kv), bv.dot(&pv));
    let kp = k.four_vector().minkowski_dot(&p.four_vector());
    let m2 = m * m;
    let pref = m2 / ((m2 + ak * ak).sqrt() * (m2 + bp * bp).sqrt());
    let q = kv + pv;
    Ok(pref * (-av.dot(&bv) + ak * bp / m2 - av.dot(&q) * bv.dot(&q) / (m2 + kp)))
}

/// Closed-form Newton-Wigner correlation for spin 1 in the center-of-mass
/// frame with pair axis n:
///
/// ```text
/// C = 2 [ -(1+2x) a.b + 2x (a.n)(b.n) ] / (2 + (1+2x)^2)
/// ```
pub fn corr_nw_one_cm(x: f64, axis: &Direction, a: &Direction, b: &Direction) -> Result<f64> {
    let x = XParam::new(x)?.get();
    let w = 1.0 + 2.0 * x;
    Ok(2.0 / (2.0 + w * w) * (-w * a.dot(b) + 2.0 * x * a.dot(axis) * b.dot(axis)))
}

/// Closed-form Czachor correlation for spin 1 at general momenta:
///
/// ```text
/// C = 2 [ -(a.b) k.p - (a.p)(b.k) ]
///     / [ (2 + (k.p)^2/m^4) sqrt(m^2+(a.k)^2) sqrt(m^2+(b.p)^2) ]
/// ```
pub fn corr_cz_one(k: &Momentum, p: &Momentum, a: &Direction, b: &Direction) -> Result<f64> {
    let m = common_mass(k, p)?;
    let (kv, pv) = (k.spatial(), p.spatial());
    let (av, bv) = (a.vector(), b.vector());
    let kp = k.four_vector().minkowski_dot(&p.four_vector());
    let m2 = m * m;
    let num = 2.0 * (-av.dot(&bv) * kp - av.dot(&pv) * bv.dot(&kv));
    let den = (2.0 + kp * kp / (m2 * m2))
        * (m2 + av.dot(&kv).powi(2)).sqrt()
        * (m2 + bv.dot(&pv).powi(2)).sqrt();
    Ok(num / den)
}

/// [`corr_cz_one`] specialized to the center-of-mass frame with pair
/// axis n:
///
/// ```text
/// C = 2 [ -(1+2x) a.b + x (a.n)(b.n) ]
///     / [ (2 + (1+2x)^2) sqrt(1 + x (a.n)^2) sqrt(1 + x (b.n)^2) ]
/// ```
pub fn corr_cz_one_cm(x: f64, axis: &Direction, a: &Direction, b: &Direction) -> Result<f64> {
    let x = XParam::new(x)?.get();
    let w = 1.0 + 2.0 * x;
    let (an, bn) = (a.dot(axis), b.dot(axis));
    let num = 2.0 * (-a.dot(b) * w + x * an * bn);
    let den = (2.0 + w * w) * (1.0 + an * an * x).sqrt() * (1.0 + bn * bn * x).sqrt();
    Ok(num / den)
}

/// Correlation evaluator binding spin, operator, backend, and kinematics.
#[derive(Clone, Copy, Debug)]
pub struct Correlator {
    pub spin: Spin,
    pub operator: SpinOperator,
    pub backend: Backend,
    pub config: MomentumConfig,
}

impl Correlator {
    pub fn new(
        spin: Spin,
        operator: SpinOperator,
        backend: Backend,
        config: MomentumConfig,
    ) -> Self {
        Self {
            spin,
            operator,
            backend,
            config,
        }
    }

    /// Uses the closed form when one covers the combination, the trace
    /// backend otherwise.
    pub fn with_best_backend(spin: Spin, operator: SpinOperator, config: MomentumConfig) -> Self {
        let backend = if closed_form_available(spin, operator, &config.family) {
            Backend::ClosedForm
        } else {
            Backend::Oracle
        };
        Self::new(spin, operator, backend, config)
    }

    pub fn correlation(&self, a: &Direction, b: &Direction) -> Result<f64> {
        match self.backend {
            Backend::Oracle => self.oracle_correlation(a, b),
            Backend::ClosedForm => self.closed_correlation(a, b),
        }
    }

    fn oracle_correlation(&self, a: &Direction, b: &Direction) -> Result<f64> {
        let (k, p) = self.config.momenta()?;
        let state = match self.spin {
            Spin::Half => spin_half_pair_state(&k, &p)?,
            Spin::One => spin_one_pair_state(&k, &p)?,
        };
        let (alice, bob) = match self.operator {
            SpinOperator::NewtonWigner => {
                (nw_spin_matrix(a, self.spin), nw_spin_matrix(b, self.spin))
            }
            SpinOperator::Czachor => (
                czachor_matrix(a, &k, self.spin),
                czachor_matrix(b, &p, self.spin),
            ),
        };
        correlation_oracle(&state, &alice, &bob)
    }

    fn closed_correlation(&self, a: &Direction, b: &Direction) -> Result<f64> {
        let x = self.config.x;
        match (self.spin, self.operator, self.config.family) {
            (Spin::Half, SpinOperator::NewtonWigner, _) => {
                let (k, p) = self.config.momenta()?;
                corr_nw_half(&k, &p, a, b)
            }
            (Spin::Half, SpinOperator::Czachor, _) => {
                let (k, p) = self.config.momenta()?;
                corr_cz_half(&k, &p, a, b)
            }
            (Spin::One, SpinOperator::Czachor, MomentumFamily::CenterOfMass { axis }) => {
                corr_cz_one_cm(x, &axis, a, b)
            }
            (Spin::One, SpinOperator::Czachor, MomentumFamily::Boosted) => {
                let (k, p) = self.config.momenta()?;
                corr_cz_one(&k, &p, a, b)
            }
            (Spin::One, SpinOperator::NewtonWigner, MomentumFamily::CenterOfMass { axis }) => {
                corr_nw_one_cm(x, &axis, a, b)
            }
            (Spin::One, SpinOperator::NewtonWigner, MomentumFamily::Boosted) => {
                Err(Error::ClosedFormUnavailable(
                    "the spin-one Newton-Wigner correlation outside the center-of-mass frame"
                        .into(),
                ))
            }
        }
    }
}

/// One compared configuration in an equivalence check.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceCase {
    pub closed_form: &'static str,
    pub x: f64,
    pub mass: f64,
    pub a: [f64; 3],
    pub b: [f64; 3],
    pub axis: Option<[f64; 3]>,
    pub discrepancy: f64,
}

/// Outcome of [`verify_equivalence`].
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub samples: usize,
    pub tolerance: f64,
    pub max_discrepancy: f64,
    pub worst: Option<EquivalenceCase>,
    pub passed: bool,
}

/// Draws seeded random configurations and compares every closed form
/// against the trace backend on its applicable momentum family. Passes iff
/// the largest |closed - oracle| stays below 1e-10.
pub fn verify_equivalence(
    samples: usize,
    x_range: (f64, f64),
    seed: u64,
) -> Result<EquivalenceReport> {
    if samples == 0 {
        return Err(Error::InvalidRange("sample count must be >= 1".into()));
    }
    let (lo, hi) = x_range;
    if !lo.is_finite() || !hi.is_finite() || lo < 0.0 || hi < lo {
        return Err(Error::InvalidRange(format!(
            "x range [{lo}, {hi}] must satisfy 0 <= lo <= hi"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = EquivalenceReport {
        samples,
        tolerance: 1e-10,
        max_discrepancy: 0.0,
        worst: None,
        passed: true,
    };

    for _ in 0..samples {
        let x = if hi > lo {
            rng.random_range(lo..hi)
        } else {
            lo
        };
        let a = random_direction(&mut rng);
        let b = random_direction(&mut rng);
        let n = random_direction(&mut rng);
        let mass = 1.0;
        let boosted = MomentumConfig {
            family: MomentumFamily::Boosted,
            x,
            mass,
        };
        let cm = MomentumConfig {
            family: MomentumFamily::CenterOfMass { axis: n },
            x,
            mass,
        };

        let cases: [(&'static str, Spin, SpinOperator, &MomentumConfig); 5] = [
            ("nw-half", Spin::Half, SpinOperator::NewtonWigner, &boosted),
            ("cz-half", Spin::Half, SpinOperator::Czachor, &boosted),
            ("cz-one", Spin::One, SpinOperator::Czachor, &boosted),
            ("nw-one-cm", Spin::One, SpinOperator::NewtonWigner, &cm),
            ("cz-one-cm", Spin::One, SpinOperator::Czachor, &cm),
        ];
        for (label, spin, operator, config) in cases {
            let closed = Correlator::new(spin, operator, Backend::ClosedForm, *config)
                .correlation(&a, &b)?;
            let oracle =
                Correlator::new(spin, operator, Backend::Oracle, *config).correlation(&a, &b)?;
            let discrepancy = (closed - oracle).abs();
            if discrepancy > report.max_discrepancy {
                report.max_discrepancy = discrepancy;
                report.worst = Some(EquivalenceCase {
                    closed_form: label,
                    x,
                    mass,
                    a: a.components(),
                    b: b.components(),
                    axis: matches!(config.family, MomentumFamily::CenterOfMass { .. })
                        .then(|| n.components()),
                    discrepancy,
                });
            }
        }
    }
    report.passed = report.max_discrepancy < report.tolerance;
    Ok(report)
}
