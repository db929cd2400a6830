//! Spin observables measured on one leg of the pair.
//!
//! Two operator families are implemented. The Newton-Wigner operator acts
//! as a.S on the canonical basis at any momentum; its matrix is
//! momentum-independent.
//!
//! The Czachor operator follows from the Pauli-Lubanski vector
//! W^mu = -(1/2) eps^{mu nu rho sigma} J_{nu rho} P_sigma. On the
//! canonical spin basis at momentum k (the basis reached from rest by the
//! rotation-free boost), its components act as
//!
//! ```text
//! W^0 -> k.S          W -> m S + k (k.S) / (k^0 + m)
//! ```
//!
//! which satisfies W.P = 0 and reduces to (0, m S) at rest. Projecting the
//! spatial part on a measurement axis a and rescaling to unit spectral
//! radius gives
//!
//! ```text
//! S_a(k) = [ m (a.S) + (a.k)(k.S)/(k^0 + m) ] / sqrt(m^2 + (a.k)^2)
//! ```
//!
//! The rescaling works because the defining vector has squared length
//! |m a + (a.k) k/(k^0 + m)|^2 = m^2 + (a.k)^2, so the matrix is a spin
//! component along some unit axis and its spectrum is exactly {-s, ..., s}.

use nalgebra::{DMatrix, Vector3};
use num_complex::Complex64;

use crate::kinematics::{spin_matrices, Direction, Momentum, Spin};

/// The two relativistic spin operator families compared by this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpinOperator {
    NewtonWigner,
    Czachor,
}

impl SpinOperator {
    pub fn label(self) -> &'static str {
        match self {
            SpinOperator::NewtonWigner => "nw",
            SpinOperator::Czachor => "cz",
        }
    }
}

/// A single-particle spin observable: a Hermitian matrix on the
/// (2s+1)-dimensional spin space, tagged with how it was built.
#[derive(Clone, Debug)]
pub struct Observable {
    pub matrix: DMatrix<Complex64>,
    pub operator: SpinOperator,
    pub direction: Direction,
    /// Momentum the matrix was built at; `None` for momentum-independent
    /// operators, which are valid on any leg.
    pub momentum: Option<Momentum>,
    pub spin: Spin,
}

impl Observable {
    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self
            .matrix
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        ev
    }
}

fn component_along(v: &Vector3<f64>, spin: Spin) -> DMatrix<Complex64> {
    let [sx, sy, sz] = spin_matrices(spin);
    sx * Complex64::from(v.x) + sy * Complex64::from(v.y) + sz * Complex64::from(v.z)
}

/// Newton-Wigner spin component a.S.
pub fn nw_spin_matrix(a: &Direction, spin: Spin) -> Observable {
    Observable {
        matrix: component_along(&a.vector(), spin),
        operator: SpinOperator::NewtonWigner,
        direction: *a,
        momentum: None,
        spin,
    }
}

/// Czachor spin component at momentum k,
/// [m (a.S) + (a.k)(k.S)/(k^0 + m)] / sqrt(m^2 + (a.k)^2).
pub fn czachor_matrix(a: &Direction, k: &Momentum, spin: Spin) -> Observable {
    let m = k.mass();
    let sp = k.spatial();
    let ak = a.vector().dot(&sp);
    let axis = (m * a.vector() + (ak / (k.energy() + m)) * sp) / (m * m + ak * ak).sqrt();
    Observable {
        matrix: component_along(&axis, spin),
        operator: SpinOperator::Czachor,
        direction: *a,
        momentum: Some(*k),
        spin,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::cm_momenta;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_direction(rng: &mut ChaCha8Rng) -> Direction {
        Direction::from_angles(
            rng.random_range(0.0..std::f64::consts::PI),
            rng.random_range(0.0..std::f64::consts::TAU),
        )
    }

    #[test]
    fn nw_along_z_is_diagonal() {
        let a = Direction::new(0.0, 0.0, 1.0).unwrap();
        let obs = nw_spin_matrix(&a, Spin::Half);
        let [_, _, sz] = spin_matrices(Spin::Half);
        assert!((obs.matrix.clone() - sz).norm() < 1e-15);
        assert!(obs.momentum.is_none());
    }

    #[test]
    fn nw_along_x_spin_one_is_s1() {
        let a = Direction::new(1.0, 0.0, 0.0).unwrap();
        let obs = nw_spin_matrix(&a, Spin::One);
        let [sx, _, _] = spin_matrices(Spin::One);
        assert!((obs.matrix.clone() - sx).norm() < 1e-15);
    }

    #[test]
    fn czachor_at_rest_reduces_to_nw() {
        let a = Direction::new(0.6, 0.0, 0.8).unwrap();
        let k = Momentum::at_rest(1.3).unwrap();
        for spin in [Spin::Half, Spin::One] {
            let cz = czachor_matrix(&a, &k, spin);
            let nw = nw_spin_matrix(&a, spin);
            assert!((cz.matrix - nw.matrix).norm() < 1e-14);
        }
    }

    #[test]
    fn czachor_orthogonal_axis_reduces_to_nw() {
        let n = Direction::new(0.0, 0.0, 1.0).unwrap();
        let a = Direction::new(1.0, 0.0, 0.0).unwrap();
        let (k, _) = cm_momenta(5.0, 1.0, &n).unwrap();
        for spin in [Spin::Half, Spin::One] {
            let cz = czachor_matrix(&a, &k, spin);
            let nw = nw_spin_matrix(&a, spin);
            assert!((cz.matrix - nw.matrix).norm() < 1e-13);
        }
    }

    #[test]
    fn czachor_parallel_axis_is_helicity() {
        let n = Direction::new(0.0, 0.0, 1.0).unwrap();
        let (k, _) = cm_momenta(5.0, 1.0, &n).unwrap();
        for spin in [Spin::Half, Spin::One] {
            let cz = czachor_matrix(&n, &k, spin);
            let nw = nw_spin_matrix(&n, spin);
            assert!((cz.matrix - nw.matrix).norm() < 1e-13);
        }
    }

    #[test]
    fn czachor_continuous_at_small_momentum() {
        let n = Direction::new(0.0, 0.0, 1.0).unwrap();
        let a = Direction::new(0.6, 0.0, 0.8).unwrap();
        let x = 1e-16;
        let (k, _) = cm_momenta(x, 1.0, &n).unwrap();
        assert!(k.spatial().norm() < 1e-7);
        let cz = czachor_matrix(&a, &k, Spin::One);
        let rest = czachor_matrix(&a, &Momentum::at_rest(1.0).unwrap(), Spin::One);
        assert!((cz.matrix - rest.matrix).norm() < 1e-7);
    }

    #[test]
    fn spectra_are_exact_spin_components() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for spin in [Spin::Half, Spin::One] {
            let expected: Vec<f64> = match spin {
                Spin::Half => vec![-0.5, 0.5],
                Spin::One => vec![-1.0, 0.0, 1.0],
            };
            for _ in 0..250 {
                let a = random_direction(&mut rng);
                let n = random_direction(&mut rng);
                let x: f64 = rng.random_range(0.0..30.0);
                let m: f64 = rng.random_range(0.2..4.0);
                let (k, _) = cm_momenta(x, m, &n).unwrap();
                for obs in [nw_spin_matrix(&a, spin), czachor_matrix(&a, &k, spin)] {
                    let ev = obs.eigenvalues();
                    for (got, want) in ev.iter().zip(&expected) {
                        assert!(
                            (got - want).abs() < 1e-10,
                            "{:?} {:?}: {ev:?}",
                            obs.operator,
                            spin
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn matrices_are_hermitian() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..100 {
            let a = random_direction(&mut rng);
            let n = random_direction(&mut rng);
            let (k, _) = cm_momenta(rng.random_range(0.0..10.0), 1.0, &n).unwrap();
            for spin in [Spin::Half, Spin::One] {
                for obs in [nw_spin_matrix(&a, spin), czachor_matrix(&a, &k, spin)] {
                    let diff = obs.matrix.adjoint() - &obs.matrix;
                    assert!(diff.norm() < 1e-14);
                }
            }
        }
    }
}
