//! Two-particle singlet states with sharp momenta.
//!
//! A state is stored as its coefficient matrix psi_{sigma lambda} on the
//! product of the two one-particle spin spaces, rows indexed by the first
//! particle (momentum k) and columns by the second (momentum p), both in
//! the spherical order (+s, ..., -s). Overall normalization and phase are
//! irrelevant to correlations and are not fixed here.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::Result;
use crate::kinematics::{common_mass, standard_boost, CFourVector, Momentum, Spin};

/// Joint spin state of a two-particle system with sharp momenta k and p.
#[derive(Clone, Debug)]
pub struct PairState {
    pub spin: Spin,
    pub k: Momentum,
    pub p: Momentum,
    pub coeffs: DMatrix<Complex64>,
}

impl PairState {
    /// Squared Frobenius norm, sum over |psi_{sigma lambda}|^2.
    pub fn norm_sq(&self) -> f64 {
        self.coeffs.norm_squared()
    }
}

/// Singlet state of two spin-1/2 particles with momenta k and p:
///
/// ```text
/// psi = N [ (1 + (k0 + p0)/m + k.p/m^2) 1 - i ((k x p).sigma)/m^2 ] sigma_2
/// N   = -i / (sqrt(2) sqrt((1 + k0/m)(1 + p0/m)))
/// ```
///
/// At k = p = (m, 0) this is proportional to the antisymmetric singlet.
pub fn spin_half_pair_state(k: &Momentum, p: &Momentum) -> Result<PairState> {
    let m = common_mass(k, p)?;
    let kv = k.four_vector();
    let pv = p.four_vector();
    let k0 = kv.t / m;
    let p0 = pv.t / m;
    let scalar = 1.0 + k0 + p0 + kv.minkowski_dot(&pv) / (m * m);
    let cross = kv.spatial().cross(&pv.spatial()) / (m * m);

    let pauli = crate::kinematics::spin_matrices(Spin::Half).map(|s| s * Complex64::from(2.0));
    let mut mat = DMatrix::from_diagonal_element(2, 2, Complex64::from(scalar));
    for (c, sigma) in cross.iter().zip(&pauli) {
        mat += sigma * Complex64::new(0.0, -c);
    }

    let sigma2 = DMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::ZERO,
            -Complex64::I,
            Complex64::I,
            Complex64::ZERO,
        ],
    );
    let norm = Complex64::new(0.0, -1.0) / (2.0 * (1.0 + k0) * (1.0 + p0)).sqrt();
    Ok(PairState {
        spin: Spin::Half,
        k: *k,
        p: *p,
        coeffs: mat * sigma2 * norm,
    })
}

/// Polarization vectors e_sigma(k) for sigma = +1, 0, -1: the rest-frame
/// triad below boosted by the rotation-free L_k.
///
/// ```text
/// e(+1) = (0, -1, +i, 0)/sqrt(2)    e(0) = (0, 0, 0, 1)
/// e(-1) = (0, +1, +i, 0)/sqrt(2)
/// ```
///
/// This is the complex conjugate of the usual spherical triad; it is the
/// choice that transforms under rotations R as e_sigma(R k) =
/// R sum_l D_{sigma l}(R) e_l(k), with D the spin-1 Wigner matrix, which
/// the scalar pairing in [`spin_one_pair_state`] requires. The vectors
/// satisfy k.e_sigma(k) = 0 and conj(e_sigma).e_lambda = -delta.
pub fn polarization_vectors(k: &Momentum) -> [CFourVector; 3] {
    let r = Complex64::from(std::f64::consts::FRAC_1_SQRT_2);
    let ir = Complex64::new(0.0, std::f64::consts::FRAC_1_SQRT_2);
    let z = Complex64::ZERO;
    let rest = [
        CFourVector::new(z, -r, ir, z),
        CFourVector::new(z, z, z, Complex64::ONE),
        CFourVector::new(z, r, ir, z),
    ];
    let l = standard_boost(k);
    rest.map(|e| e.boosted(&l))
}

/// Singlet state of two spin-1 particles with momenta k and p, the Lorentz
/// scalar pairing of their polarization vectors:
///
/// ```text
/// psi_{sigma lambda} = e_sigma(k) . e_lambda(p)
/// ```
///
/// with the bilinear (unconjugated) Minkowski product. At k = p = (m, 0)
/// the matrix is anti-diagonal (1, -1, 1).
pub fn spin_one_pair_state(k: &Momentum, p: &Momentum) -> Result<PairState> {
    common_mass(k, p)?;
    let ek = polarization_vectors(k);
    let ep = polarization_vectors(p);
    let coeffs = DMatrix::from_fn(3, 3, |i, j| ek[i].minkowski_dot(&ep[j]));
    Ok(PairState {
        spin: Spin::One,
        k: *k,
        p: *p,
        coeffs,
    })
}
