//! Kinematic primitives: Minkowski four-vectors, on-shell momenta, the
//! standard rotation-free boost, and spin matrices in the spherical basis.
//!
//! Conventions: metric signature (+, -, -, -), natural units with c = 1.
//! Two-particle configurations are parametrized by x >= 0, related to the
//! center-of-mass speed of either particle by (v/c)^2 = x/(x+1); each
//! particle has energy m*sqrt(x+1) in the center-of-mass frame.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, Matrix4, Vector3};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Unit-norm tolerance for directions supplied as exact data.
pub const UNIT_TOL: f64 = 1e-12;
/// Unit-norm tolerance for directions parsed from user input; vectors within
/// this window are rescaled to exact unit norm.
pub const UNIT_PARSE_TOL: f64 = 1e-6;

/// Real four-vector in (t, x, y, z) component order.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct FourVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FourVector {
    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self { t, x, y, z }
    }

    pub fn from_parts(t: f64, spatial: Vector3<f64>) -> Self {
        Self::new(t, spatial.x, spatial.y, spatial.z)
    }

    pub fn spatial(&self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }

    /// Minkowski product u.v = u^0 v^0 - u.v (signature +,-,-,-).
    pub fn minkowski_dot(&self, other: &FourVector) -> f64 {
        self.t * other.t - self.x * other.x - self.y * other.y - self.z * other.z
    }

    /// Minkowski square u.u.
    pub fn minkowski_norm_sq(&self) -> f64 {
        self.minkowski_dot(self)
    }

    /// Applies a Lorentz matrix acting on (t, x, y, z) columns.
    pub fn boosted(&self, l: &Matrix4<f64>) -> FourVector {
        let col = nalgebra::Vector4::new(self.t, self.x, self.y, self.z);
        let out = l * col;
        FourVector::new(out[0], out[1], out[2], out[3])
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, rhs: FourVector) -> FourVector {
        FourVector::new(
            self.t + rhs.t,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
        )
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, rhs: FourVector) -> FourVector {
        FourVector::new(
            self.t - rhs.t,
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
        )
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        FourVector::new(-self.t, -self.x, -self.y, -self.z)
    }
}

impl Mul<FourVector> for f64 {
    type Output = FourVector;
    fn mul(self, rhs: FourVector) -> FourVector {
        FourVector::new(self * rhs.t, self * rhs.x, self * rhs.y, self * rhs.z)
    }
}

/// Minkowski product of two real four-vectors.
pub fn minkowski_dot(u: &FourVector, v: &FourVector) -> f64 {
    u.minkowski_dot(v)
}

/// Four-vector with complex components, as needed for polarization vectors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CFourVector {
    pub t: Complex64,
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
}

impl CFourVector {
    pub fn new(t: Complex64, x: Complex64, y: Complex64, z: Complex64) -> Self {
        Self { t, x, y, z }
    }

    pub fn from_real(v: &FourVector) -> Self {
        Self::new(v.t.into(), v.x.into(), v.y.into(), v.z.into())
    }

    /// Bilinear Minkowski product u.v without conjugation.
    pub fn minkowski_dot(&self, other: &CFourVector) -> Complex64 {
        self.t * other.t - self.x * other.x - self.y * other.y - self.z * other.z
    }

    /// Sesquilinear Minkowski product conj(u).v.
    pub fn minkowski_dot_conj(&self, other: &CFourVector) -> Complex64 {
        self.t.conj() * other.t
            - self.x.conj() * other.x
            - self.y.conj() * other.y
            - self.z.conj() * other.z
    }

    /// Applies a real Lorentz matrix acting on (t, x, y, z) columns.
    pub fn boosted(&self, l: &Matrix4<f64>) -> CFourVector {
        let comps = [self.t, self.x, self.y, self.z];
        let mut out = [Complex64::ZERO; 4];
        for (i, slot) in out.iter_mut().enumerate() {
            for (j, c) in comps.iter().enumerate() {
                *slot += l[(i, j)] * c;
            }
        }
        CFourVector::new(out[0], out[1], out[2], out[3])
    }
}

/// Unit vector in R^3 fixing a spin measurement axis or a momentum axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction(Vector3<f64>);

impl Direction {
    /// Accepts only vectors already unit-normalized to within `UNIT_TOL`.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::with_tolerance(x, y, z, UNIT_TOL)
    }

    /// Accepts vectors within `UNIT_PARSE_TOL` of unit norm and rescales
    /// them exactly; rejects anything farther away.
    pub fn normalized(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::with_tolerance(x, y, z, UNIT_PARSE_TOL)
    }

    fn with_tolerance(x: f64, y: f64, z: f64, tol: f64) -> Result<Self> {
        let v = Vector3::new(x, y, z);
        let norm = v.norm();
        if !norm.is_finite() || (norm - 1.0).abs() > tol {
            return Err(Error::NonUnitDirection(x, y, z, norm));
        }
        Ok(Self(v / norm))
    }

    /// Unit vector from polar angle theta (from +z) and azimuth phi.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Self(Vector3::new(st * cp, st * sp, ct))
    }

    pub fn vector(&self) -> Vector3<f64> {
        self.0
    }

    pub fn components(&self) -> [f64; 3] {
        [self.0.x, self.0.y, self.0.z]
    }

    pub fn x(&self) -> f64 {
        self.0.x
    }

    pub fn y(&self) -> f64 {
        self.0.y
    }

    pub fn z(&self) -> f64 {
        self.0.z
    }

    pub fn dot(&self, other: &Direction) -> f64 {
        self.0.dot(&other.0)
    }
}

/// Kinematic parameter x >= 0 of a two-particle configuration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XParam(f64);

impl XParam {
    pub fn new(x: f64) -> Result<Self> {
        if !x.is_finite() || x < 0.0 {
            return Err(Error::InvalidX(x));
        }
        Ok(Self(x))
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// Squared center-of-mass speed (v/c)^2 = x/(x+1).
    pub fn beta_squared(self) -> f64 {
        self.0 / (self.0 + 1.0)
    }

    /// Invariant mass of the pair, sqrt((k+p).(k+p)) = 2m*sqrt(x+1).
    pub fn pair_invariant_mass(self, mass: f64) -> f64 {
        2.0 * mass * (self.0 + 1.0).sqrt()
    }
}

fn check_mass(mass: f64) -> Result<()> {
    if !mass.is_finite() || mass <= 0.0 {
        return Err(Error::InvalidMass(mass));
    }
    Ok(())
}

/// Common mass of a pair, rejecting mixed-mass configurations.
pub(crate) fn common_mass(k: &Momentum, p: &Momentum) -> Result<f64> {
    let (mk, mp) = (k.mass(), p.mass());
    if (mk - mp).abs() > 1e-12 * mk.max(mp) {
        return Err(Error::MassMismatch(mk, mp));
    }
    Ok(mk)
}

/// Uniformly distributed unit vector.
pub fn random_direction<R: rand::Rng + ?Sized>(rng: &mut R) -> Direction {
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    Direction::from_angles(z.acos(), phi)
}

/// On-shell four-momentum of a massive particle with positive energy.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Momentum {
    vec: FourVector,
    mass: f64,
}

impl Momentum {
    /// Validates k.k = m^2 (to within rounding at the energy scale of k)
    /// and k^0 >= m.
    pub fn new(vec: FourVector, mass: f64) -> Result<Self> {
        check_mass(mass)?;
        let m_sq = mass * mass;
        let scale = m_sq + vec.t * vec.t + vec.spatial().norm_squared();
        let found = vec.minkowski_norm_sq();
        if (found - m_sq).abs() > 1e-12 * scale {
            return Err(Error::OffShell {
                found,
                expected: m_sq,
            });
        }
        if vec.t < mass * (1.0 - 1e-12) {
            return Err(Error::NonPositiveEnergy(vec.t));
        }
        Ok(Self { vec, mass })
    }

    pub fn at_rest(mass: f64) -> Result<Self> {
        Self::new(FourVector::new(mass, 0.0, 0.0, 0.0), mass)
    }

    pub fn four_vector(&self) -> FourVector {
        self.vec
    }

    pub fn energy(&self) -> f64 {
        self.vec.t
    }

    pub fn spatial(&self) -> Vector3<f64> {
        self.vec.spatial()
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }
}

/// The fixed one-parameter pair family
///
/// ```text
/// k = m (sqrt(4x+1),  sqrt(x), 0, -sqrt(3x))
/// p = m (sqrt(4x+1), -sqrt(x), 0, -sqrt(3x))
/// ```
///
/// i.e. the back-to-back center-of-mass pair along +/-x, boosted along -z
/// with Lorentz factor sqrt((4x+1)/(x+1)). Invariants: k.p = m^2 (2x+1)
/// and (k+p)^2 = 4 m^2 (x+1).
pub fn momenta_from_x(x: f64, mass: f64) -> Result<(Momentum, Momentum)> {
    let x = XParam::new(x)?.get();
    check_mass(mass)?;
    let e = mass * (4.0 * x + 1.0).sqrt();
    let kx = mass * x.sqrt();
    let kz = -mass * (3.0 * x).sqrt();
    let k = Momentum::new(FourVector::new(e, kx, 0.0, kz), mass)?;
    let p = Momentum::new(FourVector::new(e, -kx, 0.0, kz), mass)?;
    Ok((k, p))
}

/// Back-to-back center-of-mass pair along the axis n:
/// k = (m*sqrt(x+1), m*sqrt(x) n), p = (k^0, -k).
pub fn cm_momenta(x: f64, mass: f64, axis: &Direction) -> Result<(Momentum, Momentum)> {
    let x = XParam::new(x)?.get();
    check_mass(mass)?;
    let e = mass * (x + 1.0).sqrt();
    let spatial = mass * x.sqrt() * axis.vector();
    let k = Momentum::new(FourVector::from_parts(e, spatial), mass)?;
    let p = Momentum::new(FourVector::from_parts(e, -spatial), mass)?;
    Ok((k, p))
}

/// Rotation-free boost L_k taking the rest vector (m, 0, 0, 0) to k:
///
/// ```text
/// L^0_0 = k^0 / m          L^0_j = k_j / m
/// L^i_0 = k_i / m          L^i_j = delta_ij + k_i k_j / (m (k^0 + m))
/// ```
pub fn standard_boost(k: &Momentum) -> Matrix4<f64> {
    let m = k.mass();
    let e = k.energy();
    let sp = k.spatial();
    let mut l = Matrix4::identity();
    l[(0, 0)] = e / m;
    for i in 0..3 {
        l[(0, i + 1)] = sp[i] / m;
        l[(i + 1, 0)] = sp[i] / m;
        for j in 0..3 {
            l[(i + 1, j + 1)] = f64::from(i == j) + sp[i] * sp[j] / (m * (e + m));
        }
    }
    l
}

/// Spin quantum number of one particle of the pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Spin {
    Half,
    One,
}

impl Spin {
    pub fn value(self) -> f64 {
        match self {
            Spin::Half => 0.5,
            Spin::One => 1.0,
        }
    }

    /// Dimension of the one-particle spin space, 2s + 1.
    pub fn dim(self) -> usize {
        match self {
            Spin::Half => 2,
            Spin::One => 3,
        }
    }
}

/// Spin matrices (S_1, S_2, S_3) in the spherical basis ordered
/// (+s, ..., -s), satisfying [S_1, S_2] = i S_3 and cyclic.
pub fn spin_matrices(spin: Spin) -> [DMatrix<Complex64>; 3] {
    let one = Complex64::ONE;
    let i = Complex64::I;
    match spin {
        Spin::Half => {
            let sx = DMatrix::from_row_slice(2, 2, &[0.0.into(), 0.5 * one, 0.5 * one, 0.0.into()]);
            let sy = DMatrix::from_row_slice(2, 2, &[0.0.into(), -0.5 * i, 0.5 * i, 0.0.into()]);
            let sz =
                DMatrix::from_row_slice(2, 2, &[0.5 * one, 0.0.into(), 0.0.into(), -0.5 * one]);
            [sx, sy, sz]
        }
        Spin::One => {
            let r = Complex64::from(std::f64::consts::FRAC_1_SQRT_2);
            let z = Complex64::ZERO;
            let sx = DMatrix::from_row_slice(3, 3, &[z, r, z, r, z, r, z, r, z]);
            let sy = DMatrix::from_row_slice(3, 3, &[z, -i * r, z, i * r, z, -i * r, z, i * r, z]);
            let sz = DMatrix::from_row_slice(3, 3, &[one, z, z, z, z, z, z, z, -one]);
            [sx, sy, sz]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn minkowski_dot_signature() {
        let t = FourVector::new(1.0, 0.0, 0.0, 0.0);
        let x = FourVector::new(0.0, 1.0, 0.0, 0.0);
        let light = FourVector::new(1.0, 1.0, 0.0, 0.0);
        assert_eq!(t.minkowski_dot(&t), 1.0);
        assert_eq!(x.minkowski_dot(&x), -1.0);
        assert_eq!(light.minkowski_norm_sq(), 0.0);
        assert_eq!(t.minkowski_dot(&x), 0.0);
    }

    #[test]
    fn pair_family_at_x_one() {
        let (k, p) = momenta_from_x(1.0, 1.0).unwrap();
        let kv = k.four_vector();
        assert_close(kv.t, 5.0_f64.sqrt(), 1e-15);
        assert_close(kv.x, 1.0, 1e-15);
        assert_close(kv.y, 0.0, 0.0);
        assert_close(kv.z, -3.0_f64.sqrt(), 1e-15);
        assert_close(p.four_vector().x, -1.0, 1e-15);
        assert_close(kv.minkowski_dot(&p.four_vector()), 3.0, 1e-12);
        assert_close((kv + p.four_vector()).minkowski_norm_sq(), 8.0, 1e-12);
    }

    #[test]
    fn pair_family_rest_limit() {
        let (k, p) = momenta_from_x(0.0, 2.5).unwrap();
        assert_eq!(k.four_vector(), FourVector::new(2.5, 0.0, 0.0, 0.0));
        assert_eq!(k.four_vector(), p.four_vector());
    }

    #[test]
    fn pair_family_invariants_scale_with_mass() {
        for &(x, m) in &[(0.3, 1.0), (2.0, 0.5), (7.0, 3.0), (1e6, 1.0)] {
            let (k, p) = momenta_from_x(x, m).unwrap();
            let kp = k.four_vector().minkowski_dot(&p.four_vector());
            assert_close(kp / (m * m), 2.0 * x + 1.0, 1e-9 * (1.0 + x));
        }
    }

    #[test]
    fn pair_family_rejects_bad_input() {
        assert!(momenta_from_x(-0.1, 1.0).is_err());
        assert!(momenta_from_x(f64::NAN, 1.0).is_err());
        assert!(momenta_from_x(1.0, 0.0).is_err());
        assert!(momenta_from_x(1.0, -2.0).is_err());
    }

    #[test]
    fn cm_pair_along_z() {
        let n = Direction::new(0.0, 0.0, 1.0).unwrap();
        let (k, p) = cm_momenta(3.0, 1.0, &n).unwrap();
        assert_eq!(
            k.four_vector(),
            FourVector::new(2.0, 0.0, 0.0, 3.0_f64.sqrt())
        );
        assert_eq!(
            p.four_vector(),
            FourVector::new(2.0, 0.0, 0.0, -3.0_f64.sqrt())
        );
        assert_close(k.four_vector().minkowski_dot(&p.four_vector()), 7.0, 1e-12);
    }

    #[test]
    fn momentum_validation() {
        assert!(Momentum::new(FourVector::new(1.0, 0.5, 0.0, 0.0), 1.0).is_err());
        assert!(Momentum::new(FourVector::new(-1.0, 0.0, 0.0, 0.0), 1.0).is_err());
        let sq5 = 5.0_f64.sqrt();
        assert!(Momentum::new(FourVector::new(sq5, 1.0, 0.0, -(3.0_f64.sqrt())), 1.0).is_ok());
    }

    #[test]
    fn moderate_x_momenta_are_on_shell_to_mass_precision() {
        for i in 0..=40 {
            let x = 0.25 * f64::from(i);
            let (k, p) = momenta_from_x(x, 1.0).unwrap();
            for q in [k, p] {
                assert_close(q.four_vector().minkowski_norm_sq(), 1.0, 1e-12);
            }
        }
    }

    #[test]
    fn boost_of_rest_frame_is_identity() {
        let k = Momentum::at_rest(3.0).unwrap();
        assert_eq!(standard_boost(&k), Matrix4::identity());
    }

    #[test]
    fn boost_maps_rest_vector_to_momentum() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let x: f64 = rng.random_range(0.0..20.0);
            let m: f64 = rng.random_range(0.2..4.0);
            let n = Direction::from_angles(
                rng.random_range(0.0..std::f64::consts::PI),
                rng.random_range(0.0..std::f64::consts::TAU),
            );
            let (k, _) = cm_momenta(x, m, &n).unwrap();
            let l = standard_boost(&k);
            let rest = FourVector::new(m, 0.0, 0.0, 0.0);
            let image = rest.boosted(&l);
            let kv = k.four_vector();
            for (a, b) in [
                (image.t, kv.t),
                (image.x, kv.x),
                (image.y, kv.y),
                (image.z, kv.z),
            ] {
                assert_close(a, b, 1e-12 * (1.0 + kv.t.abs()));
            }
        }
    }

    proptest! {
        #[test]
        fn boost_preserves_minkowski_products(
            x in 0.0..50.0f64,
            m in 0.1..5.0f64,
            theta in 0.0..std::f64::consts::PI,
            phi in 0.0..std::f64::consts::TAU,
            u in proptest::array::uniform4(-3.0..3.0f64),
            v in proptest::array::uniform4(-3.0..3.0f64),
        ) {
            let n = Direction::from_angles(theta, phi);
            let (k, _) = cm_momenta(x, m, &n).unwrap();
            let l = standard_boost(&k);
            let a = FourVector::new(u[0], u[1], u[2], u[3]);
            let b = FourVector::new(v[0], v[1], v[2], v[3]);
            let before = a.minkowski_dot(&b);
            let after = a.boosted(&l).minkowski_dot(&b.boosted(&l));
            let scale = 1.0 + (1.0 + x) * (a.spatial().norm() + a.t.abs()) * (b.spatial().norm() + b.t.abs());
            prop_assert!((before - after).abs() <= 1e-11 * scale);
        }

        #[test]
        fn angles_give_unit_directions(
            theta in 0.0..std::f64::consts::PI,
            phi in 0.0..std::f64::consts::TAU,
        ) {
            let d = Direction::from_angles(theta, phi);
            prop_assert!((d.vector().norm() - 1.0).abs() <= 1e-14);
        }
    }

    #[test]
    fn direction_tolerances() {
        assert!(Direction::new(1.0, 0.0, 1e-3).is_err());
        assert!(Direction::normalized(1.01, 0.0, 0.0).is_err());
        let d = Direction::normalized(1.0 + 3e-7, 0.0, 0.0).unwrap();
        assert_eq!(d.x(), 1.0);
        let e = Direction::normalized(1.0, 0.0, 1e-3).unwrap();
        assert!((e.vector().norm() - 1.0).abs() <= 1e-15);
        assert!(Direction::new(0.0, 0.0, 0.0).is_err());
        assert!(Direction::normalized(f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn x_param_velocity() {
        assert_eq!(XParam::new(1.0).unwrap().beta_squared(), 0.5);
        assert_eq!(XParam::new(3.0).unwrap().beta_squared(), 0.75);
        assert_eq!(XParam::new(3.0).unwrap().pair_invariant_mass(1.0), 4.0);
        assert!(XParam::new(-1e-9).is_err());
    }

    #[test]
    fn spin_matrix_algebra() {
        for spin in [Spin::Half, Spin::One] {
            let [sx, sy, sz] = spin_matrices(spin);
            let comm = &sx * &sy - &sy * &sx;
            let diff = comm - sz.map(|c| Complex64::I * c);
            assert!(diff.norm() < 1e-14);
            let casimir = &sx * &sx + &sy * &sy + &sz * &sz;
            let s = spin.value();
            let expect = DMatrix::from_diagonal_element(
                spin.dim(),
                spin.dim(),
                Complex64::from(s * (s + 1.0)),
            );
            assert!((casimir - expect).norm() < 1e-14);
        }
    }

    #[test]
    fn spin_one_s3_is_diagonal_plus_zero_minus() {
        let [_, _, sz] = spin_matrices(Spin::One);
        assert_eq!(sz[(0, 0)], Complex64::ONE);
        assert_eq!(sz[(1, 1)], Complex64::ZERO);
        assert_eq!(sz[(2, 2)], -Complex64::ONE);
    }
}
