//! Floating-point scalar abstraction.
//!
//! All numeric code in the crate is written against [`Scalar`], so the same
//! pipeline runs in `f32` or `f64`. Each implementation carries the
//! tolerances appropriate for its precision; the `f64` values are the ones
//! the consistency checks are specified against.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// A real floating-point type usable throughout the crate.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Residual allowed in single-matrix identities (symmetry, unitarity,
    /// permutation rounding, representation homomorphism).
    const MATRIX_TOL: f64;
    /// Residual allowed in identities built from several matrix products
    /// (the modular relation, orthogonality, trace oracles).
    const PRODUCT_TOL: f64;
    /// Maximum distance from an integer before rounding is refused.
    const INTEGER_TOL: f64;
    /// Minimum separation between distinct eigenvalues.
    const EIGEN_GAP: f64;

    /// Lossy conversion from `f64`.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 is representable")
    }

    /// Lossy conversion to `f64`.
    fn f64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }
}

impl Scalar for f64 {
    const MATRIX_TOL: f64 = 1e-9;
    const PRODUCT_TOL: f64 = 1e-8;
    const INTEGER_TOL: f64 = 1e-6;
    const EIGEN_GAP: f64 = 1e-6;
}

impl Scalar for f32 {
    const MATRIX_TOL: f64 = 1e-4;
    const PRODUCT_TOL: f64 = 1e-3;
    const INTEGER_TOL: f64 = 1e-2;
    const EIGEN_GAP: f64 = 1e-3;
}

/// `e^{2 pi i x}` for a real `x`.
pub fn unit_phase<T: Scalar>(x: f64) -> Complex<T> {
    let angle = T::of(2.0 * std::f64::consts::PI * x);
    Complex::new(angle.cos(), angle.sin())
}

/// Converts an integer-valued complex number, checking it is within `tol`
/// of a real integer.
pub fn round_to_integer<T: Scalar>(z: Complex<T>, tol: f64) -> Option<i64> {
    let re = z.re.f64();
    let im = z.im.f64();
    let rounded = re.round();
    if (re - rounded).abs() < tol && im.abs() < tol {
        Some(rounded as i64)
    } else {
        None
    }
}
