//! Floating point scalar abstraction.
//!
//! Everything numeric in this crate is generic over [`Real`], which is
//! implemented for `f32` and `f64`. The per-type constants carry the
//! tolerances the algorithms stop at, so single precision gets thresholds
//! it can actually reach.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real floating point type usable by the solvers.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Jacobi stops once the off-diagonal Frobenius norm drops below this
    /// fraction of the diagonal norm.
    const EIG_TOLERANCE: f64;
    /// Relative asymmetry accepted by the eigensolver.
    const SYMMETRY_TOLERANCE: f64;
    /// Allowed deviation of a state's squared norm from one.
    const NORM_TOLERANCE: f64;
    /// Bracket width at which the critical-rate bisection stops.
    const BISECTION_WIDTH: f64;
    /// Newton step size at which root polishing stops.
    const NEWTON_TOLERANCE: f64;

    /// Converts an `f64` constant into this type.
    #[inline]
    fn cst(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant representable")
    }

    /// Converts a count into this type.
    #[inline]
    fn from_count(x: u128) -> Self {
        Self::from_u128(x).expect("count representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("finite conversion to f64")
    }
}

impl Real for f64 {
    const EIG_TOLERANCE: f64 = 1e-13;
    const SYMMETRY_TOLERANCE: f64 = 1e-12;
    const NORM_TOLERANCE: f64 = 1e-10;
    const BISECTION_WIDTH: f64 = 1e-12;
    const NEWTON_TOLERANCE: f64 = 1e-14;
}

impl Real for f32 {
    const EIG_TOLERANCE: f64 = 1e-6;
    const SYMMETRY_TOLERANCE: f64 = 1e-5;
    const NORM_TOLERANCE: f64 = 1e-4;
    const BISECTION_WIDTH: f64 = 1e-9;
    const NEWTON_TOLERANCE: f64 = 1e-6;
}
