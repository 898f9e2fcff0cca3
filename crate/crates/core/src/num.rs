//! Scalar abstraction for the numeric side of the toolkit.
//!
//! Everything downstream of tokenization (valence sums, affect frequencies,
//! shares, correlations) is generic over [`Real`] so the same code runs in
//! single or double precision. The crate root exports `f64` aliases for the
//! common case.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Converts a finite `f64` constant into this scalar type.
    fn constant(value: f64) -> Self {
        Self::from_f64(value).expect("finite f64 constant converts to Real")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Rounds to `decimals` fractional digits, half away from zero.
pub fn round_to<F: Real>(value: F, decimals: u32) -> F {
    let scale = F::constant(10f64.powi(decimals as i32));
    (value * scale).round() / scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_to_matches_fixed_point() {
        assert_eq!(round_to(62.6407_f64, 3), 62.641);
        assert_eq!(round_to(-6.334_f64, 2), -6.33);
        assert_eq!(round_to(1.279_f64, 2), 1.28);
        assert_eq!(round_to(2.5_f32, 0), 3.0);
        assert_eq!(round_to(-2.5_f64, 0), -3.0);
    }
}
