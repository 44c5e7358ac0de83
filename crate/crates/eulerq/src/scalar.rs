//! Scalar abstraction for the whole crate.
//!
//! All series and products are written against [`Real`], so the same code
//! runs in `f32` or `f64`. The shipped defaults (tolerances, zero-detection
//! thresholds) are tuned for `f64`; an `f32` instantiation should supply its
//! own [`crate::EvalConfig`].

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};
use std::fmt::{Debug, Display};

/// Floating-point scalar the library computes with.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
    /// Convert an `f64` literal, panicking only for values outside the
    /// target type's range (never the case for the constants used here).
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Threshold below which a product factor `|1 - x q^j|` counts as an exact
/// zero. `1e-13` in `f64`; widens with machine epsilon for coarser scalars.
pub(crate) fn zero_factor_tol<T: Real>() -> T {
    T::lit(1e-13).max(T::epsilon() * T::lit(450.0))
}

pub(crate) fn c<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

pub(crate) fn cre<T: Real>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}

pub(crate) fn cone<T: Real>() -> Complex<T> {
    Complex::new(T::one(), T::zero())
}

pub(crate) fn czero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

/// Index of `n >= 0` such that `x` is (numerically) `q^-n`, if any.
///
/// Used to route evaluation through exact special-value paths and to
/// detect terminating series. `rel_tol` is a relative tolerance on
/// `|x q^n - 1|`.
pub(crate) fn power_node_index<T: Real>(
    x: Complex<T>,
    q: T,
    rel_tol: T,
    max_n: usize,
) -> Option<usize> {
    let xr = x.re;
    if !(xr > T::zero()) || x.im.abs() > rel_tol * x.norm() {
        return None;
    }
    if xr < T::one() - rel_tol {
        return None;
    }
    let n = (xr.ln() / q.recip().ln()).round();
    if !(n >= T::zero()) {
        return None;
    }
    let n = n.to_usize()?;
    if n > max_n {
        return None;
    }
    let scaled = x * cre(q.powi(n as i32));
    if (scaled - cone()).norm() <= rel_tol {
        Some(n)
    } else {
        None
    }
}
