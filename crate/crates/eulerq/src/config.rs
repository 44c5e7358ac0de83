//! Core value types: the base `q`, evaluation budgets, and series results.

use crate::error::{EvalError, Result};
use crate::scalar::Real;
use num_complex::Complex;

/// The base of every q-series in this crate, restricted to `0 < q < 1`.
///
/// Functions with a different natural domain (for example the Borwein
/// q-logarithm with `|q| > 1`) use their own parameter type in
/// [`crate::variants`] so this restriction is never weakened.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QParam<T>(T);

impl<T: Real> QParam<T> {
    pub fn new(q: T) -> Result<Self> {
        if q > T::zero() && q < T::one() {
            Ok(QParam(q))
        } else {
            Err(EvalError::domain(format!("q must lie in (0, 1), got {q}")))
        }
    }

    #[inline]
    pub fn get(self) -> T {
        self.0
    }

    /// `q^n` for signed `n`; negative exponents give the lattice points
    /// `q^-n` the q-logarithm interpolates on.
    #[inline]
    pub fn powi(self, n: i32) -> T {
        self.0.powi(n)
    }
}

/// Tolerance and term budgets governing every truncated evaluation.
///
/// A series stops once two consecutive terms fall below
/// `eps * max(|partial|, 1)` (after at least `min_terms` terms); an infinite
/// product stops once the factor deviation `|x| q^j` drops below `eps / 4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig<T> {
    pub eps: T,
    pub max_terms: usize,
    pub min_terms: usize,
}

impl<T: Real> EvalConfig<T> {
    pub fn new(eps: T, max_terms: usize, min_terms: usize) -> Result<Self> {
        if !(eps > T::zero()) {
            return Err(EvalError::domain("eps must be positive"));
        }
        if min_terms == 0 || min_terms > max_terms {
            return Err(EvalError::domain(
                "min_terms must satisfy 1 <= min_terms <= max_terms",
            ));
        }
        Ok(EvalConfig {
            eps,
            max_terms,
            min_terms,
        })
    }
}

impl<T: Real> Default for EvalConfig<T> {
    fn default() -> Self {
        EvalConfig {
            eps: T::lit(1e-14),
            max_terms: 100_000,
            min_terms: 8,
        }
    }
}

/// A computed value together with a truncation-tail estimate and the number
/// of terms (or product factors) consumed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue<T> {
    pub value: Complex<T>,
    /// Upper estimate of the absolute truncation error under the documented
    /// truncation policy. Zero for terminating sums.
    pub err_estimate: T,
    pub terms_used: usize,
}

impl<T: Real> SeriesValue<T> {
    pub(crate) fn new(value: Complex<T>, err_estimate: T, terms_used: usize) -> Self {
        SeriesValue {
            value,
            err_estimate,
            terms_used: terms_used.max(1),
        }
    }

    pub(crate) fn exact(value: Complex<T>, terms_used: usize) -> Self {
        Self::new(value, T::zero(), terms_used)
    }

    /// Real part; the main-line functions of this crate are real on the
    /// real axis.
    pub fn re(&self) -> T {
        self.value.re
    }
}
