//! Shared truncation machinery for series.
//!
//! One summation loop implements the crate-wide policy: accumulate with
//! compensated (Neumaier) summation, stop when two consecutive terms fall
//! below `eps * max(|partial|, 1)` after at least `min_terms` terms, and
//! report the geometric tail bound `|last| / (1 - rho)` with `rho` the
//! observed last term ratio capped at the series' asymptotic ratio.

use crate::config::{EvalConfig, SeriesValue};
use crate::error::{EvalError, Result};
use crate::scalar::Real;
use num_complex::Complex;

#[derive(Debug, Clone, Copy)]
struct Neumaier<T> {
    sum: T,
    comp: T,
}

impl<T: Real> Neumaier<T> {
    fn new() -> Self {
        Neumaier {
            sum: T::zero(),
            comp: T::zero(),
        }
    }

    fn add(&mut self, v: T) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> T {
        self.sum + self.comp
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct ComplexSum<T> {
    re: Neumaier<T>,
    im: Neumaier<T>,
}

impl<T: Real> ComplexSum<T> {
    pub(crate) fn new() -> Self {
        ComplexSum {
            re: Neumaier::new(),
            im: Neumaier::new(),
        }
    }

    pub(crate) fn add(&mut self, v: Complex<T>) {
        self.re.add(v.re);
        self.im.add(v.im);
    }

    pub(crate) fn value(&self) -> Complex<T> {
        Complex::new(self.re.value(), self.im.value())
    }
}

/// One term of a series, or the signal that the series terminated exactly.
pub(crate) enum Term<T> {
    Value(Complex<T>),
    Done,
}

/// Sum `term(0) + term(1) + ...` under the crate truncation policy.
///
/// `ratio_cap` must be a bound `< 1` on the eventual term ratio; it caps the
/// observed ratio in the tail estimate.
pub(crate) fn sum_series<T, F>(
    cfg: &EvalConfig<T>,
    ratio_cap: T,
    mut term: F,
) -> Result<SeriesValue<T>>
where
    T: Real,
    F: FnMut(usize) -> Result<Term<T>>,
{
    let cap = ratio_cap.min(T::lit(0.999_999));
    let mut acc = ComplexSum::new();
    let mut prev_mag: Option<T> = None;
    let mut small_streak = 0usize;

    for k in 0..cfg.max_terms {
        match term(k)? {
            Term::Done => {
                return Ok(SeriesValue::exact(acc.value(), k));
            }
            Term::Value(t) => {
                acc.add(t);
                let mag = t.norm();
                let threshold = cfg.eps * acc.value().norm().max(T::one());
                if mag <= threshold {
                    small_streak += 1;
                } else {
                    small_streak = 0;
                }
                if small_streak >= 2 && k + 1 >= cfg.min_terms {
                    let rho = match prev_mag {
                        Some(p) if p > T::zero() => (mag / p).min(cap),
                        _ => cap,
                    };
                    let err = mag / (T::one() - rho);
                    return Ok(SeriesValue::new(acc.value(), err, k + 1));
                }
                prev_mag = Some(mag);
            }
        }
    }
    Err(EvalError::MaxTermsExceeded {
        max_terms: cfg.max_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cre;

    #[test]
    fn geometric_series_sums_to_closed_form() {
        let cfg = EvalConfig::<f64>::default();
        let r = 0.5;
        let got = sum_series(&cfg, r, |k| Ok(Term::Value(cre(r.powi(k as i32))))).unwrap();
        assert!((got.value.re - 2.0).abs() < 1e-13);
        assert!(got.err_estimate >= 0.0);
        assert!(got.terms_used >= cfg.min_terms);
    }

    #[test]
    fn terminating_series_is_exact() {
        let cfg = EvalConfig::<f64>::default();
        let got = sum_series(&cfg, 0.5, |k| {
            if k < 3 {
                Ok(Term::Value(cre(1.0)))
            } else {
                Ok(Term::Done)
            }
        })
        .unwrap();
        assert_eq!(got.value.re, 3.0);
        assert_eq!(got.err_estimate, 0.0);
        assert_eq!(got.terms_used, 3);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let cfg = EvalConfig::new(1e-14f64, 16, 1).unwrap();
        let err = sum_series(&cfg, 0.99, |_| Ok(Term::Value(cre(1.0)))).unwrap_err();
        assert_eq!(err, EvalError::MaxTermsExceeded { max_terms: 16 });
    }
}
