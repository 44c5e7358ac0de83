//! Jackson q-integral on `[0, a]`:
//!
//! ```text
//! int_0^a f(t) d_p t = (1 - p) a sum_{k>=0} f(a p^k) p^k,
//! ```
//!
//! for any base `p` in `(0, 1)`, defined whenever the node sum converges.

use crate::config::{EvalConfig, QParam, SeriesValue};
use crate::error::Result;
use crate::scalar::{cre, Real};
use crate::series::{sum_series, Term};
use num_complex::Complex;

/// A Jackson q-integral: base, upper limit and integrand.
///
/// The integrand returns a `Result` so that evaluation errors inside it
/// (poles on the node set, exhausted budgets) propagate out of
/// [`jackson_integrate`].
pub struct QIntegral<'a, T> {
    pub base: QParam<T>,
    pub upper_limit: Complex<T>,
    pub integrand: &'a dyn Fn(Complex<T>) -> Result<Complex<T>>,
}

/// Evaluate the node sum `(1-p) a sum_k f(a p^k) p^k` under the series
/// truncation policy.
pub fn jackson_integrate<T: Real>(
    integral: &QIntegral<'_, T>,
    cfg: &EvalConfig<T>,
) -> Result<SeriesValue<T>> {
    let p = integral.base.get();
    let a = integral.upper_limit;
    let f = integral.integrand;
    let mut node = a; // a p^k
    let mut pk = T::one(); // p^k
    let inner = sum_series(cfg, p, move |_| {
        let term = f(node)? * cre(pk);
        node *= cre(p);
        pk *= p;
        Ok(Term::Value(term))
    })?;
    let scale = cre::<T>(T::one() - p) * a;
    Ok(SeriesValue::new(
        inner.value * scale,
        inner.err_estimate * scale.norm(),
        inner.terms_used,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::EvalConfig;
    use crate::scalar::cone;
    use proptest::prelude::*;

    fn q(v: f64) -> QParam<f64> {
        QParam::new(v).unwrap()
    }

    fn cfg() -> EvalConfig<f64> {
        EvalConfig::default()
    }

    fn integrate(
        base: f64,
        a: f64,
        f: &dyn Fn(Complex<f64>) -> Result<Complex<f64>>,
    ) -> SeriesValue<f64> {
        jackson_integrate(
            &QIntegral {
                base: q(base),
                upper_limit: cre(a),
                integrand: f,
            },
            &cfg(),
        )
        .unwrap()
    }

    #[test]
    fn constant_integrand_gives_geometric_sum() {
        let got = integrate(0.5, 1.0, &|_| Ok(cone()));
        assert!((got.value.re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn monomial_rule() {
        // int_0^1 t^m d_p t = (1-p)/(1-p^{m+1})
        let got = integrate(0.5, 1.0, &|t| Ok(t.powu(3)));
        assert!((got.value.re - 0.5 / (1.0 - 0.5f64.powi(4))).abs() < 1e-14);
        for k in 0..=50u32 {
            for &p in &[0.3, 0.8] {
                let got = integrate(p, 1.0, &|t| Ok(t.powu(k)));
                let want = (1.0 - p) / (1.0 - p.powi(k as i32 + 1));
                assert!(
                    (got.value.re - want).abs() < 1e-13 * want.max(1.0),
                    "k={k} p={p}"
                );
            }
        }
    }

    #[test]
    fn rational_integrand_against_direct_partial_sum() {
        // brute-force oracle: 500 node terms summed directly
        let p = 0.5f64;
        let f = |t: f64| 1.0 / (1.0 - t / 2.0);
        let mut oracle = 0.0;
        for k in 0..500 {
            oracle += f(p.powi(k)) * p.powi(k);
        }
        oracle *= 1.0 - p;
        let got = integrate(p, 1.0, &|t| Ok((cone::<f64>() - t * cre(0.5)).inv()));
        assert!((got.value.re - oracle).abs() < 1e-13);
    }

    #[test]
    fn integrand_errors_propagate() {
        let res = jackson_integrate(
            &QIntegral {
                base: q(0.5),
                upper_limit: cone(),
                integrand: &|_| Err(crate::error::EvalError::domain("boom")),
            },
            &cfg(),
        );
        assert!(res.is_err());
    }

    proptest! {
        #[test]
        fn linearity(alpha in -3.0f64..3.0, beta in -3.0f64..3.0, p in 0.1f64..0.9) {
            // alpha * t^2 + beta * t against the two monomials
            let combined = integrate(p, 1.0, &move |t| {
                Ok(t.powu(2) * cre(alpha) + t * cre(beta))
            });
            let t2 = integrate(p, 1.0, &|t| Ok(t.powu(2)));
            let t1 = integrate(p, 1.0, &|t| Ok(t));
            let want = alpha * t2.value.re + beta * t1.value.re;
            prop_assert!((combined.value.re - want).abs() <= 1e-13 * want.abs().max(1.0));
        }
    }
}
