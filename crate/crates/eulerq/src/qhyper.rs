//! Truncated evaluator for basic hypergeometric series `r_phi_s`.
//!
//! ```text
//!                                  (a_1;q)_k ... (a_r;q)_k                 z^k
//! r_phi_s(a_1..a_r; b_1..b_s; q, z) = sum_k ------------------------ [(-1)^k q^(k(k-1)/2)]^(1+s-r) ----
//!                                  (b_1;q)_k ... (b_s;q)_k (q;q)_k
//! ```
//!
//! Terms are built by one-factor updates from the previous term, never by
//! recomputing Pochhammers from scratch. A series with an upper parameter
//! `q^-n` terminates and is summed exactly over `n+1` terms. Zero lower
//! parameters are allowed: `(0;q)_k = 1`.

use crate::config::{EvalConfig, QParam, SeriesValue};
use crate::error::{EvalError, Result};
use crate::qcore::qpochhammer_inf;
use crate::scalar::{cone, cre, power_node_index, zero_factor_tol, Real};
use crate::series::{sum_series, Term};
use num_complex::Complex;

/// Parameter tuple of one `r_phi_s` series.
#[derive(Debug, Clone)]
pub struct PhiSeries<T> {
    pub upper: Vec<Complex<T>>,
    pub lower: Vec<Complex<T>>,
    pub q: QParam<T>,
    pub z: Complex<T>,
}

impl<T: Real> PhiSeries<T> {
    pub fn new(
        upper: Vec<Complex<T>>,
        lower: Vec<Complex<T>>,
        q: QParam<T>,
        z: Complex<T>,
    ) -> Self {
        PhiSeries { upper, lower, q, z }
    }

    /// Smallest `n` with some upper parameter equal to `q^-n`, if any.
    /// Such a parameter makes the series terminate after `n+1` terms.
    fn terminating_index(&self) -> Option<usize> {
        let q = self.q.get();
        let tol = T::lit(1e-12);
        self.upper
            .iter()
            .filter_map(|&a| power_node_index(a, q, tol, 100_000))
            .min()
    }
}

/// Evaluate a basic hypergeometric series under the crate truncation policy.
pub fn phi_eval<T: Real>(s: &PhiSeries<T>, cfg: &EvalConfig<T>) -> Result<SeriesValue<T>> {
    let q = s.q.get();
    let r = s.upper.len();
    let sl = s.lower.len();
    // exponent of the extra factor (-1)^k q^{k(k-1)/2}
    let extra = 1 + sl as i32 - r as i32;
    let terminating = s.terminating_index();
    let znorm = s.z.norm();

    if terminating.is_none() {
        if extra < 0 && znorm > T::zero() {
            return Err(EvalError::DivergentSeries(
                "r > s + 1 series diverges unless it terminates".into(),
            ));
        }
        if extra == 0 && znorm >= T::one() {
            return Err(EvalError::DivergentSeries(format!(
                "nonterminating (s+1)_phi_s series needs |z| < 1, got |z| = {znorm}"
            )));
        }
    }
    if let Some(n) = terminating {
        if n + 1 > cfg.max_terms {
            return Err(EvalError::MaxTermsExceeded {
                max_terms: cfg.max_terms,
            });
        }
    }

    let zero_tol = zero_factor_tol::<T>();
    // ratio cap for the tail bound: |z| for the balanced case, q otherwise
    // (extra factors q^k push the ratio below q eventually)
    let cap = if extra == 0 { znorm.max(q) } else { q };

    let mut term = cone::<T>();
    let mut upper_q: Vec<Complex<T>> = s.upper.clone(); // a_i q^k
    let mut lower_q: Vec<Complex<T>> = s.lower.clone(); // b_j q^k
    let mut qk = T::one(); // q^k
    let mut qk1 = q; // q^{k+1}
    let mut finished = false;

    sum_series(cfg, cap, move |k| {
        if finished {
            return Ok(Term::Done);
        }
        if let Some(n) = terminating {
            if k > n {
                return Ok(Term::Done);
            }
        }
        if k == 0 {
            return Ok(Term::Value(term));
        }
        // ratio from term k-1 to term k
        let mut ratio = s.z;
        for aq in upper_q.iter_mut() {
            let factor = cone::<T>() - *aq;
            if factor.norm() < zero_tol {
                // an upper parameter hit q^-(k-1); series terminates here
                finished = true;
                return Ok(Term::Done);
            }
            ratio *= factor;
            *aq *= cre(q);
        }
        for bq in lower_q.iter_mut() {
            let factor = cone::<T>() - *bq;
            if factor.norm() < zero_tol {
                return Err(EvalError::ZeroDenominator { k });
            }
            ratio /= factor;
            *bq *= cre(q);
        }
        ratio /= cre(T::one() - qk1);
        if extra != 0 {
            ratio *= cre(-qk).powi(extra);
        }
        term *= ratio;
        qk *= q;
        qk1 *= q;
        Ok(Term::Value(term))
    })
}

/// Residual of the q-Gauss sum
/// `2_phi_1(a, b; c; q, c/(ab)) = (c/a;q)_inf (c/b;q)_inf / ((c;q)_inf (c/(ab);q)_inf)`.
pub fn qgauss_residual<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    q: QParam<T>,
    cfg: &EvalConfig<T>,
) -> Result<T> {
    let z = c / (a * b);
    if z.norm() >= T::one() {
        return Err(EvalError::domain(format!(
            "q-Gauss sum needs |c/(ab)| < 1, got {}",
            z.norm()
        )));
    }
    let series = phi_eval(&PhiSeries::new(vec![a, b], vec![c], q, z), cfg)?;
    let p1 = qpochhammer_inf(c / a, q, cfg)?;
    let p2 = qpochhammer_inf(c / b, q, cfg)?;
    let p3 = qpochhammer_inf(c, q, cfg)?;
    let p4 = qpochhammer_inf(z, q, cfg)?;
    let denom = p3.value * p4.value;
    if denom.norm() == T::zero() {
        return Err(EvalError::Pole("q-Gauss product side denominator vanished".into()));
    }
    let product = p1.value * p2.value / denom;
    Ok((series.value - product).norm())
}
