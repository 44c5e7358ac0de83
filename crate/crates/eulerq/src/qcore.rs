//! q-calculus primitives: Pochhammer symbols, q-binomial coefficients,
//! q-exponentials, the q-binomial theorem and q-difference operators.
//!
//! The q-Pochhammer symbol is the product
//!
//! ```text
//! (x;q)_0 = 1,   (x;q)_k = (1 - x)(1 - xq)...(1 - xq^{k-1}),
//! ```
//!
//! with `(x;q)_inf` its infinite-product limit for `0 < q < 1`. The two
//! q-exponentials are `e_q(z) = 1/(z;q)_inf` and `E_q(z) = (-z;q)_inf`.

use crate::config::{EvalConfig, QParam, SeriesValue};
use crate::error::{EvalError, Result};
use crate::scalar::{cone, cre, zero_factor_tol, Real};
use crate::series::{sum_series, Term};
use num_complex::Complex;

/// Finite q-Pochhammer symbol `(x;q)_k`.
pub fn qpochhammer<T: Real>(x: Complex<T>, q: QParam<T>, k: usize) -> Complex<T> {
    let q = q.get();
    let mut p = cone();
    let mut xqj = x;
    for _ in 0..k {
        p *= cone::<T>() - xqj;
        xqj *= cre(q);
    }
    p
}

/// Finite q-Pochhammer symbol for real arguments.
pub fn qpochhammer_real<T: Real>(x: T, q: QParam<T>, k: usize) -> T {
    let q = q.get();
    let mut p = T::one();
    let mut xqj = x;
    for _ in 0..k {
        p *= T::one() - xqj;
        xqj *= q;
    }
    p
}

/// Infinite q-Pochhammer symbol `(x;q)_inf`.
///
/// Truncates at the first factor index `j >= min_terms` with
/// `|x| q^j < eps/4` and reports the geometric tail bound
/// `|partial| * |x| q^j / (1 - q)`. A factor within `1e-13` of zero makes
/// the product exactly zero, which is what turns `x = q^-n` into hard
/// zeros of `(x;q)_inf`.
pub fn qpochhammer_inf<T: Real>(
    x: Complex<T>,
    q: QParam<T>,
    cfg: &EvalConfig<T>,
) -> Result<SeriesValue<T>> {
    let q = q.get();
    let quarter_eps = cfg.eps * T::lit(0.25);
    let zero_tol = zero_factor_tol::<T>();
    let mut p = cone();
    let mut xqj = x;
    for j in 0..cfg.max_terms {
        let deviation = xqj.norm();
        if j >= cfg.min_terms && deviation < quarter_eps {
            let err = p.norm() * deviation / (T::one() - q);
            return Ok(SeriesValue::new(p, err, j));
        }
        let factor = cone::<T>() - xqj;
        if factor.norm() < zero_tol {
            return Ok(SeriesValue::exact(crate::scalar::czero(), j + 1));
        }
        p *= factor;
        xqj *= cre(q);
    }
    Err(EvalError::MaxTermsExceeded {
        max_terms: cfg.max_terms,
    })
}

/// q-binomial (Gaussian) coefficient `[k choose j]_q = (q;q)_k / ((q;q)_j (q;q)_{k-j})`.
pub fn qbinomial_coeff<T: Real>(k: usize, j: usize, q: QParam<T>) -> Result<T> {
    if j > k {
        return Err(EvalError::domain(format!(
            "q-binomial coefficient needs j <= k, got j={j}, k={k}"
        )));
    }
    // (q;q)_k / (q;q)_j = (q^{j+1};q)_{k-j}, which avoids the tiny/tiny
    // quotient when k is large.
    let qv = q.get();
    let mut num = T::one();
    let mut qpow = qv.powi(j as i32 + 1);
    for _ in 0..(k - j) {
        num *= T::one() - qpow;
        qpow *= qv;
    }
    Ok(num / qpochhammer_real(qv, q, k - j))
}

/// q-exponential `e_q(z) = 1/(z;q)_inf = sum z^n/(q;q)_n` (`|z| < 1` for the
/// series form).
///
/// Dispatches to the series for `|z| < 1` and to the reciprocal product
/// otherwise; `z = q^-n` is a pole.
pub fn e_q<T: Real>(z: Complex<T>, q: QParam<T>, cfg: &EvalConfig<T>) -> Result<SeriesValue<T>> {
    if z.norm() < T::one() {
        e_q_series(z, q, cfg)
    } else {
        e_q_product(z, q, cfg)
    }
}

/// Series form of `e_q`: `sum_n z^n / (q;q)_n`, valid for `|z| < 1`.
pub fn e_q_series<T: Real>(
    z: Complex<T>,
    q: QParam<T>,
    cfg: &EvalConfig<T>,
) -> Result<SeriesValue<T>> {
    let znorm = z.norm();
    if znorm >= T::one() {
        return Err(EvalError::DivergentSeries(format!(
            "e_q series needs |z| < 1, got |z| = {znorm}"
        )));
    }
    let qv = q.get();
    let mut term = cone();
    let mut qpow = qv;
    sum_series(cfg, znorm.max(qv), move |k| {
        if k == 0 {
            return Ok(Term::Value(term));
        }
        term = term * z / cre(T::one() - qpow);
        qpow *= qv;
        Ok(Term::Value(term))
    })
}

/// Product form of `e_q`: the reciprocal of `(z;q)_inf`.
pub fn e_q_product<T: Real>(
    z: Complex<T>,
    q: QParam<T>,
    cfg: &EvalConfig<T>,
) -> Result<SeriesValue<T>> {
    let p = qpochhammer_inf(z, q, cfg)?;
    if p.value.norm() == T::zero() {
        return Err(EvalError::Pole(format!(
            "e_q has a pole at z = q^-n (z = {z})"
        )));
    }
    let value = p.value.inv();
    let err = p.err_estimate / p.value.norm_sqr();
    Ok(SeriesValue::new(value, err, p.terms_used))
}

/// q-exponential `E_q(z) = (-z;q)_inf = sum q^{n(n-1)/2} z^n/(q;q)_n`,
/// entire in `z`.
///
/// The returned value comes from the product form; [`e_q_big_series`] gives
/// the independent series route.
pub fn e_q_big<T: Real>(
    z: Complex<T>,
    q: QParam<T>,
    cfg: &EvalConfig<T>,
) -> Result<SeriesValue<T>> {
    qpochhammer_inf(-z, q, cfg)
}

/// Series form of `E_q`, convergent for every `z`.
pub fn e_q_big_series<T: Real>(
    z: Complex<T>,
    q: QParam<T>,
    cfg: &EvalConfig<T>,
) -> Result<SeriesValue<T>> {
    let qv = q.get();
    let mut term = cone();
    let mut qpow = qv; // q^{k+1} in the denominator update
    let mut qk = T::one(); // q^k in the numerator update
    sum_series(cfg, qv, move |k| {
        if k == 0 {
            return Ok(Term::Value(term));
        }
        term = term * z * cre(qk) / cre(T::one() - qpow);
        qk *= qv;
        qpow *= qv;
        Ok(Term::Value(term))
    })
}

/// Residual of the q-binomial theorem
/// `(ax;q)_inf / (x;q)_inf = sum_j (a;q)_j x^j / (q;q)_j` for `|x| < 1`.
pub fn qbinomial_theorem_residual<T: Real>(
    a: Complex<T>,
    x: Complex<T>,
    q: QParam<T>,
    cfg: &EvalConfig<T>,
) -> Result<T> {
    let xnorm = x.norm();
    if xnorm >= T::one() {
        return Err(EvalError::DivergentSeries(format!(
            "q-binomial theorem needs |x| < 1, got |x| = {xnorm}"
        )));
    }
    let num = qpochhammer_inf(a * x, q, cfg)?;
    let den = qpochhammer_inf(x, q, cfg)?;
    if den.value.norm() == T::zero() {
        return Err(EvalError::Pole("(x;q)_inf vanished".into()));
    }
    let product_side = num.value / den.value;

    let qv = q.get();
    let mut term = cone();
    let mut aq = a; // a q^k
    let mut qpow = qv; // q^{k+1}
    let series_side = sum_series(cfg, xnorm.max(qv), move |k| {
        if k == 0 {
            return Ok(Term::Value(term));
        }
        term = term * (cone::<T>() - aq) * x / cre(T::one() - qpow);
        aq *= cre(qv);
        qpow *= qv;
        Ok(Term::Value(term))
    })?;
    Ok((product_side - series_side.value).norm())
}

/// Residual of the finite q-binomial theorem
/// `(z;q)_k = sum_j [k choose j]_q q^{j(j-1)/2} (-z)^j`.
pub fn finite_qbinomial_residual<T: Real>(z: Complex<T>, q: QParam<T>, k: usize) -> Result<T> {
    let direct = qpochhammer(z, q, k);
    let qv = q.get();
    let mut sum = crate::series::ComplexSum::new();
    for j in 0..=k {
        let coeff = qbinomial_coeff(k, j, q)?;
        let tri = qv.powi((j * (j.saturating_sub(1)) / 2) as i32);
        sum.add((-z).powu(j as u32) * cre(coeff * tri));
    }
    Ok((direct - sum.value()).norm())
}

/// Residual of the telescoping identity
/// `sum_{k>=0} q^k (x;q)_k = (1 - (x;q)_inf) / x`, `x != 0`.
pub fn telescoping_residual<T: Real>(
    x: Complex<T>,
    q: QParam<T>,
    cfg: &EvalConfig<T>,
) -> Result<T> {
    if x.norm() == T::zero() {
        return Err(EvalError::domain("telescoping identity needs x != 0"));
    }
    let qv = q.get();
    let mut poch: Complex<T> = cone();
    let mut qk = T::one();
    let mut xq = x; // x q^k
    let lhs = sum_series(cfg, qv, move |k| {
        if k > 0 {
            poch *= cone::<T>() - xq;
            xq *= cre(qv);
            qk *= qv;
        }
        Ok(Term::Value(poch * cre(qk)))
    })?;
    let inf = qpochhammer_inf(x, q, cfg)?;
    let rhs = (cone::<T>() - inf.value) / x;
    Ok((lhs.value - rhs).norm())
}

/// q-difference operator `D_q f(x) = (f(qx) - f(x)) / (x (q - 1))`.
pub fn d_q<T, F>(f: F, x: Complex<T>, q: QParam<T>) -> Result<Complex<T>>
where
    T: Real,
    F: Fn(Complex<T>) -> Complex<T>,
{
    if x.norm() == T::zero() {
        return Err(EvalError::domain("q-difference operator needs x != 0"));
    }
    let qv = q.get();
    Ok((f(x * cre(qv)) - f(x)) / (x * cre(qv - T::one())))
}

/// q-difference operator with base `1/q`.
pub fn d_q_inv<T, F>(f: F, x: Complex<T>, q: QParam<T>) -> Result<Complex<T>>
where
    T: Real,
    F: Fn(Complex<T>) -> Complex<T>,
{
    if x.norm() == T::zero() {
        return Err(EvalError::domain("q-difference operator needs x != 0"));
    }
    let qinv = q.get().recip();
    Ok((f(x * cre(qinv)) - f(x)) / (x * cre(qinv - T::one())))
}
