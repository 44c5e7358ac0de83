//! Numerical q-calculus around Euler's q-analogue of the logarithm.
//!
//! The central object is the entire function
//!
//! ```text
//! S_q(x) = - sum_{k>=1} q^k/(1-q^k) (x;q)_k,        0 < q < 1,
//! ```
//!
//! which interpolates the logarithm: `S_q(q^-n) = n`. Around it the crate
//! provides the q-dilogarithm `Li_2(x;q)`, the q-zeta values `zeta_q(1)` and
//! `zeta_q(2)`, the Lambert-series extension `F_q(x,t)`, basic
//! hypergeometric series, Jackson q-integrals, a handful of q-logarithm
//! variants from the literature, and a registry of numerically checkable
//! identities relating all of the above.
//!
//! Every series and product evaluation returns a [`SeriesValue`] carrying a
//! truncation-tail estimate and the number of terms consumed, governed by an
//! [`EvalConfig`]. The core is generic over the scalar type via the
//! [`Real`] trait; the `*64` aliases fix `f64`, which is what the default
//! tolerances are tuned for.
//!
//! ```
//! use eulerq::{EvalConfig64, QLog64, QParam64};
//!
//! let qlog = QLog64::new(QParam64::new(0.5).unwrap(), EvalConfig64::default());
//! // S_q interpolates the logarithm exactly on the lattice q^-n:
//! let v = qlog.eval(eulerq::Complex64::new(8.0, 0.0)).unwrap();
//! assert!((v.value.re - 3.0).abs() < 1e-12);
//! ```

pub mod config;
pub mod error;
pub mod jackson;
pub mod qcore;
pub mod qdilog;
pub mod qhyper;
pub mod qlambert;
pub mod qlog;
pub mod qzeta;
pub mod registry;
pub mod scalar;
pub mod variants;

mod series;

pub use config::{EvalConfig, QParam, SeriesValue};
pub use error::{EvalError, Result};
pub use scalar::Real;

pub use num_complex::Complex;

/// `f64` complex numbers, the main-line scalar of the crate.
pub type Complex64 = num_complex::Complex<f64>;
pub type QParam64 = QParam<f64>;
pub type EvalConfig64 = EvalConfig<f64>;
pub type SeriesValue64 = SeriesValue<f64>;





