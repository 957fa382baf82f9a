//! Alternating Hurwitz zeta function and its gamma-function analogue.
//!
//! The central object is the alternating Hurwitz zeta function
//!
//! ```text
//! zeta_E(z, x) = sum_{n>=0} (-1)^n / (n + x)^z,        x > 0
//! ```
//!
//! together with the gamma-type function it generates,
//!
//! ```text
//! Gamma~(x) = (1/2) B(x/2, 1/2) = Gamma(x/2) Gamma(1/2) / (2 Gamma((x+1)/2)),
//! ```
//!
//! its logarithmic derivative `psi~(x) = d/dx log Gamma~(x) = -zeta_E(1, x)`,
//! and the higher derivatives `psi~^(n)(x) = (-1)^(n+1) n! zeta_E(n+1, x)`.
//!
//! Every quantity is computed by at least two independent representations
//! (closed forms through the classical gamma function, accelerated series,
//! infinite products, limit sequences, and integral representations), and the
//! [`verify`] module runs the whole web of identities connecting them over
//! configurable grids, producing machine-readable residual reports.
//!
//! # Example
//!
//! ```
//! use altgamma::tilde_gamma::tilde_gamma;
//!
//! let g = tilde_gamma(1.0).unwrap();
//! assert!((g.value - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
//! ```
//!
//! Modules:
//!
//! * [`classical`] - Bernoulli numbers, log-gamma, digamma, polygamma,
//!   Hurwitz zeta, the beta function and the Gauss 2F1 sum at unit argument.
//! * [`alt_zeta`] - the alternating Hurwitz zeta function, its series
//!   acceleration, the eta function and the z-derivative at 0.
//! * [`tilde_gamma`] - the gamma analogue in all its representations plus its
//!   functional-equation residuals.
//! * [`tilde_digamma`] - the digamma/polygamma analogues.
//! * [`oracles`] - slow, bounded-error reference evaluators used by the tests
//!   and the verification suite.
//! * [`verify`] - grids, residual records and the identity suite.

use serde::Serialize;

pub mod alt_zeta;
pub mod classical;
pub mod exact;
pub mod oracles;
mod quad;
pub mod tilde_digamma;
pub mod tilde_gamma;
pub mod verify;

pub use exact::SpecialValue;

/// Errors reported by the evaluators.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The argument lies outside the function's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The argument sits exactly on a pole.
    #[error("pole error: {0}")]
    Pole(String),
    /// A tuning parameter or selection is out of range.
    #[error("parameter error: {0}")]
    Parameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Which representation produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    EulerMaclaurin,
    AcceleratedSeries,
    Quadrature,
    Product,
    LimitSequence,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::ClosedForm => "closed_form",
            Method::EulerMaclaurin => "euler_maclaurin",
            Method::AcceleratedSeries => "accelerated_series",
            Method::Quadrature => "quadrature",
            Method::Product => "product",
            Method::LimitSequence => "limit_sequence",
        };
        f.write_str(s)
    }
}

/// A computed value bundled with an a-posteriori error estimate.
///
/// `abs_error_estimate` is an honest estimate, not a rigorous bound: truncated
/// series report the first omitted term, quadratures the last refinement
/// difference, closed forms an ulp-level rounding model. It is always finite
/// and non-negative for finite values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub method: Method,
    /// Series terms, product factors or quadrature nodes actually consumed.
    pub terms_used: usize,
}

impl EvalResult {
    pub(crate) fn new(value: f64, abs_error_estimate: f64, method: Method, terms_used: usize) -> Self {
        EvalResult {
            value,
            abs_error_estimate: abs_error_estimate.abs(),
            method,
            terms_used,
        }
    }

    /// A value known in closed form, off by final rounding at most.
    pub fn exact(value: f64) -> Self {
        EvalResult {
            value,
            abs_error_estimate: 2.0 * f64::EPSILON * value.abs(),
            method: Method::ClosedForm,
            terms_used: 0,
        }
    }
}

/// Tuning knobs shared by every series, product and quadrature evaluator.
///
/// Constructed via [`EvalConfig::new`] (the defaults) and the checked
/// `with_*` builders; nonsensical settings are rejected at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    target_abs_error: f64,
    max_terms: usize,
    quadrature_levels: u32,
    euler_maclaurin_shift: usize,
    bernoulli_count: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            target_abs_error: 1e-12,
            max_terms: 1_000_000,
            quadrature_levels: 14,
            euler_maclaurin_shift: 10,
            bernoulli_count: 30,
        }
    }
}

impl EvalConfig {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_target_abs_error(mut self, target: f64) -> Result<Self> {
        if !(target > 0.0) || !target.is_finite() {
            return Err(Error::Parameter(format!(
                "target_abs_error must be positive and finite, got {target}"
            )));
        }
        self.target_abs_error = target;
        Ok(self)
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Result<Self> {
        if max_terms < 10 {
            return Err(Error::Parameter(format!(
                "max_terms must be at least 10, got {max_terms}"
            )));
        }
        self.max_terms = max_terms;
        Ok(self)
    }

    pub fn with_quadrature_levels(mut self, levels: u32) -> Result<Self> {
        if !(3..=30).contains(&levels) {
            return Err(Error::Parameter(format!(
                "quadrature_levels must lie in 3..=30, got {levels}"
            )));
        }
        self.quadrature_levels = levels;
        Ok(self)
    }

    pub fn with_euler_maclaurin_shift(mut self, shift: usize) -> Result<Self> {
        if shift == 0 || shift > 10_000 {
            return Err(Error::Parameter(format!(
                "euler_maclaurin_shift must lie in 1..=10000, got {shift}"
            )));
        }
        self.euler_maclaurin_shift = shift;
        Ok(self)
    }

    /// Highest Bernoulli index used by Euler-Maclaurin tails. Must be even;
    /// capped at 64, beyond which binary64 recurrences lose all accuracy.
    pub fn with_bernoulli_count(mut self, count: usize) -> Result<Self> {
        if count < 2 || count > 64 || count % 2 != 0 {
            return Err(Error::Parameter(format!(
                "bernoulli_count must be even and lie in 2..=64, got {count}"
            )));
        }
        self.bernoulli_count = count;
        Ok(self)
    }

    pub fn target_abs_error(&self) -> f64 {
        self.target_abs_error
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn quadrature_levels(&self) -> u32 {
        self.quadrature_levels
    }

    pub fn euler_maclaurin_shift(&self) -> usize {
        self.euler_maclaurin_shift
    }

    pub fn bernoulli_count(&self) -> usize {
        self.bernoulli_count
    }
}
