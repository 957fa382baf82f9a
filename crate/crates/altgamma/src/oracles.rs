//! Slow reference evaluators with explicit error bounds.
//!
//! These are deliberately naive: plain partial sums with integral or
//! first-omitted-term tail bounds, and central finite differences. The fast
//! evaluators are tested against them, never the other way round.

use serde::Serialize;

use crate::{Error, Result};

/// How trustworthy an oracle's `bound` is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rigor {
    /// The truncation error is provably at most `bound` (rounding aside).
    BoundedTail,
    /// `bound` is a heuristic scale, not a proof.
    Empirical,
}

/// A reference value with its tail/step bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleResult {
    pub value: f64,
    pub bound: f64,
    pub rigor: Rigor,
}

/// Partial sum of `sum_{n>=0} (n+x)^(-z)` with an integral tail bound.
///
/// Requires `z > 1`, `x > 0`. The bound is
/// `(terms + x - 1)^(1-z) / (z-1) >= sum_{n>=terms} (n+x)^(-z)`
/// (integral test anchored one step early so it really is an upper bound).
pub fn zeta_direct(z: f64, x: f64, terms: usize) -> Result<OracleResult> {
    if !(z > 1.0) {
        return Err(Error::Domain(format!(
            "zeta_direct requires z > 1, got {z}"
        )));
    }
    if !(x > 0.0) {
        return Err(Error::Domain(format!(
            "zeta_direct requires x > 0, got {x}"
        )));
    }
    if terms == 0 {
        return Err(Error::Parameter("zeta_direct requires terms >= 1".into()));
    }
    // smallest terms first
    let mut value = 0.0;
    for n in (0..terms).rev() {
        value += (x + n as f64).powf(-z);
    }
    let bound = (x + terms as f64 - 1.0).powf(1.0 - z) / (z - 1.0);
    Ok(OracleResult {
        value,
        bound,
        rigor: Rigor::BoundedTail,
    })
}

/// Pairwise-grouped partial sum of `sum_{n>=0} (-1)^n (n+x)^(-z)`.
///
/// Requires `z > 0`, `x > 0`. Sums `pairs` bracketed pairs
/// `(2j+x)^(-z) - (2j+1+x)^(-z)`; the remainder of the alternating series is
/// bounded by its first omitted term `(2 pairs + x)^(-z)`.
pub fn alt_zeta_direct(z: f64, x: f64, pairs: usize) -> Result<OracleResult> {
    if !(z > 0.0) {
        return Err(Error::Domain(format!(
            "alt_zeta_direct requires z > 0, got {z}"
        )));
    }
    if !(x > 0.0) {
        return Err(Error::Domain(format!(
            "alt_zeta_direct requires x > 0, got {x}"
        )));
    }
    if pairs == 0 {
        return Err(Error::Parameter("alt_zeta_direct requires pairs >= 1".into()));
    }
    let mut value = 0.0;
    for j in (0..pairs).rev() {
        let k = 2 * j;
        value += (x + k as f64).powf(-z) - (x + (k + 1) as f64).powf(-z);
    }
    let bound = (x + (2 * pairs) as f64).powf(-z);
    Ok(OracleResult {
        value,
        bound,
        rigor: Rigor::BoundedTail,
    })
}

/// Central finite difference `(f(x+h) - f(x-h)) / 2h`.
///
/// The bound `10 h^2` is an empirical scale for the O(h^2) truncation of
/// functions whose third derivative is of moderate size.
pub fn finite_difference<F: Fn(f64) -> f64>(f: F, x: f64, step: f64) -> Result<OracleResult> {
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::Parameter(format!(
            "finite_difference requires step > 0, got {step}"
        )));
    }
    let value = (f(x + step) - f(x - step)) / (2.0 * step);
    Ok(OracleResult {
        value,
        bound: step * step * 10.0,
        rigor: Rigor::Empirical,
    })
}
