//! The gamma analogue `Gamma~(x)`, defined on `x > 0` by
//!
//! ```text
//! Gamma~(x) = (1/2) B(x/2, 1/2) = Gamma(x/2) sqrt(pi) / (2 Gamma((x+1)/2))
//! ```
//!
//! together with its extension to negative arguments, exact integer values,
//! four alternative evaluation routes (infinite product, exponent-paired
//! product, sequence limit, two quadratures), and the structural identities
//! (recursion, reflection, duplication, distribution).
//!
//! Key anchors: `Gamma~(1) = pi/2`, `Gamma~(2) = 1`,
//! `Gamma~(x+1) Gamma~(x) = pi/(2x)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::classical::{gauss_2f1_unit, log_gamma, sin_pi};
use crate::quad::{tanh_sinh, trapezoid_doubling};
use crate::verify::ResidualRecord;
use crate::{Error, EvalConfig, EvalResult, Method, Result, SpecialValue};

const EPS: f64 = f64::EPSILON;
const LN_2: f64 = std::f64::consts::LN_2;
const LN_PI: f64 = 1.1447298858494002;

/// Largest `n` accepted by [`tilde_gamma_limit`].
pub const MAX_LIMIT_INDEX: usize = 1_000_000;

/// `Gamma~` extended to the real line: finite values plus the pole/zero
/// lattice at nonpositive integers (poles at `0, -2, -4, ...`, zeros at
/// `-1, -3, -5, ...`).
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExtendedPoint {
    Finite(EvalResult),
    Pole,
    Zero,
}

impl ExtendedPoint {
    pub fn is_pole(&self) -> bool {
        matches!(self, ExtendedPoint::Pole)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtendedPoint::Zero)
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            ExtendedPoint::Finite(r) => Some(r.value),
            _ => None,
        }
    }
}

/// `Gamma~(x)` for `x > 0`, via `exp` of [`log_tilde_gamma`].
pub fn tilde_gamma(x: f64) -> Result<EvalResult> {
    let lg = log_tilde_gamma(x)?;
    let value = lg.value.exp();
    let err = value * (lg.abs_error_estimate + 2.0 * EPS);
    Ok(EvalResult::new(value, err, Method::ClosedForm, lg.terms_used))
}

/// `log Gamma~(x) = log Gamma(x/2) + (1/2) log pi - log 2 - log Gamma((x+1)/2)`
/// for `x > 0`; stays finite where `Gamma~` itself would overflow.
pub fn log_tilde_gamma(x: f64) -> Result<EvalResult> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "log_tilde_gamma requires x > 0, got {x}"
        )));
    }
    let a = log_gamma(0.5 * x)?;
    let b = log_gamma(0.5 * (x + 1.0))?;
    let value = a.value + 0.5 * LN_PI - LN_2 - b.value;
    let err = a.abs_error_estimate
        + b.abs_error_estimate
        + EPS * (a.value.abs() + b.value.abs() + 1.0);
    Ok(EvalResult::new(
        value,
        err,
        Method::ClosedForm,
        a.terms_used + b.terms_used,
    ))
}

/// `Gamma~` on the whole real line.
///
/// For `x > 0` this is [`tilde_gamma`]; for negative non-integer `x` the
/// two-step recursion `Gamma~(x) = ((x+1)/x) Gamma~(x+2)` is applied in
/// reverse until the argument is positive. Nonpositive integers map to the
/// pole/zero lattice instead of an error.
pub fn tilde_gamma_extended(x: f64) -> ExtendedPoint {
    if x > 0.0 {
        return match tilde_gamma(x) {
            Ok(r) => ExtendedPoint::Finite(r),
            Err(_) => unreachable!("tilde_gamma is total on x > 0"),
        };
    }
    if x == x.trunc() {
        let n = x as i64;
        return if n.rem_euclid(2) == 0 {
            ExtendedPoint::Pole
        } else {
            ExtendedPoint::Zero
        };
    }
    let steps = ((-x) / 2.0).ceil() as usize + 1;
    let mut factor = 1.0;
    for j in 0..steps {
        let base = x + 2.0 * j as f64;
        factor *= (base + 1.0) / base;
    }
    let shifted = match tilde_gamma(x + 2.0 * steps as f64) {
        Ok(r) => r,
        Err(_) => unreachable!("shifted argument is positive"),
    };
    let value = factor * shifted.value;
    let err = factor.abs() * shifted.abs_error_estimate
        + value.abs() * (4 * steps) as f64 * EPS;
    ExtendedPoint::Finite(EvalResult::new(
        value,
        err,
        Method::ClosedForm,
        shifted.terms_used + steps,
    ))
}

fn double_factorial(n: i64) -> BigInt {
    let mut acc = BigInt::from(1);
    let mut k = n;
    while k >= 2 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// Exact `Gamma~(n)` for integer `n >= 1`:
/// `(n-2)!!/(n-1)!!`, times `pi/2` when `n` is odd (convention
/// `(-1)!! = 0!! = 1`).
pub fn tilde_gamma_integer(n: u32) -> Result<SpecialValue> {
    if n == 0 {
        return Err(Error::Parameter(
            "integer special values need n >= 1; nonpositive integers are poles or zeros".into(),
        ));
    }
    let num = double_factorial(n as i64 - 2);
    let den = double_factorial(n as i64 - 1);
    let ratio = BigRational::new(num, den);
    Ok(if n % 2 == 1 {
        SpecialValue::RationalTimesPi(ratio / BigInt::from(2))
    } else {
        SpecialValue::Rational(ratio)
    })
}

struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    fn new() -> Self {
        KahanSum { sum: 0.0, carry: 0.0 }
    }

    fn add(&mut self, t: f64) {
        let y = t - self.carry;
        let s = self.sum + y;
        self.carry = (s - self.sum) - y;
        self.sum = s;
    }
}

/// `Gamma~(x)` by the convergent product
///
/// ```text
/// Gamma~(x) = (1/x) prod_{k>=1} (2k/(x+2k)) ((x+2k-1)/(2k-1)),
/// ```
///
/// truncated after `pairs` factors. Each factor is `1 + delta_k` with
/// `delta_k = x/((x+2k)(2k-1))` decreasing, summed as `log1p` in compensated
/// arithmetic. The omitted log tail sits below the integral
/// `int_p^inf delta(k) dk = x/(2(x+1)) log((2p+x)/(2p-1))`, so
/// `value * expm1(integral)` majorizes the true `O(1/pairs)` value error.
/// At `x = 1` this is the classical Wallis product for `pi/2`.
pub fn tilde_gamma_product(x: f64, pairs: usize) -> Result<EvalResult> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "tilde_gamma_product requires x > 0, got {x}"
        )));
    }
    if pairs == 0 {
        return Err(Error::Parameter("pairs must be at least 1".into()));
    }
    let mut log_sum = KahanSum::new();
    for k in 1..=pairs {
        let kf = k as f64;
        let delta = x / ((x + 2.0 * kf) * (2.0 * kf - 1.0));
        log_sum.add(delta.ln_1p());
    }
    let value = (log_sum.sum - x.ln()).exp();
    let p = pairs as f64;
    let tail = x / (2.0 * (x + 1.0)) * ((x + 1.0) / (2.0 * p - 1.0)).ln_1p();
    let err = value * (tail.exp_m1() + EPS * (8.0 + log_sum.sum.abs()));
    Ok(EvalResult::new(value, err, Method::Product, pairs))
}

/// `Gamma~(x)` by the exponent-paired normalized product
///
/// ```text
/// Gamma~(x) = (1/x) e^(x log 2) prod_{k>=1} ( e^(-x/k) (1+x/k) )^((-1)^(k+1)).
/// ```
///
/// The exponent series `sum (-1)^(k+1) (log(1+x/k) - x/k)` converges only
/// conditionally, so terms are grouped in consecutive `(odd, even)` pairs,
/// which makes the grouped series absolutely convergent with an alternating
/// remainder bounded by the first omitted term.
pub fn tilde_gamma_hadamard(x: f64, pairs: usize) -> Result<EvalResult> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "tilde_gamma_hadamard requires x > 0, got {x}"
        )));
    }
    if pairs == 0 {
        return Err(Error::Parameter("pairs must be at least 1".into()));
    }
    let term = |k: f64| (x / k).ln_1p() - x / k;
    let mut log_sum = KahanSum::new();
    for j in (1..=pairs).rev() {
        let odd = (2 * j - 1) as f64;
        log_sum.add(term(odd) - term(odd + 1.0));
    }
    let exponent = x * LN_2 + log_sum.sum - x.ln();
    let value = exponent.exp();
    let omitted = term((2 * pairs + 1) as f64).abs();
    let err = value * (omitted + EPS * (8.0 + x * LN_2 + x.ln().abs()));
    Ok(EvalResult::new(value, err, Method::Product, pairs))
}

fn log_double_factorial(n: usize) -> f64 {
    let mut s = 0.0;
    let mut k = n;
    while k >= 2 {
        s += (k as f64).ln();
        k -= 2;
    }
    s
}

/// The `n`-th element of the defining sequence
///
/// ```text
/// v_n = (n!!/(n-1)!!)     prod_{k=0}^{n} (1/(k+x))^((-1)^k)   (n even)
/// v_n = ((n-1)!!/n!!)     prod_{k=0}^{n} (1/(k+x))^((-1)^k)   (n odd)
/// ```
///
/// whose limit is `Gamma~(x)`. Everything is assembled in log space
/// (double factorials as summed logs), so no intermediate overflows; the
/// returned value is the raw sequence element, not an extrapolation. The
/// error estimate is the bracket width `|v_n - v_(n-1)|`, since consecutive
/// elements straddle the limit.
pub fn tilde_gamma_limit(x: f64, n: usize) -> Result<EvalResult> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "tilde_gamma_limit requires x > 0, got {x}"
        )));
    }
    if n == 0 || n > MAX_LIMIT_INDEX {
        return Err(Error::Parameter(format!(
            "sequence index must be in 1..={MAX_LIMIT_INDEX}, got {n}"
        )));
    }
    let prefactor = if n % 2 == 0 {
        log_double_factorial(n) - log_double_factorial(n - 1)
    } else {
        log_double_factorial(n - 1) - log_double_factorial(n)
    };
    // sum_{k=0}^{n} (-1)^(k+1) log(k+x), smallest terms first
    let mut alt = 0.0;
    for k in (0..=n).rev() {
        let t = (k as f64 + x).ln();
        alt += if k % 2 == 0 { -t } else { t };
    }
    let value = (prefactor + alt).exp();
    // v_(n-1) = v_n ((x+n)/n)^(+1 or -1) by parity of n
    let bracket = if n % 2 == 0 { x / n as f64 } else { x / (n as f64 + x) };
    let err = value * (bracket + EPS * n as f64 * ((n + 2) as f64).ln());
    Ok(EvalResult::new(value, err, Method::LimitSequence, n))
}

/// `Gamma~(x)` from the Laplace-type integral
/// `int_0^inf e^(-x t) (1 - e^(-2t))^(-1/2) dt`, `x > 0`.
///
/// The substitution `t = u^2` turns the `t^(-1/2)` endpoint singularity into
/// a smooth even integrand `2u e^(-x u^2) / sqrt(1 - e^(-2 u^2))`, on which
/// the doubling trapezoid rule converges superalgebraically. The range is
/// cut where the integrand's exponential factor is below a tenth of the
/// target.
pub fn tilde_gamma_laplace(x: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "tilde_gamma_laplace requires x > 0, got {x}"
        )));
    }
    let target = cfg.target_abs_error();
    let cut_t = ((10.0 / (x * target)).ln() / x).max(1.0);
    let cut_u = cut_t.sqrt();
    let f = |u: f64| {
        if u < 1e-8 {
            std::f64::consts::SQRT_2
        } else {
            2.0 * u * (-x * u * u).exp() / (-(-2.0 * u * u).exp_m1()).sqrt()
        }
    };
    let out = trapezoid_doubling(f, 0.0, cut_u, cfg.quadrature_levels(), 0.1 * target);
    let tail = (-x * cut_t).exp() / x;
    Ok(EvalResult::new(
        out.value,
        out.abs_error + tail,
        Method::Quadrature,
        out.evals,
    ))
}

/// `Gamma~(x)` from the Beta-type integral
/// `(1/2) int_0^1 t^(x/2-1) (1-t)^(-1/2) dt`, `x > 0`.
///
/// The substitution `t = sin^2(theta)` gives the Wallis form
/// `int_0^(pi/2) sin(theta)^(x-1) d(theta)`, whose remaining endpoint
/// singularity for `x < 1` is absorbed by tanh-sinh quadrature.
pub fn tilde_gamma_beta_integral(x: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "tilde_gamma_beta_integral requires x > 0, got {x}"
        )));
    }
    let target = cfg.target_abs_error();
    let out = tanh_sinh(
        |theta: f64| ((x - 1.0) * theta.sin().ln()).exp(),
        0.0,
        std::f64::consts::FRAC_PI_2,
        cfg.quadrature_levels(),
        0.1 * target,
    );
    Ok(EvalResult::new(
        out.value,
        out.abs_error,
        Method::Quadrature,
        out.evals,
    ))
}

/// Residual of the hypergeometric link
/// `x Gamma~(x) = 2F1(1/2, x/2; x/2 + 1; 1)`, both sides through Gauss
/// summation of gamma ratios.
pub fn hyper_link_residual(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "hyper_link_residual requires x > 0, got {x}"
        )));
    }
    let lhs = x * tilde_gamma(x)?.value;
    let rhs = gauss_2f1_unit(0.5, 0.5 * x, 0.5 * x + 1.0)?.value;
    Ok((lhs - rhs).abs())
}

/// Checks the `n`-step recursion, in log space:
///
/// ```text
/// (-1)^n log Gamma~(x+n) = sum_{k=0}^{n-1} (-1)^k log(2(x+k)/pi) + log Gamma~(x).
/// ```
///
/// The `n = 1` case is the reciprocity `Gamma~(x+1) Gamma~(x) = pi/(2x)`.
pub fn recursion_identity(x: f64, n: usize) -> Result<ResidualRecord> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "recursion_identity requires x > 0, got {x}"
        )));
    }
    if n == 0 {
        return Err(Error::Parameter("recursion step count must be >= 1".into()));
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let lhs = sign * log_tilde_gamma(x + n as f64)?.value;
    let mut sum = 0.0;
    for k in (0..n).rev() {
        let t = (2.0 * (x + k as f64)).ln() - LN_PI;
        sum += if k % 2 == 0 { t } else { -t };
    }
    let rhs = sum + log_tilde_gamma(x)?.value;
    Ok(ResidualRecord::new(
        "gamma-recursion",
        &[("x", x), ("n", n as f64)],
        lhs,
        rhs,
        1e-10,
    ))
}

/// Checks the reflection identity `Gamma~(x)/Gamma~(1-x) = cot(pi x / 2)`
/// for `0 < x < 1`, in log space (`cot` is positive there).
pub fn reflection_identity(x: f64) -> Result<ResidualRecord> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!(
            "reflection_identity requires 0 < x < 1, got {x}"
        )));
    }
    let lhs = log_tilde_gamma(x)?.value - log_tilde_gamma(1.0 - x)?.value;
    // cot(pi x/2) = sin(pi (1-x)/2) / sin(pi x/2)
    let rhs = sin_pi(0.5 * (1.0 - x)).ln() - sin_pi(0.5 * x).ln();
    Ok(ResidualRecord::new(
        "gamma-reflection",
        &[("x", x)],
        lhs,
        rhs,
        1e-10,
    ))
}

/// Checks the duplication identity
/// `Gamma~(2x) = (sqrt(pi)/2) Gamma(x) / Gamma(x + 1/2)`, in log space.
pub fn duplication_identity(x: f64) -> Result<ResidualRecord> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "duplication_identity requires x > 0, got {x}"
        )));
    }
    let lhs = log_tilde_gamma(2.0 * x)?.value;
    let rhs = 0.5 * LN_PI - LN_2 + log_gamma(x)?.value - log_gamma(x + 0.5)?.value;
    Ok(ResidualRecord::new(
        "gamma-duplication",
        &[("x", x)],
        lhs,
        rhs,
        1e-10,
    ))
}

/// Checks the distribution identity for odd `n`:
///
/// ```text
/// Gamma~(n x) = n^(-1/2) prod_{j=0}^{n-1} Gamma~(x + j/n)^((-1)^j),
/// ```
///
/// in log space. `n = 1` collapses to a tautology with residual zero.
pub fn distribution_identity(x: f64, n: usize) -> Result<ResidualRecord> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "distribution_identity requires x > 0, got {x}"
        )));
    }
    if n == 0 || n % 2 == 0 {
        return Err(Error::Parameter(format!(
            "distribution identity needs odd n >= 1, got {n}"
        )));
    }
    let lhs = log_tilde_gamma(n as f64 * x)?.value;
    let mut sum = 0.0;
    for j in (0..n).rev() {
        let t = log_tilde_gamma(x + j as f64 / n as f64)?.value;
        sum += if j % 2 == 0 { t } else { -t };
    }
    let rhs = -0.5 * (n as f64).ln() + sum;
    Ok(ResidualRecord::new(
        "gamma-distribution",
        &[("x", x), ("n", n as f64)],
        lhs,
        rhs,
        1e-10,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn closed_form_reference_points() {
        assert!((tilde_gamma(1.0).unwrap().value - FRAC_PI_2).abs() < 1e-13);
        assert!((tilde_gamma(2.0).unwrap().value - 1.0).abs() < 1e-13);
        assert!((tilde_gamma(3.0).unwrap().value - PI / 4.0).abs() < 1e-13);
        assert!((tilde_gamma(4.0).unwrap().value - 2.0 / 3.0).abs() < 1e-13);
        // Gamma(1/4) sqrt(pi) / (2 Gamma(3/4))
        assert!((tilde_gamma(0.5).unwrap().value - 2.6220575543).abs() < 1e-9);
        assert!(tilde_gamma(0.0).is_err());
        assert!(tilde_gamma(-1.0).is_err());
    }

    #[test]
    fn log_form_matches_exact_double_factorials() {
        // Gamma~(10) = 8!!/9!! = 384/945
        let lg = log_tilde_gamma(10.0).unwrap();
        assert!((lg.value - (384.0f64 / 945.0).ln()).abs() < 1e-13);
        // log form stays finite where exp would be extreme
        assert!(log_tilde_gamma(300.0).unwrap().value.is_finite());
    }

    #[test]
    fn integer_values_match_closed_form() {
        for n in 1..=20u32 {
            let exact = tilde_gamma_integer(n).unwrap().numeric();
            let num = tilde_gamma(n as f64).unwrap().value;
            assert!(
                ((exact - num) / exact).abs() < 1e-12,
                "n = {n}: exact {exact}, numeric {num}"
            );
        }
        assert!(tilde_gamma_integer(0).is_err());
    }

    #[test]
    fn integer_values_exact_forms() {
        assert_eq!(tilde_gamma_integer(1).unwrap().to_string(), "1/2 * pi");
        assert_eq!(tilde_gamma_integer(1).unwrap().numeric(), FRAC_PI_2);
        assert_eq!(tilde_gamma_integer(3).unwrap().to_string(), "1/4 * pi");
        assert_eq!(tilde_gamma_integer(4).unwrap().to_string(), "2/3");
        assert_eq!(tilde_gamma_integer(2).unwrap().to_string(), "1");
    }

    #[test]
    fn extension_pole_zero_lattice() {
        for &x in &[0.0, -2.0, -4.0, -6.0] {
            assert!(tilde_gamma_extended(x).is_pole(), "x = {x}");
        }
        for &x in &[-1.0, -3.0, -5.0] {
            assert!(tilde_gamma_extended(x).is_zero(), "x = {x}");
        }
    }

    #[test]
    fn extension_negative_values() {
        // Gamma~(-1/2) = -Gamma~(3/2)
        let v = tilde_gamma_extended(-0.5).value().unwrap();
        assert!((v + tilde_gamma(1.5).unwrap().value).abs() < 1e-12);
        assert!((v + 1.1981402347).abs() < 1e-9);
        // positive arguments fall through to the closed form
        let v = tilde_gamma_extended(2.0).value().unwrap();
        assert!((v - 1.0).abs() < 1e-13);
    }

    #[test]
    fn extension_is_recursion_consistent() {
        for &x in &[-0.3, -1.7, -3.5, -5.1] {
            let direct = tilde_gamma_extended(x).value().unwrap();
            let stepped = ((x + 1.0) / x) * tilde_gamma_extended(x + 2.0).value().unwrap();
            assert!(
                ((direct - stepped) / direct).abs() < 1e-10,
                "x = {x}: direct {direct}, stepped {stepped}"
            );
        }
    }

    #[test]
    fn product_telescopes_at_two() {
        let v = tilde_gamma_product(2.0, 100_000).unwrap();
        assert!((v.value - 1.0).abs() < 1e-4);
        assert!((v.value - 1.0).abs() <= v.abs_error_estimate);
    }

    #[test]
    fn product_reaches_wallis_limit() {
        let v = tilde_gamma_product(1.0, 1_000_000).unwrap();
        assert!(
            (v.value - FRAC_PI_2).abs() < 5e-7,
            "diff = {:e}",
            (v.value - FRAC_PI_2).abs()
        );
    }

    #[test]
    fn product_error_estimate_is_honest() {
        for &x in &[0.5, 1.0, 2.0, 3.7] {
            let exact = tilde_gamma(x).unwrap().value;
            let v = tilde_gamma_product(x, 10_000).unwrap();
            assert!(
                (v.value - exact).abs() <= v.abs_error_estimate,
                "x = {x}: diff {:e}, est {:e}",
                (v.value - exact).abs(),
                v.abs_error_estimate
            );
        }
        assert!(tilde_gamma_product(1.0, 0).is_err());
    }

    #[test]
    fn hadamard_product_agrees() {
        for &x in &[0.5, 1.0, 2.0] {
            let exact = tilde_gamma(x).unwrap().value;
            let v = tilde_gamma_hadamard(x, 100_000).unwrap();
            assert!(
                (v.value - exact).abs() < 1e-4,
                "x = {x}, diff = {:e}",
                (v.value - exact).abs()
            );
            assert!((v.value - exact).abs() <= v.abs_error_estimate + 1e-12);
        }
        assert!(tilde_gamma_hadamard(0.0, 10).is_err());
    }

    #[test]
    fn limit_sequence_converges() {
        let v = tilde_gamma_limit(2.0, 10_000).unwrap();
        assert!((v.value - 1.0).abs() < 1e-3);
        assert!((v.value - 1.0).abs() <= v.abs_error_estimate);
        // even/odd neighbors bracket the limit
        let even = tilde_gamma_limit(1.0, 10_000).unwrap().value;
        let odd = tilde_gamma_limit(1.0, 10_001).unwrap().value;
        assert!((even - FRAC_PI_2).signum() != (odd - FRAC_PI_2).signum());
        assert!((even - odd).abs() < 1e-3);
        assert!(tilde_gamma_limit(1.0, 0).is_err());
        assert!(tilde_gamma_limit(1.0, MAX_LIMIT_INDEX + 1).is_err());
    }

    #[test]
    fn laplace_quadrature_reference_points() {
        let c = cfg();
        let v = tilde_gamma_laplace(1.0, &c).unwrap();
        assert!((v.value - FRAC_PI_2).abs() < 1e-9, "diff = {:e}", (v.value - FRAC_PI_2).abs());
        let v = tilde_gamma_laplace(2.0, &c).unwrap();
        assert!((v.value - 1.0).abs() < 1e-9);
        let v = tilde_gamma_laplace(0.5, &c).unwrap();
        assert!((v.value - 2.6220575543).abs() < 1e-8);
        let v = tilde_gamma_laplace(10.0, &c).unwrap();
        assert!((v.value - tilde_gamma(10.0).unwrap().value).abs() < 1e-10);
    }

    #[test]
    fn beta_quadrature_reference_points() {
        let c = cfg();
        let v = tilde_gamma_beta_integral(1.0, &c).unwrap();
        assert!((v.value - FRAC_PI_2).abs() < 1e-10);
        let v = tilde_gamma_beta_integral(2.0, &c).unwrap();
        assert!((v.value - 1.0).abs() < 1e-10);
        let v = tilde_gamma_beta_integral(3.0, &c).unwrap();
        assert!((v.value - PI / 4.0).abs() < 1e-10);
        // singular-endpoint case x < 1
        let v = tilde_gamma_beta_integral(0.5, &c).unwrap();
        assert!(
            (v.value - tilde_gamma(0.5).unwrap().value).abs() < 1e-9,
            "diff = {:e}",
            (v.value - tilde_gamma(0.5).unwrap().value).abs()
        );
    }

    #[test]
    fn hypergeometric_link_is_tight() {
        assert!(hyper_link_residual(1.0).unwrap() <= 1e-12);
        assert!(hyper_link_residual(2.0).unwrap() <= 1e-12);
        for i in 1..=20 {
            let x = 0.5 * i as f64;
            assert!(hyper_link_residual(x).unwrap() <= 1e-11, "x = {x}");
        }
    }

    #[test]
    fn recursion_identity_holds() {
        // Gamma~(2) Gamma~(1) = pi/2
        let r = recursion_identity(1.0, 1).unwrap();
        assert!(r.pass && r.abs_residual <= 1e-12);
        // Gamma~(3/2) Gamma~(1/2) = pi
        let r = recursion_identity(0.5, 1).unwrap();
        assert!(r.pass && r.abs_residual <= 1e-12);
        // Gamma~(2.3) = (0.3/1.3) Gamma~(0.3)
        let r = recursion_identity(0.3, 2).unwrap();
        assert!(r.pass && r.abs_residual <= 1e-12);
        for n in 1..=6 {
            let r = recursion_identity(1.7, n).unwrap();
            assert!(r.pass, "n = {n}, abs = {:e}", r.abs_residual);
        }
        assert!(recursion_identity(1.0, 0).is_err());
    }

    #[test]
    fn reflection_identity_holds() {
        let r = reflection_identity(0.5).unwrap();
        assert!(r.abs_residual <= 1e-13);
        // Gamma~(1/3)/Gamma~(2/3) = cot(pi/6) = sqrt(3)
        let r = reflection_identity(1.0 / 3.0).unwrap();
        assert!((r.rhs - 3.0f64.sqrt().ln()).abs() < 1e-13);
        assert!(r.pass);
        let r = reflection_identity(0.9).unwrap();
        assert!(r.pass, "abs = {:e}", r.abs_residual);
        assert!(reflection_identity(0.0).is_err());
        assert!(reflection_identity(1.0).is_err());
    }

    #[test]
    fn duplication_identity_holds() {
        for &x in &[0.5, 1.0, 2.0, 3.7] {
            let r = duplication_identity(x).unwrap();
            assert!(r.pass && r.abs_residual <= 1e-12, "x = {x}");
        }
    }

    #[test]
    fn distribution_identity_holds() {
        let r = distribution_identity(0.8, 1).unwrap();
        assert_eq!(r.abs_residual, 0.0);
        let r = distribution_identity(1.0 / 3.0, 3).unwrap();
        assert!(r.pass, "abs = {:e}", r.abs_residual);
        let r = distribution_identity(0.4, 5).unwrap();
        assert!(r.pass, "abs = {:e}", r.abs_residual);
        assert!(distribution_identity(0.4, 2).is_err());
        assert!(distribution_identity(0.4, 0).is_err());
    }

    #[test]
    fn positivity_on_the_positive_axis() {
        for i in 1..=200 {
            let x = 0.05 * i as f64;
            assert!(tilde_gamma(x).unwrap().value > 0.0, "x = {x}");
        }
    }
}
