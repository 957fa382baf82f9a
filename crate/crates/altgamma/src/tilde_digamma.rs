//! The digamma analogue `psi~(x) = d/dx log Gamma~(x)` and the higher
//! derivatives `psi~^(n)`.
//!
//! Closed form: `psi~(x) = (1/2)(psi(x/2) - psi((x+1)/2))`, always negative
//! on `x > 0` and increasing to 0. Independent routes: a pair-grouped
//! alternating series and a Laplace-type integral, used to cross-check the
//! closed form. Higher derivatives reduce to the alternating Hurwitz zeta:
//! `psi~^(n)(x) = (-1)^(n+1) n! zeta_E(n+1, x)`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::classical::{digamma, sin_pi};
use crate::exact::big_ratio;
use crate::quad::tanh_sinh;
use crate::verify::ResidualRecord;
use crate::{Error, EvalConfig, EvalResult, Method, Result, SpecialValue};

const EPS: f64 = f64::EPSILON;
const LN_2: f64 = std::f64::consts::LN_2;

/// Largest derivative order accepted by [`tilde_polygamma`].
pub const MAX_POLYGAMMA_ORDER: usize = 12;

/// `psi~(x)` for `x > 0` through the classical digamma split.
pub fn tilde_digamma(x: f64) -> Result<EvalResult> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "tilde_digamma requires x > 0, got {x}"
        )));
    }
    let a = digamma(0.5 * x)?;
    let b = digamma(0.5 * (x + 1.0))?;
    let value = 0.5 * (a.value - b.value);
    let err = 0.5 * (a.abs_error_estimate + b.abs_error_estimate)
        + EPS * (a.value.abs() + b.value.abs());
    Ok(EvalResult::new(
        value,
        err,
        Method::ClosedForm,
        a.terms_used + b.terms_used,
    ))
}

/// `psi~(x)` by direct summation of
/// `-1/x + log 2 + sum_{k>=1} (-1)^k (1/k - 1/(k+x))`.
///
/// Terms are grouped in consecutive pairs so partial sums are monotone; the
/// first omitted term bounds the truncation error. `pairs` counts the
/// `(2k-1, 2k)` pairs taken; the reported value is that partial sum, not an
/// extrapolation.
pub fn tilde_digamma_series(x: f64, pairs: usize) -> Result<EvalResult> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "tilde_digamma_series requires x > 0, got {x}"
        )));
    }
    if pairs == 0 {
        return Err(Error::Parameter("pairs must be at least 1".into()));
    }
    // (-1)^k (1/k - 1/(k+x)) = (-1)^k x / (k (k+x)); pair k = 2j-1 with 2j.
    let mut sum = 0.0;
    for j in (1..=pairs).rev() {
        let odd = (2 * j - 1) as f64;
        let even = (2 * j) as f64;
        sum += x / (even * (even + x)) - x / (odd * (odd + x));
    }
    let value = -1.0 / x + LN_2 + sum;
    let next = (2 * pairs + 1) as f64;
    let trunc = x / (next * (next + x));
    let err = trunc + EPS * (pairs as f64).sqrt() * (1.0 / x + LN_2 + sum.abs());
    Ok(EvalResult::new(value, err, Method::LimitSequence, pairs))
}

/// `psi~(x)` from the Laplace-type integral
/// `psi~(x) = -int_0^inf e^(-x t) / (1 + e^(-t)) dt`, `x > 0`.
///
/// The range is cut at `T` with tail `e^(-x T)/x` below a tenth of the
/// target, then `[0, T]` is handled by tanh-sinh quadrature.
pub fn tilde_digamma_integral(x: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "tilde_digamma_integral requires x > 0, got {x}"
        )));
    }
    let target = cfg.target_abs_error();
    // tail bound: int_T^inf e^(-x t)/(1+e^(-t)) dt <= e^(-x T)/x
    let cut = ((10.0 / (x * target)).ln() / x).max(1.0);
    let out = tanh_sinh(
        |t| (-x * t).exp() / (1.0 + (-t).exp()),
        0.0,
        cut,
        cfg.quadrature_levels(),
        0.1 * target,
    );
    let tail = (-x * cut).exp() / x;
    Ok(EvalResult::new(
        -out.value,
        out.abs_error + tail,
        Method::Quadrature,
        out.evals,
    ))
}

/// `psi~^(n)(x) = (-1)^(n+1) n! zeta_E(n+1, x)` for `0 <= n <= 12`, `x > 0`.
///
/// `n = 0` returns `psi~(x)` itself. The zeta factor is evaluated by the
/// accelerated series, so this route is independent of the digamma split.
pub fn tilde_polygamma(n: usize, x: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    if n > MAX_POLYGAMMA_ORDER {
        return Err(Error::Parameter(format!(
            "polygamma order must be at most {MAX_POLYGAMMA_ORDER}, got {n}"
        )));
    }
    if n == 0 {
        return tilde_digamma(x);
    }
    let zeta = crate::alt_zeta::alt_hurwitz_zeta_series((n + 1) as f64, x, cfg)?;
    let mut fact = 1.0;
    for k in 2..=n {
        fact *= k as f64;
    }
    let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
    let value = sign * fact * zeta.value;
    let err = fact * zeta.abs_error_estimate + 2.0 * EPS * value.abs();
    Ok(EvalResult::new(value, err, zeta.method, zeta.terms_used))
}

/// Checks the forward recursion after `n` steps:
///
/// ```text
/// psi~(x + n) =  psi~(x) + sum_{k=0}^{n-1} (-1)^k   / (x + k)   (n even)
/// psi~(x + n) = -psi~(x) + sum_{k=0}^{n-1} (-1)^(k+1)/ (x + k)   (n odd)
/// ```
///
/// `lhs` is `psi~(x + n)` evaluated directly, `rhs` the shifted expression.
pub fn tilde_digamma_recursion(x: f64, n: usize) -> Result<ResidualRecord> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "tilde_digamma_recursion requires x > 0, got {x}"
        )));
    }
    let lhs = tilde_digamma(x + n as f64)?.value;
    let base = tilde_digamma(x)?.value;
    let mut sum = 0.0;
    for k in (0..n).rev() {
        let t = 1.0 / (x + k as f64);
        sum += if k % 2 == 0 { t } else { -t };
    }
    let rhs = if n % 2 == 0 { base + sum } else { -base - sum };
    Ok(ResidualRecord::new(
        "psi-recursion",
        &[("x", x), ("n", n as f64)],
        lhs,
        rhs,
        1e-11,
    ))
}

/// Checks the reflection identity
/// `psi~(x) + psi~(1 - x) = -pi / sin(pi x)` for `0 < x < 1`.
pub fn tilde_digamma_reflection(x: f64) -> Result<ResidualRecord> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!(
            "tilde_digamma_reflection requires 0 < x < 1, got {x}"
        )));
    }
    let lhs = tilde_digamma(x)?.value + tilde_digamma(1.0 - x)?.value;
    let rhs = -std::f64::consts::PI / sin_pi(x);
    Ok(ResidualRecord::new(
        "psi-reflection",
        &[("x", x)],
        lhs,
        rhs,
        1e-11,
    ))
}

/// Exact value of `psi~(n)` for integer `n >= 1` as a rational plus a
/// rational multiple of `log 2`:
///
/// ```text
/// psi~(n) = (-1)^n ( log 2 - sum_{k=1}^{n-1} (-1)^(k+1) / k ).
/// ```
pub fn tilde_digamma_integer(n: u32) -> Result<SpecialValue> {
    if n == 0 {
        return Err(Error::Parameter("psi~ has a pole at 0".into()));
    }
    let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
    let mut partial = BigRational::from_integer(BigInt::from(0));
    for k in 1..n {
        let term = BigRational::new(BigInt::from(1), BigInt::from(k));
        if k % 2 == 0 {
            partial += term;
        } else {
            partial -= term;
        }
    }
    // partial holds sum (-1)^k / k, the negative of the sum above
    Ok(SpecialValue::RationalPlusLog2 {
        rational: big_ratio(sign, 1) * partial,
        log2_coeff: big_ratio(sign, 1),
    })
}

/// Checks `psi~` at the shifted rational `n + p/q` against the expression
/// through `psi~(p/q)`:
///
/// ```text
/// psi~(n + p/q) =  psi~(p/q) + S   (n even)
/// psi~(n + p/q) = -psi~(p/q) - S   (n odd)
/// ```
///
/// with `S = sum_{k=0}^{n-1} (-1)^k q / (q k + p)`. Any representation of
/// `p/q` is accepted and reduced internally.
pub fn tilde_digamma_rational_shift(p: u32, q: u32, n: usize) -> Result<ResidualRecord> {
    if p == 0 || q == 0 || p >= q {
        return Err(Error::Domain(format!(
            "rational shift requires 0 < p < q, got p = {p}, q = {q}"
        )));
    }
    let g = gcd(p, q);
    let (p, q) = (p / g, q / g);
    let frac = p as f64 / q as f64;
    let lhs = tilde_digamma(n as f64 + frac)?.value;
    let base = tilde_digamma(frac)?.value;
    let mut s = 0.0;
    for k in (0..n).rev() {
        let t = q as f64 / (q as f64 * k as f64 + p as f64);
        s += if k % 2 == 0 { t } else { -t };
    }
    let rhs = if n % 2 == 0 { base + s } else { -base - s };
    Ok(ResidualRecord::new(
        "psi-rational-shift",
        &[("p", p as f64), ("q", q as f64), ("n", n as f64)],
        lhs,
        rhs,
        1e-11,
    ))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn closed_form_reference_points() {
        // psi~(1) = -log 2
        let v = tilde_digamma(1.0).unwrap();
        assert!((v.value + LN_2).abs() < 1e-14);
        // psi~(2) = log 2 - 1
        let v = tilde_digamma(2.0).unwrap();
        assert!((v.value - (LN_2 - 1.0)).abs() < 1e-14);
        // psi~(1/2) = -pi/2
        let v = tilde_digamma(0.5).unwrap();
        assert!((v.value + PI / 2.0).abs() < 1e-14);
        // psi~(1/4) + psi~(3/4) = -pi sqrt(2)
        let s = tilde_digamma(0.25).unwrap().value + tilde_digamma(0.75).unwrap().value;
        assert!((s + PI * 2.0f64.sqrt()).abs() < 1e-13);
        assert!(tilde_digamma(0.0).is_err());
        assert!(tilde_digamma(-1.5).is_err());
    }

    #[test]
    fn closed_form_is_negative_and_increasing() {
        let mut prev = f64::NEG_INFINITY;
        for i in 1..=100 {
            let x = 0.1 * i as f64;
            let v = tilde_digamma(x).unwrap().value;
            assert!(v < 0.0, "x = {x}");
            assert!(v > prev, "x = {x}");
            prev = v;
        }
    }

    #[test]
    fn series_route_agrees() {
        for &x in &[0.1, 0.5, 1.0, 2.0, 3.7, 10.0] {
            let a = tilde_digamma(x).unwrap();
            let b = tilde_digamma_series(x, 100_000).unwrap();
            let tol = a.abs_error_estimate + b.abs_error_estimate;
            assert!(
                (a.value - b.value).abs() <= tol,
                "x = {x}, diff = {:e}, tol = {tol:e}",
                (a.value - b.value).abs()
            );
        }
    }

    #[test]
    fn series_truncation_bound_is_honest() {
        let exact = tilde_digamma(1.5).unwrap().value;
        for &pairs in &[10usize, 100, 1000] {
            let v = tilde_digamma_series(1.5, pairs).unwrap();
            assert!(
                (v.value - exact).abs() <= v.abs_error_estimate,
                "pairs = {pairs}"
            );
        }
        assert!(tilde_digamma_series(1.0, 0).is_err());
    }

    #[test]
    fn integral_route_agrees() {
        let c = cfg();
        for &x in &[0.1, 0.5, 1.0, 2.0, 3.7, 10.0] {
            let a = tilde_digamma(x).unwrap();
            let b = tilde_digamma_integral(x, &c).unwrap();
            assert!(
                (a.value - b.value).abs() <= 1e-10,
                "x = {x}, diff = {:e}",
                (a.value - b.value).abs()
            );
        }
    }

    #[test]
    fn polygamma_reference_points() {
        let c = cfg();
        // psi~'(1) = zeta_E(2, 1) = pi^2/12
        let v = tilde_polygamma(1, 1.0, &c).unwrap();
        assert!((v.value - PI * PI / 12.0).abs() < 1e-12);
        // psi~''(1) = -2 zeta_E(3, 1) = -(3/2) zeta(3)
        let v = tilde_polygamma(2, 1.0, &c).unwrap();
        assert!((v.value + 1.5 * 1.2020569031595943).abs() < 1e-12);
        // order 0 falls through to psi~
        let v = tilde_polygamma(0, 2.5, &c).unwrap();
        assert_eq!(v.value, tilde_digamma(2.5).unwrap().value);
        assert!(tilde_polygamma(13, 1.0, &c).is_err());
    }

    #[test]
    fn polygamma_matches_finite_differences_of_digamma() {
        let c = cfg();
        for &x in &[1.0, 2.0, 3.7] {
            let fd =
                crate::oracles::finite_difference(|t| tilde_digamma(t).unwrap().value, x, 1e-5)
                    .unwrap();
            let v = tilde_polygamma(1, x, &c).unwrap();
            assert!((v.value - fd.value).abs() < 1e-6, "x = {x}");
        }
    }

    #[test]
    fn recursion_holds() {
        for &x in &[0.3, 1.0, 2.5] {
            for n in 1..=6 {
                let r = tilde_digamma_recursion(x, n).unwrap();
                assert!(r.pass, "x = {x}, n = {n}, abs = {:e}", r.abs_residual);
            }
        }
        // odd case at x = 1: psi~(2) = -psi~(1) - 1 = log 2 - 1
        let r = tilde_digamma_recursion(1.0, 1).unwrap();
        assert!((r.rhs - (LN_2 - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn reflection_holds() {
        for i in 1..=19 {
            let x = 0.05 * i as f64;
            let r = tilde_digamma_reflection(x).unwrap();
            assert!(r.pass, "x = {x}, abs = {:e}", r.abs_residual);
        }
        let r = tilde_digamma_reflection(0.5).unwrap();
        assert!((r.rhs + PI).abs() < 1e-14);
        assert!(tilde_digamma_reflection(0.0).is_err());
        assert!(tilde_digamma_reflection(1.0).is_err());
    }

    #[test]
    fn integer_values_are_exact() {
        // psi~(1) = -log 2, psi~(2) = -1 + log 2, psi~(4) = -5/6 + log 2
        let v = tilde_digamma_integer(1).unwrap();
        assert_eq!(v.to_string(), "-log 2");
        let v = tilde_digamma_integer(2).unwrap();
        assert!((v.numeric() - (LN_2 - 1.0)).abs() < 1e-15);
        let v = tilde_digamma_integer(4).unwrap();
        assert!((v.numeric() - (LN_2 - 5.0 / 6.0)).abs() < 1e-15);
        assert!((v.numeric() - tilde_digamma(4.0).unwrap().value).abs() < 1e-14);
        // psi~(3) = -(log 2 - 1/2) = 1/2 - log 2
        let v = tilde_digamma_integer(3).unwrap();
        assert!((v.numeric() - (0.5 - LN_2)).abs() < 1e-15);
        assert!(tilde_digamma_integer(0).is_err());
    }

    #[test]
    fn integer_values_match_closed_form_up_to_20() {
        for n in 1..=20u32 {
            let exact = tilde_digamma_integer(n).unwrap().numeric();
            let num = tilde_digamma(n as f64).unwrap().value;
            assert!((exact - num).abs() < 1e-13, "n = {n}");
        }
    }

    #[test]
    fn rational_shift_holds() {
        for &(p, q, n) in &[
            (1u32, 2u32, 1usize),
            (1, 3, 2),
            (2, 3, 1),
            (3, 4, 3),
            (1, 2, 4),
        ] {
            let r = tilde_digamma_rational_shift(p, q, n).unwrap();
            assert!(r.pass, "p/q = {p}/{q}, n = {n}, abs = {:e}", r.abs_residual);
        }
        // odd case at p/q = 1/2, n = 1: psi~(3/2) = pi/2 - 2
        let r = tilde_digamma_rational_shift(1, 2, 1).unwrap();
        assert!((r.rhs - (PI / 2.0 - 2.0)).abs() < 1e-14);
        assert!(tilde_digamma_rational_shift(0, 3, 1).is_err());
        assert!(tilde_digamma_rational_shift(3, 3, 1).is_err());
        assert!(tilde_digamma_rational_shift(4, 3, 1).is_err());
    }

    #[test]
    fn rational_shift_reduces_fractions() {
        let a = tilde_digamma_rational_shift(2, 4, 3).unwrap();
        let b = tilde_digamma_rational_shift(1, 2, 3).unwrap();
        assert_eq!(a.lhs, b.lhs);
        assert_eq!(a.rhs, b.rhs);
    }
}
