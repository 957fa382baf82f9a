//! Classical special-function kernel: Bernoulli numbers, log-gamma, digamma,
//! polygamma, the Hurwitz zeta function, the beta function and the Gauss
//! hypergeometric sum at unit argument.
//!
//! Everything downstream (the alternating zeta function and the gamma/digamma
//! analogues) reduces to these. Accuracy targets are near machine precision
//! for the closed paths and first-omitted-term bounded for Euler-Maclaurin.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::{Error, EvalConfig, EvalResult, Method, Result};

const EPS: f64 = f64::EPSILON;
const LN_PI: f64 = 1.1447298858494002;
/// `0.5 * ln(2 pi)`
const HALF_LN_TWO_PI: f64 = 0.9189385332046727;

/// Largest index for which the tangent-number route keeps full accuracy in
/// binary64 output; beyond this the table itself is no longer meaningful.
pub const MAX_BERNOULLI: usize = 64;

/// Bernoulli numbers `B_0..B_count` with the `B_1 = -1/2` convention.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliTable {
    values: Vec<f64>,
}

impl BernoulliTable {
    /// `B_k`; panics if `k` exceeds the table length.
    pub fn get(&self, k: usize) -> f64 {
        self.values[k]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Full table up to `MAX_BERNOULLI`, built once from the exact integer
/// tangent-number recurrence and converted to binary64 at the very end.
fn bernoulli_cache() -> &'static Vec<f64> {
    static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let m = MAX_BERNOULLI / 2;
        // T_n, 1-indexed: tan x = sum T_n x^(2n-1)/(2n-1)!
        let mut t: Vec<BigInt> = vec![BigInt::from(0); m + 1];
        t[1] = BigInt::from(1);
        for k in 2..=m {
            t[k] = (k - 1) * &t[k - 1];
        }
        for k in 2..=m {
            for j in k..=m {
                t[j] = (j - k) * &t[j - 1] + (j - k + 2) * &t[j];
            }
        }
        let mut values = vec![0.0; MAX_BERNOULLI + 1];
        values[0] = 1.0;
        values[1] = -0.5;
        for n in 1..=m {
            // B_{2n} = (-1)^(n-1) * 2n * T_n / (4^n (4^n - 1))
            let four_n = BigInt::from(4).pow(n as u32);
            let den = &four_n * (&four_n - 1);
            let mut num = BigInt::from(2 * n as i64) * &t[n];
            if n % 2 == 0 {
                num = -num;
            }
            values[2 * n] = BigRational::new(num, den).to_f64().unwrap_or(f64::NAN);
        }
        values
    })
}

/// Bernoulli numbers `B_0..B_count`, `count <= 64`.
///
/// Computed by the tangent-number recurrence, which is exact in integer
/// arithmetic; only the final rational-to-float conversion rounds.
pub fn bernoulli_numbers(count: usize) -> Result<BernoulliTable> {
    if count > MAX_BERNOULLI {
        return Err(Error::Parameter(format!(
            "bernoulli count must be at most {MAX_BERNOULLI}, got {count}"
        )));
    }
    Ok(BernoulliTable {
        values: bernoulli_cache()[..=count].to_vec(),
    })
}

/// Stirling coefficients `B_{2k} / (2k (2k-1))` for the log-gamma tail.
const STIRLING_LOG: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];
/// `B_18 / (18 * 17)`, magnitude of the first omitted log-gamma term.
const STIRLING_LOG_NEXT: f64 = 43_867.0 / 244_188.0;

/// Asymptotic coefficients `B_{2k} / (2k)` for the digamma tail.
const STIRLING_PSI: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];
/// `B_18 / 18`
const STIRLING_PSI_NEXT: f64 = 43_867.0 / 14_364.0;

/// Arguments below this are raised by the recurrence before the asymptotic
/// series is applied; at 10 the first omitted term is already ~2e-18.
const STIRLING_CUT: f64 = 10.0;

/// `log Gamma(x)` for `x > 0`.
///
/// Stirling's series after raising the argument to `STIRLING_CUT` via
/// `Gamma(x+1) = x Gamma(x)`.
pub fn log_gamma(x: f64) -> Result<EvalResult> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "log_gamma requires x > 0, got {x}"
        )));
    }
    let mut shift = 0.0;
    let mut shift_mag = 0.0;
    let mut m = 0usize;
    let mut y = x;
    while y < STIRLING_CUT {
        let l = y.ln();
        shift += l;
        shift_mag += l.abs();
        y += 1.0;
        m += 1;
    }
    let inv2 = 1.0 / (y * y);
    let mut series = 0.0;
    let mut p = 1.0 / y;
    for c in STIRLING_LOG {
        series += c * p;
        p *= inv2;
    }
    let value = (y - 0.5) * y.ln() - y + HALF_LN_TWO_PI + series - shift;
    let err = STIRLING_LOG_NEXT * p + EPS * (value.abs() + shift_mag + y * y.ln().abs()) * 2.0;
    Ok(EvalResult::new(value, err, Method::ClosedForm, m + STIRLING_LOG.len()))
}

/// `sin(pi x)` with exact zeros at integers (reduction before multiplying by pi).
pub(crate) fn sin_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0); // [0, 2)
    let (t, s) = if r < 1.0 {
        (if r <= 0.5 { r } else { 1.0 - r }, 1.0)
    } else {
        let q = r - 1.0;
        (if q <= 0.5 { q } else { 1.0 - q }, -1.0)
    };
    s * (std::f64::consts::PI * t).sin()
}

/// `(log |Gamma(x)|, sign of Gamma(x))` for non-pole real `x`.
///
/// Negative non-integer arguments go through the reflection formula
/// `Gamma(x) Gamma(1-x) = pi / sin(pi x)`.
pub(crate) fn log_gamma_signed(x: f64) -> Result<(f64, f64)> {
    if x > 0.0 {
        return Ok((log_gamma(x)?.value, 1.0));
    }
    if x == x.floor() {
        return Err(Error::Pole(format!(
            "gamma has a pole at the nonpositive integer {x}"
        )));
    }
    let s = sin_pi(x);
    let lg = LN_PI - s.abs().ln() - log_gamma(1.0 - x)?.value;
    Ok((lg, s.signum()))
}

/// Digamma `psi(x) = d/dx log Gamma(x)` for `x > 0`.
pub fn digamma(x: f64) -> Result<EvalResult> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("digamma requires x > 0, got {x}")));
    }
    let mut shift = 0.0;
    let mut shift_mag = 0.0;
    let mut m = 0usize;
    let mut y = x;
    while y < STIRLING_CUT {
        let r = 1.0 / y;
        shift += r;
        shift_mag += r;
        y += 1.0;
        m += 1;
    }
    let inv2 = 1.0 / (y * y);
    let mut series = 0.0;
    let mut p = inv2;
    for c in STIRLING_PSI {
        series += c * p;
        p *= inv2;
    }
    let value = y.ln() - 0.5 / y - series - shift;
    let err = STIRLING_PSI_NEXT * p + EPS * (value.abs() + shift_mag + y.ln().abs()) * 2.0;
    Ok(EvalResult::new(value, err, Method::ClosedForm, m + STIRLING_PSI.len()))
}

/// Hurwitz zeta `zeta(z, x) = sum_{n>=0} (n+x)^(-z)` for real `z != 1`, `x > 0`.
///
/// Euler-Maclaurin: `N` direct terms, then the integral and half-term
/// corrections and the Bernoulli tail
/// `sum_k B_{2k}/(2k)! (z)_{2k-1} (N+x)^(-z-2k+1)`.
/// The split point `N` grows with `|z|` so the tail stays asymptotic for
/// every real `z`; the error estimate is the first omitted Bernoulli term.
pub fn hurwitz_zeta(z: f64, x: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "hurwitz_zeta requires x > 0, got {x}"
        )));
    }
    if !z.is_finite() {
        return Err(Error::Domain(format!("hurwitz_zeta requires finite z, got {z}")));
    }
    if z == 1.0 {
        return Err(Error::Pole("hurwitz_zeta has a pole at z = 1".into()));
    }
    let bern = bernoulli_numbers(cfg.bernoulli_count())?;
    let target = cfg.target_abs_error();

    let n_split = cfg
        .euler_maclaurin_shift()
        .max(z.abs().ceil() as usize + 5)
        .max(10);
    let mut sum = 0.0;
    let mut mag = 0.0;
    for n in 0..n_split {
        let t = (x + n as f64).powf(-z);
        sum += t;
        mag += t.abs();
    }
    let a = x + n_split as f64;
    let t_int = a.powf(1.0 - z) / (z - 1.0);
    let t_half = 0.5 * a.powf(-z);
    sum += t_int + t_half;
    mag += t_int.abs() + t_half.abs();

    // Bernoulli tail, terms updated incrementally.
    let inv_a2 = 1.0 / (a * a);
    let mut poch = z; // (z)_{2k-1}
    let mut fact = 2.0; // (2k)!
    let mut pw = a.powf(-z - 1.0);
    let mut prev = f64::INFINITY;
    let mut omitted = 0.0;
    let mut used = 0usize;
    let k_max = cfg.bernoulli_count() / 2;
    for k in 1..=k_max {
        let term = bern.get(2 * k) / fact * poch * pw;
        let t_abs = term.abs();
        if t_abs >= prev || t_abs <= target * 0.1 {
            omitted = t_abs.min(prev);
            break;
        }
        sum += term;
        mag += t_abs;
        used = k;
        prev = t_abs;
        omitted = t_abs; // table exhausted: last added term is the proxy
        let zk = z + (2 * k) as f64;
        poch *= (zk - 1.0) * zk;
        fact *= ((2 * k + 1) * (2 * k + 2)) as f64;
        pw *= inv_a2;
    }
    let err = omitted + 2.0 * EPS * mag;
    Ok(EvalResult::new(sum, err, Method::EulerMaclaurin, n_split + used))
}

/// Polygamma `psi^(n)(x) = (-1)^(n+1) n! zeta(n+1, x)` for `x > 0`, `n <= 12`.
pub fn polygamma(n: usize, x: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    if n > 12 {
        return Err(Error::Parameter(format!(
            "polygamma order must be at most 12, got {n}"
        )));
    }
    if n == 0 {
        return digamma(x);
    }
    let hz = hurwitz_zeta((n + 1) as f64, x, cfg)?;
    let fact: f64 = (1..=n).map(|k| k as f64).product();
    let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
    Ok(EvalResult::new(
        sign * fact * hz.value,
        fact * hz.abs_error_estimate,
        Method::EulerMaclaurin,
        hz.terms_used,
    ))
}

/// Euler beta function `B(x, y) = Gamma(x) Gamma(y) / Gamma(x+y)`, `x, y > 0`.
pub fn beta_function(x: f64, y: f64) -> Result<EvalResult> {
    if !(x > 0.0) || !(y > 0.0) || !x.is_finite() || !y.is_finite() {
        return Err(Error::Domain(format!(
            "beta_function requires x, y > 0, got ({x}, {y})"
        )));
    }
    let lx = log_gamma(x)?;
    let ly = log_gamma(y)?;
    let lxy = log_gamma(x + y)?;
    let log_b = lx.value + ly.value - lxy.value;
    let value = log_b.exp();
    let log_err =
        lx.abs_error_estimate + ly.abs_error_estimate + lxy.abs_error_estimate + 2.0 * EPS;
    Ok(EvalResult::new(
        value,
        value.abs() * log_err,
        Method::ClosedForm,
        lx.terms_used + ly.terms_used + lxy.terms_used,
    ))
}

/// Gauss hypergeometric sum at unit argument,
/// `2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))`,
/// valid for `c - a - b > 0` and `c` not a nonpositive integer.
///
/// Evaluated in log space with sign tracking so negative non-integer
/// intermediate gamma arguments are handled; when `c-a` or `c-b` hits a
/// nonpositive integer the reciprocal gamma vanishes and the sum is 0.
pub fn gauss_2f1_unit(a: f64, b: f64, c: f64) -> Result<EvalResult> {
    if !a.is_finite() || !b.is_finite() || !c.is_finite() {
        return Err(Error::Domain("gauss_2f1_unit requires finite arguments".into()));
    }
    if c <= 0.0 && c == c.floor() {
        return Err(Error::Domain(format!(
            "gauss_2f1_unit requires c not a nonpositive integer, got c = {c}"
        )));
    }
    if a == 0.0 || b == 0.0 {
        // terminating (empty) series, convergence condition moot
        return Ok(EvalResult::new(1.0, 0.0, Method::ClosedForm, 0));
    }
    let s = c - a - b;
    if !(s > 0.0) {
        return Err(Error::Domain(format!(
            "gauss_2f1_unit requires c - a - b > 0, got {s}"
        )));
    }
    let ca = c - a;
    let cb = c - b;
    if (ca <= 0.0 && ca == ca.floor()) || (cb <= 0.0 && cb == cb.floor()) {
        return Ok(EvalResult::new(0.0, 0.0, Method::ClosedForm, 0));
    }
    let (l1, s1) = log_gamma_signed(c)?;
    let (l2, s2) = log_gamma_signed(s)?;
    let (l3, s3) = log_gamma_signed(ca)?;
    let (l4, s4) = log_gamma_signed(cb)?;
    let log_mag = l1 + l2 - l3 - l4;
    let value = s1 * s2 * s3 * s4 * log_mag.exp();
    let err = value.abs() * (EPS * (l1.abs() + l2.abs() + l3.abs() + l4.abs() + 2.0) * 2.0 + 4.0 * EPS);
    Ok(EvalResult::new(value, err, Method::ClosedForm, 0))
}
