//! Exact special values: rationals, rational multiples of pi, and the
//! log-2 / log(pi/2) affine forms taken by the digamma-type constants.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// An exact closed-form value paired with its binary64 rendering.
///
/// Integer special values of the gamma analogue are rationals or rational
/// multiples of pi; the digamma analogue at integers is `r + c*log 2`, and
/// the zeta derivative constant is a rational multiple of `log(pi/2)`.
#[derive(Debug, Clone, PartialEq)]
pub enum SpecialValue {
    /// `p/q`
    Rational(BigRational),
    /// `(p/q) * pi`
    RationalTimesPi(BigRational),
    /// `r + c * log 2`
    RationalPlusLog2 { rational: BigRational, log2_coeff: BigRational },
    /// `(p/q) * log(pi/2)`
    RationalTimesLogPiHalf(BigRational),
}

pub(crate) fn big_ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl SpecialValue {
    pub fn rational(num: i64, den: i64) -> Self {
        SpecialValue::Rational(big_ratio(num, den))
    }

    pub fn rational_times_pi(num: i64, den: i64) -> Self {
        SpecialValue::RationalTimesPi(big_ratio(num, den))
    }

    /// Binary64 rendering of the exact value.
    pub fn numeric(&self) -> f64 {
        match self {
            SpecialValue::Rational(r) => to_f64(r),
            SpecialValue::RationalTimesPi(r) => to_f64(r) * std::f64::consts::PI,
            SpecialValue::RationalPlusLog2 { rational, log2_coeff } => {
                to_f64(rational) + to_f64(log2_coeff) * std::f64::consts::LN_2
            }
            SpecialValue::RationalTimesLogPiHalf(r) => {
                to_f64(r) * std::f64::consts::FRAC_PI_2.ln()
            }
        }
    }

    /// True when the exact value is 0.
    pub fn is_zero(&self) -> bool {
        match self {
            SpecialValue::Rational(r)
            | SpecialValue::RationalTimesPi(r)
            | SpecialValue::RationalTimesLogPiHalf(r) => r.is_zero(),
            SpecialValue::RationalPlusLog2 { rational, log2_coeff } => {
                rational.is_zero() && log2_coeff.is_zero()
            }
        }
    }
}

fn fmt_ratio(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats a rational coefficient of a symbol, e.g. `pi`, `1/2 * pi`, `-pi`.
fn fmt_scaled(r: &BigRational, symbol: &str) -> String {
    let one = BigRational::from(BigInt::from(1));
    if r == &one {
        symbol.to_string()
    } else if r == &(-one) {
        format!("-{symbol}")
    } else {
        format!("{} * {}", fmt_ratio(r), symbol)
    }
}

impl fmt::Display for SpecialValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialValue::Rational(r) => write!(f, "{}", fmt_ratio(r)),
            SpecialValue::RationalTimesPi(r) => {
                if r.is_zero() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", fmt_scaled(r, "pi"))
                }
            }
            SpecialValue::RationalPlusLog2 { rational, log2_coeff } => {
                if log2_coeff.is_zero() {
                    return write!(f, "{}", fmt_ratio(rational));
                }
                write!(f, "{}", fmt_scaled(log2_coeff, "log 2"))?;
                if !rational.is_zero() {
                    if rational.is_negative() {
                        write!(f, " - {}", fmt_ratio(&-rational.clone()))?;
                    } else {
                        write!(f, " + {}", fmt_ratio(rational))?;
                    }
                }
                Ok(())
            }
            SpecialValue::RationalTimesLogPiHalf(r) => {
                if r.is_zero() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", fmt_scaled(r, "log(pi/2)"))
                }
            }
        }
    }
}
