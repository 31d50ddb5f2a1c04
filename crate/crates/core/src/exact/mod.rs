//! Exact arithmetic: rationals, integer polynomials with Sturm sequences,
//! characteristic polynomials of equitable quotients, and interval
//! evaluation of `ln`, `sqrt` and `exp` for floor/ceil decisions.

mod charpoly;
mod hiprec;
mod poly;

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use charpoly::{berkowitz, equitable_quotient, exact_mu_compare, EquitableQuotient, Threshold};
pub use hiprec::{ceil_n_pow, floor_c_ln_n, PowExponent};
pub use poly::IntPoly;

pub type Rational = BigRational;

/// Exact value of a finite `f64`.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    BigRational::from_float(x)
}

/// The shortest decimal that round-trips to `x`, as an exact rational.
/// User parameters are read this way, so `b = 1e-6` means exactly `10^-6`
/// rather than the nearest binary double.
pub fn decimal_from_f64(x: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    // `Display` for f64 prints the shortest round-trip digits, never an exponent.
    parse_decimal(&alloc::format!("{x}"))
}

/// Parses a plain decimal such as `-12.0625`.
pub fn parse_decimal(s: &str) -> Option<Rational> {
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (whole, fraction) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && fraction.is_empty() {
        return None;
    }
    if !whole.chars().chain(fraction.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let mut all = String::from(whole);
    all.push_str(fraction);
    let numer: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().ok()? };
    let denom = num_traits::pow(BigInt::from(10), fraction.len());
    let q = BigRational::new(numer, denom);
    Some(if neg { -q } else { q })
}

pub fn int(x: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(x.into())
}

pub fn frac(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    BigRational::new(num.into(), den.into())
}

pub fn pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// `p` or `p/q` in lowest terms.
pub fn to_string(x: &Rational) -> String {
    x.to_string()
}

/// Parses `p` or `p/q` (optional sign on `p`).
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Nearest-ish `f64` for reporting; never used for decisions.
pub fn to_f64(x: &Rational) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let n = x.numer().bits() as i64;
    let d = x.denom().bits() as i64;
    let shift = n - d;
    let scaled = if shift > 0 {
        BigRational::new(x.numer().clone(), x.denom() << (shift as usize))
    } else {
        BigRational::new(x.numer() << ((-shift) as usize), x.denom().clone())
    };
    scaled.to_f64().unwrap_or(0.0) * libm::pow(2.0, shift as f64)
}

pub fn floor_to_int(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

pub fn is_nonnegative(x: &Rational) -> bool {
    !x.is_negative()
}

pub fn one() -> Rational {
    Rational::one()
}
