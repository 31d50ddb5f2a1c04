//! Guarded evaluation of `⌊c ln n⌋` and `⌈n^x⌉`.
//!
//! A double-precision value is trusted unless it lies within `1e-9` of an
//! integer. Near an integer the quantity is bracketed with fixed-point
//! interval arithmetic at growing precision until the bracket clears the
//! integer. Exact integer values only occur in rational cases (`n = 1`, or
//! `n^{p/q}` with `n` a perfect `q`-th power), which are detected
//! algebraically; otherwise `c ln n` and `n^{1-k√c}` are transcendental for
//! `n ≥ 2` and the refinement terminates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::decimal_from_f64;

const GUARD: f64 = 1e-9;
const MAX_PREC: u32 = 1 << 15;

/// Exponent of `n` in [`ceil_n_pow`].
#[derive(Clone, Debug, PartialEq)]
pub enum PowExponent {
    Rational(BigRational),
    /// `1 − k·√c` for `c ≥ 0`.
    OneMinusSqrt { k: u32, c: f64 },
}

/// `⌊c ln n⌋` for `c ≥ 0`, `n ≥ 1`, with `c` read as its shortest decimal.
pub fn floor_c_ln_n(c: f64, n: u64) -> u64 {
    assert!(c >= 0.0 && c.is_finite(), "c must be finite and non-negative");
    assert!(n >= 1, "ln n needs n >= 1");
    if n == 1 || c == 0.0 {
        return 0;
    }
    let approx = c * libm::log(n as f64);
    let nearest = libm::round(approx);
    if libm::fabs(approx - nearest) > GUARD {
        return libm::floor(approx) as u64;
    }
    let c = decimal_from_f64(c).unwrap();
    let mut prec = 128;
    loop {
        let fx = Fixed::new(prec);
        let ln = fx.ln_uint(n);
        let iv = fx.mul_rational(&ln, &c);
        if let Some(f) = fx.floor(&iv) {
            return f.to_u64().unwrap_or(u64::MAX);
        }
        prec *= 2;
        assert!(prec <= MAX_PREC, "could not separate c ln n from an integer");
    }
}

/// `⌈n^x⌉` for `n ≥ 1`.
pub fn ceil_n_pow(n: u64, exponent: &PowExponent) -> u64 {
    assert!(n >= 1);
    if n == 1 {
        return 1;
    }
    let approx_exp = match exponent {
        PowExponent::Rational(q) => super::to_f64(q),
        PowExponent::OneMinusSqrt { k, c } => {
            assert!(*c >= 0.0 && c.is_finite());
            1.0 - f64::from(*k) * libm::sqrt(*c)
        }
    };
    let approx = libm::pow(n as f64, approx_exp);
    let nearest = libm::round(approx);
    if approx.is_finite() && libm::fabs(approx - nearest) > GUARD * nearest.max(1.0) {
        return libm::ceil(approx) as u64;
    }
    // Exact rational exponent?
    let rational = match exponent {
        PowExponent::Rational(q) => Some(q.clone()),
        PowExponent::OneMinusSqrt { k, c } => {
            let c = decimal_from_f64(*c).unwrap();
            rational_sqrt(&c).map(|s| BigRational::one() - s * BigInt::from(*k))
        }
    };
    if let Some(q) = &rational {
        if !q.is_positive() {
            // n^q ≤ 1 and positive.
            return 1;
        }
        if let Some(v) = exact_rational_power(n, q) {
            return v;
        }
    }
    let mut prec = 128;
    loop {
        let fx = Fixed::new(prec);
        let ln = fx.ln_uint(n);
        let x = match (exponent, &rational) {
            (_, Some(q)) => fx.of_rational(q),
            (PowExponent::OneMinusSqrt { k, c }, None) => {
                let c = decimal_from_f64(*c).unwrap();
                let s = fx.sqrt_rational(&c);
                let one = fx.one();
                let k = BigInt::from(*k);
                Iv { lo: &one - &k * &s.hi, hi: &one - &k * &s.lo }
            }
            (PowExponent::Rational(_), None) => unreachable!(),
        };
        let y = fx.mul(&x, &ln);
        let e = fx.exp(&y);
        if let Some(v) = fx.ceil(&e) {
            return v.to_u64().unwrap_or(u64::MAX);
        }
        prec *= 2;
        assert!(prec <= MAX_PREC, "could not separate n^x from an integer");
    }
}

fn rational_sqrt(c: &BigRational) -> Option<BigRational> {
    if c.is_negative() {
        return None;
    }
    let (p, q) = (c.numer(), c.denom());
    let (sp, sq) = (p.sqrt(), q.sqrt());
    (&sp * &sp == *p && &sq * &sq == *q).then(|| BigRational::new(sp, sq))
}

/// `n^{p/q}` when it is an integer.
fn exact_rational_power(n: u64, q: &BigRational) -> Option<u64> {
    let num = q.numer().to_u32()?;
    let den = q.denom().to_u32()?;
    if den > 64 {
        return None;
    }
    let n = BigInt::from(n);
    let root = n.nth_root(den);
    if num_traits::pow(root.clone(), den as usize) != n {
        return None;
    }
    num_traits::pow(root, num as usize).to_u64()
}

/// Closed interval `[lo, hi] / 2^prec`.
#[derive(Clone, Debug)]
struct Iv {
    lo: BigInt,
    hi: BigInt,
}

struct Fixed {
    prec: u32,
    one: BigInt,
}

impl Fixed {
    fn new(prec: u32) -> Self {
        Self { prec, one: BigInt::one() << prec as usize }
    }

    fn one(&self) -> BigInt {
        self.one.clone()
    }

    fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
        a.div_floor(b)
    }

    fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
        -((-a).div_floor(b))
    }

    fn of_rational(&self, q: &BigRational) -> Iv {
        let scaled = q.numer() * &self.one;
        Iv { lo: Self::div_floor(&scaled, q.denom()), hi: Self::div_ceil(&scaled, q.denom()) }
    }

    /// `atanh(p/q)` for `0 ≤ p/q ≤ 1/3`.
    fn atanh(&self, p: &BigInt, q: &BigInt) -> Iv {
        let p2 = p * p;
        let q2 = q * q;
        let mut pw = Self::div_floor(&(p * &self.one), q);
        let mut sum = pw.clone();
        let mut terms = 1u64;
        let mut j = 1u64;
        while !pw.is_zero() {
            pw = Self::div_floor(&(&pw * &p2), &q2);
            sum += Self::div_floor(&pw, &BigInt::from(2 * j + 1));
            terms += 1;
            j += 1;
        }
        // Per-term truncation below 2.2 ulp; the dropped tail below 2.5 ulp.
        let slack = BigInt::from(3 * terms + 4);
        Iv { hi: &sum + slack, lo: sum }
    }

    fn ln_uint(&self, n: u64) -> Iv {
        assert!(n >= 1);
        let k = 63 - n.leading_zeros() as u64;
        let pow = BigInt::from(1u64) << k as usize;
        let nn = BigInt::from(n);
        let ln2 = self.atanh(&BigInt::one(), &BigInt::from(3));
        let rest = self.atanh(&(&nn - &pow), &(&nn + &pow));
        let kk = BigInt::from(k);
        Iv {
            lo: (&kk * &ln2.lo + &rest.lo) * 2,
            hi: (&kk * &ln2.hi + &rest.hi) * 2,
        }
    }

    fn mul_rational(&self, x: &Iv, c: &BigRational) -> Iv {
        let (p, q) = (c.numer(), c.denom());
        let (a, b) = (&x.lo * p, &x.hi * p);
        let (lo, hi) = if p.is_negative() { (b, a) } else { (a, b) };
        Iv { lo: Self::div_floor(&lo, q), hi: Self::div_ceil(&hi, q) }
    }

    fn mul(&self, x: &Iv, y: &Iv) -> Iv {
        let cands = [&x.lo * &y.lo, &x.lo * &y.hi, &x.hi * &y.lo, &x.hi * &y.hi];
        let lo = cands.iter().min().unwrap();
        let hi = cands.iter().max().unwrap();
        Iv { lo: Self::div_floor(lo, &self.one), hi: Self::div_ceil(hi, &self.one) }
    }

    fn sqrt_rational(&self, c: &BigRational) -> Iv {
        let scaled = Self::div_floor(&(c.numer() * &self.one * &self.one), c.denom());
        let lo = scaled.sqrt();
        Iv { hi: &lo + 1, lo }
    }

    fn exp(&self, x: &Iv) -> Iv {
        Iv { lo: self.exp_bound(&x.lo, false), hi: self.exp_bound(&x.hi, true) }
    }

    /// Lower (`upper = false`) or upper bound on `exp(x / 2^prec)`.
    fn exp_bound(&self, x: &BigInt, upper: bool) -> BigInt {
        if x.is_negative() {
            let inv = self.exp_bound(&-x, !upper);
            let sq = &self.one * &self.one;
            if inv.is_zero() {
                // Only reachable for absurdly negative exponents.
                return if upper { self.one.clone() } else { BigInt::zero() };
            }
            return if upper { Self::div_ceil(&sq, &inv) } else { Self::div_floor(&sq, &inv) };
        }
        // Halve until the argument is at most 1/2.
        let m = (x.bits() as i64 - i64::from(self.prec) + 1).max(0) as usize;
        let pow = BigInt::one() << m;
        let y = if upper { Self::div_ceil(x, &pow) } else { Self::div_floor(x, &pow) };
        let mut term = self.one.clone();
        let mut sum = self.one.clone();
        let mut j = 1u64;
        loop {
            let den = &self.one * BigInt::from(j);
            term = if upper {
                Self::div_ceil(&(&term * &y), &den)
            } else {
                Self::div_floor(&(&term * &y), &den)
            };
            if upper && term <= BigInt::one() {
                sum += 3;
                break;
            }
            if !upper && term.is_zero() {
                break;
            }
            sum += &term;
            j += 1;
        }
        for _ in 0..m {
            let sq = &sum * &sum;
            sum = if upper { Self::div_ceil(&sq, &self.one) } else { Self::div_floor(&sq, &self.one) };
        }
        sum
    }

    fn floor(&self, x: &Iv) -> Option<BigInt> {
        let a = Self::div_floor(&x.lo, &self.one);
        let b = Self::div_floor(&x.hi, &self.one);
        (a == b).then_some(a)
    }

    fn ceil(&self, x: &Iv) -> Option<BigInt> {
        let a = Self::div_ceil(&x.lo, &self.one);
        let b = Self::div_ceil(&x.hi, &self.one);
        (a == b).then_some(a)
    }
}
