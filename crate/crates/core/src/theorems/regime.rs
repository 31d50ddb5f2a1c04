//! Parameter regimes, decided exactly.
//!
//! `2/ln n ≤ c` is equivalent to `⌊c ln n⌋ ≥ 2`, which the guarded floor
//! decides without rounding error.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::TheoremId;
use crate::exact::{self, floor_c_ln_n, Rational};

/// `(2r+9)(r+1)`.
fn theorem2_exponent(r: usize) -> u32 {
    ((2 * r + 9) * (r + 1)) as u32
}

fn inv_pow(r: usize, k: u32) -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(r), k as usize))
}

fn c_rational(c: f64) -> Rational {
    exact::decimal_from_f64(c).expect("finite c")
}

/// `r^{−(2r+9)(r+1)}`.
pub fn theorem2_c_max(r: usize) -> Rational {
    inv_pow(r, theorem2_exponent(r))
}

/// `r^{−(r+8)r}`.
pub fn thv4_c_max(r: usize) -> Rational {
    inv_pow(r, ((r + 8) * r) as u32)
}

/// Constant used by a checker when the caller gives no `c`: the largest
/// value the theorem admits, or the fixed value for the third theorems,
/// rounded so that its decimal reading does not exceed the exact constant.
pub fn default_c(id: TheoremId, r: usize) -> f64 {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let exact_c = match id {
        TheoremId::T2 | TheoremId::T3 => theorem2_c_max(r),
        TheoremId::T2_2 | TheoremId::T3_2 => theorem2_c_max(r) * half,
        TheoremId::FactThv4 => thv4_c_max(r),
        _ => return 0.0,
    };
    let c = exact::to_f64(&exact_c);
    if c_rational(c) > exact_c {
        c.next_down().max(0.0)
    } else {
        c
    }
}

/// Stability slack used when the caller gives no `b`: half the largest
/// admissible value, `2^{−11} r^{−6}`, rounded down like [`default_c`].
pub fn default_b(r: usize) -> f64 {
    let exact_b = Rational::new(BigInt::one(), BigInt::from(2048) * num_traits::pow(BigInt::from(r), 6));
    let b = exact::to_f64(&exact_b);
    if c_rational(b) > exact_b {
        b.next_down()
    } else {
        b
    }
}

/// `c ln n ≥ 2`, i.e. `n ≥ e^{2/c}`.
pub fn c_ln_n_at_least_two(c: f64, n: u64) -> bool {
    n >= 1 && floor_c_ln_n(c, n) >= 2
}

/// `n > r^15`.
pub fn theorem1_regime(n: usize, r: usize) -> bool {
    BigInt::from(n) > num_traits::pow(BigInt::from(r), 15)
}

/// `2/ln n ≤ c ≤ r^{−(2r+9)(r+1)}`.
pub fn theorem2_regime(n: usize, r: usize, c: f64) -> bool {
    c_ln_n_at_least_two(c, n as u64) && c_rational(c) <= theorem2_c_max(r)
}

/// `0 < b < 2^{−10} r^{−6}`.
pub fn b_regime(r: usize, b: f64) -> bool {
    let b = c_rational(b);
    let bound = Rational::new(BigInt::one(), BigInt::from(1024) * num_traits::pow(BigInt::from(r), 6));
    b > Rational::zero() && b < bound
}

/// `b` in range and `n ≥ r^20`.
pub fn theorem1_2_regime(n: usize, r: usize, b: f64) -> bool {
    b_regime(r, b) && BigInt::from(n) >= num_traits::pow(BigInt::from(r), 20)
}

/// `2/ln n ≤ c ≤ r^{−(2r+9)(r+1)}/2` and `b` in range.
pub fn theorem2_2_regime(n: usize, r: usize, c: f64, b: f64) -> bool {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    b_regime(r, b) && c_ln_n_at_least_two(c, n as u64) && c_rational(c) <= theorem2_c_max(r) * half
}

/// `n ≥ e^{2/c}` for the fixed `c = r^{−(2r+9)(r+1)}` (halved for the
/// stability version). Since `ln n < 45` for every 64-bit `n` while
/// `2/c ≥ 2^40`, no machine-sized `n` qualifies; the comparison is still
/// made rather than assumed.
pub fn theorem3_regime(n: usize, r: usize, halved: bool) -> bool {
    let mut two_over_c = BigInt::from(2) * num_traits::pow(BigInt::from(r), theorem2_exponent(r) as usize);
    if halved {
        two_over_c *= 2;
    }
    if two_over_c > BigInt::from(44) {
        // ln(2^64) < 44.4
        return false;
    }
    let c = exact::to_f64(&Rational::new(BigInt::from(2), two_over_c));
    c_ln_n_at_least_two(c, n as u64)
}

/// `2/ln n ≤ c ≤ r^{−(r+8)r}`.
pub fn thv4_regime(n: usize, r: usize, c: f64) -> bool {
    c_ln_n_at_least_two(c, n as u64) && c_rational(c) <= thv4_c_max(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn desk_scale_regimes_are_empty() {
        // r = 2, n = 100: 2/ln 100 ≈ 0.434 but c ≤ 2^-39
        assert!(!theorem2_regime(100, 2, 0.5));
        assert!(!theorem2_regime(100, 2, default_c(TheoremId::T2, 2)));
        for r in 2..12 {
            for id in [TheoremId::T2, TheoremId::T2_2, TheoremId::FactThv4] {
                let c = default_c(id, r);
                assert!(c_rational(c) <= theorem2_c_max(r).max(thv4_c_max(r)));
            }
        }
        for r in 2..8 {
            assert!(!theorem3_regime(usize::MAX, r, false));
            assert!(!theorem3_regime(usize::MAX, r, true));
        }
        assert!(!thv4_regime(1 << 40, 2, 2f64.powi(-20)));
        assert!(!theorem1_regime(32768, 2));
        assert!(theorem1_regime(32769, 2));
    }

    #[test]
    fn b_bounds() {
        assert!(b_regime(2, 1e-5));
        assert!(!b_regime(2, 2f64.powi(-16)));
        assert!(!b_regime(2, 0.0));
        assert!(b_regime(3, 1e-6));
        assert!(!b_regime(3, 2e-6));
        for r in 2..10 {
            assert!(b_regime(r, default_b(r)));
        }
    }

    #[test]
    fn c_ln_n_threshold() {
        // ln 100 ≈ 4.605, so c = 0.434 < 2/ln 100 ≈ 0.4343 and c = 0.435 above
        assert!(!c_ln_n_at_least_two(0.434, 100));
        assert!(c_ln_n_at_least_two(0.435, 100));
    }
}
