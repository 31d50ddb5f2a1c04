use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with integer coefficients, lowest degree first. The zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x + a`.
    pub fn linear(a: i64) -> Self {
        Self::from_i64(&[a, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let z = BigInt::zero();
        Self::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content, keeping the sign of every coefficient.
    pub fn primitive(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Pseudo-remainder scaled by a positive factor: the remainder of
    /// `|lc(d)|^k · self` on division by `d`. Signs of the true remainder
    /// (over the rationals) are preserved.
    pub fn positive_prem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut r = self.clone();
        let mut steps = 0u32;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let shift = dr - dd;
            let mut next: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lc).collect();
            for (i, c) in d.coeffs.iter().enumerate() {
                next[i + shift] -= &lr * c;
            }
            r = Self::new(next);
            steps += 1;
        }
        // Each step multiplied by lc; an odd number of negative factors flips signs.
        if lc.is_negative() && steps % 2 == 1 {
            r = r.neg();
        }
        r
    }

    /// Exact quotient `self / d` up to a positive constant, assuming `d`
    /// divides `self` over the rationals.
    pub fn div_exact_primitive(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut r = self.clone();
        let Some(dr) = r.degree() else {
            return r;
        };
        if dr < dd {
            return Self::new(Vec::new());
        }
        let mut q = vec![BigInt::zero(); dr - dd + 1];
        // Track a common scale so that quotient coefficients stay integral.
        let mut scale = BigInt::one();
        while let Some(deg) = r.degree() {
            if deg < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let shift = deg - dd;
            let g = lr.gcd(&lc);
            let mult = &lc / &g;
            let coef = &lr / &g;
            if !mult.is_one() {
                for x in q.iter_mut() {
                    *x *= &mult;
                }
                r = r.scale(&mult);
                scale *= &mult;
            }
            q[shift] += &coef;
            let mut next = r.coeffs.clone();
            for (i, c) in d.coeffs.iter().enumerate() {
                next[i + shift] -= &coef * c;
            }
            r = Self::new(next);
        }
        debug_assert!(r.is_zero(), "inexact polynomial division");
        let q = Self::new(q).primitive();
        // Keep the sign convention of self/d.
        let expected = self.leading().unwrap().sign() == d.leading().unwrap().sign();
        if q.leading().unwrap().is_positive() == expected {
            q
        } else {
            q.neg()
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.positive_prem(&b).primitive();
            a = b;
            b = r;
        }
        if a.leading().is_some_and(Signed::is_negative) {
            a = a.neg();
        }
        a
    }

    /// Same roots, each with multiplicity one; positive leading coefficient.
    pub fn squarefree(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        let q = if g.degree() == Some(0) { self.primitive() } else { self.div_exact_primitive(&g) };
        if q.leading().is_some_and(Signed::is_negative) {
            q.neg()
        } else {
            q
        }
    }

    /// Sign of `self(x)` for rational `x`.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let Some(d) = self.degree() else {
            return Ordering::Equal;
        };
        let (p, q) = (x.numer(), x.denom());
        // Σ c_i p^i q^(d-i), with q > 0.
        let mut acc = self.coeffs[d].clone();
        let mut qpow = BigInt::one();
        for i in (0..d).rev() {
            qpow *= q;
            acc = acc * p + &self.coeffs[i] * &qpow;
        }
        acc.sign_ord()
    }

    pub fn sign_at_infinity(&self) -> Ordering {
        self.leading().map_or(Ordering::Equal, |c| c.sign_ord())
    }

    /// Divides out the rational root `x`, assuming `self(x) = 0`.
    fn deflate(&self, x: &BigRational) -> Self {
        let lin = Self::new(vec![-x.numer().clone(), x.denom().clone()]);
        self.div_exact_primitive(&lin)
    }
}

trait SignOrd {
    fn sign_ord(&self) -> Ordering;
}

impl SignOrd for BigInt {
    fn sign_ord(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// Sturm chain of a square-free polynomial, for counting distinct real roots.
#[derive(Clone, Debug)]
pub struct Sturm {
    base: IntPoly,
    chain: Vec<IntPoly>,
}

impl Sturm {
    pub fn new(p: &IntPoly) -> Self {
        let base = p.squarefree();
        let mut chain = Vec::new();
        if !base.is_zero() {
            chain.push(base.clone());
            let mut a = base.clone();
            let mut b = base.derivative().primitive();
            while !b.is_zero() {
                chain.push(b.clone());
                let r = a.positive_prem(&b).neg().primitive();
                a = b;
                b = r;
            }
        }
        Self { base, chain }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.base
    }

    fn variations<F: Fn(&IntPoly) -> Ordering>(&self, sign: F) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for p in &self.chain {
            let s = sign(p);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Number of distinct real roots strictly greater than `x`.
    pub fn count_above(&self, x: &BigRational) -> usize {
        if self.chain.is_empty() {
            return 0;
        }
        if self.base.sign_at(x) == Ordering::Equal {
            return Sturm::new(&self.base.deflate(x)).count_above(x);
        }
        self.variations(|p| p.sign_at(x)) - self.variations(IntPoly::sign_at_infinity)
    }

    /// Distinct real roots in the half-open interval `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.count_above(a) - self.count_above(b)
    }

    pub fn is_root(&self, x: &BigRational) -> bool {
        !self.chain.is_empty() && self.base.sign_at(x) == Ordering::Equal
    }
}
