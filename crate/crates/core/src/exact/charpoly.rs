//! Exact comparison of `μ(G)` against a threshold.
//!
//! `μ(G)` is the largest root of the characteristic polynomial of the
//! quotient matrix of the coarsest equitable partition of `G`: if `AP = PB`
//! then `Bᵀ(Pᵀx) = Pᵀ(Ax)` for the Perron vector `x ≥ 0`, so `μ(G)` is an
//! eigenvalue of `B`, and every eigenvalue of `B` is one of `A`. The
//! quotient has integer entries, so Sturm sequences decide the comparison
//! without rounding.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{IntPoly, Sturm};
use crate::graph::Graph;

/// Quotient of the coarsest equitable partition (colour refinement).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquitableQuotient {
    /// Cell index of each vertex.
    pub cell_of: Vec<usize>,
    /// `matrix[i][j]` = neighbours in cell `j` of any vertex of cell `i`.
    pub matrix: Vec<Vec<u64>>,
}

/// Colour refinement from the unit partition. Returns `None` once the
/// number of cells exceeds `max_cells`.
pub fn equitable_quotient(g: &Graph, max_cells: usize) -> Option<EquitableQuotient> {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    let mut cells = usize::from(n > 0);
    loop {
        if cells > max_cells {
            return None;
        }
        let signatures: Vec<(usize, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0u32; cells];
                for w in g.neighbors(v) {
                    counts[cell_of[w]] += 1;
                }
                (cell_of[v], counts)
            })
            .collect();
        let mut distinct: BTreeMap<(usize, Vec<u32>), usize> = BTreeMap::new();
        for sig in &signatures {
            distinct.entry(sig.clone()).or_insert(0);
        }
        for (i, val) in distinct.values_mut().enumerate() {
            *val = i;
        }
        let next: Vec<usize> = signatures.iter().map(|s| distinct[s]).collect();
        let refined = distinct.len();
        if refined == cells {
            let matrix = (0..cells)
                .map(|i| {
                    let v = next.iter().position(|&c| c == i).expect("non-empty cell");
                    signatures[v].1.iter().map(|&x| u64::from(x)).collect::<Vec<_>>()
                })
                .collect::<Vec<_>>();
            // Cell ids from the last round equal `next` up to the order-preserving
            // relabelling, which is the identity once the count is stable.
            return Some(EquitableQuotient { cell_of: next, matrix });
        }
        cell_of = next;
        cells = refined;
    }
}

/// Characteristic polynomial `det(xI − M)` by Berkowitz's division-free
/// algorithm.
pub fn berkowitz(m: &[Vec<BigInt>]) -> IntPoly {
    let n = m.len();
    // Coefficients highest degree first.
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        let a = &m[r][r];
        // col = [1, -a, -R S, -R M S, ..., -R M^(r-1) S]
        let mut col = Vec::with_capacity(r + 2);
        col.push(BigInt::one());
        col.push(-a.clone());
        let mut v: Vec<BigInt> = (0..r).map(|i| m[i][r].clone()).collect();
        for _ in 0..r {
            let rs: BigInt = (0..r).map(|j| &m[r][j] * &v[j]).sum();
            col.push(-rs);
            v = (0..r).map(|i| (0..r).map(|j| &m[i][j] * &v[j]).sum()).collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, out) in next.iter_mut().enumerate() {
            for (j, cj) in c.iter().enumerate() {
                if i >= j {
                    *out += &col[i - j] * cj;
                }
            }
        }
        c = next;
    }
    c.reverse();
    IntPoly::new(c)
}

/// What `μ(G)` is compared against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Threshold {
    Rational(BigRational),
    /// `μ` of the complete multipartite graph with these part sizes (zeros
    /// ignored): the largest root of `Σ s_i/(λ + s_i) = 1`.
    MultipartiteMu(Vec<usize>),
}

/// Integer polynomial whose largest root is `μ(K(s_1, ..., s_r))`:
/// `Π_j (λ+m_j) − Σ_j c_j m_j Π_{l≠j} (λ+m_l)` over distinct sizes `m_j`
/// of multiplicity `c_j`.
pub fn multipartite_mu_poly(sizes: &[usize]) -> IntPoly {
    let mut distinct: BTreeMap<usize, i64> = BTreeMap::new();
    for &s in sizes.iter().filter(|&&s| s > 0) {
        *distinct.entry(s).or_insert(0) += 1;
    }
    let parts: Vec<(i64, i64)> = distinct.into_iter().map(|(m, c)| (m as i64, c)).collect();
    let prod_except = |skip: Option<usize>| {
        parts
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != skip)
            .fold(IntPoly::from_i64(&[1]), |acc, (_, &(m, _))| acc.mul(&IntPoly::linear(m)))
    };
    let mut p = prod_except(None);
    for (j, &(m, c)) in parts.iter().enumerate() {
        p = p.add(&prod_except(Some(j)).scale(&BigInt::from(-(m * c))));
    }
    p
}

/// Exact sign of `μ(G) − threshold`. `approx` is a floating estimate of a
/// multipartite threshold used to seed its isolating interval. Returns
/// `None` when the quotient has more than `max_cells` cells or the
/// separation loop runs out of steps.
pub fn exact_mu_compare(
    g: &Graph,
    threshold: &Threshold,
    approx: f64,
    max_cells: usize,
) -> Option<Ordering> {
    let quotient = equitable_quotient(g, max_cells)?;
    let m: Vec<Vec<BigInt>> = quotient
        .matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let chi = Sturm::new(&berkowitz(&m));
    match threshold {
        Threshold::Rational(q) => Some(compare_largest_root_with_rational(&chi, q)),
        Threshold::MultipartiteMu(sizes) => {
            if sizes.iter().all(|&s| s == 0) {
                return Some(compare_largest_root_with_rational(&chi, &BigRational::zero()));
            }
            let p = Sturm::new(&multipartite_mu_poly(sizes));
            compare_with_largest_root(&chi, &p, approx, g.n())
        }
    }
}

fn largest_root_cmp_rational_raw(chi: &Sturm, q: &BigRational) -> Ordering {
    if chi.count_above(q) > 0 {
        Ordering::Greater
    } else if chi.is_root(q) {
        Ordering::Equal
    } else {
        Ordering::Less
    }
}

fn compare_largest_root_with_rational(chi: &Sturm, q: &BigRational) -> Ordering {
    // The empty graph has no quotient cells; its μ is 0 by convention.
    if chi.poly().degree().unwrap_or(0) == 0 {
        return BigRational::zero().cmp(q);
    }
    largest_root_cmp_rational_raw(chi, q)
}

/// Compares the largest root of `chi` with the largest root `λ*` of `p`.
fn compare_with_largest_root(chi: &Sturm, p: &Sturm, approx: f64, n: usize) -> Option<Ordering> {
    if chi.poly().degree().unwrap_or(0) == 0 {
        // μ = 0 against λ* ≥ 0.
        return Some(if p.count_above(&BigRational::zero()) > 0 {
            Ordering::Less
        } else {
            Ordering::Equal
        });
    }
    let (mut a, mut b) = isolate_largest_root(p, approx, n)?;
    let common = Sturm::new(&chi.poly().gcd(p.poly()));
    let lambda_is_root_of_chi = common.count_in(&a, &b) > 0;
    let two = BigRational::from_integer(BigInt::from(2));
    for _ in 0..4096 {
        let inside = chi.count_in(&a, &b);
        if inside == 0 || (inside == 1 && lambda_is_root_of_chi) {
            if chi.count_above(&b) > 0 {
                return Some(Ordering::Greater);
            }
            return Some(if inside == 1 {
                Ordering::Equal
            } else {
                Ordering::Less
            });
        }
        let mid = (&a + &b) / &two;
        if p.is_root(&mid) {
            return Some(largest_root_cmp_rational_raw(chi, &mid));
        }
        if p.count_above(&mid) == 1 {
            a = mid;
        } else {
            b = mid;
        }
    }
    None
}

/// Interval `(a, b]` containing the largest root of `p` and no other root.
fn isolate_largest_root(p: &Sturm, approx: f64, n: usize) -> Option<(BigRational, BigRational)> {
    let upper = BigRational::from_integer(BigInt::from(n as u64 + 1));
    let mut delta = 1e-7 * approx.abs().max(1.0);
    for _ in 0..64 {
        let lo = super::rational_from_f64(approx - delta)?;
        let hi = super::rational_from_f64(approx + delta)?;
        if p.count_above(&lo) == 1 && p.count_above(&hi) == 0 {
            return Some((lo, hi));
        }
        if delta > n as f64 + 1.0 {
            break;
        }
        delta *= 4.0;
    }
    // Fall back to halving a wide bracket.
    let mut lo = -upper.clone();
    let mut hi = upper;
    if p.count_above(&lo) == 0 || p.count_above(&hi) != 0 {
        return None;
    }
    let two = BigRational::from_integer(BigInt::from(2));
    for _ in 0..256 {
        if p.count_above(&lo) == 1 {
            return Some((lo, hi));
        }
        let mid = (&lo + &hi) / &two;
        if p.count_above(&mid) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    None
}
