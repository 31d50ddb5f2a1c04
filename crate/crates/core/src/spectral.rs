//! Largest adjacency eigenvalue `μ(G)` and certified comparisons.
//!
//! [`spectral_radius`] runs power iteration on `A + I` separately on each
//! connected component, starting from the all-ones vector. The shift makes
//! the Perron value strictly dominant in absolute value on a connected
//! component, including bipartite ones. A connected graph with a small
//! equitable quotient is iterated on the quotient instead, which gives
//! the same iterates at a fraction of the cost.
//!
//! The reported `residual` is `max_i |(Ax)_i − λx_i| / x_i`, i.e. the
//! ∞-norm of `Ax − λx` for `x` scaled to unit minimum entry, plus a bound on
//! the floating-point error of the product. For a positive vector on a
//! connected component the Collatz–Wielandt inequalities give
//! `min_i (Ax)_i/x_i ≤ μ ≤ max_i (Ax)_i/x_i`, so `μ(G)` always lies in
//! `[value − residual, value + residual]`, converged or not.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::exact::{self, Threshold};
use crate::graph::{turan_part_sizes, Graph, PartSpec};
use crate::Error;

pub const DEFAULT_TOL: f64 = 1e-10;
/// Tolerance for the second, tighter numeric pass of a certified comparison.
pub const REFINED_TOL: f64 = 1e-13;
/// Largest equitable quotient handed to the exact comparison.
pub const EXACT_MAX_CELLS: usize = 64;

/// Connected graphs at least this large are first tried on their
/// equitable quotient, when it has at most [`QUOTIENT_MAX_CELLS`] cells.
const QUOTIENT_MIN_N: usize = 32;
const QUOTIENT_MAX_CELLS: usize = 32;
/// Iterations without halving the residual bound before a run counts as stalled.
const STALL_ITERS: usize = 500;

pub fn default_max_iter(n: usize) -> usize {
    100 * n + 1000
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralEstimate {
    pub value: f64,
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl SpectralEstimate {
    pub fn lower(&self) -> f64 {
        self.value - self.residual
    }

    pub fn upper(&self) -> f64 {
        self.value + self.residual
    }
}

struct Component {
    value: f64,
    radius: f64,
    iterations: usize,
    converged: bool,
}

/// Neumaier-compensated sum of `x` over the set bits of `row`.
#[inline]
fn row_sum(row: &[u64], x: &[f64]) -> f64 {
    let (mut s, mut comp) = (0.0f64, 0.0f64);
    for j in crate::bitset::ones(row) {
        let v = x[j];
        let t = s + v;
        if libm::fabs(s) >= libm::fabs(v) {
            comp += (s - t) + v;
        } else {
            comp += (v - t) + s;
        }
        s = t;
    }
    s + comp
}

/// Shifted power iteration over the indices `idx`. `product(v, x)` is
/// `(Mx)_v`, `weight(v)` the multiplicity of `v` in the Rayleigh quotient
/// and `degree(v)` the row sum of `M`.
fn iterate(
    len: usize,
    idx: &[usize],
    product: impl Fn(usize, &[f64]) -> f64,
    weight: impl Fn(usize) -> f64,
    degree: impl Fn(usize) -> f64,
    tol: f64,
    max_iter: usize,
) -> Component {
    let eps = f64::EPSILON;
    let stall = STALL_ITERS.max(len);
    let mut x = vec![0.0f64; len];
    for &v in idx {
        x[v] = 1.0;
    }
    let mut ax = vec![0.0f64; len];
    let mut prev = f64::NAN;
    let mut last = Component { value: 0.0, radius: f64::INFINITY, iterations: 0, converged: false };
    let (mut best_radius, mut best_at) = (f64::INFINITY, 0usize);
    for it in 1..=max_iter.max(1) {
        let (mut num, mut den) = (0.0f64, 0.0f64);
        for &v in idx {
            ax[v] = product(v, &x);
            let w = weight(v);
            num += w * x[v] * ax[v];
            den += w * x[v] * x[v];
        }
        let lambda = num / den;
        let mut radius = 0.0f64;
        let mut xmax = 0.0f64;
        for &v in idx {
            let d = degree(v);
            let err = (4.0 + 4.0 * d * eps) * eps * ax[v] + 2.0 * eps * lambda * x[v];
            let r = (libm::fabs(ax[v] - lambda * x[v]) + err) / x[v];
            radius = radius.max(r);
            let y = ax[v] + x[v];
            xmax = xmax.max(y);
        }
        // λ cannot settle below a few ulps, whatever `tol` asks for.
        let step_tol = tol.max(16.0 * eps * libm::fabs(lambda));
        let converged = libm::fabs(lambda - prev) < step_tol && radius <= 10.0 * tol;
        last = Component { value: lambda, radius, iterations: it, converged };
        if converged || !(radius.is_finite()) {
            break;
        }
        if radius < 0.5 * best_radius {
            best_radius = radius;
            best_at = it;
        } else if it - best_at > stall {
            break;
        }
        prev = lambda;
        for &v in idx {
            x[v] = (ax[v] + x[v]) / xmax;
        }
    }
    last
}

fn component_radius(g: &Graph, comp: &[usize], tol: f64, max_iter: usize) -> Component {
    if comp.len() == 1 {
        return Component { value: 0.0, radius: 0.0, iterations: 0, converged: true };
    }
    iterate(
        g.n(),
        comp,
        |v, x| row_sum(g.row(v), x),
        |_| 1.0,
        |v| g.degree(v) as f64,
        tol,
        max_iter,
    )
}

/// Same iteration on the equitable quotient of a connected graph. Its
/// iterates are those of the graph, constant on cells, and `μ(G)` is the
/// Perron root of the quotient.
fn quotient_radius(q: &exact::EquitableQuotient, tol: f64, max_iter: usize) -> Component {
    let cells = q.matrix.len();
    let mut size = vec![0.0f64; cells];
    for &c in &q.cell_of {
        size[c] += 1.0;
    }
    let rows: Vec<Vec<f64>> = q.matrix.iter().map(|r| r.iter().map(|&b| b as f64).collect()).collect();
    let deg: Vec<f64> = q.matrix.iter().map(|r| r.iter().sum::<u64>() as f64).collect();
    let idx: Vec<usize> = (0..cells).collect();
    iterate(
        cells,
        &idx,
        |i, x| {
            let (mut s, mut comp) = (0.0f64, 0.0f64);
            for (b, xv) in rows[i].iter().zip(x) {
                let v = b * xv;
                let t = s + v;
                if libm::fabs(s) >= libm::fabs(v) {
                    comp += (s - t) + v;
                } else {
                    comp += (v - t) + s;
                }
                s = t;
            }
            s + comp
        },
        |i| size[i],
        |i| deg[i],
        tol,
        max_iter,
    )
}

/// `μ(G)` by shifted power iteration, one connected component at a time.
/// `n ≤ 1` gives `0`.
pub fn spectral_radius(g: &Graph, tol: f64, max_iter: usize) -> SpectralEstimate {
    assert!(tol > 0.0, "tolerance must be positive");
    let mut iterations = 0;
    let mut converged = true;
    let mut best = 0.0f64;
    let (mut lo_max, mut hi_max) = (0.0f64, 0.0f64);
    let comps = g.components();
    let quotient = if comps.len() == 1 && g.n() >= QUOTIENT_MIN_N {
        exact::equitable_quotient(g, QUOTIENT_MAX_CELLS)
    } else {
        None
    };
    if let Some(q) = quotient {
        let c = quotient_radius(&q, tol, max_iter);
        let value = c.value.max(0.0);
        return SpectralEstimate { value, residual: c.radius, iterations: c.iterations, converged: c.converged };
    }
    for comp in comps {
        let c = component_radius(g, &comp, tol, max_iter);
        iterations += c.iterations;
        converged &= c.converged;
        best = best.max(c.value);
        lo_max = lo_max.max(c.value - c.radius);
        hi_max = hi_max.max(c.value + c.radius);
    }
    let value = best.max(0.0);
    let residual = (hi_max - value).max(value - lo_max).max(0.0);
    SpectralEstimate { value, residual, iterations, converged }
}

pub fn spectral_radius_default(g: &Graph) -> SpectralEstimate {
    spectral_radius(g, DEFAULT_TOL, default_max_iter(g.n()))
}

/// `Σ m·s / (λ + s)` over `(s, m)`: part size and its multiplicity.
fn secular(groups: &[(f64, f64)], lambda: f64) -> f64 {
    groups.iter().map(|&(s, m)| m * s / (lambda + s)).sum()
}

/// Largest root of `Σ s_i/(λ + s_i) = 1` by bisection; zero sizes are
/// ignored. The function is strictly decreasing on `λ ≥ 0`.
pub fn multipartite_mu_sizes(sizes: &[usize], tol: f64) -> f64 {
    assert!(tol > 0.0, "tolerance must be positive");
    let n: usize = sizes.iter().sum();
    let mut sorted: Vec<usize> = sizes.iter().copied().filter(|&s| s > 0).collect();
    let r = sorted.len();
    if r <= 1 {
        return 0.0;
    }
    sorted.sort_unstable();
    let mut groups: Vec<(f64, f64)> = Vec::new();
    for s in sorted {
        match groups.last_mut() {
            Some((t, m)) if *t == s as f64 => *m += 1.0,
            _ => groups.push((s as f64, 1.0)),
        }
    }
    let nf = n as f64;
    let mut lo = ((1.0 - 1.0 / r as f64) * nf - 1.0).max(0.0);
    if secular(&groups, lo) < 1.0 {
        lo = 0.0;
    }
    let mut hi = nf;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if secular(&groups, mid) > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `μ(K(s_1, ..., s_r))` from the equitable-partition equation.
pub fn multipartite_mu_exact(spec: &PartSpec, tol: f64) -> f64 {
    multipartite_mu_sizes(spec.sizes(), tol)
}

/// Error bound carried by a bisection result at tolerance `tol` on `n`
/// vertices, covering rounding in the secular function.
pub fn solver_tolerance(tol: f64, n: usize) -> f64 {
    tol.max(64.0 * f64::EPSILON * (n as f64 + 1.0))
}

/// `μ(T_r(n))`.
pub fn turan_mu(n: usize, r: usize, tol: f64) -> Result<f64, Error> {
    Ok(multipartite_mu_sizes(&turan_part_sizes(n, r)?, tol))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    GreaterCertified,
    NotGreaterCertified,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralComparison {
    pub mu_g: SpectralEstimate,
    pub mu_turan: f64,
    pub solver_tolerance: f64,
    pub verdict: Verdict,
}

/// Interval decision of `μ > t` for `μ ∈ est`, `t ∈ [threshold ± err]`.
pub fn interval_verdict(est: &SpectralEstimate, threshold: f64, err: f64) -> Verdict {
    if !est.converged {
        Verdict::Inconclusive
    } else if est.lower() > threshold + err {
        Verdict::GreaterCertified
    } else if est.upper() < threshold - err {
        Verdict::NotGreaterCertified
    } else {
        Verdict::Inconclusive
    }
}

/// Numeric comparison of `μ(G)` with `μ(T_r(n))`, `n = |G|`.
pub fn compare_mu_to_turan(g: &Graph, r: usize, tol: f64) -> Result<SpectralComparison, Error> {
    if r < 2 {
        return Err(Error::InvalidParameter("spectral comparison needs r >= 2"));
    }
    if g.n() == 0 {
        return Err(Error::InvalidParameter("spectral comparison needs a non-empty graph"));
    }
    let mu_g = spectral_radius(g, tol, default_max_iter(g.n()));
    Ok(compare_estimate_to_turan(mu_g, g.n(), r, tol))
}

pub fn compare_estimate_to_turan(mu_g: SpectralEstimate, n: usize, r: usize, tol: f64) -> SpectralComparison {
    let mu_turan = turan_mu(n, r, tol).expect("r >= 2");
    let solver_tolerance = solver_tolerance(tol, n);
    let verdict = interval_verdict(&mu_g, mu_turan, solver_tolerance);
    SpectralComparison { mu_g, mu_turan, solver_tolerance, verdict }
}

/// Which pass settled a certified comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Resolution {
    /// Decided by the first numeric pass.
    Numeric,
    /// Decided by power iteration at [`REFINED_TOL`].
    Refined,
    /// Decided by the exact equitable-quotient comparison.
    Exact,
    /// Still undecided.
    Unresolved,
}

/// Outcome of [`certify_mu_exceeds`].
#[derive(Clone, Debug, PartialEq)]
pub struct Certified {
    /// `Some(true)`: `μ(G) > t`; `Some(false)`: `μ(G) ≤ t`.
    pub exceeds: Option<bool>,
    pub resolution: Resolution,
    /// The numeric estimate from the last numeric pass.
    pub estimate: SpectralEstimate,
    /// Floating value of the threshold, for reports.
    pub threshold: f64,
    /// Exact sign of `μ(G) − t`, when the exact pass ran.
    pub exact_order: Option<Ordering>,
}

/// What the comparison is against, plus its floating value.
#[derive(Clone, Debug)]
pub struct MuThreshold {
    pub exact: Threshold,
    pub approx: f64,
    pub approx_err: f64,
}

impl MuThreshold {
    pub fn turan(n: usize, r: usize, tol: f64) -> Result<Self, Error> {
        let sizes = turan_part_sizes(n, r)?;
        let approx = multipartite_mu_sizes(&sizes, tol);
        Ok(Self { exact: Threshold::MultipartiteMu(sizes), approx, approx_err: solver_tolerance(tol, n) })
    }

    pub fn rational(q: BigRational) -> Self {
        let approx = exact::to_f64(&q);
        let approx_err = 4.0 * f64::EPSILON * libm::fabs(approx);
        Self { exact: Threshold::Rational(q), approx, approx_err }
    }
}

fn numeric_exceeds(est: &SpectralEstimate, thr: &MuThreshold) -> Option<bool> {
    if !est.converged {
        return None;
    }
    if let Threshold::Rational(q) = &thr.exact {
        // Exact comparison of the interval endpoints with q.
        let lo = exact::rational_from_f64(est.lower())?;
        let hi = exact::rational_from_f64(est.upper())?;
        return if lo > *q {
            Some(true)
        } else if hi < *q {
            Some(false)
        } else {
            None
        };
    }
    match interval_verdict(est, thr.approx, thr.approx_err) {
        Verdict::GreaterCertified => Some(true),
        Verdict::NotGreaterCertified => Some(false),
        Verdict::Inconclusive => None,
    }
}

/// Decides `μ(G) > t`: numerically at `tol` (reusing `first` when given),
/// then at [`REFINED_TOL`], then exactly through the equitable quotient.
pub fn certify_mu_exceeds(
    g: &Graph,
    thr: &MuThreshold,
    tol: f64,
    first: Option<SpectralEstimate>,
) -> Certified {
    let est = first.unwrap_or_else(|| spectral_radius(g, tol, default_max_iter(g.n())));
    let mut out = Certified {
        exceeds: numeric_exceeds(&est, thr),
        resolution: Resolution::Numeric,
        estimate: est,
        threshold: thr.approx,
        exact_order: None,
    };
    if out.exceeds.is_some() {
        return out;
    }
    if tol > REFINED_TOL {
        let est = spectral_radius(g, REFINED_TOL, 4 * default_max_iter(g.n()));
        out.estimate = est;
        if let Some(e) = numeric_exceeds(&est, thr) {
            out.exceeds = Some(e);
            out.resolution = Resolution::Refined;
            return out;
        }
    }
    match exact::exact_mu_compare(g, &thr.exact, thr.approx, EXACT_MAX_CELLS) {
        Some(ord) => {
            out.exceeds = Some(ord == Ordering::Greater);
            out.exact_order = Some(ord);
            out.resolution = Resolution::Exact;
        }
        None => out.resolution = Resolution::Unresolved,
    }
    out
}
