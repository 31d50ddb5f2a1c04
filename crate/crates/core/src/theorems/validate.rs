//! Independent re-verification of checker certificates. Each certificate is
//! checked by direct adjacency tests and freshly derived bounds rather than
//! by re-running the search that produced it.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;

use super::checks::{book_requirement, kr_plus_sizes, lensmm_mu_limit};
use super::regime::default_c;
use super::{Certificate, LeNsmmReading, TheoremId, TheoremVerdict, Tri};
use crate::exact::{self, ceil_n_pow, floor_c_ln_n, PowExponent, Rational, Threshold};
use crate::graph::{turan_part_sizes, Graph};
use crate::spectral::{multipartite_mu_sizes, solver_tolerance, EXACT_MAX_CELLS};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().all(|&v| v < g.n())
        && vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && g.has_edge(u, v)))
}

/// `k`-cliques inside `pool`, by plain recursion over `has_edge`.
fn naive_cliques(g: &Graph, pool: &[usize], k: usize) -> u128 {
    fn rec(g: &Graph, pool: &[usize], k: usize, chosen: &mut Vec<usize>) -> u128 {
        if k == 0 {
            return 1;
        }
        let mut total = 0;
        for (i, &v) in pool.iter().enumerate() {
            if chosen.iter().all(|&u| g.has_edge(u, v)) {
                chosen.push(v);
                total += rec(g, &pool[i + 1..], k - 1, chosen);
                chosen.pop();
            }
        }
        total
    }
    rec(g, pool, k, &mut Vec::new())
}

fn common_neighbours(g: &Graph, base: &[usize]) -> Vec<usize> {
    (0..g.n()).filter(|&v| base.iter().all(|&u| u != v && g.has_edge(u, v))).collect()
}

fn pow_big(x: usize, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(x), e)
}

/// `A + I` power iteration in plain floats; the final vector is positive.
fn perron_vector(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let mut x = vec![1.0f64; n];
    for _ in 0..20 * n.max(50) {
        let mut y: Vec<f64> = (0..n).map(|v| x[v] + g.neighbors(v).map(|u| x[u]).sum::<f64>()).collect();
        let norm = y.iter().fold(0.0f64, |m, &t| m.max(t));
        y.iter_mut().for_each(|t| *t /= norm);
        x = y;
    }
    x
}

/// Rayleigh quotient (lower bound) and Collatz–Wielandt maximum (upper
/// bound) of the adjacency matrix at the same positive vector, each widened
/// by a rounding margin.
fn mu_bounds(g: &Graph) -> (f64, f64) {
    let n = g.n();
    if n == 0 {
        return (0.0, 0.0);
    }
    let x = perron_vector(g);
    let ax: Vec<f64> = (0..n).map(|v| g.neighbors(v).map(|u| x[u]).sum()).collect();
    let num: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
    let den: f64 = x.iter().map(|a| a * a).sum();
    let upper = (0..n).map(|v| ax[v] / x[v]).fold(0.0f64, f64::max);
    let margin = 1e-12 * (n as f64 + 1.0);
    (num / den - margin, upper + margin)
}

/// `μ(G) > t`, checked first by float bounds with a wide margin and then
/// exactly.
fn mu_greater(g: &Graph, thr: &Threshold, approx: f64, err: f64) -> Option<bool> {
    let (lo, hi) = mu_bounds(g);
    if lo > approx + err {
        return Some(true);
    }
    if hi < approx - err {
        return Some(false);
    }
    exact::exact_mu_compare(g, thr, approx, EXACT_MAX_CELLS).map(|o| o == Ordering::Greater)
}

fn turan_threshold(n: usize, r: usize) -> (Threshold, f64, f64) {
    let sizes = turan_part_sizes(n, r).expect("r >= 2");
    let approx = multipartite_mu_sizes(&sizes, 1e-12);
    (Threshold::MultipartiteMu(sizes), approx, solver_tolerance(1e-12, n) + 1e-9)
}

fn parse(s: &str, what: &str) -> Result<Rational, String> {
    exact::parse(s).ok_or_else(|| format!("{what}: not a rational: {s}"))
}

/// Re-verifies the certificate carried by a verdict against `g`. A verdict
/// without a certificate validates trivially.
pub fn validate_certificate(g: &Graph, v: &TheoremVerdict) -> Result<(), String> {
    let Some(cert) = &v.certificate else {
        return Ok(());
    };
    ensure(g.n() == v.n, || format!("verdict is for n = {}, graph has {}", v.n, g.n()))?;
    let r = v.r;
    let id = v.theorem;
    match cert {
        Certificate::Clique { vertices } => {
            ensure(id == TheoremId::FactSTT, || format!("clique certificate on {id}"))?;
            ensure(vertices.len() == r + 1, || format!("clique has {} vertices, want {}", vertices.len(), r + 1))?;
            ensure(is_clique(g, vertices), || format!("{vertices:?} is not a clique"))
        }
        Certificate::Joint { report, lhs, rhs } => {
            let e = match id {
                TheoremId::T1 => 2 * r + 4,
                TheoremId::T1_2 => 2 * r + 5,
                TheoremId::FactLeKd => r + 3,
                _ => return Err(format!("joint certificate on {id}")),
            };
            let (a, b) = report.witness_edge.ok_or("joint without witness edge")?;
            ensure(a < g.n() && b < g.n() && g.has_edge(a, b), || format!("({a}, {b}) is not an edge"))?;
            let pool = common_neighbours(g, &[a, b]);
            let count = naive_cliques(g, &pool, r - 1);
            ensure(count == report.size, || format!("recount {count} != reported {}", report.size))?;
            ensure(*lhs == format!("{count}"), || format!("lhs {lhs} != {count}"))?;
            let n = g.n();
            let bound = exact::to_string(&Rational::new(pow_big(n, r - 1), pow_big(r, e)));
            ensure(*rhs == bound, || format!("rhs {rhs} != {bound}"))?;
            ensure(BigInt::from(count) * pow_big(r, e) > pow_big(n, r - 1), || "joint bound fails".into())
        }
        Certificate::Embedding { spec, embedding } => {
            let c = v.params.c.unwrap_or_else(|| default_c(id, r));
            let n = g.n() as u64;
            let s = floor_c_ln_n(c, n);
            let last = match id {
                TheoremId::T2 => Some(ceil_n_pow(n, &PowExponent::OneMinusSqrt { k: 1, c })),
                TheoremId::T2_2 => Some(ceil_n_pow(n, &PowExponent::OneMinusSqrt { k: 2, c })),
                TheoremId::FactThv4 => {
                    let cq = exact::decimal_from_f64(c).ok_or("non-finite c")?;
                    Some(ceil_n_pow(n, &PowExponent::Rational(exact::one() - cq * pow_big(r, 3))))
                }
                TheoremId::T3 | TheoremId::T3_2 => None,
                _ => return Err(format!("embedding certificate on {id}")),
            };
            let want = kr_plus_sizes(r, s, last);
            ensure(*spec == want, || format!("spec {spec:?}, expected {want:?}"))?;
            let parts = &embedding.parts;
            ensure(parts.len() == want.len(), || "wrong number of parts".into())?;
            let mut seen = vec![false; g.n()];
            for (p, &size) in parts.iter().zip(&want) {
                ensure(p.len() == size, || format!("part {p:?} should have {size} vertices"))?;
                for &x in p {
                    ensure(x < g.n() && !seen[x], || format!("vertex {x} out of range or repeated"))?;
                    seen[x] = true;
                }
            }
            for i in 0..parts.len() {
                for j in i + 1..parts.len() {
                    for &x in &parts[i] {
                        for &y in &parts[j] {
                            ensure(g.has_edge(x, y), || format!("missing cross edge ({x}, {y})"))?;
                        }
                    }
                }
            }
            let (x, y) = embedding.extra_edge.ok_or("K_r^+ needs an extra edge")?;
            ensure(parts[0].contains(&x) && parts[0].contains(&y) && x != y, || "extra edge outside the first part".into())?;
            ensure(g.has_edge(x, y), || format!("extra edge ({x}, {y}) missing"))
        }
        Certificate::Stability { vertices, coloring } => {
            ensure(id.is_stability(), || format!("stability certificate on {id}"))?;
            ensure(v.branch == Some(super::Branch::B), || "stability certificate without branch (b)".into())?;
            ensure(vertices.windows(2).all(|w| w[0] < w[1]), || "vertices not strictly increasing".into())?;
            ensure(vertices.last().is_none_or(|&x| x < g.n()), || "vertex out of range".into())?;
            ensure(coloring.len() == vertices.len() && coloring.iter().all(|&c| c < r), || "bad colouring".into())?;
            for i in 0..vertices.len() {
                for j in i + 1..vertices.len() {
                    if g.has_edge(vertices[i], vertices[j]) {
                        ensure(coloring[i] != coloring[j], || format!("edge ({}, {}) is monochromatic", vertices[i], vertices[j]))?;
                    }
                }
            }
            let b = exact::decimal_from_f64(v.params.b.ok_or("stability verdict without b")?).ok_or("non-finite b")?;
            let (ca, cb) = v.params.stability.constants();
            // Integer form: (n − m)^3·den ≤ A^3·num·n^3.
            let (num, den) = (b.numer().clone(), b.denom().clone());
            let n = BigInt::from(g.n());
            let n3 = &n * &n * &n;
            let gap = BigInt::from(g.n() - vertices.len());
            ensure(&gap * &gap * &gap * &den <= BigInt::from(ca.pow(3)) * &num * &n3, || "G0 too small".into())?;
            let delta = vertices
                .iter()
                .map(|&x| vertices.iter().filter(|&&y| g.has_edge(x, y)).count())
                .min()
                .unwrap_or(0);
            // B^3·b·n^3 > ((r−1)n − rδ)^3 / r^3, times r^3·den.
            let slack = BigInt::from(r - 1) * &n - BigInt::from(r) * BigInt::from(delta);
            let lhs = BigInt::from(cb.pow(3)) * &num * &n3 * pow_big(r, 3);
            ensure(lhs > &slack * &slack * &slack * &den, || format!("min degree {delta} of G0 too small"))
        }
        Certificate::Inequality { lhs, relation, rhs } => {
            ensure(id == TheoremId::FactTsize, || format!("inequality certificate on {id}"))?;
            let n = v.n;
            let sizes = turan_part_sizes(n, r).expect("r >= 2");
            let sq: u128 = sizes.iter().map(|&s| (s * s) as u128).sum();
            let e = ((n * n) as u128 - sq) / 2;
            let l = BigInt::from(8 * r as u128 * e);
            let rr = BigInt::from(4 * (r as u128 - 1) * (n * n) as u128) - BigInt::from(r * r);
            ensure(*lhs == format!("{l}") && *rhs == format!("{rr}"), || "sides do not match".into())?;
            ensure(*relation == super::Relation::Ge && l >= rr, || "inequality fails".into())
        }
        Certificate::Book { report, required } => {
            ensure(id == TheoremId::BookRemark, || format!("book certificate on {id}"))?;
            let base = report.base_clique.as_deref().ok_or("book without base clique")?;
            ensure(base.len() == r && is_clique(g, base), || format!("{base:?} is not an r-clique"))?;
            let pages = common_neighbours(g, base).len();
            ensure(pages == report.size, || format!("book has {pages} pages, reported {}", report.size))?;
            let want = book_requirement(v.params.c.unwrap_or(0.0), g.n());
            ensure(*required == want, || format!("required {required} != {want}"))?;
            ensure(pages as u64 >= want, || "book too small".into())
        }
        Certificate::MuExceedsTuran { lower, .. } => {
            ensure(id == TheoremId::EdgeImpliesSpectral, || format!("spectral certificate on {id}"))?;
            parse(lower, "lower")?;
            let (thr, approx, err) = turan_threshold(g.n(), r);
            ensure(mu_greater(g, &thr, approx, err) == Some(true), || "mu(G) does not exceed mu(T_r(n))".into())
        }
        Certificate::MuAtMost { bound, .. } => {
            ensure(id == TheoremId::FactLeNSMM && v.conclusion == Tri::Yes, || format!("mu bound certificate on {id}"))?;
            let q = parse(bound, "bound")?;
            let order = match v.params.lensmm {
                LeNsmmReading::AsStated => r,
                LeNsmmReading::CliqueOrderPlusOne => r + 1,
            };
            let all: Vec<usize> = (0..g.n()).collect();
            let k = naive_cliques(g, &all, order);
            let want = lensmm_mu_limit(k, g.n(), r);
            ensure(q == want, || format!("bound {bound} != {}", exact::to_string(&want)))?;
            let approx = exact::to_f64(&q);
            let err = 1e-9 * (1.0 + approx.abs());
            ensure(mu_greater(g, &Threshold::Rational(q), approx, err) == Some(false), || "mu(G) exceeds the bound".into())
        }
    }
}
