#![allow(dead_code)]

use specsat_core::Graph;

/// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_max_eigenvalue(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    if n == 0 {
        return 0.0;
    }
    for _ in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).fold(f64::NEG_INFINITY, f64::max)
}

pub fn adjacency(g: &Graph) -> Vec<Vec<f64>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| if g.has_edge(u, v) { 1.0 } else { 0.0 }).collect()).collect()
}

pub fn mu_oracle(g: &Graph) -> f64 {
    jacobi_max_eigenvalue(adjacency(g))
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).filter(move |m| m.count_ones() as usize == k).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

pub fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Number of `r`-subsets that are cliques.
pub fn naive_cliques(g: &Graph, r: usize) -> u128 {
    if r > g.n() {
        return 0;
    }
    subsets(g.n(), r).filter(|s| is_clique(g, s)).count() as u128
}

/// Maximum over edges of the number of `r`-clique subsets containing both
/// endpoints, with the lexicographically least maximizing edge.
pub fn naive_joint(g: &Graph, r: usize) -> (u128, Option<(usize, usize)>) {
    let mut best = (0u128, None);
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                continue;
            }
            let c = subsets(g.n(), r).filter(|s| s.contains(&u) && s.contains(&v) && is_clique(g, s)).count() as u128;
            if c > best.0 {
                best = (c, Some((u, v)));
            }
        }
    }
    best
}

/// Maximum over `r`-cliques of the number of `(r+1)`-cliques containing it.
pub fn naive_book(g: &Graph, r: usize) -> usize {
    if r > g.n() {
        return 0;
    }
    subsets(g.n(), r)
        .filter(|s| is_clique(g, s))
        .map(|s| (0..g.n()).filter(|v| !s.contains(v) && s.iter().all(|&u| g.has_edge(u, *v))).count())
        .max()
        .unwrap_or(0)
}
