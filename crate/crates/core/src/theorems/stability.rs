//! Induced r-partite subgraphs of large order and minimum degree.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::exact::{self, Rational};
use crate::graph::Graph;
use crate::subgraph::{is_r_partite_capped, Coloring};

/// Thresholds of the stability condition for a graph of order `n`:
/// `|G_0| ≥ (1 − A·b^{1/3})n` and `δ(G_0) > (1 − 1/r − B·b^{1/3})n`, with
/// degrees taken inside `G_0` and compared against the full order `n`.
///
/// Cube roots are avoided by cubing both sides, so both conditions reduce
/// to integer thresholds on the subset order and the minimum degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityBounds {
    pub n: usize,
    pub r: usize,
    pub b: Rational,
    pub order_coef: u32,
    pub degree_coef: u32,
    min_order: usize,
    min_degree: usize,
}

impl StabilityBounds {
    pub fn new(n: usize, r: usize, b: &Rational, (order_coef, degree_coef): (u32, u32)) -> Self {
        let mut s = Self { n, r, b: b.clone(), order_coef, degree_coef, min_order: 0, min_degree: 0 };
        s.min_order = (0..=n).find(|&m| s.order_ok(m)).unwrap_or(n + 1).max(1);
        s.min_degree = (0..=n).find(|&d| s.degree_ok(d)).unwrap_or(n + 1);
        s
    }

    /// `(n − m)^3 ≤ A^3·b·n^3`.
    pub fn order_ok(&self, m: usize) -> bool {
        if m > self.n {
            return false;
        }
        let gap = exact::int(self.n - m);
        let a = exact::int(self.order_coef);
        let n = exact::int(self.n);
        exact::pow(&gap, 3) <= exact::pow(&a, 3) * &self.b * exact::pow(&n, 3)
    }

    /// `B·b^{1/3}·n > (1 − 1/r)n − d`.
    pub fn degree_ok(&self, d: usize) -> bool {
        let n = exact::int(self.n);
        let slack = (exact::one() - exact::frac(1, self.r as i64)) * &n - exact::int(d);
        if slack.is_negative() {
            return true;
        }
        let bcoef = exact::int(self.degree_coef);
        exact::pow(&bcoef, 3) * &self.b * exact::pow(&n, 3) > exact::pow(&slack, 3)
    }

    /// Least admissible order of `G_0` (at least 1).
    pub fn min_order(&self) -> usize {
        self.min_order
    }

    /// Least admissible minimum degree of `G_0`; `n + 1` if none is.
    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    /// `(1 − A·b^{1/3})n` as a float, for reports.
    pub fn order_threshold(&self) -> f64 {
        (1.0 - self.order_coef as f64 * libm::cbrt(exact::to_f64(&self.b))) * self.n as f64
    }

    /// `(1 − 1/r − B·b^{1/3})n` as a float, for reports.
    pub fn degree_threshold(&self) -> f64 {
        let r = self.r as f64;
        (1.0 - 1.0 / r - self.degree_coef as f64 * libm::cbrt(exact::to_f64(&self.b))) * self.n as f64
    }

    /// Checks a candidate `G_0` given as a sorted vertex list.
    pub fn admits(&self, g: &Graph, vertices: &[usize]) -> bool {
        vertices.len() >= self.min_order
            && vertices.iter().all(|&v| vertices.iter().filter(|&&u| g.has_edge(u, v)).count() >= self.min_degree)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessSearch {
    /// Sorted vertex set of `G_0` and a proper colouring aligned with it.
    Found { vertices: Vec<usize>, coloring: Vec<usize> },
    NotFound { cap_hit: bool },
}

/// Greedy peeling: while the current induced subgraph is not
/// `r`-colourable, drop the vertex with the most same-colour neighbours
/// under a best-effort colouring (ties by index); then peel vertices whose
/// degree misses the threshold. Sound but incomplete: `NotFound` is not a
/// refutation.
pub fn find_stability_witness(g: &Graph, bounds: &StabilityBounds, cap: u64) -> WitnessSearch {
    let r = bounds.r;
    let mut alive: Vec<usize> = (0..g.n()).collect();
    let mut cap_hit = false;
    let coloring = loop {
        if alive.len() < bounds.min_order() {
            return WitnessSearch::NotFound { cap_hit };
        }
        let h = g.induced_subgraph(&alive).expect("distinct in-range vertices");
        let attempt = is_r_partite_capped(&h, r, cap);
        if let Coloring::Colorable(c) = attempt {
            break c;
        }
        cap_hit |= attempt == Coloring::CapExhausted;
        let guess = best_effort_coloring(&h, r);
        let conflicts: Vec<usize> =
            (0..h.n()).map(|v| h.neighbors(v).filter(|&u| guess[u] == guess[v]).count()).collect();
        let worst = (0..h.n()).max_by(|&a, &b| conflicts[a].cmp(&conflicts[b]).then(b.cmp(&a))).unwrap();
        if conflicts[worst] == 0 {
            // The heuristic colouring is proper even though the exact search gave up.
            break guess;
        }
        alive.remove(worst);
    };

    // Peel to the largest subset whose induced degrees all meet the bound.
    let mut keep = vec![true; alive.len()];
    let h = g.induced_subgraph(&alive).expect("distinct in-range vertices");
    let mut deg: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    let mut stack: Vec<usize> = (0..h.n()).filter(|&v| deg[v] < bounds.min_degree()).collect();
    for &v in &stack {
        keep[v] = false;
    }
    while let Some(v) = stack.pop() {
        for u in h.neighbors(v) {
            if keep[u] {
                deg[u] -= 1;
                if deg[u] < bounds.min_degree() {
                    keep[u] = false;
                    stack.push(u);
                }
            }
        }
    }
    let (vertices, coloring): (Vec<usize>, Vec<usize>) =
        (0..h.n()).filter(|&i| keep[i]).map(|i| (alive[i], coloring[i])).unzip();
    if vertices.len() >= bounds.min_order() {
        WitnessSearch::Found { vertices, coloring }
    } else {
        WitnessSearch::NotFound { cap_hit }
    }
}

/// Colours vertices in descending degree order with the colour that has the
/// fewest already-coloured neighbours (ties to the lowest colour).
fn best_effort_coloring(h: &Graph, r: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by(|&a, &b| h.degree(b).cmp(&h.degree(a)).then(a.cmp(&b)));
    let mut color = vec![usize::MAX; h.n()];
    let mut clash = vec![0usize; r];
    for v in order {
        clash.iter_mut().for_each(|x| *x = 0);
        for u in h.neighbors(v) {
            if color[u] != usize::MAX {
                clash[color[u]] += 1;
            }
        }
        color[v] = (0..r).min_by_key(|&c| (clash[c], c)).unwrap();
    }
    color
}

/// Exhaustive search over vertex subsets, largest first, for graphs with at
/// most 20 vertices. `Some(None)` means no admissible `G_0` exists; `None`
/// means a colouring search hit its cap.
pub fn exhaustive_stability_witness(
    g: &Graph,
    bounds: &StabilityBounds,
    cap: u64,
) -> Option<Option<(Vec<usize>, Vec<usize>)>> {
    let n = g.n();
    assert!(n <= 20, "exhaustive stability search is limited to n <= 20");
    let mut cap_hit = false;
    for size in (bounds.min_order()..=n).rev() {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let vertices: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !bounds.admits(g, &vertices) {
                continue;
            }
            let h = g.induced_subgraph(&vertices).expect("distinct in-range vertices");
            match is_r_partite_capped(&h, bounds.r, cap) {
                Coloring::Colorable(c) => return Some(Some((vertices, c))),
                Coloring::CapExhausted => cap_hit = true,
                Coloring::NotColorable => {}
            }
        }
    }
    if cap_hit {
        None
    } else {
        Some(None)
    }
}

/// `b` as an exact rational; `b = 0` is allowed.
pub(crate) fn b_rational(b: f64) -> Rational {
    exact::decimal_from_f64(b).unwrap_or_else(|| Rational::from_integer(BigInt::from(0)))
}
