//! Exact r-colourability.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

pub const DEFAULT_COLORING_CAP: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "coloring", rename_all = "snake_case")]
pub enum Coloring {
    /// `coloring[v]` is the part of vertex `v`, in `0..r`.
    Colorable(Vec<usize>),
    NotColorable,
    CapExhausted,
}

impl Coloring {
    pub fn colors(&self) -> Option<&[usize]> {
        match self {
            Self::Colorable(c) => Some(c),
            _ => None,
        }
    }
}

pub fn is_proper_coloring(g: &Graph, coloring: &[usize], r: usize) -> bool {
    coloring.len() == g.n() && coloring.iter().all(|&c| c < r) && g.edges().all(|(u, v)| coloring[u] != coloring[v])
}

/// [`is_r_partite_capped`] with the default node cap.
pub fn is_r_partite(g: &Graph, r: usize) -> Coloring {
    is_r_partite_capped(g, r, DEFAULT_COLORING_CAP)
}

/// Exact test for a proper `r`-colouring. BFS for `r = 2`; DSatur
/// backtracking for `r >= 3`, giving up after `cap` colour assignments.
pub fn is_r_partite_capped(g: &Graph, r: usize, cap: u64) -> Coloring {
    let n = g.n();
    if n == 0 {
        return Coloring::Colorable(Vec::new());
    }
    match r {
        0 => Coloring::NotColorable,
        1 => {
            if g.edge_count() == 0 {
                Coloring::Colorable(vec![0; n])
            } else {
                Coloring::NotColorable
            }
        }
        2 => bipartition(g),
        _ if r >= n => Coloring::Colorable((0..n).collect()),
        _ => Dsatur::new(g, r, cap).run(),
    }
}

fn bipartition(g: &Graph) -> Coloring {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s] != usize::MAX {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if color[v] == usize::MAX {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return Coloring::NotColorable;
                }
            }
        }
    }
    Coloring::Colorable(color)
}

struct CapHit;

struct Dsatur<'g> {
    g: &'g Graph,
    r: usize,
    cap: u64,
    nodes: u64,
    color: Vec<usize>,
    /// `blocked[v * r + c]`: coloured neighbours of `v` with colour `c`.
    blocked: Vec<u32>,
    saturation: Vec<usize>,
}

impl<'g> Dsatur<'g> {
    fn new(g: &'g Graph, r: usize, cap: u64) -> Self {
        let n = g.n();
        Self { g, r, cap, nodes: 0, color: vec![usize::MAX; n], blocked: vec![0; n * r], saturation: vec![0; n] }
    }

    fn run(mut self) -> Coloring {
        match self.search(0) {
            Ok(true) => Coloring::Colorable(self.color),
            Ok(false) => Coloring::NotColorable,
            Err(CapHit) => Coloring::CapExhausted,
        }
    }

    /// Uncoloured vertex of maximum saturation, then maximum degree, then
    /// least index.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..self.g.n() {
            if self.color[v] != usize::MAX {
                continue;
            }
            let key = (self.saturation[v], self.g.degree(v));
            if best.is_none_or(|(s, d, _)| key > (s, d)) {
                best = Some((key.0, key.1, v));
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn assign(&mut self, v: usize, c: usize, on: bool) {
        self.color[v] = if on { c } else { usize::MAX };
        let r = self.r;
        for u in self.g.neighbors(v) {
            let slot = &mut self.blocked[u * r + c];
            if on {
                *slot += 1;
                if *slot == 1 {
                    self.saturation[u] += 1;
                }
            } else {
                *slot -= 1;
                if *slot == 0 {
                    self.saturation[u] -= 1;
                }
            }
        }
    }

    /// `used` colours have appeared so far; trying only one fresh colour
    /// removes colour-permutation symmetry.
    fn search(&mut self, used: usize) -> Result<bool, CapHit> {
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        if self.saturation[v] == self.r {
            return Ok(false);
        }
        for c in 0..self.r.min(used + 1) {
            if self.blocked[v * self.r + c] > 0 {
                continue;
            }
            if self.nodes >= self.cap {
                return Err(CapHit);
            }
            self.nodes += 1;
            self.assign(v, c, true);
            if self.search(used.max(c + 1))? {
                return Ok(true);
            }
            self.assign(v, c, false);
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_turan;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(is_r_partite(&cycle(5), 2), Coloring::NotColorable);
        let c = is_r_partite(&cycle(5), 3);
        assert!(is_proper_coloring(&cycle(5), c.colors().unwrap(), 3));
        assert_eq!(is_r_partite(&Graph::complete(4), 3), Coloring::NotColorable);
        assert_eq!(is_r_partite(&Graph::empty(3), 1), Coloring::Colorable(vec![0, 0, 0]));
        assert_eq!(is_r_partite(&cycle(4), 1), Coloring::NotColorable);
    }

    #[test]
    fn turan_coloring_recovers_parts() {
        let g = make_turan(7, 3).unwrap();
        let c = is_r_partite(&g, 3);
        let c = c.colors().unwrap();
        let blocks = [0..3, 3..5, 5..7];
        for b in blocks {
            assert!(b.clone().all(|v| c[v] == c[b.start]));
        }
        assert!(c[0] != c[3] && c[3] != c[5] && c[0] != c[5]);
    }

    #[test]
    fn cap_is_reported() {
        // K_6 is not 5-colourable, but DSatur needs several assignments to see it
        assert_eq!(is_r_partite_capped(&Graph::complete(6), 5, 2), Coloring::CapExhausted);
        assert_eq!(is_r_partite_capped(&Graph::complete(6), 5, 1000), Coloring::NotColorable);
    }
}
