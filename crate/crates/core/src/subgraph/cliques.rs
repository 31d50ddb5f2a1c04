//! Clique counts, joints and books by ordered bitset expansion.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::bitset::{self, clear_through};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCount {
    pub r: usize,
    /// Exact count of `r`-cliques. Counting enumerates `(r−1)`-cliques one
    /// by one, so a run that finishes never gets near the `u128` limit.
    #[serde(with = "crate::count_serde")]
    pub count: u128,
}

/// Per-edge contribution to a joint.
pub type EdgeCount = ((usize, usize), u128);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JointReport {
    pub r: usize,
    pub witness_edge: Option<(usize, usize)>,
    #[serde(with = "crate::count_serde")]
    pub size: u128,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::count_serde::edge_counts")]
    pub per_edge: Option<Vec<EdgeCount>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BookReport {
    pub r: usize,
    pub base_clique: Option<Vec<usize>>,
    pub size: usize,
}

/// Counts `k`-cliques inside a candidate set, each once, by extending only
/// with higher-numbered common neighbours.
pub(crate) struct CliqueCounter<'g> {
    g: &'g Graph,
    scratch: Vec<Vec<u64>>,
}

impl<'g> CliqueCounter<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        Self { g, scratch: Vec::new() }
    }

    pub(crate) fn count_in(&mut self, cand: &[u64], k: usize) -> u128 {
        match k {
            0 => 1,
            1 => bitset::count(cand) as u128,
            _ => {
                let stride = self.g.stride();
                while self.scratch.len() < k {
                    self.scratch.push(vec![0; stride]);
                }
                self.count_rec(cand, k, 0)
            }
        }
    }

    fn count_rec(&mut self, cand: &[u64], k: usize, depth: usize) -> u128 {
        let g = self.g;
        if k == 2 {
            let mut total = 0u128;
            for v in bitset::ones(cand) {
                let buf = &mut self.scratch[depth];
                bitset::and_into(buf, cand, g.row(v));
                clear_through(buf, v);
                total += bitset::count(buf) as u128;
            }
            return total;
        }
        let mut total = 0u128;
        let mut next = core::mem::take(&mut self.scratch[depth]);
        for v in bitset::ones(cand) {
            bitset::and_into(&mut next, cand, g.row(v));
            clear_through(&mut next, v);
            if bitset::count(&next) >= k - 1 {
                total += self.count_rec(&next, k - 1, depth + 1);
            }
        }
        self.scratch[depth] = next;
        total
    }
}

/// `k_r(G)`. `r = 0` counts the empty clique once.
pub fn count_cliques(g: &Graph, r: usize) -> CliqueCount {
    let all = crate::bitset::VertexSet::full(g.n());
    let count = if r > g.n() { 0 } else { CliqueCounter::new(g).count_in(all.words(), r) };
    CliqueCount { r, count }
}

/// Lexicographically least `r`-clique, if any.
pub fn clique_exists(g: &Graph, r: usize) -> Option<Vec<usize>> {
    if r > g.n() {
        return None;
    }
    let mut clique = Vec::with_capacity(r);
    let all = crate::bitset::VertexSet::full(g.n());
    find_clique(g, all.words(), r, &mut clique).then_some(clique)
}

fn find_clique(g: &Graph, cand: &[u64], need: usize, clique: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    if bitset::count(cand) < need {
        return false;
    }
    if need >= 3 && greedy_colors(g, cand, need) < need {
        return false;
    }
    let mut next = vec![0u64; cand.len()];
    for v in bitset::ones(cand) {
        bitset::and_into(&mut next, cand, g.row(v));
        clear_through(&mut next, v);
        clique.push(v);
        if find_clique(g, &next, need - 1, clique) {
            return true;
        }
        clique.pop();
    }
    false
}

/// Colours used by a greedy colouring of `cand` in index order, stopping at
/// `limit`. A clique needs one colour per vertex, so fewer than `need`
/// colours rules it out.
fn greedy_colors(g: &Graph, cand: &[u64], limit: usize) -> usize {
    let mut rest = cand.to_vec();
    let mut avail = vec![0u64; cand.len()];
    let mut colors = 0;
    while rest.iter().any(|&w| w != 0) {
        if colors == limit {
            return limit;
        }
        colors += 1;
        avail.copy_from_slice(&rest);
        while let Some(v) = bitset::ones(&avail).next() {
            rest[v / 64] &= !(1u64 << (v % 64));
            for (a, &nb) in avail.iter_mut().zip(g.row(v)) {
                *a &= !nb;
            }
            avail[v / 64] &= !(1u64 << (v % 64));
        }
    }
    colors
}

/// `js_r(G)`: the largest number of `r`-cliques through one edge, counted
/// as `(r−2)`-cliques in the common neighbourhood of the edge. Ties go to
/// the lexicographically least edge.
pub fn joint_size(g: &Graph, r: usize) -> JointReport {
    joint_size_impl(g, r, false)
}

/// [`joint_size`] with the per-edge counts attached.
pub fn joint_size_detailed(g: &Graph, r: usize) -> JointReport {
    joint_size_impl(g, r, true)
}

fn joint_size_impl(g: &Graph, r: usize, detailed: bool) -> JointReport {
    assert!(r >= 2, "joints are defined for r >= 2");
    let mut counter = CliqueCounter::new(g);
    let mut common = vec![0u64; g.stride()];
    let mut best: Option<((usize, usize), u128)> = None;
    let mut per_edge = detailed.then(Vec::new);
    for (u, v) in g.edges() {
        bitset::and_into(&mut common, g.row(u), g.row(v));
        let c = if bitset::count(&common) < r - 2 { 0 } else { counter.count_in(&common, r - 2) };
        if let Some(list) = per_edge.as_mut() {
            list.push(((u, v), c));
        }
        if c > 0 && best.is_none_or(|(_, b)| c > b) {
            best = Some(((u, v), c));
        }
    }
    JointReport {
        r,
        witness_edge: best.map(|(e, _)| e),
        size: best.map_or(0, |(_, c)| c),
        per_edge,
    }
}

/// Number of `r`-cliques containing both endpoints of `edge`, by direct
/// extension from the edge.
pub fn cliques_through_edge(g: &Graph, edge: (usize, usize), r: usize) -> u128 {
    let (u, v) = edge;
    if r < 2 || !g.has_edge(u, v) {
        return 0;
    }
    let mut common = vec![0u64; g.stride()];
    bitset::and_into(&mut common, g.row(u), g.row(v));
    CliqueCounter::new(g).count_in(&common, r - 2)
}

/// Largest common neighbourhood of an `r`-clique: the size of the biggest
/// book of `(r+1)`-cliques on one `r`-clique base.
pub fn book_size(g: &Graph, r: usize) -> BookReport {
    assert!(r >= 1, "books need a base of order >= 1");
    let mut best: Option<(Vec<usize>, usize)> = None;
    let all = crate::bitset::VertexSet::full(g.n());
    let mut clique = Vec::with_capacity(r);
    book_rec(g, all.words(), all.words(), r, &mut clique, &mut best);
    BookReport {
        r,
        size: best.as_ref().map_or(0, |(_, s)| *s),
        base_clique: best.map(|(c, _)| c),
    }
}

fn book_rec(
    g: &Graph,
    cand: &[u64],
    common: &[u64],
    need: usize,
    clique: &mut Vec<usize>,
    best: &mut Option<(Vec<usize>, usize)>,
) {
    if need == 0 {
        let size = bitset::count(common);
        if best.as_ref().is_none_or(|(_, b)| size > *b) {
            *best = Some((clique.clone(), size));
        }
        return;
    }
    if bitset::count(cand) < need {
        return;
    }
    let mut next = vec![0u64; cand.len()];
    let mut next_common = vec![0u64; cand.len()];
    for v in bitset::ones(cand) {
        bitset::and_into(&mut next, cand, g.row(v));
        clear_through(&mut next, v);
        bitset::and_into(&mut next_common, common, g.row(v));
        // No extension can beat the current best once the common
        // neighbourhood is already too small.
        if best.as_ref().is_some_and(|(_, b)| bitset::count(&next_common) <= *b) {
            continue;
        }
        clique.push(v);
        book_rec(g, &next, &next_common, need - 1, clique, best);
        clique.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_turan, make_turan_plus_edge};

    #[test]
    fn count_examples() {
        assert_eq!(count_cliques(&Graph::complete(5), 3).count, 10);
        assert_eq!(count_cliques(&make_turan(6, 3).unwrap(), 3).count, 8);
        assert_eq!(count_cliques(&make_turan(6, 2).unwrap(), 3).count, 0);
        assert_eq!(count_cliques(&Graph::complete(4), 5).count, 0);
        assert_eq!(count_cliques(&Graph::complete(4), 1).count, 4);
        assert_eq!(count_cliques(&Graph::complete(64), 8).count, 4_426_165_368);
    }

    #[test]
    fn clique_exists_examples() {
        let g = make_turan_plus_edge(6, 2).unwrap();
        let tri = clique_exists(&g, 3).unwrap();
        assert_eq!(tri, vec![0, 1, 3]);
        assert_eq!(clique_exists(&make_turan(7, 3).unwrap(), 4), None);
        assert_eq!(clique_exists(&Graph::complete(4), 4), Some(vec![0, 1, 2, 3]));
        assert_eq!(clique_exists(&Graph::empty(3), 0), Some(vec![]));
    }

    #[test]
    fn joint_examples() {
        let j = joint_size(&Graph::complete(4), 3);
        assert_eq!((j.size, j.witness_edge), (2, Some((0, 1))));
        assert_eq!(joint_size(&Graph::complete(5), 4).size, 3);
        let g = make_turan_plus_edge(6, 2).unwrap();
        let j = joint_size(&g, 3);
        assert_eq!((j.size, j.witness_edge), (3, Some((0, 1))));
        let j = joint_size(&Graph::empty(4), 3);
        assert_eq!((j.size, j.witness_edge), (0, None));
        let j = joint_size_detailed(&Graph::complete(3), 2);
        assert_eq!(j.size, 1);
        assert_eq!(j.per_edge.unwrap().len(), 3);
    }

    #[test]
    fn book_examples() {
        let b = book_size(&Graph::complete(5), 2);
        assert_eq!((b.size, b.base_clique), (3, Some(vec![0, 1])));
        assert_eq!(book_size(&make_turan(9, 3).unwrap(), 2).size, 3);
        let b = book_size(&make_turan(8, 2).unwrap(), 3);
        assert_eq!((b.size, b.base_clique), (0, None));
        // a triangle base with nothing on top still counts as a size-0 book
        let b = book_size(&Graph::complete(3), 3);
        assert_eq!((b.size, b.base_clique), (0, Some(vec![0, 1, 2])));
    }

    #[test]
    fn through_edge_matches_joint() {
        let g = make_turan_plus_edge(12, 3).unwrap();
        let j = joint_size(&g, 4);
        assert_eq!(cliques_through_edge(&g, j.witness_edge.unwrap(), 4), j.size);
        assert_eq!(j.size, 16);
    }
}
