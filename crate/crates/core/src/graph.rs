//! Dense undirected simple graphs and the extremal families built from them.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::bitset::{self, words_for, VertexSet};
use crate::Error;

/// Dense simple graph on vertices `0..n`, one adjacency bit row per vertex.
///
/// Constructors and `add_edge`/`remove_edge` keep the matrix symmetric and
/// loop-free. The mutators are meant for the build phase; every derived
/// operation (`induced_subgraph`, `with_edge`, ...) returns a new value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Self { n, stride, adj: vec![0; n * stride] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v, true);
            }
        }
        g
    }

    /// Builds a graph from an edge iterator, rejecting loops and bad vertices.
    /// Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Words per adjacency row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize, on: bool) {
        let s = self.stride;
        let (wu, bu) = (v >> 6, 1u64 << (v & 63));
        let (wv, bv) = (u >> 6, 1u64 << (u & 63));
        if on {
            self.adj[u * s + wu] |= bu;
            self.adj[v * s + wv] |= bv;
        } else {
            self.adj[u * s + wu] &= !bu;
            self.adj[v * s + wv] &= !bv;
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), Error> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    /// Adds `uv`; returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, Error> {
        self.check_pair(u, v)?;
        let fresh = !self.has_edge(u, v);
        self.set(u, v, true);
        Ok(fresh)
    }

    /// Removes `uv`; returns whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool, Error> {
        self.check_pair(u, v)?;
        let was = self.has_edge(u, v);
        self.set(u, v, false);
        Ok(was)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, Error> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self, Error> {
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        Ok(g)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bitset::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// `δ(G)`; zero for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> u64 {
        let twice: u64 = (0..self.n).map(|v| self.degree(v) as u64).sum();
        debug_assert!(twice.is_multiple_of(2));
        twice / 2
    }

    pub fn neighbors(&self, v: usize) -> bitset::Ones<'_> {
        bitset::ones(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v))
    }

    /// `N(u) ∩ N(v)`.
    pub fn common_neighborhood(&self, u: usize, v: usize) -> VertexSet {
        let mut s = self.neighborhood(u);
        s.intersect_with(self.row(v));
        s
    }

    pub fn common_degree(&self, u: usize, v: usize) -> usize {
        bitset::count_and(self.row(u), self.row(v))
    }

    /// Subgraph induced by `vertices`, relabelled `0..len` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self, Error> {
        if let Some(&bad) = vertices.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let mut seen = VertexSet::empty(self.n);
        for &v in vertices {
            if seen.contains(v) {
                return Err(Error::InvalidParameter("induced subgraph vertex list has a repeat"));
            }
            seen.insert(v);
        }
        let mut h = Self::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.set(i, j, true);
                }
            }
        }
        Ok(h)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut unseen = VertexSet::full(self.n);
        let mut out = Vec::new();
        let mut frontier = VertexSet::empty(self.n);
        while let Some(start) = unseen.iter().next() {
            let mut comp = VertexSet::empty(self.n);
            comp.insert(start);
            unseen.remove(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                frontier.clone_from(&unseen);
                frontier.intersect_with(self.row(v));
                for w in frontier.iter() {
                    unseen.remove(w);
                    comp.insert(w);
                    stack.push(w);
                }
            }
            out.push(comp.to_vec());
        }
        out
    }

    /// Checks the structural invariants (symmetry, no loops, no stray bits).
    pub fn is_well_formed(&self) -> bool {
        let rem = self.n % 64;
        for u in 0..self.n {
            if self.has_edge(u, u) {
                return false;
            }
            if rem != 0 && self.row(u)[self.stride - 1] >> rem != 0 {
                return false;
            }
            if self.neighbors(u).any(|v| !self.has_edge(v, u)) {
                return false;
            }
        }
        true
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, e={}, ", self.n, self.edge_count())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Ordered part sizes `(s_1, ..., s_r)`, all positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PartSpec {
    sizes: Vec<usize>,
}

impl PartSpec {
    pub fn new(sizes: Vec<usize>) -> Result<Self, Error> {
        if sizes.is_empty() {
            return Err(Error::ZeroParts);
        }
        if let Some(index) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::EmptyPart { index });
        }
        Ok(Self { sizes })
    }

    /// `r` parts of size `s` each.
    pub fn balanced(r: usize, s: usize) -> Result<Self, Error> {
        Self::new(vec![s; r])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn r(&self) -> usize {
        self.sizes.len()
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Errors unless the spec can describe a `K_r^+` (first part of size ≥ 2).
    pub fn require_kr_plus(&self) -> Result<(), Error> {
        if self.sizes[0] < 2 {
            return Err(Error::FirstPartTooSmall(self.sizes[0]));
        }
        Ok(())
    }

    /// Vertex blocks: part `i` owns `start_i..start_i + s_i`.
    pub fn blocks(&self) -> Vec<core::ops::Range<usize>> {
        blocks(&self.sizes)
    }
}

impl TryFrom<Vec<usize>> for PartSpec {
    type Error = Error;

    fn try_from(sizes: Vec<usize>) -> Result<Self, Error> {
        Self::new(sizes)
    }
}

impl From<PartSpec> for Vec<usize> {
    fn from(spec: PartSpec) -> Self {
        spec.sizes
    }
}

fn blocks(sizes: &[usize]) -> Vec<core::ops::Range<usize>> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&s| {
            let r = start..start + s;
            start += s;
            r
        })
        .collect()
}

/// Part sizes of `T_r(n)`: `n mod r` parts of `⌈n/r⌉` first, then `⌊n/r⌋`.
/// Sizes are zero when `n < r`.
pub fn turan_part_sizes(n: usize, r: usize) -> Result<Vec<usize>, Error> {
    if r == 0 {
        return Err(Error::ZeroParts);
    }
    let (q, rem) = (n / r, n % r);
    Ok((0..r).map(|i| if i < rem { q + 1 } else { q }).collect())
}

/// `e(T_r(n)) = Σ_{i<j} s_i s_j`, from the part sizes.
pub fn turan_edge_count(n: usize, r: usize) -> Result<u64, Error> {
    let sizes = turan_part_sizes(n, r)?;
    let total = n as u128;
    let squares: u128 = sizes.iter().map(|&s| (s as u128) * (s as u128)).sum();
    Ok(((total * total - squares) / 2) as u64)
}

fn multipartite_from_sizes(sizes: &[usize]) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut g = Graph::empty(n);
    let mut part_of = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part_of.extend(core::iter::repeat_n(i, s));
    }
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.set(u, v, true);
            }
        }
    }
    g
}

/// The Turán graph `T_r(n)`, parts in contiguous blocks, larger parts first.
pub fn make_turan(n: usize, r: usize) -> Result<Graph, Error> {
    Ok(multipartite_from_sizes(&turan_part_sizes(n, r)?))
}

/// `K_r(s_1, ..., s_r)`: vertices in contiguous blocks per part, adjacent
/// exactly when they lie in different parts.
pub fn make_complete_multipartite(spec: &PartSpec) -> Graph {
    multipartite_from_sizes(spec.sizes())
}

/// `K_r^+(s_1, ..., s_r)`: the complete multipartite graph plus the edge
/// between the two lowest-numbered vertices of part 1 (vertices 0 and 1).
pub fn make_kr_plus(spec: &PartSpec) -> Result<Graph, Error> {
    spec.require_kr_plus()?;
    let mut g = make_complete_multipartite(spec);
    g.set(0, 1, true);
    Ok(g)
}

/// `T_r(n)` with one extra edge inside its first part, between vertices 0
/// and 1. Needs a first part of size at least 2.
pub fn make_turan_plus_edge(n: usize, r: usize) -> Result<Graph, Error> {
    let sizes = turan_part_sizes(n, r)?;
    if sizes[0] < 2 {
        return Err(Error::FirstPartTooSmall(sizes[0]));
    }
    let mut g = multipartite_from_sizes(&sizes);
    g.set(0, 1, true);
    Ok(g)
}

/// `T_r(n)` minus the cross edge between vertex 0 and the first vertex of
/// the second part.
pub fn make_turan_minus_edge(n: usize, r: usize) -> Result<Graph, Error> {
    let sizes = turan_part_sizes(n, r)?;
    if r < 2 || sizes[1] == 0 {
        return Err(Error::InvalidParameter("T_r(n) minus an edge needs two non-empty parts"));
    }
    let mut g = multipartite_from_sizes(&sizes);
    g.set(0, sizes[0], false);
    Ok(g)
}

/// Index of the pair `(u, v)`, `u < v`, in lexicographic pair order on `n`
/// vertices: `(0,1), (0,2), ..., (0,n-1), (1,2), ...`.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Inverse of [`pair_index`].
pub fn pair_from_index(n: usize, mut idx: usize) -> (usize, usize) {
    let mut u = 0;
    loop {
        let row = n - u - 1;
        if idx < row {
            return (u, u + 1 + idx);
        }
        idx -= row;
        u += 1;
    }
}

/// Graph whose edge set is given by the low `C(n,2)` bits of `mask`, bit `i`
/// standing for the `i`-th pair in lexicographic order. Used by exhaustive
/// scans, so `n ≤ 11`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    assert!(n * n.saturating_sub(1) / 2 <= 64, "mask graphs need n <= 11");
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.set(u, v, true);
            }
            bit += 1;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_examples() {
        let g = make_turan(4, 2).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!(!g.has_edge(0, 1) && g.has_edge(0, 2));

        let g = make_turan(7, 3).unwrap();
        assert_eq!(turan_part_sizes(7, 3).unwrap(), vec![3, 2, 2]);
        assert_eq!(g.edge_count(), 16);

        assert_eq!(make_turan(5, 5).unwrap(), Graph::complete(5));
        assert_eq!(make_turan(5, 0), Err(Error::ZeroParts));
        assert_eq!(make_turan(0, 3).unwrap().n(), 0);
    }

    #[test]
    fn multipartite_examples() {
        let g = make_complete_multipartite(&PartSpec::new(vec![2, 2, 2]).unwrap());
        assert_eq!(g.n(), 6);
        assert!((0..6).all(|v| g.degree(v) == 4));
        let g = make_complete_multipartite(&PartSpec::new(vec![1, 1, 1]).unwrap());
        assert_eq!(g, Graph::complete(3));
        let g = make_complete_multipartite(&PartSpec::new(vec![3]).unwrap());
        assert_eq!(g.edge_count(), 0);
        assert_eq!(PartSpec::new(vec![]), Err(Error::ZeroParts));
        assert_eq!(PartSpec::new(vec![2, 0]), Err(Error::EmptyPart { index: 1 }));
    }

    #[test]
    fn kr_plus_examples() {
        let spec = |s: &[usize]| PartSpec::new(s.to_vec()).unwrap();
        assert_eq!(make_kr_plus(&spec(&[2, 1])).unwrap(), Graph::complete(3));
        let g = make_kr_plus(&spec(&[2, 2])).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(!g.has_edge(2, 3));
        assert_eq!(make_kr_plus(&spec(&[2, 1, 1])).unwrap(), Graph::complete(4));
        assert_eq!(make_kr_plus(&spec(&[1, 3])), Err(Error::FirstPartTooSmall(1)));
    }

    #[test]
    fn induced_subgraph_examples() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.induced_subgraph(&[0, 1, 2]).unwrap(), Graph::complete(3));
        let t = make_turan(4, 2).unwrap();
        assert_eq!(t.induced_subgraph(&[0, 1]).unwrap(), Graph::empty(2));
        assert_eq!(k5.induced_subgraph(&[]).unwrap().n(), 0);
        assert_eq!(
            k5.induced_subgraph(&[0, 7]),
            Err(Error::VertexOutOfRange { vertex: 7, n: 5 })
        );
        // order of the subset is preserved
        let p = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let h = p.induced_subgraph(&[2, 0, 1]).unwrap();
        assert!(h.has_edge(0, 2) && h.has_edge(1, 2) && !h.has_edge(0, 1));
    }

    #[test]
    fn mutation_rejects_loops_and_range() {
        let mut g = Graph::empty(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(g.add_edge(0, 2), Ok(true));
        assert_eq!(g.add_edge(2, 0), Ok(false));
        assert!(g.is_well_formed());
    }

    #[test]
    fn pair_index_roundtrip() {
        for n in 2..12 {
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    assert_eq!(pair_index(n, u, v), idx);
                    assert_eq!(pair_from_index(n, idx), (u, v));
                    idx += 1;
                }
            }
        }
    }

    #[test]
    fn components_of_disjoint_union() {
        let g = Graph::from_edges(6, [(0, 3), (3, 5), (1, 2)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 3, 5], vec![1, 2], vec![4]]);
    }
}
