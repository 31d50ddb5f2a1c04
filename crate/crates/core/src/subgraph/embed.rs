//! Backtracking search for complete multipartite and `K_r^+` subgraphs.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::bitset::{self, VertexSet};
use crate::graph::{Graph, PartSpec};
use crate::Error;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    /// One vertex list per target part, in the order of the requested spec.
    pub parts: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extra_edge: Option<(usize, usize)>,
}

impl Embedding {
    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found { embedding: Embedding, expansions: u64 },
    Absent { expansions: u64 },
    BudgetExhausted { expansions: u64 },
}

impl SearchOutcome {
    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            Self::Found { embedding, .. } => Some(embedding),
            _ => None,
        }
    }

    pub fn expansions(&self) -> u64 {
        match *self {
            Self::Found { expansions, .. } | Self::Absent { expansions } | Self::BudgetExhausted { expansions } => {
                expansions
            }
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Self::BudgetExhausted { .. })
    }
}

struct OutOfBudget;

/// Host relabelled so that vertex `i` is the `i`-th vertex in descending
/// degree order (ties by index). Ascending bit order then matches the
/// required candidate order.
struct Ranked {
    h: Graph,
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl Ranked {
    fn new(g: &Graph) -> Self {
        let deg = g.degrees();
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
        let mut rank = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let h = Graph::from_edges(g.n(), g.edges().map(|(u, v)| (rank[u], rank[v])))
            .expect("relabelling preserves simplicity");
        Self { h, order, rank }
    }
}

struct Search<'a> {
    h: &'a Graph,
    /// Part sizes in fill order.
    sizes: Vec<usize>,
    /// `suffix[p]`: vertices still needed by parts after `p`.
    suffix: Vec<usize>,
    /// Part `p` is interchangeable with part `p-1`.
    tied: Vec<bool>,
    parts: Vec<Vec<usize>>,
    budget: u64,
    used: u64,
}

impl<'a> Search<'a> {
    fn new(h: &'a Graph, sizes: Vec<usize>, pinned_first: bool, budget: u64, used: u64) -> Self {
        let r = sizes.len();
        let mut suffix = vec![0; r];
        for p in (0..r.saturating_sub(1)).rev() {
            suffix[p] = suffix[p + 1] + sizes[p + 1];
        }
        let tied = (0..r).map(|p| p > 0 && sizes[p] == sizes[p - 1] && !(pinned_first && p == 1)).collect();
        Self { h, parts: vec![Vec::new(); r], sizes, suffix, tied, budget, used }
    }

    fn expand(&mut self) -> Result<(), OutOfBudget> {
        if self.used >= self.budget {
            return Err(OutOfBudget);
        }
        self.used += 1;
        Ok(())
    }

    /// Fills part `p` from `cand` (vertices at index `>= start`), keeping
    /// `acc` = common neighbourhood of everything placed so far in parts
    /// before `p` and in part `p` itself.
    fn fill(&mut self, p: usize, start: usize, cand: &[u64], acc: &[u64]) -> Result<bool, OutOfBudget> {
        if self.parts[p].len() == self.sizes[p] {
            if p + 1 == self.sizes.len() {
                return Ok(true);
            }
            // Interchangeable parts are taken in order of their first vertex.
            let next_start = if self.tied[p + 1] { self.parts[p][0] + 1 } else { 0 };
            return self.fill(p + 1, next_start, acc, acc);
        }
        let remaining = self.sizes[p] - self.parts[p].len();
        let need_after = self.suffix[p];
        let mut above = cand.to_vec();
        if start > 0 {
            bitset::clear_through(&mut above, start - 1);
        }
        let mut next = vec![0u64; acc.len()];
        let candidates: Vec<usize> = bitset::ones(&above).collect();
        for (i, &v) in candidates.iter().enumerate() {
            if candidates.len() - i < remaining {
                break;
            }
            self.expand()?;
            bitset::and_into(&mut next, acc, self.h.row(v));
            if bitset::count(&next) < need_after {
                continue;
            }
            self.parts[p].push(v);
            if self.fill(p, v + 1, cand, &next)? {
                return Ok(true);
            }
            self.parts[p].pop();
        }
        Ok(false)
    }
}

/// Fill order: decreasing size, ties by spec position. Returns the order
/// as indices into `sizes`.
fn fill_order(sizes: &[usize], fixed_first: bool) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..sizes.len()).collect();
    let tail = if fixed_first { &mut idx[1..] } else { &mut idx[..] };
    tail.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]).then(a.cmp(&b)));
    idx
}

fn restore(ranked: &Ranked, order: &[usize], filled: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut parts = vec![Vec::new(); order.len()];
    for (slot, &spec_index) in order.iter().enumerate() {
        let mut part: Vec<usize> = filled[slot].iter().map(|&v| ranked.order[v]).collect();
        part.sort_unstable();
        parts[spec_index] = part;
    }
    parts
}

/// Searches for a copy of `K_r(s_1, …, s_r)` in `g`, expanding at most
/// `budget` search nodes.
pub fn find_complete_multipartite(g: &Graph, spec: &PartSpec, budget: u64) -> SearchOutcome {
    if spec.total() > g.n() {
        return SearchOutcome::Absent { expansions: 0 };
    }
    let ranked = Ranked::new(g);
    let order = fill_order(spec.sizes(), false);
    let sizes: Vec<usize> = order.iter().map(|&i| spec.sizes()[i]).collect();
    let mut search = Search::new(&ranked.h, sizes, false, budget, 0);
    let all = VertexSet::full(g.n());
    match search.fill(0, 0, all.words(), all.words()) {
        Ok(true) => SearchOutcome::Found {
            embedding: Embedding { parts: restore(&ranked, &order, &search.parts), extra_edge: None },
            expansions: search.used,
        },
        Ok(false) => SearchOutcome::Absent { expansions: search.used },
        Err(OutOfBudget) => SearchOutcome::BudgetExhausted { expansions: search.used },
    }
}

/// Searches for `K_r^+(s_1, …, s_r)`: the complete multipartite graph with
/// one extra edge inside part 1. Host edges are tried in descending order of
/// common-neighbourhood size (ties lexicographic); the budget is shared.
pub fn find_kr_plus(g: &Graph, spec: &PartSpec, budget: u64) -> Result<SearchOutcome, Error> {
    spec.require_kr_plus()?;
    if spec.total() > g.n() {
        return Ok(SearchOutcome::Absent { expansions: 0 });
    }
    let ranked = Ranked::new(g);
    let h = &ranked.h;
    let order = fill_order(spec.sizes(), true);
    let sizes: Vec<usize> = order.iter().map(|&i| spec.sizes()[i]).collect();
    let outside: usize = sizes[1..].iter().sum();

    let mut edges: Vec<((usize, usize), usize)> =
        g.edges().map(|(u, v)| ((u, v), g.common_degree(u, v))).filter(|&(_, c)| c >= outside).collect();
    edges.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));

    let mut used = 0;
    let mut common = vec![0u64; h.stride()];
    for ((u, v), _) in edges {
        let (a, b) = (ranked.rank[u], ranked.rank[v]);
        bitset::and_into(&mut common, h.row(a), h.row(b));
        let mut search = Search::new(h, sizes.clone(), true, budget, used);
        search.parts[0] = vec![a, b];
        // Extra part-1 vertices may come from anywhere except the pinned pair.
        let mut pool = VertexSet::full(g.n());
        pool.remove(a);
        pool.remove(b);
        let result = search.fill(0, 0, pool.words(), &common);
        used = search.used;
        match result {
            Ok(true) => {
                return Ok(SearchOutcome::Found {
                    embedding: Embedding { parts: restore(&ranked, &order, &search.parts), extra_edge: Some((u, v)) },
                    expansions: used,
                });
            }
            Ok(false) => {}
            Err(OutOfBudget) => return Ok(SearchOutcome::BudgetExhausted { expansions: used }),
        }
    }
    Ok(SearchOutcome::Absent { expansions: used })
}

/// Independent check of an embedding against its host and target spec.
/// Returns a description of the first violated condition.
pub fn validate_embedding(g: &Graph, spec: &PartSpec, emb: &Embedding) -> Result<(), String> {
    use alloc::format;
    if emb.parts.len() != spec.r() {
        return Err(format!("expected {} parts, got {}", spec.r(), emb.parts.len()));
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (i, (part, &size)) in emb.parts.iter().zip(spec.sizes()).enumerate() {
        if part.len() != size {
            return Err(format!("part {} has {} vertices, expected {}", i + 1, part.len(), size));
        }
        for &v in part {
            if v >= g.n() {
                return Err(format!("vertex {v} out of range"));
            }
            if owner[v] != usize::MAX {
                return Err(format!("vertex {v} used twice"));
            }
            owner[v] = i;
        }
    }
    for (i, a) in emb.parts.iter().enumerate() {
        for b in &emb.parts[i + 1..] {
            for &u in a {
                for &v in b {
                    if !g.has_edge(u, v) {
                        return Err(format!("missing cross edge {u}-{v}"));
                    }
                }
            }
        }
    }
    if let Some((u, v)) = emb.extra_edge {
        if u >= g.n() || v >= g.n() || owner[u] != 0 || owner[v] != 0 || u == v {
            return Err(format!("extra edge {u}-{v} is not inside part 1"));
        }
        if !g.has_edge(u, v) {
            return Err(format!("extra edge {u}-{v} is not a host edge"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_turan, make_turan_plus_edge};

    fn spec(s: &[usize]) -> PartSpec {
        PartSpec::new(s.to_vec()).unwrap()
    }

    #[test]
    fn multipartite_examples() {
        let g = make_turan(9, 3).unwrap();
        let out = find_complete_multipartite(&g, &spec(&[3, 3, 3]), DEFAULT_BUDGET);
        let emb = out.embedding().unwrap();
        assert_eq!(emb.parts, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]);

        let k5 = Graph::complete(5);
        let out = find_complete_multipartite(&k5, &spec(&[2, 2]), DEFAULT_BUDGET);
        validate_embedding(&k5, &spec(&[2, 2]), out.embedding().unwrap()).unwrap();

        let g = make_turan(8, 2).unwrap();
        let out = find_complete_multipartite(&g, &spec(&[2, 2, 2]), DEFAULT_BUDGET);
        assert!(matches!(out, SearchOutcome::Absent { .. }));
    }

    #[test]
    fn kr_plus_examples() {
        let k4 = Graph::complete(4);
        let out = find_kr_plus(&k4, &spec(&[2, 2]), DEFAULT_BUDGET).unwrap();
        let emb = out.embedding().unwrap();
        let (a, b) = emb.extra_edge.unwrap();
        assert!(emb.parts[0].contains(&a) && emb.parts[0].contains(&b));
        validate_embedding(&k4, &spec(&[2, 2]), emb).unwrap();

        let g = make_turan_plus_edge(9, 3).unwrap();
        let emb = find_kr_plus(&g, &spec(&[2, 2, 2]), DEFAULT_BUDGET).unwrap().embedding().cloned().unwrap();
        assert_eq!(emb.extra_edge, Some((0, 1)));
        validate_embedding(&g, &spec(&[2, 2, 2]), &emb).unwrap();

        for r in 2..=4 {
            let g = make_turan(4 * r, r).unwrap();
            let out = find_kr_plus(&g, &PartSpec::balanced(r, 2).unwrap(), DEFAULT_BUDGET).unwrap();
            assert!(matches!(out, SearchOutcome::Absent { .. }));
        }
        assert!(find_kr_plus(&k4, &spec(&[1, 2]), DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn budget_is_distinct_from_absent() {
        let g = make_turan(30, 3).unwrap();
        let out = find_complete_multipartite(&g, &spec(&[5, 5, 5, 5]), 10);
        assert_eq!(out, SearchOutcome::BudgetExhausted { expansions: 10 });
    }

    #[test]
    fn unbalanced_spec_keeps_requested_order() {
        let g = make_turan(12, 3).unwrap();
        let s = spec(&[1, 4, 2]);
        let emb = find_complete_multipartite(&g, &s, DEFAULT_BUDGET).embedding().cloned().unwrap();
        assert_eq!(emb.parts.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 4, 2]);
        validate_embedding(&g, &s, &emb).unwrap();
    }

    #[test]
    fn validation_rejects_bad_embeddings() {
        let g = make_turan(6, 2).unwrap();
        let s = spec(&[2, 2]);
        let bad = Embedding { parts: vec![vec![0, 1], vec![2, 3]], extra_edge: None };
        assert!(validate_embedding(&g, &s, &bad).is_err());
        let bad = Embedding { parts: vec![vec![0, 1], vec![3, 4]], extra_edge: Some((0, 1)) };
        assert!(validate_embedding(&g, &s, &bad).is_err());
        let ok = Embedding { parts: vec![vec![0, 1], vec![3, 4]], extra_edge: None };
        assert!(validate_embedding(&g, &s, &ok).is_ok());
    }
}
