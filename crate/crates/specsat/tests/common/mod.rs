#![allow(dead_code)]

use specsat_core::Graph;

pub fn subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            rec(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(pool, k, 0, &mut Vec::new(), &mut out);
    out
}

pub fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

pub fn naive_cliques(g: &Graph, r: usize) -> u128 {
    let all: Vec<usize> = (0..g.n()).collect();
    subsets(&all, r).iter().filter(|s| is_clique(g, s)).count() as u128
}

/// Largest number of `r`-cliques through one edge, by enumerating
/// `(r−2)`-subsets of each edge's common neighbourhood.
pub fn naive_joint(g: &Graph, r: usize) -> u128 {
    let mut best = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                continue;
            }
            let common: Vec<usize> = (0..g.n()).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).collect();
            let c = subsets(&common, r - 2).iter().filter(|s| is_clique(g, s)).count() as u128;
            best = best.max(c);
        }
    }
    best
}

pub fn naive_book(g: &Graph, r: usize) -> usize {
    let all: Vec<usize> = (0..g.n()).collect();
    subsets(&all, r)
        .iter()
        .filter(|s| is_clique(g, s))
        .map(|s| (0..g.n()).filter(|v| !s.contains(v) && s.iter().all(|&u| g.has_edge(u, *v))).count())
        .max()
        .unwrap_or(0)
}

/// Independent check of a complete multipartite embedding, with an optional
/// extra edge that must join two vertices of the first part.
pub fn embedding_is_valid(g: &Graph, sizes: &[usize], parts: &[Vec<usize>], extra: Option<(usize, usize)>) -> bool {
    if parts.len() != sizes.len() || parts.iter().zip(sizes).any(|(p, &s)| p.len() != s) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in parts.iter().flatten() {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if !parts[i].iter().all(|&u| parts[j].iter().all(|&v| g.has_edge(u, v))) {
                return false;
            }
        }
    }
    match extra {
        None => true,
        Some((u, v)) => parts[0].contains(&u) && parts[0].contains(&v) && u != v && g.has_edge(u, v),
    }
}
