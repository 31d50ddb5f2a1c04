mod common;

use proptest::prelude::*;
use specsat_core::graph::{graph_from_mask, make_kr_plus, make_turan, make_turan_plus_edge};
use specsat_core::random::random_gnm;
use specsat_core::subgraph::*;
use specsat_core::{Graph, PartSpec};

const BUDGET: u64 = 10_000_000;

fn spec(s: &[usize]) -> PartSpec {
    PartSpec::new(s.to_vec()).unwrap()
}

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), 0..=(1u64 << pairs) - 1).prop_map(|(n, m)| graph_from_mask(n, m))
    })
}

/// Injective placement of the parts by plain recursion over vertex tuples.
fn naive_multipartite(g: &Graph, sizes: &[usize], plus: bool) -> bool {
    fn rec(g: &Graph, slots: &[usize], placed: &mut Vec<(usize, usize)>, plus: bool) -> bool {
        let Some(&part) = slots.get(placed.len()) else {
            let first: Vec<usize> = placed.iter().filter(|&&(_, p)| p == 0).map(|&(v, _)| v).collect();
            return !plus || first.iter().any(|&u| first.iter().any(|&v| u < v && g.has_edge(u, v)));
        };
        for v in 0..g.n() {
            if placed.iter().any(|&(u, p)| u == v || (p != part && !g.has_edge(u, v))) {
                continue;
            }
            // Within a part, keep vertices increasing to avoid repeats.
            if placed.last().is_some_and(|&(u, p)| p == part && u > v) {
                continue;
            }
            placed.push((v, part));
            if rec(g, slots, placed, plus) {
                return true;
            }
            placed.pop();
        }
        false
    }
    let slots: Vec<usize> = sizes.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat_n(i, s)).collect();
    rec(g, &slots, &mut Vec::new(), plus)
}

fn naive_colorable(g: &Graph, r: usize) -> bool {
    let n = g.n() as u32;
    (0..(r as u64).pow(n)).any(|mut code| {
        let col: Vec<usize> = (0..n)
            .map(|_| {
                let c = (code % r as u64) as usize;
                code /= r as u64;
                c
            })
            .collect();
        g.edges().all(|(u, v)| col[u] != col[v])
    })
}

#[test]
fn counts_match_naive_on_all_small_graphs() {
    for n in 0..=5usize {
        for mask in 0..1u64 << (n * n.saturating_sub(1) / 2) {
            let g = graph_from_mask(n, mask);
            for r in 1..=n + 1 {
                assert_eq!(count_cliques(&g, r).count, common::naive_cliques(&g, r));
                assert_eq!(book_size(&g, r).size, common::naive_book(&g, r));
                if r >= 2 {
                    let j = joint_size(&g, r);
                    assert_eq!((j.size, j.witness_edge), common::naive_joint(&g, r), "{n} {mask} {r}");
                }
            }
        }
    }
}

#[test]
fn counts_match_naive_on_random_graphs() {
    for i in 0..2000u64 {
        let n = 6 + (i % 2) as usize;
        let m = i % (n * (n - 1) / 2 + 1) as u64;
        let g = random_gnm(n, m, 0x5eed ^ i).unwrap();
        for r in 1..=n {
            assert_eq!(count_cliques(&g, r).count, common::naive_cliques(&g, r));
            assert_eq!(book_size(&g, r).size, common::naive_book(&g, r));
            if r >= 2 {
                assert_eq!(joint_size(&g, r).size, common::naive_joint(&g, r).0);
            }
        }
    }
}

#[test]
fn book_examples() {
    assert_eq!(book_size(&Graph::complete(5), 2).size, 3);
    let b = book_size(&make_turan(9, 3).unwrap(), 2);
    assert_eq!((b.size, b.base_clique), (3, Some(vec![0, 3])));
    let b = book_size(&make_turan(8, 2).unwrap(), 3);
    assert_eq!((b.size, b.base_clique), (0, None));
}

#[test]
fn finder_examples() {
    let g = make_turan(9, 3).unwrap();
    let out = find_complete_multipartite(&g, &spec(&[3, 3, 3]), BUDGET);
    let mut parts = out.embedding().unwrap().parts.clone();
    parts.sort();
    assert_eq!(parts, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]);

    let g = Graph::complete(5);
    let e = find_complete_multipartite(&g, &spec(&[2, 2]), BUDGET).embedding().unwrap().clone();
    assert!(validate_embedding(&g, &spec(&[2, 2]), &e).is_ok());
    assert!(matches!(find_complete_multipartite(&make_turan(8, 2).unwrap(), &spec(&[2, 2, 2]), BUDGET), SearchOutcome::Absent { .. }));

    let g = Graph::complete(4);
    let e = find_kr_plus(&g, &spec(&[2, 2]), BUDGET).unwrap().embedding().unwrap().clone();
    assert_eq!(e.extra_edge, Some((0, 1)));
    assert!(validate_embedding(&g, &spec(&[2, 2]), &e).is_ok());

    let g = make_turan_plus_edge(9, 3).unwrap();
    let e = find_kr_plus(&g, &spec(&[2, 2, 2]), BUDGET).unwrap().embedding().unwrap().clone();
    assert_eq!(e.extra_edge, Some((0, 1)));
    assert!(validate_embedding(&g, &spec(&[2, 2, 2]), &e).is_ok());

    for (n, r) in [(9, 3), (12, 4), (7, 2)] {
        let out = find_kr_plus(&make_turan(n, r).unwrap(), &spec(&vec![2; r]), BUDGET).unwrap();
        assert!(matches!(out, SearchOutcome::Absent { .. }));
    }
    assert!(find_kr_plus(&g, &spec(&[1, 2]), BUDGET).is_err());
}

#[test]
fn budget_is_distinct_from_absent() {
    let g = make_turan(30, 3).unwrap();
    let out = find_kr_plus(&g, &spec(&[2, 2, 2]), 1).unwrap();
    assert!(out.is_exhausted() || matches!(out, SearchOutcome::Absent { .. }));
    let g = make_turan(40, 4).unwrap();
    assert!(find_complete_multipartite(&g, &spec(&[10, 10, 10, 10]), 5).is_exhausted());
}

#[test]
fn coloring_examples() {
    assert_eq!(is_r_partite(&cycle(5), 2), Coloring::NotColorable);
    assert!(is_proper_coloring(&cycle(5), is_r_partite(&cycle(5), 3).colors().unwrap(), 3));
    let g = make_turan(7, 3).unwrap();
    let c = is_r_partite(&g, 3).colors().unwrap().to_vec();
    assert!(c[0] == c[1] && c[1] == c[2] && c[3] == c[4] && c[5] == c[6]);
    assert!(c[0] != c[3] && c[3] != c[5] && c[0] != c[5]);
}

#[test]
fn kr_plus_is_found_in_its_own_construction() {
    for sizes in [vec![2, 1], vec![2, 2], vec![3, 2, 2], vec![2, 1, 1, 3]] {
        let s = spec(&sizes);
        let g = make_kr_plus(&s).unwrap();
        let e = find_kr_plus(&g, &s, BUDGET).unwrap().embedding().unwrap().clone();
        assert!(validate_embedding(&g, &s, &e).is_ok(), "{sizes:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn finders_match_naive(g in arb_graph(7), sizes in prop::sample::select(vec![
        vec![1, 1], vec![2, 1], vec![2, 2], vec![1, 1, 1], vec![2, 1, 1], vec![3, 2], vec![2, 2, 1], vec![1, 1, 1, 1],
    ])) {
        let s = spec(&sizes);
        let plain = find_complete_multipartite(&g, &s, BUDGET);
        prop_assert_eq!(plain.embedding().is_some(), naive_multipartite(&g, &sizes, false));
        if let Some(e) = plain.embedding() {
            prop_assert!(validate_embedding(&g, &s, e).is_ok());
        }
        if sizes[0] >= 2 {
            let plus = find_kr_plus(&g, &s, BUDGET).unwrap();
            prop_assert_eq!(plus.embedding().is_some(), naive_multipartite(&g, &sizes, true));
            if let Some(e) = plus.embedding() {
                prop_assert!(validate_embedding(&g, &s, e).is_ok());
            }
        }
    }

    #[test]
    fn coloring_matches_naive(g in arb_graph(7), r in 1usize..=4) {
        let c = is_r_partite(&g, r);
        prop_assert_ne!(&c, &Coloring::CapExhausted);
        prop_assert_eq!(c.colors().is_some(), naive_colorable(&g, r));
        if let Some(col) = c.colors() {
            prop_assert!(is_proper_coloring(&g, col, r));
        }
    }

    #[test]
    fn joints_and_cliques_agree(g in arb_graph(8), r in 2usize..=5) {
        let j = joint_size(&g, r);
        prop_assert_eq!(j.size > 0, clique_exists(&g, r).is_some());
        prop_assert!(count_cliques(&g, r).count >= j.size);
        if let Some(c) = clique_exists(&g, r) {
            prop_assert!(common::is_clique(&g, &c) && c.len() == r);
        }
    }

    #[test]
    fn statistics_grow_with_edges(g in arb_graph(8), r in 2usize..=4, pick in any::<prop::sample::Index>()) {
        let missing: Vec<(usize, usize)> = (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick.index(missing.len())];
        let h = g.with_edge(u, v).unwrap();
        prop_assert!(count_cliques(&h, r).count >= count_cliques(&g, r).count);
        prop_assert!(joint_size(&h, r).size >= joint_size(&g, r).size);
        prop_assert!(book_size(&h, r).size >= book_size(&g, r).size);
    }
}
