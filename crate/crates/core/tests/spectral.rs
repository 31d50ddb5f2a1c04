mod common;

use proptest::prelude::*;
use specsat_core::graph::{graph_from_mask, make_complete_multipartite, make_turan, make_turan_plus_edge, turan_edge_count, turan_part_sizes};
use specsat_core::spectral::*;
use specsat_core::{Graph, PartSpec};

const TOL: f64 = 1e-10;

// Largest eigenvalue of K_{2,3}, from the Jacobi oracle.
const MU_K23: f64 = 2.449489742783178;

fn spec(s: &[usize]) -> PartSpec {
    PartSpec::new(s.to_vec()).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        let max = if pairs == 64 { u64::MAX } else { (1u64 << pairs) - 1 };
        (Just(n), 0..=max).prop_map(|(n, m)| graph_from_mask(n, m))
    })
}

#[test]
fn frozen_oracle_value() {
    let g = make_complete_multipartite(&spec(&[2, 3]));
    assert!((common::mu_oracle(&g) - MU_K23).abs() < 1e-12);
    let est = spectral_radius(&g, TOL, default_max_iter(5));
    assert!(est.converged && (est.value - MU_K23).abs() <= TOL);
    assert!((multipartite_mu_exact(&spec(&[2, 3]), TOL) - MU_K23).abs() <= TOL);
}

#[test]
fn closed_forms() {
    assert!((spectral_radius_default(&Graph::complete(5)).value - 4.0).abs() <= TOL);
    assert!((spectral_radius_default(&make_turan(4, 2).unwrap()).value - 2.0).abs() <= TOL);
    assert!((multipartite_mu_exact(&spec(&[5, 5]), TOL) - 5.0).abs() <= TOL);
    for (r, k) in [(3, 4), (5, 2), (6, 7)] {
        let mu = multipartite_mu_exact(&spec(&vec![k; r]), TOL);
        assert!((mu - ((r - 1) * k) as f64).abs() <= TOL);
    }
    assert_eq!(spectral_radius_default(&Graph::empty(0)).value, 0.0);
    assert_eq!(spectral_radius_default(&Graph::empty(1)).value, 0.0);
}

#[test]
fn turan_comparisons() {
    let c = compare_mu_to_turan(&make_turan(6, 2).unwrap(), 2, TOL).unwrap();
    assert_ne!(c.verdict, Verdict::GreaterCertified);
    let g = make_turan_plus_edge(6, 2).unwrap();
    assert_eq!(compare_mu_to_turan(&g, 2, TOL).unwrap().verdict, Verdict::GreaterCertified);
    assert!(common::mu_oracle(&g) > 3.0 + 1e-6);
    assert_eq!(compare_mu_to_turan(&Graph::empty(6), 2, TOL).unwrap().verdict, Verdict::NotGreaterCertified);
}

#[test]
fn exact_tie_is_resolved() {
    for (n, r) in [(6, 2), (7, 3), (11, 4)] {
        let g = make_turan(n, r).unwrap();
        let c = certify_mu_exceeds(&g, &MuThreshold::turan(n, r, TOL).unwrap(), TOL, None);
        assert_eq!(c.exceeds, Some(false), "{n} {r}");
    }
}

#[test]
fn turan_size_chain() {
    // μ(T_r(n)) ≥ 2e/n ≥ (1 − 1/r)n − r/(4n); the second step times 4rn in integers.
    for n in 3..=2000usize {
        for r in 2..n {
            let e = turan_edge_count(n, r).unwrap();
            let mu = multipartite_mu_sizes(&turan_part_sizes(n, r).unwrap(), TOL);
            assert!(mu + solver_tolerance(TOL, n) >= 2.0 * e as f64 / n as f64, "{n} {r}");
            let lhs = 8 * r as u128 * e as u128;
            let rhs = 4 * (r as u128 - 1) * (n * n) as u128 - (r * r) as u128;
            assert!(lhs >= rhs, "{n} {r}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn matches_jacobi(g in arb_graph(10)) {
        let est = spectral_radius(&g, TOL, default_max_iter(g.n()));
        prop_assert!(est.converged);
        prop_assert!((est.value - common::mu_oracle(&g)).abs() < 1e-8);
        prop_assert!(est.value >= -1e-12 && est.value <= g.n().saturating_sub(1) as f64 + 1e-9);
    }

    #[test]
    fn degree_bounds(g in arb_graph(11)) {
        let mu = spectral_radius_default(&g);
        if g.n() > 0 {
            prop_assert!(mu.upper() + 1e-9 >= 2.0 * g.edge_count() as f64 / g.n() as f64);
        }
        prop_assert!(mu.lower() <= g.max_degree() as f64 + 1e-9);
    }

    #[test]
    fn adding_an_edge_never_lowers_mu(g in arb_graph(10), pick in any::<prop::sample::Index>()) {
        let missing: Vec<(usize, usize)> = (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick.index(missing.len())];
        let h = g.with_edge(u, v).unwrap();
        prop_assert!(spectral_radius_default(&h).value >= spectral_radius_default(&g).value - 1e-9);
    }

    #[test]
    fn multipartite_agrees_with_power_iteration(sizes in prop::collection::vec(1usize..=12, 1..=6)) {
        prop_assume!(sizes.iter().sum::<usize>() <= 60);
        let s = spec(&sizes);
        let g = make_complete_multipartite(&s);
        let est = spectral_radius(&g, TOL, default_max_iter(g.n()));
        prop_assert!((est.value - multipartite_mu_exact(&s, TOL)).abs() <= 10.0 * TOL);
    }
}
