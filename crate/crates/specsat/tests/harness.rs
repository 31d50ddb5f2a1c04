mod common;

use specsat::config::{ExperimentConfig, Family, Mode};
use specsat::harness::{make_book, make_family, run, run_exhaustive, run_family_sweep, run_random_hunt, run_tightness};
use specsat::report::{parse_side, InstanceKey};
use specsat_core::graph::make_turan_plus_edge;
use specsat_core::theorems::{TheoremId, Tri};

fn config(mode: Mode, n: (usize, usize), r: &[usize], theorems: &[TheoremId]) -> ExperimentConfig {
    ExperimentConfig {
        mode,
        n_min: n.0,
        n_max: n.1,
        r: r.to_vec(),
        theorems: theorems.to_vec(),
        seed: Some(0x4A12),
        ..ExperimentConfig::default()
    }
}

#[test]
fn exhaustive_spectral_turan_on_four_vertices() {
    let rep = run_exhaustive(&config(Mode::Exhaustive, (4, 4), &[2], &[TheoremId::FactSTT])).unwrap();
    assert_eq!(rep.graphs, 64);
    assert_eq!(rep.instances_checked, 64);
    assert_eq!(rep.counterexample_count, 0);
    assert!(rep.counterexamples.is_empty());
    let s = &rep.summary[&TheoremId::FactSTT];
    assert_eq!(s.hypothesis.yes + s.hypothesis.no, 64);
    assert_eq!(s.conclusion.yes, s.hypothesis.yes);
}

#[test]
fn clique_bound_is_tightest_at_the_triangle() {
    let rep = run_exhaustive(&config(Mode::Exhaustive, (3, 3), &[2], &[TheoremId::FactLeNSMM])).unwrap();
    assert_eq!(rep.graphs, 8);
    assert_eq!(rep.counterexample_count, 0);
    let slack = rep.summary[&TheoremId::FactLeNSMM].min_slack.values().next().unwrap();
    // K_3 is mask 0b111; it is the only graph on 3 vertices with a positive right side.
    assert_eq!(slack.instance, InstanceKey::Mask { n: 3, index: 7, mask: 7 });
    // 3 − (2/3 − 1/2)·(2/3)·(3/2)^3 = 21/8
    assert!((slack.approx - 21.0 / 8.0).abs() < 1e-9);
}

#[test]
fn instance_count_is_arithmetic() {
    let ids = [TheoremId::FactSTT, TheoremId::FactTsize, TheoremId::EdgeImpliesSpectral];
    let rep = run(&config(Mode::Exhaustive, (1, 5), &[2, 3], &ids)).unwrap();
    let graphs: u64 = (1..=5u32).map(|n| 1u64 << (n * (n - 1) / 2)).sum();
    assert_eq!(rep.graphs, graphs);
    assert_eq!(rep.instances_checked, graphs * 2 * 3);
    assert_eq!(rep.summary.values().map(|s| s.checked).sum::<u64>(), rep.instances_checked);
    assert_eq!(rep.counterexample_count, 0);

    let mut sampled = config(Mode::Exhaustive, (6, 7), &[2], &[TheoremId::FactSTT]);
    sampled.sample_cap = Some(500);
    let rep = run(&sampled).unwrap();
    assert_eq!((rep.graphs, rep.instances_checked), (1000, 1000));
}

#[test]
fn exhaustive_rejects_large_orders() {
    assert!(run_exhaustive(&config(Mode::Exhaustive, (9, 9), &[2], &[TheoremId::FactSTT])).is_err());
}

#[test]
fn turan_plus_edge_joints() {
    let mut cfg = config(Mode::FamilySweep, (6, 200), &[2], &[TheoremId::T1]);
    cfg.families = vec![Family::TuranPlusEdge];
    cfg.stats_max_n = 200;
    let rep = run_family_sweep(&cfg).unwrap();
    assert_eq!(rep.family_rows.len(), 195);
    assert_eq!(rep.counterexample_count, 0);
    for row in &rep.family_rows {
        let js = row.stats.as_ref().unwrap().joint;
        // The extra edge lies in the larger part; its triangles use the other part.
        assert_eq!(js, (row.n / 2) as u128, "n = {}", row.n);
        assert!(js * 256 > row.n as u128);
        assert_eq!(row.verdicts[0].lhs.as_deref(), Some(js.to_string().as_str()));
        if row.n <= 40 {
            let g = make_turan_plus_edge(row.n, 2).unwrap();
            assert_eq!(common::naive_joint(&g, 3), js);
        }
    }
}

#[test]
fn turan_graphs_never_satisfy_the_strict_hypothesis() {
    let mut cfg = config(Mode::FamilySweep, (2, 500), &[2, 3, 4, 5], &[TheoremId::FactSTT]);
    cfg.families = vec![Family::Turan];
    cfg.stats_max_n = 0;
    let rep = run(&cfg).unwrap();
    // T_r(n) with n < r is K_n and still counts.
    let expected: u64 = 4 * 499;
    assert_eq!(rep.graphs, expected);
    assert_eq!(rep.skipped, 0);
    let s = &rep.summary[&TheoremId::FactSTT];
    assert_eq!((s.hypothesis.yes, s.hypothesis.no, s.hypothesis.inconclusive), (0, expected, 0));
}

#[test]
fn turan_three_plus_edge_books_and_embeddings() {
    let mut cfg = config(Mode::FamilySweep, (4, 30), &[3], &[TheoremId::BookRemark]);
    cfg.families = vec![Family::TuranPlusEdge];
    let rep = run(&cfg).unwrap();
    for row in &rep.family_rows {
        let stats = row.stats.as_ref().unwrap();
        assert!(stats.book >= 1, "n = {}", row.n);
        if row.n >= 9 {
            assert_eq!(stats.kr_plus_2.as_deref(), Some("found"), "n = {}", row.n);
        }
    }
}

#[test]
fn family_members_are_well_formed() {
    for r in 2..=4 {
        for n in r + 1..=20 {
            for f in Family::ALL {
                let g = make_family(f, n, r).unwrap();
                assert_eq!(g.n(), n);
            }
        }
    }
    let b = make_book(6, 3).unwrap();
    // K_3 plus three pages of three edges each
    assert_eq!(b.edge_count(), 3 + 9);
    assert!(make_book(2, 3).is_err());
    assert!(make_family(Family::KrPlus, 3, 3).is_err());
}

#[test]
fn hunt_above_the_turan_number() {
    let mut cfg = config(Mode::RandomHunt, (30, 30), &[2], &[TheoremId::FactSTT]);
    cfg.trials = 10_000;
    cfg.edge_offset = 1;
    let rep = run_random_hunt(&cfg).unwrap();
    assert_eq!(rep.graphs, 10_000);
    assert_eq!(rep.counterexample_count, 0);
    let s = &rep.summary[&TheoremId::FactSTT];
    // 226 edges force both the hypothesis and a triangle.
    assert_eq!(s.hypothesis.yes, 10_000);
    assert_eq!(s.conclusion.yes, 10_000);
}

#[test]
fn hunt_clique_counts() {
    let mut cfg = config(Mode::RandomHunt, (24, 24), &[3], &[TheoremId::FactLeNSMM]);
    cfg.trials = 1000;
    let rep = run(&cfg).unwrap();
    assert_eq!(rep.counterexample_count, 0);
    assert_eq!(rep.summary[&TheoremId::FactLeNSMM].checked, 1000);
    let again = run(&cfg).unwrap();
    assert_eq!(rep.to_json(), again.to_json());
    let other = run(&ExperimentConfig { seed: Some(0x4A13), ..cfg }).unwrap();
    assert_ne!(rep.to_json(), other.to_json());
}

#[test]
fn counterexamples_are_recorded_with_their_graph() {
    // K_14 has 91 edges against a right side of 98 for the printed reading.
    let mut cfg = config(Mode::RandomHunt, (14, 14), &[2], &[TheoremId::FactLeNSMM]);
    cfg.edges = Some(91);
    cfg.trials = 3;
    cfg.max_records = 2;
    let rep = run(&cfg).unwrap();
    assert_eq!(rep.counterexample_count, 3);
    assert_eq!(rep.counterexamples.len(), 2);
    let v = &rep.counterexamples[0].verdict;
    assert_eq!((v.hypothesis, v.conclusion), (Tri::Yes, Tri::No));
    assert_eq!(v.graph.as_ref().unwrap().edges.len(), 91);
    assert!(matches!(rep.counterexamples[1].instance, InstanceKey::Gnm { index: 1, m: 91, .. }));
}

#[test]
fn tightness_at_half_density() {
    let mut cfg = config(Mode::Tightness, (128, 128), &[2], &[]);
    cfg.epsilon = 0.5;
    cfg.trials = 4;
    cfg.budget = 200_000;
    cfg.c_grid = vec![0.25, 0.5];
    let rep = run_tightness(&cfg).unwrap();
    let block = &rep.tightness[0];
    assert_eq!(block.m, 4096);
    assert_eq!(parse_side(&block.threshold).unwrap().0, specsat_core::exact::parse("64"));
    for s in &block.samples {
        // μ ≥ 2e/n = 64, strictly more unless G is regular.
        assert!(s.mu_upper >= 64.0);
        assert!(s.largest_s >= 3, "{s:?}");
    }
    assert_eq!(block.exceeding, block.samples.iter().filter(|s| s.exceeds == Tri::Yes).count() as u64);
    // ⌊0.25 ln 128⌋ = 1 and ⌊0.5 ln 128⌋ = 2
    assert_eq!(block.by_c.iter().map(|c| c.s).collect::<Vec<_>>(), vec![1, 2]);
    assert!(block.by_c.iter().all(|c| c.found == 4));
}

#[test]
fn tightness_without_missing_edges_is_complete() {
    let mut cfg = config(Mode::Tightness, (12, 12), &[2], &[]);
    cfg.epsilon = 1e-9;
    cfg.trials = 2;
    let rep = run(&cfg).unwrap();
    let block = &rep.tightness[0];
    assert_eq!(block.m, 66);
    for s in &block.samples {
        assert!((s.mu_lower - 11.0).abs() < 1e-8);
        // μ(K_n) = n − 1 falls below (1 − ε)n once ε < 1/n.
        assert_eq!(s.exceeds, Tri::No);
        assert_eq!((s.largest_s, s.stopped_by.as_str()), (6, "order"));
    }
}

#[test]
fn summary_csv_has_one_row_per_theorem() {
    let ids = [TheoremId::FactSTT, TheoremId::FactLeNSMM];
    let rep = run(&config(Mode::Exhaustive, (4, 4), &[2], &ids)).unwrap();
    let csv = rep.summary_csv();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("theorem,checked,"));
    assert!(lines[1].starts_with("FactSTT,64,"));
}
