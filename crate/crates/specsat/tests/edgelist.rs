use proptest::prelude::*;
use specsat::edgelist::{format_edge_list, parse_edge_list, read_edge_list, write_edge_list, EdgeListError};
use specsat_core::graph::make_turan;
use specsat_core::random::random_gnm;

#[test]
fn turan_file_matches_by_hand() {
    let text = format_edge_list(&make_turan(5, 2).unwrap());
    assert_eq!(text, "5 6\n0 3\n0 4\n1 3\n1 4\n2 3\n2 4\n");
    assert_eq!(parse_edge_list(&text).unwrap(), make_turan(5, 2).unwrap());
}

#[test]
fn empty_and_edgeless_graphs() {
    let g = parse_edge_list("0 0\n").unwrap();
    assert_eq!(g.n(), 0);
    let g = parse_edge_list("4 0\n").unwrap();
    assert_eq!((g.n(), g.edge_count()), (4, 0));
}

#[test]
fn reversed_pairs_and_crlf_are_accepted() {
    let g = parse_edge_list("3 2\r\n1 0\r\n2 1\r\n").unwrap();
    assert_eq!(format_edge_list(&g), "3 2\n0 1\n1 2\n");
}

#[test]
fn malformed_input_is_rejected() {
    assert!(matches!(parse_edge_list(""), Err(EdgeListError::Parse { line: 1, .. })));
    assert!(matches!(parse_edge_list("3\n"), Err(EdgeListError::Parse { line: 1, .. })));
    assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(EdgeListError::Parse { line: 2, .. })));
    assert!(matches!(parse_edge_list("3 1\n0  1\n"), Err(EdgeListError::Parse { line: 2, .. })));
    assert!(matches!(parse_edge_list("3 1\n0 3\n"), Err(EdgeListError::Parse { line: 2, .. })));
    assert!(matches!(parse_edge_list("3 1\n-1 2\n"), Err(EdgeListError::Parse { line: 2, .. })));
    assert!(matches!(parse_edge_list("3 1\n1 1\n"), Err(EdgeListError::SelfLoop { line: 2, v: 1 })));
    assert!(matches!(
        parse_edge_list("3 2\n0 1\n1 0\n"),
        Err(EdgeListError::Duplicate { line: 3, u: 0, v: 1 })
    ));
    assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(EdgeListError::EdgeCount { declared: 2, found: 1 })));
    assert!(matches!(parse_edge_list("3 0\n0 1\n"), Err(EdgeListError::EdgeCount { declared: 0, found: 1 })));
}

#[test]
fn file_round_trip() {
    let dir = std::env::temp_dir().join(format!("specsat-edgelist-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.el");
    let g = random_gnm(40, 300, 7).unwrap();
    write_edge_list(&path, &g).unwrap();
    assert_eq!(read_edge_list(&path).unwrap(), g);
    assert!(matches!(read_edge_list(&dir.join("missing.el")), Err(EdgeListError::Io(_))));
    std::fs::remove_dir_all(&dir).unwrap();
}

proptest! {
    #[test]
    fn format_then_parse_is_identity(n in 0usize..30, density in 0.0f64..1.0, seed in any::<u64>()) {
        let m = (density * (n * n.saturating_sub(1) / 2) as f64) as u64;
        let g = random_gnm(n, m, seed).unwrap();
        let text = format_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
        // Output is sorted with u < v.
        let pairs: Vec<(usize, usize)> = text
            .lines()
            .skip(1)
            .map(|l| {
                let (a, b) = l.split_once(' ').unwrap();
                (a.parse().unwrap(), b.parse().unwrap())
            })
            .collect();
        prop_assert!(pairs.iter().all(|&(u, v)| u < v));
        prop_assert!(pairs.windows(2).all(|w| w[0] < w[1]));
    }
}
