use specsat::config::{parse_count, parse_range, ConfigError, ExperimentConfig, Family, Mode};
use specsat_core::theorems::{LeNsmmReading, TheoremId};

#[test]
fn parses_a_full_file() {
    let cfg = ExperimentConfig::parse(
        "# random hunt near the Turán density\n\
         mode = random_hunt\n\
         n = 20..24   # inclusive\n\
         r = 2, 3\n\
         theorems = stt, lensmm, t1_2\n\
         seed = 42\n\
         trials = 1e3\n\
         budget = 1e6\n\
         tol = 1e-12\n\
         edge_offset = -3\n\
         lensmm = clique_order_plus_one\n\
         families = turan, kr_plus\n\
         max_records = 5\n\
         threads = 2\n\
         output = out.json\n",
    )
    .unwrap();
    assert_eq!(cfg.mode, Mode::RandomHunt);
    assert_eq!((cfg.n_min, cfg.n_max), (20, 24));
    assert_eq!(cfg.r, vec![2, 3]);
    assert_eq!(cfg.theorems, vec![TheoremId::FactSTT, TheoremId::FactLeNSMM, TheoremId::T1_2]);
    assert_eq!(cfg.seed, Some(42));
    assert_eq!(cfg.trials, 1000);
    assert_eq!(cfg.budget, 1_000_000);
    assert_eq!(cfg.tol, 1e-12);
    assert_eq!(cfg.edge_offset, -3);
    assert_eq!(cfg.lensmm, LeNsmmReading::CliqueOrderPlusOne);
    assert_eq!(cfg.families, vec![Family::Turan, Family::KrPlus]);
    assert_eq!(cfg.max_records, 5);
    assert_eq!(cfg.threads, Some(2));
    assert_eq!(cfg.output.as_deref(), Some(std::path::Path::new("out.json")));
}

#[test]
fn numbers_accept_scientific_notation() {
    assert_eq!(parse_count("1e8"), Ok(100_000_000));
    assert_eq!(parse_count("2.5e3"), Ok(2500));
    assert_eq!(parse_count("18446744073709551615"), Ok(u64::MAX));
    assert!(parse_count("1.5").is_err());
    assert!(parse_count("-1").is_err());
    assert!(parse_count("1e30").is_err());
    assert_eq!(parse_range("3..8"), Ok((3, 8)));
    assert_eq!(parse_range("3-8"), Ok((3, 8)));
    assert_eq!(parse_range("7"), Ok((7, 7)));
    assert!(parse_range("8..3").is_err());
}

#[test]
fn invariants_are_enforced() {
    let err = ExperimentConfig::parse("mode = exhaustive\nn = 9\n").unwrap_err();
    assert!(matches!(err, ConfigError::Invalid(_)), "{err}");
    assert!(ExperimentConfig::parse("mode = exhaustive\nn = 8\n").is_ok());
    assert!(ExperimentConfig::parse("mode = random_hunt\nn = 10\n").is_err());
    assert!(ExperimentConfig::parse("mode = tightness\nn = 10\n").is_err());
    assert!(ExperimentConfig::parse("mode = tightness\nn = 10\nseed = 1\nepsilon = 1\n").is_err());
    assert!(ExperimentConfig::parse("mode = exhaustive\nn = 5\nsample_cap = 10\n").is_err());
    assert!(ExperimentConfig::parse("r = 1\n").is_err());
    assert!(ExperimentConfig::parse("b = -1\n").is_err());
    assert!(ExperimentConfig::parse("tol = 0\n").is_err());
}

#[test]
fn syntax_errors_name_the_line_or_key() {
    assert_eq!(
        ExperimentConfig::parse("mode = exhaustive\nn 5\n").unwrap_err(),
        ConfigError::Syntax { line: 2, msg: "expected key = value, got \"n 5\"".into() }
    );
    assert!(matches!(ExperimentConfig::parse("colour = red\n"), Err(ConfigError::Value { key, .. }) if key == "colour"));
    assert!(matches!(ExperimentConfig::parse("theorems = t9\n"), Err(ConfigError::Value { key, .. }) if key == "theorems"));
    assert!(matches!(ExperimentConfig::parse("mode = sweep\n"), Err(ConfigError::Value { key, .. }) if key == "mode"));
}

#[test]
fn echo_round_trips_and_omits_run_settings() {
    let mut cfg = ExperimentConfig::parse("mode = family_sweep\nn = 4..9\nr = 2..4\nc = 0.25\n").unwrap();
    cfg.threads = Some(8);
    let json = serde_json::to_string(&cfg).unwrap();
    assert!(!json.contains("threads") && !json.contains("output"));
    let back: ExperimentConfig = serde_json::from_str(&json).unwrap();
    assert_eq!(back, ExperimentConfig { threads: None, ..cfg });
}
