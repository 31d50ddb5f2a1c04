//! Batch experiments. Instances are evaluated in parallel in fixed-size
//! chunks; chunk results are merged in instance order, so reports do not
//! depend on the thread count.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use specsat_core::exact::{self, Rational};
use specsat_core::graph::{
    graph_from_mask, make_kr_plus, make_turan, make_turan_minus_edge, make_turan_plus_edge, turan_edge_count,
    turan_part_sizes,
};
use specsat_core::random::{derive_seed, random_gnm};
use specsat_core::spectral::{certify_mu_exceeds, MuThreshold, Resolution};
use specsat_core::subgraph::{book_size, find_complete_multipartite, find_kr_plus, joint_size, SearchOutcome};
use specsat_core::theorems::{check, Instance, TheoremId, TheoremParams, TheoremVerdict, Tri};
use specsat_core::{Graph, PartSpec};

use crate::config::{ConfigError, ExperimentConfig, Family, Mode};
use crate::report::{
    positive_rhs, slack, CounterexampleRecord, EscalationRecord, EscalationSummary, ExperimentReport, FamilyRow,
    FamilyStats, InstanceKey, RowVerdict, RunMeta, SlackRecord, TheoremSummary, TightnessBlock, TightnessByC,
    TightnessSample,
};

const CHUNK: u64 = 4096;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Core(#[from] specsat_core::Error),
    #[error("thread pool: {0}")]
    Threads(String),
}

/// Runs the mode named in the configuration.
pub fn run(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    config.validate()?;
    in_pool(config.threads, || match config.mode {
        Mode::Exhaustive => exhaustive(config),
        Mode::FamilySweep => family_sweep(config),
        Mode::RandomHunt => random_hunt(config),
        Mode::Tightness => tightness(config),
    })
}

/// [`run`] plus timing metadata.
pub fn run_with_meta(config: &ExperimentConfig) -> Result<(ExperimentReport, RunMeta), HarnessError> {
    let start = Instant::now();
    let report = run(config)?;
    let threads = config.threads.filter(|&t| t > 0).unwrap_or_else(rayon::current_num_threads);
    let meta = RunMeta {
        version: env!("CARGO_PKG_VERSION").to_string(),
        wall_time_secs: start.elapsed().as_secs_f64(),
        threads,
    };
    Ok((report, meta))
}

fn with_mode(config: &ExperimentConfig, mode: Mode) -> ExperimentConfig {
    ExperimentConfig { mode, ..config.clone() }
}

pub fn run_exhaustive(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    run(&with_mode(config, Mode::Exhaustive))
}

pub fn run_family_sweep(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    run(&with_mode(config, Mode::FamilySweep))
}

pub fn run_random_hunt(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    run(&with_mode(config, Mode::RandomHunt))
}

pub fn run_tightness(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    run(&with_mode(config, Mode::Tightness))
}

fn in_pool<T: Send>(
    threads: Option<usize>,
    f: impl FnOnce() -> Result<T, HarnessError> + Send,
) -> Result<T, HarnessError> {
    match threads.filter(|&t| t > 0) {
        None => f(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| HarnessError::Threads(e.to_string()))?
            .install(f),
    }
}

/// Results for a run of consecutive instances.
#[derive(Default)]
struct Partial {
    graphs: u64,
    instances: u64,
    counterexample_count: u64,
    counterexamples: Vec<CounterexampleRecord>,
    escalations: EscalationSummary,
    summary: BTreeMap<TheoremId, TheoremSummary>,
    slack: BTreeMap<(TheoremId, String), (Rational, SlackRecord)>,
    rows: Vec<FamilyRow>,
    skipped: u64,
}

impl Partial {
    fn record(&mut self, key: InstanceKey, v: TheoremVerdict, max_records: usize) {
        self.instances += 1;
        let s = self.summary.entry(v.theorem).or_default();
        s.checked += 1;
        s.hypothesis.add(v.hypothesis);
        if v.hypothesis == Tri::Yes {
            s.conclusion.add(v.conclusion);
        }
        s.in_regime += u64::from(v.in_regime);
        s.vacuous += u64::from(v.vacuous);
        if let Some(b) = v.branch {
            *s.branches.entry(format!("{b:?}").to_lowercase()).or_default() += 1;
        }
        if v.theorem != TheoremId::FactTsize {
            if let Some(k) = v.lhs.as_deref().and_then(|l| l.parse::<u128>().ok()) {
                *s.lhs_values.entry(k).or_default() += 1;
            }
        }
        if v.hypothesis == Tri::Yes {
            for ineq in v.inequalities.iter().filter(|i| positive_rhs(i)) {
                let Some(q) = slack(ineq) else { continue };
                let k = (v.theorem, ineq.name.clone());
                if self.slack.get(&k).is_some_and(|(best, _)| *best <= q) {
                    continue;
                }
                let rec = SlackRecord {
                    slack: exact::to_string(&q),
                    approx: exact::to_f64(&q),
                    instance: key,
                    r: v.r,
                    lhs: ineq.lhs.clone(),
                    rhs: ineq.rhs.clone(),
                };
                self.slack.insert(k, (q, rec));
            }
        }
        if let Some(res) = v.resolution {
            let e = &mut self.escalations;
            e.comparisons += 1;
            match res {
                Resolution::Numeric => {}
                Resolution::Refined => e.refined += 1,
                Resolution::Exact => e.exact += 1,
                Resolution::Unresolved => e.unresolved += 1,
            }
            if res != Resolution::Numeric && e.records.len() < max_records {
                e.records.push(EscalationRecord { instance: key, theorem: v.theorem, r: v.r, resolution: res });
            }
        }
        if v.is_counterexample() {
            s.counterexamples += 1;
            self.counterexample_count += 1;
            if self.counterexamples.len() < max_records {
                self.counterexamples.push(CounterexampleRecord { instance: key, verdict: v });
            }
        }
    }

    /// Appends `other`, which covers later instances.
    fn merge(&mut self, other: Partial, max_records: usize) {
        self.graphs += other.graphs;
        self.instances += other.instances;
        self.skipped += other.skipped;
        self.counterexample_count += other.counterexample_count;
        let room = max_records.saturating_sub(self.counterexamples.len());
        self.counterexamples.extend(other.counterexamples.into_iter().take(room));
        let e = &mut self.escalations;
        e.comparisons += other.escalations.comparisons;
        e.refined += other.escalations.refined;
        e.exact += other.escalations.exact;
        e.unresolved += other.escalations.unresolved;
        let room = max_records.saturating_sub(e.records.len());
        e.records.extend(other.escalations.records.into_iter().take(room));
        for (id, o) in other.summary {
            let s = self.summary.entry(id).or_default();
            s.checked += o.checked;
            s.hypothesis.merge(&o.hypothesis);
            s.conclusion.merge(&o.conclusion);
            s.counterexamples += o.counterexamples;
            s.in_regime += o.in_regime;
            s.vacuous += o.vacuous;
            for (b, c) in o.branches {
                *s.branches.entry(b).or_default() += c;
            }
            for (k, c) in o.lhs_values {
                *s.lhs_values.entry(k).or_default() += c;
            }
        }
        for (k, (q, rec)) in other.slack {
            // Strict: on ties the earlier instance stays.
            if self.slack.get(&k).is_none_or(|(best, _)| q < *best) {
                self.slack.insert(k, (q, rec));
            }
        }
        self.rows.extend(other.rows);
    }

    fn into_report(mut self, config: &ExperimentConfig) -> ExperimentReport {
        for ((id, name), (_, rec)) in std::mem::take(&mut self.slack) {
            self.summary.entry(id).or_default().min_slack.insert(name, rec);
        }
        let mut report = ExperimentReport::new(config.clone());
        report.graphs = self.graphs;
        report.instances_checked = self.instances;
        report.skipped = self.skipped;
        report.counterexample_count = self.counterexample_count;
        report.counterexamples = self.counterexamples;
        report.escalations = self.escalations;
        report.summary = self.summary;
        report.family_rows = self.rows;
        report
    }
}

/// Evaluates `count` instances in chunks and merges them in order.
fn chunked<F>(count: u64, max_records: usize, eval: F) -> Result<Partial, HarnessError>
where
    F: Fn(u64, &mut Partial) -> Result<(), HarnessError> + Sync,
{
    let chunks = count.div_ceil(CHUNK);
    let parts: Vec<Partial> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut p = Partial::default();
            for i in c * CHUNK..((c + 1) * CHUNK).min(count) {
                eval(i, &mut p)?;
            }
            Ok(p)
        })
        .collect::<Result<_, HarnessError>>()?;
    let mut out = Partial::default();
    for p in parts {
        out.merge(p, max_records);
    }
    Ok(out)
}

fn params_by_r(config: &ExperimentConfig) -> Result<Vec<TheoremParams>, HarnessError> {
    config.r.iter().map(|&r| config.params(r).map_err(|m| ConfigError::Invalid(m).into())).collect()
}

fn check_all(
    p: &mut Partial,
    key: InstanceKey,
    g: &Graph,
    params: &[TheoremParams],
    config: &ExperimentConfig,
) -> Result<(), HarnessError> {
    p.graphs += 1;
    let inst = Instance::new(g, config.tol);
    for prm in params {
        for &id in &config.theorems {
            let v = check(&inst, id, prm)?;
            p.record(key, v, config.max_records);
        }
    }
    Ok(())
}

fn pair_count(n: usize) -> u64 {
    (n * n.saturating_sub(1) / 2) as u64
}

fn exhaustive(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    let params = params_by_r(config)?;
    let mut total = Partial::default();
    for n in config.n_min..=config.n_max {
        let bits = pair_count(n);
        let all = 1u64 << bits;
        let seed = config.seed.map(|s| derive_seed(s, n as u64));
        let count = config.sample_cap.unwrap_or(all);
        let part = chunked(count, config.max_records, |i, p| {
            let mask = match (config.sample_cap, seed) {
                (Some(_), Some(s)) => derive_seed(s, i) & (all - 1),
                _ => i,
            };
            let g = graph_from_mask(n, mask);
            check_all(p, InstanceKey::Mask { n, index: i, mask }, &g, &params, config)
        })?;
        total.merge(part, config.max_records);
    }
    Ok(total.into_report(config))
}

/// `K_r` joined to an independent set on the remaining `n − r` vertices.
pub fn make_book(n: usize, r: usize) -> Result<Graph, specsat_core::Error> {
    if n < r {
        return Err(specsat_core::Error::InvalidParameter("a book needs n >= r"));
    }
    let spine = (0..r).flat_map(|u| (u + 1..r).map(move |v| (u, v)));
    let pages = (0..r).flat_map(|u| (r..n).map(move |v| (u, v)));
    Graph::from_edges(n, spine.chain(pages))
}

/// `K_r^+(2, s_2, …, s_r)` with `s_2, …, s_r` the balanced split of `n − 2`.
pub fn make_family_kr_plus(n: usize, r: usize) -> Result<Graph, specsat_core::Error> {
    if n < r + 1 {
        return Err(specsat_core::Error::InvalidParameter("K_r^+ family needs n >= r + 1"));
    }
    let mut sizes = vec![2];
    sizes.extend(turan_part_sizes(n - 2, r - 1)?);
    make_kr_plus(&PartSpec::new(sizes)?)
}

pub fn make_family(family: Family, n: usize, r: usize) -> Result<Graph, specsat_core::Error> {
    match family {
        Family::Turan => make_turan(n, r),
        Family::TuranPlusEdge => make_turan_plus_edge(n, r),
        Family::TuranMinusEdge => make_turan_minus_edge(n, r),
        Family::KrPlus => make_family_kr_plus(n, r),
        Family::Book => make_book(n, r),
    }
}

fn family_stats(g: &Graph, r: usize, budget: u64) -> Result<FamilyStats, HarnessError> {
    let kr_plus_2 = if g.n() >= 2 * r {
        let outcome = find_kr_plus(g, &PartSpec::balanced(r, 2)?, budget)?;
        Some(outcome_name(&outcome).to_string())
    } else {
        None
    };
    Ok(FamilyStats { joint: joint_size(g, r + 1).size, book: book_size(g, r).size, kr_plus_2 })
}

fn outcome_name(o: &SearchOutcome) -> &'static str {
    match o {
        SearchOutcome::Found { .. } => "found",
        SearchOutcome::Absent { .. } => "absent",
        SearchOutcome::BudgetExhausted { .. } => "budget",
    }
}

fn family_sweep(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    let mut members = Vec::new();
    for n in config.n_min..=config.n_max {
        for &r in &config.r {
            for &family in &config.families {
                members.push((family, n, r));
            }
        }
    }
    let parts: Vec<Partial> = members
        .par_iter()
        .map(|&(family, n, r)| {
            let mut p = Partial::default();
            let Ok(g) = make_family(family, n, r) else {
                p.skipped += 1;
                return Ok(p);
            };
            let params = config.params(r).map_err(ConfigError::Invalid)?;
            let key = InstanceKey::Family { family, n, r };
            let inst = Instance::new(&g, config.tol);
            let mut verdicts = Vec::with_capacity(config.theorems.len());
            for &id in &config.theorems {
                let v = check(&inst, id, &params)?;
                verdicts.push(RowVerdict {
                    theorem: id,
                    hypothesis: v.hypothesis,
                    conclusion: v.conclusion,
                    in_regime: v.in_regime,
                    branch: v.branch,
                    lhs: v.lhs.clone(),
                    rhs: v.rhs.clone(),
                });
                p.record(key, v, config.max_records);
            }
            let stats = if n <= config.stats_max_n { Some(family_stats(&g, r, config.budget)?) } else { None };
            p.graphs += 1;
            p.rows.push(FamilyRow { family, n, r, edges: g.edge_count(), stats, verdicts });
            Ok(p)
        })
        .collect::<Result<_, HarnessError>>()?;
    let mut total = Partial::default();
    for p in parts {
        total.merge(p, config.max_records);
    }
    Ok(total.into_report(config))
}

fn hunt_edges(config: &ExperimentConfig, n: usize, r: usize) -> Result<u64, HarnessError> {
    let m = match config.edges {
        Some(m) => m as i128,
        None => turan_edge_count(n, r)? as i128 + config.edge_offset as i128,
    };
    Ok(m.clamp(0, pair_count(n) as i128) as u64)
}

fn random_hunt(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    let seed = config.seed.expect("validated");
    let mut total = Partial::default();
    let mut block = 0u64;
    for n in config.n_min..=config.n_max {
        for (ri, &r) in config.r.iter().enumerate() {
            let params = params_by_r(config)?;
            let prm = std::slice::from_ref(&params[ri]);
            let m = hunt_edges(config, n, r)?;
            let block_seed = derive_seed(seed, block);
            block += 1;
            let part = chunked(config.trials, config.max_records, |i, p| {
                let s = derive_seed(block_seed, i);
                let g = random_gnm(n, m, s)?;
                check_all(p, InstanceKey::Gnm { n, m, index: i, seed: s }, &g, prm, config)
            })?;
            total.merge(part, config.max_records);
        }
    }
    Ok(total.into_report(config))
}

fn tightness_sample(
    g: &Graph,
    thr: &MuThreshold,
    config: &ExperimentConfig,
    index: u64,
    seed: u64,
) -> Result<TightnessSample, HarnessError> {
    let n = g.n();
    let c = certify_mu_exceeds(g, thr, config.tol, None);
    let mut largest_s = 0;
    let mut stopped_by = "order";
    for s in 1..=n / 2 {
        match find_complete_multipartite(g, &PartSpec::balanced(2, s)?, config.budget) {
            SearchOutcome::Found { .. } => largest_s = s,
            other => {
                stopped_by = outcome_name(&other);
                break;
            }
        }
    }
    Ok(TightnessSample {
        index,
        seed,
        mu_lower: c.estimate.lower(),
        mu_upper: c.estimate.upper(),
        exceeds: Tri::from_option(c.exceeds),
        resolution: c.resolution,
        largest_s,
        stopped_by: stopped_by.to_string(),
    })
}

fn tightness(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    let seed = config.seed.expect("validated");
    let eps = exact::decimal_from_f64(config.epsilon).expect("finite epsilon");
    let mut report_blocks = Vec::new();
    let mut graphs = 0;
    for n in config.n_min.max(2)..=config.n_max {
        let nn = exact::int(n);
        let half_square = exact::frac((n * n) as i64, 2);
        let target = (exact::one() - &eps) * half_square;
        let m_exact = -exact::floor_to_int(&-target);
        let m = num_traits::ToPrimitive::to_u64(&m_exact).unwrap_or(0).min(pair_count(n));
        let threshold = (exact::one() - &eps) * nn;
        let thr = MuThreshold::rational(threshold.clone());
        let block_seed = derive_seed(seed, n as u64);
        let samples: Vec<TightnessSample> = (0..config.trials)
            .into_par_iter()
            .map(|i| {
                let s = derive_seed(block_seed, i);
                let g = random_gnm(n, m, s)?;
                tightness_sample(&g, &thr, config, i, s)
            })
            .collect::<Result<_, HarnessError>>()?;
        graphs += samples.len() as u64;
        let exceeding = samples.iter().filter(|s| s.exceeds == Tri::Yes).count() as u64;
        let by_c = config
            .c_grid
            .iter()
            .map(|&c| {
                let s = exact::floor_c_ln_n(c, n as u64);
                let mut row = TightnessByC { c, s, found: 0, absent: 0, inconclusive: 0 };
                for t in &samples {
                    if s <= t.largest_s as u64 {
                        row.found += 1;
                    } else if t.stopped_by == "budget" {
                        row.inconclusive += 1;
                    } else {
                        row.absent += 1;
                    }
                }
                row
            })
            .collect();
        report_blocks.push(TightnessBlock {
            n,
            m,
            threshold: exact::to_string(&threshold),
            fraction_exceeding: if samples.is_empty() { 0.0 } else { exceeding as f64 / samples.len() as f64 },
            exceeding,
            samples,
            by_c,
        });
    }
    let mut report = ExperimentReport::new(config.clone());
    report.graphs = graphs;
    report.instances_checked = graphs;
    report.tightness = report_blocks;
    Ok(report)
}
