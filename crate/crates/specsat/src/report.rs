//! Experiment reports. Everything in [`ExperimentReport`] is a function of
//! the configuration; timing lives in [`RunMeta`], written to a sidecar.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use specsat_core::exact::{self, Rational};
use specsat_core::spectral::Resolution;
use specsat_core::theorems::{Branch, Inequality, Relation, TheoremId, TheoremVerdict, Tri};

use crate::config::{ExperimentConfig, Family};

/// Where an instance came from; enough to rebuild its graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum InstanceKey {
    /// Labelled graph with edge mask `mask` (pairs in lexicographic order).
    Mask { n: usize, index: u64, mask: u64 },
    /// `G(n, m)` drawn with `seed`.
    Gnm { n: usize, m: u64, index: u64, seed: u64 },
    Family { family: Family, n: usize, r: usize },
}

impl std::fmt::Display for InstanceKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Self::Mask { n, mask, .. } => write!(f, "n={n} mask={mask}"),
            Self::Gnm { n, m, index, .. } => write!(f, "G({n},{m}) sample {index}"),
            Self::Family { family, n, r } => write!(f, "{} n={n} r={r}", family.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub instance: InstanceKey,
    pub verdict: TheoremVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EscalationRecord {
    pub instance: InstanceKey,
    pub theorem: TheoremId,
    pub r: usize,
    pub resolution: Resolution,
}

/// Spectral comparisons that the first numeric pass did not settle.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EscalationSummary {
    /// Comparisons made, over all verdicts that carry one.
    pub comparisons: u64,
    pub refined: u64,
    pub exact: u64,
    pub unresolved: u64,
    pub records: Vec<EscalationRecord>,
}

impl EscalationSummary {
    pub fn escalated(&self) -> u64 {
        self.refined + self.exact + self.unresolved
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriCounts {
    pub yes: u64,
    pub no: u64,
    pub inconclusive: u64,
}

impl TriCounts {
    pub fn add(&mut self, t: Tri) {
        match t {
            Tri::Yes => self.yes += 1,
            Tri::No => self.no += 1,
            Tri::Inconclusive => self.inconclusive += 1,
        }
    }

    pub(crate) fn merge(&mut self, o: &Self) {
        self.yes += o.yes;
        self.no += o.no;
        self.inconclusive += o.inconclusive;
    }
}

/// Smallest margin seen for one named inequality.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlackRecord {
    /// Exact margin: `lhs − rhs` for `>`/`≥`, `rhs − lhs` for `≤`, using the
    /// pessimistic interval ends.
    pub slack: String,
    pub approx: f64,
    pub instance: InstanceKey,
    pub r: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TheoremSummary {
    pub checked: u64,
    pub hypothesis: TriCounts,
    /// Conclusions of verdicts whose hypothesis holds.
    pub conclusion: TriCounts,
    pub counterexamples: u64,
    pub in_regime: u64,
    pub vacuous: u64,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub branches: BTreeMap<String, u64>,
    /// Over verdicts with a true hypothesis and a positive right side.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub min_slack: BTreeMap<String, SlackRecord>,
    /// Histogram of integer left sides (joint sizes, clique counts).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub lhs_values: BTreeMap<u128, u64>,
}

/// One verdict of a family sweep, without its certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RowVerdict {
    pub theorem: TheoremId,
    pub hypothesis: Tri,
    pub conclusion: Tri,
    pub in_regime: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<Branch>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

/// Structural statistics of a family member.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyStats {
    /// `js_{r+1}(G)`.
    pub joint: u128,
    /// `bk_r(G)`: largest book on an `r`-clique.
    pub book: usize,
    /// Outcome of the `K_r^+(2, …, 2)` search: `found`, `absent` or `budget`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kr_plus_2: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub family: Family,
    pub n: usize,
    pub r: usize,
    pub edges: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<FamilyStats>,
    pub verdicts: Vec<RowVerdict>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TightnessSample {
    pub index: u64,
    pub seed: u64,
    pub mu_lower: f64,
    pub mu_upper: f64,
    /// `μ(G) > (1−ε)n`, certified.
    pub exceeds: Tri,
    pub resolution: Resolution,
    /// Largest `s` with `K_2(s, s) ⊆ G` found before the first failure.
    pub largest_s: usize,
    /// What stopped the search: `absent`, `budget` or `order`.
    pub stopped_by: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TightnessByC {
    pub c: f64,
    /// `⌊c ln n⌋`.
    pub s: u64,
    pub found: u64,
    pub absent: u64,
    pub inconclusive: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TightnessBlock {
    pub n: usize,
    pub m: u64,
    /// `(1−ε)n` as an exact rational.
    pub threshold: String,
    pub samples: Vec<TightnessSample>,
    pub exceeding: u64,
    pub fraction_exceeding: f64,
    pub by_c: Vec<TightnessByC>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub graphs: u64,
    /// Checker calls made: one per graph, `r` and theorem.
    pub instances_checked: u64,
    /// Family members undefined at their `(n, r)`.
    #[serde(default)]
    pub skipped: u64,
    pub counterexample_count: u64,
    /// At most `max_records` entries, in instance order.
    pub counterexamples: Vec<CounterexampleRecord>,
    pub escalations: EscalationSummary,
    pub summary: BTreeMap<TheoremId, TheoremSummary>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub family_rows: Vec<FamilyRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tightness: Vec<TightnessBlock>,
}

/// Run metadata kept out of the report so reports compare byte for byte.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunMeta {
    pub version: String,
    pub wall_time_secs: f64,
    pub threads: usize,
}

impl ExperimentReport {
    pub(crate) fn new(config: ExperimentConfig) -> Self {
        Self {
            config,
            graphs: 0,
            instances_checked: 0,
            skipped: 0,
            counterexample_count: 0,
            counterexamples: Vec::new(),
            escalations: EscalationSummary::default(),
            summary: BTreeMap::new(),
            family_rows: Vec::new(),
            tightness: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// One row per theorem with the tri-state counts.
    pub fn summary_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "theorem",
            "checked",
            "hypothesis_yes",
            "hypothesis_no",
            "hypothesis_inconclusive",
            "conclusion_yes",
            "conclusion_no",
            "conclusion_inconclusive",
            "counterexamples",
            "in_regime",
            "vacuous",
        ])
        .expect("in-memory writer");
        for (id, s) in &self.summary {
            let nums = [
                s.checked,
                s.hypothesis.yes,
                s.hypothesis.no,
                s.hypothesis.inconclusive,
                s.conclusion.yes,
                s.conclusion.no,
                s.conclusion.inconclusive,
                s.counterexamples,
                s.in_regime,
                s.vacuous,
            ];
            let mut row = vec![id.name().to_string()];
            row.extend(nums.iter().map(u64::to_string));
            w.write_record(&row).expect("in-memory writer");
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
    }
}

/// Parses an inequality side: `p`, `p/q`, `[lo, hi]` or an interval with an
/// `inf` end (which yields `None` for that end).
pub fn parse_side(s: &str) -> Option<(Option<Rational>, Option<Rational>)> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let (lo, hi) = inner.split_once(',')?;
        let end = |t: &str| if t.trim().ends_with("inf") { None } else { exact::parse(t.trim()) };
        return Some((end(lo), end(hi)));
    }
    let q = exact::parse(s)?;
    Some((Some(q.clone()), Some(q)))
}

/// Pessimistic margin of an inequality, when both relevant ends are finite.
pub fn slack(ineq: &Inequality) -> Option<Rational> {
    let (llo, lhi) = parse_side(&ineq.lhs)?;
    let (rlo, rhi) = parse_side(&ineq.rhs)?;
    match ineq.relation {
        Relation::Gt | Relation::Ge => Some(llo? - rhi?),
        Relation::Le => Some(rlo? - lhi?),
    }
}

/// The right side is positive at its low end.
pub(crate) fn positive_rhs(ineq: &Inequality) -> bool {
    matches!(parse_side(&ineq.rhs), Some((Some(lo), _)) if lo > exact::int(0))
}
