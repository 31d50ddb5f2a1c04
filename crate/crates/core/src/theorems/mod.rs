//! Hypothesis and conclusion checkers for the spectral saturation theorems
//! and the facts they rest on.
//!
//! Every bound involving `n`, `r`, `b` or `c` is decided in exact integer or
//! rational arithmetic. Floating point enters only through spectral radius
//! estimates, which carry certified intervals (see [`crate::spectral`]).

mod checks;
mod regime;
mod stability;
mod validate;

use alloc::string::String;
use alloc::vec::Vec;
use core::cell::OnceCell;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::spectral::{self, Resolution, SpectralEstimate};
use crate::subgraph::{Embedding, JointReport, BookReport, DEFAULT_BUDGET, DEFAULT_COLORING_CAP};
use crate::Error;

pub use checks::{
    check, check_book_remark, check_edge_implies_spectral, check_fact_lekd, check_fact_lenslmm, check_fact_thv4,
    check_fact_tsize, check_spectral_turan, check_stability, check_theorem1, check_theorem2, check_theorem3,
};
pub use regime::{
    b_regime, c_ln_n_at_least_two, default_b, default_c, theorem1_2_regime, theorem1_regime, theorem2_2_regime, theorem2_c_max,
    theorem2_regime, theorem3_regime, thv4_c_max, thv4_regime,
};
pub use stability::{exhaustive_stability_witness, find_stability_witness, StabilityBounds, WitnessSearch};
pub use validate::validate_certificate;

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T1_2,
    T2_2,
    T3_2,
    FactSTT,
    FactLeNSMM,
    FactTsize,
    FactLeKd,
    FactThv4,
    EdgeImpliesSpectral,
    BookRemark,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        Self::T1,
        Self::T2,
        Self::T3,
        Self::T1_2,
        Self::T2_2,
        Self::T3_2,
        Self::FactSTT,
        Self::FactLeNSMM,
        Self::FactTsize,
        Self::FactLeKd,
        Self::FactThv4,
        Self::EdgeImpliesSpectral,
        Self::BookRemark,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::T1 => "T1",
            Self::T2 => "T2",
            Self::T3 => "T3",
            Self::T1_2 => "T1_2",
            Self::T2_2 => "T2_2",
            Self::T3_2 => "T3_2",
            Self::FactSTT => "FactSTT",
            Self::FactLeNSMM => "FactLeNSMM",
            Self::FactTsize => "FactTsize",
            Self::FactLeKd => "FactLeKd",
            Self::FactThv4 => "FactThv4",
            Self::EdgeImpliesSpectral => "EdgeImpliesSpectral",
            Self::BookRemark => "BookRemark",
        }
    }

    pub fn is_stability(self) -> bool {
        matches!(self, Self::T1_2 | Self::T2_2 | Self::T3_2)
    }

    /// Whether the hypothesis compares `μ(G)` against a threshold.
    pub fn spectral_hypothesis(self) -> bool {
        matches!(
            self,
            Self::T1 | Self::T2 | Self::T3 | Self::T1_2 | Self::T2_2 | Self::T3_2 | Self::FactSTT | Self::BookRemark
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    /// Accepts the canonical names and short forms such as `t1`, `t1.2`,
    /// `stt`, `lensmm`, `tsize`, `lekd`, `thv4`, `edge`, `book`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let key: String = s.chars().filter(|c| !matches!(c, '_' | '.' | '-')).flat_map(char::to_lowercase).collect();
        Ok(match key.as_str() {
            "t1" => Self::T1,
            "t2" => Self::T2,
            "t3" => Self::T3,
            "t12" => Self::T1_2,
            "t22" => Self::T2_2,
            "t32" => Self::T3_2,
            "stt" | "factstt" => Self::FactSTT,
            "lensmm" | "lenslmm" | "factlensmm" => Self::FactLeNSMM,
            "tsize" | "facttsize" => Self::FactTsize,
            "lekd" | "factlekd" => Self::FactLeKd,
            "thv4" | "factthv4" => Self::FactThv4,
            "edge" | "edgeimpliesspectral" | "eis" => Self::EdgeImpliesSpectral,
            "book" | "bookremark" => Self::BookRemark,
            _ => return Err(Error::InvalidParameter("unknown theorem id")),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    Yes,
    No,
    Inconclusive,
}

impl Tri {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Self::Yes
        } else {
            Self::No
        }
    }

    pub fn from_option(b: Option<bool>) -> Self {
        b.map_or(Self::Inconclusive, Self::from_bool)
    }

    pub fn or(self, other: Tri) -> Tri {
        match (self, other) {
            (Self::Yes, _) | (_, Self::Yes) => Self::Yes,
            (Self::No, Self::No) => Self::No,
            _ => Self::Inconclusive,
        }
    }

    pub fn and(self, other: Tri) -> Tri {
        match (self, other) {
            (Self::No, _) | (_, Self::No) => Self::No,
            (Self::Yes, Self::Yes) => Self::Yes,
            _ => Self::Inconclusive,
        }
    }
}

/// Which form of the clique-count lower bound to check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeNsmmReading {
    /// `k_r(G)` on the left, as printed.
    #[default]
    AsStated,
    /// `k_{r+1}(G)` on the left, the form the proofs apply.
    CliqueOrderPlusOne,
}

/// Constants in the stability condition: `(1 − A·b^{1/3})n` for the order
/// and `(1 − 1/r − B·b^{1/3})n` for the minimum degree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityReading {
    /// `A = 4`, `B = 7`.
    #[default]
    Theorem,
    /// `A = 3`, `B = 6`, from the underlying fact with its `c` read as `b`.
    Tstab,
}

impl StabilityReading {
    pub fn constants(self) -> (u32, u32) {
        match self {
            Self::Theorem => (4, 7),
            Self::Tstab => (3, 6),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremParams {
    pub r: usize,
    /// Density exponent; each checker falls back to its theorem's constant.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    /// Stability slack.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    pub tol: f64,
    pub budget: u64,
    pub coloring_cap: u64,
    #[serde(default)]
    pub lensmm: LeNsmmReading,
    #[serde(default)]
    pub stability: StabilityReading,
}

impl TheoremParams {
    pub fn new(r: usize) -> Self {
        Self {
            r,
            c: None,
            b: None,
            tol: spectral::DEFAULT_TOL,
            budget: DEFAULT_BUDGET,
            coloring_cap: DEFAULT_COLORING_CAP,
            lensmm: LeNsmmReading::default(),
            stability: StabilityReading::default(),
        }
    }

    pub fn with_c(mut self, c: f64) -> Self {
        self.c = Some(c);
        self
    }

    pub fn with_b(mut self, b: f64) -> Self {
        self.b = Some(b);
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub(crate) fn validate(&self) -> Result<(), Error> {
        if self.r < 2 {
            return Err(Error::InvalidParameter("r must be at least 2"));
        }
        if self.c.is_some_and(|c| !(c.is_finite() && c >= 0.0)) {
            return Err(Error::InvalidParameter("c must be finite and non-negative"));
        }
        if self.b.is_some_and(|b| !(b.is_finite() && b >= 0.0)) {
            return Err(Error::InvalidParameter("b must be finite and non-negative"));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::InvalidParameter("tol must be positive"));
        }
        Ok(())
    }
}

/// Stability branch that carried the conclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
}

/// One inequality evaluated during a check. Sides are exact rationals
/// (`p` or `p/q`), or closed intervals `[lo, hi]` of exact rationals when a
/// side is a certified spectral estimate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub name: String,
    pub lhs: String,
    pub relation: Relation,
    pub rhs: String,
    pub holds: Tri,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Clique { vertices: Vec<usize> },
    Embedding { spec: Vec<usize>, embedding: Embedding },
    Joint { report: JointReport, lhs: String, rhs: String },
    Stability { vertices: Vec<usize>, coloring: Vec<usize> },
    Inequality { lhs: String, relation: Relation, rhs: String },
    Book { report: BookReport, required: u64 },
    /// `μ(G) ≥ lower > μ(T_r(n))`.
    MuExceedsTuran { lower: String, resolution: Resolution },
    /// `μ(G) ≤ upper ≤ bound`, or settled exactly when `resolution` says so.
    MuAtMost { bound: String, upper: String, resolution: Resolution },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphRecord {
    pub fn from_graph(g: &Graph) -> Self {
        Self { n: g.n(), edges: g.edges().collect() }
    }

    pub fn to_graph(&self) -> Result<Graph, Error> {
        Graph::from_edges(self.n, self.edges.iter().copied())
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub n: usize,
    pub r: usize,
    /// Parameters with every default filled in.
    pub params: TheoremParams,
    pub hypothesis: Tri,
    pub conclusion: Tri,
    pub in_regime: bool,
    /// The conclusion asks for parts of size `⌊c ln n⌋ = 0`.
    #[serde(default, skip_serializing_if = "is_false")]
    pub vacuous: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<Branch>,
    /// How the spectral comparison in the hypothesis was settled.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolution: Option<Resolution>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    /// Sides of the main conclusion inequality, when it is one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inequalities: Vec<Inequality>,
    /// The input graph; present on counterexamples only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphRecord>,
}

impl TheoremVerdict {
    pub(crate) fn new(theorem: TheoremId, n: usize, params: TheoremParams) -> Self {
        Self {
            theorem,
            n,
            r: params.r,
            params,
            hypothesis: Tri::Inconclusive,
            conclusion: Tri::Inconclusive,
            in_regime: true,
            vacuous: false,
            branch: None,
            resolution: None,
            certificate: None,
            lhs: None,
            rhs: None,
            inequalities: Vec::new(),
            graph: None,
        }
    }

    /// Hypothesis holds and conclusion fails, in or out of regime.
    pub fn is_counterexample(&self) -> bool {
        self.hypothesis == Tri::Yes && self.conclusion == Tri::No
    }

    pub fn is_inconclusive(&self) -> bool {
        self.hypothesis == Tri::Inconclusive || (self.hypothesis == Tri::Yes && self.conclusion == Tri::Inconclusive)
    }
}

/// A graph together with lazily computed quantities shared by checkers.
pub struct Instance<'g> {
    g: &'g Graph,
    tol: f64,
    estimate: OnceCell<SpectralEstimate>,
}

impl<'g> Instance<'g> {
    pub fn new(g: &'g Graph, tol: f64) -> Self {
        Self { g, tol, estimate: OnceCell::new() }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// Spectral radius estimate at `tol`, cached for the instance tolerance.
    pub fn estimate(&self, tol: f64) -> SpectralEstimate {
        let compute = || spectral::spectral_radius(self.g, tol, spectral::default_max_iter(self.g.n()));
        if tol == self.tol {
            *self.estimate.get_or_init(compute)
        } else {
            compute()
        }
    }
}
