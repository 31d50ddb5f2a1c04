use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::regime::{self, default_b, default_c};
use super::stability::{b_rational, exhaustive_stability_witness, find_stability_witness, StabilityBounds, WitnessSearch};
use super::{
    Branch, Certificate, GraphRecord, Inequality, Instance, LeNsmmReading, Relation, TheoremId, TheoremParams,
    TheoremVerdict, Tri,
};
use crate::exact::{self, ceil_n_pow, floor_c_ln_n, PowExponent, Rational};
use crate::graph::{turan_edge_count, Graph, PartSpec};
use crate::spectral::{certify_mu_exceeds, MuThreshold, Resolution};
use crate::subgraph::{book_size, clique_exists, count_cliques, find_kr_plus, joint_size, SearchOutcome};
use crate::Error;

/// Largest order for which a failed greedy stability search is followed by
/// an exhaustive one.
const EXHAUSTIVE_STABILITY_MAX_N: usize = 12;

fn big(x: usize) -> BigInt {
    BigInt::from(x)
}

fn big_pow(x: usize, e: usize) -> BigInt {
    num_traits::pow(big(x), e)
}

fn rat(q: &Rational) -> String {
    exact::to_string(q)
}

fn float_rat(x: f64) -> String {
    exact::rational_from_f64(x).map_or_else(|| format!("{x}"), |q| rat(&q))
}

fn interval(lo: f64, hi: f64) -> String {
    format!("[{}, {}]", float_rat(lo), float_rat(hi))
}

/// Result of a certified comparison of `μ(G)` with a threshold.
struct MuCheck {
    holds: Tri,
    resolution: Resolution,
    record: Inequality,
    lower: f64,
    upper: f64,
}

fn mu_exceeds(inst: &Instance, thr: &MuThreshold, tol: f64, name: &str, rhs: String) -> MuCheck {
    let g = inst.graph();
    let c = certify_mu_exceeds(g, thr, tol, Some(inst.estimate(tol)));
    let holds = Tri::from_option(c.exceeds);
    let (lower, upper) = (c.estimate.lower(), c.estimate.upper());
    MuCheck {
        holds,
        resolution: c.resolution,
        record: Inequality { name: name.into(), lhs: interval(lower, upper), relation: Relation::Gt, rhs, holds },
        lower,
        upper,
    }
}

fn mu_exceeds_turan(inst: &Instance, r: usize, tol: f64) -> MuCheck {
    let n = inst.graph().n();
    let name = "mu(G) > mu(T_r(n))";
    if n == 0 {
        let record = Inequality { name: name.into(), lhs: "0".into(), relation: Relation::Gt, rhs: "0".into(), holds: Tri::No };
        return MuCheck { holds: Tri::No, resolution: Resolution::Numeric, record, lower: 0.0, upper: 0.0 };
    }
    let thr = MuThreshold::turan(n, r, tol).expect("r >= 2");
    let rhs = interval(thr.approx - thr.approx_err, thr.approx + thr.approx_err);
    mu_exceeds(inst, &thr, tol, name, rhs)
}

fn finish(mut v: TheoremVerdict, g: &Graph) -> TheoremVerdict {
    if v.is_counterexample() {
        v.graph = Some(GraphRecord::from_graph(g));
    }
    v
}

/// `js_{r+1}(G) > n^{r−1}/r^e`, decided as `js · r^e > n^{r−1}`.
fn joint_bound(g: &Graph, r: usize, e: usize, name: &str) -> (Tri, Inequality, Option<Certificate>) {
    let n = g.n();
    let report = joint_size(g, r + 1);
    let holds = BigInt::from(report.size) * big_pow(r, e) > big_pow(n, r - 1);
    let lhs = format!("{}", report.size);
    let rhs = rat(&Rational::new(big_pow(n, r - 1), big_pow(r, e)));
    let record = Inequality { name: name.into(), lhs: lhs.clone(), relation: Relation::Gt, rhs: rhs.clone(), holds: Tri::from_bool(holds) };
    let cert = holds.then_some(Certificate::Joint { report, lhs, rhs });
    (Tri::from_bool(holds), record, cert)
}

/// Part sizes `(max(2,s), s, …, s[, last])` with `r` parts in total.
pub(crate) fn kr_plus_sizes(r: usize, s: u64, last: Option<u64>) -> Vec<usize> {
    let s = s as usize;
    let mut sizes = vec![s; r];
    if let Some(t) = last {
        sizes[r - 1] = t as usize;
    }
    sizes[0] = sizes[0].max(2);
    sizes
}

struct KrPlusCheck {
    holds: Tri,
    vacuous: bool,
    cert: Option<Certificate>,
}

/// `G ⊇ K_r^+(s, …, s[, last])`. `s = 0` makes the conclusion vacuous.
fn kr_plus_conclusion(g: &Graph, r: usize, s: u64, last: Option<u64>, budget: u64) -> KrPlusCheck {
    if s == 0 {
        return KrPlusCheck { holds: Tri::Yes, vacuous: true, cert: None };
    }
    let sizes = kr_plus_sizes(r, s, last);
    let spec = PartSpec::new(sizes.clone()).expect("positive part sizes");
    match find_kr_plus(g, &spec, budget).expect("first part has at least two vertices") {
        SearchOutcome::Found { embedding, .. } => {
            debug_assert!(crate::subgraph::validate_embedding(g, &spec, &embedding).is_ok());
            KrPlusCheck { holds: Tri::Yes, vacuous: false, cert: Some(Certificate::Embedding { spec: sizes, embedding }) }
        }
        SearchOutcome::Absent { .. } => KrPlusCheck { holds: Tri::No, vacuous: false, cert: None },
        SearchOutcome::BudgetExhausted { .. } => KrPlusCheck { holds: Tri::Inconclusive, vacuous: false, cert: None },
    }
}

fn floor_c_ln(c: f64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        floor_c_ln_n(c, n as u64)
    }
}

fn ceil_pow(n: usize, e: &PowExponent) -> u64 {
    if n == 0 {
        0
    } else {
        ceil_n_pow(n as u64, e)
    }
}

/// `K_{r+1} ⊆ G` and `r^4·δ(G) > (r^4 − r^3 − 1)·n`.
fn high_degree_clique_hypothesis(g: &Graph, r: usize) -> (Tri, Inequality) {
    let n = g.n();
    let r4 = big_pow(r, 4);
    let lhs = &r4 * big(g.min_degree());
    let rhs = (&r4 - big_pow(r, 3) - 1) * big(n);
    let degree_ok = lhs > rhs;
    let record = Inequality {
        name: "r^4 delta(G) > (r^4 - r^3 - 1) n".into(),
        lhs: format!("{lhs}"),
        relation: Relation::Gt,
        rhs: format!("{rhs}"),
        holds: Tri::from_bool(degree_ok),
    };
    let holds = degree_ok && clique_exists(g, r + 1).is_some();
    (Tri::from_bool(holds), record)
}

fn spectral_turan(inst: &Instance, p: &TheoremParams) -> TheoremVerdict {
    let g = inst.graph();
    let mut v = TheoremVerdict::new(TheoremId::FactSTT, g.n(), p.clone());
    let h = mu_exceeds_turan(inst, p.r, p.tol);
    v.hypothesis = h.holds;
    v.resolution = Some(h.resolution);
    v.inequalities.push(h.record);
    let clique = clique_exists(g, p.r + 1);
    v.conclusion = Tri::from_bool(clique.is_some());
    v.certificate = clique.map(|vertices| Certificate::Clique { vertices });
    finish(v, g)
}

fn theorem1(inst: &Instance, p: &TheoremParams) -> TheoremVerdict {
    let g = inst.graph();
    let (n, r) = (g.n(), p.r);
    let mut v = TheoremVerdict::new(TheoremId::T1, n, p.clone());
    v.in_regime = regime::theorem1_regime(n, r);
    let h = mu_exceeds_turan(inst, r, p.tol);
    v.hypothesis = h.holds;
    v.resolution = Some(h.resolution);
    v.inequalities.push(h.record);
    let (holds, record, cert) = joint_bound(g, r, 2 * r + 4, "js_{r+1}(G) > n^{r-1}/r^{2r+4}");
    v.conclusion = holds;
    v.lhs = Some(record.lhs.clone());
    v.rhs = Some(record.rhs.clone());
    v.inequalities.push(record);
    v.certificate = cert;
    finish(v, g)
}

/// Theorems 2 and 3 share everything but the target shape and regime.
fn theorem2_or_3(inst: &Instance, p: &TheoremParams, id: TheoremId) -> TheoremVerdict {
    let g = inst.graph();
    let (n, r) = (g.n(), p.r);
    let c = p.c.unwrap_or_else(|| default_c(id, r));
    let mut params = p.clone();
    params.c = Some(c);
    let mut v = TheoremVerdict::new(id, n, params);
    let h = mu_exceeds_turan(inst, r, p.tol);
    v.hypothesis = h.holds;
    v.resolution = Some(h.resolution);
    v.inequalities.push(h.record);
    let s = floor_c_ln(c, n);
    let last = match id {
        TheoremId::T2 => {
            v.in_regime = regime::theorem2_regime(n, r, c);
            Some(ceil_pow(n, &PowExponent::OneMinusSqrt { k: 1, c }))
        }
        _ => {
            v.in_regime = p.c.is_none() && regime::theorem3_regime(n, r, false);
            None
        }
    };
    let k = kr_plus_conclusion(g, r, s, last, p.budget);
    v.conclusion = k.holds;
    v.vacuous = k.vacuous;
    v.certificate = k.cert;
    finish(v, g)
}

fn stability(inst: &Instance, p: &TheoremParams, id: TheoremId) -> TheoremVerdict {
    let g = inst.graph();
    let (n, r) = (g.n(), p.r);
    let b = p.b.unwrap_or_else(|| default_b(r));
    let mut params = p.clone();
    params.b = Some(b);
    let c = match id {
        TheoremId::T1_2 => None,
        _ => Some(p.c.unwrap_or_else(|| default_c(id, r))),
    };
    params.c = c;
    let mut v = TheoremVerdict::new(id, n, params);
    let b_exact = b_rational(b);

    // μ(G) > (1 − 1/r − b)·n
    let q = (exact::one() - exact::frac(1, r as i64) - &b_exact) * exact::int(n);
    let h = mu_exceeds(inst, &MuThreshold::rational(q.clone()), p.tol, "mu(G) > (1 - 1/r - b) n", rat(&q));
    v.hypothesis = h.holds;
    v.resolution = Some(h.resolution);
    v.inequalities.push(h.record);

    // (a)
    let (a, a_cert) = match id {
        TheoremId::T1_2 => {
            v.in_regime = regime::theorem1_2_regime(n, r, b);
            let (holds, record, cert) = joint_bound(g, r, 2 * r + 5, "js_{r+1}(G) > n^{r-1}/r^{2r+5}");
            v.lhs = Some(record.lhs.clone());
            v.rhs = Some(record.rhs.clone());
            v.inequalities.push(record);
            (holds, cert)
        }
        _ => {
            let c = c.unwrap();
            let s = floor_c_ln(c, n);
            let last = if id == TheoremId::T2_2 {
                v.in_regime = regime::theorem2_2_regime(n, r, c, b);
                Some(ceil_pow(n, &PowExponent::OneMinusSqrt { k: 2, c }))
            } else {
                v.in_regime = p.c.is_none() && regime::theorem3_regime(n, r, true) && regime::b_regime(r, b);
                None
            };
            let k = kr_plus_conclusion(g, r, s, last, p.budget);
            v.vacuous = k.vacuous;
            (k.holds, k.cert)
        }
    };

    // (b)
    let bounds = StabilityBounds::new(n, r, &b_exact, p.stability.constants());
    let mut b_cert = None;
    let witness = if n == 0 {
        Tri::No
    } else {
        match find_stability_witness(g, &bounds, p.coloring_cap) {
            WitnessSearch::Found { vertices, coloring } => {
                push_stability_records(&mut v, g, &bounds, &vertices);
                b_cert = Some(Certificate::Stability { vertices, coloring });
                Tri::Yes
            }
            WitnessSearch::NotFound { .. } if n <= EXHAUSTIVE_STABILITY_MAX_N => {
                match exhaustive_stability_witness(g, &bounds, p.coloring_cap) {
                    Some(Some((vertices, coloring))) => {
                        push_stability_records(&mut v, g, &bounds, &vertices);
                        b_cert = Some(Certificate::Stability { vertices, coloring });
                        Tri::Yes
                    }
                    Some(None) => Tri::No,
                    None => Tri::Inconclusive,
                }
            }
            WitnessSearch::NotFound { .. } => Tri::Inconclusive,
        }
    };

    v.conclusion = a.or(witness);
    // A vacuous (a) only wins when there is no witness for (b).
    if a == Tri::Yes && !v.vacuous {
        v.branch = Some(Branch::A);
        v.certificate = a_cert;
    } else if witness == Tri::Yes {
        v.branch = Some(Branch::B);
        v.vacuous = false;
        v.certificate = b_cert;
    } else if a == Tri::Yes {
        v.branch = Some(Branch::A);
    }
    finish(v, g)
}

fn push_stability_records(v: &mut TheoremVerdict, g: &Graph, bounds: &StabilityBounds, vertices: &[usize]) {
    let n = exact::int(bounds.n);
    let n3 = exact::pow(&n, 3);
    let m = vertices.len();
    let order_lhs = exact::pow(&exact::int(bounds.n - m), 3);
    let order_rhs = exact::pow(&exact::int(bounds.order_coef), 3) * &bounds.b * &n3;
    v.inequalities.push(Inequality {
        name: format!("(n - |G0|)^3 <= {}^3 b n^3", bounds.order_coef),
        holds: Tri::from_bool(order_lhs <= order_rhs),
        lhs: rat(&order_lhs),
        relation: Relation::Le,
        rhs: rat(&order_rhs),
    });
    let h = g.induced_subgraph(vertices).expect("valid witness");
    let delta = h.min_degree();
    let slack = (exact::one() - exact::frac(1, bounds.r as i64)) * &n - exact::int(delta);
    let deg_lhs = exact::pow(&exact::int(bounds.degree_coef), 3) * &bounds.b * &n3;
    let deg_rhs = exact::pow(&slack, 3);
    v.inequalities.push(Inequality {
        name: format!("{}^3 b n^3 > ((1 - 1/r) n - delta(G0))^3", bounds.degree_coef),
        holds: Tri::from_bool(deg_lhs > deg_rhs),
        lhs: rat(&deg_lhs),
        relation: Relation::Gt,
        rhs: rat(&deg_rhs),
    });
}

/// `(μ/n − 1 + 1/r)·r(r−1)/(r+1)·(n/r)^{r+1}` at a given `μ`.
pub(crate) fn lensmm_rhs(mu: &Rational, n: usize, r: usize) -> Rational {
    if n == 0 {
        return Rational::from_integer(BigInt::from(0));
    }
    let nn = exact::int(n);
    let coef = exact::frac((r * (r - 1)) as i64, (r + 1) as i64);
    let base = exact::pow(&(&nn / exact::int(r)), (r + 1) as u32);
    (mu / &nn - exact::one() + exact::frac(1, r as i64)) * coef * base
}

/// The largest `μ` for which the bound still holds: `k ≥ rhs(μ) ⟺ μ ≤ q`.
pub(crate) fn lensmm_mu_limit(k: u128, n: usize, r: usize) -> Rational {
    let nn = exact::int(n);
    let coef = exact::frac((r * (r - 1)) as i64, (r + 1) as i64);
    let base = exact::pow(&(&nn / exact::int(r)), (r + 1) as u32);
    let k = exact::int(BigInt::from(k));
    nn * (exact::one() - exact::frac(1, r as i64) + k / (coef * base))
}

fn lensmm(inst: &Instance, p: &TheoremParams) -> TheoremVerdict {
    let g = inst.graph();
    let (n, r) = (g.n(), p.r);
    let mut v = TheoremVerdict::new(TheoremId::FactLeNSMM, n, p.clone());
    v.hypothesis = Tri::Yes;
    let order = match p.lensmm {
        LeNsmmReading::AsStated => r,
        LeNsmmReading::CliqueOrderPlusOne => r + 1,
    };
    let k = count_cliques(g, order).count;
    let lhs = exact::int(BigInt::from(k));
    if n == 0 {
        v.conclusion = Tri::Yes;
        v.lhs = Some(rat(&lhs));
        v.rhs = Some("0".into());
        return v;
    }
    let est = inst.estimate(p.tol);
    let mu_up = exact::rational_from_f64(est.value).unwrap() + exact::rational_from_f64(est.residual).unwrap();
    let rhs_up = lensmm_rhs(&mu_up, n, r);
    v.lhs = Some(rat(&lhs));
    v.rhs = Some(rat(&rhs_up));
    let limit = lensmm_mu_limit(k, n, r);
    if est.converged && lhs >= rhs_up {
        v.conclusion = Tri::Yes;
        v.resolution = Some(Resolution::Numeric);
        v.inequalities.push(Inequality {
            name: "k(G) >= rhs(mu_upper)".into(),
            lhs: rat(&lhs),
            relation: Relation::Ge,
            rhs: rat(&rhs_up),
            holds: Tri::Yes,
        });
        v.certificate = Some(Certificate::MuAtMost { bound: rat(&limit), upper: rat(&mu_up), resolution: Resolution::Numeric });
    } else {
        // k ≥ rhs(μ) ⟺ μ ≤ limit; settle that comparison with escalation.
        let m = mu_exceeds(inst, &MuThreshold::rational(limit.clone()), p.tol, "mu(G) > mu_limit", rat(&limit));
        v.conclusion = match m.holds {
            Tri::Yes => Tri::No,
            Tri::No => Tri::Yes,
            Tri::Inconclusive => Tri::Inconclusive,
        };
        v.resolution = Some(m.resolution);
        let upper = exact::rational_from_f64(m.upper).map_or_else(|| "inf".into(), |q| rat(&q));
        let _ = m.lower;
        v.inequalities.push(m.record);
        if v.conclusion == Tri::Yes {
            v.certificate = Some(Certificate::MuAtMost { bound: rat(&limit), upper, resolution: m.resolution });
        }
    }
    finish(v, g)
}

fn tsize_verdict(n: usize, p: &TheoremParams) -> TheoremVerdict {
    let r = p.r;
    let mut v = TheoremVerdict::new(TheoremId::FactTsize, n, p.clone());
    v.hypothesis = Tri::Yes;
    let e = turan_edge_count(n, r).expect("r >= 2");
    let lhs = BigInt::from(8 * r as u64) * BigInt::from(e);
    let rhs = BigInt::from(4 * (r as u64 - 1)) * big(n) * big(n) - big(r) * big(r);
    let holds = lhs >= rhs;
    v.conclusion = Tri::from_bool(holds);
    v.lhs = Some(format!("{lhs}"));
    v.rhs = Some(format!("{rhs}"));
    v.inequalities.push(Inequality {
        name: "8 r e(T_r(n)) >= 4 (r - 1) n^2 - r^2".into(),
        lhs: format!("{lhs}"),
        relation: Relation::Ge,
        rhs: format!("{rhs}"),
        holds: v.conclusion,
    });
    if holds {
        v.certificate = Some(Certificate::Inequality { lhs: format!("{lhs}"), relation: Relation::Ge, rhs: format!("{rhs}") });
    }
    v
}

fn lekd(inst: &Instance, p: &TheoremParams) -> TheoremVerdict {
    let g = inst.graph();
    let (n, r) = (g.n(), p.r);
    let mut v = TheoremVerdict::new(TheoremId::FactLeKd, n, p.clone());
    let (hyp, record) = high_degree_clique_hypothesis(g, r);
    v.hypothesis = hyp;
    v.inequalities.push(record);
    let (holds, record, cert) = joint_bound(g, r, r + 3, "js_{r+1}(G) > n^{r-1}/r^{r+3}");
    v.conclusion = holds;
    v.lhs = Some(record.lhs.clone());
    v.rhs = Some(record.rhs.clone());
    v.inequalities.push(record);
    v.certificate = cert;
    finish(v, g)
}

fn thv4(inst: &Instance, p: &TheoremParams) -> TheoremVerdict {
    let g = inst.graph();
    let (n, r) = (g.n(), p.r);
    let c = p.c.unwrap_or_else(|| default_c(TheoremId::FactThv4, r));
    let mut params = p.clone();
    params.c = Some(c);
    let mut v = TheoremVerdict::new(TheoremId::FactThv4, n, params);
    v.in_regime = regime::thv4_regime(n, r, c);
    let (hyp, record) = high_degree_clique_hypothesis(g, r);
    v.hypothesis = hyp;
    v.inequalities.push(record);
    let s = floor_c_ln(c, n);
    let c_exact = exact::decimal_from_f64(c).expect("finite c");
    let exponent = exact::one() - c_exact * big_pow(r, 3);
    let t = ceil_pow(n, &PowExponent::Rational(exponent));
    let k = kr_plus_conclusion(g, r, s, Some(t), p.budget);
    v.conclusion = k.holds;
    v.vacuous = k.vacuous;
    v.certificate = k.cert;
    finish(v, g)
}

fn edge_implies_spectral(inst: &Instance, p: &TheoremParams) -> TheoremVerdict {
    let g = inst.graph();
    let (n, r) = (g.n(), p.r);
    let mut v = TheoremVerdict::new(TheoremId::EdgeImpliesSpectral, n, p.clone());
    let e = g.edge_count();
    let et = turan_edge_count(n, r).expect("r >= 2");
    v.hypothesis = Tri::from_bool(e > et);
    v.inequalities.push(Inequality {
        name: "e(G) > e(T_r(n))".into(),
        lhs: format!("{e}"),
        relation: Relation::Gt,
        rhs: format!("{et}"),
        holds: v.hypothesis,
    });
    let m = mu_exceeds_turan(inst, r, p.tol);
    v.conclusion = m.holds;
    v.resolution = Some(m.resolution);
    v.lhs = Some(m.record.lhs.clone());
    v.rhs = Some(m.record.rhs.clone());
    v.inequalities.push(m.record);
    if m.holds == Tri::Yes {
        v.certificate = Some(Certificate::MuExceedsTuran { lower: float_rat(m.lower), resolution: m.resolution });
    }
    finish(v, g)
}

/// `max(1, ⌈c·n⌉)` with `c` read as its decimal.
pub(crate) fn book_requirement(c: f64, n: usize) -> u64 {
    let c = exact::decimal_from_f64(c).expect("finite c");
    let x = c * exact::int(n);
    let ceil = x.ceil().to_integer();
    num_traits::ToPrimitive::to_u64(&ceil).unwrap_or(u64::MAX).max(1)
}

fn book_remark(inst: &Instance, p: &TheoremParams) -> TheoremVerdict {
    let g = inst.graph();
    let (n, r) = (g.n(), p.r);
    let c = p.c.unwrap_or(0.0);
    let mut params = p.clone();
    params.c = Some(c);
    let mut v = TheoremVerdict::new(TheoremId::BookRemark, n, params);
    // The remark only asserts that some constant works for large n.
    v.in_regime = false;
    let h = mu_exceeds_turan(inst, r, p.tol);
    v.hypothesis = h.holds;
    v.resolution = Some(h.resolution);
    v.inequalities.push(h.record);
    let report = book_size(g, r);
    let required = book_requirement(c, n);
    let holds = report.size as u64 >= required;
    v.conclusion = Tri::from_bool(holds);
    v.lhs = Some(format!("{}", report.size));
    v.rhs = Some(format!("{required}"));
    v.inequalities.push(Inequality {
        name: "book_r(G) >= max(1, ceil(c n))".into(),
        lhs: format!("{}", report.size),
        relation: Relation::Ge,
        rhs: format!("{required}"),
        holds: v.conclusion,
    });
    if holds {
        v.certificate = Some(Certificate::Book { report, required });
    }
    finish(v, g)
}

/// Runs the checker for `id` on a shared instance.
pub fn check(inst: &Instance, id: TheoremId, params: &TheoremParams) -> Result<TheoremVerdict, Error> {
    params.validate()?;
    Ok(match id {
        TheoremId::FactSTT => spectral_turan(inst, params),
        TheoremId::T1 => theorem1(inst, params),
        TheoremId::T2 | TheoremId::T3 => theorem2_or_3(inst, params, id),
        TheoremId::T1_2 | TheoremId::T2_2 | TheoremId::T3_2 => stability(inst, params, id),
        TheoremId::FactLeNSMM => lensmm(inst, params),
        TheoremId::FactTsize => tsize_verdict(inst.graph().n(), params),
        TheoremId::FactLeKd => lekd(inst, params),
        TheoremId::FactThv4 => thv4(inst, params),
        TheoremId::EdgeImpliesSpectral => edge_implies_spectral(inst, params),
        TheoremId::BookRemark => book_remark(inst, params),
    })
}

fn run(g: &Graph, id: TheoremId, params: &TheoremParams) -> Result<TheoremVerdict, Error> {
    check(&Instance::new(g, params.tol), id, params)
}

/// `μ(G) > μ(T_r(n))` implies `K_{r+1} ⊆ G`.
pub fn check_spectral_turan(g: &Graph, r: usize, tol: f64) -> Result<TheoremVerdict, Error> {
    run(g, TheoremId::FactSTT, &TheoremParams::new(r).with_tol(tol))
}

/// `μ(G) > μ(T_r(n))` implies `js_{r+1}(G) > n^{r−1}/r^{2r+4}`.
pub fn check_theorem1(g: &Graph, r: usize, tol: f64) -> Result<TheoremVerdict, Error> {
    run(g, TheoremId::T1, &TheoremParams::new(r).with_tol(tol))
}

/// `μ(G) > μ(T_r(n))` implies `G ⊇ K_r^+(⌊c ln n⌋, …, ⌊c ln n⌋, ⌈n^{1−√c}⌉)`.
pub fn check_theorem2(g: &Graph, params: &TheoremParams) -> Result<TheoremVerdict, Error> {
    run(g, TheoremId::T2, params)
}

/// `μ(G) > μ(T_r(n))` implies `G ⊇ K_r^+(⌊c ln n⌋, …, ⌊c ln n⌋)`.
pub fn check_theorem3(g: &Graph, params: &TheoremParams) -> Result<TheoremVerdict, Error> {
    run(g, TheoremId::T3, params)
}

/// `μ(G) > (1 − 1/r − b)n` implies branch (a) or the induced r-partite
/// branch (b) of the chosen stability theorem.
pub fn check_stability(g: &Graph, params: &TheoremParams, which: TheoremId) -> Result<TheoremVerdict, Error> {
    if !which.is_stability() {
        return Err(Error::InvalidParameter("not a stability theorem"));
    }
    run(g, which, params)
}

/// `k_r(G) ≥ (μ(G)/n − 1 + 1/r)·r(r−1)/(r+1)·(n/r)^{r+1}`.
pub fn check_fact_lenslmm(g: &Graph, r: usize, tol: f64) -> Result<TheoremVerdict, Error> {
    run(g, TheoremId::FactLeNSMM, &TheoremParams::new(r).with_tol(tol))
}

/// `8r·e(T_r(n)) ≥ 4(r−1)n² − r²`.
pub fn check_fact_tsize(n: usize, r: usize) -> Result<TheoremVerdict, Error> {
    let params = TheoremParams::new(r);
    params.validate()?;
    Ok(tsize_verdict(n, &params))
}

/// `K_{r+1} ⊆ G` and `δ(G) > (1 − 1/r − 1/r^4)n` imply
/// `js_{r+1}(G) > n^{r−1}/r^{r+3}`.
pub fn check_fact_lekd(g: &Graph, r: usize) -> Result<TheoremVerdict, Error> {
    run(g, TheoremId::FactLeKd, &TheoremParams::new(r))
}

/// `K_{r+1} ⊆ G` and `δ(G) > (1 − 1/r − 1/r^4)n` imply
/// `G ⊇ K_r^+(⌊c ln n⌋, …, ⌊c ln n⌋, ⌈n^{1−c r³}⌉)`.
pub fn check_fact_thv4(g: &Graph, params: &TheoremParams) -> Result<TheoremVerdict, Error> {
    run(g, TheoremId::FactThv4, params)
}

/// `e(G) > e(T_r(n))` implies `μ(G) > μ(T_r(n))`.
pub fn check_edge_implies_spectral(g: &Graph, r: usize, tol: f64) -> Result<TheoremVerdict, Error> {
    run(g, TheoremId::EdgeImpliesSpectral, &TheoremParams::new(r).with_tol(tol))
}

/// `μ(G) > μ(T_r(n))` implies `max(1, ⌈c·n⌉)` `(r+1)`-cliques on a common
/// `r`-clique.
pub fn check_book_remark(g: &Graph, params: &TheoremParams) -> Result<TheoremVerdict, Error> {
    run(g, TheoremId::BookRemark, params)
}
