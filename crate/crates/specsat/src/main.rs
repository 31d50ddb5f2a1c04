use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use specsat::config::{parse_count, parse_list, parse_real, ExperimentConfig, Family, Mode, DEFAULT_SEED};
use specsat::edgelist::{format_edge_list, parse_edge_list};
use specsat::harness::{make_family, run_with_meta};
use specsat_core::graph::{make_complete_multipartite, make_kr_plus};
use specsat_core::random::random_gnm;
use specsat_core::spectral::{spectral_radius, DEFAULT_TOL};
use specsat_core::subgraph::{
    book_size, count_cliques, find_complete_multipartite, find_kr_plus, joint_size, joint_size_detailed,
    validate_embedding, SearchOutcome, DEFAULT_BUDGET, DEFAULT_COLORING_CAP,
};
use specsat_core::theorems::{
    check, validate_certificate, Instance, LeNsmmReading, StabilityReading, TheoremId, TheoremParams, TheoremVerdict,
    Tri,
};
use specsat_core::{Graph, PartSpec};

const EXIT_OK: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_COUNTEREXAMPLE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "specsat", version, about = "Spectral saturation workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenFamily {
    Turan,
    TuranPlusEdge,
    TuranMinusEdge,
    KrPlus,
    Book,
    Complete,
    Empty,
    Gnm,
    Multipartite,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    /// `K_r^+(s_1, …, s_r)`.
    Kplus,
    /// Complete multipartite `K(s_1, …, s_r)`.
    Multipartite,
}

#[derive(clap::Args)]
struct Budget {
    /// Search expansion budget.
    #[arg(long, env = "SPECSAT_BUDGET", value_parser = parse_count, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(clap::Args)]
struct Tol {
    /// Spectral tolerance.
    #[arg(long, env = "SPECSAT_TOL", value_parser = parse_real, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and write it as an edge list.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        #[arg(long, value_parser = parse_usize)]
        n: Option<usize>,
        #[arg(long, value_parser = parse_usize)]
        r: Option<usize>,
        /// Edge count for `gnm`.
        #[arg(long, value_parser = parse_count)]
        m: Option<u64>,
        /// Part sizes for `multipartite` and `kr-plus`, e.g. `2,3,3`.
        #[arg(long, value_parser = parse_parts)]
        parts: Option<Parts>,
        #[arg(long, value_parser = parse_count, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Spectral radius of the adjacency matrix.
    Mu {
        graph: PathBuf,
        #[command(flatten)]
        tol: Tol,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Number of `r`-cliques.
    Cliques {
        graph: PathBuf,
        #[arg(long, value_parser = parse_usize)]
        r: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Largest `r`-joint: most `r`-cliques through one edge.
    Joints {
        graph: PathBuf,
        #[arg(long, value_parser = parse_usize)]
        r: usize,
        /// Include the count for every edge.
        #[arg(long)]
        detailed: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Largest book on an `r`-clique.
    Books {
        graph: PathBuf,
        #[arg(long, value_parser = parse_usize)]
        r: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Search for a fixed subgraph.
    Find {
        graph: PathBuf,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long, value_parser = parse_parts)]
        parts: Parts,
        #[command(flatten)]
        budget: Budget,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check one theorem on a graph.
    Check {
        graph: PathBuf,
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long, value_parser = parse_usize)]
        r: usize,
        #[arg(long, value_parser = parse_real)]
        c: Option<f64>,
        #[arg(long, value_parser = parse_real)]
        b: Option<f64>,
        #[command(flatten)]
        tol: Tol,
        #[command(flatten)]
        budget: Budget,
        #[arg(long, value_parser = parse_count, default_value_t = DEFAULT_COLORING_CAP)]
        coloring_cap: u64,
        #[arg(long, value_enum, default_value = "as-stated")]
        lensmm: LensmmArg,
        #[arg(long, value_enum, default_value = "theorem")]
        stability: StabilityArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run an experiment from a configuration file.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        /// Report path; the timing sidecar goes to `<output>.meta.json`.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_parser = parse_usize)]
        threads: Option<usize>,
        #[arg(long, value_parser = parse_count)]
        seed: Option<u64>,
        /// Override a configuration key, e.g. `--set n=3..6`.
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LensmmArg {
    AsStated,
    CliqueOrderPlusOne,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StabilityArg {
    Theorem,
    Tstab,
}

fn parse_usize(s: &str) -> Result<usize, String> {
    usize::try_from(parse_count(s)?).map_err(|_| format!("too large: {s:?}"))
}

/// Comma-separated part sizes.
#[derive(Clone, Debug)]
struct Parts(Vec<usize>);

fn parse_parts(s: &str) -> Result<Parts, String> {
    parse_list(s, parse_usize).map(Parts)
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn json<T: serde::Serialize>(value: &T) -> Result<()> {
    emit(&serde_json::to_string_pretty(value)?)
}

fn csv_table<I, R>(header: &[&str], rows: I) -> Result<()>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    emit(&String::from_utf8(w.into_inner()?)?)
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(String::new, |v| v.to_string())
}

fn need(x: Option<usize>, name: &str) -> Result<usize> {
    x.with_context(|| format!("--{name} is required for this family"))
}

fn generate(
    family: GenFamily,
    n: Option<usize>,
    r: Option<usize>,
    m: Option<u64>,
    parts: Option<Parts>,
    seed: u64,
) -> Result<Graph> {
    let g = match family {
        GenFamily::Turan => make_family(Family::Turan, need(n, "n")?, need(r, "r")?)?,
        GenFamily::TuranPlusEdge => make_family(Family::TuranPlusEdge, need(n, "n")?, need(r, "r")?)?,
        GenFamily::TuranMinusEdge => make_family(Family::TuranMinusEdge, need(n, "n")?, need(r, "r")?)?,
        GenFamily::Book => make_family(Family::Book, need(n, "n")?, need(r, "r")?)?,
        GenFamily::KrPlus => match parts {
            Some(p) => make_kr_plus(&PartSpec::new(p.0)?)?,
            None => make_family(Family::KrPlus, need(n, "n")?, need(r, "r")?)?,
        },
        GenFamily::Complete => Graph::complete(need(n, "n")?),
        GenFamily::Empty => Graph::empty(need(n, "n")?),
        GenFamily::Gnm => random_gnm(need(n, "n")?, m.context("--m is required for gnm")?, seed)?,
        GenFamily::Multipartite => {
            make_complete_multipartite(&PartSpec::new(parts.context("--parts is required for multipartite")?.0)?)
        }
    };
    Ok(g)
}

fn verdict_exit(v: &TheoremVerdict) -> u8 {
    if v.is_counterexample() {
        EXIT_COUNTEREXAMPLE
    } else if v.is_inconclusive() {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    }
}

fn tri(t: Tri) -> String {
    format!("{t:?}").to_lowercase()
}

fn dispatch(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen { family, n, r, m, parts, seed, output } => {
            let g = generate(family, n, r, m, parts, seed)?;
            let text = format_edge_list(&g);
            match output {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => emit(&text)?,
            }
        }
        Command::Mu { graph, tol, format } => {
            let g = read_graph(&graph)?;
            let est = spectral_radius(&g, tol.tol, specsat_core::spectral::default_max_iter(g.n()));
            match format {
                Format::Json => json(&est)?,
                Format::Csv => csv_table(
                    &["value", "residual", "iterations", "converged"],
                    [[est.value.to_string(), est.residual.to_string(), est.iterations.to_string(), est.converged.to_string()]],
                )?,
            }
            if !est.converged {
                return Ok(EXIT_INCONCLUSIVE);
            }
        }
        Command::Cliques { graph, r, format } => {
            let c = count_cliques(&read_graph(&graph)?, r);
            match format {
                Format::Json => json(&c)?,
                Format::Csv => csv_table(&["r", "count"], [[c.r.to_string(), c.count.to_string()]])?,
            }
        }
        Command::Joints { graph, r, detailed, format } => {
            let g = read_graph(&graph)?;
            let j = if detailed { joint_size_detailed(&g, r) } else { joint_size(&g, r) };
            match format {
                Format::Json => json(&j)?,
                Format::Csv => {
                    let (wu, wv) = (opt(j.witness_edge.map(|e| e.0)), opt(j.witness_edge.map(|e| e.1)));
                    let base = [j.r.to_string(), j.size.to_string(), wu, wv];
                    match &j.per_edge {
                        None => csv_table(&["r", "size", "witness_u", "witness_v"], [base])?,
                        Some(edges) => csv_table(
                            &["r", "size", "witness_u", "witness_v", "u", "v", "count"],
                            edges.iter().map(|&((u, v), k)| {
                                let mut row = base.to_vec();
                                row.extend([u.to_string(), v.to_string(), k.to_string()]);
                                row
                            }),
                        )?,
                    }
                }
            }
        }
        Command::Books { graph, r, format } => {
            let b = book_size(&read_graph(&graph)?, r);
            match format {
                Format::Json => json(&b)?,
                Format::Csv => {
                    let base = b.base_clique.as_ref().map(|c| c.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
                    csv_table(&["r", "size", "base_clique"], [[b.r.to_string(), b.size.to_string(), opt(base)]])?
                }
            }
        }
        Command::Find { graph, target, parts, budget, format } => {
            let g = read_graph(&graph)?;
            let spec = PartSpec::new(parts.0)?;
            let outcome = match target {
                Target::Kplus => find_kr_plus(&g, &spec, budget.budget)?,
                Target::Multipartite => find_complete_multipartite(&g, &spec, budget.budget),
            };
            match outcome {
                SearchOutcome::Found { embedding, .. } => {
                    if let Err(e) = validate_embedding(&g, &spec, &embedding) {
                        bail!("internal error: embedding failed validation: {e}");
                    }
                    match format {
                        Format::Json => json(&embedding)?,
                        Format::Csv => csv_table(
                            &["part", "vertex"],
                            embedding
                                .parts
                                .iter()
                                .enumerate()
                                .flat_map(|(i, p)| p.iter().map(move |v| [i.to_string(), v.to_string()])),
                        )?,
                    }
                }
                SearchOutcome::Absent { .. } => emit("ABSENT")?,
                SearchOutcome::BudgetExhausted { .. } => {
                    emit("BUDGET")?;
                    return Ok(EXIT_INCONCLUSIVE);
                }
            }
        }
        Command::Check { graph, theorem, r, c, b, tol, budget, coloring_cap, lensmm, stability, format } => {
            let g = read_graph(&graph)?;
            let mut params = TheoremParams::new(r).with_tol(tol.tol).with_budget(budget.budget);
            params.c = c;
            params.b = b;
            params.coloring_cap = coloring_cap;
            params.lensmm = match lensmm {
                LensmmArg::AsStated => LeNsmmReading::AsStated,
                LensmmArg::CliqueOrderPlusOne => LeNsmmReading::CliqueOrderPlusOne,
            };
            params.stability = match stability {
                StabilityArg::Theorem => StabilityReading::Theorem,
                StabilityArg::Tstab => StabilityReading::Tstab,
            };
            let v = check(&Instance::new(&g, tol.tol), theorem, &params)?;
            if let Err(e) = validate_certificate(&g, &v) {
                bail!("internal error: certificate failed validation: {e}");
            }
            match format {
                Format::Json => json(&v)?,
                Format::Csv => csv_table(
                    &["theorem", "n", "r", "hypothesis", "conclusion", "in_regime", "vacuous", "branch", "resolution", "lhs", "rhs"],
                    [[
                        v.theorem.name().to_string(),
                        v.n.to_string(),
                        v.r.to_string(),
                        tri(v.hypothesis),
                        tri(v.conclusion),
                        v.in_regime.to_string(),
                        v.vacuous.to_string(),
                        opt(v.branch.map(|b| format!("{b:?}").to_lowercase())),
                        opt(v.resolution.map(|r| format!("{r:?}").to_lowercase())),
                        v.lhs.clone().unwrap_or_default(),
                        v.rhs.clone().unwrap_or_default(),
                    ]],
                )?,
            }
            return Ok(verdict_exit(&v));
        }
        Command::Experiment { config, output, threads, seed, overrides, format } => {
            let text = std::fs::read_to_string(&config).with_context(|| format!("reading {}", config.display()))?;
            let mut cfg = ExperimentConfig::parse_unvalidated(&text)?;
            for o in &overrides {
                let (k, v) = o.split_once('=').with_context(|| format!("expected KEY=VALUE, got {o:?}"))?;
                cfg.set(k.trim(), v.trim())?;
            }
            if let Some(s) = seed {
                cfg.seed = Some(s);
            }
            let randomized = matches!(cfg.mode, Mode::RandomHunt | Mode::Tightness)
                || (cfg.mode == Mode::Exhaustive && cfg.sample_cap.is_some());
            if randomized && cfg.seed.is_none() {
                eprintln!("specsat: no seed given, using the default seed {DEFAULT_SEED}");
                cfg.seed = Some(DEFAULT_SEED);
            }
            if threads.is_some() {
                cfg.threads = threads;
            }
            if output.is_some() {
                cfg.output = output;
            }
            cfg.validate()?;
            let (report, meta) = run_with_meta(&cfg)?;
            let body = match format {
                Format::Json => report.to_json(),
                Format::Csv => report.summary_csv(),
            };
            match &cfg.output {
                Some(path) => {
                    std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
                    let mut meta_path = path.clone().into_os_string();
                    meta_path.push(".meta.json");
                    std::fs::write(&meta_path, serde_json::to_string_pretty(&meta)? + "\n")
                        .context("writing the metadata sidecar")?;
                }
                None => emit(&body)?,
            }
            eprintln!(
                "specsat: {} instances, {} counterexamples, {:.2}s",
                report.instances_checked, report.counterexample_count, meta.wall_time_secs
            );
            if report.counterexample_count > 0 {
                return Ok(EXIT_COUNTEREXAMPLE);
            }
            let inconclusive = report.escalations.unresolved > 0
                || report.summary.values().any(|s| s.hypothesis.inconclusive > 0 || s.conclusion.inconclusive > 0);
            if inconclusive {
                return Ok(EXIT_INCONCLUSIVE);
            }
        }
    }
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("specsat: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
