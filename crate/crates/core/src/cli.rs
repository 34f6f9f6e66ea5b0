//! The `zfs` command line. [`run`] is the whole program; the binary only
//! forwards `std::env::args` and the standard streams.
//!
//! Exit codes: `0` success, `1` usage or input error, `2` a verification
//! check failed.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::errorvec::{self, PolyVec};
use crate::forcing::{self, ForcingChain, SearchLimits};
use crate::graph::{self, Graph, VertexSet};
use crate::matrices::{self, SamplerOptions};
use crate::poly::Poly;
use crate::reconstruct::{self, BoundsConfig, NoiseDist, VarianceConfig, VerifyReport};

#[derive(Debug, Parser)]
#[command(name = "zfs", version, about = "Zero forcing sets, error polynomials and reconstruction-bound checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
struct GraphSource {
    /// Edge-list file: an `n <count>` header, then one `u v` pair per line.
    #[arg(short = 'g', long = "graph", value_name = "FILE")]
    file: Option<PathBuf>,
    /// Built-in graph family.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
}

#[derive(Debug, Args)]
struct GraphArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Size parameter for sized built-in families.
    #[arg(short = 'n', value_name = "N")]
    n: Option<usize>,
    #[arg(long)]
    json: bool,
}

impl GraphArgs {
    fn load(&self) -> Result<(Graph, String)> {
        if let Some(path) = &self.source.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
            return Ok((Graph::parse_edge_list(&text)?, path.display().to_string()));
        }
        let name = self.source.builtin.as_deref().expect("clap enforces one source");
        let label = match self.n {
            Some(n) => format!("{name}({n})"),
            None => name.to_string(),
        };
        Ok((Graph::builtin(name, self.n)?, label))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChainMode {
    Greedy,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyMode {
    Bounds,
    Variance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NoiseArg {
    Uniform,
    Gaussian,
    Rademacher,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DemoName {
    Kn,
    Path2,
    F2,
    Witness,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Zero forcing number and every minimum zero forcing set.
    Min {
        #[command(flatten)]
        graph: GraphArgs,
        /// Refuse graphs with more vertices than this.
        #[arg(long, default_value_t = SearchLimits::default().max_vertices)]
        max_vertices: usize,
    },
    /// Whether a set is zero forcing, with its propagation time and rounds.
    Check {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short = 's', long = "set", value_name = "SET")]
        set: String,
    },
    /// Every forcing chain of a zero forcing set.
    Chains {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short = 's', long = "set", value_name = "SET")]
        set: String,
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
    },
    /// Error polynomial vector `q`.
    ErrorPoly {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short = 's', long = "set", value_name = "SET")]
        set: String,
        #[arg(long, value_enum, default_value_t = ChainMode::Greedy)]
        chain: ChainMode,
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
    },
    /// Variance polynomial vector `V`, minimized over all chains.
    VariancePoly {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short = 's', long = "set", value_name = "SET")]
        set: String,
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
    },
    /// Largest entries of `q` and `V` for several sets.
    Compare {
        #[command(flatten)]
        graph: GraphArgs,
        /// Semicolon-separated sets, e.g. "2,6,9;1,6,9".
        #[arg(long, value_name = "SETS")]
        sets: String,
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
    },
    /// Check the reconstruction bounds on sampled matrices.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short = 's', long = "set", value_name = "SET")]
        set: String,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 1e-3)]
        eps: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = VerifyMode::Bounds)]
        mode: VerifyMode,
        #[arg(long, value_enum, default_value_t = NoiseArg::Uniform)]
        noise: NoiseArg,
        /// Chain for variance mode as `by>on` pairs, e.g. "5>8,3>6"; greedy if absent.
        #[arg(long, value_name = "FORCES")]
        forces: Option<String>,
        /// Sample value-symmetric matrices.
        #[arg(long)]
        symmetric: bool,
        /// Worker threads; defaults to `ZFS_THREADS`, then all cores.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Worst-case constructions and their checks.
    Demo {
        #[arg(long, value_enum)]
        name: DemoName,
        /// Graph order; defaults to 5 for `kn`, 9 for `path2` and 6 for `witness`.
        #[arg(short = 'n', value_name = "N")]
        n: Option<usize>,
        /// Coupling weight for `kn`, as a fraction like "1/100".
        #[arg(long, default_value = "1/100")]
        delta: String,
        /// Built-in graph for `witness`.
        #[arg(long, default_value = "complete_minus_two_disjoint_edges")]
        builtin: String,
        /// Non-forcing set for `witness`.
        #[arg(short = 's', long = "set", default_value = "4,5,6")]
        set: String,
        #[arg(long)]
        json: bool,
    },
}

enum Outcome {
    Ok,
    Failed,
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    1
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed) => 2,
        Err(Error::Io(std::io::ErrorKind::BrokenPipe, _)) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.kind(), e.to_string())
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(v).map_err(|e| Error::InvalidParameter(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

fn set_text(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn poly_json(v: usize, p: &Poly) -> Value {
    json!({ "vertex": v, "poly": p, "text": p.to_string() })
}

fn vec_text(v: &PolyVec) -> Value {
    let map: serde_json::Map<String, Value> = v.iter().map(|(k, p)| (k.to_string(), Value::String(p.to_string()))).collect();
    Value::Object(map)
}

fn chain_text(c: &ForcingChain) -> String {
    let parts: Vec<String> = c.forces().iter().map(|f| format!("{}>{}@{}", f.by, f.on, f.round)).collect();
    parts.join(" ")
}

fn parse_forces(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (a, b) = p
                .split_once('>')
                .ok_or_else(|| Error::InvalidParameter(format!("force `{p}` is not of the form by>on")))?;
            let parse = |s: &str| {
                s.trim().parse::<usize>().map_err(|_| Error::InvalidParameter(format!("bad vertex `{s}` in `{p}`")))
            };
            Ok((parse(a)?, parse(b)?))
        })
        .collect()
}

fn print_vector(out: &mut dyn Write, name: &str, v: &PolyVec) -> Result<()> {
    for (k, p) in v.iter() {
        writeln!(out, "  {name}_{k:<3} = {p}").map_err(io)?;
    }
    Ok(())
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        Command::Min { graph, max_vertices } => {
            let (g, _) = graph.load()?;
            let limits = SearchLimits { max_vertices, ..SearchLimits::default() };
            let m = forcing::minimum_zero_forcing_sets(&g, limits)?;
            if graph.json {
                emit_json(out, &json!({ "n": g.order(), "zero_forcing_number": m.zero_forcing_number, "sets": m.sets }))?;
            } else {
                writeln!(out, "Z(G) = {}", m.zero_forcing_number).map_err(io)?;
                writeln!(out, "minimum zero forcing sets ({}):", m.sets.len()).map_err(io)?;
                for s in &m.sets {
                    writeln!(out, "  {}", set_text(s)).map_err(io)?;
                }
            }
        }
        Command::Check { graph, set } => {
            let (g, _) = graph.load()?;
            let s = graph::parse_vertex_set(&set)?;
            let trace = forcing::closure(&g, &s)?;
            let complete = trace.is_complete();
            let pt = complete.then(|| trace.len());
            if graph.json {
                emit_json(
                    out,
                    &json!({
                        "set": s,
                        "zero_forcing": complete,
                        "propagation_time": pt,
                        "derived_set": trace.derived_set(),
                        "rounds": trace.rounds(),
                    }),
                )?;
            } else {
                writeln!(out, "set {}: zero forcing: {}", set_text(&s), if complete { "yes" } else { "no" }).map_err(io)?;
                match pt {
                    Some(pt) => writeln!(out, "propagation time: {pt}").map_err(io)?,
                    None => writeln!(out, "derived set: {}", set_text(trace.derived_set())).map_err(io)?,
                }
                let mut prev = VertexSet::new();
                for (r, colored) in trace.rounds().iter().enumerate() {
                    let new: VertexSet = colored.difference(&prev).copied().collect();
                    writeln!(out, "  round {r}: {}", set_text(&new)).map_err(io)?;
                    prev = colored.clone();
                }
            }
        }
        Command::Chains { graph, set, limit } => {
            let (g, _) = graph.load()?;
            let s = graph::parse_vertex_set(&set)?;
            let chains = forcing::enumerate_forcing_chains(&g, &s, limit)?;
            if graph.json {
                emit_json(out, &json!({ "set": s, "count": chains.len(), "chains": chains }))?;
            } else {
                writeln!(out, "{} forcing chain(s) from {}", chains.len(), set_text(&s)).map_err(io)?;
                for (idx, c) in chains.iter().enumerate() {
                    writeln!(out, "  #{:<3} pt {}: {}", idx + 1, c.propagation_time(), chain_text(c)).map_err(io)?;
                }
            }
        }
        Command::ErrorPoly { graph, set, chain, limit } => {
            let (g, _) = graph.load()?;
            let s = graph::parse_vertex_set(&set)?;
            let (q, greedy) = errorvec::error_vector_of_set(&g, &s)?;
            let pt = forcing::propagation_time(&g, &s)?;
            let var = errorvec::variance_vector_of_set(&g, &s, limit)?;
            let (qv, qp) = q.max_entry();
            let (vv, vp) = var.v.max_entry();
            let per_chain: Option<Vec<(ForcingChain, PolyVec)>> = (chain == ChainMode::All).then(|| {
                var.chains.iter().map(|c| (c.clone(), errorvec::error_vector_of_chain(&g, c))).collect()
            });
            if graph.json {
                let mut report = json!({
                    "set": s,
                    "pt": pt,
                    "q": q,
                    "V": var.v,
                    "q_max": poly_json(qv, qp),
                    "V_max": poly_json(vv, vp),
                    "V_single_chain": var.single_chain_achieves(),
                    "q_text": vec_text(&q),
                    "V_text": vec_text(&var.v),
                    "greedy_chain": greedy,
                });
                if let Some(list) = &per_chain {
                    report["chains"] = list
                        .iter()
                        .map(|(c, cq)| {
                            let (v, p) = cq.max_entry();
                            json!({ "chain": c, "q": cq, "q_max": poly_json(v, p), "q_text": vec_text(cq) })
                        })
                        .collect();
                }
                emit_json(out, &report)?;
            } else {
                writeln!(out, "set {}  pt {}", set_text(&s), pt).map_err(io)?;
                writeln!(out, "greedy chain: {}", chain_text(&greedy)).map_err(io)?;
                print_vector(out, "q", &q)?;
                writeln!(out, "max q = {qp} (vertex {qv})").map_err(io)?;
                writeln!(out, "max V = {vp} (vertex {vv})").map_err(io)?;
                if let Some(list) = &per_chain {
                    for (idx, (c, cq)) in list.iter().enumerate() {
                        let (v, p) = cq.max_entry();
                        writeln!(out, "chain #{}: {}", idx + 1, chain_text(c)).map_err(io)?;
                        print_vector(out, "q", cq)?;
                        writeln!(out, "  max q = {p} (vertex {v})").map_err(io)?;
                    }
                }
            }
        }
        Command::VariancePoly { graph, set, limit } => {
            let (g, _) = graph.load()?;
            let s = graph::parse_vertex_set(&set)?;
            let var = errorvec::variance_vector_of_set(&g, &s, limit)?;
            let (vv, vp) = var.v.max_entry();
            if graph.json {
                let witnesses: serde_json::Map<String, Value> =
                    g.vertices().map(|k| (k.to_string(), json!(var.witness_of(k)))).collect();
                emit_json(
                    out,
                    &json!({
                        "set": s,
                        "V": var.v,
                        "V_text": vec_text(&var.v),
                        "V_max": poly_json(vv, vp),
                        "V_single_chain": var.single_chain_achieves(),
                        "chain_count": var.chains.len(),
                        "witnesses": witnesses,
                    }),
                )?;
            } else {
                writeln!(out, "set {}  ({} chains)", set_text(&s), var.chains.len()).map_err(io)?;
                for (k, p) in var.v.iter() {
                    writeln!(out, "  V_{k:<3} = {p:<40} via {}", chain_text(var.witness_of(k))).map_err(io)?;
                }
                writeln!(out, "max V = {vp} (vertex {vv})").map_err(io)?;
                writeln!(out, "single chain attains V: {}", if var.single_chain_achieves() { "yes" } else { "no" })
                    .map_err(io)?;
            }
        }
        Command::Compare { graph, sets, limit } => {
            let (g, _) = graph.load()?;
            let sets = graph::parse_vertex_sets(&sets)?;
            let mut rows = Vec::new();
            for s in &sets {
                let (q, _) = errorvec::error_vector_of_set(&g, s)?;
                let var = errorvec::variance_vector_of_set(&g, s, limit)?;
                let (qv, qp) = q.max_entry();
                let (vv, vp) = var.v.max_entry();
                rows.push((s.clone(), forcing::propagation_time(&g, s)?, qv, qp.clone(), vv, vp.clone()));
            }
            if graph.json {
                let list: Vec<Value> = rows
                    .iter()
                    .map(|(s, pt, qv, qp, vv, vp)| json!({ "set": s, "pt": pt, "q_max": poly_json(*qv, qp), "V_max": poly_json(*vv, vp) }))
                    .collect();
                emit_json(out, &json!({ "sets": list }))?;
            } else {
                writeln!(out, "{:<14} {:>3}  {:<32} {}", "set", "pt", "max q", "max V").map_err(io)?;
                for (s, pt, _, qp, _, vp) in &rows {
                    writeln!(out, "{:<14} {:>3}  {:<32} {}", set_text(s), pt, qp.to_string(), vp).map_err(io)?;
                }
            }
        }
        Command::Verify { graph, set, trials, eps, seed, mode, noise, forces, symmetric, threads } => {
            let (g, label) = graph.load()?;
            let s = graph::parse_vertex_set(&set)?;
            let threads = match threads {
                Some(0) => return Err(Error::InvalidParameter("--threads must be positive".into())),
                Some(t) => Some(t),
                None => match std::env::var("ZFS_THREADS") {
                    Ok(v) => Some(v.parse().map_err(|_| Error::InvalidParameter(format!("bad ZFS_THREADS `{v}`")))?),
                    Err(_) => None,
                },
            };
            let sampler = SamplerOptions { symmetric, ..SamplerOptions::default() };
            let mut report = match mode {
                VerifyMode::Bounds => {
                    reconstruct::verify_bounds(&g, &s, BoundsConfig { trials, epsilon: eps, seed, sampler, threads })?
                }
                VerifyMode::Variance => {
                    let chain = match &forces {
                        Some(text) => ForcingChain::from_forces(&g, &s, &parse_forces(text)?)?,
                        None => forcing::greedy_chain(&g, &s)?.0,
                    };
                    let noise = match noise {
                        NoiseArg::Uniform => NoiseDist::Uniform,
                        NoiseArg::Gaussian => NoiseDist::Gaussian,
                        NoiseArg::Rademacher => NoiseDist::Rademacher,
                    };
                    let cfg = VarianceConfig { trials, epsilon: eps, seed, noise, sampler, threads };
                    reconstruct::verify_variance(&g, &chain, cfg)?
                }
            };
            report.graph = label;
            if graph.json {
                emit_json(out, &serde_json::to_value(&report).map_err(|e| Error::InvalidParameter(e.to_string()))?)?;
            } else {
                print_report(out, &report)?;
            }
            return Ok(if report.passed() { Outcome::Ok } else { Outcome::Failed });
        }
        Command::Demo { name, n, delta, builtin, set, json } => return demo(out, name, n, &delta, &builtin, &set, json),
    }
    Ok(Outcome::Ok)
}

fn print_report(out: &mut dyn Write, r: &VerifyReport) -> Result<()> {
    let slack = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.6}"));
    writeln!(out, "graph {}  set {:?}  trials {}", r.graph, r.set, r.trials).map_err(io)?;
    writeln!(out, "worst slack: thm16 {}  thm52 {}", slack(r.worst_slack.thm16), slack(r.worst_slack.thm52)).map_err(io)?;
    if let Some(v) = &r.variance {
        writeln!(out, "kappa' = {:.6}  noise {}  eps {}", v.kappa, v.noise, v.epsilon).map_err(io)?;
        writeln!(out, "{:>6} {:>14} {:>14} {:>14} {:>10}", "vertex", "bound", "sample", "exact", "z(mean)").map_err(io)?;
        for s in &v.per_vertex {
            writeln!(out, "{:>6} {:>14.6e} {:>14.6e} {:>14.6e} {:>10.3}", s.vertex, s.bound, s.sample, s.exact, s.z_mean)
                .map_err(io)?;
        }
    }
    if r.passed() {
        writeln!(out, "PASS: no violations").map_err(io)?;
    } else {
        writeln!(out, "FAIL: {} violation(s)", r.violations.len()).map_err(io)?;
        for v in r.violations.iter().take(20) {
            writeln!(
                out,
                "  {} trial {:?} seed {} vertex {:?}: observed {:e} > bound {:e}",
                v.kind, v.trial, v.seed, v.vertex, v.observed, v.bound
            )
            .map_err(io)?;
        }
    }
    Ok(())
}

fn parse_fraction(text: &str) -> Result<num_rational::BigRational> {
    let bad = || Error::InvalidParameter(format!("`{text}` is not a positive fraction"));
    let (p, q) = text.split_once('/').unwrap_or((text, "1"));
    let p: i64 = p.trim().parse().map_err(|_| bad())?;
    let q: i64 = q.trim().parse().map_err(|_| bad())?;
    if p <= 0 || q <= 0 {
        return Err(bad());
    }
    Ok(matrices::rational(p, q))
}

fn demo(out: &mut dyn Write, name: DemoName, n: Option<usize>, delta: &str, builtin: &str, set: &str, as_json: bool) -> Result<Outcome> {
    use num_traits::One;
    let (report, ok) = match name {
        DemoName::Kn => {
            let n = n.unwrap_or(5);
            let delta = parse_fraction(delta)?;
            let eps = num_rational::BigRational::one();
            let err = reconstruct::kn_tightness(n, &delta, &eps)?;
            let expected = matrices::rational(n as i64 - 1, 1) / delta.clone();
            let a = matrices::kn_counterexample(n, delta.clone())?;
            let ok = err == expected;
            (
                json!({
                    "demo": "kn",
                    "n": n,
                    "delta": delta.to_string(),
                    "kappa_prime": a.kappa_prime().to_string(),
                    "error_over_eps": err.to_string(),
                    "expected": expected.to_string(),
                    "matrix": a.to_json(),
                    "holds": ok,
                }),
                ok,
            )
        }
        DemoName::Path2 => {
            let n = n.unwrap_or(9);
            let a: matrices::PatternMatrix<num_rational::BigRational> = matrices::path_counterexample(n)?;
            let r = reconstruct::path_tightness(n)?;
            let expected = num_rational::BigRational::from_integer(num_bigint::BigInt::from(2u32).pow(((n - 1) / 2) as u32));
            let rank = matrices::rank(&a.rows());
            let ok = r.observed_factor == expected && rank + 1 == n;
            (
                json!({
                    "demo": "path2",
                    "n": n,
                    "null_vector": a.known_null().map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>()),
                    "rank": rank,
                    "error_over_eps": r.observed_factor.to_string(),
                    "expected": expected.to_string(),
                    "q1_at_2": r.bound_factor.to_string(),
                    "ratio": r.ratio().to_string(),
                    "matrix": a.to_json(),
                    "holds": ok,
                }),
                ok,
            )
        }
        DemoName::F2 => {
            let r = matrices::f2_counterexample_check()?;
            let ok = r.holds();
            (json!({ "demo": "f2", "report": r, "holds": ok }), ok)
        }
        DemoName::Witness => {
            let g = Graph::builtin(builtin, n.or(Some(6)))?;
            let s = graph::parse_vertex_set(set)?;
            let w = matrices::witness_matrix(&g, &s)?;
            let sums = w.column_sums();
            let ok = w.matrix.conforms() && sums.iter().all(num_traits::Zero::is_zero);
            (
                json!({
                    "demo": "witness",
                    "set": s,
                    "uncolored": w.uncolored,
                    "matrix": w.matrix.to_json(),
                    "uncolored_column_sums": sums.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "uncolored_rank": w.uncolored_rank(),
                    "holds": ok,
                }),
                ok,
            )
        }
    };
    if as_json {
        emit_json(out, &report)?;
    } else {
        let obj = report.as_object().expect("demo reports are objects");
        for (k, v) in obj {
            match v {
                Value::String(s) => writeln!(out, "{k}: {s}").map_err(io)?,
                Value::Object(m) if m.contains_key("rows") => {
                    writeln!(out, "{k}:").map_err(io)?;
                    for row in m["rows"].as_array().into_iter().flatten() {
                        let cells: Vec<String> = row
                            .as_array()
                            .into_iter()
                            .flatten()
                            .map(|c| c.as_str().map_or_else(|| c.to_string(), str::to_string))
                            .collect();
                        writeln!(out, "  [{}]", cells.join(", ")).map_err(io)?;
                    }
                }
                other => writeln!(out, "{k}: {other}").map_err(io)?,
            }
        }
    }
    Ok(if ok { Outcome::Ok } else { Outcome::Failed })
}
