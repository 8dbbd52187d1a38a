//! `matconn`: connectivity of graphic matroids from the command line.
//!
//! Every command prints one JSON document on stdout. Exit codes: 0 success,
//! 1 a check found a counterexample, 2 malformed input, 3 violated
//! precondition or bad embedding, 4 capacity exceeded, 5 internal failure.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use matconn::connectivity::{
    find_tutte_separation, find_tutte_separation_periodic, matroid_sep_to_tutte_sep, tutte_connectivity,
    tutte_connectivity_periodic, tutte_sep_to_matroid_sep, verify_equivalence, verify_window_stability,
};
use matconn::duality::{check_kappa_duality, planar_dual, tutte_duality_check, verify_graphdual};
use matconn::graphic::{kappa_formula, kappa_formula_periodic_at, mc_window, mfb, mfc};
use matconn::io::{load_graph, load_matroid, load_pair, GraphInput, GraphJson};
use matconn::matroid::{check_axioms, find_matroid_separation, matroid_connectivity};
use matconn::{Ends, Error, Exec, Limits, Matroid, MultiGraph, Options, PeriodicEdgeSet, PeriodicGraph};

#[derive(Parser)]
#[command(name = "matconn", version, about = "Matroid and Tutte connectivity of finite and periodic graphs")]
struct Cli {
    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    /// Past the exhaustive limits, search small sides only instead of failing.
    #[arg(long, global = true)]
    heuristic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Bases,
    Formula,
    Rank,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConnKind {
    Tutte,
    MatroidFc,
    MatroidC,
}

#[derive(Clone, Copy, ValueEnum)]
enum SepKind {
    Tutte,
    Matroid,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Equivalence,
    Axioms,
    Dual,
    KappaDual,
    Graphdual,
    TutteDual,
    SameconnWindow,
}

#[derive(Subcommand)]
enum Command {
    /// κ of one side of an edge partition.
    Kappa {
        /// Graph file or builtin:<name>.
        file: String,
        /// Edge ids (comma separated) or, for periodic graphs, a generator
        /// such as `rungs`, `all:r,s` or `left-half:N`.
        #[arg(long)]
        side: String,
        #[arg(long, value_enum, default_value = "bases")]
        engine: Engine,
        /// Evaluate every applicable engine and compare.
        #[arg(long)]
        verify: bool,
        /// Window size for periodic graphs.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Connectivity up to a cap.
    Connectivity {
        file: String,
        #[arg(long, value_enum, default_value = "tutte")]
        kind: ConnKind,
        #[arg(long, default_value_t = 5)]
        cap: usize,
        /// Window size for the windowed cycle matroid.
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Search for an ℓ-separation; optionally convert it to the other kind.
    Separations {
        file: String,
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value = "tutte")]
        kind: SepKind,
        /// Turn a found separation into one of the other kind.
        #[arg(long)]
        convert: bool,
    },
    /// Run a check; exits 1 when it finds a counterexample.
    Verify {
        /// Graph, matroid or dual-pair file, or builtin:<name>.
        file: String,
        #[arg(long, value_enum)]
        check: Check,
        #[arg(long, default_value_t = 5)]
        cap: usize,
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Matroid of a graph input: fc, fb or c-window:N.
        #[arg(long, default_value = "fc")]
        matroid: String,
        /// Random samples for sameconn-window.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Planar dual of a graph with faces, as a dual-pair document.
    Dual { file: String },
    /// A finite window of a periodic graph.
    Window {
        file: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Attach leaving edges to one vertex per end.
        #[arg(long, conflicts_with = "span")]
        contract: bool,
        /// Keep leaving edges with their outside endpoints.
        #[arg(long)]
        span: bool,
    },
}

/// Report plus whether it counts as a pass.
struct Outcome {
    report: Value,
    pass: bool,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome { report, pass: true }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) => 2,
        Error::Precondition(_) | Error::Embedding(_) => 3,
        Error::Capacity { .. } => 4,
        Error::Internal(_) => 5,
    }
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn finite_side(g: &MultiGraph, side: &str) -> matconn::Result<matconn::ElementSet> {
    let ids: Vec<&str> = side.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    g.edge_set(&ids)
}

fn kappa_finite(g: &MultiGraph, side: &str, engine: Engine, verify: bool) -> matconn::Result<Outcome> {
    let x = finite_side(g, side)?;
    let m = mfc(g);
    let k = m.kappa(x);
    let bases = json!(k.value);
    let rank = json!(m.kappa_by_rank(x));
    let formula = |strict: bool| -> matconn::Result<Value> {
        match kappa_formula(g, x) {
            Ok(v) => Ok(json!(v)),
            Err(e @ Error::Precondition(_)) if strict => Err(e),
            Err(Error::Precondition(_)) => Ok(Value::Null),
            Err(e) => Err(e),
        }
    };
    let value = match engine {
        Engine::Bases => bases.clone(),
        Engine::Rank => rank.clone(),
        Engine::Formula => formula(true)?,
    };
    let mut report = json!({
        "engine": engine_name(engine),
        "x": g.edge_names(x),
        "kappa": value,
    });
    if matches!(engine, Engine::Bases) {
        report["witness_f"] = json!(g.edge_names(k.witness));
    }
    let mut pass = true;
    if verify {
        let f = formula(false)?;
        pass = bases == rank && (f.is_null() || f == bases);
        report["checks"] = json!({"bases": bases, "formula": f, "rank": rank, "agree": pass});
    }
    Ok(Outcome { report, pass })
}

fn engine_name(e: Engine) -> &'static str {
    match e {
        Engine::Bases => "bases",
        Engine::Formula => "formula",
        Engine::Rank => "rank",
    }
}

fn default_window(x: &PeriodicEdgeSet) -> usize {
    (x.extent() + 2) as usize
}

fn kappa_periodic(
    gp: &PeriodicGraph,
    side: &str,
    engine: Engine,
    verify: bool,
    n: Option<usize>,
) -> matconn::Result<Outcome> {
    let x = PeriodicEdgeSet::parse(gp, side)?;
    let n = n.unwrap_or_else(|| default_window(&x)).max(1);
    let windowed = |rank: bool| -> matconn::Result<Value> {
        let Some(ids) = x.finite_members() else {
            return Err(Error::Precondition(
                "the window engines need a finite side; use --engine formula".into(),
            ));
        };
        let m = mc_window(gp, n)?;
        let ids: Vec<&String> = ids.iter().collect();
        let s = m.set_of(&ids)?;
        Ok(json!(if rank { m.kappa_by_rank(s) } else { m.kappa(s).value }))
    };
    let value = match engine {
        Engine::Formula => to_value(&kappa_formula_periodic_at(gp, &x, n)?),
        Engine::Bases => windowed(false)?,
        Engine::Rank => windowed(true)?,
    };
    let mut report = json!({
        "engine": engine_name(engine),
        "x": x.describe(),
        "window": n,
        "kappa": value,
    });
    let mut pass = true;
    if verify {
        let f = to_value(&kappa_formula_periodic_at(gp, &x, n)?);
        let next = to_value(&kappa_formula_periodic_at(gp, &x, n + 1)?);
        let mut checks = json!({"formula": f, "formula_next_window": next});
        pass = f == next;
        if x.is_finite() {
            let (b, r) = (windowed(false)?, windowed(true)?);
            pass &= b == r && b == f;
            checks["bases"] = b;
            checks["rank"] = r;
        }
        checks["agree"] = json!(pass);
        report["checks"] = checks;
    }
    Ok(Outcome { report, pass })
}

fn connectivity(input: &GraphInput, kind: ConnKind, cap: usize, n: usize, opts: &Options) -> matconn::Result<Outcome> {
    let (name, c) = match (kind, input) {
        (ConnKind::Tutte, GraphInput::Finite { graph, .. }) => ("tutte", tutte_connectivity(graph, cap, opts)?),
        (ConnKind::Tutte, GraphInput::Periodic(gp)) => ("tutte", tutte_connectivity_periodic(gp, cap, opts)?),
        (ConnKind::MatroidFc, GraphInput::Finite { graph, .. }) => {
            ("matroid-fc", matroid_connectivity(&mfc(graph), cap, opts)?)
        }
        (ConnKind::MatroidFc, GraphInput::Periodic(_)) => {
            return Err(Error::Precondition(
                "matroid-fc needs a finite graph; use --kind matroid-c for windows".into(),
            ))
        }
        (ConnKind::MatroidC, GraphInput::Finite { graph, .. }) => {
            ("matroid-c", matroid_connectivity(&mfc(graph), cap, opts)?)
        }
        (ConnKind::MatroidC, GraphInput::Periodic(gp)) => {
            ("matroid-c", matroid_connectivity(&mc_window(gp, n)?, cap, opts)?)
        }
    };
    let mut report = to_value(&c);
    report["kind"] = json!(name);
    Ok(Outcome::ok(report))
}

fn separations(input: &GraphInput, ell: usize, kind: SepKind, convert: bool, opts: &Options) -> matconn::Result<Outcome> {
    let g = match input {
        GraphInput::Periodic(gp) if gp.ends() != Ends::Zero => {
            if !matches!(kind, SepKind::Tutte) || convert {
                return Err(Error::Precondition(
                    "periodic graphs support plain Tutte-separation searches only".into(),
                ));
            }
            return Ok(Outcome::ok(to_value(&find_tutte_separation_periodic(gp, ell, opts)?)));
        }
        GraphInput::Periodic(gp) => gp.core().clone(),
        GraphInput::Finite { graph, .. } => graph.clone(),
    };
    let search = match kind {
        SepKind::Tutte => find_tutte_separation(&g, ell, opts)?,
        SepKind::Matroid => find_matroid_separation(&mfc(&g), ell, opts)?,
    };
    let mut report = json!({"search": to_value(&search)});
    if convert {
        if let Some(found) = &search.found {
            let ids = found.x.ids().expect("finite separations list their ids");
            let x = g.edge_set(ids)?;
            report["converted"] = match kind {
                SepKind::Tutte => to_value(&tutte_sep_to_matroid_sep(&g, x, ell)?),
                SepKind::Matroid => to_value(&matroid_sep_to_tutte_sep(&g, x, ell, opts)?),
            };
        }
    }
    Ok(Outcome::ok(report))
}

fn graph_matroid(input: &GraphInput, which: &str) -> matconn::Result<Matroid> {
    if let Some(n) = which.strip_prefix("c-window:") {
        let n = n.parse().map_err(|_| Error::Input(format!("bad window size in {which}")))?;
        return mc_window(&input.periodic(), n);
    }
    let g = input.finite()?;
    match which {
        "fc" => Ok(mfc(g)),
        "fb" => Ok(mfb(g)),
        _ => Err(Error::Input(format!("unknown matroid {which}; expected fc, fb or c-window:N"))),
    }
}

/// Matroid files have a `ground` key; anything else is read as a graph.
fn load_any_matroid(spec: &str, which: &str) -> matconn::Result<Matroid> {
    let is_uniform = spec
        .strip_prefix("builtin:u")
        .is_some_and(|rest| rest.contains(',') && rest.chars().all(|c| c.is_ascii_digit() || c == ','));
    if is_uniform {
        return load_matroid(spec);
    }
    if !spec.starts_with("builtin:") {
        let text = std::fs::read_to_string(spec).map_err(|e| Error::Input(format!("cannot read {spec}: {e}")))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| Error::Input(format!("cannot parse {spec}: {e}")))?;
        if v.get("ground").is_some() {
            return matconn::io::parse_matroid(&text);
        }
        return graph_matroid(&matconn::io::parse_graph(&text)?, which);
    }
    graph_matroid(&load_graph(spec)?, which)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    file: &str,
    check: Check,
    cap: usize,
    n: usize,
    which: &str,
    samples: usize,
    seed: u64,
    opts: &Options,
) -> matconn::Result<Outcome> {
    let (name, pass, report) = match check {
        Check::Equivalence => {
            let r = verify_equivalence(load_graph(file)?.finite()?, cap, opts)?;
            ("equivalence", r.agree, to_value(&r))
        }
        Check::Axioms => {
            let m = load_any_matroid(file, which)?;
            let v = check_axioms(&m, opts)?;
            ("axioms", v.is_none(), json!({"matroid": m.label(), "violation": v}))
        }
        Check::KappaDual => {
            let m = load_any_matroid(file, which)?;
            let v = check_kappa_duality(&m, opts)?;
            ("kappa-dual", v.is_none(), json!({"matroid": m.label(), "counterexample": v}))
        }
        Check::Dual => {
            let mut p = load_pair(file)?;
            let w = p.verify(opts)?;
            ("dual", w.is_none(), json!({"counterexample": w}))
        }
        Check::Graphdual => {
            let p = load_pair(file)?;
            let w = verify_graphdual(&p, opts)?;
            ("graphdual", w.is_none(), json!({"counterexample": w}))
        }
        Check::TutteDual => {
            let mut p = load_pair(file)?;
            if let Some(w) = p.verify(opts)? {
                return Err(Error::Precondition(format!("not a dual pair: {}", to_value(&w))));
            }
            let r = tutte_duality_check(&p, cap, opts)?;
            ("tutte-dual", r.agree, to_value(&r))
        }
        Check::SameconnWindow => {
            let input = load_graph(file)?;
            let GraphInput::Periodic(gp) = input else {
                return Err(Error::Input("sameconn-window needs a periodic graph".into()));
            };
            let r = verify_window_stability(&gp, n, samples, seed)?;
            ("sameconn-window", r.mismatches.is_empty(), to_value(&r))
        }
    };
    Ok(Outcome {
        report: json!({"check": name, "pass": pass, "report": report}),
        pass,
    })
}

fn dual(file: &str) -> matconn::Result<Outcome> {
    let input = load_graph(file)?;
    let GraphInput::Finite { graph, faces } = input else {
        return Err(Error::Input("duals are built for finite graphs only".into()));
    };
    let faces = faces.ok_or_else(|| Error::Input("the graph carries no faces".into()))?;
    let d = planar_dual(&graph, &faces)?;
    Ok(Outcome::ok(json!({
        "g": to_value(&GraphJson::from_graph(&graph, Some(faces))),
        "g_star": to_value(&GraphJson::from_graph(&d, None)),
    })))
}

fn window(file: &str, n: usize, contract: bool, span: bool) -> matconn::Result<Outcome> {
    let gp = load_graph(file)?.periodic();
    let w = if contract {
        gp.window_contract(n)
    } else if span {
        gp.window_span(n)
    } else {
        gp.window(n)
    };
    Ok(Outcome::ok(to_value(&GraphJson::from_graph(&w, None))))
}

fn run(cli: &Cli) -> matconn::Result<Outcome> {
    let opts = Options {
        exec: if cli.sequential { Exec::Sequential } else { Exec::default() },
        limits: Limits::from_env(),
        heuristic: cli.heuristic,
    };
    match &cli.command {
        Command::Kappa { file, side, engine, verify, n } => match load_graph(file)? {
            GraphInput::Finite { graph, .. } => kappa_finite(&graph, side, *engine, *verify),
            GraphInput::Periodic(gp) if gp.ends() == Ends::Zero => kappa_finite(gp.core(), side, *engine, *verify),
            GraphInput::Periodic(gp) => kappa_periodic(&gp, side, *engine, *verify, *n),
        },
        Command::Connectivity { file, kind, cap, n } => connectivity(&load_graph(file)?, *kind, *cap, *n, &opts),
        Command::Separations { file, ell, kind, convert } => separations(&load_graph(file)?, *ell, *kind, *convert, &opts),
        Command::Verify { file, check, cap, n, matroid, samples, seed } => {
            verify(file, *check, *cap, *n, matroid, *samples, *seed, &opts)
        }
        Command::Dual { file } => dual(file),
        Command::Window { file, n, contract, span } => window(file, *n, *contract, *span),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = if cli.pretty {
                serde_json::to_string_pretty(&out.report)
            } else {
                serde_json::to_string(&out.report)
            }
            .expect("reports serialize");
            println!("{text}");
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Input(String::new())), 2);
        assert_eq!(exit_code(&Error::Embedding(String::new())), 3);
        assert_eq!(
            exit_code(&Error::Capacity {
                what: String::new(),
                size: 1,
                limit: 0
            }),
            4
        );
        assert_eq!(exit_code(&Error::Internal(String::new())), 5);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn cardinality_serializes_in_reports() {
        assert_eq!(to_value(&matconn::Cardinality::Infinite), json!("infinite"));
    }
}
