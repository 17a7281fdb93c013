mod config;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};

use cnbtest::eig::{eig_dense, eig_extreme_sym, eig_leading, Extreme};
use cnbtest::estimate::{
    count_nb_informative, estimate_k_recursive, estimate_k_sequential, fit_null_model, NullSource, RecursiveConfig,
    SequentialConfig, DEFAULT_MIN_SIZE,
};
use cnbtest::harness::{
    delta_grid, run_approx_gap, run_clustering_corr, run_null_scaling, run_power_sweep, run_vdv_growth, DensityMode,
    DensityScaling, DiagConfig, NullScalingConfig, SweepConfig, Table,
};
use cnbtest::io::{format_edge_list, read_edge_list, write_edge_list};
use cnbtest::model::{build_q_delta, sample_er, sample_sbm};
use cnbtest::operators::{bethe_hessian, centered_adjacency, centered_nb_operator, nb_operator, normalized_adjacency, r_a};
use cnbtest::stats::{
    bootstrap_null, compute_statistic, gof_test, parse_stat_list, simulate_null, DEFAULT_NULL_REPS, NB_SUBSPACE,
};
use cnbtest::{
    Complex64, EigOptions, Embedding, Error, Graph, LinearOperator, NullDistribution, QFamily, RngSeed, StatKind,
};

/// Error with the process exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    pub fn param(msg: impl Into<String>) -> Self {
        Self { code: 1, msg: msg.into() }
    }

    pub fn io(msg: impl Into<String>) -> Self {
        Self { code: 2, msg: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) | Error::Parse { .. } => 2,
            Error::Convergence { .. } => 3,
            Error::Parameter(_) | Error::Resource(_) | Error::Contract(_) => 1,
        };
        Self { code, msg: e.to_string() }
    }
}

type Outcome<T = ()> = Result<T, Failure>;

#[derive(Parser)]
#[command(name = "cnbtest", version, about = "Spectral goodness-of-fit tests for the number of blocks in a network")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample a graph and write it as an edge list.
    Gen(GenArgs),
    /// Leading eigenvalues of a graph operator.
    Spectrum(SpectrumArgs),
    /// Goodness-of-fit test of a K0-block model.
    Test(TestArgs),
    /// Estimate the number of blocks.
    EstimateK(EstimateArgs),
    /// Count real non-backtracking eigenvalues outside the bulk.
    CountNb(CountArgs),
    /// Power or clustering sweep over a signal grid.
    Power(PowerArgs),
    /// Simulate a null distribution and write it as CSV.
    NullSim(NullSimArgs),
    /// Null scaling and approximation diagnostics on random graphs.
    Diag(DiagArgs),
}

#[derive(Args)]
struct GraphInput {
    /// Edge list, one `u v` pair per line.
    #[arg(long)]
    graph: PathBuf,
    /// Restrict to the largest connected component.
    #[arg(long)]
    lcc: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum NullArg {
    Tw,
    TwShift,
    Mc,
}

impl NullArg {
    fn source(self) -> NullSource {
        match self {
            Self::Tw => NullSource::TracyWidom { shift: false },
            Self::TwShift => NullSource::TracyWidom { shift: true },
            Self::Mc => NullSource::MonteCarlo,
        }
    }
}

fn parse_stat(s: &str) -> Result<StatKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_stats(s: &str) -> Outcome<Vec<StatKind>> {
    Ok(parse_stat_list(s)?)
}

fn parse_family(s: &str) -> Result<QFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_embedding(s: &str) -> Result<Embedding, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_scaling(s: &str) -> Result<DensityScaling, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Args)]
struct GenArgs {
    /// `er` or a block family: balanced, unbalanced, equal_degree, three_block.
    #[arg(long, default_value = "er")]
    model: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    n1: Option<usize>,
    #[arg(long)]
    n2: Option<usize>,
    #[arg(long)]
    n3: Option<usize>,
    #[arg(long)]
    p0: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    delta: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    Adj,
    Cadj,
    Nadj,
    Bh,
    Nb,
    Cnb,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value_t = OpArg::Cnb)]
    op: OpArg,
    /// Blocks in the fitted model used by centered operators.
    #[arg(long, default_value_t = 1)]
    k0: usize,
    #[arg(long, default_value_t = 6)]
    k: usize,
    /// Bethe-Hessian scale; defaults to the square root of the mean degree.
    #[arg(long)]
    r: Option<f64>,
    /// Full dense spectrum instead of the leading `k`.
    #[arg(long)]
    all: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TestArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, default_value_t = 1)]
    k0: usize,
    #[arg(long, default_value = "cnb", value_parser = parse_stat)]
    stat: StatKind,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = NullArg::Tw)]
    null: NullArg,
    /// Read the null distribution from a CSV written by `null-sim`.
    #[arg(long)]
    null_csv: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_NULL_REPS)]
    reps: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Sequential,
    Recursive,
}

#[derive(Args)]
struct EstimateArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value_t = Method::Recursive)]
    method: Method,
    #[arg(long, default_value = "cnb", value_parser = parse_stat)]
    stat: StatKind,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = NullArg::Mc)]
    null: NullArg,
    #[arg(long, default_value_t = DEFAULT_NULL_REPS)]
    reps: usize,
    #[arg(long, default_value_t = 10)]
    kmax: usize,
    #[arg(long, default_value_t = DEFAULT_MIN_SIZE)]
    min_size: usize,
    #[arg(long, default_value = "cnb", value_parser = parse_embedding)]
    embedding: Embedding,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// JSON output: the dendrogram (recursive) or the test sequence.
    #[arg(long, default_value = "dendrogram.json")]
    out: PathBuf,
    /// CSV of `node,block` using the ids from the input file.
    #[arg(long)]
    labels_out: Option<PathBuf>,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    input: GraphInput,
}

#[derive(Clone, Copy, ValueEnum)]
enum Measure {
    Power,
    Clustering,
}

#[derive(Args)]
struct PowerArgs {
    #[arg(long, value_enum, default_value_t = Measure::Power)]
    measure: Measure,
    #[arg(long, default_value = "balanced", value_parser = parse_family)]
    family: QFamily,
    #[arg(long)]
    n1: usize,
    #[arg(long)]
    n2: usize,
    #[arg(long)]
    n3: Option<usize>,
    #[arg(long)]
    p0: f64,
    #[arg(long, default_value_t = 0.02)]
    delta_step: f64,
    #[arg(long, default_value_t = 0.98)]
    delta_max: f64,
    /// Comma-separated statistic keys.
    #[arg(long, default_value = "cnb,nadj,nb,bh:ra,bh:rm,lr,tri")]
    stats: String,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[arg(long, default_value_t = 1000)]
    reps: usize,
    #[arg(long, default_value_t = DEFAULT_NULL_REPS)]
    null_reps: usize,
    #[arg(long, value_enum, default_value_t = NullArg::Mc)]
    null: NullArg,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct NullSimArgs {
    #[arg(long, default_value = "cnb", value_parser = parse_stat)]
    stat: StatKind,
    /// Erdos-Renyi null size; ignored with `--graph`.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    /// Bootstrap from a model fitted to this graph instead.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    lcc: bool,
    #[arg(long, default_value_t = 1)]
    k0: usize,
    #[arg(long, default_value_t = DEFAULT_NULL_REPS)]
    reps: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagKind {
    /// Growth of the degree quadratic form along the top eigenvector.
    Vdv,
    /// Gap between the leading eigenvalue and its first-order approximation.
    Gap,
    /// Scaled null statistics against the Tracy-Widom law.
    Scaling,
}

#[derive(Args)]
struct DiagArgs {
    #[arg(long, value_enum)]
    kind: DiagKind,
    /// Density scaling for vdv and gap: constant, cbrt, sqrt, inverse.
    #[arg(long, default_value = "cbrt", value_parser = parse_scaling)]
    mode: DensityScaling,
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    #[arg(long, value_delimiter = ',', default_values_t = [250, 500, 1000])]
    ns: Vec<usize>,
    #[arg(long, default_value_t = 50)]
    reps: usize,
    /// Fixed expected degree for scaling runs.
    #[arg(long)]
    degree: Option<f64>,
    /// Fixed edge probability for scaling runs.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value = "cnb,nadj")]
    stats: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn emit(text: &str, out: Option<&Path>) -> Outcome {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// The graph to analyse and, for each of its nodes, the id in the file.
fn load_graph(input: &GraphInput) -> Outcome<(Graph, Vec<u64>)> {
    let (g, report) = read_edge_list(&input.graph).map_err(|e| match e {
        Error::Io(io) => Failure::io(format!("{}: {io}", input.graph.display())),
        other => Failure::from(other).with_prefix(&input.graph.display().to_string()),
    })?;
    if report.self_loops > 0 || report.duplicates > 0 {
        eprintln!(
            "note: dropped {} self-loops and {} duplicate edges",
            report.self_loops, report.duplicates
        );
    }
    if !input.lcc {
        return Ok((g, report.original_ids));
    }
    let (sub, map) = g.largest_connected_component();
    eprintln!("note: largest connected component has {} of {} nodes", sub.n(), g.n());
    let ids = map.iter().map(|&i| report.original_ids[i]).collect();
    Ok((sub, ids))
}

impl Failure {
    fn with_prefix(mut self, prefix: &str) -> Self {
        self.msg = format!("{prefix}: {}", self.msg);
        self
    }
}

fn gen(a: &GenArgs) -> Outcome {
    let seed = RngSeed::new(a.seed);
    let need = |v: Option<f64>, name: &str| v.ok_or_else(|| Failure::param(format!("--{name} is required")));
    let needn = |v: Option<usize>, name: &str| v.ok_or_else(|| Failure::param(format!("--{name} is required")));
    let g = if a.model == "er" {
        sample_er(needn(a.n, "n")?, need(a.p, "p")?, seed)?
    } else {
        let family = parse_family(&a.model).map_err(Failure::param)?;
        let spec = build_q_delta(family, needn(a.n1, "n1")?, needn(a.n2, "n2")?, a.n3, need(a.p0, "p0")?, a.delta)?;
        sample_sbm(&spec, seed)?
    };
    match &a.out {
        Some(p) => write_edge_list(&g, p).map_err(|e| Failure::from(e).with_prefix(&p.display().to_string()))?,
        None => print!("{}", format_edge_list(&g)),
    }
    eprintln!("generated n={} m={}", g.n(), g.m());
    Ok(())
}

fn spectrum(a: &SpectrumArgs) -> Outcome {
    let (g, _) = load_graph(&a.input)?;
    let est = fit_null_model(&g, a.k0)?;
    let values: Vec<Complex64> = match a.op {
        OpArg::Nb | OpArg::Cnb => {
            let run = |op: &dyn LinearOperator| -> Outcome<Vec<Complex64>> {
                if a.all {
                    Ok(eig_dense(&dense_checked(op)?, false)?.values)
                } else {
                    let opts = EigOptions::leading(a.k).with_vectors(false).with_subspace(NB_SUBSPACE.max(2 * a.k + 8));
                    Ok(eig_leading(op, &opts)?.values)
                }
            };
            match a.op {
                OpArg::Nb => run(&nb_operator(&g))?,
                _ => run(&centered_nb_operator(&g, &est)?)?,
            }
        }
        _ => {
            let which = if matches!(a.op, OpArg::Bh) { Extreme::Smallest } else { Extreme::Largest };
            let run = |op: &dyn LinearOperator| -> Outcome<Vec<f64>> {
                if a.all {
                    let mut v = eig_dense(&dense_checked(op)?, false)?.values.iter().map(|z| z.re).collect::<Vec<_>>();
                    if which == Extreme::Smallest {
                        v.reverse();
                    }
                    Ok(v)
                } else {
                    Ok(eig_extreme_sym(op, which, &EigOptions::leading(a.k).with_vectors(false))?.values)
                }
            };
            let real = match a.op {
                OpArg::Adj => run(&g)?,
                OpArg::Cadj => run(&centered_adjacency(&g, &est)?)?,
                OpArg::Nadj => run(&normalized_adjacency(&g, &est)?)?,
                _ => run(&bethe_hessian(&g, a.r.unwrap_or_else(|| r_a(&g))))?,
            };
            real.into_iter().map(|x| Complex64::new(x, 0.0)).collect()
        }
    };
    let mut csv = String::from("index,re,im\n");
    for (i, z) in values.iter().enumerate() {
        let _ = writeln!(csv, "{},{},{}", i + 1, z.re, z.im);
    }
    emit(&csv, a.out.as_deref())
}

const DENSE_MAX: usize = 4000;

fn dense_checked(op: &dyn LinearOperator) -> Outcome<cnbtest::faer::Mat<f64>> {
    if op.dim() > DENSE_MAX {
        return Err(Failure::param(format!(
            "--all needs a dense matrix of dimension {} (limit {DENSE_MAX})",
            op.dim()
        )));
    }
    Ok(op.to_dense())
}

fn test(a: &TestArgs) -> Outcome {
    let (g, _) = load_graph(&a.input)?;
    let n = g.n();
    let est = fit_null_model(&g, a.k0)?;
    let value = compute_statistic(&g, &est, a.stat, a.k0)?;
    let seed = RngSeed::new(a.seed);
    let null = match (&a.null_csv, a.null.source()) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
            let d = NullDistribution::from_csv(&text).map_err(|e| Failure::from(e).with_prefix(&path.display().to_string()))?;
            if d.stat != a.stat || d.k0 != a.k0 {
                return Err(Failure::param(format!(
                    "null file is for {} with K0 = {}, not {} with K0 = {}",
                    d.stat, d.k0, a.stat, a.k0
                )));
            }
            d
        }
        (None, NullSource::TracyWidom { shift }) => {
            if a.k0 != 1 {
                return Err(Failure::param("the Tracy-Widom null needs --k0 1; use --null mc"));
            }
            NullDistribution::tracy_widom(a.stat, n, est.density(), shift)?
        }
        (None, NullSource::MonteCarlo) if a.k0 == 1 => simulate_null(a.stat, n, est.density(), 1, a.reps, seed)?,
        (None, NullSource::MonteCarlo) => bootstrap_null(&g, &est, a.stat, a.reps, seed)?,
    };
    if null.low_reps {
        eprintln!("warning: null distribution has only {} values", null.reps);
    }
    let o = gof_test(value, &null, a.alpha, n)?;
    println!("statistic={}", o.statistic);
    println!("threshold={}", o.threshold);
    println!("decision={}", if o.reject { "reject" } else { "accept" });
    Ok(())
}

fn estimate_k(a: &EstimateArgs) -> Outcome {
    let (g, ids) = load_graph(&a.input)?;
    let seed = RngSeed::new(a.seed);
    let write_json = |v: &serde_json::Value| -> Outcome {
        let text = serde_json::to_string_pretty(v).expect("json values always serialize");
        emit(&(text + "\n"), Some(&a.out))
    };
    let labels = match a.method {
        Method::Sequential => {
            let cfg = SequentialConfig { null: a.null.source(), kmax: a.kmax, reps: a.reps, ..SequentialConfig::new(a.stat, a.alpha, seed) };
            let r = estimate_k_sequential(&g, &cfg)?;
            println!("k_hat={}", r.k_hat);
            println!("truncated={}", r.truncated);
            for s in &r.steps {
                println!("K0={} statistic={} threshold={} reject={}", s.k0, s.statistic, s.threshold, s.reject);
            }
            write_json(&serde_json::to_value(&r).expect("result serializes"))?;
            let fit = fit_null_model(&g, r.k_hat)?;
            (0..g.n()).map(|i| fit.label(i)).collect::<Vec<_>>()
        }
        Method::Recursive => {
            let cfg = RecursiveConfig {
                min_size: a.min_size,
                null: a.null.source(),
                reps: a.reps,
                embedding: a.embedding,
                ..RecursiveConfig::new(a.stat, a.alpha, seed)
            };
            let d = estimate_k_recursive(&g, &cfg)?;
            println!("k_hat={}", d.k_hat());
            println!(
                "leaf_sizes={}",
                d.leaf_sizes().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(";")
            );
            write_json(&d.to_json())?;
            d.labels(g.n())
        }
    };
    if let Some(path) = &a.labels_out {
        let mut csv = String::from("node,block\n");
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(csv, "{},{}", ids[i], l);
        }
        emit(&csv, Some(path))?;
    }
    Ok(())
}

fn count_nb(a: &CountArgs) -> Outcome {
    let (g, _) = load_graph(&a.input)?;
    let c = count_nb_informative(&g)?;
    println!("k_hat={}", c.k_hat);
    println!("mu1={}", c.mu1);
    println!("radius={}", c.radius);
    println!(
        "outliers={}",
        c.outliers.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
    );
    Ok(())
}

fn power(a: &PowerArgs) -> Outcome {
    let cfg = SweepConfig {
        n3: a.n3,
        deltas: delta_grid(a.delta_step, a.delta_max)?,
        stats: parse_stats(&a.stats)?,
        alpha: a.alpha,
        reps: a.reps,
        null_reps: a.null_reps,
        null: a.null.source(),
        seed: a.seed,
        ..SweepConfig::new(a.family, a.n1, a.n2, a.p0)
    };
    let table: Table = match a.measure {
        Measure::Power => run_power_sweep(&cfg)?.1,
        Measure::Clustering => run_clustering_corr(&cfg)?.1,
    };
    emit(&table.to_csv(), a.out.as_deref())
}

fn null_sim(a: &NullSimArgs) -> Outcome {
    let seed = RngSeed::new(a.seed);
    let d = match &a.graph {
        Some(path) => {
            let (g, _) = load_graph(&GraphInput { graph: path.clone(), lcc: a.lcc })?;
            let est = fit_null_model(&g, a.k0)?;
            bootstrap_null(&g, &est, a.stat, a.reps, seed)?
        }
        None => {
            let n = a.n.ok_or_else(|| Failure::param("--n is required without --graph"))?;
            let p = a.p.ok_or_else(|| Failure::param("--p is required without --graph"))?;
            simulate_null(a.stat, n, p, a.k0, a.reps, seed)?
        }
    };
    emit(&d.to_csv(), a.out.as_deref())
}

fn diag(a: &DiagArgs) -> Outcome {
    let table = match a.kind {
        DiagKind::Scaling => {
            let density = match (a.degree, a.p) {
                (Some(d), None) => DensityMode::FixedDegree(d),
                (None, Some(p)) => DensityMode::FixedP(p),
                _ => return Err(Failure::param("scaling needs exactly one of --degree and --p")),
            };
            let cfg = NullScalingConfig { ns: a.ns.clone(), density, stats: parse_stats(&a.stats)?, reps: a.reps, seed: a.seed };
            run_null_scaling(&cfg)?.1
        }
        DiagKind::Vdv | DiagKind::Gap => {
            let cfg = DiagConfig { mode: a.mode, scale: a.scale, ns: a.ns.clone(), reps: a.reps, seed: a.seed };
            if matches!(a.kind, DiagKind::Vdv) {
                let (_, slope, t) = run_vdv_growth(&cfg)?;
                eprintln!("log-log slope of median |v'Dv| = {slope:.4}");
                t
            } else {
                run_approx_gap(&cfg)?.1
            }
        }
    };
    emit(&table.to_csv(), a.out.as_deref())
}

fn command() -> clap::Command {
    let mut cmd = Cli::command();
    let names: Vec<String> = cmd.get_subcommands().map(|s| s.get_name().to_string()).collect();
    for name in names {
        cmd = cmd.mut_subcommand(name, |s| {
            s.args_override_self(true).arg(
                clap::Arg::new("config")
                    .long("config")
                    .value_name("FILE")
                    .help("Flat key=value file; command-line flags take precedence"),
            )
        });
    }
    cmd
}

/// Splice config-file flags in right after the subcommand name.
fn expand_config(argv: Vec<String>, cmd: &clap::Command) -> Outcome<Vec<String>> {
    let Some(sub) = argv.get(1).and_then(|name| cmd.find_subcommand(name)) else {
        return Ok(argv);
    };
    let mut path = None;
    let mut rest = Vec::new();
    let mut it = argv[2..].iter();
    while let Some(arg) = it.next() {
        if arg == "--config" {
            path = Some(it.next().ok_or_else(|| Failure::param("--config needs a path"))?.clone());
        } else if let Some(p) = arg.strip_prefix("--config=") {
            path = Some(p.to_string());
        } else {
            rest.push(arg.clone());
        }
    }
    let Some(path) = path else { return Ok(argv) };
    let mut out = argv[..2].to_vec();
    out.extend(config::load(Path::new(&path), sub)?);
    out.extend(rest);
    Ok(out)
}

fn run(argv: Vec<String>) -> Outcome {
    let cmd = command();
    let argv = expand_config(argv, &cmd)?;
    let matches = match cmd.clone().try_get_matches_from(&argv) {
        Ok(m) => m,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return Ok(());
            }
            return Err(Failure::param(e.render().to_string().trim_end().trim_start_matches("error: ").to_string()));
        }
    };
    if let Some((name, sub)) = matches.subcommand() {
        let def = cmd.find_subcommand(name).expect("parsed subcommand exists");
        eprint!("# command={name}\n{}", config::echo(def, sub));
    }
    let cli = Cli::from_arg_matches(&matches).map_err(|e| Failure::param(e.to_string()))?;
    match &cli.cmd {
        Cmd::Gen(a) => gen(a),
        Cmd::Spectrum(a) => spectrum(a),
        Cmd::Test(a) => test(a),
        Cmd::EstimateK(a) => estimate_k(a),
        Cmd::CountNb(a) => count_nb(a),
        Cmd::Power(a) => power(a),
        Cmd::NullSim(a) => null_sim(a),
        Cmd::Diag(a) => diag(a),
    }
}

fn main() -> ExitCode {
    match run(std::env::args().collect()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
