//! Command-line front end. [`run`] takes an argument vector and returns the
//! exit status with captured output, so the binary is a thin wrapper.

use std::fs;
use std::io::{BufRead, BufReader};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use qspectral::audit::{self, fmt_sig, AuditConfig, AuditReport};
use qspectral::bounds::{self, BoundParams, Formula, GraphFacts};
use qspectral::forbidden;
use qspectral::search::{self, SearchConfig};
use qspectral::spectra::{self, SpectralEstimate};
use qspectral::{Graph, GraphFamily};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qspectral", version, about = "Spectral bounds for book-free and K_{s,t}-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print q(G) and rho(G) with residuals.
    Spectra {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = spectra::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print the graph6 encoding of a named family member.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Forbidden-subgraph profile and freeness verdicts.
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// B_{k+1}-freeness threshold.
        #[arg(long)]
        k: Option<usize>,
        /// K_{2,l+1}-freeness threshold.
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, requires = "t")]
        s: Option<usize>,
        #[arg(long, requires = "s")]
        t: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Evaluate a bound formula at explicit parameters.
    Bound {
        #[arg(long)]
        formula: Formula,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        size_a: Option<usize>,
        #[arg(long)]
        size_b: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Audit the bounds exhaustively or over a graph6 corpus.
    Audit(AuditArgs),
    /// Hill-climb for large q(G) under forbidden-subgraph constraints.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, requires = "t")]
        s: Option<usize>,
        #[arg(long, requires = "s")]
        t: Option<usize>,
        /// Spectral evaluations per run.
        #[arg(long, default_value_t = 2000)]
        budget: usize,
        #[arg(long, default_value_t = 4)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("source").required(true).multiple(false).args(["family", "graph6", "input"])))]
struct InputArgs {
    /// Built-in family (parameters via --n, --parts, --pages, --m).
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    /// Inline graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// File of newline-separated graph6 strings.
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    params: FamilyParams,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[command(flatten)]
    params: FamilyParams,
}

#[derive(Debug, Args)]
struct FamilyParams {
    /// Order for complete, path, cycle and friendship graphs.
    #[arg(long)]
    n: Option<usize>,
    /// Class sizes for complete_bipartite, as S,T.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Triangle count of a book.
    #[arg(long)]
    pages: Option<usize>,
    /// Side length for rook, clique order for triangular.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyName {
    Complete,
    #[value(alias = "complete-bipartite")]
    CompleteBipartite,
    Path,
    Cycle,
    Book,
    Friendship,
    Petersen,
    Rook,
    Triangular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct AuditArgs {
    /// Audit every connected labelled graph of this order (at most 7).
    #[arg(long, group = "mode")]
    exhaustive: Option<usize>,
    /// Audit a graph6 file ("-" for standard input).
    #[arg(long, group = "mode")]
    input: Option<PathBuf>,
    /// Check that F_n is the unique q-maximiser among C_4-free graphs (5..=7).
    #[arg(long, group = "mode")]
    friendship: Option<usize>,
    /// Comma-separated formula ids; defaults to every graph-level formula.
    #[arg(long, value_delimiter = ',')]
    formulas: Vec<Formula>,
    /// Comma-separated K_{s,t} shapes as SxT.
    #[arg(long, value_delimiter = ',', value_parser = parse_shape)]
    shapes: Vec<(usize, usize)>,
    /// Also audit disconnected graphs in exhaustive mode.
    #[arg(long)]
    include_disconnected: bool,
    /// Keep every record, not only equality, violation and inconclusive ones.
    #[arg(long)]
    all_records: bool,
    /// Power-iteration residual tolerance.
    #[arg(long, default_value_t = spectra::DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = 1e-8)]
    violation_tol: f64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_shape(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(|| format!("shape '{s}' is not SxT"))?;
    let a = a.trim().parse().map_err(|_| format!("bad s in '{s}'"))?;
    let b = b.trim().parse().map_err(|_| format!("bad t in '{s}'"))?;
    Ok((a, b))
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let jobs = match &cli.command {
        Command::Audit(a) => a.jobs.max(1),
        _ => 1,
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => return Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    match pool.install(|| dispatch(cli.command)) {
        Ok(o) => o,
        Err(e) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e:#}\n") },
    }
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Spectra { input, tol, format } => cmd_spectra(&input, tol, format),
        Command::Gen { family } => {
            let g = build_family(family.family, &family.params)?;
            Ok(Outcome::ok(format!("{}\n", g.to_graph6()?)))
        }
        Command::Check { input, k, l, s, t, format } => cmd_check(&input, k, l, s.zip(t), format),
        Command::Bound { formula, delta, k, l, n, s, t, size_a, size_b, format } => {
            let params = BoundParams { n, delta, k, l, s, t, size_a, size_b };
            cmd_bound(formula, &params, format)
        }
        Command::Audit(args) => cmd_audit(args),
        Command::Search { n, k, l, s, t, budget, restarts, seed, format } => {
            let cfg = SearchConfig { n, book_cap: k, pair_cap: l, kst: s.zip(t), budget, restarts, seed };
            cmd_search(&cfg, format)
        }
    }
}

fn build_family(name: FamilyName, p: &FamilyParams) -> Result<Graph> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| anyhow!("--{flag} is required for this family"));
    let family = match name {
        FamilyName::Complete => GraphFamily::Complete { n: need(p.n, "n")? },
        FamilyName::CompleteBipartite => match p.parts.as_slice() {
            [s, t] => GraphFamily::CompleteBipartite { s: *s, t: *t },
            _ => bail!("--parts S,T is required for complete_bipartite"),
        },
        FamilyName::Path => GraphFamily::Path { n: need(p.n, "n")? },
        FamilyName::Cycle => GraphFamily::Cycle { n: need(p.n, "n")? },
        FamilyName::Book => GraphFamily::Book { pages: need(p.pages, "pages")? },
        FamilyName::Friendship => GraphFamily::Friendship { n: need(p.n, "n")? },
        FamilyName::Petersen => GraphFamily::Petersen,
        FamilyName::Rook => GraphFamily::Rook { m: need(p.m, "m")? },
        FamilyName::Triangular => GraphFamily::Triangular { m: need(p.m, "m")? },
    };
    Ok(family.build()?)
}

fn load_graphs(input: &InputArgs) -> Result<Vec<Graph>> {
    if let Some(name) = input.family {
        return Ok(vec![build_family(name, &input.params)?]);
    }
    if let Some(text) = &input.graph6 {
        return Ok(vec![Graph::from_graph6(text.trim()).map_err(|e| anyhow!("graph6 '{text}': {e}"))?]);
    }
    let path = input.input.as_ref().expect("clap enforces one source");
    let reader = open(path)?;
    let (graphs, skipped) = audit::parse_corpus(reader)?;
    if let Some(first) = skipped.first() {
        bail!("{}: malformed graph6 on line {}: {}", path.display(), first.line, first.error);
    }
    Ok(graphs)
}

fn open(path: &PathBuf) -> Result<Box<dyn BufRead>> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufReader::new(std::io::stdin())));
    }
    let f = fs::File::open(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(Box::new(BufReader::new(f)))
}

fn estimate_json(e: &SpectralEstimate) -> serde_json::Value {
    json!({
        "value": e.value,
        "residual": e.residual,
        "iterations": e.iterations,
        "converged": e.converged,
    })
}

fn cmd_spectra(input: &InputArgs, tol: f64, format: Format) -> Result<Outcome> {
    let graphs = load_graphs(input)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    for g in &graphs {
        let q = spectra::q_radius(g, tol)?;
        let rho = spectra::adj_radius(g, tol)?;
        let g6 = g.to_graph6().unwrap_or_default();
        text += &format!(
            "{g6}\tq = {} (residual {}, iterations {}, converged {})\trho = {} (residual {}, iterations {}, converged {})\n",
            fmt_sig(q.value),
            fmt_sig(q.residual),
            q.iterations,
            q.converged,
            fmt_sig(rho.value),
            fmt_sig(rho.residual),
            rho.iterations,
            rho.converged
        );
        rows.push(json!({ "graph6": g6, "n": g.n(), "q": estimate_json(&q), "rho": estimate_json(&rho) }));
    }
    render(format, &rows, text)
}

fn render(format: Format, rows: &[serde_json::Value], plain: String) -> Result<Outcome> {
    match format {
        Format::Plain => Ok(Outcome::ok(plain)),
        Format::Json => Ok(Outcome::ok(serde_json::to_string_pretty(rows)? + "\n")),
        Format::Csv => bail!("csv output is only available for audit reports"),
    }
}

fn cmd_check(input: &InputArgs, k: Option<usize>, l: Option<usize>, st: Option<(usize, usize)>, format: Format) -> Result<Outcome> {
    let graphs = load_graphs(input)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    for g in &graphs {
        let ts: Vec<usize> = st.map(|(_, t)| t).into_iter().filter(|&t| t > 2 || g.n() >= 2).collect();
        let profile = forbidden::profile(g, &ts)?;
        let facts = GraphFacts::of(g);
        let g6 = g.to_graph6().unwrap_or_default();
        let srg = forbidden::srg_params(g);
        let mut row = json!({
            "graph6": g6,
            "n": g.n(),
            "edges": g.edge_count(),
            "max_degree": facts.delta,
            "min_degree": facts.min_degree,
            "connected": facts.connected,
            "profile": profile,
            "srg": srg,
        });
        text += &format!(
            "graph6: {g6}\nn: {}\nedges: {}\ndegrees: max {} min {}\nconnected: {}\nmax_adjacent_common: {}\nmax_nonadjacent_common: {}\n",
            g.n(),
            g.edge_count(),
            facts.delta,
            facts.min_degree,
            facts.connected,
            opt(profile.max_adjacent_common),
            opt(profile.max_nonadjacent_common)
        );
        for (t, m) in &profile.tsubset_max {
            text += &format!("tsubset_max[{t}]: {m}\n");
        }
        text += &match srg {
            Some(p) => format!("srg: ({}, {}, {}, {})\n", p.n, p.k_reg, p.a, p.c),
            None => "srg: none\n".to_string(),
        };
        if let Some(k) = k {
            let free = facts.book_free(k);
            text += &format!("book_free(B_{}): {free}\n", k + 1);
            row["book_free"] = json!({ "pages": k + 1, "free": free });
        }
        if let Some(l) = l {
            let free = facts.k2_free(l);
            text += &format!("k2_free(K_2,{}): {free}\n", l + 1);
            row["k2_free"] = json!({ "l": l, "free": free });
        }
        if let Some((s, t)) = st {
            let free = forbidden::is_kst_free(g, s, t)?;
            text += &format!("kst_free(K_{s},{t}): {free}\n");
            row["kst_free"] = json!({ "s": s, "t": t, "free": free });
        }
        if let (Some(k), Some(l)) = (k, l) {
            let applies = facts.thm1(k, l);
            text += &format!("thm1_applies: {applies}\n");
            row["thm1_applies"] = json!(applies);
        }
        rows.push(row);
    }
    render(format, &rows, text)
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

fn cmd_bound(formula: Formula, params: &BoundParams, format: Format) -> Result<Outcome> {
    let result = bounds::evaluate(formula, params);
    let Some(value) = result.value else {
        bail!("{formula}: {}", result.reason.unwrap_or_default());
    };
    match format {
        Format::Plain => Ok(Outcome::ok(format!("{}\n", fmt_sig(value)))),
        Format::Json => Ok(Outcome::ok(serde_json::to_string_pretty(&result)? + "\n")),
        Format::Csv => bail!("csv output is only available for audit reports"),
    }
}

fn audit_config(args: &AuditArgs) -> AuditConfig {
    let mut cfg = AuditConfig::default();
    if !args.formulas.is_empty() {
        cfg.formulas = args.formulas.iter().copied().collect();
    }
    if !args.shapes.is_empty() {
        cfg.kst_shapes = args.shapes.clone();
    }
    cfg.power_tol = args.tol;
    cfg.violation_tol = args.violation_tol;
    cfg.connected_only = !args.include_disconnected;
    cfg.keep_all_records = args.all_records;
    cfg
}

fn cmd_audit(args: AuditArgs) -> Result<Outcome> {
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        bail!("--tol must be positive");
    }
    if let Some(n) = args.friendship {
        let verdict = audit::friendship_extremality(n)?;
        let code = if verdict.confirmed { EXIT_OK } else { EXIT_VIOLATION };
        return Ok(Outcome { code, stdout: serde_json::to_string_pretty(&verdict)? + "\n", stderr: String::new() });
    }
    let cfg = audit_config(&args);
    let report = if let Some(n) = args.exhaustive {
        audit::audit_exhaustive(n, &cfg)?
    } else if let Some(path) = &args.input {
        audit::audit_corpus(open(path)?, &cfg)?
    } else {
        bail!("one of --exhaustive, --input or --friendship is required");
    };
    let body = render_report(&report, args.format)?;
    let stdout = match &args.out {
        Some(path) => {
            fs::write(path, &body).with_context(|| format!("cannot write {}", path.display()))?;
            String::new()
        }
        None => body,
    };
    let mut stderr = String::new();
    for s in &report.meta.skipped {
        stderr += &format!("warning: skipped line {}: {}\n", s.line, s.error);
    }
    let must = report.must_hold_violations();
    if must > 0 {
        stderr += &format!("error: {must} violation(s) of bounds that must hold\n");
    }
    let findings = report.violations(Formula::Lem1Printed);
    if findings > 0 {
        stderr += &format!("finding: printed lem1 form violated in {findings} instance(s)\n");
    }
    let code = if must > 0 { EXIT_VIOLATION } else { EXIT_OK };
    Ok(Outcome { code, stdout, stderr })
}

fn render_report(report: &AuditReport, format: Format) -> Result<String> {
    match format {
        Format::Json | Format::Plain => Ok(report.to_json()? + "\n"),
        Format::Csv => {
            let mut buf = Vec::new();
            report.write_csv(&mut buf)?;
            Ok(String::from_utf8(buf)?)
        }
    }
}

fn cmd_search(cfg: &SearchConfig, format: Format) -> Result<Outcome> {
    let result = search::extremal_search(cfg)?;
    let must_fail = result.gaps.iter().any(|g| g.gap < -1e-8 && g.formula.must_hold());
    let code = if must_fail { EXIT_VIOLATION } else { EXIT_OK };
    let stdout = match format {
        Format::Json => serde_json::to_string_pretty(&result)? + "\n",
        Format::Plain => {
            let mut s = format!(
                "best_graph6: {}\nbest_q: {}\nevaluations: {}\n",
                result.best_graph6,
                fmt_sig(result.best_q),
                result.evaluations
            );
            for g in &result.gaps {
                s += &format!("{} [{}]: bound {} gap {}\n", g.formula, g.params, fmt_sig(g.bound), fmt_sig(g.gap));
            }
            s
        }
        Format::Csv => bail!("csv output is only available for audit reports"),
    };
    Ok(Outcome { code, stdout, stderr: String::new() })
}
