//! Command-line front end: generate family orientations, compute exact
//! directed metric dimensions, check the closed-form tables, and run
//! exhaustive orientation searches.
//!
//! Exit codes: 0 success (verify: all rows match or are flagged),
//! 1 usage or input error, 2 unflagged verification mismatch,
//! 3 orientation budget refusal.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use oridim::families::{FamilySpec, FanVariant, WheelVariant};
use oridim::io::{serialize_digraph_labeled, to_dot};
use oridim::orient::{ord, orientation_log, OrientError, UndirectedGraph, DEFAULT_EDGE_BUDGET};
use oridim::resolver::{dim_record, metric_dimension, DimMode};
use oridim::verify::{
    has_unflagged_mismatch, render_rows, table, Bounds, TableBounds, VerifyTarget,
};
use oridim::{parse_digraph, ClosingArc, Digraph};

#[derive(Parser)]
#[command(
    name = "oridim",
    version,
    about = "Exact directed metric dimension toolkit for oriented graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    Edgelist,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a family orientation as an edge list or DOT document
    Gen {
        /// Family spec, e.g. wheel-c3simple:n=6,variant=A or path-amal:x=2,lengths=4+5
        spec: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: GenFormat,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the exact dimension and a lexicographically least basis
    Dim {
        /// Edge-list file (header `n m`, one arc per line)
        file: Option<PathBuf>,
        /// Family spec instead of a file
        #[arg(long, conflicts_with = "file")]
        spec: Option<String>,
        /// require-strong (default) or allow-sentinel
        #[arg(long, default_value = "require-strong")]
        mode: String,
        /// Also report every minimum-size resolving set
        #[arg(long)]
        all: bool,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a closed-form dimension table against exhaustive search
    Verify {
        /// Table name: T6..T11
        table: String,
        /// Rim/path length range, e.g. 4..12 or 7
        #[arg(long)]
        n: Option<String>,
        /// Center count range (fan table)
        #[arg(long)]
        m: Option<String>,
        /// Cycle count range (amalgamation table)
        #[arg(long)]
        t: Option<String>,
        /// Shared path length range (amalgamation table)
        #[arg(long)]
        x: Option<String>,
        /// Cycle length range (amalgamation table)
        #[arg(long)]
        len: Option<String>,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate every orientation of a graph and report the dimensions
    Ord {
        /// wheel:n, fan:m:n, cycle:n, or an undirected edge-list file
        graph: String,
        /// require-strong (default) or allow-sentinel
        #[arg(long, default_value = "require-strong")]
        mode: String,
        /// Maximum edge count for exhaustive enumeration
        #[arg(long, default_value_t = DEFAULT_EDGE_BUDGET)]
        budget: usize,
        /// Also write a per-orientation log (bitmask, strong, dimension)
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum CliError {
    Usage(String),
    Budget(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Budget(m) => m,
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = init_workers() {
        eprintln!("error: {}", e.message());
        std::process::exit(e.exit_code());
    }
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            std::process::exit(e.exit_code());
        }
    }
}

/// Worker count from ORIDIM_WORKERS; default is available parallelism.
fn init_workers() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("ORIDIM_WORKERS") else {
        return Ok(());
    };
    let workers: usize = raw
        .parse()
        .ok()
        .filter(|&w| w >= 1)
        .ok_or_else(|| usage(format!("ORIDIM_WORKERS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global()
        .map_err(usage)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.cmd {
        Cmd::Gen { spec, format, out } => cmd_gen(&spec, format, out.as_deref()),
        Cmd::Dim {
            file,
            spec,
            mode,
            all,
            out,
        } => cmd_dim(file.as_deref(), spec.as_deref(), &mode, all, out.as_deref()),
        Cmd::Verify {
            table,
            n,
            m,
            t,
            x,
            len,
            out,
        } => cmd_verify(&table, [n, m, t, x, len], out.as_deref()),
        Cmd::Ord {
            graph,
            mode,
            budget,
            csv,
            out,
        } => cmd_ord(&graph, &mode, budget, csv.as_deref(), out.as_deref()),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            let result = stdout.write_all(text.as_bytes()).and_then(|()| {
                if text.ends_with('\n') {
                    Ok(())
                } else {
                    stdout.write_all(b"\n")
                }
            });
            match result {
                Ok(()) => Ok(()),
                // Downstream closed the pipe (e.g. `oridim ... | head`);
                // exit quietly with the conventional SIGPIPE status.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(141),
                Err(e) => Err(usage(format!("cannot write to standard output: {e}"))),
            }
        }
    }
}

/// Small rims have no dedicated dimension-2 wheel construction; route
/// them to the triangle-simple generators that already achieve 2.
fn route_spec(spec: FamilySpec) -> Result<FamilySpec, CliError> {
    match spec {
        FamilySpec::WheelDim2 { n: 3 } => Err(usage(
            "wheel-dim2 requires n >= 4: every triangle-simple orientation of the rim-3 wheel \
             has dimension 1, so no dimension-2 construction exists at that size",
        )),
        FamilySpec::WheelDim2 { n } if n == 4 || n == 6 => Ok(FamilySpec::WheelC3Simple {
            n,
            variant: WheelVariant::A,
        }),
        FamilySpec::WheelDim2 { n } if n == 5 || n == 7 => Ok(FamilySpec::WheelOdd {
            n,
            variant: FanVariant::CentersOut,
            closing: ClosingArc::VnToV1,
        }),
        other => Ok(other),
    }
}

fn cmd_gen(spec: &str, format: GenFormat, out: Option<&Path>) -> Result<i32, CliError> {
    let spec: FamilySpec = spec.parse().map_err(usage)?;
    let spec = route_spec(spec)?;
    let inst = spec.generate().map_err(usage)?;
    let text = match format {
        GenFormat::Edgelist => format!(
            "# family: {}\n{}",
            inst.spec,
            serialize_digraph_labeled(&inst.digraph, &inst.labels)
        ),
        GenFormat::Dot => to_dot(&inst.digraph, Some(&inst.labels)),
    };
    emit(&text, out)?;
    Ok(0)
}

fn load_digraph(file: Option<&Path>, spec: Option<&str>) -> Result<Digraph, CliError> {
    match (file, spec) {
        (None, Some(spec)) => {
            let spec: FamilySpec = spec.parse().map_err(usage)?;
            let spec = route_spec(spec)?;
            Ok(spec.generate().map_err(usage)?.digraph)
        }
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            parse_digraph(&text).map_err(usage)
        }
        (None, None) => Err(usage("provide an edge-list file or --spec")),
        (Some(_), Some(_)) => unreachable!("clap rejects file together with --spec"),
    }
}

fn cmd_dim(
    file: Option<&Path>,
    spec: Option<&str>,
    mode: &str,
    all: bool,
    out: Option<&Path>,
) -> Result<i32, CliError> {
    let mode: DimMode = mode.parse().map_err(usage)?;
    let d = load_digraph(file, spec)?;
    let res = metric_dimension(&d, mode, all).map_err(usage)?;
    let record = dim_record(&d, mode, &res);
    let json = serde_json::to_string_pretty(&record).expect("record serializes");
    emit(&json, out)?;
    Ok(0)
}

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 1.0;
    }
    let k = k.min(n - k);
    (1..=k).fold(1.0, |acc, i| acc * (n - k + i) as f64 / i as f64)
}

/// Refuses ranges whose largest row would need too many subset checks.
fn refuse_infeasible(target: VerifyTarget, b: &TableBounds) -> Result<(), CliError> {
    const LIMIT: f64 = 5_000_000.0;
    let (vertices, dim) = match target {
        VerifyTarget::T6 => (b.n.hi + 1, b.n.hi / 2),
        VerifyTarget::T7 => (b.n.hi + 1, (b.n.hi - 1) / 2),
        VerifyTarget::T8 => (b.m.hi + b.n.hi, b.n.hi / 2 + b.m.hi),
        VerifyTarget::T9 | VerifyTarget::T10 => (b.n.hi + 1, 2),
        VerifyTarget::T11 => {
            let x = b.x.lo.max(1);
            let v = (b.t.hi * b.len.hi).saturating_sub(x * (b.t.hi - 1)) + x;
            (v, b.t.hi)
        }
    };
    if vertices > 64 {
        return Err(usage(format!(
            "range infeasible: rows reach {vertices} vertices; the subset solver is limited to 64"
        )));
    }
    let checks = binomial(vertices, dim);
    if checks > LIMIT {
        return Err(usage(format!(
            "range infeasible: the largest row needs about {checks:.0} subset checks \
             (limit {LIMIT:.0}); shrink the range"
        )));
    }
    Ok(())
}

fn cmd_verify(
    target: &str,
    overrides: [Option<String>; 5],
    out: Option<&Path>,
) -> Result<i32, CliError> {
    let target: VerifyTarget = target.parse().map_err(usage)?;
    let mut bounds = TableBounds::defaults(target);
    let [n, m, t, x, len] = overrides;
    for (slot, value) in [
        (&mut bounds.n, n),
        (&mut bounds.m, m),
        (&mut bounds.t, t),
        (&mut bounds.x, x),
        (&mut bounds.len, len),
    ] {
        if let Some(raw) = value {
            *slot = raw.parse::<Bounds>().map_err(usage)?;
        }
    }
    refuse_infeasible(target, &bounds)?;
    let rows = table(target, &bounds);
    let mut text = render_rows(&rows);
    if rows.is_empty() {
        text = format!("no rows for {target} in the given range\n");
    }
    emit(&text, out)?;
    Ok(if has_unflagged_mismatch(&rows) { 2 } else { 0 })
}

fn parse_undirected(token: &str) -> Result<UndirectedGraph, CliError> {
    let parts: Vec<&str> = token.split(':').collect();
    let number = |s: &str, what: &str| {
        s.parse::<usize>()
            .map_err(|_| usage(format!("{what} `{s}` is not an integer in `{token}`")))
    };
    match parts.as_slice() {
        ["cycle", n] => {
            let n = number(n, "cycle length")?;
            if n < 3 {
                return Err(usage("cycle length must be at least 3"));
            }
            Ok(UndirectedGraph::cycle(n))
        }
        ["wheel", n] => {
            let n = number(n, "rim length")?;
            if n < 3 {
                return Err(usage("wheel rim must be at least 3"));
            }
            Ok(UndirectedGraph::wheel(n))
        }
        ["fan", m, n] => {
            let m = number(m, "center count")?;
            let n = number(n, "path length")?;
            if m < 1 || n < 1 {
                return Err(usage("fan needs at least one center and one path vertex"));
            }
            Ok(UndirectedGraph::fan(m, n))
        }
        _ => {
            let path = Path::new(token);
            let text = fs::read_to_string(path).map_err(|e| {
                usage(format!(
                    "`{token}` is neither wheel:n, fan:m:n, cycle:n, nor a readable file: {e}"
                ))
            })?;
            UndirectedGraph::parse(&text).map_err(usage)
        }
    }
}

fn orient_error(e: OrientError) -> CliError {
    match e {
        OrientError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
        other => usage(other),
    }
}

fn cmd_ord(
    graph: &str,
    mode: &str,
    budget: usize,
    csv: Option<&Path>,
    out: Option<&Path>,
) -> Result<i32, CliError> {
    let mode: DimMode = mode.parse().map_err(usage)?;
    let g = parse_undirected(graph)?;
    let report = ord(&g, mode, budget).map_err(orient_error)?;
    if let Some(path) = csv {
        let log = orientation_log(&g, mode, budget).map_err(orient_error)?;
        let mut text = String::from("bitmask,strong,dimension\n");
        for row in log {
            let dim = row
                .dimension
                .map(|d| d.to_string())
                .unwrap_or_default();
            writeln!(text, "{},{},{}", row.bitmask, row.strong, dim).expect("string write");
        }
        fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    emit(&json, out)?;
    Ok(0)
}
