use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qct_core::closedform::{bf_rhs, kadell_rhs, qdyson_rhs, qmorris_rhs, BFParams};
use qct_core::gxseries::bf_via_pipeline;
use qct_core::products::{bf_factors, kadell_factors, kadell_h, qdyson_factors, qmorris_factors};
use qct_core::suites::{run_suite, summarize, SuiteOptions, SuiteReport, SUITES};
use qct_core::{ExpVec, QFrac, QLaurent, Shape};

#[derive(Parser)]
#[command(name = "qct", version, about = "Exact constant terms of q-Dyson style products")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Qdyson,
    Qmorris,
    Bf,
    Kadell,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Expand the product and read off the constant term.
    Brute,
    /// Interpolate values from the partial-fraction pipeline (bf only).
    Gx,
}

#[derive(clap::Args)]
struct Params {
    #[arg(long, value_enum)]
    family: Family,
    /// Block sizes, e.g. `1,2`; for qmorris only the total counts.
    #[arg(long)]
    shape: Option<Shape>,
    #[arg(long, value_delimiter = ',')]
    a: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    b: usize,
    #[arg(long, default_value_t = 0)]
    c: usize,
    /// Row length for kadell.
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// Target exponents for kadell, one per variable.
    #[arg(long, value_delimiter = ',')]
    v: Vec<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Constant term of a product.
    Ct {
        #[command(flatten)]
        p: Params,
        #[arg(long, value_enum, default_value = "brute")]
        method: Method,
    },
    /// Closed form or recursion value for the same parameters as `ct`.
    Rhs {
        #[command(flatten)]
        p: Params,
    },
    /// Run a named suite and write its JSON report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_seconds: Option<f64>,
        /// Write `elapsed_ms: 0` so reports are byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
        #[arg(long)]
        shape: Option<Shape>,
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<usize>>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
    },
    /// Merge the JSON reports in a directory into one summary.
    Report {
        dir: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

type CliResult<T> = Result<T, String>;

fn shape(p: &Params) -> CliResult<Shape> {
    p.shape.clone().ok_or_else(|| "--shape is required for this family".into())
}

fn single_a(p: &Params) -> CliResult<usize> {
    match p.a.as_slice() {
        [] => Ok(0),
        [a] => Ok(*a),
        _ => Err("--a takes a single value for this family".into()),
    }
}

fn kadell_target(p: &Params) -> CliResult<ExpVec> {
    if p.v.len() != p.a.len() || p.v.iter().sum::<usize>() != p.r {
        return Err("--v needs one entry per --a and must sum to --r".into());
    }
    Ok(ExpVec::from_slice(&p.v.iter().map(|&x| x as i32).collect::<Vec<_>>()))
}

fn ct(p: &Params, method: Method) -> CliResult<QFrac> {
    let s = |e: qct_core::Error| e.to_string();
    if let Method::Gx = method {
        let Family::Bf = p.family else { return Err("--method gx supports --family bf only".into()) };
        return bf_via_pipeline(&shape(p)?, single_a(p)?, p.b, p.c).map_err(s);
    }
    let fp = match p.family {
        Family::Qdyson => {
            if p.a.is_empty() {
                return Err("--a is required for qdyson".into());
            }
            qdyson_factors(&p.a)
        }
        Family::Qmorris => qmorris_factors(shape(p)?.n(), single_a(p)?, p.b, p.c).map_err(s)?,
        Family::Bf => bf_factors(&shape(p)?, single_a(p)?, p.b, p.c),
        Family::Kadell => {
            let target = kadell_target(p)?;
            let h = kadell_h::<QLaurent>(p.r, &p.a).map_err(s)?;
            return Ok(kadell_factors(&p.a).coeff(Some(&h), &target).map_err(s)?.into());
        }
    };
    Ok(fp.ct::<QLaurent>().map_err(s)?.into())
}

fn rhs(p: &Params) -> CliResult<QFrac> {
    let s = |e: qct_core::Error| e.to_string();
    match p.family {
        Family::Qdyson => Ok(qdyson_rhs(&p.a)),
        Family::Qmorris => qmorris_rhs(shape(p)?.n(), single_a(p)?, p.b, p.c).map_err(s),
        Family::Bf => bf_rhs(&BFParams::new(shape(p)?, single_a(p)?, p.b, p.c)).map_err(s),
        Family::Kadell => {
            kadell_target(p)?;
            kadell_rhs(&p.v, p.r, &p.a).map_err(s)
        }
    }
}

fn write_or_print(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn verify(suite: &str, out: Option<&Path>, opts: &SuiteOptions) -> CliResult<bool> {
    let report = run_suite(suite, opts).ok_or_else(|| format!("unknown suite {suite}; known: {}", SUITES.join(", ")))?;
    let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
    write_or_print(out, &json)?;
    let failed = report.failures().count();
    eprintln!(
        "{suite}: {} cases, {failed} failed, {} skipped, {:?} mode",
        report.cases.len(),
        report.skipped.len(),
        report.mode
    );
    for f in report.failures().take(3) {
        eprintln!("  {}: {}", f.params, f.witness.as_deref().unwrap_or(""));
    }
    Ok(failed == 0)
}

fn report(dir: &Path, out: Option<&Path>) -> CliResult<bool> {
    let entries = fs::read_dir(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut reports = Vec::new();
    for p in &paths {
        let text = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
        // skip earlier summaries written into the same directory
        if let Ok(r) = serde_json::from_str::<SuiteReport>(&text) {
            reports.push(r);
        }
    }
    let summary = summarize(&reports);
    for row in &summary.suites {
        eprintln!(
            "{:<16} {:<46} {:>5} cases {:>3} failed  {}",
            row.suite,
            row.subject,
            row.cases,
            row.failed,
            if row.green { "green" } else { "RED" }
        );
        if let Some(w) = &row.witness {
            eprintln!("  {w}");
        }
    }
    let json = serde_json::to_string_pretty(&summary).map_err(|e| e.to_string())?;
    write_or_print(out, &json)?;
    Ok(summary.green)
}

fn init_threads() {
    if let Some(n) = std::env::var("QCT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.cmd {
        Cmd::Ct { p, method } => {
            println!("{}", ct(&p, method)?);
            Ok(true)
        }
        Cmd::Rhs { p } => {
            println!("{}", rhs(&p)?);
            Ok(true)
        }
        Cmd::Verify { suite, out, seed, max_seconds, no_timing, shape, a, b, c } => {
            let opts = SuiteOptions { max_seconds, seed, shape, a, b, c, no_timing };
            verify(&suite, out.as_deref(), &opts)
        }
        Cmd::Report { dir, out } => report(&dir, out.as_deref()),
    }
}

fn main() -> ExitCode {
    init_threads();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
