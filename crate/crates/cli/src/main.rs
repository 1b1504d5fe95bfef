use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nonint_core::exactalg::FieldSpec;
use nonint_cli::report::ReportDocument;
use nonint_cli::run::{exit_code, run_check, sweep, EXIT_INPUT_ERROR};
use nonint_cli::spec::{check_order, default_max_order, parse_config, Family, SystemSource, SystemSpec};
use nonint_cli::CliError;

/// Certify meromorphic nonintegrability of planar polynomial vector fields.
#[derive(Parser)]
#[command(name = "nonint", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the system described by a config file.
    Check {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Check the reduced fold-Hopf system.
    FoldHopf {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Check the reduced double-Hopf system in chart 1 or 2.
    DoubleHopf {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        chart: u8,
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        omega1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        omega2: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Run every point of the `[sweep.grid]` of a config file.
    Sweep {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    /// The field is Q(sqrt d).
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    d: i64,
}

#[derive(Args)]
struct Output {
    /// Highest order k to scan, in [2, 25].
    #[arg(long)]
    max_order: Option<usize>,
    /// Write the JSON report to this path (`-` for stdout).
    #[arg(long)]
    json: Option<PathBuf>,
    /// Record wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|err| CliError::Io { path: path.display().to_string(), err })
}

fn write_json(path: &PathBuf, json: &str) -> Result<(), CliError> {
    if path.as_os_str() == "-" {
        emit(&format!("{json}\n"));
        Ok(())
    } else {
        std::fs::write(path, format!("{json}\n"))
            .map_err(|err| CliError::Io { path: path.display().to_string(), err })
    }
}

fn builtin(
    family: Family,
    chart: u8,
    c: Common,
    extra: Vec<(&str, Option<String>)>,
    max_order: Option<usize>,
) -> Result<SystemSpec, CliError> {
    let mut params = BTreeMap::from([
        ("mu".to_string(), c.mu),
        ("nu".to_string(), c.nu),
        ("alpha".to_string(), c.alpha),
        ("s".to_string(), c.s),
    ]);
    for (k, v) in extra {
        if let Some(v) = v {
            params.insert(k.to_string(), v);
        }
    }
    let max_order = match max_order {
        Some(k) => check_order(k)?,
        None => default_max_order()?,
    };
    Ok(SystemSpec {
        field: FieldSpec::new(c.d)?,
        source: SystemSource::Builtin { family, chart, params },
        max_order,
    })
}

/// Writes to stdout; a closed pipe is not an input error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn summarize(doc: &ReportDocument) -> String {
    let mut out = match &doc.firing {
        Some(f) => format!("{}: criterion {} at k = {}\n", doc.status, f.criterion, f.k),
        None => match &doc.reason {
            Some(r) => format!("{} ({r})\n", doc.status),
            None => format!("{}\n", doc.status),
        },
    };
    for line in &doc.trace {
        out.push_str(&format!("  {line}\n"));
    }
    out
}

fn check(spec: SystemSpec, out: &Output) -> Result<i32, CliError> {
    let (doc, status) = run_check(&spec, out.timing)?;
    match &out.json {
        Some(p) if p.as_os_str() == "-" => write_json(p, &doc.to_json())?,
        Some(p) => {
            emit(&summarize(&doc));
            write_json(p, &doc.to_json())?;
        }
        None => emit(&summarize(&doc)),
    }
    Ok(exit_code(status))
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.cmd {
        Cmd::Check { file, out } => {
            let cfg = parse_config(&read(&file)?, out.max_order)?;
            check(cfg.spec, &out)
        }
        Cmd::FoldHopf { common, beta, omega, out } => {
            let spec = builtin(Family::FoldHopf, 1, common, vec![("beta", beta), ("omega", omega)], out.max_order)?;
            check(spec, &out)
        }
        Cmd::DoubleHopf { chart, common, beta, omega1, omega2, out } => {
            let extra = vec![("beta", Some(beta)), ("omega1", omega1), ("omega2", omega2)];
            let spec = builtin(Family::DoubleHopf, chart, common, extra, out.max_order)?;
            check(spec, &out)
        }
        Cmd::Sweep { file, out } => {
            let cfg = parse_config(&read(&file)?, out.max_order)?;
            let grid = cfg
                .grid
                .ok_or_else(|| CliError::Usage(format!("{}: no [sweep] section", file.display())))?;
            let rep = sweep(&cfg.spec, &grid)?;
            let json = serde_json::to_string_pretty(&rep).expect("sweep report serializes");
            match &out.json {
                Some(p) => write_json(p, &json)?,
                None => {
                    let mut out = format!("{} tuples, {} errors\n", rep.summary.tuples, rep.summary.errors);
                    for (k, n) in &rep.summary.counts {
                        out.push_str(&format!("  {n:>5}  {k}\n"));
                    }
                    if !rep.summary.disagreements.is_empty() {
                        out.push_str(&format!("  clause holds but not certified: {:?}\n", rep.summary.disagreements));
                    }
                    emit(&out);
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT_ERROR as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT_ERROR as u8)
        }
    }
}
