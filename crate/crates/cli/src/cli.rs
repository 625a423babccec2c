use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pillai_core::pillai::{EquationForm, FamilyWindows};
use pillai_core::special_eqs::EquationTag;

use crate::campaigns::{self, BoundParams, ScanParams, SolveParams, SpecialParams, TablesParams, Theorem4Params};
use crate::config;
use crate::error::CliError;
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    General,
    Difference,
    AbsDifference,
}

impl From<FormArg> for EquationForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::General => EquationForm::General,
            FormArg::Difference => EquationForm::Difference,
            FormArg::AbsDifference => EquationForm::AbsDifference,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "pillai-verify", version, about = "Solve and verify exponential Diophantine equations")]
#[command(args_override_self = true)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Worker threads for scans and table runs.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=1024))]
    pub workers: u32,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Flat `key = value` file of default flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate the solutions of one instance.
    Solve(SolveArgs),
    /// Certified scan over prime pairs and right-hand sides.
    Scan(ScanArgs),
    /// Run an auxiliary-equation solver against its expected list.
    Special(SpecialArgs),
    /// Print the exponent-bound certificate for a^x - b^y = +-c.
    Bound(BoundArgs),
    /// Exponent check for x^2 + C = y^n.
    Theorem4(Theorem4Args),
    /// Check the exceptional-triple table and the Fermat/Mersenne families.
    VerifyTables(TablesArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    a: u64,
    #[arg(long)]
    b: u64,
    #[arg(long)]
    c: u64,
    #[arg(long, default_value_t = 1)]
    r: u64,
    #[arg(long, default_value_t = 1)]
    s: u64,
    #[arg(long, value_enum, default_value = "general")]
    form: FormArg,
    /// With --y-max: bounded mode, complete only inside the window.
    #[arg(long)]
    x_max: Option<u32>,
    #[arg(long)]
    y_max: Option<u32>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Largest prime base.
    #[arg(long, default_value_t = 30)]
    primes: u64,
    /// Largest right-hand side.
    #[arg(long, default_value_t = 200)]
    c: u64,
    #[arg(long, default_value_t = 3)]
    threshold: usize,
    #[arg(long, value_enum, default_value = "general")]
    form: FormArg,
}

#[derive(Debug, Args)]
pub struct SpecialArgs {
    /// One of L2..L7.
    #[arg(value_parser = parse_tag)]
    tag: EquationTag,
    #[arg(long)]
    r_max: Option<u32>,
    /// A single odd prime (L3, L5).
    #[arg(long)]
    p: Option<u64>,
    /// All odd primes up to this (L3, L5; default 97).
    #[arg(long)]
    p_max: Option<u64>,
    /// L2 window on D (default 100).
    #[arg(long)]
    d_max: Option<u64>,
    /// L4 window on w (default 60).
    #[arg(long)]
    w_max: Option<u64>,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long)]
    a: u64,
    #[arg(long)]
    b: u64,
    #[arg(long)]
    c: u64,
}

#[derive(Debug, Args)]
pub struct Theorem4Args {
    #[arg(long, conflicts_with = "c_range", required_unless_present = "c_range")]
    c: Option<u64>,
    /// Inclusive range `A..B`; odd values are skipped.
    #[arg(long, value_parser = parse_range)]
    c_range: Option<(u64, u64)>,
    #[arg(long, default_value_t = 1000)]
    x_max: u64,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(long, default_value_t = 65537)]
    fermat_max: u64,
    #[arg(long, default_value_t = 8191)]
    mersenne_max: u64,
    #[arg(long, default_value_t = 10)]
    n_max: u32,
    #[arg(long, default_value_t = 10)]
    t_max: u32,
    /// Alternative expected-table fixture (JSON).
    #[arg(long)]
    table: Option<PathBuf>,
}

fn parse_tag(s: &str) -> Result<EquationTag, String> {
    s.parse().map_err(|e: pillai_core::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s.split_once("..").ok_or("expected A..B")?;
    let lo: u64 = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi: u64 = hi.trim().trim_start_matches('=').parse().map_err(|e| format!("{e}"))?;
    if lo == 0 || lo > hi {
        return Err("need 1 <= A <= B".into());
    }
    Ok((lo, hi))
}

/// Result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Report>,
}

impl Outcome {
    fn error(e: CliError) -> Self {
        Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n"), report: None }
    }
}

const SUBCOMMANDS: [&str; 6] = ["solve", "scan", "special", "bound", "theorem4", "verify-tables"];

fn subcommand_index(args: &[OsString]) -> Option<usize> {
    let mut i = 1;
    while i < args.len() {
        let a = args[i].to_string_lossy();
        if ["--format", "--workers", "--out", "--config"].contains(&a.as_ref()) {
            i += 2;
            continue;
        }
        if SUBCOMMANDS.contains(&a.as_ref()) {
            return Some(i);
        }
        i += 1;
    }
    None
}

fn config_path(args: &[OsString]) -> Option<PathBuf> {
    let mut it = args.iter().skip(1);
    let mut found = None;
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            found = it.next().map(PathBuf::from);
        } else if let Some(rest) = s.strip_prefix("--config=") {
            found = Some(PathBuf::from(rest));
        }
    }
    found
}

fn with_config(args: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let Some(path) = config_path(&args) else { return Ok(args) };
    let text = std::fs::read_to_string(&path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let entries = config::parse(&text)?;
    Ok(config::splice(&args, &entries, subcommand_index(&args)))
}

fn campaign(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Solve(a) => campaigns::solve(&SolveParams {
            a: a.a,
            b: a.b,
            c: a.c,
            r: a.r,
            s: a.s,
            form: a.form.into(),
            x_max: a.x_max,
            y_max: a.y_max,
        }),
        Command::Scan(a) => campaigns::scan(&ScanParams {
            primes: a.primes,
            c: a.c,
            threshold: a.threshold,
            form: a.form.into(),
        }),
        Command::Special(a) => {
            campaigns::special(&SpecialParams::resolve(a.tag, a.r_max, a.p, a.p_max, a.d_max, a.w_max)?)
        }
        Command::Bound(a) => campaigns::bound(&BoundParams { a: a.a, b: a.b, c: a.c }),
        Command::Theorem4(a) => {
            let (c_from, c_to) = a.c_range.unwrap_or_else(|| {
                let c = a.c.expect("clap requires --c or --c-range");
                (c, c)
            });
            campaigns::theorem4(&Theorem4Params { c_from, c_to, x_max: a.x_max })
        }
        Command::VerifyTables(a) => campaigns::verify_tables(&TablesParams {
            windows: FamilyWindows {
                fermat_max: a.fermat_max,
                mersenne_max: a.mersenne_max,
                n_range: (2, a.n_max),
                t_range: (2, a.t_max),
            },
            table: a.table.as_ref().map(|p| p.display().to_string()),
        }),
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    }
}

/// Parses `args` (including the program name), runs the campaign and renders it.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let raw: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let args = match with_config(raw) {
        Ok(a) => a,
        Err(e) => return Outcome::error(e),
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr, report: None };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.workers as usize).build() {
        Ok(p) => p,
        Err(e) => return Outcome::error(CliError::Io(e.to_string())),
    };
    let start = Instant::now();
    let mut report = match pool.install(|| campaign(&cli.command)) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    report.duration_ms = start.elapsed().as_millis() as u64;
    let rendered = render(&report, cli.format);
    let stdout = match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                return Outcome::error(CliError::Io(format!("{}: {e}", path.display())));
            }
            let verdict = if report.summary.pass { "PASS" } else { "FAIL" };
            format!("{verdict}: report written to {}\n", path.display())
        }
        None => rendered,
    };
    let code = if report.summary.pass { 0 } else { 1 };
    Outcome { code, stdout, stderr: String::new(), report: Some(report) }
}
