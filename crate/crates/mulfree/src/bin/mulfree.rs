//! Command-line front end: convergence studies over a degree grid, the named
//! consistency suite, and root tables for single realizations.
//!
//! Exit codes: 0 on success, 2 when parameters are rejected or a numeric
//! assertion fails (consistency checks, route cross-checks), 3 when the root
//! solver does not converge.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mulfree::experiments::{
    run_hermite_convergence, run_identity_suite, run_laguerre_convergence, solve_hermite_roots,
    solve_laguerre_roots, write_convergence_csv, write_moments_csv, write_rate_summary,
    write_roots_csv, write_trajectory_csv, ConvergenceReport, ExperimentError, HermiteStudy,
    IdentityCheck, LaguerreStudy, DEFAULT_MAX_SWEEPS,
};
use mulfree::limits::{mu_moments, nu_moments, LimitError};
use mulfree::ode::{hermite_moment_flow_trajectory, laguerre_limit_flow_trajectory, Degree};
use mulfree::roots::{RootError, RootSet};
use mulfree::scalar::{BigComplex, BigReal};

/// Parameters parse at this precision and round down to each working
/// precision, so one decimal literal denotes one number everywhere.
const PARAM_PARSE_BITS: u32 = 8192;

#[derive(Parser)]
#[command(
    name = "mulfree",
    version,
    about = "Multiplicative polynomial families, their root measures, and limit laws"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convergence study of the heat realization toward the multiplicative
    /// normal law.
    Hermite(HermiteArgs),
    /// Convergence study of the shift realization toward the multiplicative
    /// Poisson law.
    Laguerre(LaguerreArgs),
    /// Run the named consistency suite and report each check.
    Identities(IdentitiesArgs),
    /// Solve one realization and print its root table.
    Roots(RootsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct StudyArgs {
    /// Comma-separated degree grid.
    #[arg(long = "n-grid", value_delimiter = ',', default_values_t = vec![25usize, 50, 100, 200])]
    n_grid: Vec<usize>,

    /// Highest moment order to track.
    #[arg(long = "k-max", default_value_t = 3)]
    k_max: usize,

    /// Fixed working precision in bits; omitted means degree-dependent.
    #[arg(long = "precision-bits", env = "MULFREE_PRECISION_BITS")]
    precision_bits: Option<u32>,

    /// Grid steps of the exported limit-flow trajectory.
    #[arg(long, default_value_t = 256)]
    steps: usize,

    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,

    /// Output file; tables go to stdout when omitted. CSV output also writes
    /// sibling files with the limit moments and the limit-flow trajectory.
    #[arg(long)]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,

    /// Allow parameters outside the certified regimes.
    #[arg(long)]
    exploratory: bool,
}

#[derive(Args)]
struct HermiteArgs {
    /// Time parameter; real or complex, e.g. "1", "-0.5", "0.5+0.25i".
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    s: String,

    #[command(flatten)]
    study: StudyArgs,
}

#[derive(Args)]
struct LaguerreArgs {
    /// Real part of the degree-normalized shift.
    #[arg(long = "beta-re", default_value_t = 1.0, allow_negative_numbers = true)]
    beta_re: f64,

    /// Imaginary part of the degree-normalized shift.
    #[arg(long = "beta-im", default_value_t = 0.0, allow_negative_numbers = true)]
    beta_im: f64,

    /// Exponent density; the degree-n exponent is floor(gamma n).
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    gamma: f64,

    #[command(flatten)]
    study: StudyArgs,
}

#[derive(Args)]
struct IdentitiesArgs {
    /// Working precision of the suite.
    #[arg(long = "precision-bits", env = "MULFREE_PRECISION_BITS", default_value_t = 256)]
    precision_bits: u32,

    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,

    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RootsArgs {
    /// Degree of the realization.
    #[arg(long)]
    n: usize,

    /// Hermite time parameter; selects the heat realization.
    #[arg(long, conflicts_with_all = ["beta_re", "beta_im", "gamma"], allow_hyphen_values = true)]
    s: Option<String>,

    /// Real part of the Laguerre shift density; selects the shift
    /// realization together with --gamma.
    #[arg(long = "beta-re", requires = "gamma", allow_negative_numbers = true)]
    beta_re: Option<f64>,

    #[arg(long = "beta-im", requires = "beta_re", allow_negative_numbers = true)]
    beta_im: Option<f64>,

    /// Laguerre exponent density.
    #[arg(long, requires = "beta_re", allow_negative_numbers = true)]
    gamma: Option<f64>,

    #[arg(long = "precision-bits", env = "MULFREE_PRECISION_BITS")]
    precision_bits: Option<u32>,

    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,

    #[arg(long)]
    out: Option<PathBuf>,

    /// Allow parameters outside the certified regimes.
    #[arg(long)]
    exploratory: bool,
}

/// Failures carrying their process exit codes.
enum Failure {
    /// Rejected parameters or a failed numeric assertion.
    Numeric(String),
    /// The root solver ran out of sweeps.
    NonConvergence(String),
    Io(io::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Numeric(_) => 2,
            Failure::NonConvergence(_) => 3,
            Failure::Io(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Numeric(m) => m.clone(),
            Failure::NonConvergence(m) => m.clone(),
            Failure::Io(e) => format!("io error: {e}"),
        }
    }
}

impl From<ExperimentError> for Failure {
    fn from(err: ExperimentError) -> Self {
        match err {
            ExperimentError::Root(RootError::NonConvergence { .. }) => {
                Failure::NonConvergence(err.to_string())
            }
            ExperimentError::Io(e) => Failure::Io(e),
            other => Failure::Numeric(other.to_string()),
        }
    }
}

impl From<LimitError> for Failure {
    fn from(err: LimitError) -> Self {
        Failure::Numeric(err.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure::Io(err)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Hermite(args) => run_hermite(args),
        Command::Laguerre(args) => run_laguerre(args),
        Command::Identities(args) => run_identities(args),
        Command::Roots(args) => run_roots(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("mulfree: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

/// Parses a real or complex decimal literal: `a`, `bi`, `a+bi`, `a-bi`.
fn parse_complex(raw: &str) -> Result<BigComplex, Failure> {
    let trimmed: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    if trimmed.is_empty() {
        return Err(Failure::Numeric("empty complex literal".into()));
    }
    let reject = |part: &str| Failure::Numeric(format!("invalid complex literal {raw:?}: {part}"));
    let parse_real = |part: &str| -> Result<BigReal, Failure> {
        let normalized = match part {
            "" | "+" => "1",
            "-" => "-1",
            other => other,
        };
        BigReal::parse_decimal(normalized, PARAM_PARSE_BITS).map_err(|e| reject(&e.to_string()))
    };
    if let Some(body) = trimmed.strip_suffix(['i', 'I']) {
        // Split at the last top-level sign; signs directly after an exponent
        // marker belong to the exponent.
        let bytes = body.as_bytes();
        let mut split = None;
        for pos in (1..bytes.len()).rev() {
            let c = bytes[pos] as char;
            if (c == '+' || c == '-') && !matches!(bytes[pos - 1] as char, 'e' | 'E') {
                split = Some(pos);
                break;
            }
        }
        match split {
            Some(pos) => {
                let re = parse_real(&body[..pos])?;
                let im = parse_real(&body[pos..])?;
                Ok(BigComplex::new(re, im))
            }
            None => Ok(BigComplex::new(BigReal::zero(PARAM_PARSE_BITS), parse_real(body)?)),
        }
    } else {
        Ok(BigComplex::from_real(
            BigReal::parse_decimal(&trimmed, PARAM_PARSE_BITS).map_err(|e| reject(&e.to_string()))?,
        ))
    }
}

fn install_pool<T, F: FnOnce() -> T + Send>(jobs: usize, f: F) -> Result<T, Failure>
where
    T: Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Numeric(format!("cannot build worker pool: {e}")))?;
    Ok(pool.install(f))
}

fn with_output<F>(out: &Option<PathBuf>, f: F) -> Result<(), Failure>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            f(&mut file)?;
            file.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            f(&mut lock)?;
            lock.flush()?;
        }
    }
    Ok(())
}

fn sibling_path(out: &Path, suffix: &str) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}{suffix}"))
}

fn export_prec(study_precs: impl Iterator<Item = u32>) -> u32 {
    study_precs.max().unwrap_or(256).max(256)
}

/// Writes the study table (and, for CSV files, the limit-moment and
/// trajectory siblings), then the rate summary.
fn emit_study_output(
    args: &StudyArgs,
    report: &ConvergenceReport,
    limit_moments: &mulfree::moments::MomentSequence,
    trajectory: Option<(&str, Vec<(BigReal, Vec<BigComplex>)>)>,
) -> Result<(), Failure> {
    match args.format {
        OutputFormat::Json => {
            with_output(&args.out, |w| {
                serde_json::to_writer_pretty(&mut *w, report)?;
                writeln!(w)
            })?;
        }
        OutputFormat::Csv => {
            with_output(&args.out, |w| write_convergence_csv(w, report))?;
            if let Some(out) = &args.out {
                let moments_path = sibling_path(out, "_limit_moments.csv");
                let mut file = BufWriter::new(File::create(moments_path)?);
                write_moments_csv(&mut file, limit_moments)?;
                file.flush()?;
                if let Some((label, rows)) = &trajectory {
                    let trajectory_path = sibling_path(out, "_trajectory.csv");
                    let mut file = BufWriter::new(File::create(trajectory_path)?);
                    write_trajectory_csv(&mut file, label, rows)?;
                    file.flush()?;
                }
            }
        }
    }
    // The human summary goes to stdout when the table went to a file, and to
    // stderr when the table occupies stdout.
    if args.out.is_some() {
        let stdout = io::stdout();
        let mut lock = stdout.lock();
        write_rate_summary(&mut lock, report)?;
    } else {
        let stderr = io::stderr();
        let mut lock = stderr.lock();
        write_rate_summary(&mut lock, report)?;
    }
    Ok(())
}

fn run_hermite(args: HermiteArgs) -> Result<(), Failure> {
    let s = parse_complex(&args.s)?;
    let mut study = HermiteStudy::new(s.clone(), args.study.n_grid.clone(), args.study.k_max);
    study.precision_override = args.study.precision_bits;
    if study.is_exploratory() && !args.study.exploratory {
        return Err(Failure::Numeric(
            "complex time leaves the certified regimes; pass --exploratory to proceed".into(),
        ));
    }
    let report = install_pool(args.study.jobs, || run_hermite_convergence(&study))??;

    let prec = export_prec(args.study.n_grid.iter().map(|&n| study.precision_for(n)));
    let limit_moments = mu_moments(&s.with_prec(prec), args.study.k_max, prec)?;
    let trajectory = if s.is_real() {
        let rows = hermite_moment_flow_trajectory(
            Degree::Limit,
            args.study.k_max,
            &s.re().with_prec(prec),
            args.study.steps.max(1),
            prec,
        );
        Some(("s", rows))
    } else {
        None
    };
    emit_study_output(
        &args.study,
        &report,
        &limit_moments,
        trajectory.as_ref().map(|(l, r)| (*l, r.clone())),
    )
}

fn run_laguerre(args: LaguerreArgs) -> Result<(), Failure> {
    let beta = BigComplex::from_f64s(args.beta_re, args.beta_im, PARAM_PARSE_BITS);
    let gamma = BigReal::from_f64(args.gamma, PARAM_PARSE_BITS);
    let mut study =
        LaguerreStudy::new(beta.clone(), gamma.clone(), args.study.n_grid.clone(), args.study.k_max);
    study.precision_override = args.study.precision_bits;
    if study.is_exploratory() && !args.study.exploratory {
        return Err(Failure::Numeric(
            "the shift density leaves the certified regimes; pass --exploratory to proceed".into(),
        ));
    }
    let report = install_pool(args.study.jobs, || run_laguerre_convergence(&study))??;

    let prec = export_prec(args.study.n_grid.iter().map(|&n| study.precision_for(n)));
    let limit_moments = nu_moments(
        &beta.with_prec(prec),
        &gamma.with_prec(prec),
        args.study.k_max,
        prec,
    )?;
    let trajectory = {
        let rows = laguerre_limit_flow_trajectory(
            &beta.with_prec(prec),
            args.study.k_max,
            &gamma.with_prec(prec),
            args.study.steps.max(1),
            prec,
        )
        .map_err(|e| Failure::Numeric(e.to_string()))?;
        let rows: Vec<(BigReal, Vec<BigComplex>)> =
            rows.into_iter().map(|p| (p.gamma, p.f)).collect();
        Some(("gamma", rows))
    };
    emit_study_output(
        &args.study,
        &report,
        &limit_moments,
        trajectory.as_ref().map(|(l, r)| (*l, r.clone())),
    )
}

fn run_identities(args: IdentitiesArgs) -> Result<(), Failure> {
    let checks = run_identity_suite(args.precision_bits)?;
    match args.format {
        OutputFormat::Json => {
            with_output(&args.out, |w| {
                serde_json::to_writer_pretty(&mut *w, &checks)?;
                writeln!(w)
            })?;
        }
        OutputFormat::Csv => {
            with_output(&args.out, |w| {
                writeln!(w, "status,name,deviation,tolerance")?;
                for check in &checks {
                    writeln!(
                        w,
                        "{},{},{:e},{:e}",
                        if check.pass { "pass" } else { "fail" },
                        check.name,
                        check.deviation,
                        check.tolerance,
                    )?;
                }
                Ok(())
            })?;
        }
    }
    let failures: Vec<&IdentityCheck> = checks.iter().filter(|c| !c.pass).collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Numeric(format!(
            "{} of {} consistency checks failed",
            failures.len(),
            checks.len()
        )))
    }
}

fn run_roots(args: RootsArgs) -> Result<(), Failure> {
    if args.n == 0 {
        return Err(Failure::Numeric("the degree must be at least 1".into()));
    }
    let rs: RootSet = match (&args.s, args.beta_re) {
        (Some(raw), None) => {
            let s = parse_complex(raw)?;
            if !s.is_real() && !args.exploratory {
                return Err(Failure::Numeric(
                    "complex time leaves the certified regimes; pass --exploratory to proceed"
                        .into(),
                ));
            }
            solve_hermite_roots(args.n, &s, args.precision_bits, DEFAULT_MAX_SWEEPS)?
        }
        (None, Some(beta_re)) => {
            let beta = BigComplex::from_f64s(beta_re, args.beta_im.unwrap_or(0.0), PARAM_PARSE_BITS);
            let gamma = BigReal::from_f64(
                args.gamma.expect("clap enforces --gamma alongside --beta-re"),
                PARAM_PARSE_BITS,
            );
            let mut study = LaguerreStudy::new(beta, gamma, vec![args.n], 1);
            study.precision_override = args.precision_bits;
            if study.is_exploratory() && !args.exploratory {
                return Err(Failure::Numeric(
                    "the shift density leaves the certified regimes; pass --exploratory to proceed"
                        .into(),
                ));
            }
            solve_laguerre_roots(&study, args.n)?
        }
        _ => {
            return Err(Failure::Numeric(
                "pick one realization: --s for the heat family, --beta-re/--gamma for the shift family"
                    .into(),
            ));
        }
    };
    match args.format {
        OutputFormat::Csv => with_output(&args.out, |w| write_roots_csv(w, &rs)),
        OutputFormat::Json => with_output(&args.out, |w| {
            serde_json::to_writer_pretty(&mut *w, &rs)?;
            writeln!(w)
        }),
    }
}
