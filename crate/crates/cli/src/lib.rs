//! Command-line front end for `bellcorr`.
//!
//! Every command renders its whole output into a string before anything is
//! written, so identical arguments give byte-identical output regardless of
//! how many threads evaluated the cells.

pub mod format;

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use bellcorr::channels::{evolve_coefficients, ChannelKind};
use bellcorr::correlations::{record_analytic, ExtremizeOptions};
use bellcorr::dynamics::{classify_regime, operational_discord_checked, surface, sweep, PGrid, SurfaceGrid};
use bellcorr::verify::{self, VerifyConfig};
use bellcorr::{BellVector, Error as CoreError, Execution};

use format::{join, opt, sig9};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNPHYSICAL: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "bellcorr",
    version,
    about = "Classical and quantum correlations of Bell-diagonal states under flip channels"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Correlations at a single parametrized time
    Point(PointArgs),
    /// Correlation trajectory over a p grid
    Sweep(SweepArgs),
    /// Sudden-change time over a grid of the two damped coefficients
    Surface(SurfaceArgs),
    /// Randomized closed-form vs. numeric extremization check
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Write to this file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Evaluate on the calling thread only
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    /// Coefficients `c1,c2,c3`
    #[arg(long, allow_hyphen_values = true)]
    pub state: String,
    #[arg(long, value_parser = parse_channel)]
    pub channel: ChannelKind,
    /// Parametrized time in [0, 1]
    #[arg(long, default_value_t = 0.0)]
    pub p: f64,
    /// Optimizer grid resolution for the operational-measure check
    #[arg(long, default_value_t = 256)]
    pub grid_n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub state: String,
    #[arg(long, value_parser = parse_channel)]
    pub channel: ChannelKind,
    /// `start:stop:step`
    #[arg(long, default_value = "0:1:0.001", value_parser = parse_range)]
    pub p_range: (f64, f64, f64),
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    #[arg(long, value_parser = parse_channel)]
    pub channel: ChannelKind,
    /// Value of the coefficient the channel preserves
    #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
    pub fixed: f64,
    /// `start:stop:step` for both scanned coefficients
    #[arg(long, default_value = "-1:1:0.01", value_parser = parse_range, allow_hyphen_values = true)]
    pub c_range: (f64, f64, f64),
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 256)]
    pub grid_n: usize,
    #[arg(long, default_value_t = verify::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    /// Harness self-test: evaluate the closed form on the smallest
    /// coefficient instead of the largest.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_channel(s: &str) -> Result<ChannelKind, String> {
    s.parse().map_err(|e: CoreError| e.to_string())
}

fn parse_range(s: &str) -> Result<(f64, f64, f64), String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected start:stop:step, got `{s}`"));
    }
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("`{t}` is not a number"));
    Ok((num(parts[0])?, num(parts[1])?, num(parts[2])?))
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("unphysical input: {0}")]
    Unphysical(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Unphysical(_) => EXIT_UNPHYSICAL,
            _ => EXIT_USAGE,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NotAState { .. } | CoreError::InvalidState(_) | CoreError::NotBellDiagonal { .. } => {
                CliError::Unphysical(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Rendered output plus the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
}

fn exec(output: &OutputArgs) -> Execution {
    if output.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

fn parse_state(s: &str) -> Result<BellVector, CliError> {
    s.parse::<BellVector>().map_err(|e| match e {
        CoreError::NotAState { .. } => CliError::Unphysical(format!("state {s}: {e}")),
        other => CliError::Usage(format!("--state: {other}")),
    })
}

/// Run a parsed command and write its output to `--out` or return it for
/// standard output.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let (outcome, out) = match &cli.command {
        Command::Point(a) => (cmd_point(a)?, &a.output.out),
        Command::Sweep(a) => (cmd_sweep(a)?, &a.output.out),
        Command::Surface(a) => (cmd_surface(a)?, &a.output.out),
        Command::Verify(a) => (cmd_verify(a)?, &a.output.out),
    };
    match out {
        Some(path) => {
            fs::write(path, &outcome.text)?;
            Ok(Outcome { text: String::new(), exit_code: outcome.exit_code })
        }
        None => Ok(outcome),
    }
}

fn json_text(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn cmd_point(a: &PointArgs) -> Result<Outcome, CliError> {
    let state = parse_state(&a.state)?;
    if !(0.0..=1.0).contains(&a.p) {
        return Err(CliError::Usage(format!("--p {} outside [0, 1]", a.p)));
    }
    let record = record_analytic(&evolve_coefficients(&state, a.channel, a.p)?, a.p)?;
    let regime = classify_regime(&state, a.channel);
    let opts = ExtremizeOptions { grid_n: a.grid_n, exec: exec(&a.output), ..Default::default() };
    let check = operational_discord_checked(&state, &opts)?;
    let op = check.measure;

    let text = match a.output.format {
        OutputFormat::Csv => {
            let mut s = format!("# state={state}\n# channel={}\n", a.channel);
            s.push_str("p,C,Q,I,chi,branch,regime,p_sc,op_channel,op_C,op_Q,op_delta\n");
            s.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                sig9(record.p),
                sig9(record.classical),
                sig9(record.quantum),
                sig9(record.mutual),
                sig9(record.chi),
                record.branch,
                regime.regime,
                opt(regime.p_sc),
                op.channel_used,
                sig9(op.classical),
                sig9(op.quantum),
                sig9(check.discrepancy),
            ));
            if op.tie_broken {
                s.push_str("# operational channel chosen by tie-break 3 > 1 > 2\n");
            }
            s
        }
        OutputFormat::Json => json_text(&json!({
            "state": state,
            "channel": a.channel,
            "record": record,
            "regime": regime,
            "operational": op,
            "operational_check": {
                "numeric_C": check.numeric_classical,
                "theta": check.numeric_basis.theta,
                "phi": check.numeric_basis.phi,
                "delta": check.discrepancy,
                "commutes": check.commutes,
            },
        })),
    };
    Ok(Outcome { text, exit_code: EXIT_OK })
}

pub fn cmd_sweep(a: &SweepArgs) -> Result<Outcome, CliError> {
    let state = parse_state(&a.state)?;
    let (start, stop, step) = a.p_range;
    let grid = PGrid::new(start, stop, step).map_err(|e| CliError::Usage(format!("--p-range: {e}")))?;
    let result = sweep(&state, a.channel, &grid.points(), exec(&a.output))?;

    let text = match a.output.format {
        OutputFormat::Csv => {
            let mut s = format!("# state={state}\n# channel={}\n# regime={}\n", a.channel, result.regime);
            s.push_str("p,C,Q,I,chi,branch\n");
            for r in &result.samples {
                s.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    sig9(r.p),
                    sig9(r.classical),
                    sig9(r.quantum),
                    sig9(r.mutual),
                    sig9(r.chi),
                    r.branch
                ));
            }
            s.push_str(&format!("# crossings={}\n", join(&result.crossings)));
            s.push_str(&format!("# p_sc={}\n", opt(result.p_sc)));
            s.push_str(&format!("# p_sc_detected={}\n", opt(result.p_sc_detected)));
            s
        }
        OutputFormat::Json => json_text(&serde_json::to_value(&result).expect("serializable")),
    };
    Ok(Outcome { text, exit_code: EXIT_OK })
}

pub fn cmd_surface(a: &SurfaceArgs) -> Result<Outcome, CliError> {
    let (start, stop, step) = a.c_range;
    let grid = SurfaceGrid { start, stop, step };
    let s = surface(a.channel, a.fixed, &grid, exec(&a.output))?;

    let text = match a.output.format {
        OutputFormat::Csv => {
            let (u, v) = s.scanned_axes;
            let mut out = format!("# channel={}\n# c{}={}\n", s.channel, s.fixed_axis, sig9(s.fixed_value));
            out.push_str(&format!("c{u},c{v},p_sc,flag\n"));
            for cell in &s.cells {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    sig9(cell.u),
                    sig9(cell.v),
                    cell.p_sc.map_or_else(|| "nan".to_string(), sig9),
                    cell.flag.label()
                ));
            }
            out
        }
        OutputFormat::Json => json_text(&serde_json::to_value(&s).expect("serializable")),
    };
    Ok(Outcome { text, exit_code: EXIT_OK })
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let config = VerifyConfig {
        samples: a.samples,
        seed: a.seed,
        tolerance: a.tolerance,
        extremize: ExtremizeOptions { grid_n: a.grid_n, exec: Execution::Sequential, ..Default::default() },
        exec: exec(&a.output),
    };
    let report = if a.inject_fault {
        verify::run_with(&config, |e| {
            let chi = e.as_array().iter().map(|x| x.abs()).fold(f64::INFINITY, f64::min);
            let c = bellcorr::correlations::classical_from_chi(chi);
            Ok((c, bellcorr::correlations::mutual_information_analytic(e)? - c))
        })?
    } else {
        verify::run(&config)?
    };
    let exit_code = if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };

    let text = match a.output.format {
        OutputFormat::Csv => {
            let mut s = format!(
                "# samples={}\n# seed={}\n# evaluations={}\n# tolerance={}\n# max_delta_C={}\n# max_delta_Q={}\n# status={}\n",
                report.samples,
                report.seed,
                report.evaluations,
                sig9(report.tolerance),
                sig9(report.max_delta_c),
                sig9(report.max_delta_q),
                if report.passed() { "pass" } else { "fail" },
            );
            s.push_str("c1,c2,c3,channel,p,delta_C,delta_Q\n");
            for f in &report.failures {
                s.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    sig9(f.state.c1),
                    sig9(f.state.c2),
                    sig9(f.state.c3),
                    f.channel,
                    sig9(f.p),
                    sig9(f.delta_c),
                    sig9(f.delta_q)
                ));
            }
            s
        }
        OutputFormat::Json => json_text(&serde_json::to_value(&report).expect("serializable")),
    };
    Ok(Outcome { text, exit_code })
}
