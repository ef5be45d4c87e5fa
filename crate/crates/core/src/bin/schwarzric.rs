use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use schwarzric::report::{
    cmd_analyze, cmd_oracle, cmd_series_check, cmd_sweep, parse_exponent, AnalyzeOptions, InputError, InputSpec,
    Outcome, Render, SeriesOptions, SweepOptions, EXIT_INPUT,
};

#[derive(Parser)]
#[command(
    name = "schwarzric",
    version,
    about = "Exact analysis of Schwarzian equations S(y) + y'^2 R(y) = 0"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Triangle parameters "alpha,beta,gamma"; "inf" for a cusp, "p/q" for rationals.
    #[arg(long, conflicts_with = "expr")]
    triangle: Option<String>,
    /// Coefficient R as a rational expression, e.g. "1/(2*y^2*(y-1)^2)".
    #[arg(long)]
    expr: Option<String>,
    /// Variable name used in --expr.
    #[arg(long, default_value = "y")]
    var: String,
    /// Apply the Möbius change "a,b,c,d" to R first.
    #[arg(long)]
    moebius: Option<String>,
    #[arg(long)]
    json: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest auxiliary polynomial degree tried by the oracle.
    #[arg(long, default_value_t = 24)]
    degree_bound: usize,
}

impl Common {
    fn input(&self) -> Result<InputSpec, InputError> {
        InputSpec::from_flags(
            self.triangle.as_deref(),
            self.expr.as_deref(),
            &self.var,
            self.moebius.as_deref(),
        )
    }
}

#[derive(Subcommand)]
enum Command {
    /// Recognize R, decide Condition Ric and state the conclusion.
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Also search for rational Riccati solutions and cross-check.
        #[arg(long)]
        oracle: bool,
    },
    /// Decide every hyperbolic integer triple up to a bound.
    Sweep {
        #[arg(long)]
        bound: u32,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Print one line per triple.
        #[arg(long)]
        full: bool,
        /// Cross-check each triple with the rational-solution oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 24)]
        degree_bound: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Leading-order Puiseux analysis of the Riccati reduction in w = y'.
    SeriesCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        lambda0: String,
        /// Leading coefficient a0 as an expression; default: from the oracle.
        #[arg(long)]
        a0: Option<String>,
        #[arg(long, default_value = "-5", allow_hyphen_values = true)]
        truncation: String,
    },
    /// Rational solutions of the Riccati equation with the full search log.
    Oracle {
        #[command(flatten)]
        common: Common,
    },
}

fn emit<T: Render>(o: Outcome<T>, json: bool, out: Option<&PathBuf>) -> Result<i32, InputError> {
    let text = if json {
        o.report.render_json()
    } else {
        o.report.render_text()
    };
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| InputError {
            module: "cli",
            message: format!("{}: {e}", path.display()),
        })?,
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    Ok(o.exit_code)
}

fn run(cli: Cli) -> Result<i32, InputError> {
    match cli.command {
        Command::Analyze { common, oracle } => {
            let opts = AnalyzeOptions {
                oracle,
                degree_bound: common.degree_bound,
            };
            emit(cmd_analyze(&common.input()?, opts)?, common.json, common.out.as_ref())
        }
        Command::Sweep {
            bound,
            jobs,
            full,
            oracle,
            degree_bound,
            json,
            out,
        } => {
            let opts = SweepOptions {
                bound,
                jobs,
                full,
                cross_check: oracle,
                degree_bound,
            };
            emit(cmd_sweep(opts)?, json, out.as_ref())
        }
        Command::SeriesCheck {
            common,
            lambda0,
            a0,
            truncation,
        } => {
            let opts = SeriesOptions {
                lambda0: parse_exponent(&lambda0)?,
                a0,
                truncation: parse_exponent(&truncation)?,
                degree_bound: common.degree_bound,
            };
            emit(
                cmd_series_check(&common.input()?, &opts)?,
                common.json,
                common.out.as_ref(),
            )
        }
        Command::Oracle { common } => emit(
            cmd_oracle(&common.input()?, common.degree_bound)?,
            common.json,
            common.out.as_ref(),
        ),
    }
}

fn main() -> ExitCode {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    };
    ExitCode::from(code as u8)
}
