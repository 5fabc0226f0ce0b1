use clap::{Args, Parser, Subcommand, ValueEnum};
use ricci3::exact::Q;
use ricci3::families::Family;
use ricci3_cli::commands::{cmd_custom, cmd_family, cmd_sweep, cmd_verify_paper, Format};
use ricci3_cli::document::parse_rational;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact-arithmetic curvature and algebraic Ricci soliton computations for
/// three-dimensional Lorentzian Lie algebras in a pseudo-orthonormal frame
/// (e3 timelike).
#[derive(Parser)]
#[command(name = "ricci3", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Args)]
struct ParamArgs {
    /// Rational, e.g. 2 or -3/2
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    alpha: Option<Q>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    beta: Option<Q>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    gamma: Option<Q>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    delta: Option<Q>,
    /// +1 or -1 (g4 only)
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    eta: Option<Q>,
}

impl ParamArgs {
    fn collect(&self) -> BTreeMap<String, Q> {
        let mut map = BTreeMap::new();
        for (name, value) in [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
            ("delta", &self.delta),
            ("eta", &self.eta),
        ] {
            if let Some(v) = value {
                map.insert(name.to_string(), v.clone());
            }
        }
        map
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the pipeline on a member of one of the seven families g1..g7.
    Family {
        /// g1..g7; unspecified parameters default to 0 (eta to +1)
        family: Family,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        /// Also emit the flow factor exp(t/2 D) at this rational t
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        flow: Option<Q>,
    },
    /// Run the pipeline on an algebra document (JSON).
    Custom {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        flow: Option<Q>,
    },
    /// Sweep a parameter grid and write one CSV row per point.
    Sweep {
        #[arg(long)]
        family: Family,
        /// e.g. alpha=1:1:1,beta=-1:1:3 (rationals allowed as bounds)
        #[arg(long)]
        grid: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Reproduce the published tables and theorems; exits 3 on any failure.
    VerifyPaper,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, ricci3_cli::CliError> {
    match cli.command {
        Command::Family {
            family,
            params,
            format,
            flow,
        } => {
            let fmt = match format {
                OutputFormat::Json => Format::Json,
                OutputFormat::Text => Format::Text,
            };
            let (_, rendered) = cmd_family(family, &params.collect(), fmt, flow.as_ref())?;
            print!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Custom {
            input,
            format,
            flow,
        } => {
            let fmt = match format {
                OutputFormat::Json => Format::Json,
                OutputFormat::Text => Format::Text,
            };
            let (_, rendered) = cmd_custom(&input, fmt, flow.as_ref())?;
            print!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { family, grid, out } => {
            let rows = cmd_sweep(family, &grid, &out)?;
            println!("wrote {rows} rows to {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper => {
            let (text, passed) = cmd_verify_paper();
            print!("{text}");
            if passed {
                println!("verify-paper: all checks passed");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("verify-paper: FAILURES above");
                Ok(ExitCode::from(3))
            }
        }
    }
}
