use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fuzzadapt_cli::table::parse_vector;
use fuzzadapt_cli::{run_job, BamSide, CliError, FamDirection, JobConfig};
use fuzzadapt_core::{BamSignal, ModelKind, Side, SignalKind, UpdateMode};

/// Fuzzy model workbench: CETD matrices, FRM hidden patterns, BAM and FAM
/// inference, and transforms between model kinds.
#[derive(Parser)]
#[command(name = "fuzzadapt", version)]
struct Cli {
    /// Directory for the report, tables and charts. Without it the report
    /// goes to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Raw table to ATD, RTD and CETD matrices with row-sum charts.
    Cetd {
        /// CSV/TSV with a `label,divisor,...` header.
        #[arg(long)]
        table: PathBuf,
        /// Comma-separated parameters in [0, 1].
        #[arg(long, default_value = "0.5,0.2,1")]
        alphas: String,
    },
    /// Hidden pattern of a fuzzy relational map.
    Frm {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long, value_enum, default_value = "domain")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "binary")]
        policy: FrmPolicy,
        /// Which coordinates stay switched on while iterating.
        #[arg(long, value_enum, default_value = "input")]
        update: UpdateArg,
    },
    /// Combined map of several experts, optionally with a hidden pattern.
    Cfrm {
        #[arg(long = "expert", required = true)]
        experts: Vec<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        input: Option<String>,
        #[arg(long, value_enum, default_value = "domain")]
        side: SideArg,
    },
    /// Run a bidirectional associative memory to a stable pair.
    Bam {
        #[arg(long)]
        model: PathBuf,
        /// Activation on the chosen field.
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long, value_enum, default_value = "x")]
        side: BamSideArg,
        /// Weight scale t; defaults to the largest absolute entry.
        #[arg(long)]
        scale: Option<i64>,
        #[arg(long, value_enum, default_value = "binary")]
        policy: BamPolicy,
        /// Signal of the receiving field consulted on threshold ties.
        #[arg(long, allow_hyphen_values = true)]
        prev: Option<String>,
    },
    /// Max-min inference with a fuzzy relation.
    Fam {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, value_enum, default_value = "backward")]
        direction: DirectionArg,
        #[arg(long)]
        fit: String,
        /// Output positions for centroid defuzzification.
        #[arg(long, allow_hyphen_values = true)]
        support: Option<String>,
    },
    /// Transform a model of one kind into another.
    Transform {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Source model; repeat for several FRM experts.
        #[arg(long = "model", required = true)]
        models: Vec<PathBuf>,
        #[arg(long)]
        alphas: Option<String>,
        #[arg(long)]
        scale: Option<i64>,
        #[arg(long)]
        c: Option<f64>,
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Classify a set of model kinds by the transforms between them.
    Classify {
        /// One `FROM,TO` edge per line.
        #[arg(long)]
        registry: PathBuf,
        /// Kinds to classify; defaults to every kind in the registry.
        #[arg(long)]
        kinds: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Domain,
    Range,
}

#[derive(Clone, Copy, ValueEnum)]
enum FrmPolicy {
    Binary,
    Ternary,
}

#[derive(Clone, Copy, ValueEnum)]
enum UpdateArg {
    Input,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum BamSideArg {
    X,
    Y,
}

#[derive(Clone, Copy, ValueEnum)]
enum BamPolicy {
    Binary,
    Bipolar,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Forward,
    Backward,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Domain => Side::Domain,
            SideArg::Range => Side::Range,
        }
    }
}

fn kind(s: &str) -> Result<ModelKind, CliError> {
    s.parse().map_err(|e: fuzzadapt_core::Error| CliError::input(e.to_string()))
}

fn config(cmd: Command) -> Result<JobConfig, CliError> {
    Ok(match cmd {
        Command::Cetd { table, alphas } => JobConfig::Cetd {
            table,
            alphas: parse_vector(&alphas, "--alphas")?,
        },
        Command::Frm {
            model,
            input,
            side,
            policy,
            update,
        } => JobConfig::Frm {
            model,
            input: parse_vector(&input, "--input")?,
            side: side.into(),
            signal: match policy {
                FrmPolicy::Binary => SignalKind::BinaryStrict,
                FrmPolicy::Ternary => SignalKind::Ternary,
            },
            update: match update {
                UpdateArg::Input => UpdateMode::InputSide,
                UpdateArg::Both => UpdateMode::BothSides,
            },
        },
        Command::Cfrm { experts, input, side } => JobConfig::Cfrm {
            experts,
            input: input.map(|s| parse_vector(&s, "--input")).transpose()?,
            side: side.into(),
        },
        Command::Bam {
            model,
            input,
            side,
            scale,
            policy,
            prev,
        } => JobConfig::Bam {
            model,
            input: parse_vector(&input, "--input")?,
            side: match side {
                BamSideArg::X => BamSide::X,
                BamSideArg::Y => BamSide::Y,
            },
            scale,
            signal: match policy {
                BamPolicy::Binary => BamSignal::Binary,
                BamPolicy::Bipolar => BamSignal::Bipolar,
            },
            prev: prev.map(|s| parse_vector(&s, "--prev")).transpose()?,
        },
        Command::Fam {
            model,
            direction,
            fit,
            support,
        } => JobConfig::Fam {
            model,
            direction: match direction {
                DirectionArg::Forward => FamDirection::Forward,
                DirectionArg::Backward => FamDirection::Backward,
            },
            fit: parse_vector(&fit, "--fit")?,
            support: support.map(|s| parse_vector(&s, "--support")).transpose()?,
        },
        Command::Transform {
            from,
            to,
            models,
            alphas,
            scale,
            c,
            eps,
        } => JobConfig::Transform {
            from: kind(&from)?,
            to: kind(&to)?,
            models,
            alphas: alphas.map(|s| parse_vector(&s, "--alphas")).transpose()?,
            scale,
            c,
            eps,
        },
        Command::Classify { registry, kinds } => JobConfig::Classify {
            registry,
            kinds: kinds.map(|s| s.split(',').map(kind).collect::<Result<Vec<_>, _>>()).transpose()?,
        },
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    let job = config(cli.command)?;
    let output = run_job(&job)?;
    match cli.out {
        Some(dir) => output.write_to(&dir),
        None => {
            print!("{}", output.report());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(t) => t,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
