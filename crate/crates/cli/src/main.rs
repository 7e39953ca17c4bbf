use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use envelope_lab::arrangement::ResolutionData;
use envelope_lab::Error;
use envelope_lab_cli::commands;
use envelope_lab_cli::{Format, Report, RunConfig};

/// Degree envelopes, geometric generating degrees and Hilbert-Burch data
/// for points in the projective plane over F_p.
#[derive(Parser)]
#[command(name = "envelope-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Prime modulus of the coefficient field.
    #[arg(long, global = true, env = "ENVELOPE_LAB_PRIME", default_value_t = 32003)]
    prime: u64,

    /// Seed of every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Trials per Monte-Carlo item.
    #[arg(long, global = true, default_value_t = 50)]
    trials: usize,

    /// Degree cap for Hilbert windows (detloci: the degree bound E).
    #[arg(long, global = true)]
    max_degree: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function, resolution data and envelope profile of a point file.
    Analyze { points: PathBuf },
    /// Write N general points as a point file (standard output if no path).
    SamplePoints { n: usize, path: Option<PathBuf> },
    /// Monte-Carlo check of the generic data of n general points.
    VerifyGeneric {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 30)]
        n_max: usize,
    },
    /// Monte-Carlo check of general Hilbert-Burch matrices, e.g. `a=3,3,4 b=5,5`.
    VerifyTheorem {
        #[arg(required = true, num_args = 1..)]
        data: Vec<String>,
    },
    /// Graded checks of the determinantal loci of the generic (k+1) x k matrix.
    Detloci {
        /// Matrix size; all of 1, 2, 3 when omitted.
        k: Option<usize>,
    },
    /// The six worked scenarios.
    Examples,
}

fn run(cli: &Cli) -> Result<Option<Report>, Error> {
    let cfg = RunConfig {
        prime: cli.prime,
        seed: cli.seed,
        trials: cli.trials,
        max_degree: cli.max_degree,
        format: cli.format,
    };
    envelope_lab::algebra::Field::new(cfg.prime)?;
    let io_err = |p: &PathBuf, e: std::io::Error| Error::InvalidArgument(format!("{}: {e}", p.display()));
    let report = match &cli.command {
        Command::Analyze { points } => {
            let text = std::fs::read_to_string(points).map_err(|e| io_err(points, e))?;
            commands::analyze(&cfg, &text)?
        }
        Command::SamplePoints { n, path } => {
            let (report, text) = commands::sample_points(&cfg, *n)?;
            match path {
                Some(p) => std::fs::write(p, text).map_err(|e| io_err(p, e))?,
                None => {
                    print!("{text}");
                    return Ok(None);
                }
            }
            report
        }
        Command::VerifyGeneric { n_min, n_max } => commands::verify_generic(&cfg, *n_min, *n_max)?,
        Command::VerifyTheorem { data } => {
            let r: ResolutionData = data.join(" ").parse()?;
            commands::verify_theorem(&cfg, &r)?
        }
        Command::Detloci { k } => {
            let ks = k.map_or_else(|| vec![1, 2, 3], |k| vec![k]);
            commands::detloci(&cfg, &ks)?
        }
        Command::Examples => commands::examples(&cfg)?,
    };
    Ok(Some(report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(report)) => {
            let text = report.render(cli.format);
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}
