use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use segre::commands::{self, AlgorithmChoice, Report, ToricQuery};
use segre::error::{CliError, EXIT_CROSS_CHECK, EXIT_OK, EXIT_USAGE};
use segre_core::combinatorics::{Spec, DEFAULT_BUDGET};

#[derive(Parser, Debug)]
#[command(name = "segre", version, about = "Simon Newcomb numbers and Segre embeddings, exactly")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest enumeration the brute-force and exhaustive commands may attempt.
    #[arg(long, global = true, env = "SEGRE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum What {
    Facets,
    Groebner,
    Primes,
    PartitionCheck,
}

impl From<What> for ToricQuery {
    fn from(w: What) -> Self {
        match w {
            What::Facets => ToricQuery::Facets,
            What::Groebner => ToricQuery::Groebner,
            What::Primes => ToricQuery::Primes,
            What::PartitionCheck => ToricQuery::PartitionCheck,
        }
    }
}

fn spec_arg(s: &str) -> Result<Spec, String> {
    commands::parse_spec(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The h-vector A([b], 0..) by one algorithm, or all five cross-checked.
    Newcomb {
        #[arg(long, value_parser = spec_arg)]
        spec: Spec,
        /// brute, dillon-roselle, recurrence, positive, convolution or all.
        #[arg(long, default_value = "all")]
        algorithm: AlgorithmChoice,
    },
    /// The Hilbert function H(0..=upto).
    Hilbert {
        #[arg(long, value_parser = spec_arg)]
        spec: Spec,
        #[arg(long)]
        upto: u64,
    },
    /// The Hilbert series and its invariants.
    Series {
        #[arg(long, value_parser = spec_arg)]
        spec: Spec,
    },
    /// Facets, Groebner basis, minimal primes, or the interval-partition check.
    Toric {
        #[arg(long, value_parser = spec_arg)]
        spec: Spec,
        #[arg(long, value_enum)]
        what: What,
        /// List the objects, not just their count.
        #[arg(long)]
        full: bool,
    },
    /// Quadratic strand, corner, and skeleton of the Betti diagram.
    Betti {
        #[arg(long, value_parser = spec_arg)]
        spec: Spec,
    },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Newcomb { spec, algorithm } => commands::newcomb(spec, *algorithm, cli.budget),
        Command::Hilbert { spec, upto } => commands::hilbert(spec, *upto),
        Command::Series { spec } => commands::series(spec),
        Command::Toric { spec, what, full } => commands::toric(spec, (*what).into(), *full, cli.budget),
        Command::Betti { spec } => commands::betti(spec),
    }
}

fn render(report: &Report, format: Format, out: &mut impl Write) -> Result<(), CliError> {
    match format {
        Format::Json => out.write_all(report.envelope.to_json()?.as_bytes())?,
        Format::Text => out.write_all(report.text.as_bytes())?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&report.table.header)?;
            for row in &report.table.rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK),
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let outcome = run(&cli).and_then(|report| {
        render(&report, cli.format, &mut std::io::stdout().lock())?;
        Ok(report.check_failed)
    });
    match outcome {
        Ok(false) => ExitCode::from(EXIT_OK),
        Ok(true) => {
            eprintln!("segre: cross-check failed");
            ExitCode::from(EXIT_CROSS_CHECK)
        }
        Err(e) => {
            eprintln!("segre: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
