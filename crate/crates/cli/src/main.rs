mod commands;
mod expr;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{ActionArgs, MatrixSource, Output};

/// Build and verify the Hopf algebras H_{2n²} and their actions on
/// quantum polynomial algebras, in exact arithmetic.
#[derive(Parser)]
#[command(name = "ore-hopf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Markdown, global = true)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MatrixArg {
    /// JSON file with {"entries": [[...]]}; entries are exact expressions
    /// like "1", "q^2", "zeta8^3" or "1/2".
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Use the quantum plane vu = p uv instead of a matrix file.
    #[arg(long)]
    p: Option<String>,
}

impl MatrixArg {
    fn source(&self) -> MatrixSource<'_> {
        match (&self.matrix, &self.p) {
            (Some(m), _) => MatrixSource::File(m),
            (None, Some(p)) => MatrixSource::Plane(p),
            (None, None) => unreachable!("clap requires one of them"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build H_{2n²}, write its structure constants and verify every axiom.
    BuildHopf {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=8))]
        n: u64,
        /// Use q = ζ_n^k; k must be coprime to n.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        q_exponent: i64,
        #[arg(long)]
        conductor: Option<u64>,
        /// Where to write the structure-constant JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the axioms of a structure-constant JSON file.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a torus-type action (τ, b) on a quantum polynomial algebra.
    CheckAction {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=8))]
        n: u64,
        #[command(flatten)]
        matrix: MatrixArg,
        /// τ in cycle notation, e.g. "(13)" or "(1 2)(3 4)".
        #[arg(long)]
        tau: String,
        /// b as comma-separated integers, e.g. "2,2,1".
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = ore_hopf::actions::DEFAULT_DEGREE_BOUND)]
        degree_cap: u32,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        q_exponent: i64,
        #[arg(long)]
        conductor: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List every compatible (τ, b) for a matrix.
    EnumerateActions {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        q_exponent: i64,
        #[arg(long)]
        conductor: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify H_8 actions on the quantum plane with z swapping u and v.
    ClassifyH8Qp {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long)]
        conductor: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> anyhow::Result<(Output, Option<PathBuf>)> {
    Ok(match &cli.command {
        Command::BuildHopf { n, q_exponent, conductor, out } => {
            (commands::build_hopf(*n, *q_exponent, *conductor, out.as_deref())?, None)
        }
        Command::Verify { input, out } => (commands::verify(input)?, out.clone()),
        Command::CheckAction {
            n,
            matrix,
            tau,
            b,
            degree_cap,
            q_exponent,
            conductor,
            out,
        } => (
            commands::check_action(&ActionArgs {
                n: *n,
                matrix: matrix.source(),
                tau,
                b,
                degree_cap: *degree_cap,
                q_exponent: *q_exponent,
                conductor: *conductor,
            })?,
            out.clone(),
        ),
        Command::EnumerateActions {
            n,
            matrix,
            q_exponent,
            conductor,
            out,
        } => (commands::enumerate(*n, matrix.source(), *q_exponent, *conductor)?, out.clone()),
        Command::ClassifyH8Qp { p, conductor, out } => (commands::classify(p, *conductor)?, out.clone()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((output, out)) => {
            let mut text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&output.json).expect("values serialize"),
                Format::Markdown => output.markdown,
            };
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: writing {}: {e}", path.display());
                        return ExitCode::FAILURE;
                    }
                }
                None => {
                    use std::io::Write;
                    // a closed pipe (e.g. `| head`) is not an error
                    let _ = std::io::stdout().write_all(text.as_bytes());
                }
            }
            if output.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
