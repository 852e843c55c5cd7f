mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gotas_core::oracle::{
    check_propositions, oracle_diff, CheckMode, Mutant, Mutation, DEFAULT_ORACLE_CAP,
    EXHAUSTIVE_CAP,
};
use gotas_core::{Approximations, Direction, Family, Gotas, GotasError, SpaceDocument};

const EXIT_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "gotas", version, about = "Ordered topological rough-set approximations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the open sets of the space's topology.
    Topology {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Approximate a subset with every operator family.
    Analyze {
        file: PathBuf,
        /// Comma-separated labels; an empty string is the empty set.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long, value_enum)]
        direction: Option<DirectionArg>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Also report exactness as lower(A, d) = upper(A, opposite d).
        #[arg(long)]
        mixed_exactness: bool,
    },
    /// Check the inclusion and accuracy laws on the space.
    Check {
        file: PathBuf,
        /// Every subset and every subset pair (default when |U| is small enough).
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        /// Number of random subset pairs to check.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Run against a deliberately corrupted γ upper approximation.
        #[arg(long, value_enum, hide = true)]
        corrupt_gamma: Option<CorruptionArg>,
    },
    /// Compare r_lower/r_upper against powerset enumeration.
    OracleDiff {
        file: PathBuf,
        #[arg(long, env = "GOTAS_ORACLE_CAP", default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    R,
    #[value(alias = "s")]
    Semi,
    #[value(alias = "p")]
    Pre,
    Gamma,
    Beta,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::R => Family::R,
            FamilyArg::Semi => Family::Semi,
            FamilyArg::Pre => Family::Pre,
            FamilyArg::Gamma => Family::Gamma,
            FamilyArg::Beta => Family::Beta,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Inc,
    Dec,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Inc => Direction::Inc,
            DirectionArg::Dec => Direction::Dec,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CorruptionArg {
    Outer,
    Inner,
}

/// Either an input problem (exit 2) or a failed check (exit 1).
enum Failure {
    Input(String),
    Check,
}

impl From<GotasError> for Failure {
    fn from(e: GotasError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(EXIT_FAILURE),
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: String) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn emitln(text: String) {
    emit(text + "\n");
}

fn load(path: &Path) -> Result<Gotas, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let doc = SpaceDocument::from_json(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(doc.build()?)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Topology { file, format } => {
            let space = load(&file)?;
            let opens = space.topology().opens();
            match format {
                Format::Table => emit(render::opens_table(opens)),
                Format::Json => emitln(render::opens_json(opens)),
            }
            Ok(())
        }
        Command::Analyze {
            file,
            set,
            family,
            direction,
            format,
            mixed_exactness,
        } => {
            let space = load(&file)?;
            let labels: Vec<&str> = set
                .split(',')
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            let a = space.subset(labels)?;
            let family = family.map(Family::from);
            let direction = direction.map(Direction::from);
            let rows: Vec<_> = space
                .full_report(&a)
                .into_iter()
                .filter(|r| family.is_none_or(|f| r.family == f))
                .filter(|r| direction.is_none_or(|d| r.direction == d))
                .collect();
            let mixed: Option<Vec<_>> = mixed_exactness.then(|| {
                rows.iter()
                    .map(|r| space.exactness_mixed(r.family, &a, r.direction))
                    .collect()
            });
            match format {
                Format::Table => emit(render::analysis_table(&a, &rows, mixed.as_deref())),
                Format::Json => emitln(render::analysis_json(&a, &rows, mixed.as_deref())),
            }
            Ok(())
        }
        Command::Check {
            file,
            exhaustive,
            samples,
            seed,
            format,
            corrupt_gamma,
        } => {
            let space = load(&file)?;
            let n = space.universe().len();
            let mode = match (exhaustive, samples) {
                (_, Some(samples)) => CheckMode::Sampled { samples, seed },
                (true, None) => CheckMode::Exhaustive,
                (false, None) if n <= EXHAUSTIVE_CAP => CheckMode::Exhaustive,
                (false, None) => CheckMode::Sampled {
                    samples: 1000,
                    seed,
                },
            };
            let label = file.display().to_string();
            let reports = match corrupt_gamma {
                None => check_propositions(&space, mode, &label)?,
                Some(kind) => {
                    let mutation = match kind {
                        CorruptionArg::Outer => Mutation::GammaUpperOuterIntersect,
                        CorruptionArg::Inner => Mutation::GammaUpperInnerIntersect,
                    };
                    let mutant = Mutant::new(&space, mutation);
                    check_propositions(&mutant as &dyn Approximations, mode, &label)?
                }
            };
            match format {
                Format::Table => emit(render::check_table(&reports)),
                Format::Json => emitln(render::check_json(mode, &reports)),
            }
            if reports.iter().all(|r| r.passed()) {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::OracleDiff {
            file,
            oracle_cap,
            format,
        } => {
            let space = load(&file)?;
            let diff = oracle_diff(&space, oracle_cap)?;
            match format {
                Format::Table => emit(render::diff_table(&diff)),
                Format::Json => emitln(render::diff_json(&diff)),
            }
            if diff.is_clean() {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
    }
}
