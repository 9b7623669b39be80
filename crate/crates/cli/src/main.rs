#![allow(clippy::result_large_err)]

use catcheck_cli::{commands, Report, Workspace, WsError};
use clap::{Parser, Subcommand};
use std::process::ExitCode;

/// Validate finite-category spec files and run the universal-arrow /
/// extension-monad adjunction suites over them.
#[derive(Parser)]
#[command(name = "catcheck", version, about)]
struct Cli {
    /// Load the built-in fixture set (One, Two, Chain3, Div6, Iso2, Z2,
    /// GaloisCR, Clo2, and their cells)
    #[arg(long, global = true)]
    fixtures: bool,

    /// Spec files to load before running the command
    #[arg(long = "file", global = true)]
    files: Vec<String>,

    /// Cap on enumeration candidates (algebra tables, hom-set searches)
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: u64,

    /// Restrict 2-naturality checks to identity-rho cells
    #[arg(long, global = true)]
    strict: bool,

    /// Also write the report as a key=value sidecar file
    #[arg(long, global = true)]
    report: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and re-validate every entity
    Validate {
        /// Additional spec files
        inputs: Vec<String>,
    },
    /// Print the image of an entity under phi, psi, f, g, h, or k
    Derive {
        /// One of: phi, psi, f, g, h, k
        functor: String,
        /// The entity to transform
        entity: String,
        /// Name for the derived entity
        #[arg(long)]
        name: Option<String>,
    },
    /// Triangular identities, hom-bijection, and 2-naturality verdicts
    Adjunction { arrow: String, monad: String },
    /// GF / FG / HK / KH identity checks for one entity
    Roundtrip { entity: String },
    /// Serial-commutation suite over registered fixtures
    Square {
        /// Restrict to entities whose name starts with this prefix
        group: Option<String>,
    },
}

fn emit(report: &Report, sidecar: &Option<String>) -> ExitCode {
    print!("{}", report.render_text());
    if let Some(path) = sidecar {
        if let Err(e) = std::fs::write(path, report.render_sidecar()) {
            eprintln!("error: cannot write report {path}: {e}");
            return ExitCode::from(2);
        }
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn usage_error(e: &WsError) -> bool {
    matches!(
        e,
        WsError::Parse { .. } | WsError::Unknown { .. } | WsError::Duplicate { .. } | WsError::Io { .. }
    )
}

fn run(cli: Cli) -> Result<ExitCode, WsError> {
    let mut ws = Workspace::new();
    if cli.fixtures {
        commands::load_fixtures(&mut ws)?;
    }
    for f in &cli.files {
        ws.load_file(f)?;
    }
    match &cli.command {
        Command::Validate { inputs } => {
            let mut failures = Vec::new();
            for f in inputs {
                failures.extend(ws.load_file_lenient(f)?);
            }
            Ok(emit(&commands::cmd_validate(&ws, &failures), &cli.report))
        }
        Command::Derive {
            functor,
            entity,
            name,
        } => {
            let text = commands::cmd_derive(&ws, functor, entity, name.as_deref(), cli.budget)?;
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Adjunction { arrow, monad } => {
            let report = commands::cmd_adjunction(&ws, arrow, monad, cli.strict, cli.budget)?;
            Ok(emit(&report, &cli.report))
        }
        Command::Roundtrip { entity } => {
            let report = commands::cmd_roundtrip(&ws, entity)?;
            Ok(emit(&report, &cli.report))
        }
        Command::Square { group } => {
            let report = commands::cmd_square(&ws, group.as_deref(), cli.budget);
            Ok(emit(&report, &cli.report))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if usage_error(&e) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
