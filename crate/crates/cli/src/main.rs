use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use azumaya_cli::document::{parse_path, Object};
use azumaya_cli::report::{exit, Report};
use azumaya_cli::run::{run, RunOptions};
use azumaya_cli::suite::{run_suite, DEFAULT_CASES};
use azumaya_cli::{corpus, dualize, seed_from_env, InputError};

#[derive(Parser)]
#[command(
    name = "azk",
    version,
    about = "Exact Azumaya checks for graded algebras and coalgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks requested by a document.
    Check {
        file: Option<PathBuf>,
        /// Comma-separated check names to keep.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Never abbreviate witness matrices to digests.
        #[arg(long)]
        full_witness: bool,
        /// Include wall-clock timings (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
        /// Also run the randomized suite seeded by AZK_SEED.
        #[arg(long)]
        property_suite: bool,
        #[arg(long, default_value_t = DEFAULT_CASES)]
        cases: usize,
    },
    /// Check the braiding and the plain transposition as distributive laws on every algebra.
    Laws {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Emit a document holding the dual of one object.
    Dualize {
        file: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write the bundled fixture documents into a directory.
    Fixtures { dir: PathBuf },
}

fn input_failure(e: &InputError) -> ExitCode {
    eprintln!("azk: {e}");
    ExitCode::from(exit::INPUT_ERROR as u8)
}

fn emit(text: &str, target: Option<&Path>) -> Result<(), InputError> {
    match target {
        Some(path) => std::fs::write(path, text).map_err(|e| InputError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}

fn execute(command: Command) -> Result<i32, InputError> {
    match command {
        Command::Check {
            file,
            only,
            report,
            format,
            full_witness,
            timings,
            property_suite,
            cases,
        } => {
            if file.is_none() && !property_suite {
                return Err(InputError::Invalid {
                    field: "check".into(),
                    message: "a document or --property-suite is required".into(),
                });
            }
            let seed = if property_suite {
                Some(seed_from_env()?)
            } else {
                None
            };
            let mut out = match &file {
                Some(path) => {
                    let doc = parse_path(path)?;
                    let options = RunOptions {
                        only,
                        full_witness,
                        timings,
                    };
                    run(&doc, &options)
                }
                None => Report {
                    schema: azumaya_cli::document::SCHEMA_VERSION,
                    ..Report::default()
                },
            };
            if let Some(seed) = seed {
                out.property_suite = Some(run_suite(seed, cases));
            }
            emit(&render(&out, format), report.as_deref())?;
            Ok(out.exit_status())
        }
        Command::Laws { file, format } => {
            let doc = parse_path(&file)?;
            let mut doc = doc;
            doc.checks = doc
                .objects
                .iter()
                .filter(|(_, o)| matches!(o, Object::Algebra(_)))
                .map(|(name, _)| azumaya_cli::document::CheckRequest {
                    check: "bd_laws".into(),
                    object: name.clone(),
                    base: None,
                    structure: None,
                })
                .collect();
            let out = run(&doc, &RunOptions::default());
            emit(&render(&out, format), None)?;
            Ok(out.exit_status())
        }
        Command::Dualize {
            file,
            object,
            output,
        } => {
            let doc = parse_path(&file)?;
            let dual = dualize(&doc, &object)?;
            let mut text = serde_json::to_string_pretty(&dual).expect("documents serialize");
            text.push('\n');
            emit(&text, output.as_deref())?;
            Ok(exit::OK)
        }
        Command::Fixtures { dir } => {
            let written = corpus::write_corpus(&dir).map_err(|e| InputError::Io {
                path: dir.display().to_string(),
                message: e.to_string(),
            })?;
            for path in written {
                println!("{}", path.display());
            }
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => input_failure(&e),
    }
}
