use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use freecr_cli::reports::{algebra_document, fefferman_document};
use freecr_cli::{parse_frame, render, run_check, run_pipeline, FrameDocument};
use freecr_core::model::{deformed_frame, flat_frame};
use serde::Serialize;

const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "freecr",
    version,
    about = "Exact invariants of free CR distributions"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the frame and run the CR checks.
    Check {
        /// Frame file, or `-` for standard input.
        file: PathBuf,
    },
    /// Compute structure functions, the normalization and P.
    Invariant {
        /// Frame file, or `-` for standard input.
        file: PathBuf,
    },
    /// Emit a model frame file.
    Model {
        #[command(subcommand)]
        which: ModelCommand,
    },
    /// Check the graded Lie algebra su(n+1, n).
    Algebra {
        #[command(subcommand)]
        action: VerifyCommand,
    },
    /// Check the embedding su(n+1, n) → su(n+1, n+1).
    Fefferman {
        #[command(subcommand)]
        action: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum ModelCommand {
    /// The flat frame, optionally with the n = 4 deformation.
    Flat {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        deform: bool,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    Verify {
        #[arg(long)]
        n: usize,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read_input(path: &PathBuf) -> io::Result<Vec<u8>> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read(path)
    }
}

fn load(path: &PathBuf) -> Result<(FrameDocument, Vec<u8>), String> {
    let bytes = read_input(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let text = std::str::from_utf8(&bytes).map_err(|e| format!("input is not UTF-8: {e}"))?;
    let doc = parse_frame(text).map_err(|e| e.to_string())?;
    Ok((doc, bytes))
}

fn emit<T: Serialize>(
    format: Format,
    value: &T,
    text: impl FnOnce() -> String,
) -> Result<(), String> {
    let out = match format {
        Format::Json => serde_json::to_string_pretty(value).map_err(|e| e.to_string())? + "\n",
        Format::Text => text(),
    };
    io::stdout()
        .lock()
        .write_all(out.as_bytes())
        .map_err(|e| e.to_string())
}

fn status(passed: bool) -> u8 {
    if passed {
        0
    } else {
        EXIT_FAILED
    }
}

fn run(cli: Cli) -> Result<u8, (u8, String)> {
    let input = |e: String| (EXIT_INPUT, e);
    let output = |e: String| (EXIT_FAILED, e);
    match cli.command {
        Command::Check { file } => {
            let (doc, bytes) = load(&file).map_err(input)?;
            let r = run_check(&doc, &bytes).map_err(|e| input(e.to_string()))?;
            emit(cli.format, &r, || render::result_text(&r)).map_err(output)?;
            Ok(status(r.passed))
        }
        Command::Invariant { file } => {
            let (doc, bytes) = load(&file).map_err(input)?;
            let r = run_pipeline(&doc, &bytes).map_err(|e| input(e.to_string()))?;
            emit(cli.format, &r, || render::result_text(&r)).map_err(output)?;
            Ok(status(r.passed))
        }
        Command::Model {
            which: ModelCommand::Flat { n, deform },
        } => {
            let fields = if deform {
                deformed_frame(n)
            } else {
                flat_frame(n)
            }
            .map_err(|e| input(e.to_string()))?;
            let text = FrameDocument::from_fields(&fields).to_text();
            io::stdout()
                .lock()
                .write_all(text.as_bytes())
                .map_err(|e| output(e.to_string()))?;
            Ok(0)
        }
        Command::Algebra {
            action: VerifyCommand::Verify { n, seed },
        } => {
            if n < 2 {
                return Err(input(format!("n must be at least 2, got {n}")));
            }
            let d = algebra_document(n, seed);
            emit(cli.format, &d, || d.to_text()).map_err(output)?;
            Ok(status(d.passed))
        }
        Command::Fefferman {
            action: VerifyCommand::Verify { n, .. },
        } => {
            if n < 2 {
                return Err(input(format!("n must be at least 2, got {n}")));
            }
            let d = fefferman_document(n);
            emit(cli.format, &d, || d.to_text()).map_err(output)?;
            Ok(status(d.passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
