//! Command-line front end.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog;
use crate::dsl::{parse, SpecDocument};
use crate::error::{Error, Result};
use crate::report::{catalog_report, error_json, run, Command, Report};

#[derive(Parser, Debug)]
#[command(name = "nilcoh", version, about = "Exact invariant cohomology of nil- and solvmanifolds")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Structure-equation file.
    #[arg(conflicts_with = "catalog")]
    pub file: Option<PathBuf>,
    /// Use a built-in catalog entry instead of a file.
    #[arg(long)]
    pub catalog: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Sub {
    /// Betti numbers of the invariant complex.
    Betti(Input),
    /// Basis of H^k.
    Cohomology {
        #[arg(long)]
        stage: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Real and complex type subgroups of H^k.
    Decompose {
        #[arg(long)]
        stage: usize,
        #[command(flatten)]
        input: Input,
    },
    /// C∞-pure/full and pure/full flags.
    Verdict {
        /// Every stage 0..=2n (the default).
        #[arg(long, conflicts_with = "stage")]
        all_stages: bool,
        /// A single stage.
        #[arg(long)]
        stage: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// Dolbeault numbers of an integrable structure.
    Dolbeault(Input),
    /// Frölicher inequality and E1 degeneration.
    Frolicher(Input),
    /// Harmonic k-forms for the orthonormal invariant metric.
    Harmonic {
        #[arg(long)]
        stage: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Hard Lefschetz condition for the declared symplectic form.
    Hlc(Input),
    /// Deformation table for the document's `deform` block.
    DeformScan(Input),
    /// Print a built-in catalog document.
    Catalog {
        name: String,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn load(input: &Input) -> Result<SpecDocument> {
    let text = match (&input.file, &input.catalog) {
        (Some(path), None) => std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
        (None, Some(name)) => catalog::source(name)
            .ok_or_else(|| Error::Usage(format!("unknown catalog entry `{name}`; available: {}", catalog::NAMES.join(", "))))?
            .to_string(),
        _ => return Err(Error::Usage("give an input file or `--catalog <name>`".into())),
    };
    Ok(parse(&text)?)
}

fn dispatch(sub: &Sub) -> Result<Report> {
    let (command, input) = match sub {
        Sub::Catalog { name } => {
            return catalog_report(name);
        }
        Sub::Betti(i) => (Command::Betti, i),
        Sub::Cohomology { stage, input } => (Command::Cohomology { stage: *stage }, input),
        Sub::Decompose { stage, input } => (Command::Decompose { stage: *stage }, input),
        Sub::Verdict { stage, input, .. } => (Command::Verdict { stage: *stage }, input),
        Sub::Dolbeault(i) => (Command::Dolbeault, i),
        Sub::Frolicher(i) => (Command::Frolicher, i),
        Sub::Harmonic { stage, input } => (Command::Harmonic { stage: *stage }, input),
        Sub::Hlc(i) => (Command::Hlc, i),
        Sub::DeformScan(i) => (Command::DeformScan, i),
    };
    run(&command, &load(input)?)
}

fn error_body(format: Format, err: &Error) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&error_json(err)).expect("serializable")),
        Format::Text => format!("error [{}]: {err}\n", err.code()),
    }
}

fn failure(format: Format, err: &Error) -> Outcome {
    let body = error_body(format, err);
    match format {
        Format::Json => Outcome { code: 2, stdout: body, stderr: String::new() },
        Format::Text => Outcome { code: 2, stdout: String::new(), stderr: body },
    }
}

fn finish(cli: &Cli, result: Result<Report>) -> Outcome {
    let report = match result {
        Ok(r) => r,
        Err(err) => return failure(cli.format, &err),
    };
    let body = match cli.format {
        Format::Json => report.to_json_string(),
        Format::Text => report.text,
    };
    match &cli.out {
        None => Outcome { code: 0, stdout: body, stderr: String::new() },
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome { code: 0, stdout: String::new(), stderr: String::new() },
            Err(e) => failure(cli.format, &Error::Io(format!("{}: {e}", path.display()))),
        },
    }
}

/// Runs the CLI on `args` (including the program name) without touching the process streams.
pub fn run_cli<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if !e.use_stderr() {
                return Outcome { code: 0, stdout: rendered, stderr: String::new() };
            }
            let err = Error::Usage(rendered.lines().next().unwrap_or_default().trim_start_matches("error: ").to_string());
            return Outcome { code: 2, stdout: error_body(Format::Json, &err), stderr: rendered };
        }
    };
    let result = dispatch(&cli.command);
    finish(&cli, result)
}
