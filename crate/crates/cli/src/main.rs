//! `wzd`: analyze, sweep and export weakly zero-divisor graphs of Z_n.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use wzd_core::analysis::{analyze, sweep, AnalysisOptions, Method, SpectrumMode, SWEEP_HEADER};
use wzd_core::spectral::sombor_matrix;
use wzd_core::structure::{build_compressed, expand, to_dot};

/// Environment variable naming the default output directory.
const OUT_DIR_ENV: &str = "WZD_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "wzd",
    version,
    about = "Sombor index, spectrum and energy of weakly zero-divisor graphs of Z_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Structural,
    Oracle,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectrumArg {
    Full,
    Quotient,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportKind {
    Dot,
    Matrix,
}

#[derive(clap::Args)]
struct PipelineFlags {
    /// Graph construction (default: both up to n = 300, else structural)
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Spectrum path (default: both when the dense eigensolve fits)
    #[arg(long, value_enum)]
    spectrum: Option<SpectrumArg>,
}

impl PipelineFlags {
    fn options(&self, audit: bool) -> AnalysisOptions {
        AnalysisOptions {
            method: self.method.map(|m| match m {
                MethodArg::Structural => Method::Structural,
                MethodArg::Oracle => Method::Oracle,
                MethodArg::Both => Method::Both,
            }),
            spectrum: self.spectrum.map(|s| match s {
                SpectrumArg::Full => SpectrumMode::Full,
                SpectrumArg::Quotient => SpectrumMode::Quotient,
                SpectrumArg::Both => SpectrumMode::Both,
            }),
            audit,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of one modulus
    Analyze {
        n: u64,
        #[command(flatten)]
        flags: PipelineFlags,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// CSV of per-n results over a range
    Sweep {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Evaluate printed formulas and count flagged findings
        #[arg(long)]
        audit: bool,
        /// Output file (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Omit the timestamp comment line
        #[arg(long)]
        no_timestamp: bool,
        #[command(flatten)]
        flags: PipelineFlags,
        /// Emit errors as JSON objects
        #[arg(long)]
        json: bool,
    },
    /// Write the graph (DOT) or its Sombor matrix (triplets) to a file
    Export {
        n: u64,
        #[arg(long, value_enum)]
        kind: ExportKind,
        /// Output file (default: $WZD_OUT_DIR/wzd_<n>.<ext>)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Core(wzd_core::Error),
    Io { path: PathBuf, source: io::Error },
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(e) => e.exit_code() as u8,
            Failure::Io { .. } => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Core(e) => e.kind(),
            Failure::Io { .. } => "io",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Io { path, source } => format!("{}: {source}", path.display()),
        }
    }
}

impl From<wzd_core::Error> for Failure {
    fn from(e: wzd_core::Error) -> Self {
        Failure::Core(e)
    }
}

fn resolve(path: Option<PathBuf>, default_name: impl FnOnce() -> String) -> PathBuf {
    let base = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from);
    match (path, base) {
        (Some(p), Some(base)) if p.is_relative() => base.join(p),
        (Some(p), _) => p,
        (None, Some(base)) => base.join(default_name()),
        (None, None) => PathBuf::from(default_name()),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|source| Failure::Io {
        path: path.to_owned(),
        source,
    })
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Analyze { n, flags, json } => {
            let record = analyze(n, &flags.options(true))?;
            if json {
                println!("{}", serde_json::to_string_pretty(&record).expect("record serializes"));
            } else {
                print!("{}", render::analysis_text(&record));
            }
        }
        Command::Sweep {
            from,
            to,
            audit,
            out,
            no_timestamp,
            flags,
            ..
        } => {
            let entries = sweep(from, to, &flags.options(audit))?;
            let mut text = String::new();
            if !no_timestamp {
                text.push_str(&format!(
                    "# generated {}\n",
                    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
                ));
            }
            text.push_str(SWEEP_HEADER);
            text.push('\n');
            for e in &entries {
                text.push_str(&e.to_csv_line());
                text.push('\n');
            }
            match out {
                Some(p) => write_file(&resolve(Some(p), String::new), &text)?,
                None => io::stdout().write_all(text.as_bytes()).map_err(|source| Failure::Io {
                    path: "<stdout>".into(),
                    source,
                })?,
            }
        }
        Command::Export { n, kind, out, .. } => {
            let g = build_compressed(n)?;
            if g.partition.is_trivial() {
                return Err(wzd_core::Error::NotApplicable {
                    n,
                    reason: "prime modulus gives the null graph",
                }
                .into());
            }
            let dense = expand(&g)?;
            let (contents, ext) = match kind {
                ExportKind::Dot => (to_dot(&g, &dense), "dot"),
                ExportKind::Matrix => (sombor_matrix::<f64>(&dense)?.to_triplets(), "txt"),
            };
            let path = resolve(out, || format!("wzd_{n}.{ext}"));
            write_file(&path, &contents)?;
            eprintln!("wrote {}", path.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = match &cli.command {
        Command::Analyze { json, .. } | Command::Sweep { json, .. } | Command::Export { json, .. } => *json,
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if json {
                let obj = json!({ "error": { "kind": f.kind(), "message": f.message(), "exit_code": f.exit_code() } });
                println!("{obj}");
            } else {
                eprintln!("error: {}", f.message());
            }
            ExitCode::from(f.exit_code())
        }
    }
}
