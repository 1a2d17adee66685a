use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Mordell-Weil lattice density bounds over function fields.
#[derive(Parser, Debug)]
#[command(name = "mwlat", version, about)]
struct Cli {
    /// Worker threads for Gram assembly (defaults to all cores).
    #[arg(long, global = true, env = "MWLAT_THREADS")]
    threads: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Print progress to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// y^2 = x^3 + t^q - t over GF(p^s)(t), q = p^c.
    E1(E1Args),
    /// y^2 = x(x+1)(x+u^d) over GF(p^2f)(u), d = p^f + 1.
    Legendre(LegendreArgs),
    /// Reproduce both density tables.
    Tables(TablesArgs),
    /// Niceness test and heights for a curve read from a model file.
    Nice(NiceArgs),
}

#[derive(Args, Debug)]
pub struct E1Args {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub c: u32,
    #[arg(long)]
    pub s: u32,
    /// Export the generator Gram matrix as JSON.
    #[arg(long)]
    pub gram_out: Option<PathBuf>,
    /// Export the explicit points in the points file format.
    #[arg(long)]
    pub points_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct LegendreArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub f: u32,
    /// List the explicit points with an on-curve check.
    #[arg(long)]
    pub points: bool,
    /// Export the closed-form Gram matrix as JSON.
    #[arg(long)]
    pub gram_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TablesArgs {
    /// Include the q = 17 row.
    #[arg(long)]
    pub long: bool,
    /// Include the q = 125 row as well (dimension 248).
    #[arg(long)]
    pub very_long: bool,
    /// Directory receiving table1 and table2 files.
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
}

#[derive(Args, Debug)]
pub struct NiceArgs {
    /// Model file (MWLAT1 model).
    pub model: PathBuf,
    /// Points file (MWLAT1 points).
    pub points: Option<PathBuf>,
}

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<mwlat::Error> for Failure {
    fn from(e: mwlat::Error) -> Self {
        use mwlat::Error as E;
        let code = match &e {
            E::NotPrime(_)
            | E::InvalidParams(_)
            | E::InvalidFamily(_)
            | E::Parse(_)
            | E::NotOnCurve(_)
            | E::SingularCurve
            | E::Json(_) => 2,
            E::RankDeficient { .. } => 3,
            E::NotNice(_) => 4,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| Failure {
                code: 1,
                message: e.to_string(),
            })?;
    }
    match &cli.command {
        Command::E1(a) => commands::e1(a, cli.format, cli.verbose),
        Command::Legendre(a) => commands::legendre(a, cli.format),
        Command::Tables(a) => commands::tables(a, cli.format, cli.verbose),
        Command::Nice(a) => commands::nice(a, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &report),
                None => std::io::stdout().write_all(report.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
