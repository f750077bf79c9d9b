//! `punctual`: ideal files in, Gröbner bases, Betti tables, truncation and
//! cone-curve verification reports out.
//!
//! Exit codes: 0 success (and every check passed), 1 a check failed, 2 usage,
//! parse or precondition error, 3 computation error.

pub mod file;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use punctual_core::deform::{ext1_space, tangent_space};
use punctual_core::invariants::{betti_table, hilbert_function, regularity};
use punctual_core::oracle::{betti_bruteforce, hf_bruteforce, syzygies_bruteforce, tangent_bruteforce};
use punctual_core::strata::{cone_curve, truncate_ideal, verify_truncation};
use punctual_core::{Error, Ideal};
use serde_json::json;

use crate::file::{parse_ideal_file, write_ideal_file, FileError, IdealFile};
use crate::report::Envelope;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "punctual",
    version,
    about = "Graded ideals over prime fields: resolutions, truncations, deformations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduced Gröbner basis.
    Gb { file: PathBuf },
    /// Hilbert function of S/I in degrees 0..=D.
    Hilb {
        file: PathBuf,
        #[arg(long)]
        up_to: u32,
    },
    /// Betti table of the minimal free resolution.
    Res {
        file: PathBuf,
        /// Write the entries as JSON (`-` for standard output).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Castelnuovo–Mumford regularity of I.
    Reg { file: PathBuf },
    /// I + m^m, written in the ideal file format.
    Truncate {
        file: PathBuf,
        #[arg(long)]
        m: u32,
        /// Allow m below reg(I) + 2.
        #[arg(long)]
        force: bool,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Degree-0 tangent space Hom(I, S/I)_0.
    Tangent { file: PathBuf },
    /// Degree-0 obstruction space Ext^1(I, S/I)_0.
    Ext1 { file: PathBuf },
    /// Verify the Hilbert function, resolution shape and deformation
    /// comparison of I + m^m.
    #[command(name = "verify-prop31")]
    VerifyTruncation {
        file: PathBuf,
        #[arg(long)]
        m: u32,
        /// Highest degree for the Hilbert check (default reg + m + 4).
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Cut the cone by two random forms of degree m forming a regular sequence.
    ConeCurve {
        file: PathBuf,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        trials: u32,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Brute-force recomputation by dense linear algebra.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Hilbert function from ranks of I_d.
    Hilb {
        file: PathBuf,
        #[arg(long)]
        up_to: u32,
    },
    /// Dimension of the syzygy module in each degree.
    Syz {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        bound: u32,
    },
    /// Dimension of Hom(I, S/I)_0 from a dense kernel.
    Tangent {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        bound: u32,
    },
    /// Betti table from greedy minimal generators of each syzygy module.
    Betti {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        bound: u32,
        #[arg(long)]
        steps: Option<usize>,
    },
}

#[derive(Debug)]
enum CliError {
    Io(PathBuf, std::io::Error),
    File(PathBuf, FileError),
    Core(Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(..) | CliError::File(..) => EXIT_USAGE,
            CliError::Core(
                Error::BelowRegularityBound { .. } | Error::Parameter(_) | Error::Inhomogeneous { .. },
            ) => EXIT_USAGE,
            CliError::Core(_) => EXIT_COMPUTATION,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::File(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn load(path: &Path) -> Result<IdealFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    parse_ideal_file(&text).map_err(|e| CliError::File(path.to_path_buf(), e))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

/// Writes JSON to `path`, or to `out` when the path is `-`.
fn emit_json(path: &Path, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    if path == Path::new("-") {
        writeln!(out, "{text}").map_err(|e| CliError::Io(path.to_path_buf(), e))
    } else {
        write_file(path, &format!("{text}\n"))
    }
}

/// Runs with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn print_tuple(ideal: &Ideal, g: &[punctual_core::Polynomial]) -> String {
    let ring = ideal.ring();
    let parts: Vec<String> = g.iter().map(|p| ring.display(p)).collect();
    format!("({})", parts.join(", "))
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let io = |e: std::io::Error| CliError::Io(PathBuf::from("<stdout>"), e);
    match command {
        Command::Gb { file } => {
            let f = load(&file)?;
            for g in f.ideal.groebner_basis() {
                writeln!(out, "{}", f.ring.display(g)).map_err(io)?;
            }
        }
        Command::Hilb { file, up_to } => {
            let f = load(&file)?;
            let values: Vec<String> =
                (0..=up_to).map(|d| hilbert_function(&f.ideal, d).to_string()).collect();
            writeln!(out, "{}", values.join(" ")).map_err(io)?;
        }
        Command::Res { file, json } => {
            let f = load(&file)?;
            let table = betti_table(&f.ideal)?;
            write!(out, "{}", table.render()).map_err(io)?;
            if let Some(path) = json {
                let env = Envelope::new("res", &file, &f, json!({}), table.entries());
                emit_json(&path, &env.to_json(), out)?;
            }
        }
        Command::Reg { file } => {
            let f = load(&file)?;
            writeln!(out, "{}", regularity(&f.ideal)?).map_err(io)?;
        }
        Command::Truncate { file, m, force, output } => {
            let f = load(&file)?;
            let gamma = truncate_ideal(&f.ideal, m, force)?;
            let text = write_ideal_file(&gamma);
            match output {
                Some(path) => write_file(&path, &text)?,
                None => write!(out, "{text}").map_err(io)?,
            }
        }
        Command::Tangent { file } => {
            let f = load(&file)?;
            let t = tangent_space(&f.ideal)?;
            writeln!(out, "dimension {}", t.dimension).map_err(io)?;
            for g in &t.basis {
                writeln!(out, "{}", print_tuple(&f.ideal, g)).map_err(io)?;
            }
        }
        Command::Ext1 { file } => {
            let f = load(&file)?;
            let e = ext1_space(&f.ideal)?;
            writeln!(out, "dimension {}", e.dimension).map_err(io)?;
            writeln!(out, "cycles {}", e.cycle_basis.len()).map_err(io)?;
            writeln!(out, "boundary rank {}", e.boundary_rank).map_err(io)?;
        }
        Command::VerifyTruncation { file, m, bound, force, json } => {
            let f = load(&file)?;
            let reg = regularity(&f.ideal)?;
            let bound = bound.unwrap_or(reg + m + 4);
            let r = verify_truncation(&f.ideal, m, bound, force)?;
            report::print_truncation(out, &r).map_err(io)?;
            for w in &r.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            if let Some(path) = json {
                let params = json!({ "m": m, "bound": bound, "force": force });
                let env = Envelope::new("verify-prop31", &file, &f, params, &r);
                emit_json(&path, &env.to_json(), out)?;
            }
            return Ok(if r.passed() { EXIT_OK } else { EXIT_CHECK_FAILED });
        }
        Command::ConeCurve { file, m, seed, trials, json, output } => {
            let f = load(&file)?;
            let (ic, r) = cone_curve(&f.ideal, m, seed, trials)?;
            report::print_cone(out, &ic, &r).map_err(io)?;
            for w in &r.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            if let Some(path) = output {
                write_file(&path, &write_ideal_file(&ic))?;
            }
            if let Some(path) = json {
                let params = json!({ "m": m, "seed": seed, "trials": trials });
                let env = Envelope::new("cone-curve", &file, &f, params, &r);
                emit_json(&path, &env.to_json(), out)?;
            }
            return Ok(if r.passed() { EXIT_OK } else { EXIT_CHECK_FAILED });
        }
        Command::Oracle(cmd) => oracle(cmd, out)?,
    }
    Ok(EXIT_OK)
}

fn oracle(cmd: OracleCommand, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(PathBuf::from("<stdout>"), e);
    match cmd {
        OracleCommand::Hilb { file, up_to } => {
            let f = load(&file)?;
            let values: Vec<String> = (0..=up_to).map(|d| hf_bruteforce(&f.ideal, d).to_string()).collect();
            writeln!(out, "{}", values.join(" ")).map_err(io)?;
        }
        OracleCommand::Syz { file, bound } => {
            let f = load(&file)?;
            for (e, basis) in syzygies_bruteforce(&f.ideal, bound) {
                writeln!(out, "{e}: {}", basis.len()).map_err(io)?;
            }
        }
        OracleCommand::Tangent { file, bound } => {
            let f = load(&file)?;
            writeln!(out, "{}", tangent_bruteforce(&f.ideal, bound)).map_err(io)?;
        }
        OracleCommand::Betti { file, bound, steps } => {
            let f = load(&file)?;
            let steps = steps.unwrap_or(f.ring.nvars() + 1);
            write!(out, "{}", betti_bruteforce(&f.ideal, steps, bound).betti.render()).map_err(io)?;
        }
    }
    Ok(())
}
