//! `gbd-kit`: evaluate generalized Bregman distances and their envelopes on
//! grids, and run the verification suites.
//!
//! Exit status: 0 on success (and on a passing suite), 1 when a suite fails or
//! output cannot be written, 2 on invalid arguments.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gbd_core::figures::{write_dist_csv, write_env_csv, GridSpec};
use gbd_core::suites::{run_suite, Suite};
use gbd_core::{NamedDistance, Side};

#[derive(Parser, Debug)]
#[command(name = "gbd-kit", version, about = "Generalized Bregman distances, envelopes and proxes on the real line")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate a distance over a product grid as `x,y,value`.
    Dist {
        /// f_id, sigma_id, fy_energy, f_log, sigma_log or kl
        #[arg(long)]
        dist: NamedDistance,
        /// x grid as lo:hi:n
        #[arg(long, allow_hyphen_values = true)]
        grid: GridSpec,
        /// y grid as lo:hi:n (defaults to the x grid)
        #[arg(long, allow_hyphen_values = true)]
        grid_y: Option<GridSpec>,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate envelope and prox of |x - 1/2| as `gamma,x,env,prox_lo,prox_hi`.
    Env {
        #[arg(long)]
        side: Side,
        #[arg(long)]
        dist: NamedDistance,
        /// Envelope parameter; repeat for several blocks
        #[arg(long = "gamma", required = true, value_parser = parse_gamma)]
        gammas: Vec<f64>,
        #[arg(long, allow_hyphen_values = true)]
        grid: GridSpec,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        /// oracle, inequalities, asymptotics or all
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_gamma(s: &str) -> Result<f64, String> {
    let g: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if g > 0.0 && g.is_finite() {
        Ok(g)
    } else {
        Err(format!("gamma must be finite and > 0, got {s}"))
    }
}

fn emit(out: Option<&PathBuf>, bytes: &[u8]) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, bytes),
        None => io::stdout().lock().write_all(bytes),
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.cmd {
        Command::Dist { dist, grid, grid_y, out } => {
            let mut buf = Vec::new();
            let gy = grid_y.unwrap_or(grid);
            write_dist_csv(&mut buf, dist, &grid, &gy).map_err(|e| e.to_string())?;
            emit(out.as_ref(), &buf).map_err(|e| format!("cannot write output: {e}"))?;
            Ok(true)
        }
        Command::Env { side, dist, gammas, grid, out } => {
            let mut buf = Vec::new();
            write_env_csv(&mut buf, side, dist, &gammas, &grid).map_err(|e| e.to_string())?;
            emit(out.as_ref(), &buf).map_err(|e| format!("cannot write output: {e}"))?;
            Ok(true)
        }
        Command::Verify { suite, out } => {
            let report = run_suite(suite).map_err(|e| e.to_string())?;
            let mut json = serde_json::to_vec_pretty(&report).map_err(|e| e.to_string())?;
            json.push(b'\n');
            emit(out.as_ref(), &json).map_err(|e| format!("cannot write output: {e}"))?;
            let failed = report.cases.iter().filter(|c| !c.pass).count();
            eprintln!(
                "suite {}: {} cases, {} failed",
                report.suite.name(),
                report.cases.len(),
                failed
            );
            Ok(report.pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("gbd-kit: {msg}");
            ExitCode::from(1)
        }
    }
}
