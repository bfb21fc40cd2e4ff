use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use weno3::euler1d::Case1D;
use weno3::scalar1d::{ladder_up_to, run_convergence, TABLE_LADDER};
use weno3::{Scheme, SchemeParams};
use weno3_harness::compare::{compare, Profile, Window, SHU_OSHER_WINDOWS};
use weno3_harness::config::{parse_config, CaseKind};
use weno3_harness::run::{self, make_reference, output_root};

const EXIT_SOLVER: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "weno3", version, about = "Third-order WENO solvers for advection and the Euler equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the case described by a config file.
    Run {
        config: PathBuf,
        /// Output root when the config has no `output` key.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the advection order table of a scheme.
    Convergence {
        scheme: Scheme,
        #[arg(long, default_value_t = *TABLE_LADDER.last().unwrap())]
        max_n: usize,
    },
    /// Write a fine-grid fifth-order reference of a 1D case.
    MakeReference {
        case: Case1D,
        #[arg(long)]
        cells: Option<usize>,
        #[arg(long, short)]
        output: PathBuf,
    },
    /// Compare a 1D field file against a reference.
    Compare {
        field: PathBuf,
        reference: PathBuf,
        /// Interpolate the reference onto the field grid.
        #[arg(long)]
        interpolate: bool,
        /// Extrema window `lo:hi`; repeatable. Defaults to the Shu–Osher peaks.
        #[arg(long, value_parser = parse_window)]
        window: Vec<Window>,
    },
    /// List the registered cases.
    Cases,
}

fn parse_window(s: &str) -> Result<Window, String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo: f64 = lo.trim().parse().map_err(|_| format!("bad number `{lo}`"))?;
    let hi: f64 = hi.trim().parse().map_err(|_| format!("bad number `{hi}`"))?;
    if !(lo < hi) {
        return Err(format!("empty window {lo}:{hi}"));
    }
    Ok(Window { lo, hi })
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INPUT)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { config, out } => {
            let text = match fs::read_to_string(&config) {
                Ok(t) => t,
                Err(e) => return input_error(format!("{}: {e}", config.display())),
            };
            let cfg = match parse_config(&text) {
                Ok(c) => c,
                Err(e) => return input_error(format!("{}: {e}", config.display())),
            };
            let root = out.unwrap_or_else(output_root);
            match run::run(&cfg, &root) {
                Ok(outcome) => {
                    if let Some(table) = &outcome.table {
                        print!("{}", table.to_csv());
                    }
                    println!("wrote {}", outcome.dir.display());
                    match outcome.failure {
                        None => ExitCode::SUCCESS,
                        Some(e) => {
                            eprintln!("solver failure: {e}");
                            ExitCode::from(EXIT_SOLVER)
                        }
                    }
                }
                Err(e) => input_error(e),
            }
        }
        Command::Convergence { scheme, max_n } => {
            let ladder = ladder_up_to(max_n);
            match run_convergence(&SchemeParams::new(scheme), &ladder) {
                Ok(table) => {
                    print!("{}", table.to_csv());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("solver failure: {e}");
                    ExitCode::from(EXIT_SOLVER)
                }
            }
        }
        Command::MakeReference { case, cells, output } => match make_reference(case, cells, &output) {
            Ok(()) => {
                println!("wrote {}", output.display());
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_SOLVER)
            }
        },
        Command::Compare { field, reference, interpolate, window } => {
            let windows = if window.is_empty() { SHU_OSHER_WINDOWS.to_vec() } else { window };
            let result = Profile::read(&field)
                .and_then(|f| Ok((f, Profile::read(&reference)?)))
                .and_then(|(f, r)| compare(&f, &r, &windows, interpolate));
            match result {
                Ok(c) => {
                    print!("{}", c.to_text());
                    ExitCode::SUCCESS
                }
                Err(e) => input_error(e),
            }
        }
        Command::Cases => {
            for case in CaseKind::ALL {
                println!("{:<14}{}", case.name(), case.summary());
            }
            let names: Vec<_> = Scheme::ALL.iter().map(|s| s.name()).collect();
            println!("schemes: {}", names.join(", "));
            ExitCode::SUCCESS
        }
    }
}
