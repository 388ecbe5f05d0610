//! `whitney`: compute, verify and generate broken-circuit reductions.

mod compute;
mod error;
mod generate;
mod instance;
mod output;
mod verify;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::compute::{Flags, Target};
use crate::error::{CliError, CliResult};
use crate::generate::{Kind, Params};
use crate::verify::Suite;

#[derive(Parser, Debug)]
#[command(
    name = "whitney",
    version,
    about = "Pruned subset sums over broken circuits, with brute-force referees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one operation on one instance and print the result as JSON.
    Compute {
        #[arg(value_enum)]
        target: Target,
        /// Instance file (not needed for number-* targets given --n).
        file: Option<PathBuf>,
        #[command(flatten)]
        flags: Flags,
    },
    /// Compare restricted sums against brute force across a suite.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip generated instances with more than N ground elements.
        #[arg(long, value_name = "N")]
        cap_elements: Option<usize>,
        /// Add a set that is not a broken circuit to the pruning family of
        /// the shipped ground-set check (a negative control).
        #[arg(long)]
        inject_mutant: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print a generated instance.
    Generate {
        #[arg(value_enum)]
        kind: Kind,
        #[command(flatten)]
        params: Params,
    },
}

/// `whitney graph chromatic f.json` is short for
/// `whitney compute graph-chromatic f.json`.
fn expand_shorthand(mut args: Vec<OsString>) -> Vec<OsString> {
    const PREFIXES: [(&str, &str); 8] = [
        ("graph", "graph"),
        ("hypergraph", "hypergraph"),
        ("lattice", "lattice"),
        ("number", "number"),
        ("geometry", "geometry"),
        ("matroid", "matroid"),
        ("whitney", "core"),
        ("core", "core"),
    ];
    let first = args.get(1).and_then(|a| a.to_str()).map(str::to_string);
    let second = args.get(2).and_then(|a| a.to_str()).map(str::to_string);
    if let (Some(first), Some(op)) = (first, second) {
        if let Some((_, prefix)) = PREFIXES.iter().find(|(p, _)| *p == first) {
            if !op.starts_with('-') {
                args.splice(
                    1..3,
                    [
                        OsString::from("compute"),
                        OsString::from(format!("{prefix}-{op}")),
                    ],
                );
            }
        }
    }
    args
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Compute { target, file, flags } => {
            let out = compute::run(target, file.as_deref(), &flags)?;
            output::print(&out.body, flags.json);
            if out.exit != 0 {
                let what = if out.exit == 4 {
                    "hypothesis violated"
                } else {
                    "check failed"
                };
                eprintln!("whitney: {what}; see the report on stdout");
            }
            Ok(out.exit)
        }
        Command::Verify {
            suite,
            seed,
            cap_elements,
            inject_mutant,
            json,
        } => {
            let ctx = verify::Ctx {
                seed,
                mutant: inject_mutant,
                cap: cap_elements,
            };
            let (report, ok) = verify::run(suite, &ctx);
            output::print(&report, json);
            if ok {
                Ok(0)
            } else {
                Err(CliError::Failed(format!("{} check(s) failed", report["failed"])))
            }
        }
        Command::Generate { kind, params } => {
            let inst = generate::run(kind, &params)?;
            let value = serde_json::to_value(&inst).map_err(|e| CliError::schema(e.to_string()))?;
            output::print(&value, params.json);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let args = expand_shorthand(std::env::args_os().collect());
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("whitney: {e}");
            e.exit_code()
        }
    }
}
