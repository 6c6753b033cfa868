//! `qhbound`: exact bound checks, family scans, lemma-chain sweeps, and
//! lattice-code construction from the command line.
//!
//! Exit codes: 0 computed (and any assertion passed), 1 usage or
//! validation error, 2 assertion or certification failure, 3 resource
//! refusal (workload above budget).

mod commands;
mod report;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "qhbound",
    version,
    about = "Exact-arithmetic bound checks and lattice constructions for subsystem codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the packing and linear-programming bounds for one `[[n,k,r,d]]`
    Check(commands::CheckArgs),
    /// Sweep a code family and report every member's bound verdicts
    Scan(commands::ScanArgs),
    /// Verify the integer lemma chain behind the family-wide violation
    Proof(commands::ProofArgs),
    /// Build a lattice code, certify it, and optionally brute-force its distance
    Code(commands::CodeArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help / --version are successful interactions; everything
            // else is a usage error under this tool's exit contract.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let result = match cli.command {
        Command::Check(args) => commands::cmd_check(args),
        Command::Scan(args) => commands::cmd_scan(args),
        Command::Proof(args) => commands::cmd_proof(args),
        Command::Code(args) => commands::cmd_code(args),
    };

    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
