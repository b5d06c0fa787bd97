//! `cay`: batch verifier for torus-level Cayley map constructions.
//!
//! Every subcommand emits one machine-readable report (JSON by default)
//! and exits 0 when all non-skipped checks pass, 1 on a verification
//! failure, and 2 on a usage error.

mod commands;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Parser)]
#[command(name = "cay", version, about = "Exact verifier for equivariant torus maps and their degrees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the special-linear construction and report its structural degree.
    VerifySln {
        /// Matrix size n (the torus has rank n - 1). Needs n >= 3.
        #[arg(long)]
        n: usize,
        /// Working prime, congruent to 1 mod n. Default: smallest such >= 211.
        #[arg(long)]
        prime: Option<u64>,
        /// Root-of-unity index in 1..n-1. Default: exercise all of them.
        #[arg(long)]
        zeta: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Line samples per projection-degree estimate.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Verify the rank-2 exceptional construction (degree 2).
    VerifyG2 {
        /// Working prime (not 3). Default 1009.
        #[arg(long)]
        prime: Option<u64>,
        /// Also enumerate the full fiber histogram over F_p.
        #[arg(long)]
        brute: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the torus-coordinate eliminant; --check verifies it.
    Sextic {
        /// Compare to the reference display, verify the recovery formula,
        /// and run 100 finite-field consistency samples.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 1009)]
        prime: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exhaustive fiber histogram for a named map.
    BruteDegree {
        /// One of pgl2, sl2, sl3, g2, sl2-sq-isogeny, product:<a>,<b>.
        #[arg(long)]
        map: String,
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumeration budget (points).
        #[arg(long)]
        cap: Option<u128>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Dump the known-degree table.
    Table {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exact identity suite for the classical matrix map.
    Classical {
        /// Matrix dimension.
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let (result, format) = match cli.command {
        Command::VerifySln {
            n,
            prime,
            zeta,
            seed,
            samples,
            format,
        } => (commands::verify_sln(n, prime, zeta, seed, samples), format),
        Command::VerifyG2 {
            prime,
            brute,
            seed,
            samples,
            format,
        } => (commands::verify_g2(prime, brute, seed, samples), format),
        Command::Sextic {
            check,
            prime,
            seed,
            format,
        } => (commands::sextic(check, prime, seed), format),
        Command::BruteDegree {
            map,
            prime,
            seed,
            cap,
            format,
        } => (commands::brute_degree(&map, prime, seed, cap), format),
        Command::Table { format } => (commands::table(), format),
        Command::Classical {
            n,
            trials,
            seed,
            format,
        } => (commands::classical(n, trials, seed), format),
    };
    match result {
        Err(usage) => {
            eprintln!("error: {usage}");
            ExitCode::from(2)
        }
        Ok(mut report) => {
            report.elapsed_ms = started.elapsed().as_millis() as u64;
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
