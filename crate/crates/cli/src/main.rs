//! `lzeta`: expansions of `Lz(a,b)`, numeric verification, expressibility
//! certificates and weight surveys from the command line.

mod commands;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use commands::{Failure, Rendered};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "lzeta", version, about = "Exact zeta expansions of Lz(a,b) and related tools")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest weight a+b accepted by expand, table, verify and express.
    #[arg(long, global = true, env = "ZL_MAX_WEIGHT", default_value_t = 24)]
    max_weight: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand Lz(a,b) into zeta monomials.
    Expand {
        a: u32,
        b: u32,
        /// Replace even zeta values by rational multiples of powers of pi.
        #[arg(long)]
        reduce: bool,
    },
    /// Every Lz(a,b) of weight N with a ≥ b.
    Table {
        n: u32,
        #[arg(long)]
        reduce: bool,
    },
    /// Compare the exact expansion against the series and/or quadrature.
    Verify {
        a: u32,
        b: u32,
        #[arg(long, default_value_t = 30)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Write an odd-zeta monomial as a combination of Lz values.
    Express {
        /// Monomial such as z3, z3^2 or z3*z5.
        monomial: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Optimistic)]
        mode: ModeArg,
        /// System weight; defaults to the monomial's weight. A larger weight of
        /// the same parity multiplies the target by a power of pi.
        #[arg(long)]
        weight: Option<u32>,
    },
    /// Rank and expressibility for each weight in a range.
    Survey {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Optimistic)]
        mode: ModeArg,
    },
    /// List partitions of N.
    Partitions {
        n: u32,
        #[arg(long, default_value_t = 1)]
        min_part: u32,
        /// Exact number of parts.
        #[arg(long)]
        parts: Option<u32>,
        #[arg(long, value_enum, default_value_t = ParityArg::Any)]
        parity: ParityArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Series,
    Quadrature,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Optimistic,
    Strict,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ParityArg {
    Any,
    Odd,
    Even,
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: u32,
    command: &'a str,
    inputs: serde_json::Value,
    result: serde_json::Value,
    elapsed_ms: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let start = Instant::now();
    match commands::run(&cli.command, cli.max_weight) {
        Ok(out) => {
            emit(&cli, &out, start);
            ExitCode::from(out.exit)
        }
        Err(Failure { message, exit }) => {
            eprintln!("error: {message}");
            ExitCode::from(exit)
        }
    }
}

fn emit(cli: &Cli, out: &Rendered, start: Instant) {
    match cli.format {
        Format::Text => print!("{}", terminated(&out.text)),
        Format::Latex => print!("{}", terminated(&out.latex)),
        Format::Json => {
            let env = Envelope {
                schema_version: SCHEMA_VERSION,
                command: out.command,
                inputs: out.inputs.clone(),
                result: out.result.clone(),
                elapsed_ms: start.elapsed().as_millis() as u64,
            };
            println!("{}", serde_json::to_string_pretty(&env).expect("serializable envelope"));
        }
    }
}

fn terminated(s: &str) -> String {
    if s.ends_with('\n') {
        s.to_string()
    } else {
        format!("{s}\n")
    }
}
