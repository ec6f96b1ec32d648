//! `balancing`: generate balancing numbers, linearize their powers, evaluate and
//! print closed-form power sums, and run the symbolic identity checks.
//!
//! Exit codes: 0 success, 1 an identity or oracle check failed, 2 usage error.

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recurrence,
    Fast,
    Binet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Seq {
    /// balancing numbers B_n
    #[value(name = "B")]
    B,
    /// Lucas-balancing numbers C_n
    #[value(name = "C")]
    C,
}

#[derive(Debug, Parser)]
#[command(name = "balancing", version, about = "Exact balancing-number toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print (n, value) for 0 <= n <= upto.
    Gen {
        #[arg(long)]
        upto: u64,
        #[arg(long, value_enum, default_value = "recurrence")]
        method: Method,
        #[arg(long, value_enum, default_value = "B")]
        seq: Seq,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Express B_n^power as a combination of B at multiplied indices.
    Linearize {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        power: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Evaluate sum_{0<=k<=upto} B_{km}^power from the closed form.
    Sum {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        power: u64,
        #[arg(long)]
        upto: u64,
        /// Also compute the sum by direct addition; exit 1 on disagreement.
        #[arg(long)]
        oracle: bool,
        /// Print one row for every n in 0..=upto.
        #[arg(long)]
        sweep: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Print the closed form of sum_{0<=k<=n} B_{km}^power in n.
    Formula {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        power: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Check the identities symbolically. With no bounds, runs the default sweep
    /// (lemma m <= 20, odd l <= 10, even l <= 6).
    Verify {
        #[arg(long)]
        lemma_max_m: Option<u64>,
        #[arg(long)]
        odd_max_l: Option<u64>,
        #[arg(long)]
        even_max_l: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen {
            upto,
            method,
            seq,
            format,
        } => commands::gen(upto, method, seq, format),
        Command::Linearize { power, format } => commands::linearize(power, format),
        Command::Sum {
            m,
            power,
            upto,
            oracle,
            sweep,
            format,
        } => commands::sum(m, power, upto, oracle, sweep, format),
        Command::Formula { m, power, format } => commands::formula(m, power, format),
        Command::Verify {
            lemma_max_m,
            odd_max_l,
            even_max_l,
            format,
        } => commands::verify(
            commands::VerifyBounds::new(lemma_max_m, odd_max_l, even_max_l),
            format,
        ),
    };

    match outcome {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
