//! `fusionforge`: exact fusion-ring computations from the command line.
//!
//! Exit codes: 0 success or all pass, 1 a mathematical failure (with a JSON
//! witness on stdout), 2 a usage or I/O error.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "fusionforge", version, about = "Interpolated fusion rings: exact construction and categorification criteria")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    Psl2,
    Etingof,
}

impl From<FamilyArg> for chartables::Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Psl2 => chartables::Family::Psl2,
            FamilyArg::Etingof => chartables::Family::Etingof,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum TableFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum RingMethod {
    Verlinde,
    Closed,
}

#[derive(Subcommand)]
enum Command {
    /// Print the eigentable.
    Table {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "psl2")]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
    },
    /// Build the fusion ring and print or write it as JSON.
    Ring {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "psl2")]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "verlinde")]
        method: RingMethod,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Check the fusion axioms of a ring file, and optionally that a table file reconstructs it.
    Verify {
        #[arg(long)]
        ring: std::path::PathBuf,
        #[arg(long)]
        table: Option<std::path::PathBuf>,
    },
    /// Run categorification criteria.
    Criteria {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "psl2")]
        family: FamilyArg,
        /// Comma-separated criterion names.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(long)]
        exhaustive_spectrum: bool,
    },
    /// Run the criteria over a range of q and emit JSON lines.
    Scan {
        #[arg(long)]
        q_from: u64,
        #[arg(long)]
        q_to: u64,
        #[arg(long, value_delimiter = ',', default_value = "psl2,etingof")]
        families: Vec<FamilyArg>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Write elapsed_ms as 0 so the output is byte-identical across runs.
        #[arg(long)]
        no_timings: bool,
    },
    /// Search for nonpointed simple integral modular types of small rank.
    Modsearch {
        #[arg(long, default_value_t = 11)]
        max_rank: usize,
        #[arg(long)]
        no_npp_filter: bool,
        #[arg(long)]
        no_unique_unit_filter: bool,
        #[arg(long)]
        certificate: Option<std::path::PathBuf>,
    },
    /// Compare closed-form fusion rules with the reconstruction.
    Crosscheck {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "psl2")]
        family: FamilyArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table { q, family, format } => commands::table(q, family.into(), format),
        Command::Ring { q, family, method, out } => commands::ring(q, family.into(), method, out.as_deref()),
        Command::Verify { ring, table } => commands::verify(&ring, table.as_deref()),
        Command::Criteria { q, family, only, exhaustive_spectrum } => {
            commands::criteria(q, family.into(), only.as_deref(), exhaustive_spectrum)
        }
        Command::Scan { q_from, q_to, families, jobs, only, out, no_timings } => commands::scan(commands::ScanArgs {
            q_from,
            q_to,
            families: families.into_iter().map(Into::into).collect(),
            jobs,
            only,
            out,
            timings: !no_timings,
        }),
        Command::Modsearch { max_rank, no_npp_filter, no_unique_unit_filter, certificate } => {
            commands::modsearch(max_rank, !no_npp_filter, !no_unique_unit_filter, certificate.as_deref())
        }
        Command::Crosscheck { q, family } => commands::crosscheck(q, family.into()),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
