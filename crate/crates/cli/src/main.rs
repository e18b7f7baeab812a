use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use diffschub_cli::commands::{self, CliError, Report};

#[derive(Parser)]
#[command(name = "diffschub", version, about = "Schur and back-stable Schubert calculus by differential operators")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Partition,
    Permutation,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityArg {
    JtH,
    JtE,
    Giambelli,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchArg {
    Lr,
    MultSs,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand s_λ s_μ in the Schur basis.
    Lr {
        lambda: String,
        mu: String,
        /// Cross-check against LR tableau counts.
        #[arg(long)]
        verify: bool,
    },
    /// Apply an operator expression to an element.
    Apply {
        #[arg(long, value_enum)]
        basis: BasisArg,
        /// e.g. "xi nabla", "[xi,nabla]", "1/2 * (xi xi + rho(2))".
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        /// e.g. "1*4,3,1 + 2*2" or "2,1@1".
        #[arg(long, allow_hyphen_values = true)]
        elem: String,
    },
    /// Expand s_λ times a back-stable Schubert class.
    MultSs {
        #[arg(long)]
        partition: String,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        #[arg(long)]
        verify: bool,
        /// Product cache file; defaults to $DIFFSCHUB_CACHE.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Schur expansion of a Stanley symmetric function.
    Stanley {
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        #[arg(long)]
        verify: bool,
    },
    /// Check a determinantal identity for λ.
    Identity {
        #[arg(value_enum)]
        kind: IdentityArg,
        lambda: String,
    },
    /// Run the acceptance battery, optionally with every size capped.
    Suite {
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Time the operator method against the oracle.
    Bench {
        #[arg(value_enum)]
        kind: BenchArg,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn run(cmd: Cmd) -> Result<Report, CliError> {
    match cmd {
        Cmd::Lr { lambda, mu, verify } => commands::lr(&lambda, &mu, verify),
        Cmd::Apply { basis, op, elem } => {
            let b = match basis {
                BasisArg::Partition => "partition",
                BasisArg::Permutation => "permutation",
            };
            commands::apply(b, &op, &elem)
        }
        Cmd::MultSs { partition, perm, verify, cache } => {
            commands::mult_ss(&partition, &perm, verify, commands::cache_path(cache).as_deref())
        }
        Cmd::Stanley { perm, verify } => commands::stanley(&perm, verify),
        Cmd::Identity { kind, lambda } => {
            let k = match kind {
                IdentityArg::JtH => "jt-h",
                IdentityArg::JtE => "jt-e",
                IdentityArg::Giambelli => "giambelli",
            };
            commands::identity(k, &lambda)
        }
        Cmd::Suite { max_size } => Ok(commands::run_suite(max_size)),
        Cmd::Bench { kind, max_size, csv } => {
            let k = match kind {
                BenchArg::Lr => "lr",
                BenchArg::MultSs => "mult-ss",
            };
            commands::bench(k, max_size, csv.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("JSON serializes"));
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
