use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rectkron::{Engine, EngineConfig, Partition};

mod commands;
mod output;

#[derive(Debug, Parser)]
#[command(name = "rectkron", version, about = "Exact Kronecker coefficients and their rectangular stable limits")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Character table cache directory.
    #[arg(long, global = true, env = "RECTKRON_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Do not read or write the table cache.
    #[arg(long, global = true)]
    no_cache: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest m for which a character table of S_m may be built.
    #[arg(long, global = true, default_value_t = rectkron::engine::DEFAULT_MAX_TABLE_M, value_parser = positive)]
    max_table_m: usize,

    /// Largest m for brute-force iteration over S_m.
    #[arg(long, global = true, default_value_t = rectkron::engine::DEFAULT_MAX_BRUTE_M, value_parser = positive)]
    max_brute_m: usize,

    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Kronecker coefficient k(lambda, mu, nu).
    Kron {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Littlewood-Richardson coefficient c^lambda_{alpha,beta}.
    Lr {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Rectangular coefficient k_rho(d, n) = k((dn-|rho|, rho), (d^n), (d^n)).
    Rect {
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
    /// Stable limit of k_rho(d, n); with --n, the limit in d at fixed n.
    Stable {
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Table of stable limits for |rho| <= max-m.
    Table {
        #[arg(long)]
        max_m: usize,
        /// Add the published values and a discrepancy column.
        #[arg(long)]
        paper_diff: bool,
    },
    /// Run identity checks.
    Verify(VerifyArgs),
    /// Derangement counts D_0..D_max-m.
    Derangements {
        #[arg(long)]
        max_m: usize,
    },
    /// Character table cache administration.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run a single check instead of the full sweep.
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
    #[arg(long, default_value_t = 5)]
    pub max_m: usize,
    #[arg(long, default_value_t = 12)]
    pub max_dn: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub rho: Option<String>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d_max: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    E3,
    E4,
    E5,
    Stabilization,
    Symmetry,
}

#[derive(Debug, Subcommand)]
enum CacheAction {
    /// Delete every cached table.
    Clear,
    /// List cached tables.
    Status,
}

/// Parses a comma-separated part list, naming the argument on failure.
pub fn parse_partition(name: &str, value: &str) -> Result<Partition> {
    value
        .parse::<Partition>()
        .with_context(|| format!("invalid --{name} {value:?}: expected comma-separated weakly decreasing parts, e.g. 3,1"))
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn default_cache_dir() -> Option<PathBuf> {
    dirs::cache_dir().map(|d| d.join("rectkron"))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let g = &cli.global;
    if let Some(workers) = g.workers {
        if workers == 0 {
            bail!("--workers must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .context("configuring worker pool")?;
    }
    let cache_dir = if g.no_cache {
        None
    } else {
        g.cache_dir.clone().or_else(default_cache_dir)
    };
    let config = EngineConfig {
        max_table_m: g.max_table_m,
        max_brute_m: g.max_brute_m,
        cache_dir: cache_dir.clone(),
    };
    let engine = Engine::new(config);
    let format = g.format;
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Kron { lambda, mu, nu } => {
            commands::kron(&engine, format, &mut out, &lambda, &mu, &nu)?
        }
        Command::Lr { lambda, alpha, beta } => {
            commands::lr(format, &mut out, &lambda, &alpha, &beta)?
        }
        Command::Rect { rho, d, n } => commands::rect(&engine, format, &mut out, &rho, d, n)?,
        Command::Stable { rho, n } => commands::stable(&engine, format, &mut out, &rho, n)?,
        Command::Table { max_m, paper_diff } => {
            commands::table(&engine, format, &mut out, max_m, paper_diff)?
        }
        Command::Verify(args) => return commands::verify(&engine, format, &mut out, &args),
        Command::Derangements { max_m } => commands::derangements(format, &mut out, max_m)?,
        Command::Cache { action } => {
            let Some(dir) = cache_dir else {
                bail!("no cache directory configured");
            };
            match action {
                CacheAction::Clear => commands::cache_clear(&mut out, &dir)?,
                CacheAction::Status => commands::cache_status(format, &mut out, &dir)?,
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
