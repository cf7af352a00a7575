use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use bkmult::{exit, Command, RunConfig};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bkmult", version, about = "Exact checks of multiplicity one for the Belkale-Kumar product")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Common {
    /// Root system, e.g. A3, B2, D4, G2.
    #[arg(long)]
    system: String,
    /// Largest number of non-identity parts (default: the rank).
    #[arg(long)]
    k_max: Option<usize>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// JSON-lines structure-constant cache.
    #[arg(long, value_name = "FILE")]
    cache: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Zero the timing field so reports are byte-reproducible.
    #[arg(long)]
    deterministic: bool,
    /// Refuse Weyl groups larger than this.
    #[arg(long)]
    group_cap: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check every decomposition and Levi-movable triple.
    Verify(Common),
    /// Print the cup, deformed and degenerate products of two classes.
    Constant {
        #[command(flatten)]
        common: Common,
        /// Reduced word of u, e.g. "1,2"; "" is the identity.
        u: String,
        v: String,
    },
    /// List (or count) decompositions into `--k-max` parts.
    Decompositions {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        allow_identity: bool,
    },
    /// Compare products against independent formulas.
    Crosscheck(Common),
}

fn config(cli: Cli) -> bkmult::Result<RunConfig> {
    let (common, command) = match cli.command {
        Cmd::Verify(c) => (c, Command::Verify),
        Cmd::Constant { common, u, v } => (common, Command::Constant { u, v }),
        Cmd::Decompositions { common, count, allow_identity } => {
            (common, Command::Decompositions { count_only: count, allow_identity })
        }
        Cmd::Crosscheck(c) => (c, Command::Crosscheck),
    };
    let mut cfg = RunConfig::new(&common.system, command)?;
    if let Some(k) = common.k_max {
        cfg.k_max = k;
    }
    if let Some(cap) = common.group_cap {
        cfg.group_cap = cap;
    }
    cfg.threads = common.threads;
    cfg.cache = common.cache;
    cfg.out = common.out;
    cfg.deterministic = common.deterministic;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { 0 });
        }
    };
    let code = config(cli).and_then(|cfg| bkmult::run::run(&cfg, &mut io::stdout().lock()));
    match code {
        Ok(c) => ExitCode::from(c as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::USAGE as u8)
        }
    }
}
