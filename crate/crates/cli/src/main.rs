use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hyperjack_core::arith::{format_rational, parse_rational};
use hyperjack_core::hyperdet::AnyTensor;
use hyperjack_core::identities::{
    run_grid, schur_expand_vandermonde, GridConfig, IdStatus, IdentityId, Report,
};
use hyperjack_core::jack::{jack_j, jack_p, jack_q};
use hyperjack_core::par;
use hyperjack_core::poly::vandermonde;
use hyperjack_core::{Basis, Partition};

#[derive(Parser)]
#[command(name = "hyperjack", version, about = "Exact hyperdeterminants, Jack polynomials and their identities")]
struct Cli {
    /// Worker threads (0 uses all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities on a parameter grid.
    Verify {
        /// Identity ids to check; all when omitted.
        #[arg(long = "id")]
        ids: Vec<String>,
        /// `default`, `small`, or a JSON grid file.
        #[arg(long, default_value = "default")]
        grid: String,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a Jack polynomial.
    Jack {
        #[arg(long)]
        alpha: String,
        /// Comma-separated parts, e.g. 2,1.
        #[arg(long)]
        partition: String,
        #[arg(long, value_enum, default_value_t = Norm::P)]
        norm: Norm,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        basis: BasisArg,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the hyperdeterminant of a tensor file.
    Hyperdet {
        #[arg(long)]
        tensor: PathBuf,
    },
    /// Expand an even power of the Vandermonde determinant.
    Vandermonde {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Expand in Schur functions instead of monomials.
        #[arg(long)]
        schur: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Norm {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "J")]
    J,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    M,
    E,
    H,
    P,
    S,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::M => Basis::M,
            BasisArg::E => Basis::E,
            BasisArg::H => Basis::H,
            BasisArg::P => Basis::P,
            BasisArg::S => Basis::S,
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    let parts = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().with_context(|| format!("bad part {p:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition::new(parts)?)
}

fn print_summary(report: &Report) {
    for s in &report.summary {
        let status = match &s.status {
            IdStatus::Exact => "exact".to_string(),
            IdStatus::FittedConstant { constant } => format!("up to {}", format_rational(&constant.0)),
            IdStatus::Failed { reason } => format!("FAILED: {reason}"),
            IdStatus::Skipped => "skipped".to_string(),
        };
        println!(
            "{:<14} {:>4} cases {:>4} equal {:>3} skipped  {}{}",
            s.id.tag(),
            s.cases,
            s.equal,
            s.skipped,
            status,
            if s.accepted { "" } else { "  [not accepted]" }
        );
    }
    println!("{}", if report.accepted { "all identities accepted" } else { "some identities not accepted" });
}

fn verify(ids: &[String], grid: &str, out: Option<&PathBuf>) -> Result<bool> {
    let ids: Vec<IdentityId> = if ids.is_empty() {
        IdentityId::ALL.to_vec()
    } else {
        ids.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
    };
    let cfg = GridConfig::load(grid).with_context(|| format!("loading grid {grid:?}"))?;
    let report = run_grid(&ids, &cfg);
    print_summary(&report);
    if let Some(path) = out {
        fs::write(path, report.to_json_pretty()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(report.accepted)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify { ids, grid, out } => verify(&ids, &grid, out.as_ref()),
        Command::Jack { alpha, partition, norm, basis, json } => {
            let alpha = parse_rational(&alpha)?;
            let lambda = parse_partition(&partition)?;
            let f = match norm {
                Norm::P => jack_p(&lambda, &alpha)?,
                Norm::Q => jack_q(&lambda, &alpha)?,
                Norm::J => jack_j(&lambda, &alpha)?,
            }
            .convert(basis.into());
            if json {
                println!("{}", serde_json::to_string_pretty(&f)?);
            } else {
                println!("{f}");
            }
            Ok(true)
        }
        Command::Hyperdet { tensor } => {
            let text = fs::read_to_string(&tensor).with_context(|| format!("reading {}", tensor.display()))?;
            let t = AnyTensor::from_json_str(&text)?;
            println!("{}", serde_json::to_string_pretty(&t.det_json(cli.threads))?);
            Ok(true)
        }
        Command::Vandermonde { n, k, schur } => {
            if n == 0 {
                bail!("n must be positive");
            }
            if schur {
                let e = schur_expand_vandermonde(n, k)?;
                println!("{}", serde_json::to_string_pretty(&e)?);
            } else {
                let p = vandermonde(n).pow(2 * k as u32);
                println!("{}", serde_json::to_string_pretty(&p)?);
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let threads = cli.threads;
    match par::with_threads(threads, || run(cli)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
