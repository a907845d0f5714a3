use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use dompack::generators::{gen_named, GenSpec};
use dompack::rational::{parse, Rational};
use dompack::Graph;
use dompack_cli::campaign::{construct, ConstructClass, VerifyClass, VerifyConfig};
use dompack_cli::input::{parse_graphs, parse_range, parse_vertex_set, read_source};
use dompack_cli::lemma::{self, Lemma};
use dompack_cli::output::{lemma_line, sink, summary_line, write_records, Format};
use dompack_cli::record::CampaignRecord;
use dompack_cli::search::{self, SearchConfig};

/// Domination and packing numbers: exact values, constructions and bound
/// campaigns.
#[derive(Parser, Debug)]
#[command(name = "dompack", version)]
struct Cli {
    /// Base seed; instance seeds are derived from it.
    #[arg(long, global = true, env = "DOMPACK_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write records here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact γ and ρ (and γ_X, ρ_X with --x-set) of each input graph. The
    /// chain ρ ≤ γ_f ≤ γ is always checked.
    Compute {
        /// graph6 or JSON edge-list file; stdin when omitted or `-`.
        input: Option<PathBuf>,
        /// A named graph such as C5, P7, K4, K3,3, S5, R3x3, octahedron.
        #[arg(long, conflicts_with = "input")]
        named: Option<String>,
        /// Also report γ_f.
        #[arg(long)]
        fractional: bool,
        /// Comma-separated set X, e.g. `0,2`.
        #[arg(long)]
        x_set: Option<String>,
    },
    /// Checks γ ≤ c·ρ on generated members of a class.
    Verify {
        #[arg(long, value_enum)]
        class: VerifyClass,
        /// The constant c, an integer or fraction; defaults to the class constant.
        #[arg(long)]
        bound: Option<String>,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Vertex range such as 5..20 (for rook: range of k).
        #[arg(long)]
        n: Option<String>,
        /// Probability of each vertex joining X (planar only).
        #[arg(long, default_value_t = 0.25)]
        x_prob: f64,
    },
    /// Runs the constructive algorithm of a class and prints its certificate.
    Construct {
        #[arg(long, value_enum)]
        class: ConstructClass,
        input: Option<PathBuf>,
        #[arg(long, conflicts_with = "input")]
        named: Option<String>,
        /// Root for the tree construction.
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Hill-climbs over planar graphs for γ/ρ ≥ target.
    Search {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 500)]
        iterations: usize,
        #[arg(long, default_value_t = 1000)]
        restarts: usize,
    },
    /// Randomized check of a planar lemma.
    Lemmacheck {
        #[arg(value_enum)]
        lemma: Lemma,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value = "6..30")]
        n: String,
    },
}

fn rational_arg(s: &str) -> Result<Rational> {
    match parse(s) {
        Some(r) if r > Rational::from_integer(0.into()) => Ok(r),
        _ => bail!("expected a positive integer or fraction, got {s:?}"),
    }
}

fn load(input: Option<PathBuf>, named: Option<String>) -> Result<Vec<(Graph, Option<GenSpec>)>> {
    if let Some(name) = named {
        return Ok(vec![(gen_named(&name)?, Some(GenSpec::Named { name }))]);
    }
    Ok(parse_graphs(&read_source(input.as_deref())?)?.into_iter().map(|g| (g, None)).collect())
}

fn default_range(class: VerifyClass) -> &'static str {
    match class {
        VerifyClass::Tree => "1..50",
        VerifyClass::StronglyChordal => "2..40",
        VerifyClass::ChordalBipartite => "2..16",
        VerifyClass::HomogeneouslyOrderable => "1..14",
        VerifyClass::Planar => "3..30",
        VerifyClass::Rook => "2..5",
        VerifyClass::Any => "1..12",
    }
}

/// Ok(true) when no violation was found.
fn run(cli: Cli) -> Result<bool> {
    let mut w = sink(cli.out.as_deref())?;
    match cli.command {
        Command::Compute {
            input,
            named,
            fractional,
            x_set,
        } => {
            let mut records = Vec::new();
            for (g, spec) in load(input, named)? {
                let x = x_set.as_deref().map(|s| parse_vertex_set(s, &g)).transpose()?;
                let mut r = CampaignRecord::measure(&g, spec, x.as_ref(), true)?;
                if !fractional {
                    r.gamma_f = None;
                }
                records.push(r);
            }
            write_records(&mut *w, cli.format, &records)?;
            Ok(records.iter().all(|r| r.pass))
        }
        Command::Verify {
            class,
            bound,
            count,
            n,
            x_prob,
        } => {
            let (n_lo, n_hi) = parse_range(n.as_deref().unwrap_or(default_range(class)))?;
            let cfg = VerifyConfig {
                class,
                bound: bound.as_deref().map(rational_arg).transpose()?.unwrap_or_else(|| class.default_bound()),
                count,
                n_lo,
                n_hi,
                seed: cli.seed,
                x_prob,
            };
            let (records, summary) = cfg.run()?;
            write_records(&mut *w, cli.format, &records)?;
            eprintln!("{}", summary_line(&summary));
            Ok(summary.violations == 0)
        }
        Command::Construct {
            class,
            input,
            named,
            root,
        } => {
            let mut certs = Vec::new();
            for (g, _) in load(input, named)? {
                certs.push(construct(class, &g, root)?);
            }
            write_records(&mut *w, cli.format, &certs)?;
            Ok(certs.iter().all(|c| c.valid()))
        }
        Command::Search {
            target,
            n,
            iterations,
            restarts,
        } => {
            let out = search::run(&SearchConfig {
                target: rational_arg(&target)?,
                n,
                iterations,
                restarts,
                seed: cli.seed,
            })?;
            write_records(&mut *w, cli.format, std::slice::from_ref(&out))?;
            eprintln!(
                "search: best γ/ρ = {} (target {}) {}",
                out.best_ratio,
                out.target,
                if out.found { "reached" } else { "not reached" }
            );
            Ok(out.found)
        }
        Command::Lemmacheck { lemma, count, n } => {
            let (lo, hi) = parse_range(&n).context("--n")?;
            let (records, summary) = lemma::run(lemma, count, cli.seed, lo, hi)?;
            write_records(&mut *w, cli.format, &records)?;
            eprintln!("{}", lemma_line(&summary));
            Ok(summary.failures == 0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
