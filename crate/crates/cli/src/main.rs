mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use gptau_core::algebra::{parse_algebra, DEFAULT_LENGTH_CAP};
use gptau_core::homology::DEFAULT_EXT_BOUND;
use gptau_core::tautilt::DEFAULT_BUDGET;
use gptau_core::{Algebra, AlgebraSpec, Field, FieldChoice, Fp, Rational};

use crate::cache::GraphCache;
use crate::commands::{Output, RunConfig};

/// Primes with a compiled `F_p`.
const PRIMES: [u64; 7] = [2, 3, 5, 7, 11, 13, 32003];

#[derive(Parser)]
#[command(version, about = "Support τ-tilting pairs and Gorenstein projective modules over bound quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Scalar field: Q or Fp:<p>; defaults to the `field:` line of the input, then Q
    #[arg(long, global = true)]
    field: Option<FieldChoice>,

    /// Highest Ext degree probed
    #[arg(long, global = true, default_value_t = DEFAULT_EXT_BOUND, value_parser = positive)]
    ext_bound: usize,

    /// Longest path considered while computing the basis
    #[arg(long, global = true, default_value_t = DEFAULT_LENGTH_CAP, value_parser = positive)]
    length_cap: usize,

    /// Maximum number of pairs enumerated
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = positive)]
    budget: usize,

    #[arg(long, global = true, value_enum, default_value_t = Emit::Text)]
    emit: Emit,

    /// Directory for cached exchange graphs
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, basis, self-injectivity and homological probes
    Check { algebra: String },
    /// Exchange graph of support τ-tilting pairs; exits 2 when the budget runs out
    Enumerate { algebra: String },
    /// GP support τ-tilting pairs, GP τ-rigid modules and torsion classes
    GpReport { algebra: String },
    /// Matching of pairs over Λ and Λ^op under the dagger bijection
    Dagger { algebra: String },
    /// Bongartz completion of a τ-rigid module: S<v>, P<v>, I<v>, Lambda, sums with `+`, or a JSON file
    Bongartz { algebra: String, module: String },
    /// CM-τ-tilting finiteness over Λ and Λ^op
    CmFinite { algebra: String },
    /// Reproduce the worked examples and run the property suites
    PaperExamples {
        /// Directory of `.alg` files replacing bundled algebras of the same name
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long, default_value_t = 1000)]
        random_cases: usize,
        #[arg(long, default_value_t = 0x9e37_79b9)]
        seed: u64,
    },
}

/// A file on disk, or a bundled algebra such as `3d` or `examples/3d.alg`.
fn read_algebra(name: &str) -> Result<AlgebraSpec> {
    let path = PathBuf::from(name);
    let text = if path.is_file() {
        std::fs::read_to_string(&path).with_context(|| format!("reading {name}"))?
    } else if let Some(t) = gptau_core::registry::bundled(name) {
        t.to_string()
    } else {
        bail!("{name}: no such file or bundled algebra");
    };
    parse_algebra(&text).with_context(|| format!("parsing {name}"))
}

fn run<F: Field>(cli: &Cli, spec: Option<&AlgebraSpec>) -> Result<Output> {
    let cfg = RunConfig {
        ext_bound: cli.ext_bound,
        length_cap: cli.length_cap,
        budget: cli.budget,
        cache: GraphCache::new(cli.cache.clone()),
    };
    let build = || -> Result<Arc<Algebra<F>>> {
        let spec = spec.ok_or_else(|| anyhow!("no algebra given"))?;
        Ok(spec.build_with_cap::<F>(cfg.length_cap)?)
    };
    match &cli.command {
        Command::Check { .. } => commands::check(&build()?, &cfg),
        Command::Enumerate { .. } => commands::enumerate(&build()?, &cfg),
        Command::GpReport { .. } => commands::gp_report(&build()?, &cfg),
        Command::Dagger { .. } => commands::dagger_report(&build()?, &cfg),
        Command::Bongartz { module, .. } => commands::bongartz(&build()?, module, &cfg),
        Command::CmFinite { .. } => commands::cm_finite(&build()?, &cfg),
        Command::PaperExamples { fixtures, random_cases, seed } => {
            commands::paper_examples::<F>(&cfg, fixtures.as_ref(), *random_cases, *seed)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let spec = match &cli.command {
        Command::Check { algebra }
        | Command::Enumerate { algebra }
        | Command::GpReport { algebra }
        | Command::Dagger { algebra }
        | Command::Bongartz { algebra, .. }
        | Command::CmFinite { algebra } => Some(read_algebra(algebra)?),
        Command::PaperExamples { .. } => None,
    };
    let field = cli
        .field
        .or_else(|| spec.as_ref().and_then(|s| s.field))
        .unwrap_or_default();
    let spec = spec.as_ref();
    match field {
        FieldChoice::Rational => run::<Rational>(cli, spec),
        FieldChoice::Prime(2) => run::<Fp<2>>(cli, spec),
        FieldChoice::Prime(3) => run::<Fp<3>>(cli, spec),
        FieldChoice::Prime(5) => run::<Fp<5>>(cli, spec),
        FieldChoice::Prime(7) => run::<Fp<7>>(cli, spec),
        FieldChoice::Prime(11) => run::<Fp<11>>(cli, spec),
        FieldChoice::Prime(13) => run::<Fp<13>>(cli, spec),
        FieldChoice::Prime(32003) => run::<Fp<32003>>(cli, spec),
        FieldChoice::Prime(p) => bail!("F_{p} is not available; supported primes are {PRIMES:?}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::FAILURE;
        }
    };
    match cli.emit {
        Emit::Text => print!("{}", out.text),
        Emit::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON value serializes")),
        Emit::Dot => match &out.dot {
            Some(d) => print!("{d}"),
            None => {
                eprintln!("error: this command has no DOT output");
                return ExitCode::FAILURE;
            }
        },
    }
    if out.status != commands::Status::Ok {
        eprint!("{}", match out.status {
            commands::Status::Incomplete => "incomplete: budget exhausted or verdict undecided\n",
            _ => "failed: see the report above\n",
        });
    }
    ExitCode::from(out.status.code())
}
