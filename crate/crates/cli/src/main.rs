//! `dsb`: solve, check and generate destructive shift bribery instances.
//!
//! Exit codes: 0 success, 1 a "no" answer (`result=NO`, `INVALID`, `INF`),
//! 2 bad input, 3 search limit exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use dsb_core::generators::{self, Generated, Graph, PriceModel};
use dsb_core::oracle::{self, BruteForce};
use dsb_core::solvers::{
    solve_copeland_bnb, solve_copeland_fpt, solve_scoring_unary_prices, solve_scoring_unary_scores,
};
use dsb_core::{io, BriberyInstance, Error, RuleSpec, ShiftVector, Solution, SolverConfig};

#[derive(Parser)]
#[command(name = "dsb", version, about = "Destructive shift bribery solver")]
struct Cli {
    /// Worker threads for independent sub-searches (1 runs everything inline).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a cheapest successful bribery within the budget.
    Solve {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        budget: u64,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Print the smallest budget that suffices, or INF.
    Margin {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Check a shift vector against the budget and the rule.
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        budget: u64,
        /// Comma-separated shifts, one per voter, or `@file`.
        #[arg(long)]
        shifts: String,
    },
    /// Exhaustive search over all shift vectors.
    Oracle {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        budget: u64,
        #[arg(long, default_value_t = BruteForce::default().node_cap)]
        node_cap: u64,
        /// Evaluate every vector instead of cutting branches over budget.
        #[arg(long)]
        no_prune: bool,
    },
    /// Write a generated instance to `<out>.elect`, `<out>.prices` and `<out>.rule`.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Args)]
struct InstanceArgs {
    /// Rule such as `borda`, `approval:2`, `scoring:3,1,0`, `copeland:1/2`, or `@file`.
    #[arg(long)]
    rule: String,
    /// Name of the despised candidate.
    #[arg(long)]
    despised: String,
    /// Election in the native format or a PrefLib profile.
    #[arg(long)]
    election: PathBuf,
    /// Price file; unit prices when absent.
    #[arg(long)]
    prices: Option<PathBuf>,
}

#[derive(Args)]
struct Tuning {
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Node budget of the Copeland branch-and-bound search.
    #[arg(long, default_value_t = SolverConfig::default().node_limit)]
    node_limit: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Pick the algorithm from the rule.
    Auto,
    /// Scoring table indexed by score.
    Scores,
    /// Scoring table indexed by price.
    Prices,
    /// Copeland branch and bound.
    Bnb,
    /// Copeland enumeration for few voters or small budgets.
    Fpt,
}

#[derive(Subcommand)]
enum GenKind {
    /// Scoring instance from a Partition sequence.
    Partition {
        /// Comma-separated positive integers with an even sum.
        #[arg(long, value_delimiter = ',', required = true)]
        seq: Vec<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Copeland instance from a graph and a clique size.
    Clique {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "1/2")]
        alpha: String,
        /// Clique vertices (by label); also writes the matching bribery to `<out>.shifts`.
        #[arg(long, value_delimiter = ',')]
        plant: Option<Vec<String>>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Copeland instance from a vertex-colored graph.
    Mcis {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "1/2")]
        alpha: String,
        /// One independent vertex per color, in color order; also writes `<out>.shifts`.
        #[arg(long, value_delimiter = ',')]
        plant: Option<Vec<String>>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Uniform random profile.
    Random {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `unit`, `aon:MAX` or `list:MAX`.
        #[arg(long = "price-model", default_value = "unit")]
        price_model: String,
        /// Rule used to pick the despised candidate.
        #[arg(long)]
        rule: String,
        #[arg(long)]
        budget: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            match err.downcast_ref::<Error>() {
                Some(Error::NodeLimit { .. }) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let mut cfg = SolverConfig::default();
    if cli.jobs > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .context("starting the worker pool")?;
        cfg.parallel = true;
    }

    match cli.command {
        Command::Solve { instance, budget, tuning } => {
            let (inst, rule) = load(&instance, budget)?;
            cfg.node_limit = tuning.node_limit;
            let sol = run_method(&inst, &rule, tuning.method, &cfg)?;
            Ok(report(&sol))
        }
        Command::Margin { instance, tuning } => {
            let (inst, rule) = load(&instance, u64::MAX - 1)?;
            cfg.node_limit = tuning.node_limit;
            match run_method(&inst, &rule, tuning.method, &cfg)?.cost() {
                Some(c) => {
                    println!("{c}");
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("INF");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Verify { instance, budget, shifts } => {
            let (inst, rule) = load(&instance, budget)?;
            let shifts: ShiftVector = at_file(&shifts)?.parse()?;
            if oracle::verify(&inst, &rule, &shifts)? {
                println!("VALID");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("INVALID");
                Ok(ExitCode::from(1))
            }
        }
        Command::Oracle { instance, budget, node_cap, no_prune } => {
            let (inst, rule) = load(&instance, budget)?;
            let opts = BruteForce { node_cap, prune: !no_prune };
            Ok(report(&oracle::brute_force(&inst, &rule, opts)?))
        }
        Command::Gen { kind } => generate(kind),
    }
}

fn run_method(inst: &BriberyInstance, rule: &RuleSpec, method: Method, cfg: &SolverConfig) -> anyhow::Result<Solution> {
    let m = inst.num_candidates();
    let sol = match (method, rule) {
        (Method::Auto, _) => dsb_core::solve_with(inst, rule, cfg)?,
        (Method::Scores | Method::Prices, RuleSpec::Scoring(_) | RuleSpec::Borda | RuleSpec::KApproval(_)) => {
            rule.validate(m)?;
            let vector = rule.scoring_vector(m).context("scoring vector")?;
            if method == Method::Scores {
                solve_scoring_unary_scores(inst, &vector)?
            } else {
                solve_scoring_unary_prices(inst, &vector)?
            }
        }
        (Method::Bnb, RuleSpec::Copeland(alpha)) => solve_copeland_bnb(inst, *alpha, cfg.node_limit)?,
        (Method::Fpt, RuleSpec::Copeland(alpha)) => solve_copeland_fpt(inst, *alpha, cfg)?,
        _ => bail!(Error::Input(format!("this method does not apply to rule {rule}"))),
    };
    Ok(sol)
}

fn report(sol: &Solution) -> ExitCode {
    match sol {
        Solution::Feasible { cost, shifts } => {
            println!("result=YES cost={cost} shifts={shifts}");
            ExitCode::SUCCESS
        }
        Solution::Infeasible => {
            println!("result=NO");
            ExitCode::from(1)
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// The argument itself, or the trimmed contents of the file after `@`.
fn at_file(arg: &str) -> anyhow::Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => Ok(read(Path::new(path))?.trim().to_string()),
        None => Ok(arg.to_string()),
    }
}

fn load(args: &InstanceArgs, budget: u64) -> anyhow::Result<(BriberyInstance, RuleSpec)> {
    let rule: RuleSpec = at_file(&args.rule)?.parse()?;
    let election = io::parse_election(&read(&args.election)?)
        .with_context(|| format!("in {}", args.election.display()))?;
    rule.validate(election.num_candidates())?;
    let d = election.require_candidate(&args.despised)?;
    let inst = match &args.prices {
        Some(path) => {
            let prices = io::parse_prices(&read(path)?).with_context(|| format!("in {}", path.display()))?;
            BriberyInstance::new(election, d, budget, prices)?
        }
        None => BriberyInstance::with_unit_prices(election, d, budget)?,
    };
    Ok((inst, rule))
}

fn generate(kind: GenKind) -> anyhow::Result<ExitCode> {
    let (generated, out, shifts) = match kind {
        GenKind::Partition { seq, out } => (generators::partition(&seq)?, out, None),
        GenKind::Clique { graph, k, alpha, plant, out } => {
            let g = load_graph(&graph)?;
            let generated = generators::clique(&g, k, dsb_core::rules::parse_alpha(&alpha)?)?;
            let shifts = match plant {
                Some(labels) => Some(generators::clique_bribery(&g, &vertices(&g, &labels)?)?),
                None => None,
            };
            (generated, out, shifts)
        }
        GenKind::Mcis { graph, alpha, plant, out } => {
            let g = load_graph(&graph)?;
            let generated = generators::mcis(&g, dsb_core::rules::parse_alpha(&alpha)?)?;
            let shifts = match plant {
                Some(labels) => Some(generators::mcis_bribery(&g, &vertices(&g, &labels)?)?),
                None => None,
            };
            (generated, out, shifts)
        }
        GenKind::Random { m, n, seed, price_model, rule, budget, out } => {
            let rule: RuleSpec = at_file(&rule)?.parse()?;
            let model = parse_model(&price_model)?;
            let instance = generators::random(m, n, seed, model, &rule, budget)?;
            (Generated { instance, rule }, out, None)
        }
    };

    let inst = &generated.instance;
    let path = |ext: &str| {
        let mut p = out.clone().into_os_string();
        p.push(format!(".{ext}"));
        PathBuf::from(p)
    };
    let write = |ext: &str, text: String| -> anyhow::Result<PathBuf> {
        let p = path(ext);
        fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?;
        Ok(p)
    };
    let elect = write("elect", io::write_election(&inst.election))?;
    let prices = write("prices", io::write_prices(&inst.prices))?;
    let rule = write("rule", format!("{}\n", generated.rule))?;
    print!(
        "election={} prices={} rule=@{} despised={} budget={}",
        elect.display(),
        prices.display(),
        rule.display(),
        inst.election.name(inst.despised),
        inst.budget
    );
    if let Some(s) = shifts {
        print!(" shifts=@{}", write("shifts", format!("{s}\n"))?.display());
    }
    println!();
    Ok(ExitCode::SUCCESS)
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    io::parse_graph(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn vertices(g: &Graph, labels: &[String]) -> anyhow::Result<Vec<usize>> {
    labels
        .iter()
        .map(|l| {
            g.labels()
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::Input(format!("unknown vertex {l:?}")).into())
        })
        .collect()
}

fn parse_model(s: &str) -> anyhow::Result<PriceModel> {
    let bad = || Error::Input(format!("price model {s:?} is not `unit`, `aon:MAX` or `list:MAX`"));
    let model = match s.split_once(':') {
        None if s == "unit" => PriceModel::Unit,
        Some(("aon", max)) => PriceModel::AllOrNothing(max.parse().map_err(|_| bad())?),
        Some(("list", max)) => PriceModel::Listed(max.parse().map_err(|_| bad())?),
        _ => return Err(bad().into()),
    };
    Ok(model)
}
