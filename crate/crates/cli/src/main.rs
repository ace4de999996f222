use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use covquot::cohomology::{h0, h1_space, h2_space, CochainSpace};
use covquot::descriptor::{GroupDescriptor, ModuleDescriptor, RamificationDescriptor};
use covquot::gos::{euler_char_affine, euler_char_projective, swan, PointData};
use covquot::group::{derived_series, is_solvable, min_generators_budgeted, DEFAULT_GROUP_SIZE_CAP, DEFAULT_TUPLE_BUDGET};
use covquot::module::DEFAULT_SPIN_CAP;
use covquot::realizability::{realizability_check_scoped, CurveSignature, Scope, TowerPlan};
use covquot::verify;

#[derive(Parser, Debug)]
#[command(name = "covquot", version, about = "Group cohomology, dévissage towers and realizability certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input JSON: a file path, or the document itself. Read from stdin when omitted.
    #[arg(long, global = true)]
    input: Option<String>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Largest group the closure may build.
    #[arg(long, global = true, default_value_t = DEFAULT_GROUP_SIZE_CAP, value_parser = positive_usize)]
    budget_group_size: usize,

    /// Largest number of candidate tuples in generator searches.
    #[arg(long, global = true, default_value_t = DEFAULT_TUPLE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget_tuples: u64,

    /// Largest module (number of vectors) the irreducibility test may spin.
    #[arg(long, global = true, default_value_t = DEFAULT_SPIN_CAP, value_parser = positive_u128)]
    budget_spin: u128,

    /// Decide realizability for non-solvable groups too.
    #[arg(long, global = true)]
    override_nonsolvable: bool,

    /// Progress on stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Order, minimal generator count, derived series and solvability.
    GroupInfo,
    /// Cohomology dimensions of a module, and the class of an optional cocycle.
    Cohomology,
    /// Whether a group is a quotient of the fundamental group.
    Realizability,
    /// Layer-by-layer certificate through the dévissage tower.
    Tower,
    /// Swan conductors and Euler characteristic of a sheaf on a curve.
    Gos,
    /// The full property suite over the built-in catalog.
    VerifySuite,
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_u128(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CohomologyInput {
    module: ModuleDescriptor,
    /// A 2-cochain in the normalized layout, to be classified.
    cocycle: Option<Vec<u32>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RealizabilityInput {
    signature: CurveSignature,
    group: GroupDescriptor,
    override_nonsolvable: Option<bool>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TowerInput {
    signature: CurveSignature,
    group: GroupDescriptor,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GosInput {
    genus: u64,
    /// Removed points; when given, the Euler characteristic is that of the
    /// affine curve and `points` describe the ramification at the punctures.
    punctures: Option<u64>,
    characteristic: Option<u64>,
    dim_generic: usize,
    #[serde(default)]
    points: Vec<RamificationDescriptor>,
}

#[derive(Serialize)]
struct GroupInfo {
    order: usize,
    n: usize,
    solvable: bool,
    abelian: bool,
    derived_series: Vec<usize>,
}

fn read_input(cli: &Cli) -> anyhow::Result<String> {
    match &cli.input {
        Some(s) if s.trim_start().starts_with(['{', '[']) => Ok(s.clone()),
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}")),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

fn parse<T: for<'de> Deserialize<'de>>(cli: &Cli) -> anyhow::Result<T> {
    let text = read_input(cli)?;
    serde_json::from_str(&text).context("invalid input document")
}

fn scope(cli: &Cli, override_nonsolvable: bool) -> Scope {
    Scope {
        override_nonsolvable,
        tuple_budget: cli.budget_tuples,
    }
}

fn group_info(cli: &Cli) -> anyhow::Result<Value> {
    let d: GroupDescriptor = parse(cli)?;
    let g = d.build(cli.budget_group_size)?;
    let info = GroupInfo {
        order: g.order(),
        n: min_generators_budgeted(&g, cli.budget_tuples)?.count,
        solvable: is_solvable(&g),
        abelian: g.is_abelian(),
        derived_series: derived_series(&g).iter().map(|s| s.order()).collect(),
    };
    Ok(serde_json::to_value(info)?)
}

fn cohomology(cli: &Cli) -> anyhow::Result<Value> {
    let input: CohomologyInput = parse(cli)?;
    if input.module.group.is_none() {
        bail!("the module needs a group");
    }
    let m = input.module.build(None, cli.budget_group_size)?;
    let h1 = h1_space(&m);
    let h2 = Arc::new(h2_space(&m));
    let mut out = json!({
        "order": m.group().order(),
        "l": m.l(),
        "dim": m.dim(),
        "h0": h0(&m),
        "h1": h1.dim(),
        "h2": h2.dim(),
        "irreducible": m.is_irreducible_capped(cli.budget_spin)?,
    });
    if let Some(cocycle) = input.cocycle {
        let class = CochainSpace::class_of(&h2, &cocycle)?;
        out["class"] = json!({
            "coordinates": class.coordinates(),
            "split": class.is_zero(),
        });
    }
    Ok(out)
}

fn realizability(cli: &Cli) -> anyhow::Result<Value> {
    let input: RealizabilityInput = parse(cli)?;
    let g = input.group.build(cli.budget_group_size)?;
    let allow = cli.override_nonsolvable || input.override_nonsolvable.unwrap_or(false);
    Ok(serde_json::to_value(realizability_check_scoped(&input.signature, &g, scope(cli, allow))?)?)
}

fn tower(cli: &Cli) -> anyhow::Result<Value> {
    let input: TowerInput = parse(cli)?;
    input.signature.validate()?;
    let g = input.group.build(cli.budget_group_size)?;
    let plan = TowerPlan::with_budget(&g, input.signature.p, cli.budget_tuples)?;
    Ok(serde_json::to_value(plan.certificate(&input.signature)?)?)
}

fn gos(cli: &Cli) -> anyhow::Result<Value> {
    let input: GosInput = parse(cli)?;
    let points = input
        .points
        .iter()
        .map(|p| p.build(cli.budget_group_size))
        .collect::<covquot::Result<Vec<PointData>>>()?;
    let report = match input.punctures {
        Some(r) => {
            let sig = CurveSignature::new(input.genus, r, input.characteristic.unwrap_or(0))?;
            let swans: Vec<_> = points.iter().map(|x| swan(&x.filtration)).collect();
            euler_char_affine(&sig, input.dim_generic, &swans)?
        }
        None => euler_char_projective(input.genus, input.dim_generic, &points)?,
    };
    Ok(serde_json::to_value(report)?)
}

fn verify_suite(cli: &Cli) -> anyhow::Result<(Value, bool)> {
    let census = verify::census();
    if cli.verbose > 0 {
        eprintln!("catalog: {census:?}");
    }
    let mut outcomes = Vec::new();
    for (id, name, run) in verify::CRITERIA {
        if cli.verbose > 0 {
            eprintln!("running {id} {name}");
        }
        let o = run();
        if cli.verbose > 0 {
            eprintln!("{} {id} {name} ({} checked, {} failed)", if o.passed { "PASS" } else { "FAIL" }, o.checked, o.failed);
        }
        outcomes.push(o);
    }
    let passed = outcomes.iter().all(|o| o.passed);
    Ok((json!({ "catalog": census, "criteria": outcomes, "passed": passed }), passed))
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let (report, ok) = match cli.command {
        Command::GroupInfo => (group_info(cli)?, true),
        Command::Cohomology => (cohomology(cli)?, true),
        Command::Realizability => (realizability(cli)?, true),
        Command::Tower => (tower(cli)?, true),
        Command::Gos => (gos(cli)?, true),
        Command::VerifySuite => verify_suite(cli)?,
    };
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    match &cli.output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
