//! `ballot`: command-line surface over the ballot-problem toolkit.
//!
//! Every subcommand prints human-readable text by default and a stable
//! JSON encoding under `--json`; `scan` always streams one JSON object
//! per line. Exact rationals appear in JSON as
//! `{"num": "...", "den": "...", "decimal": ...}` where the decimal field
//! is a convenience rendering only. Exit codes identify the error kind;
//! the error name is printed on stderr.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ballot_core::bounds::{
    classical_closed_forms, theorem1_bounds, theorem2_bounds, tightness_scan, weighted_bounds,
    BoundPair, TightnessOutcome,
};
use ballot_core::cycle::{analyze_rotations, rotation_count_bounds_check};
use ballot_core::enumeration::{
    count_exact_weighted_with_budget, count_exact_with_budget, WeightedBallotSpec,
    DEFAULT_ENUM_BUDGET,
};
use ballot_core::montecarlo::sample_probability_with_workers;
use ballot_core::takacs::{takacs_coefficients, takacs_probability};
use ballot_core::{BallotSpec, Error, Ratio, VoteSequence};

const BUDGET_ENV: &str = "BALLOT_ENUM_BUDGET";

#[derive(Parser)]
#[command(
    name = "ballot",
    version,
    about = "Exact probabilities, bounds, and rotation analysis for the generalized ballot problem"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact P and P* by exhaustive enumeration.
    Exact(InstanceArgs),
    /// Floor-expression bounds on P and P*, plus integer-ratio closed forms.
    Bounds(InstanceArgs),
    /// Exact P through the series expansion (requires mu >= 1).
    Takacs(InstanceArgs),
    /// Canonical cute rotation and offset analysis of one sequence.
    Cycle(CycleArgs),
    /// Exact probabilities and bounds with weighted B votes.
    Weighted(WeightedArgs),
    /// Seeded Monte Carlo estimates of P and P*.
    Sample(SampleArgs),
    /// Stream exact bound-tightness records over a grid (one JSON line each).
    Scan(ScanArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// Number of A votes.
    #[arg(long)]
    a: u64,
    /// Number of B votes.
    #[arg(long)]
    b: u64,
    /// Ratio, as "p/q", an integer, or a finite decimal.
    #[arg(long)]
    mu: Ratio,
}

impl InstanceArgs {
    fn spec(&self) -> Result<BallotSpec, Error> {
        BallotSpec::new(self.a, self.b, self.mu.clone())
    }
}

#[derive(Args)]
struct CycleArgs {
    /// Counting sequence over the letters A and B, e.g. "AABAB".
    #[arg(long)]
    sequence: VoteSequence,
    #[arg(long)]
    mu: Ratio,
}

#[derive(Args)]
struct WeightedArgs {
    /// Number of A votes.
    #[arg(long)]
    a: u64,
    /// Comma-separated positive weights of B's votes; omit for none.
    #[arg(long, value_delimiter = ',')]
    weights: Vec<Ratio>,
    #[arg(long)]
    mu: Ratio,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long)]
    a: u64,
    #[arg(long)]
    b: u64,
    #[arg(long)]
    mu: Ratio,
    /// Number of sampled sequences.
    #[arg(long)]
    n: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; part of the reproducibility contract.
    #[arg(long, default_value_t = 1)]
    workers: u64,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 0)]
    a_min: u64,
    #[arg(long)]
    a_max: u64,
    #[arg(long, default_value_t = 0)]
    b_min: u64,
    #[arg(long)]
    b_max: u64,
    /// Comma-separated ratios to scan.
    #[arg(long, value_delimiter = ',', required = true)]
    mu_list: Vec<Ratio>,
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {}: {err}", err.name());
        std::process::exit(match err {
            Error::Parse(_) => 2,
            Error::BudgetExceeded { .. } => 3,
            Error::DegenerateRecurrence { .. } => 4,
            Error::DomainViolation(_) => 5,
            Error::NotRotatableToCute => 6,
            Error::Precondition(_) => 7,
        });
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let budget = enumeration_budget()?;
    match cli.command {
        Command::Exact(args) => run_exact(&args, cli.json, budget),
        Command::Bounds(args) => run_bounds(&args, cli.json),
        Command::Takacs(args) => run_takacs(&args, cli.json),
        Command::Cycle(args) => run_cycle(&args, cli.json),
        Command::Weighted(args) => run_weighted(&args, cli.json, budget),
        Command::Sample(args) => run_sample(&args, cli.json),
        Command::Scan(args) => run_scan(&args, budget),
    }
}

/// Enumeration budget, overridable through the environment.
fn enumeration_budget() -> Result<u64, Error> {
    match std::env::var(BUDGET_ENV) {
        Ok(raw) => raw
            .parse()
            .map_err(|_| Error::Parse(format!("{BUDGET_ENV} must be a nonnegative integer, got {raw:?}"))),
        Err(_) => Ok(DEFAULT_ENUM_BUDGET),
    }
}

fn ratio_json(r: &Ratio) -> Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
        "decimal": r.to_f64(),
    })
}

fn pair_json(pair: &BoundPair) -> Value {
    json!({ "lower": ratio_json(&pair.lower), "upper": ratio_json(&pair.upper) })
}

fn instance_json(spec: &BallotSpec) -> Value {
    json!({ "a": spec.a, "b": spec.b, "mu": ratio_json(&spec.mu) })
}

/// Print one JSON line, exiting quietly when a downstream pipe has
/// closed (e.g. `ballot scan ... | head`).
fn emit(value: Value) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(err) = writeln!(out, "{value}") {
        if err.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("failed writing to stdout: {err}");
    }
}

fn run_exact(args: &InstanceArgs, json: bool, budget: u64) -> Result<(), Error> {
    let spec = args.spec()?;
    let counts = count_exact_with_budget(&spec, budget)?;
    if json {
        let mut object = instance_json(&spec);
        object["total"] = json!(counts.total);
        object["desirable"] = json!(counts.desirable);
        object["cute"] = json!(counts.cute);
        object["p"] = ratio_json(&counts.p);
        object["p_star"] = ratio_json(&counts.p_star);
        emit(object);
    } else {
        println!("instance: a={} b={} mu={}", spec.a, spec.b, spec.mu);
        println!("sequences: {}", counts.total);
        println!("desirable: {:<12} P  = {}", counts.desirable, counts.p);
        println!("cute:      {:<12} P* = {}", counts.cute, counts.p_star);
    }
    Ok(())
}

fn run_bounds(args: &InstanceArgs, json: bool) -> Result<(), Error> {
    let spec = args.spec()?;
    let theorem1 = theorem1_bounds(&spec);
    let theorem2 = theorem2_bounds(&spec);
    if let (Err(_), Err(e2)) = (&theorem1, &theorem2) {
        return Err(e2.clone());
    }
    let forms = classical_closed_forms(&spec);
    if json {
        let mut object = instance_json(&spec);
        object["theorem1"] = theorem1.as_ref().map(pair_json).unwrap_or(Value::Null);
        object["theorem2"] = theorem2.as_ref().map(pair_json).unwrap_or(Value::Null);
        object["closed_forms"] = forms
            .as_ref()
            .map(|f| json!({ "p": ratio_json(&f.p), "p_star": ratio_json(&f.p_star) }))
            .unwrap_or(Value::Null);
        emit(object);
    } else {
        println!("instance: a={} b={} mu={}", spec.a, spec.b, spec.mu);
        match &theorem1 {
            Ok(pair) => println!("P  in [{}, {}]  (strict-lead bounds)", pair.lower, pair.upper),
            Err(_) => println!("P  bounds not applicable (needs a > mu*b)"),
        }
        match &theorem2 {
            Ok(pair) => println!("P* in [{}, {}]  (weak-lead bounds)", pair.lower, pair.upper),
            Err(_) => println!("P* bounds not applicable (needs a >= mu*b)"),
        }
        if let Some(f) = &forms {
            println!("closed forms: P = {}  P* = {}", f.p, f.p_star);
        }
    }
    Ok(())
}

fn run_takacs(args: &InstanceArgs, json: bool) -> Result<(), Error> {
    let spec = args.spec()?;
    let coefficients = takacs_coefficients(&spec.mu, spec.b)?;
    let p = takacs_probability(&spec)?;
    if json {
        let mut object = instance_json(&spec);
        object["p"] = ratio_json(&p);
        object["coefficients"] = Value::Array(coefficients.values().iter().map(ratio_json).collect());
        emit(object);
    } else {
        println!("instance: a={} b={} mu={}", spec.a, spec.b, spec.mu);
        println!("P = {p}  (series evaluation)");
        let rendered: Vec<String> = coefficients.values().iter().map(Ratio::to_string).collect();
        println!("coefficients C_0..C_{}: {}", spec.b, rendered.join(", "));
    }
    Ok(())
}

fn run_cycle(args: &CycleArgs, json: bool) -> Result<(), Error> {
    let analysis = analyze_rotations(&args.sequence, &args.mu)?;
    let report = rotation_count_bounds_check(&args.sequence, &args.mu);
    if json {
        emit(json!({
            "sequence": args.sequence.to_string(),
            "mu": ratio_json(&args.mu),
            "pivot_index": analysis.pivot_index,
            "base_sequence": analysis.base_sequence.to_string(),
            "prefix_sums": analysis.prefix_sums.iter().map(ratio_json).collect::<Vec<_>>(),
            "cute_rotation_offsets": analysis.cute_rotation_offsets,
            "desirable_rotation_offsets": analysis.desirable_rotation_offsets,
            "rotation_counts": {
                "total": report.total_rotations,
                "cute": report.cute_rotations,
                "desirable": report.desirable_rotations,
                "cute_bound": report.cute_bound,
                "desirable_bound": report.desirable_bound,
                "passed": report.passed,
            },
        }));
    } else {
        println!("sequence: {}  mu={}", args.sequence, args.mu);
        println!(
            "canonical rotation: pivot {} -> {}",
            analysis.pivot_index, analysis.base_sequence
        );
        let sums: Vec<String> = analysis.prefix_sums.iter().map(Ratio::to_string).collect();
        println!("prefix sums: {}", sums.join(", "));
        println!("cute offsets: {:?}", analysis.cute_rotation_offsets);
        println!("desirable offsets: {:?}", analysis.desirable_rotation_offsets);
        let render = |bound: Option<u64>| match bound {
            Some(n) => format!(">= {n}"),
            None => "n/a".to_string(),
        };
        println!(
            "rotation counts: cute {} ({}), desirable {} ({})",
            report.cute_rotations,
            render(report.cute_bound),
            report.desirable_rotations,
            render(report.desirable_bound)
        );
    }
    Ok(())
}

fn run_weighted(args: &WeightedArgs, json: bool, budget: u64) -> Result<(), Error> {
    let wspec = WeightedBallotSpec::new(args.a, args.weights.clone(), args.mu.clone())?;
    let counts = count_exact_weighted_with_budget(&wspec, budget)?;
    let bounds = weighted_bounds(&wspec);
    if json {
        emit(json!({
            "a": wspec.a,
            "mu": ratio_json(&wspec.mu),
            "weights": wspec.weights().iter().map(ratio_json).collect::<Vec<_>>(),
            "b": ratio_json(&wspec.b()),
            "b_prime": wspec.b_prime(),
            "total": counts.total,
            "desirable": counts.desirable,
            "cute": counts.cute,
            "p": ratio_json(&counts.p),
            "p_star": ratio_json(&counts.p_star),
            "bounds": {
                "lower": ratio_json(&bounds.lower),
                "upper": ratio_json(&bounds.upper),
                "integer_upper": bounds.integer_upper.as_ref().map(ratio_json).unwrap_or(Value::Null),
            },
        }));
    } else {
        let rendered: Vec<String> = wspec.weights().iter().map(Ratio::to_string).collect();
        println!(
            "instance: a={} weights=[{}] (b={}, b'={}) mu={}",
            wspec.a,
            rendered.join(", "),
            wspec.b(),
            wspec.b_prime(),
            wspec.mu
        );
        println!("arrangements: {}", counts.total);
        println!("desirable: {:<12} P  = {}", counts.desirable, counts.p);
        println!("cute:      {:<12} P* = {}", counts.cute, counts.p_star);
        println!("P bounds: [{}, {}]", bounds.lower, bounds.upper);
        if let Some(upper) = &bounds.integer_upper {
            println!("integer-weight upper bound: {upper}");
        }
    }
    Ok(())
}

fn run_sample(args: &SampleArgs, json: bool) -> Result<(), Error> {
    let spec = BallotSpec::new(args.a, args.b, args.mu.clone())?;
    let est = sample_probability_with_workers(&spec, args.n, args.seed, args.workers)?;
    if json {
        let mut object = instance_json(&spec);
        object["n"] = json!(est.n);
        object["seed"] = json!(est.seed);
        object["workers"] = json!(est.workers);
        object["desirable"] = json!(est.desirable);
        object["cute"] = json!(est.cute);
        object["p_hat"] = json!(est.p_hat);
        object["p_star_hat"] = json!(est.p_star_hat);
        object["std_err_p"] = json!(est.std_err_p);
        object["std_err_p_star"] = json!(est.std_err_p_star);
        emit(object);
    } else {
        println!("instance: a={} b={} mu={}", spec.a, spec.b, spec.mu);
        println!("samples: {}  seed: {}  workers: {}", est.n, est.seed, est.workers);
        println!("P  ~ {:.6} +- {:.6}  ({} desirable)", est.p_hat, est.std_err_p, est.desirable);
        println!(
            "P* ~ {:.6} +- {:.6}  ({} cute)",
            est.p_star_hat, est.std_err_p_star, est.cute
        );
    }
    Ok(())
}

fn run_scan(args: &ScanArgs, budget: u64) -> Result<(), Error> {
    if args.a_min > args.a_max || args.b_min > args.b_max {
        return Err(Error::Parse("empty scan range".into()));
    }
    let records = tightness_scan(
        args.a_min..=args.a_max,
        args.b_min..=args.b_max,
        &args.mu_list,
        budget,
    );
    for record in records {
        let mut object = instance_json(&record.spec);
        match &record.outcome {
            TightnessOutcome::Evaluated(report) => {
                object["status"] = json!("ok");
                object["total"] = json!(report.counts.total);
                object["desirable"] = json!(report.counts.desirable);
                object["cute"] = json!(report.counts.cute);
                object["p"] = ratio_json(&report.counts.p);
                object["p_star"] = ratio_json(&report.counts.p_star);
                object["theorem1"] = report.theorem1.as_ref().map(pair_json).unwrap_or(Value::Null);
                object["theorem2"] = report.theorem2.as_ref().map(pair_json).unwrap_or(Value::Null);
                object["tight"] = json!({
                    "theorem1_lower": report.t1_lower_tight,
                    "theorem1_upper": report.t1_upper_tight,
                    "theorem2_lower": report.t2_lower_tight,
                    "theorem2_upper": report.t2_upper_tight,
                });
            }
            TightnessOutcome::Skipped { needed, budget } => {
                object["status"] = json!("skipped");
                object["needed"] = json!(needed.to_string());
                object["budget"] = json!(budget);
            }
        }
        emit(object);
    }
    Ok(())
}
