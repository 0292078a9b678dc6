mod repro;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use clawpart::{
    approx_min_partition, claw_number, exact_min_partition, exists_good_partition, independence_number, kappa_formula,
    kappa_hat_upper_generic, parse_family, parse_partition, partition_by_theta, partition_claw_bounded,
    partition_cluster_mod_w, partition_optimal_kappa, partition_w3_to_v2, partition_w5_to_v3, sweepline_cover,
    verify_partition, write_family, write_partition, ConstructionSpec, IntervalFamily, Partition, SearchOptions,
    SearchResult,
};
use serde_json::{json, Value};

/// Exit codes: 0 success, 1 failed check, 2 usage or parse error, 3 timeout.
#[derive(Debug)]
pub enum Failure {
    Fail(String),
    Usage(String),
    Timeout(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Fail(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Timeout(_) => 3,
        }
    }
}

impl From<clawpart::Error> for Failure {
    fn from(e: clawpart::Error) -> Self {
        match e {
            clawpart::Error::Parse { .. } | clawpart::Error::Precondition(_) => Failure::Usage(e.to_string()),
            _ => Failure::Fail(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;

#[derive(Parser)]
#[command(
    name = "clawpart",
    version,
    about = "Partition interval graphs into parts of bounded claw number"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated family in the interval text format.
    Gen(GenArgs),
    /// Print n, alpha, theta, psi and kappa(n, v) for v = 1..5.
    Stats(StatsArgs),
    /// Run a constructive partition algorithm.
    Partition(PartitionArgs),
    /// Decide whether a good t-partition exists.
    Search(SearchArgs),
    /// Smallest number of parts with claw number at most v.
    Exact(ExactArgs),
    /// Layer-peeling approximation with a lower-bound certificate.
    Approx(ApproxArgs),
    /// Check a partition file against a family.
    Verify(VerifyArgs),
    /// Rerun one scripted check and report PASS/FAIL/TIMEOUT.
    Repro(repro::ReproArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    A,
    J3,
    J4,
    J5,
    J6,
    Gardi,
    Random,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    v: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    range: Option<i64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output file; standard output if omitted.
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// For `--kind gardi`: also write its two-part partition here.
    #[arg(long)]
    partition_out: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    /// Family file, or `-` for standard input.
    input: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Kappa,
    Theta,
    Clawbound,
    W3v2,
    W5v3,
    Modw,
    Approx,
}

#[derive(Args)]
struct PartitionArgs {
    input: PathBuf,
    #[arg(long, value_enum)]
    algo: Algo,
    /// Claw bound per part. Fixed to 2, 3 and 1 for w3v2, w5v3 and modw.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    v: Option<u64>,
    /// Number of cluster classes for modw; defaults to the measured psi.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    w: Option<u64>,
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Print the summary as JSON on standard output.
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct SearchArgs {
    input: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    v: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    t: u64,
    /// Wall-clock limit such as `90s`, `10m` or `1h`; bare numbers are seconds.
    #[arg(long, value_parser = parse_budget)]
    budget: Option<Duration>,
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long)]
    json: bool,
    /// Write the partition here when one is found.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExactArgs {
    input: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    v: u64,
    #[arg(long, value_parser = parse_budget)]
    budget: Option<Duration>,
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long)]
    json: bool,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ApproxArgs {
    input: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    v: u64,
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Print the report as JSON on standard output instead of the partition.
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct VerifyArgs {
    family: PathBuf,
    partition: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    v: u64,
    #[arg(long)]
    json: bool,
}

pub fn parse_budget(s: &str) -> Result<Duration, String> {
    if let Ok(secs) = s.parse::<u64>() {
        return Ok(Duration::from_secs(secs));
    }
    humantime::parse_duration(s).map_err(|e| e.to_string())
}

fn read_text(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn read_family(path: &Path) -> CliResult<IntervalFamily> {
    parse_family(&read_text(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Fail(format!("stdout: {e}"))),
    }
}

fn set_threads(threads: usize) {
    #[cfg(feature = "parallel")]
    if threads > 0 {
        // fails only if a pool already exists, which keeps its size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}

fn parts_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn millis(d: Duration) -> u64 {
    d.as_millis() as u64
}

fn cmd_gen(a: GenArgs) -> CliResult<()> {
    let usage = |m: &str| Failure::Usage(m.to_string());
    let given = [
        ("--k", a.k.is_some()),
        ("--v", a.v.is_some()),
        ("--n", a.n.is_some()),
        ("--range", a.range.is_some()),
        ("--seed", a.seed.is_some()),
    ];
    let allowed: &[&str] = match a.kind {
        Kind::A => &["--k", "--v"],
        Kind::Random => &["--n", "--range", "--seed"],
        _ => &[],
    };
    if let Some((flag, _)) = given.iter().find(|(f, g)| *g && !allowed.contains(f)) {
        return Err(Failure::Usage(format!("{flag} does not apply to this kind")));
    }
    if a.partition_out.is_some() && a.kind != Kind::Gardi {
        return Err(usage("--partition-out only applies to --kind gardi"));
    }
    let spec = match a.kind {
        Kind::A => ConstructionSpec::A {
            k: a.k.ok_or_else(|| usage("--kind a needs --k"))?,
            v: a.v.ok_or_else(|| usage("--kind a needs --v"))?,
        },
        Kind::J3 => ConstructionSpec::J3,
        Kind::J4 => ConstructionSpec::J4,
        Kind::J5 => ConstructionSpec::J5,
        Kind::J6 => ConstructionSpec::J6,
        Kind::Gardi => ConstructionSpec::Gardi,
        Kind::Random => ConstructionSpec::Random {
            n: a.n.ok_or_else(|| usage("--kind random needs --n"))?,
            coord_range: a.range.ok_or_else(|| usage("--kind random needs --range"))?,
            seed: a.seed.ok_or_else(|| usage("--kind random needs --seed"))?,
        },
    };
    let f = spec.build().map_err(|e| Failure::Usage(e.to_string()))?;
    emit(a.out.as_deref(), &write_family(&f))?;
    if let Some(path) = a.partition_out {
        let (_, p) = clawpart::build_gardi_fixture();
        emit(Some(&path), &write_partition(&p))?;
    }
    Ok(())
}

fn cmd_stats(a: StatsArgs) -> CliResult<()> {
    let f = read_family(&a.input)?;
    let n = f.len();
    let kappas: Vec<u64> = (1..=5).map(|v| kappa_formula(n as u64, v)).collect();
    let (alpha, theta, psi) = (independence_number(&f), sweepline_cover(&f).len(), claw_number(&f));
    if a.json {
        let mut obj = json!({ "n": n, "alpha": alpha, "theta": theta, "psi": psi });
        for (v, k) in kappas.iter().enumerate() {
            obj[format!("kappa_v{}", v + 1)] = json!(k);
        }
        println!("{obj}");
    } else {
        let ks: Vec<String> = kappas
            .iter()
            .enumerate()
            .map(|(v, k)| format!("kappa_v{}={k}", v + 1))
            .collect();
        println!("n={n} alpha={alpha} theta={theta} psi={psi} {}", ks.join(" "));
    }
    Ok(())
}

/// Smallest `k` with `theta <= (v+1)^k - 1`.
fn theta_bound(theta: usize, v: usize) -> usize {
    let mut k = 0;
    let mut cap: u128 = 1;
    while theta as u128 > cap - 1 {
        cap *= v as u128 + 1;
        k += 1;
    }
    k.max(1)
}

fn cmd_partition(a: PartitionArgs) -> CliResult<()> {
    let fixed_v = match a.algo {
        Algo::W3v2 => Some(2),
        Algo::W5v3 => Some(3),
        Algo::Modw => Some(1),
        _ => None,
    };
    let v = match (fixed_v, a.v) {
        (Some(f), Some(given)) if f != given => {
            return Err(Failure::Usage(format!(
                "this algorithm produces parts with v = {f}, not {given}"
            )))
        }
        (Some(f), _) => f,
        (None, Some(given)) => given,
        (None, None) => return Err(Failure::Usage("--v is required for this algorithm".into())),
    } as usize;
    if a.w.is_some() && a.algo != Algo::Modw {
        return Err(Failure::Usage("--w only applies to --algo modw".into()));
    }
    set_threads(a.threads);
    let f = read_family(&a.input)?;
    let n = f.len();

    let mut extra = Vec::new();
    let (p, bound) = match a.algo {
        Algo::Kappa => (
            partition_optimal_kappa(&f, v),
            kappa_formula(n as u64, v as u64).max(1) as usize,
        ),
        Algo::Theta => (partition_by_theta(&f, v), theta_bound(sweepline_cover(&f).len(), v)),
        Algo::Clawbound => {
            let w = claw_number(&f);
            let bound = if w > v {
                kappa_hat_upper_generic(w as u64, v as u64)? as usize
            } else {
                1
            };
            (partition_claw_bounded(&f, v)?, bound)
        }
        Algo::W3v2 => (partition_w3_to_v2(&f)?, 2),
        Algo::W5v3 => (partition_w5_to_v3(&f)?, 2),
        Algo::Modw => {
            let w = a.w.map_or_else(|| claw_number(&f).max(1), |w| w as usize);
            (partition_cluster_mod_w(&f, w)?, w)
        }
        Algo::Approx => {
            let r = approx_min_partition(&f, v)?;
            extra.push(("lower_bound", r.lower_bound));
            extra.push(("ratio_cap", r.ratio_cap));
            (r.partition, r.lower_bound * r.ratio_cap)
        }
    };
    if let Some(w) = verify_partition(&f, &p, v)? {
        return Err(Failure::Fail(format!("output part has a claw: {w}")));
    }
    if a.json {
        let mut obj = json!({ "parts_count": p.parts_count(), "bound": bound, "v": v, "parts": parts_json(&p) });
        for (k, x) in &extra {
            obj[*k] = json!(x);
        }
        println!("{obj}");
        if let Some(out) = &a.out {
            emit(Some(out), &write_partition(&p))?;
        }
    } else {
        emit(a.out.as_deref(), &write_partition(&p))?;
        let extra: String = extra.iter().map(|(k, x)| format!(" {k}={x}")).collect();
        eprintln!("parts={} bound={bound}{extra}", p.parts_count());
    }
    Ok(())
}

fn cmd_search(a: SearchArgs) -> CliResult<()> {
    let f = read_family(&a.input)?;
    let opts = SearchOptions {
        budget: a.budget,
        threads: a.threads,
    };
    let out = exists_good_partition(&f, a.v as usize, a.t as usize, &opts)?;
    let (name, parts) = match &out.result {
        SearchResult::Found(p) => ("found", parts_json(p)),
        SearchResult::ExhaustedNone => ("exhausted", Value::Null),
        SearchResult::TimedOut => ("timeout", Value::Null),
    };
    if let (Some(path), Some(p)) = (&a.out, out.partition()) {
        emit(Some(path), &write_partition(p))?;
    }
    if a.json {
        let obj = json!({ "result": name, "parts": parts, "nodes": out.nodes_explored, "millis": millis(out.elapsed) });
        println!("{obj}");
    } else {
        println!(
            "result={name} nodes={} millis={}",
            out.nodes_explored,
            millis(out.elapsed)
        );
    }
    match out.result {
        SearchResult::TimedOut => Err(Failure::Timeout("budget exhausted".into())),
        _ => Ok(()),
    }
}

fn cmd_exact(a: ExactArgs) -> CliResult<()> {
    let f = read_family(&a.input)?;
    let opts = SearchOptions {
        budget: a.budget,
        threads: a.threads,
    };
    let out = exact_min_partition(&f, a.v as usize, &opts)?;
    if let (Some(path), Some(p)) = (&a.out, &out.partition) {
        emit(Some(path), &write_partition(p))?;
    }
    let kappa = out.kappa.map_or_else(|| "none".to_string(), |k| k.to_string());
    if a.json {
        let obj = json!({
            "kappa": out.kappa,
            "parts": out.partition.as_ref().map(parts_json),
            "infeasible_below": out.infeasible_below,
            "nodes": out.nodes_explored,
            "millis": millis(out.elapsed),
        });
        println!("{obj}");
    } else {
        println!(
            "kappa={kappa} infeasible_below={} nodes={} millis={}",
            out.infeasible_below,
            out.nodes_explored,
            millis(out.elapsed)
        );
    }
    match out.kappa {
        Some(_) => Ok(()),
        None => Err(Failure::Timeout("budget exhausted".into())),
    }
}

fn cmd_approx(a: ApproxArgs) -> CliResult<()> {
    set_threads(a.threads);
    let f = read_family(&a.input)?;
    let r = approx_min_partition(&f, a.v as usize)?;
    let m = r.partition.parts_count();
    if a.json {
        let obj = json!({
            "lower_bound": r.lower_bound,
            "parts_count": m,
            "ratio_cap": r.ratio_cap,
            "layers": r.layers.layers,
            "parts": parts_json(&r.partition),
        });
        println!("{obj}");
        if let Some(out) = &a.out {
            emit(Some(out), &write_partition(&r.partition))?;
        }
    } else {
        emit(a.out.as_deref(), &write_partition(&r.partition))?;
        eprintln!("lower_bound={} parts={m} ratio_cap={}", r.lower_bound, r.ratio_cap);
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> CliResult<()> {
    let f = read_family(&a.family)?;
    let v = a.v as usize;
    let p = parse_partition(&read_text(&a.partition)?, v)
        .map_err(|e| Failure::Usage(format!("{}: {e}", a.partition.display())))?;
    let witness = verify_partition(&f, &p, v).map_err(|e| Failure::Fail(e.to_string()))?;
    if a.json {
        let obj = match &witness {
            None => json!({ "result": "ok", "parts_count": p.parts_count() }),
            Some(w) => json!({ "result": "witness", "center": w.center, "leaves": w.leaves }),
        };
        println!("{obj}");
    } else {
        match &witness {
            None => println!("result=ok parts={}", p.parts_count()),
            Some(w) => println!("result=witness {w}"),
        }
    }
    match witness {
        None => Ok(()),
        Some(w) => Err(Failure::Fail(format!("part contains a claw: {w}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Stats(a) => cmd_stats(a),
        Command::Partition(a) => cmd_partition(a),
        Command::Search(a) => cmd_search(a),
        Command::Exact(a) => cmd_exact(a),
        Command::Approx(a) => cmd_approx(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Repro(a) => repro::run(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Fail(m) | Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Timeout(m) => eprintln!("timeout: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
