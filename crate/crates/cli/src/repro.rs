//! Scripted checks, one per check id.

use std::time::{Duration, Instant};

use clap::{Args, ValueEnum};
use clawpart::{
    approx_min_partition, build_a, build_gardi_fixture, build_j3, build_j4, build_j5, build_j6, build_random,
    claw_number, exact_min_partition, exists_good_partition, kappa_formula, mu_formula, partition_optimal_kappa,
    partition_w3_to_v2, partition_w5_to_v3, trim_to_claw_number, verify_partition, IntervalFamily, Partition,
    SearchOptions, SearchResult,
};
use serde_json::json;

use crate::{parse_budget, CliResult, Failure};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckId {
    W3v1,
    W6v2,
    W5v2,
    W4v2,
    W3v2,
    W5v3,
    Mu,
    Kappa,
    Approx,
    Gardi,
}

#[derive(Args)]
pub struct ReproArgs {
    #[arg(value_enum)]
    id: CheckId,
    /// Time limit for each search; defaults to 60s (600s for w4v2, 1h for w5v2).
    #[arg(long, value_parser = parse_budget)]
    budget: Option<Duration>,
    /// First seed of the random sweeps.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long)]
    json: bool,
}

enum Status {
    Pass,
    Fail,
    Timeout,
}

struct Report {
    status: Status,
    fields: Vec<(&'static str, String)>,
}

impl Report {
    fn new() -> Self {
        Report {
            status: Status::Pass,
            fields: Vec::new(),
        }
    }

    fn add(&mut self, key: &'static str, value: impl ToString) {
        self.fields.push((key, value.to_string()));
    }

    fn check(&mut self, ok: bool, key: &'static str, value: impl ToString) {
        self.add(key, value);
        if !ok {
            self.status = Status::Fail;
        }
    }

    fn timeout(&mut self) {
        if matches!(self.status, Status::Pass) {
            self.status = Status::Timeout;
        }
    }
}

fn verifies(f: &IntervalFamily, p: &Partition, v: usize) -> bool {
    matches!(verify_partition(f, p, v), Ok(None))
}

fn search(r: &mut Report, f: &IntervalFamily, v: usize, t: usize, opts: &SearchOptions, expect_found: bool) {
    let out = match exists_good_partition(f, v, t, opts) {
        Ok(out) => out,
        Err(e) => return r.check(false, "error", e),
    };
    let key = if expect_found { "found_t" } else { "exhausted_t" };
    match &out.result {
        SearchResult::Found(p) => r.check(expect_found && verifies(f, p, v), key, t),
        SearchResult::ExhaustedNone => r.check(!expect_found, key, t),
        SearchResult::TimedOut => {
            r.add("timeout_t", t);
            r.timeout();
        }
    }
    r.add("nodes", out.nodes_explored);
    r.add("millis", out.elapsed.as_millis());
}

fn two_three_search(r: &mut Report, f: IntervalFamily, psi: usize, v: usize, opts: &SearchOptions) {
    let measured = claw_number(&f);
    r.add("n", f.len());
    r.check(measured == psi, "psi", measured);
    search(r, &f, v, 2, opts, false);
    if matches!(r.status, Status::Pass) {
        search(r, &f, v, 3, opts, true);
    }
}

fn random_sweep(r: &mut Report, seed: u64, cap: usize, v: usize, run: impl Fn(&IntervalFamily) -> Option<Partition>) {
    let mut bad = 0;
    for s in seed..seed + 200 {
        let f = trim_to_claw_number(
            &build_random(10 + (s % 61) as usize, 10 + (s * 7 % 91) as i64, s).unwrap(),
            cap,
        );
        match run(&f) {
            Some(p) if p.parts_count() <= 2 && verifies(&f, &p, v) => {}
            _ => bad += 1,
        }
    }
    r.add("instances", 200);
    r.check(bad == 0, "invalid", bad);
}

pub fn run(a: ReproArgs) -> CliResult<()> {
    let budget = |default: u64| a.budget.unwrap_or(Duration::from_secs(default));
    let opts = |default: u64| SearchOptions {
        budget: Some(budget(default)),
        threads: a.threads,
    };
    let started = Instant::now();
    let mut r = Report::new();
    match a.id {
        CheckId::W3v1 => two_three_search(&mut r, build_j3(), 3, 1, &opts(60)),
        CheckId::W6v2 => two_three_search(&mut r, build_j6(), 6, 2, &opts(60)),
        CheckId::W4v2 => {
            let f = build_j4();
            r.add("n", f.len());
            r.check(claw_number(&f) == 4, "psi", claw_number(&f));
            search(&mut r, &f, 2, 2, &opts(600), false);
        }
        CheckId::W5v2 => {
            let f = build_j5();
            r.add("n", f.len());
            r.check(claw_number(&f) == 5, "psi", claw_number(&f));
            let by_length = Partition::from_labels(f.iter().map(|x| (x.id(), x.length() as usize)), 2);
            r.check(
                by_length.parts_count() == 3 && verifies(&f, &by_length, 2),
                "length_parts",
                3,
            );
            search(&mut r, &f, 2, 2, &opts(3600), false);
        }
        CheckId::W3v2 => {
            let star = build_a(2, 2).unwrap();
            let p = partition_w3_to_v2(&star).map_err(Failure::from)?;
            r.check(
                p.parts_count() == 2 && verifies(&star, &p, 2),
                "star_parts",
                p.parts_count(),
            );
            random_sweep(&mut r, a.seed, 3, 2, |f| partition_w3_to_v2(f).ok());
        }
        CheckId::W5v3 => {
            let star = build_a(2, 4).unwrap();
            let p = partition_w5_to_v3(&star).map_err(Failure::from)?;
            r.check(
                p.parts_count() == 2 && verifies(&star, &p, 3),
                "star_parts",
                p.parts_count(),
            );
            random_sweep(&mut r, a.seed, 5, 3, |f| partition_w5_to_v3(f).ok());
        }
        CheckId::Mu => {
            let mut bad = 0;
            for k in 1..=6u64 {
                for v in 1..=5u64 {
                    let mu = mu_formula(k, v).map_err(Failure::from)?;
                    if kappa_formula(mu, v) != k || kappa_formula(mu + 1, v) != k + 1 {
                        bad += 1;
                    }
                }
            }
            r.add("pairs", 30);
            r.check(bad == 0, "mismatches", bad);
        }
        CheckId::Kappa => {
            for (k, v) in [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (2, 3)] {
                let f = build_a(k, v).unwrap();
                let constructive = partition_optimal_kappa(&f, v);
                if constructive.parts_count() != k || !verifies(&f, &constructive, v) {
                    r.check(false, "constructive", format!("A({k},{v})"));
                }
                match exact_min_partition(&f, v, &opts(60)).map_err(Failure::from)?.kappa {
                    Some(x) if x == k => {}
                    Some(x) => r.check(false, "exact", format!("A({k},{v})={x}")),
                    None => {
                        r.add("timeout", format!("A({k},{v})"));
                        r.timeout();
                    }
                }
            }
            r.add("instances", 6);
        }
        CheckId::Approx => {
            let a42 = build_a(4, 2).unwrap();
            let rep = approx_min_partition(&a42, 2).map_err(Failure::from)?;
            r.check(rep.lower_bound == 4, "lower_bound", rep.lower_bound);
            r.check(rep.partition.parts_count() <= 12, "parts", rep.partition.parts_count());
            let mut bad = 0;
            for s in a.seed..a.seed + 100 {
                let f = build_random(10 + (s % 61) as usize, 10 + (s * 7 % 91) as i64, s).unwrap();
                for v in 1..=5 {
                    match approx_min_partition(&f, v) {
                        Ok(x)
                            if x.partition.parts_count() <= x.ratio_cap * x.lower_bound
                                && verifies(&f, &x.partition, v) => {}
                        _ => bad += 1,
                    }
                }
            }
            r.add("random_runs", 500);
            r.check(bad == 0, "violations", bad);
        }
        CheckId::Gardi => {
            let (f, p) = build_gardi_fixture();
            match verify_partition(&f, &p, 2).map_err(Failure::from)? {
                Some(w) => r.check(w.center == 5 && w.leaves == [1, 6, 9], "witness", w),
                None => r.check(false, "witness", "none"),
            }
        }
    }
    r.add("total_millis", started.elapsed().as_millis());

    let id = a.id.to_possible_value().unwrap().get_name().to_string();
    let status = match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Timeout => "TIMEOUT",
    };
    if a.json {
        let mut obj = json!({ "id": id, "status": status });
        for (k, v) in &r.fields {
            obj[*k] = json!(v);
        }
        println!("{obj}");
    } else {
        let fields: String = r.fields.iter().map(|(k, v)| format!(" {k}={v}")).collect();
        println!("{status} {id}{fields}");
    }
    match r.status {
        Status::Pass => Ok(()),
        Status::Fail => Err(Failure::Fail(format!("{id} failed"))),
        Status::Timeout => Err(Failure::Timeout(format!("{id} ran out of time"))),
    }
}
