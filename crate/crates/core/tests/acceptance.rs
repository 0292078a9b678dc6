//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use clawpart::*;
use common::*;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

const A_DESK: [(usize, usize); 6] = [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (2, 3)];

fn formula_grid() -> Check {
    for k in 1..=6u64 {
        for v in 1..=5u64 {
            let mu = mu_formula(k, v).map_err(|e| e.to_string())?;
            ensure(mu == mu_oracle(k as u32, v), || format!("mu({k},{v}) = {mu}"))?;
            ensure(kappa_formula(mu, v) == k, || format!("kappa(mu({k},{v})) != {k}"))?;
            ensure(kappa_formula(mu + 1, v) == k + 1, || {
                format!("kappa(mu({k},{v})+1) != {}", k + 1)
            })?;
        }
    }
    Ok("30 (k,v) pairs".into())
}

fn a_metrics() -> Check {
    for k in 1..=6usize {
        for v in 1..=5usize {
            let f = build_a(k, v).map_err(|e| e.to_string())?;
            let n: usize = (0..k as u32).map(|i| (v + 1).pow(i)).sum();
            ensure(f.len() == n, || format!("|A({k},{v})| = {} expected {n}", f.len()))?;
            if k >= 2 {
                let top = (v + 1).pow(k as u32 - 1);
                let (psi, alpha, theta) = (claw_number(&f), independence_number(&f), sweepline_cover(&f).len());
                ensure(psi == top && alpha == top && theta == top, || {
                    format!("A({k},{v}): psi={psi} alpha={alpha} theta={theta} expected {top}")
                })?;
            }
        }
    }
    Ok("k<=6, v<=5".into())
}

fn a_family_exact() -> Check {
    let mut notes = Vec::new();
    for (k, v) in A_DESK {
        let f = build_a(k, v).map_err(|e| e.to_string())?;
        let out = exact_min_partition(&f, v, &SearchOptions::with_budget(Duration::from_secs(60)))
            .map_err(|e| e.to_string())?;
        ensure(out.kappa == Some(k), || {
            format!("A({k},{v}): exact kappa {:?}", out.kappa)
        })?;
        ensure(out.elapsed < Duration::from_secs(60), || {
            format!("A({k},{v}) took {:?}", out.elapsed)
        })?;
        notes.push(format!("A({k},{v})={k}"));
    }
    Ok(notes.join(" "))
}

fn search_pair(f: &IntervalFamily, v: usize, t_none: usize, budget: Duration) -> Check {
    let opts = SearchOptions::with_budget(budget);
    let none = exists_good_partition(f, v, t_none, &opts).map_err(|e| e.to_string())?;
    ensure(none.result == SearchResult::ExhaustedNone, || {
        format!("t={t_none}: expected exhausted, got {:?}", none.result)
    })?;
    let found = exists_good_partition(f, v, t_none + 1, &opts).map_err(|e| e.to_string())?;
    let p = found
        .partition()
        .ok_or_else(|| format!("t={}: {:?}", t_none + 1, found.result))?;
    ensure(verify_partition(f, p, v) == Ok(None), || {
        "found partition does not verify".into()
    })?;
    Ok(format!(
        "t={t_none} exhausted ({} nodes), t={} found",
        none.nodes_explored,
        t_none + 1
    ))
}

fn j3_search() -> Check {
    let f = build_j3();
    ensure(claw_number(&f) == 3, || "psi(J3) != 3".into())?;
    let by_left = Partition::from_labels(f.iter().map(|x| (x.id(), x.left().rem_euclid(3) as usize)), 1);
    ensure(verify_partition(&f, &by_left, 1) == Ok(None), || {
        "left endpoint mod 3 is not a cluster partition".into()
    })?;
    search_pair(&f, 1, 2, Duration::from_secs(10)).map(|m| format!("{m}; left mod 3 verifies"))
}

fn j6_search() -> Check {
    let f = build_j6();
    ensure(claw_number(&f) == 6, || "psi(J6) != 6".into())?;
    search_pair(&f, 2, 2, Duration::from_secs(60))
}

fn j4_search() -> Check {
    let f = build_j4();
    ensure(f.len() == 105 && claw_number(&f) == 4, || "J4 shape".into())?;
    let opts = SearchOptions {
        budget: Some(Duration::from_secs(600)),
        threads: threads(),
    };
    let out = exists_good_partition(&f, 2, 2, &opts).map_err(|e| e.to_string())?;
    ensure(out.result == SearchResult::ExhaustedNone, || {
        format!("{:?}", out.result)
    })?;
    Ok(format!(
        "exhausted, {} nodes in {:.1?}",
        out.nodes_explored, out.elapsed
    ))
}

fn j5_search() -> Check {
    let f = build_j5();
    ensure(f.len() == 231 && claw_number(&f) == 5, || "J5 shape".into())?;
    let opts = SearchOptions {
        budget: Some(Duration::from_secs(3600)),
        threads: threads(),
    };
    let out = exists_good_partition(&f, 2, 2, &opts).map_err(|e| e.to_string())?;
    match out.result {
        SearchResult::ExhaustedNone => Ok(format!(
            "exhausted, {} nodes in {:.1?}",
            out.nodes_explored, out.elapsed
        )),
        SearchResult::TimedOut => Ok(format!("TIMEOUT after {:.1?} (accepted)", out.elapsed)),
        SearchResult::Found(_) => Err("found a good 2-partition".into()),
    }
}

fn random_instance(seed: u64) -> IntervalFamily {
    let n = 10 + (seed % 61) as usize;
    let range = 10 + (seed * 7 % 91) as i64;
    build_random(n, range, seed).unwrap()
}

fn check_algo(name: &str, seeds: u64, run: impl Fn(u64) -> std::result::Result<(), String> + Sync + Send) -> Check {
    let failures: Vec<String> = par::map_seeds(0..seeds, |s| run(s).err().map(|e| format!("{name} seed {s}: {e}")))
        .into_iter()
        .flatten()
        .collect();
    match failures.first() {
        Some(first) => Err(format!("{} failures, first: {first}", failures.len())),
        None => Ok(format!("{name} {seeds}")),
    }
}

fn verified(f: &IntervalFamily, p: &Partition, v: usize, bound: usize) -> std::result::Result<(), String> {
    if let Some(w) = verify_partition(f, p, v).map_err(|e| e.to_string())? {
        return Err(format!("part has claw {w}"));
    }
    ensure(p.parts_count() <= bound, || {
        format!("{} parts > bound {bound}", p.parts_count())
    })
}

fn constructive_validity() -> Check {
    const SEEDS: u64 = 1000;
    let mut done = Vec::new();
    done.push(check_algo("kappa", SEEDS, |s| {
        let f = random_instance(s);
        let v = 1 + (s % 5) as usize;
        let bound = kappa_oracle(f.len() as u64, v as u64) as usize;
        verified(&f, &partition_optimal_kappa(&f, v), v, bound.max(1))
    })?);
    done.push(check_algo("theta", SEEDS, |s| {
        let f = random_instance(s);
        let v = 1 + (s % 5) as usize;
        let bound = theta_parts_bound(brute_or_cover_theta(&f), v);
        verified(&f, &partition_by_theta(&f, v), v, bound.max(1))
    })?);
    done.push(check_algo("clawbound", SEEDS, |s| {
        let w_cap = 2 + (s % 9) as usize;
        let f = trim_to_claw_number(&random_instance(s), w_cap);
        let v = 1 + (s % 5) as usize;
        let w = claw_number(&f);
        let bound = if w > v { claw_bounded_parts_bound(w, v) } else { 1 };
        let p = partition_claw_bounded(&f, v).map_err(|e| e.to_string())?;
        verified(&f, &p, v, bound)
    })?);
    done.push(check_algo("w3v2", SEEDS, |s| {
        let f = trim_to_claw_number(&random_instance(s), 3);
        let p = partition_w3_to_v2(&f).map_err(|e| e.to_string())?;
        verified(&f, &p, 2, 2)
    })?);
    done.push(check_algo("w5v3", SEEDS, |s| {
        let f = trim_to_claw_number(&random_instance(s), 5);
        let p = partition_w5_to_v3(&f).map_err(|e| e.to_string())?;
        verified(&f, &p, 3, 2)
    })?);
    done.push(check_algo("modw", SEEDS, |s| {
        let w = 1 + (s % 5) as usize;
        let f = trim_to_claw_number(&random_instance(s), w);
        let p = partition_cluster_mod_w(&f, w).map_err(|e| e.to_string())?;
        verified(&f, &p, 1, w)
    })?);
    Ok(done.join(", "))
}

/// ϑ as the size of a maximum independent set, which equals the clique
/// cover number on interval graphs. Brute force only when small.
fn brute_or_cover_theta(f: &IntervalFamily) -> usize {
    if f.len() <= 40 {
        brute_alpha(f)
    } else {
        sweepline_cover(f).len()
    }
}

fn approx_guarantee() -> Check {
    let report = check_algo("approx", 500, |s| {
        let f = random_instance(s);
        for v in 1..=5 {
            let t = if v <= 2 { 3 } else { 2 };
            let r = approx_min_partition(&f, v).map_err(|e| e.to_string())?;
            ensure(r.ratio_cap == t, || format!("ratio cap {} for v={v}", r.ratio_cap))?;
            verified(&f, &r.partition, v, t * r.lower_bound)?;
        }
        Ok(())
    })?;
    for (k, v) in A_DESK {
        let f = build_a(k, v).unwrap();
        let r = approx_min_partition(&f, v).map_err(|e| e.to_string())?;
        let exact = exact_min_partition(&f, v, &SearchOptions::with_budget(Duration::from_secs(60)))
            .map_err(|e| e.to_string())?
            .kappa
            .ok_or_else(|| format!("A({k},{v}) exact timed out"))?;
        ensure(r.lower_bound <= exact && exact <= r.partition.parts_count(), || {
            format!(
                "A({k},{v}): lower {} exact {exact} parts {}",
                r.lower_bound,
                r.partition.parts_count()
            )
        })?;
    }
    Ok(format!("{report} x v=1..5; desk A families bracket exact kappa"))
}

fn oracle_equivalence() -> Check {
    let small = |seed: u64, max_n: u64| {
        let n = (seed % (max_n + 1)) as usize;
        let range = 4 + (seed * 5 % 20) as i64;
        build_random(n, range, seed).unwrap()
    };
    for s in 0..200 {
        let f = small(s, 18);
        let alpha = brute_alpha(&f);
        let (a, th) = (independence_number(&f), sweepline_cover(&f).len());
        ensure(a == alpha && th == alpha, || {
            format!("seed {s}: alpha={a} theta={th} brute={alpha}")
        })?;
    }
    for s in 0..200 {
        let f = small(1000 + s, 14);
        let (psi, brute) = (claw_number(&f), brute_claw(&f));
        ensure(psi == brute, || format!("seed {s}: psi={psi} brute={brute}"))?;
    }
    let mut found = 0;
    for s in 0..100u64 {
        let n = 6 + (s % 7) as usize;
        let f = build_random(n, 3 + (s % 8) as i64, 2000 + s).unwrap();
        let v = 1 + (s % 3) as usize;
        let t = 1 + (s / 3 % 3) as usize;
        let out = exists_good_partition(&f, v, t, &SearchOptions::default()).map_err(|e| e.to_string())?;
        let naive = naive_good_partition(&f, v, t);
        ensure(out.is_found() == naive, || {
            format!("seed {s} v={v} t={t}: search {:?}, naive {naive}", out.result)
        })?;
        found += usize::from(naive);
    }
    Ok(format!(
        "200 alpha/theta, 200 claw, 100 search ({found} found, {} exhausted)",
        100 - found
    ))
}

fn gardi() -> Check {
    let (f, p) = build_gardi_fixture();
    let w = verify_partition(&f, &p, 2)
        .map_err(|e| e.to_string())?
        .ok_or("no witness")?;
    ensure(w.center == 5 && w.leaves == [1, 6, 9], || format!("witness {w}"))?;
    Ok(format!("witness {w}"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("formula grid", Duration::from_secs(1), formula_grid),
        ("A(k,v) metrics", Duration::from_secs(1), a_metrics),
        ("exact kappa of A(k,v)", Duration::from_secs(6 * 60), a_family_exact),
        ("J3 has no good 2-partition at v=1", Duration::from_secs(10), j3_search),
        ("J6 has no good 2-partition at v=2", Duration::from_secs(60), j6_search),
        ("J4 has no good 2-partition at v=2", Duration::from_secs(600), j4_search),
        ("J5 stretch search at v=2", Duration::from_secs(3600 + 60), j5_search),
        (
            "constructive partitions valid",
            Duration::from_secs(300),
            constructive_validity,
        ),
        ("approximation guarantee", Duration::from_secs(300), approx_guarantee),
        ("oracle equivalence", Duration::from_secs(600), oracle_equivalence),
        ("Gardi fixture witness", Duration::from_secs(1), gardi),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = result
            .and_then(|msg| ensure(elapsed <= limit, || format!("took {elapsed:.2?}, limit {limit:?}")).map(|_| msg));
        match result {
            Ok(msg) => println!("PASS criterion {:>2} {name}: {msg} [{elapsed:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name}: {msg} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
