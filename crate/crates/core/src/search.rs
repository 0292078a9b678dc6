//! Exhaustive branch-and-bound for "does this family split into `t` parts of
//! claw number at most `v`?", and the exact κ(G,v) built on it.
//!
//! Intervals are placed in order of increasing right endpoint (ties: larger
//! left endpoint first). Every placed interval keeps the greedy state of its
//! own neighborhood inside its part: how many pairwise-disjoint neighbors the
//! greedy scan has picked and where the last pick ends. Since a new interval
//! ends no earlier than anything placed before it, it is always last in that
//! scan, so one comparison updates each neighbor's state exactly.

#[cfg(feature = "parallel")]
use std::sync::atomic::AtomicU64;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use crate::claw::claw_number_of;
use crate::cover::sweep_order;
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalFamily};
use crate::partition::Partition;

const UNPLACED: u8 = u8::MAX;
const CLOCK_STRIDE: u64 = 1 << 10;
/// Incremental checks are cross-checked against full recomputation in debug
/// builds on instances up to this size.
const FULL_CHECK_LIMIT: usize = 24;

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Wall-clock limit, checked every few hundred nodes.
    pub budget: Option<Duration>,
    /// Worker threads. `0` or `1` runs the sequential search. More threads
    /// split the top of the tree, which needs the `parallel` feature.
    pub threads: usize,
}

impl SearchOptions {
    pub fn with_budget(budget: Duration) -> Self {
        SearchOptions {
            budget: Some(budget),
            threads: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    Found(Partition),
    /// The whole symmetry-reduced tree was searched without success.
    ExhaustedNone,
    TimedOut,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub result: SearchResult,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self.result, SearchResult::Found(_))
    }

    pub fn partition(&self) -> Option<&Partition> {
        match &self.result {
            SearchResult::Found(p) => Some(p),
            _ => None,
        }
    }
}

struct Problem {
    ivs: Vec<Interval>,
    /// Earlier neighbors of each interval, in placement order.
    prev_nbrs: Vec<Vec<u32>>,
    v: u32,
    t: u8,
}

impl Problem {
    fn new(f: &IntervalFamily, v: usize, t: usize) -> Self {
        let order = sweep_order(f.intervals());
        let ivs: Vec<Interval> = order.iter().map(|&i| f.intervals()[i]).collect();
        let prev_nbrs = (0..ivs.len())
            .map(|i| {
                (0..i)
                    .filter(|&j| ivs[i].intersects(&ivs[j]))
                    .map(|j| j as u32)
                    .collect()
            })
            .collect();
        Problem {
            ivs,
            prev_nbrs,
            v: v as u32,
            t: t as u8,
        }
    }

    fn len(&self) -> usize {
        self.ivs.len()
    }

    fn partition(&self, parts: &[u8], v: usize) -> Partition {
        Partition::from_labels(self.ivs.iter().zip(parts).map(|(iv, &p)| (iv.id(), p as usize)), v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flow {
    Found,
    Exhausted,
    TimedOut,
    /// Another worker already found a solution.
    Stopped,
}

struct Dfs<'a> {
    pb: &'a Problem,
    part: Vec<u8>,
    picks: Vec<u32>,
    last: Vec<i64>,
    opened: u8,
    undo: Vec<(u32, u32, i64)>,
    nodes: u64,
    deadline: Option<Instant>,
    stop: &'a AtomicBool,
    full_check: bool,
}

impl<'a> Dfs<'a> {
    fn new(pb: &'a Problem, deadline: Option<Instant>, stop: &'a AtomicBool) -> Self {
        let n = pb.len();
        Dfs {
            pb,
            part: vec![UNPLACED; n],
            picks: vec![0; n],
            last: vec![i64::MIN; n],
            opened: 0,
            undo: Vec::with_capacity(n * 4),
            nodes: 0,
            deadline,
            stop,
            full_check: cfg!(debug_assertions) && n <= FULL_CHECK_LIMIT,
        }
    }

    /// Greedy state of `i` as a center in part `p`, or `None` if placing `i`
    /// there creates a star `K_{1,v+1}`.
    fn feasible(&self, i: usize, p: u8) -> Option<(u32, i64)> {
        let pb = self.pb;
        let x = &pb.ivs[i];
        let mut picks = 0;
        let mut last = i64::MIN;
        for &j in &pb.prev_nbrs[i] {
            let j = j as usize;
            if self.part[j] != p {
                continue;
            }
            let y = &pb.ivs[j];
            if y.left() >= last {
                picks += 1;
                last = y.right();
                if picks > pb.v {
                    return None;
                }
            }
            if x.left() >= self.last[j] && self.picks[j] >= pb.v {
                return None;
            }
        }
        Some((picks, last))
    }

    fn place(&mut self, i: usize, p: u8, picks: u32, last: i64) {
        let x = self.pb.ivs[i];
        for &j in &self.pb.prev_nbrs[i] {
            let j = j as usize;
            if self.part[j] == p && x.left() >= self.last[j] {
                self.undo.push((j as u32, self.picks[j], self.last[j]));
                self.picks[j] += 1;
                self.last[j] = x.right();
            }
        }
        self.part[i] = p;
        self.picks[i] = picks;
        self.last[i] = last;
        if p == self.opened {
            self.opened += 1;
        }
    }

    fn unplace(&mut self, i: usize, mark: usize) {
        while self.undo.len() > mark {
            let (j, picks, last) = self.undo.pop().unwrap();
            self.picks[j as usize] = picks;
            self.last[j as usize] = last;
        }
        if self.part[i] + 1 == self.opened && !self.part[..i].contains(&self.part[i]) {
            self.opened -= 1;
        }
        self.part[i] = UNPLACED;
    }

    fn part_claw_number(&self, upto: usize, p: u8) -> usize {
        let members: Vec<Interval> = (0..upto)
            .filter(|&j| self.part[j] == p)
            .map(|j| self.pb.ivs[j])
            .collect();
        claw_number_of(&members)
    }

    /// Cross-check of the incremental test against recomputing ψ of the part.
    fn full_check(&mut self, i: usize, p: u8, accepted: bool) {
        let saved = self.part[i];
        self.part[i] = p;
        let psi = self.part_claw_number(i + 1, p);
        self.part[i] = saved;
        assert_eq!(
            psi <= self.pb.v as usize,
            accepted,
            "incremental check disagrees with recomputed claw number {psi} at interval {i}"
        );
    }

    fn candidate_parts(&self) -> u8 {
        (self.opened + 1).min(self.pb.t)
    }

    fn run(&mut self, i: usize) -> Flow {
        if i == self.pb.len() {
            return Flow::Found;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(CLOCK_STRIDE) {
            if self.stop.load(Ordering::Relaxed) {
                return Flow::Stopped;
            }
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                return Flow::TimedOut;
            }
        }
        for p in 0..self.candidate_parts() {
            let state = self.feasible(i, p);
            if self.full_check {
                self.full_check(i, p, state.is_some());
            }
            let Some((picks, last)) = state else { continue };
            let mark = self.undo.len();
            self.place(i, p, picks, last);
            match self.run(i + 1) {
                Flow::Exhausted => self.unplace(i, mark),
                other => return other,
            }
        }
        Flow::Exhausted
    }

    /// Replays a feasible prefix of part choices.
    #[cfg(feature = "parallel")]
    fn replay(&mut self, prefix: &[u8]) {
        for (i, &p) in prefix.iter().enumerate() {
            let (picks, last) = self.feasible(i, p).expect("prefix was feasible");
            self.place(i, p, picks, last);
        }
    }
}

/// All feasible symmetry-reduced assignments of the first `depth` intervals.
#[cfg(feature = "parallel")]
fn prefixes(pb: &Problem, depth: usize) -> Vec<Vec<u8>> {
    fn walk(d: &mut Dfs<'_>, i: usize, depth: usize, out: &mut Vec<Vec<u8>>) {
        if i == depth {
            out.push(d.part[..depth].to_vec());
            return;
        }
        for p in 0..d.candidate_parts() {
            if let Some((picks, last)) = d.feasible(i, p) {
                let mark = d.undo.len();
                d.place(i, p, picks, last);
                walk(d, i + 1, depth, out);
                d.unplace(i, mark);
            }
        }
    }
    let stop = AtomicBool::new(false);
    let mut d = Dfs::new(pb, None, &stop);
    let mut out = Vec::new();
    walk(&mut d, 0, depth, &mut out);
    out
}

fn search_sequential(pb: &Problem, deadline: Option<Instant>) -> (Flow, u64, Option<Vec<u8>>) {
    let stop = AtomicBool::new(false);
    let mut d = Dfs::new(pb, deadline, &stop);
    let flow = d.run(0);
    let parts = (flow == Flow::Found).then(|| d.part.clone());
    (flow, d.nodes, parts)
}

#[cfg(feature = "parallel")]
fn search_parallel(pb: &Problem, deadline: Option<Instant>, threads: usize) -> Result<(Flow, u64, Option<Vec<u8>>)> {
    use rayon::prelude::*;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start thread pool: {e}")))?;

    // Grow the split depth until there is enough work to share out.
    let target = threads * 8;
    let mut depth = 0;
    let mut work = vec![Vec::new()];
    while depth < pb.len() && work.len() < target && depth < 24 {
        depth += 1;
        work = prefixes(pb, depth);
        if work.is_empty() {
            return Ok((Flow::Exhausted, 0, None));
        }
    }

    let stop = AtomicBool::new(false);
    let nodes = AtomicU64::new(0);
    let results: Vec<(Flow, Option<Vec<u8>>)> = pool.install(|| {
        work.par_iter()
            .map(|prefix| {
                if stop.load(Ordering::Relaxed) {
                    return (Flow::Stopped, None);
                }
                let mut d = Dfs::new(pb, deadline, &stop);
                d.replay(prefix);
                let flow = d.run(prefix.len());
                nodes.fetch_add(d.nodes, Ordering::Relaxed);
                if flow == Flow::Found {
                    stop.store(true, Ordering::Relaxed);
                    (flow, Some(d.part.clone()))
                } else {
                    (flow, None)
                }
            })
            .collect()
    });

    let nodes = nodes.into_inner();
    if let Some((_, parts)) = results.iter().find(|(f, _)| *f == Flow::Found) {
        return Ok((Flow::Found, nodes, parts.clone()));
    }
    if results.iter().any(|(f, _)| *f == Flow::TimedOut) {
        return Ok((Flow::TimedOut, nodes, None));
    }
    debug_assert!(results.iter().all(|(f, _)| *f == Flow::Exhausted));
    Ok((Flow::Exhausted, nodes, None))
}

/// Decides whether `f` has a partition into at most `t` parts, each with
/// claw number ≤ `v`.
///
/// The verdict never depends on `threads`; with several threads the
/// returned partition and the node count may differ from a sequential run.
pub fn exists_good_partition(f: &IntervalFamily, v: usize, t: usize, opts: &SearchOptions) -> Result<SearchOutcome> {
    if v == 0 || t == 0 {
        return Err(Error::Precondition(format!(
            "search needs v >= 1 and t >= 1, got v={v} t={t}"
        )));
    }
    let start = Instant::now();
    let deadline = opts.budget.map(|b| start + b);
    let pb = Problem::new(f, v, t.min(f.len().max(1)).min(UNPLACED as usize));

    let (flow, nodes, parts) = if opts.threads > 1 {
        #[cfg(feature = "parallel")]
        {
            search_parallel(&pb, deadline, opts.threads)?
        }
        #[cfg(not(feature = "parallel"))]
        {
            search_sequential(&pb, deadline)
        }
    } else {
        search_sequential(&pb, deadline)
    };

    let result = match flow {
        Flow::Found => SearchResult::Found(pb.partition(&parts.expect("found parts"), v)),
        Flow::Exhausted => SearchResult::ExhaustedNone,
        Flow::TimedOut | Flow::Stopped => SearchResult::TimedOut,
    };
    Ok(SearchOutcome {
        result,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone)]
pub struct MinPartitionOutcome {
    /// κ(f, v), unless the budget ran out first.
    pub kappa: Option<usize>,
    pub partition: Option<Partition>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// Largest `t` proven infeasible before stopping.
    pub infeasible_below: usize,
}

/// κ(f, v) by searching `t = 1, 2, ...` until a good partition appears.
/// The budget covers the whole sequence of searches.
pub fn exact_min_partition(f: &IntervalFamily, v: usize, opts: &SearchOptions) -> Result<MinPartitionOutcome> {
    if v == 0 {
        return Err(Error::Precondition("claw bound must be positive".into()));
    }
    let start = Instant::now();
    let mut outcome = MinPartitionOutcome {
        kappa: None,
        partition: None,
        nodes_explored: 0,
        elapsed: Duration::ZERO,
        infeasible_below: 0,
    };
    if f.is_empty() {
        outcome.kappa = Some(0);
        outcome.partition = Some(Partition::single(f, v));
        return Ok(outcome);
    }
    for t in 1..=f.len() {
        let remaining = match opts.budget {
            Some(b) => match b.checked_sub(start.elapsed()) {
                Some(r) => Some(r),
                None => break,
            },
            None => None,
        };
        let step = exists_good_partition(
            f,
            v,
            t,
            &SearchOptions {
                budget: remaining,
                threads: opts.threads,
            },
        )?;
        outcome.nodes_explored += step.nodes_explored;
        match step.result {
            SearchResult::Found(p) => {
                outcome.kappa = Some(t);
                outcome.partition = Some(p);
                break;
            }
            SearchResult::ExhaustedNone => outcome.infeasible_below = t,
            SearchResult::TimedOut => break,
        }
    }
    outcome.elapsed = start.elapsed();
    Ok(outcome)
}
