//! Claw number ψ: the largest `v` such that some interval intersects `v`
//! pairwise-disjoint other intervals (an induced star `K_{1,v}`).

use std::fmt;

use crate::cover::sweep_order;
use crate::interval::{Interval, IntervalFamily, IntervalId};
use crate::par;

/// Certificate for ψ > v: a center and v+1 pairwise-disjoint neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClawWitness {
    pub center: IntervalId,
    pub leaves: Vec<IntervalId>,
}

impl ClawWitness {
    /// Checks the witness against `f`: every leaf exists, intersects the
    /// center, and the leaves are pairwise disjoint.
    pub fn is_valid_in(&self, f: &IntervalFamily) -> bool {
        let Some(center) = f.get(self.center) else {
            return false;
        };
        let mut leaves = Vec::with_capacity(self.leaves.len());
        for id in &self.leaves {
            match f.get(*id) {
                Some(l) if *id != self.center && l.intersects(center) => leaves.push(*l),
                _ => return false,
            }
        }
        leaves
            .iter()
            .enumerate()
            .all(|(i, a)| leaves[i + 1..].iter().all(|b| !a.intersects(b)))
    }
}

impl fmt::Display for ClawWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "center={} leaves=", self.center)?;
        for (i, l) in self.leaves.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Greedy maximum set of pairwise-disjoint neighbors of `ivs[c]`, scanning
/// `order` (sorted by right endpoint). Stops after `limit` picks.
fn disjoint_neighbors(ivs: &[Interval], order: &[usize], c: usize, limit: usize) -> Vec<usize> {
    let center = &ivs[c];
    let mut picked = Vec::new();
    let mut last = i64::MIN;
    for &y in order {
        if picked.len() >= limit {
            break;
        }
        let iv = &ivs[y];
        if y != c && iv.left() >= last && iv.intersects(center) {
            picked.push(y);
            last = iv.right();
        }
    }
    picked
}

pub(crate) fn claw_number_of(ivs: &[Interval]) -> usize {
    let order = sweep_order(ivs);
    par::max_range(ivs.len(), |c| disjoint_neighbors(ivs, &order, c, usize::MAX).len()).unwrap_or(0)
}

pub(crate) fn find_claw_of(ivs: &[Interval], v: usize) -> Option<ClawWitness> {
    let order = sweep_order(ivs);
    par::find_map_first(ivs.len(), |c| {
        let leaves = disjoint_neighbors(ivs, &order, c, v + 1);
        (leaves.len() > v).then(|| ClawWitness {
            center: ivs[c].id(),
            leaves: leaves.iter().map(|&l| ivs[l].id()).collect(),
        })
    })
}

/// ψ(f). The empty family and single intervals have claw number 0.
pub fn claw_number(f: &IntervalFamily) -> usize {
    claw_number_of(f.intervals())
}

/// Single-threaded ψ(f), regardless of the `parallel` feature.
pub fn claw_number_seq(f: &IntervalFamily) -> usize {
    let ivs = f.intervals();
    let order = sweep_order(ivs);
    (0..ivs.len())
        .map(|c| disjoint_neighbors(ivs, &order, c, usize::MAX).len())
        .max()
        .unwrap_or(0)
}

/// A star `K_{1,v+1}` in `f` if ψ(f) > v. The first center in family order
/// is reported, with leaves in left-to-right order.
pub fn find_claw(f: &IntervalFamily, v: usize) -> Option<ClawWitness> {
    find_claw_of(f.intervals(), v)
}

pub(crate) fn max_disjoint_properly_contained_in<'a, I>(x: &Interval, candidates: I) -> usize
where
    I: IntoIterator<Item = &'a Interval>,
{
    let mut inside: Vec<&Interval> = candidates.into_iter().filter(|y| x.properly_contains(y)).collect();
    inside.sort_by_key(|y| y.right());
    let mut last = i64::MIN;
    let mut count = 0;
    for y in inside {
        if y.left() >= last {
            count += 1;
            last = y.right();
        }
    }
    count
}

/// Size of a largest pairwise-disjoint set of intervals of `f` that `x`
/// properly contains. `x` itself never qualifies.
pub fn max_disjoint_properly_contained(x: &Interval, f: &IntervalFamily) -> usize {
    max_disjoint_properly_contained_in(x, f.iter())
}
