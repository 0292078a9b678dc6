//! Constructive partitions into parts of bounded claw number.
//!
//! Each algorithm works on a slice of intervals and produces one label per
//! position; [`Partition`] turns labels into compacted 1-based part indices.

mod clawbound;
mod decompose;
mod kappa;
mod special;
mod theta;

use std::collections::{BTreeMap, BTreeSet};

pub use clawbound::partition_claw_bounded;
pub use decompose::{decompose_2r_plus_1, TwoRPlusOneDecomposition};
pub use kappa::partition_optimal_kappa;
pub use special::{partition_cluster_mod_w, partition_w3_to_v2, partition_w5_to_v3};
pub use theta::partition_by_theta;

pub(crate) use clawbound::claw_bounded_labels;
pub(crate) use special::{cluster_mod_w_labels, w5_to_v3_labels};

use crate::claw::{find_claw_of, ClawWitness};
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalFamily, IntervalId};

/// Assignment of every interval id to a part `1..=parts_count`, with the
/// claw bound `v` the parts are meant to satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    assignment: BTreeMap<IntervalId, usize>,
    parts_count: usize,
    v: usize,
}

impl Partition {
    /// Builds a partition from arbitrary labels. Distinct labels are renumbered
    /// `1..=m` in increasing label order, so unused labels leave no empty part.
    pub fn from_labels<I>(labels: I, v: usize) -> Self
    where
        I: IntoIterator<Item = (IntervalId, usize)>,
    {
        let raw: BTreeMap<IntervalId, usize> = labels.into_iter().collect();
        let distinct: BTreeSet<usize> = raw.values().copied().collect();
        let rank: BTreeMap<usize, usize> = distinct
            .into_iter()
            .enumerate()
            .map(|(i, label)| (label, i + 1))
            .collect();
        let assignment: BTreeMap<_, _> = raw.into_iter().map(|(id, l)| (id, rank[&l])).collect();
        Partition {
            parts_count: rank.len(),
            assignment,
            v,
        }
    }

    /// Everything in one part.
    pub fn single(f: &IntervalFamily, v: usize) -> Self {
        Partition::from_labels(f.ids().map(|id| (id, 0)), v)
    }

    pub(crate) fn from_slice_labels(ivs: &[Interval], labels: &[usize], v: usize) -> Self {
        debug_assert_eq!(ivs.len(), labels.len());
        Partition::from_labels(ivs.iter().zip(labels).map(|(iv, &l)| (iv.id(), l)), v)
    }

    pub fn parts_count(&self) -> usize {
        self.parts_count
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn part_of(&self, id: IntervalId) -> Option<usize> {
        self.assignment.get(&id).copied()
    }

    /// `(id, part)` pairs sorted by id.
    pub fn iter(&self) -> impl Iterator<Item = (IntervalId, usize)> + '_ {
        self.assignment.iter().map(|(&id, &p)| (id, p))
    }

    /// Ids of each part, part 1 first, ids ascending.
    pub fn parts(&self) -> Vec<Vec<IntervalId>> {
        let mut parts = vec![Vec::new(); self.parts_count];
        for (&id, &p) in &self.assignment {
            parts[p - 1].push(id);
        }
        parts
    }
}

/// Checks every part of `p` for a star `K_{1,v+1}`. Returns the first one
/// found (by part, then by family order), or `None` if all parts have
/// ψ ≤ `v`. Fails if `p` does not cover exactly the ids of `f`.
pub fn verify_partition(f: &IntervalFamily, p: &Partition, v: usize) -> Result<Option<ClawWitness>> {
    if let Some(id) = f.ids().find(|id| p.part_of(*id).is_none()) {
        return Err(Error::IdMismatch(format!("interval {id} is not assigned")));
    }
    if let Some((id, _)) = p.iter().find(|(id, _)| !f.contains_id(*id)) {
        return Err(Error::IdMismatch(format!("assigned id {id} is not in the family")));
    }
    let mut parts: Vec<Vec<Interval>> = vec![Vec::new(); p.parts_count()];
    for iv in f {
        parts[p.part_of(iv.id()).unwrap() - 1].push(*iv);
    }
    Ok(parts.iter().find_map(|part| find_claw_of(part, v)))
}

/// Intervals at the given positions, in the given order.
pub(crate) fn pick(ivs: &[Interval], positions: &[usize]) -> Vec<Interval> {
    positions.iter().map(|&i| ivs[i]).collect()
}
