//! Fixed-part-count partitions for small claw numbers.

use crate::claw::{find_claw_of, max_disjoint_properly_contained_in};
use crate::cover::sweep;
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalFamily};

use super::Partition;

fn require_claw_at_most(ivs: &[Interval], bound: usize) -> Result<()> {
    match find_claw_of(ivs, bound) {
        Some(witness) => Err(Error::ClawBound { bound, witness }),
        None => Ok(()),
    }
}

/// Labels by the 1-based index `i` of the partitioning clique `I'_i`.
fn clique_index_labels(ivs: &[Interval], label: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut labels = vec![0; ivs.len()];
    for (i, clique) in sweep(ivs).cliques.iter().enumerate() {
        for &x in clique {
            labels[x] = label(i + 1);
        }
    }
    labels
}

pub(crate) fn cluster_mod_w_labels(ivs: &[Interval], w: usize) -> Result<Vec<usize>> {
    require_claw_at_most(ivs, w)?;
    Ok(clique_index_labels(ivs, |i| i % w))
}

/// Splits a family with ψ ≤ `w` into `w` cluster graphs: part `h` takes the
/// cliques `I'_i` with `i ≡ h (mod w)`.
///
/// Cliques in the same part are at least `w` rounds apart, and an interval
/// meeting two of them would meet `w + 1` disjoint intervals, so parts have
/// no edges between cliques.
pub fn partition_cluster_mod_w(f: &IntervalFamily, w: usize) -> Result<Partition> {
    if w == 0 {
        return Err(Error::Precondition("w must be positive".into()));
    }
    let ivs = f.intervals();
    Ok(Partition::from_slice_labels(ivs, &cluster_mod_w_labels(ivs, w)?, 1))
}

/// Splits a family with ψ ≤ 3 into two parts with ψ ≤ 2: cliques `I'_i`
/// with `i mod 4 ∈ {0, 1}` and those with `i mod 4 ∈ {2, 3}`.
pub fn partition_w3_to_v2(f: &IntervalFamily) -> Result<Partition> {
    let ivs = f.intervals();
    require_claw_at_most(ivs, 3)?;
    let labels = clique_index_labels(ivs, |i| if i % 4 <= 1 { 0 } else { 1 });
    Ok(Partition::from_slice_labels(ivs, &labels, 2))
}

pub(crate) fn w5_to_v3_labels(ivs: &[Interval]) -> Result<Vec<usize>> {
    require_claw_at_most(ivs, 5)?;
    Ok(ivs
        .iter()
        .map(|x| usize::from(max_disjoint_properly_contained_in(x, ivs) >= 2))
        .collect())
}

/// Splits a family with ψ ≤ 5 into two parts with ψ ≤ 3: intervals properly
/// containing fewer than two disjoint intervals of the whole family, and
/// those containing at least two.
pub fn partition_w5_to_v3(f: &IntervalFamily) -> Result<Partition> {
    let ivs = f.intervals();
    Ok(Partition::from_slice_labels(ivs, &w5_to_v3_labels(ivs)?, 3))
}
