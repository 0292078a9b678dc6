//! Approximation for Min-Partition(v) by peeling proper-containment layers.
//!
//! Layer 1 holds the intervals that do not properly contain `v+1` disjoint
//! intervals of the family; the rest is peeled again. With `k` layers the
//! family contains `A_{k,v}`, so no partition uses fewer than `k` parts,
//! while each layer has ψ ≤ v+2 and splits into a constant number `t` of
//! parts.

use crate::claw::{claw_number_of, find_claw_of, max_disjoint_properly_contained_in};
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalFamily, IntervalId};
use crate::par;
use crate::partition::{claw_bounded_labels, cluster_mod_w_labels, pick, w5_to_v3_labels, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelResult {
    /// Layers `I_1..I_k`, each in family order.
    pub layers: Vec<Vec<IntervalId>>,
    pub k: usize,
}

impl PeelResult {
    /// Checks that the layers partition `f`, that every layer has ψ ≤ v+2 and
    /// that each interval of layer `i ≥ 2` properly contains `v+1` disjoint
    /// intervals of layer `i−1`.
    pub fn validate(&self, f: &IntervalFamily, v: usize) -> Result<()> {
        let fail = |msg: String| Err(Error::Precondition(msg));
        if self.k != self.layers.len() {
            return fail(format!("k = {} but {} layers", self.k, self.layers.len()));
        }
        let total: usize = self.layers.iter().map(Vec::len).sum();
        if total != f.len() || self.layers.iter().flatten().any(|id| !f.contains_id(*id)) {
            return fail("layers do not cover the family".into());
        }
        let layer_ivs: Vec<Vec<Interval>> = self
            .layers
            .iter()
            .map(|l| l.iter().map(|id| *f.get(*id).unwrap()).collect())
            .collect();
        for (i, ivs) in layer_ivs.iter().enumerate() {
            if let Some(w) = find_claw_of(ivs, v + 2) {
                return fail(format!("layer {} has claw number above {}: {w}", i + 1, v + 2));
            }
            if i > 0 {
                if let Some(x) = ivs
                    .iter()
                    .find(|x| max_disjoint_properly_contained_in(x, &layer_ivs[i - 1]) <= v)
                {
                    return fail(format!(
                        "{x} in layer {} contains too few intervals of layer {i}",
                        i + 1
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Repeatedly splits off the intervals that properly contain fewer than
/// `v+1` pairwise-disjoint intervals of what remains.
///
/// Panics if `v == 0`.
pub fn peel_layers(f: &IntervalFamily, v: usize) -> PeelResult {
    assert!(v >= 1, "claw bound must be positive");
    let mut rest: Vec<Interval> = f.intervals().to_vec();
    let mut layers = Vec::new();
    while !rest.is_empty() {
        let heavy = par::map(&rest, |x| max_disjoint_properly_contained_in(x, &rest) > v);
        let (upper, layer): (Vec<_>, Vec<_>) = rest.iter().zip(&heavy).partition(|(_, &h)| h);
        // a shortest interval contains nothing, so every layer is non-empty
        assert!(!layer.is_empty());
        layers.push(layer.into_iter().map(|(x, _)| x.id()).collect());
        rest = upper.into_iter().map(|(x, _)| *x).collect();
    }
    let k = layers.len();
    PeelResult { layers, k }
}

/// Number of parts the per-layer partition may use: 3 for v ≤ 2, else 2.
pub fn ratio_cap(v: usize) -> usize {
    if v <= 2 {
        3
    } else {
        2
    }
}

fn claw_v_plus_2_labels(ivs: &[Interval], v: usize) -> Result<Vec<usize>> {
    if let Some(witness) = find_claw_of(ivs, v + 2) {
        return Err(Error::ClawBound { bound: v + 2, witness });
    }
    match v {
        1 => cluster_mod_w_labels(ivs, 3),
        3 => w5_to_v3_labels(ivs),
        _ => claw_bounded_labels(ivs, v),
    }
}

/// Partition of a family with ψ ≤ v+2 into at most [`ratio_cap`]`(v)` parts
/// of claw number ≤ `v`.
///
/// v = 1 uses the three cluster classes, v = 3 the two containment classes,
/// and every other `v` the claw-bounded construction.
pub fn partition_claw_v_plus_2(f: &IntervalFamily, v: usize) -> Result<Partition> {
    if v == 0 {
        return Err(Error::Precondition("claw bound must be positive".into()));
    }
    let ivs = f.intervals();
    Ok(Partition::from_slice_labels(ivs, &claw_v_plus_2_labels(ivs, v)?, v))
}

#[derive(Debug, Clone)]
pub struct ApproxReport {
    pub partition: Partition,
    /// Number of layers; no partition of the family uses fewer parts.
    pub lower_bound: usize,
    pub ratio_cap: usize,
    pub layers: PeelResult,
}

/// Peels the family and partitions every layer on its own. Parts are
/// numbered layer by layer, so parts of layer 1 come first.
pub fn approx_min_partition(f: &IntervalFamily, v: usize) -> Result<ApproxReport> {
    if v == 0 {
        return Err(Error::Precondition("claw bound must be positive".into()));
    }
    let layers = peel_layers(f, v);
    debug_assert_eq!(layers.validate(f, v), Ok(()));

    let layer_ivs: Vec<Vec<Interval>> = layers
        .layers
        .iter()
        .map(|l| {
            let pos: Vec<usize> = l.iter().map(|id| f.position(*id).unwrap()).collect();
            pick(f.intervals(), &pos)
        })
        .collect();
    let per_layer = par::map(&layer_ivs, |ivs| claw_v_plus_2_labels(ivs, v));

    let mut labels = Vec::with_capacity(f.len());
    let mut offset = 0;
    for (ivs, sub) in layer_ivs.iter().zip(per_layer) {
        let sub = sub?;
        let width = sub.iter().max().map_or(0, |m| m + 1);
        labels.extend(ivs.iter().zip(sub).map(|(x, l)| (x.id(), offset + l)));
        offset += width;
    }
    let partition = Partition::from_labels(labels, v);
    let cap = ratio_cap(v);
    if partition.parts_count() > cap * layers.k {
        let worst = layer_ivs.iter().map(|l| claw_number_of(l)).max().unwrap_or(0);
        return Err(Error::Precondition(format!(
            "approximation used {} parts for {} layers (max layer claw number {worst})",
            partition.parts_count(),
            layers.k
        )));
    }
    Ok(ApproxReport {
        partition,
        lower_bound: layers.k,
        ratio_cap: cap,
        layers,
    })
}
