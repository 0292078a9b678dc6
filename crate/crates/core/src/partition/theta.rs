use crate::cover::{components, sweep};
use crate::interval::{Interval, IntervalFamily};
use crate::par;

use super::{pick, Partition};

/// Labels `0..k` for a family with ϑ ≤ (v+1)^k − 1.
///
/// Label 0 takes every greedy clique `I_i` with `i ≡ 0 (mod s+1)`, where
/// `s = (v+1)^{k-1} − 1`; these are at most `v` cliques. The rest splits into
/// components with ϑ ≤ s, each labelled recursively from 1.
pub(crate) fn theta_labels(ivs: &[Interval], v: usize) -> Vec<usize> {
    let n = ivs.len();
    let cover = sweep(ivs);
    let j = cover.len();
    if j <= v {
        return vec![0; n];
    }
    // smallest k with j <= (v+1)^k - 1, then s + 1 = (v+1)^{k-1}
    let mut block = 1usize;
    while block.saturating_mul(v + 1) <= j {
        block = block.saturating_mul(v + 1);
    }
    let mut labels = vec![usize::MAX; n];
    for (i, clique) in cover.greedy.iter().enumerate() {
        if (i + 1) % block == 0 {
            for &x in clique {
                labels[x] = 0;
            }
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&x| labels[x] == usize::MAX).collect();
    let comps = components(ivs, &rest);
    let sub_labels = par::map(&comps, |comp| theta_labels(&pick(ivs, comp), v));
    for (comp, sub) in comps.iter().zip(sub_labels) {
        for (&x, l) in comp.iter().zip(sub) {
            labels[x] = l + 1;
        }
    }
    labels
}

/// Partition into at most `k` parts of claw number ≤ `v`, where `k` is the
/// smallest integer with ϑ(f) ≤ (v+1)^k − 1.
///
/// Panics if `v == 0`.
pub fn partition_by_theta(f: &IntervalFamily, v: usize) -> Partition {
    assert!(v >= 1, "claw bound must be positive");
    let ivs = f.intervals();
    Partition::from_slice_labels(ivs, &theta_labels(ivs, v), v)
}
