use crate::formula::{kappa_formula, mu_formula};
use crate::interval::{Interval, IntervalFamily};

use super::decompose::decompose_raw;
use super::{pick, Partition};

/// Labels `0..κ(n,v)`.
///
/// With `k = κ(n,v)` and `s = μ(k−1,v)`, the 2r+1 decomposition has
/// `r ≤ v+1`. Every `X_i` and `Z` holds at most `s` intervals and they are
/// pairwise separated, so they share labels `0..k−1` from the recursion. The
/// `Y_i` go together under label `k−1`: either at most `v` cliques, or `v+1`
/// singletons.
fn kappa_labels(ivs: &[Interval], v: usize) -> Vec<usize> {
    let n = ivs.len();
    if n <= v + 1 {
        return vec![0; n];
    }
    let k = kappa_formula(n as u64, v as u64) as usize;
    let s = mu_formula(k as u64 - 1, v as u64).expect("mu(k-1,v) < n fits") as usize;
    let d = decompose_raw(ivs, s);
    let r = d.xs.len();
    assert!(
        r >= 1 && r <= v + 1,
        "decomposition produced r = {r} rounds for v = {v}"
    );
    if r == v + 1 {
        assert!(
            d.z.is_empty() && d.ys.iter().all(|y| y.len() == 1),
            "r = v+1 requires singleton Y blocks and empty Z"
        );
    }

    let mut labels = vec![k - 1; n];
    for block in d.xs.iter().chain(std::iter::once(&d.z)) {
        let sub = kappa_labels(&pick(ivs, block), v);
        for (&x, l) in block.iter().zip(sub) {
            debug_assert!(l < k - 1);
            labels[x] = l;
        }
    }
    labels
}

/// Partition into at most κ(n,v) = ⌊log_{v+1}(nv+1)⌋ parts of claw number
/// ≤ `v`, which is optimal over all n-vertex interval graphs.
///
/// Panics if `v == 0`.
pub fn partition_optimal_kappa(f: &IntervalFamily, v: usize) -> Partition {
    assert!(v >= 1, "claw bound must be positive");
    let ivs = f.intervals();
    Partition::from_slice_labels(ivs, &kappa_labels(ivs, v), v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_a, build_random};
    use crate::partition::verify_partition;

    #[test]
    fn tiny_family_is_one_part() {
        let f = IntervalFamily::from_coords([(0, 10), (1, 2), (4, 5)]).unwrap();
        assert_eq!(partition_optimal_kappa(&f, 2).parts_count(), 1);
    }

    #[test]
    fn binary_clique_needs_three() {
        let f = build_a(3, 1).unwrap();
        let p = partition_optimal_kappa(&f, 1);
        assert_eq!(p.parts_count(), 3);
        assert_eq!(verify_partition(&f, &p, 1), Ok(None));
    }

    #[test]
    fn a_families_get_exactly_k() {
        for (k, v) in [(2, 1), (3, 2), (4, 1), (4, 2), (3, 4)] {
            let f = build_a(k, v).unwrap();
            let p = partition_optimal_kappa(&f, v);
            assert_eq!(p.parts_count(), k);
            assert_eq!(verify_partition(&f, &p, v), Ok(None));
        }
    }

    #[test]
    fn random_families_respect_formula() {
        for seed in 0..40 {
            let f = build_random(60, 50, seed).unwrap();
            for v in 1..=4 {
                let p = partition_optimal_kappa(&f, v);
                assert!(p.parts_count() as u64 <= kappa_formula(60, v as u64));
                assert_eq!(verify_partition(&f, &p, v), Ok(None));
            }
        }
    }
}
