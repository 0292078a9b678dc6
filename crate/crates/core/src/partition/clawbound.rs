use crate::claw::{claw_number_of, find_claw_of};
use crate::cover::{components, sweep};
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalFamily};
use crate::par;

use super::theta::theta_labels;
use super::{pick, Partition};

/// Period of the selected cliques for input claw number `w > v`.
pub(crate) fn claw_period(w: usize, v: usize) -> usize {
    match v {
        1 => 2 * w,
        2 => (3 * w).div_ceil(2),
        _ => w.div_ceil(v - 2),
    }
}

pub(crate) fn claw_bounded_labels(ivs: &[Interval], v: usize) -> Result<Vec<usize>> {
    let n = ivs.len();
    let w = claw_number_of(ivs);
    if w <= v {
        return Ok(vec![0; n]);
    }
    let s = claw_period(w, v);
    debug_assert!(s >= 2);
    let cover = sweep(ivs);
    let mut labels = vec![usize::MAX; n];
    for (i, clique) in cover.greedy.iter().enumerate() {
        if (i + 1) % s == 0 {
            for &x in clique {
                labels[x] = 0;
            }
        }
    }
    let selected: Vec<usize> = (0..n).filter(|&x| labels[x] == 0).collect();
    if let Some(witness) = find_claw_of(&pick(ivs, &selected), v) {
        return Err(Error::ConstructionInvariant {
            what: "selected cliques exceed the claw bound",
            witness,
        });
    }

    let rest: Vec<usize> = (0..n).filter(|&x| labels[x] == usize::MAX).collect();
    let comps = components(ivs, &rest);
    let sub_labels = par::map(&comps, |comp| theta_labels(&pick(ivs, comp), v));
    for (comp, sub) in comps.iter().zip(sub_labels) {
        for (&x, l) in comp.iter().zip(sub) {
            labels[x] = l + 1;
        }
    }
    Ok(labels)
}

/// Partition driven by the measured claw number `w = ψ(f)`.
///
/// For `w > v`, every `s`-th greedy clique forms one part, with `s = 2w`
/// (v = 1), `⌈3w/2⌉` (v = 2) or `⌈w/(v−2)⌉` (v ≥ 3). The remaining
/// components have ϑ ≤ s − 1 and are split by [`partition_by_theta`].
/// Uses at most `1 + ⌈log_{v+1} s⌉` parts.
///
/// The selected part is rechecked; a star inside it is reported as
/// [`Error::ConstructionInvariant`].
///
/// [`partition_by_theta`]: super::partition_by_theta
pub fn partition_claw_bounded(f: &IntervalFamily, v: usize) -> Result<Partition> {
    if v == 0 {
        return Err(Error::Precondition("claw bound must be positive".into()));
    }
    let ivs = f.intervals();
    Ok(Partition::from_slice_labels(ivs, &claw_bounded_labels(ivs, v)?, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claw::claw_number;
    use crate::constructions::{build_a, build_j4, build_random};
    use crate::formula::kappa_hat_upper_generic;
    use crate::partition::verify_partition;

    #[test]
    fn periods() {
        assert_eq!(claw_period(3, 1), 6);
        assert_eq!(claw_period(4, 2), 6);
        assert_eq!(claw_period(9, 2), 14);
        assert_eq!(claw_period(5, 3), 5);
        assert_eq!(claw_period(7, 5), 3);
    }

    #[test]
    fn already_bounded_is_one_part() {
        let f = IntervalFamily::from_coords([(0, 10), (1, 2), (4, 5)]).unwrap();
        assert_eq!(partition_claw_bounded(&f, 2).unwrap().parts_count(), 1);
    }

    #[test]
    fn h3_uses_at_most_four_parts() {
        let f = build_a(3, 2).unwrap();
        let p = partition_claw_bounded(&f, 2).unwrap();
        assert!(p.parts_count() <= 4);
        assert_eq!(verify_partition(&f, &p, 2), Ok(None));
    }

    #[test]
    fn j4_uses_three_parts() {
        let f = build_j4();
        let p = partition_claw_bounded(&f, 2).unwrap();
        assert!(p.parts_count() <= 3);
        assert_eq!(verify_partition(&f, &p, 2), Ok(None));
    }

    #[test]
    fn random_within_corollary_bound() {
        for seed in 0..60 {
            let f = build_random(50, 40, seed).unwrap();
            let w = claw_number(&f);
            for v in 1..=5 {
                let p = partition_claw_bounded(&f, v).unwrap();
                assert_eq!(verify_partition(&f, &p, v), Ok(None));
                if w > v {
                    let upper = kappa_hat_upper_generic(w as u64, v as u64).unwrap();
                    assert!(p.parts_count() as u64 <= upper, "seed {seed} v {v} w {w}");
                }
            }
        }
    }
}
