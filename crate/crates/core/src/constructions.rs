//! Generators for the extremal families and for random instances.
//!
//! Ids follow construction order: root first then copies left to right for
//! `A_{k,v}`, and (length, left endpoint) order for the `J` families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::claw::find_claw;
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalFamily, IntervalId};
use crate::partition::Partition;

/// Families larger than this are refused rather than allocated.
pub const MAX_GENERATED: usize = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionSpec {
    A { k: usize, v: usize },
    J3,
    J4,
    J5,
    J6,
    Gardi,
    Random { n: usize, coord_range: i64, seed: u64 },
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<IntervalFamily> {
        match *self {
            ConstructionSpec::A { k, v } => build_a(k, v),
            ConstructionSpec::J3 => Ok(build_j3()),
            ConstructionSpec::J4 => Ok(build_j4()),
            ConstructionSpec::J5 => Ok(build_j5()),
            ConstructionSpec::J6 => Ok(build_j6()),
            ConstructionSpec::Gardi => Ok(build_gardi_fixture().0),
            ConstructionSpec::Random { n, coord_range, seed } => build_random(n, coord_range, seed),
        }
    }
}

/// `A_{k,v}`: one interval spanning `v+1` disjoint abutting copies of
/// `A_{k-1,v}`; `A_{1,v}` is a single unit interval. `G_k = A_{k,1}` and
/// `H_k = A_{k,2}`.
pub fn build_a(k: usize, v: usize) -> Result<IntervalFamily> {
    if k == 0 || v == 0 {
        return Err(Error::Precondition(format!(
            "A(k,v) needs k >= 1 and v >= 1, got k={k} v={v}"
        )));
    }
    let branching = v as i64 + 1;
    // widths[d] = (v+1)^d
    let mut widths = vec![1i64];
    let mut count: usize = 1;
    for _ in 1..k {
        let w = widths
            .last()
            .unwrap()
            .checked_mul(branching)
            .ok_or(Error::Overflow("A(k,v) coordinates"))?;
        widths.push(w);
        count = usize::try_from(w)
            .ok()
            .and_then(|w| count.checked_add(w))
            .filter(|&c| c <= MAX_GENERATED)
            .ok_or(Error::Overflow("A(k,v) size"))?;
    }

    fn place(level: usize, offset: i64, widths: &[i64], branching: i64, out: &mut Vec<Interval>) {
        let id = out.len() as IntervalId;
        out.push(Interval::new(id, offset, offset + widths[level - 1]).unwrap());
        if level > 1 {
            let sub = widths[level - 2];
            for i in 0..branching {
                place(level - 1, offset + i * sub, widths, branching, out);
            }
        }
    }

    let mut out = Vec::with_capacity(count);
    place(k, 0, &widths, branching, &mut out);
    debug_assert_eq!(out.len(), count);
    IntervalFamily::new(out)
}

/// Every interval with a length in `lengths` and endpoints in `[lo, hi]`,
/// ordered by length then left endpoint.
fn all_intervals(lengths: &[i64], lo: i64, hi: i64) -> IntervalFamily {
    let coords = lengths
        .iter()
        .flat_map(|&len| (lo..=hi - len).map(move |l| (l, l + len)));
    IntervalFamily::from_coords(coords).unwrap()
}

/// Lengths 1, 2, 3 with endpoints in `[0, 5]`: 12 intervals, ψ = 3.
pub fn build_j3() -> IntervalFamily {
    all_intervals(&[1, 2, 3], 0, 5)
}

/// Lengths 2..=7 with endpoints in `[0, 21]`: 105 intervals, ψ = 4.
pub fn build_j4() -> IntervalFamily {
    all_intervals(&[2, 3, 4, 5, 6, 7], 0, 21)
}

/// Lengths 1, 3, 5 with endpoints in `[0, 79]`: 231 intervals, ψ = 5.
pub fn build_j5() -> IntervalFamily {
    all_intervals(&[1, 3, 5], 0, 79)
}

/// 24 intervals: 13 consecutive units on `[0, 13]`, the length-3 interval
/// `(5, 8)` in the middle, length-5 intervals `(0, 5)` and `(8, 13)`, and
/// the eight length-6 intervals `(l, l + 6)` for `l = 0..=7`.
///
/// Consecutive length-6 intervals share five units, `(0, 5) ⊂ (0, 6)` and
/// `(8, 13) ⊂ (7, 13)`, and `(3, 9)` meets both length-5 intervals and the
/// middle block. ψ = 6.
pub fn build_j6() -> IntervalFamily {
    let units = (0..13).map(|l| (l, l + 1));
    let middle = std::iter::once((5, 8));
    let fives = [(0, 5), (8, 13)].into_iter();
    let sixes = (0..8).map(|l| (l, l + 6));
    IntervalFamily::from_coords(units.chain(middle).chain(fives).chain(sixes)).unwrap()
}

/// Nine intervals with ids 1..=9 whose sweepline cliques are
/// `{1,2},{3},{4},{5,6},{7},{8},{9}`, together with the two-part grouping
/// `{3,4,7,8}` / `{1,2,5,6,9}`. The second part contains the star with
/// center 5 and leaves 1, 6, 9.
pub fn build_gardi_fixture() -> (IntervalFamily, Partition) {
    let coords: [(IntervalId, i64, i64); 9] = [
        (1, 0, 4),
        (2, 0, 1),
        (3, 1, 2),
        (4, 2, 3),
        (5, 3, 8),
        (6, 4, 5),
        (7, 5, 6),
        (8, 6, 7),
        (9, 7, 8),
    ];
    let family = IntervalFamily::new(
        coords
            .iter()
            .map(|&(id, l, r)| Interval::new(id, l, r).unwrap())
            .collect(),
    )
    .unwrap();
    let part_of = |id: IntervalId| if [3, 4, 7, 8].contains(&id) { 1 } else { 2 };
    let partition = Partition::from_labels(family.ids().map(|id| (id, part_of(id))), 2);
    (family, partition)
}

/// `n` intervals with endpoints uniform on `[0, coord_range]`, redrawing
/// any pair with `left >= right`. Uses ChaCha8 seeded with `seed`, so the
/// output is stable across platforms and releases.
pub fn build_random(n: usize, coord_range: i64, seed: u64) -> Result<IntervalFamily> {
    if coord_range < 2 {
        return Err(Error::Precondition(format!(
            "coordinate range must be >= 2, got {coord_range}"
        )));
    }
    if n > MAX_GENERATED {
        return Err(Error::Overflow("random family size"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coords: Vec<(i64, i64)> = (0..n)
        .map(|_| loop {
            let l = rng.random_range(0..=coord_range);
            let r = rng.random_range(0..=coord_range);
            if l < r {
                break (l, r);
            }
        })
        .collect();
    IntervalFamily::from_coords(coords)
}

/// Removes star centers until ψ ≤ `w`. Surviving ids are unchanged.
pub fn trim_to_claw_number(f: &IntervalFamily, w: usize) -> IntervalFamily {
    let mut current = f.clone();
    while let Some(witness) = find_claw(&current, w) {
        let keep: Vec<Interval> = current.iter().filter(|iv| iv.id() != witness.center).copied().collect();
        current = IntervalFamily::new(keep).unwrap();
    }
    current
}
