use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalFamily, IntervalId};

/// Split of a family into blocks `X_1..X_r`, `Y_1..Y_r` and `Z` such that
///
/// 1. intervals from different blocks among the `X_i` and `Z` are disjoint,
/// 2. each `Y_i` is a clique,
/// 3. `|Z| ≤ |X_i| = s < |X_i| + |Y_i|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoRPlusOneDecomposition {
    pub x_blocks: Vec<Vec<IntervalId>>,
    pub y_blocks: Vec<Vec<IntervalId>>,
    pub z_block: Vec<IntervalId>,
    pub s: usize,
}

impl TwoRPlusOneDecomposition {
    /// Number of rounds `r`.
    pub fn rounds(&self) -> usize {
        self.x_blocks.len()
    }

    /// Checks that the blocks partition `f` and satisfy all three properties.
    pub fn validate(&self, f: &IntervalFamily) -> Result<()> {
        let fail = |msg: String| Err(Error::Precondition(msg));
        let mut seen = HashSet::new();
        let all = self
            .x_blocks
            .iter()
            .chain(&self.y_blocks)
            .flatten()
            .chain(&self.z_block);
        for &id in all {
            if !f.contains_id(id) {
                return fail(format!("block member {id} not in family"));
            }
            if !seen.insert(id) {
                return fail(format!("interval {id} appears in two blocks"));
            }
        }
        if seen.len() != f.len() {
            return fail(format!("blocks cover {} of {} intervals", seen.len(), f.len()));
        }
        if self.x_blocks.len() != self.y_blocks.len() {
            return fail("X and Y block counts differ".into());
        }

        let get = |id: &IntervalId| *f.get(*id).unwrap();
        let mut separated: Vec<Vec<Interval>> = self.x_blocks.iter().map(|b| b.iter().map(get).collect()).collect();
        separated.push(self.z_block.iter().map(get).collect());
        for (i, a) in separated.iter().enumerate() {
            for b in &separated[i + 1..] {
                if let Some((p, q)) = a
                    .iter()
                    .flat_map(|p| b.iter().map(move |q| (p, q)))
                    .find(|(p, q)| p.intersects(q))
                {
                    return fail(format!("{p} and {q} lie in different separated blocks but intersect"));
                }
            }
        }

        for (i, y) in self.y_blocks.iter().enumerate() {
            let ys: Vec<Interval> = y.iter().map(get).collect();
            for (a, p) in ys.iter().enumerate() {
                if let Some(q) = ys[a + 1..].iter().find(|q| !p.intersects(q)) {
                    return fail(format!("Y_{} is not a clique: {p} and {q} are disjoint", i + 1));
                }
            }
        }

        if self.z_block.len() > self.s {
            return fail(format!("|Z| = {} exceeds s = {}", self.z_block.len(), self.s));
        }
        for (i, (x, y)) in self.x_blocks.iter().zip(&self.y_blocks).enumerate() {
            if x.len() != self.s || x.len() + y.len() <= self.s {
                return fail(format!(
                    "round {}: |X| = {}, |Y| = {}, s = {}",
                    i + 1,
                    x.len(),
                    y.len(),
                    self.s
                ));
            }
        }
        Ok(())
    }
}

/// Positions of each block in the input slice.
pub(crate) struct RawDecomposition {
    pub xs: Vec<Vec<usize>>,
    pub ys: Vec<Vec<usize>>,
    pub z: Vec<usize>,
}

/// The round loop: while more than `s` intervals remain, take the smallest
/// `b` such that more than `s` remaining intervals end by `b`; `X` is `s` of
/// them including every one ending before `b`; `Y` is what else starts
/// before `b`; the rest (contained in `(b, c)`) carries on.
pub(crate) fn decompose_raw(ivs: &[Interval], s: usize) -> RawDecomposition {
    debug_assert!(s >= 1);
    let mut remaining: Vec<usize> = (0..ivs.len()).collect();
    // (right, id) order; within right == b the fill takes smallest id first
    remaining.sort_by_key(|&x| (ivs[x].right(), ivs[x].id()));
    let mut out = RawDecomposition {
        xs: Vec::new(),
        ys: Vec::new(),
        z: Vec::new(),
    };
    while remaining.len() > s {
        // |Z(a, b)| counts remaining intervals with right <= b
        let b = ivs[remaining[s]].right();
        let x: Vec<usize> = remaining[..s].to_vec();
        debug_assert!(remaining[..s].iter().all(|&p| ivs[p].right() <= b));
        let (y, z): (Vec<usize>, Vec<usize>) = remaining[s..].iter().partition(|&&p| ivs[p].left() < b);
        out.xs.push(x);
        out.ys.push(y);
        remaining = z;
    }
    out.z = remaining;
    out
}

/// Runs the 2r+1 decomposition with block size `s ≥ 1`.
pub fn decompose_2r_plus_1(f: &IntervalFamily, s: usize) -> Result<TwoRPlusOneDecomposition> {
    if s == 0 {
        return Err(Error::Precondition("block size s must be at least 1".into()));
    }
    let ivs = f.intervals();
    let raw = decompose_raw(ivs, s);
    let ids = |b: &Vec<usize>| b.iter().map(|&p| ivs[p].id()).collect::<Vec<_>>();
    Ok(TwoRPlusOneDecomposition {
        x_blocks: raw.xs.iter().map(ids).collect(),
        y_blocks: raw.ys.iter().map(ids).collect(),
        z_block: ids(&raw.z),
        s,
    })
}
