//! Sweepline computation of a maximum independent set and a minimum clique
//! partition, which have equal size on interval graphs.

use crate::interval::{Interval, IntervalFamily, IntervalId};

/// Output of the sweepline. All lists are indexed by round, first round first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCover {
    /// `T_i`: the interval with minimum right endpoint in round `i`.
    pub stabbers: Vec<IntervalId>,
    /// `r_i`: right endpoint of `T_i`, strictly increasing.
    pub stab_points: Vec<i64>,
    /// `I'_i`: the still-uncovered intervals containing `(r_i - 1, r_i)`.
    /// These partition the family.
    pub cliques: Vec<Vec<IntervalId>>,
    /// `I_i`: every interval of the family containing `(r_i - 1, r_i)`.
    pub greedy_cliques: Vec<Vec<IntervalId>>,
}

impl CliqueCover {
    /// Number of rounds `j`, equal to both α and ϑ.
    pub fn len(&self) -> usize {
        self.stabbers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stabbers.is_empty()
    }
}

/// Index-based cover over a slice; positions refer to the slice.
#[derive(Debug, Clone)]
pub(crate) struct RawCover {
    pub stabbers: Vec<usize>,
    pub points: Vec<i64>,
    pub cliques: Vec<Vec<usize>>,
    pub greedy: Vec<Vec<usize>>,
}

impl RawCover {
    pub fn len(&self) -> usize {
        self.stabbers.len()
    }
}

/// Processing order of the sweep: right endpoint ascending, then larger
/// left endpoint, then smaller id.
pub(crate) fn sweep_order(ivs: &[Interval]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..ivs.len()).collect();
    order.sort_by(|&a, &b| {
        let (x, y) = (&ivs[a], &ivs[b]);
        x.right()
            .cmp(&y.right())
            .then(y.left().cmp(&x.left()))
            .then(x.id().cmp(&y.id()))
    });
    order
}

pub(crate) fn sweep(ivs: &[Interval]) -> RawCover {
    let by_right = sweep_order(ivs);
    let mut by_left: Vec<usize> = (0..ivs.len()).collect();
    by_left.sort_by_key(|&i| (ivs[i].left(), ivs[i].id()));

    let mut covered = vec![false; ivs.len()];
    let mut cover = RawCover {
        stabbers: Vec::new(),
        points: Vec::new(),
        cliques: Vec::new(),
        greedy: Vec::new(),
    };
    let mut left_cursor = 0;
    for &t in &by_right {
        if covered[t] {
            continue;
        }
        let r = ivs[t].right();
        // Every uncovered interval ends at or after r, so it contains the
        // unit (r - 1, r) exactly when it starts before r.
        let mut clique = Vec::new();
        while left_cursor < by_left.len() && ivs[by_left[left_cursor]].left() < r {
            let x = by_left[left_cursor];
            if !covered[x] {
                covered[x] = true;
                clique.push(x);
            }
            left_cursor += 1;
        }
        cover.stabbers.push(t);
        cover.points.push(r);
        cover.cliques.push(clique);
    }

    cover.greedy = cover
        .points
        .iter()
        .map(|&r| {
            (0..ivs.len())
                .filter(|&x| ivs[x].left() < r && ivs[x].right() >= r)
                .collect()
        })
        .collect();
    cover
}

/// Runs the sweepline on `f`. An empty family yields an empty cover.
pub fn sweepline_cover(f: &IntervalFamily) -> CliqueCover {
    let ivs = f.intervals();
    let raw = sweep(ivs);
    let ids = |xs: &Vec<usize>| xs.iter().map(|&x| ivs[x].id()).collect::<Vec<_>>();
    CliqueCover {
        stabbers: raw.stabbers.iter().map(|&x| ivs[x].id()).collect(),
        stab_points: raw.points.clone(),
        cliques: raw.cliques.iter().map(ids).collect(),
        greedy_cliques: raw.greedy.iter().map(ids).collect(),
    }
}

/// Independence number, equal to the clique partition number.
pub fn independence_number(f: &IntervalFamily) -> usize {
    sweep(f.intervals()).len()
}

/// Connected components of the subfamily given by `members`, ordered by
/// leftmost coordinate. Each component lists positions sorted by left endpoint.
pub(crate) fn components(ivs: &[Interval], members: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = members.to_vec();
    sorted.sort_by_key(|&i| (ivs[i].left(), ivs[i].right(), ivs[i].id()));
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut reach = i64::MIN;
    for i in sorted {
        if out.is_empty() || ivs[i].left() >= reach {
            out.push(Vec::new());
            reach = ivs[i].right();
        } else {
            reach = reach.max(ivs[i].right());
        }
        out.last_mut().unwrap().push(i);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_overlapping_intervals() {
        let f = IntervalFamily::from_coords([(0, 2), (1, 3), (2, 4)]).unwrap();
        let c = sweepline_cover(&f);
        assert_eq!(c.len(), 2);
        assert_eq!(c.stabbers, vec![0, 2]);
        assert_eq!(c.stab_points, vec![2, 4]);
        assert_eq!(c.cliques, vec![vec![0, 1], vec![2]]);
        assert_eq!(c.greedy_cliques, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn single_and_empty() {
        let f = IntervalFamily::from_coords([(0, 1)]).unwrap();
        assert_eq!(sweepline_cover(&f).len(), 1);
        assert!(sweepline_cover(&IntervalFamily::default()).is_empty());
    }

    #[test]
    fn ties_prefer_larger_left_then_smaller_id() {
        // (0,3), (2,3) and (2,3) all end at 3.
        let f = IntervalFamily::from_coords([(0, 3), (2, 3), (2, 3)]).unwrap();
        let c = sweepline_cover(&f);
        assert_eq!(c.stabbers, vec![1]);
        assert_eq!(c.cliques, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn components_split_at_shared_endpoints() {
        let f = IntervalFamily::from_coords([(0, 2), (2, 4), (1, 3), (5, 6)]).unwrap();
        let comps = components(f.intervals(), &[0, 1, 3]);
        assert_eq!(comps, vec![vec![0], vec![1], vec![3]]);
        let comps = components(f.intervals(), &[0, 1, 2, 3]);
        assert_eq!(comps, vec![vec![0, 2, 1], vec![3]]);
    }
}
