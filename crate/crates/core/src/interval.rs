//! Open intervals with integer endpoints and families of them.
//!
//! An interval `(left, right)` is the open set of reals strictly between its
//! endpoints, so two intervals that only share an endpoint are disjoint. The
//! intersection graph of a family is the interval graph every other module
//! works on.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub type IntervalId = u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    id: IntervalId,
    left: i64,
    right: i64,
}

impl Interval {
    pub fn new(id: IntervalId, left: i64, right: i64) -> Result<Self> {
        if left >= right {
            return Err(Error::EmptyInterval { id, left, right });
        }
        Ok(Interval { id, left, right })
    }

    #[inline]
    pub fn id(&self) -> IntervalId {
        self.id
    }

    #[inline]
    pub fn left(&self) -> i64 {
        self.left
    }

    #[inline]
    pub fn right(&self) -> i64 {
        self.right
    }

    #[inline]
    pub fn length(&self) -> i64 {
        self.right - self.left
    }

    /// Same interval under a different id.
    pub fn with_id(self, id: IntervalId) -> Self {
        Interval { id, ..self }
    }

    /// Translated copy; `offset` must keep both endpoints in range.
    pub fn shifted(self, offset: i64) -> Self {
        Interval {
            left: self.left + offset,
            right: self.right + offset,
            ..self
        }
    }

    #[inline]
    pub fn intersects(&self, other: &Interval) -> bool {
        intersects(self, other)
    }

    #[inline]
    pub fn properly_contains(&self, other: &Interval) -> bool {
        properly_contains(self, other)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}({}, {})", self.id, self.left, self.right)
    }
}

/// Open intervals share a point iff each starts before the other ends.
#[inline]
pub fn intersects(a: &Interval, b: &Interval) -> bool {
    a.left < b.right && b.left < a.right
}

/// `a` is a strict superset of `b` as a point set. Equal coordinates never
/// properly contain each other.
#[inline]
pub fn properly_contains(a: &Interval, b: &Interval) -> bool {
    a.left <= b.left && b.right <= a.right && (a.left < b.left || b.right < a.right)
}

/// An ordered family of intervals with unique ids.
#[derive(Debug, Clone, Default)]
pub struct IntervalFamily {
    intervals: Vec<Interval>,
    index: HashMap<IntervalId, usize>,
}

impl PartialEq for IntervalFamily {
    fn eq(&self, other: &Self) -> bool {
        self.intervals == other.intervals
    }
}

impl Eq for IntervalFamily {}

impl IntervalFamily {
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        let mut index = HashMap::with_capacity(intervals.len());
        for (pos, iv) in intervals.iter().enumerate() {
            if index.insert(iv.id, pos).is_some() {
                return Err(Error::DuplicateId(iv.id));
            }
        }
        Ok(IntervalFamily { intervals, index })
    }

    /// Builds a family from coordinate pairs, numbering ids from 0.
    pub fn from_coords<I>(coords: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let intervals = coords
            .into_iter()
            .enumerate()
            .map(|(id, (l, r))| Interval::new(id as IntervalId, l, r))
            .collect::<Result<Vec<_>>>()?;
        IntervalFamily::new(intervals)
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interval> {
        self.intervals.iter()
    }

    pub fn get(&self, id: IntervalId) -> Option<&Interval> {
        self.index.get(&id).map(|&pos| &self.intervals[pos])
    }

    pub fn position(&self, id: IntervalId) -> Option<usize> {
        self.index.get(&id).copied()
    }

    pub fn contains_id(&self, id: IntervalId) -> bool {
        self.index.contains_key(&id)
    }

    pub fn ids(&self) -> impl Iterator<Item = IntervalId> + '_ {
        self.intervals.iter().map(|iv| iv.id)
    }

    /// The subfamily of the given ids, in family order. Unknown ids are ignored.
    pub fn subfamily(&self, ids: &[IntervalId]) -> IntervalFamily {
        let mut positions: Vec<usize> = ids.iter().filter_map(|id| self.position(*id)).collect();
        positions.sort_unstable();
        positions.dedup();
        let intervals = positions.into_iter().map(|p| self.intervals[p]).collect();
        IntervalFamily::new(intervals).expect("subset of unique ids")
    }

    /// Leftmost and rightmost endpoints, if any.
    pub fn span(&self) -> Option<(i64, i64)> {
        let left = self.intervals.iter().map(|iv| iv.left).min()?;
        let right = self.intervals.iter().map(|iv| iv.right).max()?;
        Some((left, right))
    }
}

impl<'a> IntoIterator for &'a IntervalFamily {
    type Item = &'a Interval;
    type IntoIter = std::slice::Iter<'a, Interval>;

    fn into_iter(self) -> Self::IntoIter {
        self.intervals.iter()
    }
}

impl TryFrom<Vec<Interval>> for IntervalFamily {
    type Error = Error;

    fn try_from(intervals: Vec<Interval>) -> Result<Self> {
        IntervalFamily::new(intervals)
    }
}
