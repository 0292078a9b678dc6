//! Data-parallel helpers. With the `parallel` feature these run on rayon;
//! without it they fall back to plain iterators with identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Ordered map over a slice.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Ordered map over `0..n`.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// First `Some` in index order, as a sequential scan would find it.
pub fn find_map_first<R, F>(n: usize, f: F) -> Option<R>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).find_map(f)
    }
}

pub fn max_range<F>(n: usize, f: F) -> Option<usize>
where
    F: Fn(usize) -> usize + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).max()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).max()
    }
}

/// Evaluates `f` for every seed, returning results in seed order. Used for
/// randomized sweeps over generated instances.
pub fn map_seeds<R, F>(seeds: std::ops::Range<u64>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        seeds.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        seeds.map(f).collect()
    }
}

/// Sequential twin of [`map_seeds`], always available for comparison.
pub fn map_seeds_seq<R, F>(seeds: std::ops::Range<u64>, f: F) -> Vec<R>
where
    F: Fn(u64) -> R,
{
    seeds.map(f).collect()
}
