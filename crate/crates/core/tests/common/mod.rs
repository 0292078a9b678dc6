//! Brute-force oracles shared by the integration tests. They work on
//! adjacency bitmasks and never call the library's greedy routines.

#![allow(dead_code)]

use clawpart::{Interval, IntervalFamily};

/// `adj[i]` has bit `j` set when intervals `i` and `j` overlap (`i != j`).
pub fn adjacency(ivs: &[Interval]) -> Vec<u64> {
    assert!(ivs.len() <= 64);
    ivs.iter()
        .enumerate()
        .map(|(i, a)| {
            ivs.iter()
                .enumerate()
                .filter(|&(j, b)| i != j && a.left() < b.right() && b.left() < a.right())
                .fold(0u64, |m, (j, _)| m | 1 << j)
        })
        .collect()
}

/// Size of a largest independent set inside `mask`.
pub fn max_independent(adj: &[u64], mask: u64) -> usize {
    if mask == 0 {
        return 0;
    }
    let i = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << i);
    let without = max_independent(adj, rest);
    if adj[i] & rest == 0 {
        // an isolated vertex is always worth taking
        return 1 + without;
    }
    without.max(1 + max_independent(adj, rest & !adj[i]))
}

/// Whether `mask` contains an independent set of size `k`.
pub fn has_independent(adj: &[u64], mask: u64, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (mask.count_ones() as usize) < k {
        return false;
    }
    let i = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << i);
    has_independent(adj, rest & !adj[i], k - 1) || has_independent(adj, rest, k)
}

pub fn all_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn brute_alpha(f: &IntervalFamily) -> usize {
    let adj = adjacency(f.intervals());
    max_independent(&adj, all_mask(f.len()))
}

/// Claw number of the vertices in `mask`.
pub fn brute_claw_in(adj: &[u64], mask: u64) -> usize {
    (0..adj.len())
        .filter(|&c| mask >> c & 1 == 1)
        .map(|c| max_independent(adj, adj[c] & mask))
        .max()
        .unwrap_or(0)
}

pub fn brute_claw(f: &IntervalFamily) -> usize {
    let adj = adjacency(f.intervals());
    brute_claw_in(&adj, all_mask(f.len()))
}

fn part_ok(adj: &[u64], mask: u64, v: usize) -> bool {
    (0..adj.len()).all(|c| mask >> c & 1 == 0 || !has_independent(adj, adj[c] & mask, v + 1))
}

/// Tries all `t^n` assignments of intervals to parts.
pub fn naive_good_partition(f: &IntervalFamily, v: usize, t: usize) -> bool {
    let n = f.len();
    let adj = adjacency(f.intervals());
    let total = (t as u64).pow(n as u32);
    (0..total).any(|mut code| {
        let mut parts = vec![0u64; t];
        for i in 0..n {
            parts[(code % t as u64) as usize] |= 1 << i;
            code /= t as u64;
        }
        parts.iter().all(|&m| part_ok(&adj, m, v))
    })
}

/// Largest `m` with `base^m * den <= num`, assuming `den <= num`.
pub fn floor_log(base: u128, num: u128, den: u128) -> u64 {
    let mut m = 0;
    let mut p = den;
    while p * base <= num {
        p *= base;
        m += 1;
    }
    m
}

/// Smallest `k` with `theta <= (v+1)^k - 1`.
pub fn theta_parts_bound(theta: usize, v: usize) -> usize {
    let mut k = 0;
    let mut p = 1usize;
    while theta > p - 1 {
        p *= v + 1;
        k += 1;
    }
    k
}

/// Parts bound of the claw-bounded construction for measured `w > v`.
pub fn claw_bounded_parts_bound(w: usize, v: usize) -> usize {
    let (w, v) = (w as u128, v as u128);
    let m = match v {
        1 => floor_log(2, 2 * (w - 1), 1),
        2 => floor_log(3, 3 * (w - 1), 2),
        _ => floor_log(v + 1, w - 1, v - 2),
    };
    m as usize + 2
}

/// ⌊log_{v+1}(nv+1)⌋ by exhaustive powers.
pub fn kappa_oracle(n: u64, v: u64) -> u64 {
    let target = n as u128 * v as u128 + 1;
    let base = v as u128 + 1;
    let mut k = 0;
    let mut p: u128 = 1;
    while p.checked_mul(base).is_some_and(|q| q <= target) {
        p *= base;
        k += 1;
    }
    k
}

/// μ(k,v) as the sum `(v+1) + (v+1)^2 + ... + (v+1)^k`.
pub fn mu_oracle(k: u32, v: u64) -> u64 {
    (1..=k).map(|i| (v + 1).pow(i)).sum()
}
