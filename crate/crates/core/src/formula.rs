//! Closed-form extremal values: μ(k,v), κ(n,v) and the bounds on κ̌(w,v).
//!
//! Everything is exact integer arithmetic. Floors of logarithms are found by
//! repeated multiplication, never through floating point.

use crate::error::{Error, Result};

/// Exact values of κ̌(w,v) known for small arguments, as `(w, v, value)`.
pub const KAPPA_HAT_EXACT: [(u64, u64, u64); 7] = [
    (2, 1, 2),
    (3, 1, 3),
    (3, 2, 2),
    (4, 2, 3),
    (5, 2, 3),
    (6, 2, 3),
    (5, 3, 2),
];

fn checked_pow(base: u128, exp: u64) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Largest `m` with `base^m * den <= num`, i.e. ⌊log_base(num/den)⌋.
/// Requires `base >= 2` and `num >= den >= 1`.
pub(crate) fn floor_log_ratio(base: u128, num: u128, den: u128) -> u64 {
    debug_assert!(base >= 2 && den >= 1 && num >= den);
    let mut m = 0;
    let mut p = den;
    while let Some(next) = p.checked_mul(base) {
        if next > num {
            break;
        }
        p = next;
        m += 1;
    }
    m
}

/// Smallest `k >= 0` with `x <= base^k`.
#[cfg(test)]
pub(crate) fn ceil_log(base: usize, x: usize) -> usize {
    debug_assert!(base >= 2);
    let mut k = 0;
    let mut p: usize = 1;
    while p < x {
        p = p.saturating_mul(base);
        k += 1;
    }
    k
}

/// μ(k,v) = ((v+1)^{k+1} − (v+1)) / v: the largest n such that every
/// n-vertex interval graph splits into k parts of claw number at most v.
pub fn mu_formula(k: u64, v: u64) -> Result<u64> {
    if k == 0 || v == 0 {
        return Err(Error::Precondition(format!(
            "mu needs k >= 1 and v >= 1, got k={k} v={v}"
        )));
    }
    let b = v as u128 + 1;
    let top = checked_pow(b, k + 1).ok_or(Error::Overflow("mu(k,v)"))?;
    let value = (top - b) / v as u128;
    u64::try_from(value).map_err(|_| Error::Overflow("mu(k,v)"))
}

/// κ(n,v) = ⌊log_{v+1}(nv + 1)⌋. Gives 0 for the empty graph.
///
/// Panics if `v == 0`.
pub fn kappa_formula(n: u64, v: u64) -> u64 {
    assert!(v >= 1, "kappa needs v >= 1");
    floor_log_ratio(v as u128 + 1, n as u128 * v as u128 + 1, 1)
}

/// Lower and upper bounds on κ̌(w,v), collapsed to the exact value where it
/// is known.
pub fn kappa_hat_bounds(w: u64, v: u64) -> Result<(u64, u64)> {
    if v == 0 || w < v {
        return Err(Error::Precondition(format!(
            "kappa-hat needs w >= v >= 1, got w={w} v={v}"
        )));
    }
    if w == v {
        return Ok((1, 1));
    }
    if let Some(&(_, _, exact)) = KAPPA_HAT_EXACT.iter().find(|&&(ew, ev, _)| ew == w && ev == v) {
        return Ok((exact, exact));
    }
    let lower = floor_log_ratio(v as u128 + 1, w as u128, 1) + 1;
    let mut upper = kappa_hat_upper_generic(w, v)?;
    if v == 1 {
        upper = upper.min(w);
    }
    Ok((lower, upper))
}

/// The case-wise upper bound on κ̌(w,v) for `w > v`, without the small-case
/// table or the `κ̌(w,1) ≤ w` cap. This is what the claw-bounded
/// construction guarantees.
pub fn kappa_hat_upper_generic(w: u64, v: u64) -> Result<u64> {
    if v == 0 || w <= v {
        return Err(Error::Precondition(format!(
            "generic bound needs w > v >= 1, got w={w} v={v}"
        )));
    }
    let b = v as u128 + 1;
    let (w, v) = (w as u128, v as u128);
    Ok(match v {
        1 => floor_log_ratio(b, 2 * (w - 1), 1) + 2,
        2 => floor_log_ratio(b, 3 * (w - 1), 2) + 2,
        _ => floor_log_ratio(b, w - 1, v - 2) + 2,
    })
}
