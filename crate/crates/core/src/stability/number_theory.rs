//! Sums of positive integers `x_i` over index sequences with no two equal
//! neighbours.
//!
//! With `k >= 3` entries, `g = gcd(x)`, `s = sum(x)` and Bezout coefficients
//! `a_i` (`sum a_i x_i = g`) ranging over `[m, M]`, every multiple of `g` that
//! is at least `N = 2 k s (s/g) (M - m)` is such a sum: write
//! `C = c s + d g` with `0 <= d g < s`, take `c + d M` full runs
//! `0, 1, ..., k-1`, and delete `d (M - a_i)` copies of `i`, each from a
//! different even-numbered run.

use crate::error::{Error, Result};

/// Constants of the construction for one input sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NtInstance {
    pub xs: Vec<i64>,
    pub g: i64,
    pub s: i64,
    /// Bezout coefficients, `sum coeffs[i] * xs[i] == g`.
    pub coeffs: Vec<i64>,
    pub max_coeff: i64,
    pub min_coeff: i64,
    /// The constructive bound `N`.
    pub bound: i64,
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Coefficients `(u, v)` with `u a + v b = gcd`, smallest in `|u| + |v|`,
/// then in `|v|`.
fn small_bezout(a: i64, b: i64) -> (i64, i64, i64) {
    let (g, u, v) = ext_gcd(a, b);
    let (da, db) = (b / g, a / g);
    // the optimum lies within a few steps of the real minimizers
    let t0 = if da != 0 { -u / da } else { 0 };
    let t1 = if db != 0 { v / db } else { 0 };
    let mut best = (u, v);
    for t in (t0.min(t1) - 2)..=(t0.max(t1) + 2) {
        let cand = (u + t * da, v - t * db);
        let key = |p: (i64, i64)| (p.0.abs() + p.1.abs(), p.1.abs());
        if key(cand) < key(best) {
            best = cand;
        }
    }
    (g, best.0, best.1)
}

/// Compute `g`, `s`, Bezout coefficients by a left fold and the bound `N`.
pub fn nt_bound(xs: &[i64]) -> Result<NtInstance> {
    if xs.len() < 3 || xs.iter().any(|&x| x < 1) {
        return Err(Error::TooFewEntries);
    }
    let mut g = xs[0];
    let mut coeffs = vec![1i64];
    for &x in &xs[1..] {
        let (g2, u, v) = small_bezout(g, x);
        for c in coeffs.iter_mut() {
            *c *= u;
        }
        coeffs.push(v);
        g = g2;
    }
    let s: i64 = xs.iter().sum();
    let max_coeff = *coeffs.iter().max().expect("nonempty");
    let min_coeff = *coeffs.iter().min().expect("nonempty");
    let k = xs.len() as i64;
    Ok(NtInstance {
        xs: xs.to_vec(),
        g,
        s,
        coeffs,
        max_coeff,
        min_coeff,
        bound: 2 * k * s * (s / g) * (max_coeff - min_coeff),
    })
}

fn constructive(inst: &NtInstance, target: i64) -> Option<Vec<usize>> {
    let k = inst.xs.len();
    let c = target / inst.s;
    let d = (target % inst.s) / inst.g;
    let runs = c + d * inst.max_coeff;
    if runs < 0 {
        return None;
    }
    let removals: Vec<i64> = inst.coeffs.iter().map(|&a| d * (inst.max_coeff - a)).collect();
    let total: i64 = removals.iter().sum();
    if total > (runs + 1) / 2 {
        return None;
    }
    // run 2t loses the t-th removal in the list i = 0 repeated removals[0]
    // times, then i = 1, and so on
    let mut drop = vec![None; runs as usize];
    let mut t = 0usize;
    for (i, &n) in removals.iter().enumerate() {
        for _ in 0..n {
            drop[2 * t] = Some(i);
            t += 1;
        }
    }
    let mut out = Vec::with_capacity(runs as usize * k);
    for dr in drop {
        out.extend((0..k).filter(|&i| Some(i) != dr));
    }
    Some(out)
}

/// Dynamic program over `(sum, last index)`; `reach[t][i]` says `t` is a sum
/// of a sequence ending in `i`.
pub(crate) fn reachable_table(xs: &[i64], limit: i64) -> Vec<Vec<bool>> {
    let k = xs.len();
    let n = limit.max(0) as usize;
    let mut reach = vec![vec![false; k]; n + 1];
    for t in 1..=n {
        for i in 0..k {
            let x = xs[i] as usize;
            if x > t {
                continue;
            }
            reach[t][i] = t == x || (0..k).any(|j| j != i && reach[t - x][j]);
        }
    }
    reach
}

fn by_search(xs: &[i64], target: i64) -> Option<Vec<usize>> {
    let reach = reachable_table(xs, target);
    let t = target as usize;
    let mut last = (0..xs.len()).find(|&i| reach[t][i])?;
    let mut rest = t;
    let mut out = vec![last];
    rest -= xs[last] as usize;
    while rest > 0 {
        last = (0..xs.len()).find(|&j| j != last && reach[rest][j])?;
        out.push(last);
        rest -= xs[last] as usize;
    }
    out.reverse();
    Some(out)
}

/// Indices `i_1, ..., i_r` with no two neighbours equal and
/// `sum xs[i_j] == target`.
///
/// Uses the run-deletion construction when it applies and falls back to an
/// exhaustive search otherwise, so small targets below `N` may succeed too.
pub fn nt_witness(inst: &NtInstance, target: i64) -> Result<Vec<usize>> {
    if target <= 0 || target % inst.g != 0 {
        return Err(Error::Unreachable(target));
    }
    let seq = constructive(inst, target)
        .or_else(|| by_search(&inst.xs, target))
        .ok_or(Error::Unreachable(target))?;
    debug_assert!(seq.windows(2).all(|w| w[0] != w[1]));
    debug_assert_eq!(seq.iter().map(|&i| inst.xs[i]).sum::<i64>(), target);
    Ok(seq)
}
