//! Exact bounded-distance list decoding by erasure covering.
//!
//! To find every codeword within distance `t` of `y` (code length `n`,
//! dimension `dim`, distance `d = n - dim + 1`, `t < d`), set
//! `r = 2t - d + 1`. After erasing `r` positions that are all in error, a
//! codeword at distance `t` is within the unique radius `d - 1 - t` of the
//! punctured word. The erased blocks are all `r`-subsets inside the parts of a
//! partition of the coordinates into `floor((t-1)/(r-1))` parts; by
//! pigeonhole every `t`-subset contains one of them.

use std::collections::BTreeSet;

use crate::field::Field;
use crate::poly::raw;
use crate::unique::bounded_decode;

/// Erasure patterns used for `(n, dim, t)`; `None` when `t >= d`.
pub fn erasure_blocks(n: usize, dim: usize, t: usize) -> Option<Vec<Vec<usize>>> {
    let d = n + 1 - dim;
    if t >= d {
        return None;
    }
    if 2 * t < d {
        return Some(vec![Vec::new()]);
    }
    let r = 2 * t + 1 - d;
    if r == 1 {
        // any t-subset meets the first n - t + 1 coordinates
        return Some((0..=n - t).map(|i| vec![i]).collect());
    }
    let parts = (t - 1) / (r - 1);
    let mut blocks = Vec::new();
    let mut start = 0;
    for p in 0..parts {
        let size = n / parts + usize::from(p < n % parts);
        let members: Vec<usize> = (start..start + size).collect();
        start += size;
        if size >= r {
            subsets(&members, r, &mut Vec::new(), 0, &mut blocks);
        }
    }
    Some(blocks)
}

fn subsets(items: &[usize], r: usize, cur: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
    if cur.len() == r {
        out.push(cur.clone());
        return;
    }
    for i in from..items.len() {
        if items.len() - i < r - cur.len() {
            break;
        }
        cur.push(items[i]);
        subsets(items, r, cur, i + 1, out);
        cur.pop();
    }
}

/// Number of erasure decodes needed, for cost estimates.
pub fn covering_cost(n: usize, dim: usize, t: usize) -> Option<u128> {
    let d = n + 1 - dim;
    if t >= d {
        return None;
    }
    if 2 * t < d {
        return Some(1);
    }
    let r = 2 * t + 1 - d;
    if r == 1 {
        return Some((n - t + 1) as u128);
    }
    let parts = (t - 1) / (r - 1);
    let mut total = 0u128;
    for p in 0..parts {
        let size = n / parts + usize::from(p < n % parts);
        total += binom(size, r);
    }
    Some(total)
}

fn binom(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let mut acc = 1u128;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Messages (degree below `dim`) whose evaluations are within `t` of `values`.
pub fn covering_list_decode(
    field: &Field,
    points: &[u32],
    values: &[u32],
    dim: usize,
    t: usize,
) -> Option<Vec<Vec<u32>>> {
    let n = points.len();
    let blocks = erasure_blocks(n, dim, t)?;
    let mut found = BTreeSet::new();
    let mut keep = vec![true; n];
    let mut px = Vec::with_capacity(n);
    let mut py = Vec::with_capacity(n);
    for block in &blocks {
        for &i in block {
            keep[i] = false;
        }
        px.clear();
        py.clear();
        for i in 0..n {
            if keep[i] {
                px.push(points[i]);
                py.push(values[i]);
            }
        }
        if let Some((g, _)) = bounded_decode(field, &px, &py, dim) {
            found.insert(g);
        }
        for &i in block {
            keep[i] = true;
        }
    }
    Some(
        found
            .into_iter()
            .filter(|g| {
                points.iter().zip(values).filter(|(&a, &y)| raw::eval(field, g, a) != y).count() <= t
            })
            .collect(),
    )
}
