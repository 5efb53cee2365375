//! Interpolation step: a nonzero `Q` of bounded (1, k-1)-weighted degree
//! vanishing to order `s` at every received point.

use crate::bivariate::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::field::Field;

/// Monomials `(i, j)` with `i + (k-1) j <= c`, ordered by `(j, i)`.
pub fn monomials(c: usize, k: usize) -> Vec<(usize, usize)> {
    let w = k - 1;
    let mut out = Vec::new();
    for j in 0..=c / w {
        for i in 0..=c - w * j {
            out.push((i, j));
        }
    }
    out
}

/// Pascal triangle modulo the characteristic, rows `0..=max`.
pub(crate) fn binomials(field: &Field, max: usize) -> Vec<Vec<u32>> {
    let mut t: Vec<Vec<u32>> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let mut row = vec![1u32; n + 1];
        for r in 1..n {
            row[r] = field.add(t[n - 1][r - 1], t[n - 1][r]);
        }
        t.push(row);
    }
    t
}

/// One row per `(point, u, v)` with `u + v < s`: the coefficient of
/// `X^u Y^v` in `Q(X + a, Y + b)` as a linear form in the unknowns.
pub fn constraint_rows(
    field: &Field,
    points: &[(u32, u32)],
    s: usize,
    monos: &[(usize, usize)],
) -> Vec<Vec<u32>> {
    let max_deg = monos.iter().map(|&(i, j)| i.max(j)).max().unwrap_or(0);
    let binom = binomials(field, max_deg);
    let mut rows = Vec::with_capacity(points.len() * s * (s + 1) / 2);
    for &(a, b) in points {
        let apow: Vec<u32> = (0..=max_deg).map(|e| field.pow(a, e as u64)).collect();
        let bpow: Vec<u32> = (0..=max_deg).map(|e| field.pow(b, e as u64)).collect();
        for u in 0..s {
            for v in 0..s - u {
                let row = monos
                    .iter()
                    .map(|&(i, j)| {
                        if i < u || j < v {
                            return 0;
                        }
                        let cx = field.mul(binom[i][u], apow[i - u]);
                        let cy = field.mul(binom[j][v], bpow[j - v]);
                        field.mul(cx, cy)
                    })
                    .collect();
                rows.push(row);
            }
        }
    }
    rows
}

/// Null-space vector of `rows` with the first free column set to 1 and the
/// other free columns 0.
pub(crate) fn null_vector(field: &Field, mut rows: Vec<Vec<u32>>, ncols: usize) -> Option<Vec<u32>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = field.inv(rows[r][col]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = field.sub(*x, field.mul(factor, p));
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let is_pivot = {
        let mut v = vec![false; ncols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let free = (0..ncols).find(|&c| !is_pivot[c])?;
    let mut x = vec![0u32; ncols];
    x[free] = 1;
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = field.neg(rows[row][free]);
    }
    Some(x)
}

/// Interpolation polynomial for points `(alpha_i, y_i)`, multiplicity `s`,
/// weighted-degree bound `c` and dimension `k` (weight `k - 1` on `Y`).
pub fn gs_interpolate(
    field: &Field,
    points: &[(u32, u32)],
    s: usize,
    c: usize,
    k: usize,
) -> Result<BivariatePolynomial> {
    if k < 2 || s == 0 {
        return Err(Error::InvalidParameters("interpolation needs k >= 2 and s >= 1".into()));
    }
    let mut xs: Vec<u32> = points.iter().map(|p| p.0).collect();
    xs.sort_unstable();
    if xs.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidParameters("interpolation points must have distinct X".into()));
    }
    let monos = monomials(c, k);
    let rows = constraint_rows(field, points, s, &monos);
    let x = null_vector(field, rows, monos.len())
        .ok_or_else(|| Error::Internal("interpolation system has only the trivial solution".into()))?;
    let terms: Vec<(usize, usize, u32)> =
        monos.iter().zip(&x).filter(|(_, &v)| v != 0).map(|(&(i, j), &v)| (i, j, v)).collect();
    BivariatePolynomial::from_terms(field, &terms)
}
