//! Factorization step: every `g` of degree below `k` with `(Y - g(X)) | Q`.

use std::collections::BTreeSet;

use crate::bivariate::BivariatePolynomial;
use crate::field::Field;
use crate::poly::{raw, Polynomial};

/// `Q(X, X Y + gamma)` on the row representation.
fn substitute(field: &Field, rows: &[Vec<u32>], gamma: u32) -> Vec<Vec<u32>> {
    let mut acc: Vec<Vec<u32>> = Vec::new();
    for r in rows.iter().rev() {
        // acc <- acc * (X Y + gamma) + r
        let mut next: Vec<Vec<u32>> = vec![Vec::new(); acc.len() + 1];
        for (j, a) in acc.iter().enumerate() {
            if a.is_empty() {
                continue;
            }
            let mut shifted = vec![0u32];
            shifted.extend_from_slice(a);
            next[j + 1] = raw::add(field, &next[j + 1], &shifted);
            next[j] = raw::add(field, &next[j], &raw::scale(field, a, gamma));
        }
        next[0] = raw::add(field, &next[0], r);
        while next.last().is_some_and(|r| r.is_empty()) {
            next.pop();
        }
        acc = next;
    }
    acc
}

/// Divides out the largest power of `X` dividing every row.
fn strip_x(rows: &mut [Vec<u32>]) {
    let m = rows
        .iter()
        .filter_map(|r| r.iter().position(|&c| c != 0))
        .min()
        .unwrap_or(0);
    if m > 0 {
        for r in rows.iter_mut() {
            if !r.is_empty() {
                r.drain(..m);
            }
        }
    }
}

fn recurse(
    field: &Field,
    mut rows: Vec<Vec<u32>>,
    k: usize,
    prefix: &mut Vec<u32>,
    out: &mut BTreeSet<Vec<u32>>,
) {
    if rows.is_empty() {
        return;
    }
    strip_x(&mut rows);
    let mut at_zero: Vec<u32> = rows.iter().map(|r| r.first().copied().unwrap_or(0)).collect();
    raw::trim(&mut at_zero);
    if at_zero.is_empty() {
        return;
    }
    for gamma in raw::roots(field, &at_zero) {
        prefix.push(gamma);
        if prefix.len() == k {
            let mut g = prefix.clone();
            raw::trim(&mut g);
            out.insert(g);
        } else {
            recurse(field, substitute(field, &rows, gamma), k, prefix, out);
        }
        prefix.pop();
    }
}

/// Candidates `g` with `deg g < k` and `Q(X, g(X)) = 0`, sorted by coefficient vector.
pub fn y_roots(q: &BivariatePolynomial, k: usize) -> Vec<Polynomial> {
    let field = q.field();
    let mut found = BTreeSet::new();
    if k == 0 || q.is_zero() {
        return Vec::new();
    }
    recurse(field, q.rows().to_vec(), k, &mut Vec::new(), &mut found);
    found
        .into_iter()
        .map(|g| Polynomial::from_raw(field, g))
        .filter(|g| q.substitute_y(g).map(|r| r.is_zero()).unwrap_or(false))
        .collect()
}

/// Y-roots of `Q` of degree below `k` that agree with at least `tau` of the points.
pub fn gs_factor(
    q: &BivariatePolynomial,
    k: usize,
    points: &[(u32, u32)],
    tau: usize,
) -> Vec<Polynomial> {
    y_roots(q, k)
        .into_iter()
        .filter(|g| points.iter().filter(|&&(a, b)| g.eval_at(a) == b).count() >= tau)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf7() -> Field {
        Field::prime(7).unwrap()
    }

    #[test]
    fn single_factor() {
        let f = gf7();
        let g = Polynomial::from_ints(&f, &[3, 2]);
        let q = BivariatePolynomial::y_minus(&g);
        let pts: Vec<(u32, u32)> = (1..7).map(|a| (a, g.eval_at(a))).collect();
        assert_eq!(gs_factor(&q, 2, &pts, 6), vec![g.clone()]);
        let mut bad = pts.clone();
        bad[0].1 = (bad[0].1 + 1) % 7;
        assert!(gs_factor(&q, 2, &bad, 6).is_empty());
    }

    #[test]
    fn product_of_two_factors() {
        let f = gf7();
        let g1 = Polynomial::from_ints(&f, &[1, 1]);
        let g2 = Polynomial::from_ints(&f, &[5, 3]);
        let q = BivariatePolynomial::y_minus(&g1)
            .mul(&BivariatePolynomial::y_minus(&g2))
            .unwrap()
            .mul(&BivariatePolynomial::from_terms(&f, &[(2, 0, 1), (0, 0, 3)]).unwrap())
            .unwrap();
        let pts: Vec<(u32, u32)> =
            (1..7).map(|a| (a, if a <= 3 { g1.eval_at(a) } else { g2.eval_at(a) })).collect();
        let mut got = gs_factor(&q, 2, &pts, 3);
        got.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        assert_eq!(got, vec![g1, g2]);
    }

    #[test]
    fn no_linear_factor() {
        let f = gf7();
        // Y^2 - 3 has no roots since 3 is a non-residue mod 7
        let q = BivariatePolynomial::from_terms(&f, &[(0, 2, 1), (0, 0, 4)]).unwrap();
        assert!(gs_factor(&q, 2, &[(1, 1)], 0).is_empty());
    }

    #[test]
    fn finds_high_degree_roots() {
        let f = Field::prime(11).unwrap();
        let g = Polynomial::from_ints(&f, &[0, 4, 0, 7, 1]);
        let h = Polynomial::from_ints(&f, &[2]);
        let q = BivariatePolynomial::y_minus(&g).mul(&BivariatePolynomial::y_minus(&h)).unwrap();
        let roots = y_roots(&q, 5);
        assert_eq!(roots, vec![g, h]);
    }
}
