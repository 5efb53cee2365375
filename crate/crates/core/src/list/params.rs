//! Multiplicity, weighted-degree bound, agreement threshold and radius.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GsParams {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    /// `floor(sqrt((k-1) n s (s+1)))`
    pub c: usize,
    /// `floor(c / s) + 1`
    pub tau: usize,
    /// `n - tau`; negative when `tau > n`, in which case no word is decodable.
    pub t: i64,
    /// `floor(c / (k-1))`
    pub ell: usize,
}

pub(crate) fn isqrt(v: u128) -> u128 {
    if v < 2 {
        return v;
    }
    let mut x = (v as f64).sqrt() as u128;
    while x * x > v {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= v {
        x += 1;
    }
    x
}

fn check(n: usize, k: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::InvalidParameters(format!("need 2 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(())
}

pub fn gs_params(n: usize, k: usize, s: usize) -> Result<GsParams> {
    check(n, k)?;
    if s == 0 {
        return Err(Error::InvalidParameters("multiplicity s must be >= 1".into()));
    }
    let a = (k as u128 - 1) * n as u128 * s as u128 * (s as u128 + 1);
    let c = isqrt(a) as usize;
    let tau = c / s + 1;
    let t = n as i64 - tau as i64;
    Ok(GsParams { n, k, s, c, tau, t, ell: c / (k - 1) })
}

/// `n - 1 - floor(sqrt((k-1) n (1 + 1/s)))`, evaluated exactly; may be negative.
pub fn radius_closed_form(n: usize, k: usize, s: usize) -> Result<i64> {
    check(n, k)?;
    if s == 0 {
        return Err(Error::InvalidParameters("multiplicity s must be >= 1".into()));
    }
    // largest r with r^2 s <= (k-1) n (s+1)
    let a = (k as u128 - 1) * n as u128 * (s as u128 + 1);
    let mut r = isqrt(a / s as u128);
    while r * r * s as u128 > a {
        r -= 1;
    }
    while (r + 1) * (r + 1) * s as u128 <= a {
        r += 1;
    }
    Ok(n as i64 - 1 - r as i64)
}

/// Limiting radius `n - 1 - floor(sqrt((k-1) n))`, never negative since `(k-1) n < n^2`.
pub fn t_inf(n: usize, k: usize) -> Result<usize> {
    check(n, k)?;
    Ok(n - 1 - isqrt((k as u128 - 1) * n as u128) as usize)
}

/// Smallest `s` whose radius reaches the limit, together with that radius.
pub fn s_zero(n: usize, k: usize) -> Result<(usize, usize)> {
    let limit = t_inf(n, k)?;
    let mut s = 1;
    loop {
        if gs_params(n, k, s)?.t == limit as i64 {
            return Ok((s, limit));
        }
        s += 1;
    }
}
