//! Upper bounds on the average non-causal list size.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn binom_big(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn pow_rat(x: &BigRational, e: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `(q-1)^{-(n-k)} sum_{i=d-w}^{t} C(n,i) (q-1)^i` with `d = n - k + 1`, exactly.
pub fn mceliece_swanson_exact(w: usize, t: usize, n: usize, k: usize, q: u32) -> Result<BigRational> {
    if k > n || q < 2 {
        return Err(Error::InvalidParameters(format!("need k <= n and q >= 2 (n={n}, k={k}, q={q})")));
    }
    let d = n - k + 1;
    let start = d.saturating_sub(w);
    let qm1 = BigInt::from(q - 1);
    let mut sum = BigInt::zero();
    for i in start..=t.min(n) {
        sum += binom_big(n, i) * qm1.pow(i as u32);
    }
    Ok(BigRational::new(sum, qm1.pow((n - k) as u32)))
}

pub fn mceliece_swanson_bound(w: usize, t: usize, n: usize, k: usize, q: u32) -> Result<f64> {
    Ok(to_f64(&mceliece_swanson_exact(w, t, n, k, q)?))
}

/// `sum_{i<=t} C(n,i) theta^i (1-theta)^{n-i}` in exact arithmetic.
pub fn binomial_cdf_exact(t: usize, n: usize, theta: &BigRational) -> Result<BigRational> {
    if theta < &BigRational::zero() || theta > &BigRational::one() {
        return Err(Error::OutOfRange("theta must lie in [0, 1]".into()));
    }
    let comp = BigRational::one() - theta;
    let mut sum = BigRational::zero();
    for i in 0..=t.min(n) {
        sum += BigRational::from(binom_big(n, i)) * pow_rat(theta, i) * pow_rat(&comp, n - i);
    }
    Ok(sum)
}

/// Binomial CDF for a floating-point `theta`, converted exactly before summing.
pub fn binomial_cdf(t: usize, n: usize, theta: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&theta) {
        return Err(Error::OutOfRange("theta must lie in [0, 1]".into()));
    }
    let th = BigRational::from_float(theta).ok_or_else(|| Error::OutOfRange("theta is not finite".into()))?;
    Ok(to_f64(&binomial_cdf_exact(t, n, &th)?))
}

/// Relative entropy `D(a || theta)` in nats for Bernoulli parameters.
pub fn kl_divergence(a: f64, theta: f64) -> f64 {
    let term = |x: f64, y: f64| if x == 0.0 { 0.0 } else { x * (x / y).ln() };
    term(a, theta) + term(1.0 - a, 1.0 - theta)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundChain {
    pub theta: f64,
    pub m1: f64,
    /// `None` outside the regime `t/n <= theta`.
    pub chern: Option<f64>,
    pub jensen: f64,
    /// Exact value of `m1` as `numerator/denominator`.
    pub m1_exact: String,
}

/// `(1-theta)^{-k} theta^{-(n-k)} exp(-n D(t/n || theta))`.
pub fn chernoff_term(t: usize, n: usize, k: usize, q: u32) -> Result<f64> {
    let theta = 1.0 - 1.0 / q as f64;
    let a = t as f64 / n as f64;
    if a > theta {
        return Err(Error::RegimeViolation { ratio: a, theta });
    }
    let ln = -(k as f64) * (1.0 - theta).ln() - (n - k) as f64 * theta.ln() - n as f64 * kl_divergence(a, theta);
    Ok(ln.exp())
}

/// `2^n / n^{n-k-t}`.
pub fn jensen_term(t: usize, n: usize, k: usize) -> f64 {
    let e = n as f64 - k as f64 - t as f64;
    (n as f64 * std::f64::consts::LN_2 - e * (n as f64).ln()).exp()
}

/// The three bounds with `theta = 1 - 1/q` at radius `t_s`. `w` does not enter the bounds.
pub fn bound_chain(_w: usize, t_s: usize, n: usize, k: usize, q: u32) -> Result<BoundChain> {
    if k > n || n == 0 || q < 2 {
        return Err(Error::InvalidParameters(format!("invalid (n, k, q) = ({n}, {k}, {q})")));
    }
    let theta = BigRational::new(BigInt::from(q - 1), BigInt::from(q));
    let comp = BigRational::one() - &theta;
    let prefactor = pow_rat(&comp, k).recip() * pow_rat(&theta, n - k).recip();
    let m1 = prefactor * binomial_cdf_exact(t_s, n, &theta)?;
    Ok(BoundChain {
        theta: to_f64(&theta),
        m1: to_f64(&m1),
        chern: chernoff_term(t_s, n, k, q).ok(),
        jensen: jensen_term(t_s, n, k),
        m1_exact: m1.to_string(),
    })
}

/// `n (ln 2 - (sqrt R - R) ln n - ((1 + R)/n) ln(n + 1))`.
pub fn asymptotic_exponent(r: f64, n: usize) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::OutOfRange(format!("rate {r} must lie in (0, 1)")));
    }
    if n < 2 {
        return Err(Error::OutOfRange("n must be at least 2".into()));
    }
    let nf = n as f64;
    Ok(nf * (std::f64::consts::LN_2 - (r.sqrt() - r) * nf.ln() - ((1.0 + r) / nf) * (nf + 1.0).ln()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mceliece_examples() {
        let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        assert_eq!(mceliece_swanson_exact(2, 2, 6, 2, 7).unwrap(), r(0, 1));
        assert_eq!(mceliece_swanson_exact(3, 2, 6, 2, 7).unwrap(), r(540, 1296));
        assert_eq!(mceliece_swanson_exact(4, 2, 6, 2, 7).unwrap(), r(576, 1296));
        assert!((mceliece_swanson_bound(3, 2, 6, 2, 7).unwrap() - 540.0 / 1296.0).abs() < 1e-12);
    }

    #[test]
    fn cdf_examples() {
        assert!((binomial_cdf(6, 6, 0.3).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(binomial_cdf(0, 6, 0.0).unwrap(), 1.0);
        let th = BigRational::new(BigInt::from(6), BigInt::from(7));
        let got = binomial_cdf_exact(2, 6, &th).unwrap();
        // (1 + 6*6 + 15*36) / 7^6
        assert_eq!(got, BigRational::new(BigInt::from(577), BigInt::from(117649)));
        assert!(binomial_cdf(1, 3, 1.5).is_err());
    }

    #[test]
    fn chain_small_instance() {
        let c = bound_chain(3, 2, 6, 2, 7).unwrap();
        assert_eq!(c.m1_exact, "577/1296");
        let chern = c.chern.unwrap();
        assert!(c.m1 <= chern && chern <= c.jensen);
    }

    #[test]
    fn chernoff_regime() {
        assert!(matches!(chernoff_term(6, 6, 2, 2), Err(Error::RegimeViolation { .. })));
    }

    #[test]
    fn exponent_examples() {
        let big = asymptotic_exponent(0.25, 1_000_000).unwrap();
        let small = asymptotic_exponent(0.25, 1000).unwrap();
        assert!(big < 0.0);
        assert!(big < small);
        assert!(asymptotic_exponent(1.0, 10).is_err());
        assert!(asymptotic_exponent(0.5, 1).is_err());
    }
}
