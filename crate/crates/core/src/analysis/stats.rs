//! Counts of non-causal codewords around weight-`w` error patterns.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::mindist::{EvaluationCode, ENUMERATION_BUDGET};
use crate::error::{Error, Result};

/// Limit on `C(n,w) (q-1)^w` for exhaustive runs.
pub const EXACT_PATTERN_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StatsMode {
    Exact,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ListSizeStats {
    pub w: usize,
    pub t: usize,
    /// `C(n,w) (q-1)^w`.
    pub patterns: u128,
    /// Number of error vectors examined.
    pub examined: u128,
    /// Total falsely decodable count; an estimate scaled to `patterns` when sampled.
    pub d: f64,
    /// Exact total when enumerated.
    pub d_exact: Option<u128>,
    /// Average non-causal list size.
    pub l_bar: f64,
    /// Fraction of error vectors with at least one non-causal codeword.
    pub p_any: f64,
    /// `tuples[s]` = number of examined vectors with exactly `s` non-causal codewords.
    pub tuples: Vec<u128>,
    pub exact: bool,
    pub std_error: Option<f64>,
    pub ci95: Option<(f64, f64)>,
}

pub fn binomial_u128(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc = 1u128;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn count_near(words: &[(Vec<u32>, usize)], u: &[u32], w: usize, t: usize) -> usize {
    words
        .iter()
        .filter(|(c, wt)| {
            if *wt > w + t || wt + t < w {
                return false;
            }
            let mut d = 0;
            for (a, b) in c.iter().zip(u) {
                if a != b {
                    d += 1;
                    if d > t {
                        return false;
                    }
                }
            }
            true
        })
        .count()
}

fn combinations(n: usize, w: usize, mut visit: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..w).collect();
    loop {
        visit(&idx);
        let mut i = w;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - w + i {
                idx[i] += 1;
                for j in i + 1..w {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return;
            }
        }
    }
}

/// Statistics of `B_C(u, t)` over weight-`w` vectors `u` (transmitted word zero).
pub fn falsely_decodable_stats(
    w: usize,
    t: usize,
    code: &EvaluationCode,
    mode: StatsMode,
) -> Result<ListSizeStats> {
    let n = code.len();
    let q = code.field().order();
    if w > n {
        return Err(Error::OutOfRange(format!("weight {w} exceeds length {n}")));
    }
    let patterns = binomial_u128(n, w).saturating_mul((q as u128 - 1).saturating_pow(w as u32));
    let words: Vec<(Vec<u32>, usize)> = code
        .nonzero_codewords(ENUMERATION_BUDGET)?
        .into_iter()
        .map(|c| {
            let wt = c.iter().filter(|&&x| x != 0).count();
            (c, wt)
        })
        .collect();
    let mut tuples: Vec<u128> = Vec::new();
    let mut bump = |cnt: usize| {
        if tuples.len() <= cnt {
            tuples.resize(cnt + 1, 0);
        }
        tuples[cnt] += 1;
    };
    match mode {
        StatsMode::Exact => {
            if patterns > EXACT_PATTERN_BUDGET {
                return Err(Error::BudgetExceeded { needed: patterns, budget: EXACT_PATTERN_BUDGET });
            }
            let mut u = vec![0u32; n];
            combinations(n, w, |pos| {
                let mut vals = vec![1u32; w];
                loop {
                    for (&i, &v) in pos.iter().zip(&vals) {
                        u[i] = v;
                    }
                    bump(count_near(&words, &u, w, t));
                    let mut j = 0;
                    while j < w {
                        vals[j] += 1;
                        if vals[j] < q {
                            break;
                        }
                        vals[j] = 1;
                        j += 1;
                    }
                    if j == w {
                        break;
                    }
                }
                for &i in pos {
                    u[i] = 0;
                }
            });
            let total: u128 = tuples.iter().enumerate().map(|(s, &c)| s as u128 * c).sum();
            let any: u128 = tuples.iter().skip(1).sum();
            let examined: u128 = tuples.iter().sum();
            Ok(ListSizeStats {
                w,
                t,
                patterns,
                examined,
                d: total as f64,
                d_exact: Some(total),
                l_bar: total as f64 / patterns as f64,
                p_any: any as f64 / patterns as f64,
                tuples,
                exact: true,
                std_error: None,
                ci95: None,
            })
        }
        StatsMode::Sampled { samples, seed } => {
            if samples == 0 {
                return Err(Error::InvalidParameters("need at least one sample".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (mut sum, mut sum_sq) = (0f64, 0f64);
            let mut u = vec![0u32; n];
            for _ in 0..samples {
                let pos = index::sample(&mut rng, n, w).into_vec();
                for &i in &pos {
                    u[i] = rng.gen_range(1..q);
                }
                let cnt = count_near(&words, &u, w, t);
                bump(cnt);
                sum += cnt as f64;
                sum_sq += (cnt * cnt) as f64;
                for &i in &pos {
                    u[i] = 0;
                }
            }
            let m = samples as f64;
            let mean = sum / m;
            let var = if samples > 1 { (sum_sq - m * mean * mean).max(0.0) / (m - 1.0) } else { 0.0 };
            let se = (var / m).sqrt();
            let any: u128 = tuples.iter().skip(1).sum();
            Ok(ListSizeStats {
                w,
                t,
                patterns,
                examined: samples as u128,
                d: mean * patterns as f64,
                d_exact: None,
                l_bar: mean,
                p_any: any as f64 / m,
                tuples,
                exact: false,
                std_error: Some(se),
                ci95: Some((mean - 1.96 * se, mean + 1.96 * se)),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codebook::CodeParams;

    fn code() -> EvaluationCode {
        EvaluationCode::cp_code(&CodeParams::new(7, 2).unwrap())
    }

    #[test]
    fn zero_weight_below_distance() {
        let s = falsely_decodable_stats(0, 4, &code(), StatsMode::Exact).unwrap();
        assert_eq!((s.d_exact, s.l_bar, s.patterns), (Some(0), 0.0, 1));
    }

    #[test]
    fn weight_three_enumerates_all_vectors() {
        let s = falsely_decodable_stats(3, 2, &code(), StatsMode::Exact).unwrap();
        assert_eq!(s.patterns, 4320);
        assert_eq!(s.examined, 4320);
        let d = s.d_exact.unwrap();
        assert_eq!(s.l_bar, d as f64 / 4320.0);
    }

    #[test]
    fn monotone_in_radius() {
        for w in 0..=6 {
            let mut prev = 0.0;
            for t in 0..=4 {
                let s = falsely_decodable_stats(w, t, &code(), StatsMode::Exact).unwrap();
                assert!(s.l_bar >= prev);
                prev = s.l_bar;
            }
        }
    }

    #[test]
    fn sampled_estimate_brackets_exact() {
        let exact = falsely_decodable_stats(4, 3, &code(), StatsMode::Exact).unwrap();
        let est = falsely_decodable_stats(4, 3, &code(), StatsMode::Sampled { samples: 20000, seed: 1 })
            .unwrap();
        let (lo, hi) = est.ci95.unwrap();
        let slack = 2.0 * est.std_error.unwrap();
        assert!(exact.l_bar >= lo - slack && exact.l_bar <= hi + slack);
    }

    #[test]
    fn budget_is_enforced() {
        let c = EvaluationCode::cp_code(&CodeParams::new(31, 2).unwrap());
        assert!(matches!(
            falsely_decodable_stats(10, 5, &c, StatsMode::Exact),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
