//! Exhaustive minimum distance and ball counts for small evaluation codes.

use crate::codebook::{CodeParams, MessageSpace};
use crate::error::{Error, Result};
use crate::field::Field;

/// Default limit on the number of codewords visited.
pub const ENUMERATION_BUDGET: u128 = 1_000_000;

/// Linear code `{ (sum_e m_e a_i^e)_i }` spanned by monomial evaluations.
#[derive(Debug, Clone)]
pub struct EvaluationCode {
    field: Field,
    points: Vec<u32>,
    exponents: Vec<usize>,
    gen: Vec<Vec<u32>>,
}

impl EvaluationCode {
    pub fn new(field: &Field, points: Vec<u32>, exponents: Vec<usize>) -> Result<Self> {
        if points.iter().any(|&a| !field.contains(a)) {
            return Err(Error::OutOfRange("evaluation point outside the field".into()));
        }
        let gen = exponents
            .iter()
            .map(|&e| points.iter().map(|&a| field.pow(a, e as u64)).collect())
            .collect();
        Ok(EvaluationCode { field: field.clone(), points, exponents, gen })
    }

    /// The CP code's field image `{ (f(alpha_i)) : f in F_p(k,q) }`, i.e. GRS of `F_p(k,q)'`.
    pub fn cp_code(params: &CodeParams) -> Self {
        let exps = MessageSpace::Fp.free_exponents(params.p(), params.k());
        Self::new(params.field(), params.alphas().to_vec(), exps).expect("valid params")
    }

    /// RS code of dimension `dim` (polynomials of degree below `dim`).
    pub fn rs(params: &CodeParams, dim: usize) -> Self {
        Self::new(params.field(), params.alphas().to_vec(), (0..dim).collect()).expect("valid params")
    }

    /// GRS code with `v_i = alpha_i` and messages of degree below `k`.
    pub fn grs(params: &CodeParams) -> Self {
        Self::new(params.field(), params.alphas().to_vec(), (1..=params.k()).collect()).expect("valid params")
    }

    /// Subcode of the dimension-`dim` RS code whose messages have zero constant term.
    pub fn zero_constant_subcode(params: &CodeParams, dim: usize) -> Self {
        Self::new(params.field(), params.alphas().to_vec(), (1..dim).collect()).expect("valid params")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn size(&self) -> u128 {
        (self.field.order() as u128).saturating_pow(self.dimension() as u32)
    }

    pub fn encode(&self, msg: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0u32; self.len()];
        for (row, &m) in self.gen.iter().zip(msg) {
            if m == 0 {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(m, g));
            }
        }
        out
    }

    fn check_budget(&self, budget: u128) -> Result<()> {
        let needed = self.size();
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        Ok(())
    }

    /// Every codeword (including zero) in odometer order over the message digits.
    pub fn codewords(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        let q = self.field.order();
        let mut digits = vec![0u32; self.dimension()];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let word = self.encode(&digits);
            done = true;
            for d in digits.iter_mut() {
                *d += 1;
                if *d < q {
                    done = false;
                    break;
                }
                *d = 0;
            }
            Some(word)
        })
    }

    pub fn nonzero_codewords(&self, budget: u128) -> Result<Vec<Vec<u32>>> {
        self.check_budget(budget)?;
        Ok(self.codewords().skip(1).collect())
    }

    /// Minimum nonzero weight, by enumeration.
    pub fn min_distance(&self, budget: u128) -> Result<usize> {
        self.check_budget(budget)?;
        self.codewords()
            .skip(1)
            .map(|c| c.iter().filter(|&&x| x != 0).count())
            .min()
            .ok_or_else(|| Error::InvalidParameters("code has no nonzero codeword".into()))
    }

    /// `|{c != 0 : d(c, u) <= t}|`.
    pub fn ball_count(&self, u: &[u32], t: usize, budget: u128) -> Result<usize> {
        if u.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), actual: u.len() });
        }
        self.check_budget(budget)?;
        Ok(self
            .codewords()
            .skip(1)
            .filter(|c| c.iter().zip(u).filter(|(a, b)| a != b).count() <= t)
            .count())
    }
}

pub fn brute_min_distance(code: &EvaluationCode) -> Result<usize> {
    code.min_distance(ENUMERATION_BUDGET)
}

pub fn ball_count(u: &[u32], t: usize, code: &EvaluationCode) -> Result<usize> {
    code.ball_count(u, t, ENUMERATION_BUDGET)
}

/// Minimum distance between distinct words of an arbitrary (not necessarily linear) code.
pub fn min_pairwise_distance(words: &[Vec<u32>]) -> Result<usize> {
    let mut best: Option<usize> = None;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            if words[i].len() != words[j].len() {
                return Err(Error::LengthMismatch { expected: words[i].len(), actual: words[j].len() });
            }
            let d = words[i].iter().zip(&words[j]).filter(|(a, b)| a != b).count();
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    best.ok_or_else(|| Error::InvalidParameters("need at least two words".into()))
}
