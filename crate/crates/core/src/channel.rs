//! Hamming distance and symbol-error injection in the field and complex domains.

use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::codebook::{CodeParams, ComplexWord, FieldCodeword};
use crate::error::{Error, Result};
use crate::unique::phi;

/// Complex coordinates closer than this compare equal.
pub const COMPLEX_EQ_TOL: f64 = 1e-9;

pub trait HammingDistance {
    fn hamming_distance(&self, other: &Self) -> Result<usize>;
}

impl HammingDistance for [u32] {
    fn hamming_distance(&self, other: &Self) -> Result<usize> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), actual: other.len() });
        }
        Ok(self.iter().zip(other).filter(|(a, b)| a != b).count())
    }
}

impl HammingDistance for FieldCodeword {
    fn hamming_distance(&self, other: &Self) -> Result<usize> {
        self.0.as_slice().hamming_distance(other.0.as_slice())
    }
}

impl HammingDistance for ComplexWord {
    fn hamming_distance(&self, other: &Self) -> Result<usize> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), actual: other.len() });
        }
        Ok(self.0.iter().zip(&other.0).filter(|(a, b)| (*a - *b).norm() > COMPLEX_EQ_TOL).count())
    }
}

pub fn hamming_distance<W: HammingDistance + ?Sized>(a: &W, b: &W) -> Result<usize> {
    a.hamming_distance(b)
}

/// Where errors were placed and which nonzero offset was added to each symbol.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorPattern {
    /// Sorted coordinate indices.
    pub positions: Vec<usize>,
    /// `offsets[j]` is added (in the field) to the symbol at `positions[j]`.
    pub offsets: Vec<u32>,
}

impl ErrorPattern {
    pub fn weight(&self) -> usize {
        self.positions.len()
    }

    /// Draws `w` distinct positions out of `n` and a uniform nonzero offset for each.
    pub fn sample<R: Rng + ?Sized>(n: usize, w: usize, q: u32, rng: &mut R) -> Result<Self> {
        if w > n {
            return Err(Error::OutOfRange(format!("error weight {w} exceeds length {n}")));
        }
        let mut positions = index::sample(rng, n, w).into_vec();
        positions.sort_unstable();
        let offsets = positions.iter().map(|_| rng.gen_range(1..q)).collect();
        Ok(ErrorPattern { positions, offsets })
    }

    pub fn apply_field(&self, c: &FieldCodeword, params: &CodeParams) -> FieldCodeword {
        let f = params.field();
        let mut out = c.clone();
        for (&i, &o) in self.positions.iter().zip(&self.offsets) {
            out.0[i] = f.add(out.0[i], o);
        }
        out
    }

    /// Moves each hit coordinate `chi(x)` to `chi(x + offset)`; `x` is read back with `phi`.
    pub fn apply_complex(&self, c: &ComplexWord, params: &CodeParams) -> Result<ComplexWord> {
        let f = params.field();
        let mut out = c.clone();
        for (&i, &o) in self.positions.iter().zip(&self.offsets) {
            let x = phi(c.0[i], params.q()).map_err(|_| Error::ZeroCoordinate { index: i })?;
            out.0[i] = params.character().eval(f.add(x, o));
        }
        Ok(out)
    }
}

pub fn inject_field_errors<R: Rng + ?Sized>(
    c: &FieldCodeword,
    w: usize,
    params: &CodeParams,
    rng: &mut R,
) -> Result<(FieldCodeword, ErrorPattern)> {
    c.check(params)?;
    let pattern = ErrorPattern::sample(c.len(), w, params.q(), rng)?;
    Ok((pattern.apply_field(c, params), pattern))
}

/// Complex-domain injection; requires a prime field so that symbols can be read off the phase.
pub fn inject_complex_errors<R: Rng + ?Sized>(
    c: &ComplexWord,
    w: usize,
    params: &CodeParams,
    rng: &mut R,
) -> Result<(ComplexWord, ErrorPattern)> {
    if !params.field().is_prime_field() {
        return Err(Error::InvalidParameters("complex-domain errors need a prime field".into()));
    }
    if c.len() != params.n() {
        return Err(Error::LengthMismatch { expected: params.n(), actual: c.len() });
    }
    let pattern = ErrorPattern::sample(c.len(), w, params.q(), rng)?;
    let out = pattern.apply_complex(c, params)?;
    Ok((out, pattern))
}
