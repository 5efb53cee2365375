//! Hard-decision map and bounded-distance unique decoding.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::codebook::{CodeParams, ComplexWord, FieldCodeword};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{raw, Polynomial};

/// Nearest `q`-th root of unity to `z`, returned as its exponent `r`
/// (`floor(q arg(z) / 2pi + 1/2) mod q`; ties go to the larger sector).
pub fn phi(z: Complex64, q: u32) -> Result<u32> {
    if z.re == 0.0 && z.im == 0.0 || !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::ZeroCoordinate { index: 0 });
    }
    let r = (q as f64 * z.arg() / (2.0 * PI) + 0.5).floor() as i64;
    Ok(r.rem_euclid(q as i64) as u32)
}

/// `phi` applied coordinate-wise.
pub fn hard_decision(m: &ComplexWord, params: &CodeParams) -> Result<Vec<u32>> {
    if m.len() != params.n() {
        return Err(Error::LengthMismatch { expected: params.n(), actual: m.len() });
    }
    if !params.field().is_prime_field() {
        return Err(Error::InvalidParameters("decoding is defined over prime fields only".into()));
    }
    m.0.iter()
        .enumerate()
        .map(|(i, &z)| phi(z, params.q()).map_err(|_| Error::ZeroCoordinate { index: i }))
        .collect()
}

/// How received phases are turned into an RS word before decoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preprocessing {
    /// `y_i = alpha_i^{-1} phi(m_i)`, decoded as a dimension-`k` code; returns `X g`.
    #[default]
    Scaled,
    /// `y_i = phi(m_i)` decoded directly for `X g` as an RS word of dimension `k + 1`.
    Unscaled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    /// The CP message `f = X g(X)`.
    pub message: Polynomial,
    pub corrected_errors: usize,
}

/// Serializable decode outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeReport {
    pub message_coeffs: Option<Vec<u32>>,
    pub corrected_errors: Option<usize>,
    pub status: String,
}

impl DecodeReport {
    pub fn from_result(r: &Result<DecodeResult>) -> Self {
        match r {
            Ok(d) => DecodeReport {
                message_coeffs: Some(d.message.coeffs().to_vec()),
                corrected_errors: Some(d.corrected_errors),
                status: "ok".into(),
            },
            Err(e) => DecodeReport {
                message_coeffs: None,
                corrected_errors: None,
                status: match e {
                    Error::DecodingFailure(_) => "decoding-failure".into(),
                    other => format!("error: {other}"),
                },
            },
        }
    }
}

/// Bounded-distance decoding of an RS word at arbitrary distinct points.
///
/// Returns the message (degree below `dim`) and the number of corrected
/// positions, or `None` when no codeword lies within `floor((N - dim) / 2)`.
pub(crate) fn bounded_decode(
    f: &Field,
    points: &[u32],
    values: &[u32],
    dim: usize,
) -> Option<(Vec<u32>, usize)> {
    let n = points.len();
    if dim == 0 || dim > n {
        return None;
    }
    let radius = (n - dim) / 2;
    let g1 = raw::interpolate(f, points, values);
    if g1.len() <= dim {
        return Some((g1, 0));
    }
    // extended Euclid on (prod (X - a_i), g1), stopped at deg r < (n + dim) / 2
    let mut r_prev = raw::from_roots(f, points);
    let mut r = g1;
    let mut v_prev: Vec<u32> = Vec::new();
    let mut v: Vec<u32> = vec![1];
    while !r.is_empty() && 2 * (r.len() - 1) >= n + dim {
        let (quot, rem) = raw::divmod(f, &r_prev, &r);
        let v_next = raw::sub(f, &v_prev, &raw::mul(f, &quot, &v));
        r_prev = std::mem::replace(&mut r, rem);
        v_prev = std::mem::replace(&mut v, v_next);
    }
    if v.is_empty() {
        return None;
    }
    let (msg, rem) = raw::divmod(f, &r, &v);
    if !rem.is_empty() || msg.len() > dim {
        return None;
    }
    // locator roots must sit on evaluation points and account for every error
    let locator_roots = points.iter().filter(|&&a| raw::eval(f, &v, a) == 0).count();
    let errors = points
        .iter()
        .zip(values)
        .filter(|(&a, &y)| raw::eval(f, &msg, a) != y)
        .count();
    if errors > radius || locator_roots != v.len() - 1 || errors > locator_roots {
        return None;
    }
    Some((msg, errors))
}

/// Unique `g` with `deg g < dim` and `d(y, RS(g)) <= floor((n - dim) / 2)`.
pub fn rs_unique_decode(y: &FieldCodeword, dim: usize, params: &CodeParams) -> Result<Polynomial> {
    y.check(params)?;
    if dim == 0 || dim > params.n() {
        return Err(Error::InvalidParameters(format!("dimension {dim} out of range")));
    }
    bounded_decode(params.field(), params.alphas(), &y.0, dim)
        .map(|(g, _)| Polynomial::from_raw(params.field(), g))
        .ok_or_else(|| Error::DecodingFailure("no codeword within the unique decoding radius".into()))
}

/// Divides coordinate `i` by `v_i = alpha_i`, then decodes with dimension `k`.
pub fn grs_unique_decode(y: &FieldCodeword, params: &CodeParams) -> Result<Polynomial> {
    y.check(params)?;
    let f = params.field();
    let scaled: Vec<u32> = y.0.iter().zip(params.alpha_inverses()).map(|(&c, &ai)| f.mul(c, ai)).collect();
    rs_unique_decode(&FieldCodeword(scaled), params.k(), params)
}

pub fn cp_decode(m_prime: &ComplexWord, params: &CodeParams) -> Result<DecodeResult> {
    cp_decode_with(m_prime, params, Preprocessing::Scaled)
}

pub fn cp_decode_with(
    m_prime: &ComplexWord,
    params: &CodeParams,
    mode: Preprocessing,
) -> Result<DecodeResult> {
    let symbols = hard_decision(m_prime, params)?;
    let f = params.field();
    let fail = || Error::DecodingFailure("no codeword within the unique decoding radius".into());
    let (message, corrected_errors) = match mode {
        Preprocessing::Scaled => {
            let y: Vec<u32> =
                symbols.iter().zip(params.alpha_inverses()).map(|(&s, &ai)| f.mul(s, ai)).collect();
            let (g, e) = bounded_decode(f, params.alphas(), &y, params.message_dim()).ok_or_else(fail)?;
            (Polynomial::from_raw(f, g).shift(1), e)
        }
        Preprocessing::Unscaled => {
            let (h, e) = bounded_decode(f, params.alphas(), &symbols, params.k() + 1).ok_or_else(fail)?;
            let h = Polynomial::from_raw(f, h);
            if h.coeff(0) != 0 {
                return Err(Error::DecodingFailure("decoded polynomial has a constant term".into()));
            }
            (h, e)
        }
    };
    Ok(DecodeResult { message, corrected_errors })
}
