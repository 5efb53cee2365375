//! List decoding up to the GS radius `n - tau_s`, for RS words and CP words.

pub mod covering;
pub mod factor;
pub mod interpolate;
pub mod params;

pub use factor::gs_factor;
pub use interpolate::gs_interpolate;
pub use params::{gs_params, radius_closed_form, s_zero, t_inf, GsParams};

use serde::{Deserialize, Serialize};

use crate::codebook::{CodeParams, ComplexWord, FieldCodeword, MessageSpace};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;
use crate::unique::hard_decision;

/// Algorithm producing the list. Both return exactly the messages whose
/// codewords lie within the radius `t_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ListBackend {
    /// Interpolation with multiplicity `s`, then Y-root extraction.
    Interpolation,
    /// Unique decoding of punctured words over an erasure covering.
    ErasureCovering,
    /// Whichever of the two is estimated to be cheaper.
    #[default]
    Auto,
}

impl ListBackend {
    fn resolve(self, n: usize, dim: usize, gp: &GsParams) -> ListBackend {
        match self {
            ListBackend::Auto => {
                let rows = (n * gp.s * (gp.s + 1) / 2) as u128;
                let cols = interpolate::monomials(gp.c, dim).len() as u128;
                let interp = rows * cols * rows.min(cols);
                match covering::covering_cost(n, dim, gp.t.max(0) as usize) {
                    Some(blocks) if blocks * (n * n) as u128 * 4 < interp => ListBackend::ErasureCovering,
                    _ => ListBackend::Interpolation,
                }
            }
            other => other,
        }
    }
}

/// Sorted list of messages of degree below `dim` within `t_s` of `values` at `points`.
pub(crate) fn list_decode_points(
    field: &Field,
    points: &[u32],
    values: &[u32],
    dim: usize,
    s: usize,
    backend: ListBackend,
) -> Result<(GsParams, Vec<Vec<u32>>)> {
    let gp = gs_params(points.len(), dim, s)?;
    if gp.t < 0 {
        return Ok((gp, Vec::new()));
    }
    let mut out = match backend.resolve(points.len(), dim, &gp) {
        ListBackend::ErasureCovering => covering::covering_list_decode(field, points, values, dim, gp.t as usize)
            .ok_or_else(|| Error::Internal("radius reaches the minimum distance".into()))?,
        _ => {
            let pts: Vec<(u32, u32)> = points.iter().copied().zip(values.iter().copied()).collect();
            let q = gs_interpolate(field, &pts, s, gp.c, dim)?;
            gs_factor(&q, dim, &pts, gp.tau).into_iter().map(|g| g.into_coeffs()).collect()
        }
    };
    out.sort();
    Ok((gp, out))
}

/// Every `g` with `deg g < dim` and `d(y, RS(g)) <= t_s`, by interpolation and factorization.
pub fn gs_decode(y: &FieldCodeword, s: usize, params: &CodeParams, dim: usize) -> Result<Vec<Polynomial>> {
    list_decode(y, s, params, dim, ListBackend::Interpolation)
}

/// As [`gs_decode`] with a selectable backend.
pub fn list_decode(
    y: &FieldCodeword,
    s: usize,
    params: &CodeParams,
    dim: usize,
    backend: ListBackend,
) -> Result<Vec<Polynomial>> {
    y.check(params)?;
    let (_, list) = list_decode_points(params.field(), params.alphas(), &y.0, dim, s, backend)?;
    Ok(list.into_iter().map(|g| Polynomial::from_raw(params.field(), g)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ListOptions {
    pub backend: ListBackend,
    /// Decode the GRS image in a larger dimension before filtering to the
    /// message space. `None` uses the code's own message dimension.
    pub ambient_dim: Option<usize>,
}

/// List of CP messages with their GS parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListDecodeOutput {
    pub list: Vec<Polynomial>,
    pub params: GsParams,
}

/// Serializable form `{list, s, tau, t, ell_bound}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListReport {
    pub list: Vec<Vec<u32>>,
    pub s: usize,
    pub tau: usize,
    pub t: i64,
    pub ell_bound: usize,
}

impl From<&ListDecodeOutput> for ListReport {
    fn from(o: &ListDecodeOutput) -> Self {
        ListReport {
            list: o.list.iter().map(|f| f.coeffs().to_vec()).collect(),
            s: o.params.s,
            tau: o.params.tau,
            t: o.params.t,
            ell_bound: o.params.ell,
        }
    }
}

/// All `f` in `F_p(k,q)` with `d(m', CP(f)) <= n - tau_s`.
pub fn cp_list_decode(m_prime: &ComplexWord, s: usize, params: &CodeParams) -> Result<Vec<Polynomial>> {
    Ok(cp_list_decode_with(m_prime, s, params, &ListOptions::default())?.list)
}

pub fn cp_list_decode_with(
    m_prime: &ComplexWord,
    s: usize,
    params: &CodeParams,
    opts: &ListOptions,
) -> Result<ListDecodeOutput> {
    let symbols = hard_decision(m_prime, params)?;
    let f = params.field();
    let y: Vec<u32> = symbols.iter().zip(params.alpha_inverses()).map(|(&c, &ai)| f.mul(c, ai)).collect();
    let own = params.message_dim();
    let dim = opts.ambient_dim.unwrap_or(own);
    if dim < own || dim > params.n() {
        return Err(Error::InvalidParameters(format!(
            "ambient dimension {dim} must lie in [{own}, {}]",
            params.n()
        )));
    }
    let (gp, list) = list_decode_points(f, params.alphas(), &y, dim, s, opts.backend)?;
    let mut out = Vec::with_capacity(list.len());
    for g in list {
        let xg = Polynomial::from_raw(f, g).shift(1);
        if MessageSpace::Fp.contains(&xg, params)? {
            out.push(xg);
        }
    }
    Ok(ListDecodeOutput { list: out, params: gp })
}
