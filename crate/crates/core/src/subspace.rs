//! Complex subspaces: chordal and subspace distances, the operator channel and
//! a nearest-subspace decoder.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::codebook::{cp_encode, CodeParams, MessageSpace};
use crate::error::{Error, Result};

pub const ORTHONORMAL_TOL: f64 = 1e-9;
const RANK_TOL: f64 = 1e-10;
const MAX_RESAMPLES: usize = 100;

/// A subspace of `C^N` given by orthonormal rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    basis: DMatrix<Complex64>,
}

impl Subspace {
    /// Wraps rows that are already orthonormal (checked within 1e-9).
    pub fn new(rows: &[Vec<Complex64>], ambient: usize) -> Result<Self> {
        let basis = rows_to_matrix(rows, ambient)?;
        let s = Subspace { basis };
        let dev = s.orthonormality_defect();
        if dev > ORTHONORMAL_TOL {
            return Err(Error::NotOrthonormal(dev));
        }
        Ok(s)
    }

    /// Orthonormalizes the span of arbitrary rows; dependent rows are dropped.
    pub fn span(rows: &[Vec<Complex64>], ambient: usize) -> Result<Self> {
        let m = rows_to_matrix(rows, ambient)?;
        Ok(Subspace { basis: gram_schmidt(&m) })
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { basis: DMatrix::zeros(0, ambient) }
    }

    /// The line through a nonzero vector.
    pub fn line(v: &[Complex64]) -> Result<Self> {
        let s = Self::span(&[v.to_vec()], v.len())?;
        if s.dim() != 1 {
            return Err(Error::InvalidParameters("a line needs a nonzero vector".into()));
        }
        Ok(s)
    }

    /// Uniformly random `dim`-dimensional subspace (QR of a complex Gaussian matrix).
    pub fn random<R: Rng + ?Sized>(dim: usize, ambient: usize, rng: &mut R) -> Result<Self> {
        if dim > ambient {
            return Err(Error::InvalidParameters(format!("dimension {dim} exceeds ambient {ambient}")));
        }
        for _ in 0..MAX_RESAMPLES {
            let s = Subspace { basis: gram_schmidt(&gaussian(dim, ambient, rng)) };
            if s.dim() == dim {
                return Ok(s);
            }
        }
        Err(Error::Internal("could not draw a full-rank Gaussian matrix".into()))
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis(&self) -> &DMatrix<Complex64> {
        &self.basis
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.basis.row_iter().map(|r| r.iter().copied().collect()).collect()
    }

    /// Largest entry of `B B^H - I`.
    pub fn orthonormality_defect(&self) -> f64 {
        let g = &self.basis * self.basis.adjoint();
        let mut dev = 0.0f64;
        for i in 0..g.nrows() {
            for j in 0..g.ncols() {
                let target = if i == j { 1.0 } else { 0.0 };
                dev = dev.max((g[(i, j)] - Complex64::new(target, 0.0)).norm());
            }
        }
        dev
    }

    /// Whether `v` lies in the subspace up to `tol` in norm.
    pub fn contains(&self, v: &[Complex64], tol: f64) -> bool {
        if v.len() != self.ambient_dim() {
            return false;
        }
        let x = DMatrix::from_row_slice(1, v.len(), v);
        let coeffs = &x * self.basis.adjoint();
        let proj = &coeffs * &self.basis;
        (x - proj).norm() <= tol
    }

    /// Squared cosines of the principal angles against `other`.
    fn cos2(&self, other: &Subspace) -> Vec<f64> {
        if self.dim() == 0 || other.dim() == 0 {
            return Vec::new();
        }
        let m = &self.basis * other.basis.adjoint();
        m.singular_values().iter().map(|s| (s * s).min(1.0)).collect()
    }
}

fn rows_to_matrix(rows: &[Vec<Complex64>], ambient: usize) -> Result<DMatrix<Complex64>> {
    if let Some(r) = rows.iter().find(|r| r.len() != ambient) {
        return Err(Error::LengthMismatch { expected: ambient, actual: r.len() });
    }
    let flat: Vec<Complex64> = rows.iter().flatten().copied().collect();
    Ok(DMatrix::from_row_slice(rows.len(), ambient, &flat))
}

fn gaussian<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> DMatrix<Complex64> {
    DMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im) / std::f64::consts::SQRT_2
    })
}

/// Modified Gram-Schmidt with one re-orthogonalization pass; drops dependent rows.
fn gram_schmidt(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let ambient = m.ncols();
    let mut out: Vec<Vec<Complex64>> = Vec::new();
    for r in m.row_iter() {
        let mut v: Vec<Complex64> = r.iter().copied().collect();
        let scale = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if scale == 0.0 {
            continue;
        }
        for _ in 0..2 {
            for u in &out {
                let c: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi -= c * ui;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > RANK_TOL * scale.max(1.0) {
            out.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    let flat: Vec<Complex64> = out.iter().flatten().copied().collect();
    DMatrix::from_row_slice(out.len(), ambient, &flat)
}

fn check_pair(u: &Subspace, v: &Subspace) -> Result<()> {
    if u.ambient_dim() != v.ambient_dim() {
        return Err(Error::LengthMismatch { expected: u.ambient_dim(), actual: v.ambient_dim() });
    }
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch(u.dim(), v.dim()));
    }
    for s in [u, v] {
        let dev = s.orthonormality_defect();
        if dev > ORTHONORMAL_TOL {
            return Err(Error::NotOrthonormal(dev));
        }
    }
    Ok(())
}

/// `sqrt(sum sin^2 theta_i)` over the principal angles.
pub fn chordal_distance(u: &Subspace, v: &Subspace) -> Result<f64> {
    check_pair(u, v)?;
    let s: f64 = u.cos2(v).iter().map(|c| 1.0 - c).sum();
    Ok(s.max(0.0).sqrt())
}

/// Twice the squared chordal distance.
pub fn subspace_distance(u: &Subspace, v: &Subspace) -> Result<f64> {
    let d = chordal_distance(u, v)?;
    Ok(2.0 * d * d)
}

/// `dim U + dim V - 2 sum cos^2 theta_i`; equals the subspace distance for equal dimensions
/// and extends it to subspaces of different dimension.
pub fn mixed_subspace_distance(u: &Subspace, v: &Subspace) -> Result<f64> {
    if u.ambient_dim() != v.ambient_dim() {
        return Err(Error::LengthMismatch { expected: u.ambient_dim(), actual: v.ambient_dim() });
    }
    let c: f64 = u.cos2(v).iter().sum();
    Ok((u.dim() + v.dim()) as f64 - 2.0 * c)
}

pub fn code_min_subspace_distance(codebook: &[Subspace]) -> Result<f64> {
    if codebook.len() < 2 {
        return Err(Error::InvalidParameters("need at least two codewords".into()));
    }
    let mut best = f64::INFINITY;
    for i in 0..codebook.len() {
        for j in i + 1..codebook.len() {
            best = best.min(subspace_distance(&codebook[i], &codebook[j])?);
        }
    }
    Ok(best)
}

/// Keeps a random `dim U - rho` dimensional part of `U` and adds a random
/// `t`-dimensional `E` with `E ∩ U = {0}`.
pub fn operator_channel_apply<R: Rng + ?Sized>(
    u: &Subspace,
    t: usize,
    rho: usize,
    rng: &mut R,
) -> Result<Subspace> {
    let (m, n) = (u.dim(), u.ambient_dim());
    if rho > m || m + t > n {
        return Err(Error::InvalidParameters(format!(
            "infeasible channel: dim U = {m}, rho = {rho}, t = {t}, ambient = {n}"
        )));
    }
    let keep = m - rho;
    let h = if keep == 0 {
        DMatrix::zeros(0, n)
    } else {
        let mut found = None;
        for _ in 0..MAX_RESAMPLES {
            let mixed = gram_schmidt(&(gaussian(keep, m, rng) * u.basis()));
            if mixed.nrows() == keep {
                found = Some(mixed);
                break;
            }
        }
        found.ok_or_else(|| Error::Internal("could not draw a subspace of U".into()))?
    };
    for _ in 0..MAX_RESAMPLES {
        let e = gaussian(t, n, rng);
        let mut with_u = DMatrix::zeros(m + t, n);
        with_u.rows_mut(0, m).copy_from(u.basis());
        with_u.rows_mut(m, t).copy_from(&e);
        if gram_schmidt(&with_u).nrows() != m + t {
            continue;
        }
        let mut stacked = DMatrix::zeros(keep + t, n);
        stacked.rows_mut(0, keep).copy_from(&h);
        stacked.rows_mut(keep, t).copy_from(&e);
        let v = gram_schmidt(&stacked);
        if v.nrows() == keep + t {
            return Ok(Subspace { basis: v });
        }
    }
    Err(Error::Internal("error subspace kept intersecting U".into()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceDecision {
    pub index: usize,
    pub distance: f64,
    /// Another codeword is equally close (within 1e-9).
    pub tie: bool,
}

/// Nearest codeword under the (dimension-aware) subspace distance; lowest index wins ties.
pub fn min_subspace_decoder(v: &Subspace, codebook: &[Subspace]) -> Result<SubspaceDecision> {
    if codebook.is_empty() {
        return Err(Error::InvalidParameters("empty codebook".into()));
    }
    let dists = codebook
        .iter()
        .map(|c| mixed_subspace_distance(v, c))
        .collect::<Result<Vec<f64>>>()?;
    let (index, &distance) = dists
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1).then(a.0.cmp(&b.0)))
        .expect("nonempty");
    let tie = dists.iter().enumerate().any(|(i, &d)| i != index && (d - distance).abs() <= 1e-9);
    Ok(SubspaceDecision { index, distance, tie })
}

/// The CP codebook as lines in `C^n`, in message enumeration order.
pub fn cp_codebook_subspaces(params: &CodeParams) -> Result<Vec<Subspace>> {
    MessageSpace::Fp
        .enumerate(params)
        .map(|f| Subspace::line(&cp_encode(&f, params)?.0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn line(v: &[(f64, f64)]) -> Subspace {
        Subspace::line(&v.iter().map(|&(a, b)| c(a, b)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn distance_examples() {
        let e1 = line(&[(1.0, 0.0), (0.0, 0.0)]);
        let e2 = line(&[(0.0, 0.0), (1.0, 0.0)]);
        let diag = line(&[(1.0, 0.0), (1.0, 0.0)]);
        assert!(chordal_distance(&e1, &e1).unwrap() < 1e-12);
        assert!((chordal_distance(&e1, &e2).unwrap() - 1.0).abs() < 1e-12);
        assert!((chordal_distance(&e1, &diag).unwrap() - 0.5f64.sqrt()).abs() < 1e-6);
        assert!((subspace_distance(&e1, &e2).unwrap() - 2.0).abs() < 1e-12);
        assert!((subspace_distance(&e1, &diag).unwrap() - 1.0).abs() < 1e-6);
        assert!(code_min_subspace_distance(&[e1.clone(), e2.clone()]).unwrap() > 2.0 - 1e-12);
        assert!(code_min_subspace_distance(&[e1.clone(), e2, e1.clone()]).unwrap() < 1e-12);
        assert!(code_min_subspace_distance(&[e1]).is_err());
    }

    #[test]
    fn rejects_bad_bases() {
        let rows = vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]];
        assert!(matches!(Subspace::new(&rows, 2), Err(Error::NotOrthonormal(_))));
        assert_eq!(Subspace::span(&rows, 2).unwrap().dim(), 1);
        let a = Subspace::random(1, 3, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        let b = Subspace::random(2, 3, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert!(matches!(chordal_distance(&a, &b), Err(Error::DimensionMismatch(1, 2))));
    }

    #[test]
    fn channel_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let u = Subspace::random(1, 4, &mut rng).unwrap();
        let v = operator_channel_apply(&u, 0, 0, &mut rng).unwrap();
        assert!(subspace_distance(&u, &v).unwrap() < 1e-9);
        let z = operator_channel_apply(&u, 0, 1, &mut rng).unwrap();
        assert_eq!(z.dim(), 0);
        let w = operator_channel_apply(&u, 1, 0, &mut rng).unwrap();
        assert_eq!(w.dim(), 2);
        assert!(w.contains(&u.rows()[0], 1e-9));
        assert!(operator_channel_apply(&u, 4, 0, &mut rng).is_err());
        assert!(operator_channel_apply(&u, 0, 2, &mut rng).is_err());
        let u3 = Subspace::random(3, 6, &mut rng).unwrap();
        for (t, rho) in [(0, 0), (1, 2), (3, 3), (2, 1)] {
            let out = operator_channel_apply(&u3, t, rho, &mut rng).unwrap();
            assert_eq!(out.dim(), 3 - rho + t);
            assert!(out.orthonormality_defect() < 1e-9);
        }
    }

    #[test]
    fn decoder_examples() {
        let e1 = line(&[(1.0, 0.0), (0.0, 0.0)]);
        let e2 = line(&[(0.0, 0.0), (1.0, 0.0)]);
        let book = vec![e1.clone(), e2.clone()];
        let d = min_subspace_decoder(&e2, &book).unwrap();
        assert_eq!((d.index, d.tie), (1, false));
        let mid = line(&[(1.0, 0.0), (1.0, 0.0)]);
        let d = min_subspace_decoder(&mid, &book).unwrap();
        assert_eq!((d.index, d.tie), (0, true));
        assert!(min_subspace_decoder(&mid, &[]).is_err());
    }

    #[test]
    fn cp_codebook_min_distance_matches_pairwise_scan() {
        let p = CodeParams::new(5, 2).unwrap();
        let book = cp_codebook_subspaces(&p).unwrap();
        assert_eq!(book.len(), 25);
        let words: Vec<Vec<Complex64>> = MessageSpace::Fp
            .enumerate(&p)
            .map(|f| cp_encode(&f, &p).unwrap().0)
            .collect();
        let mut best = f64::INFINITY;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                let ip: Complex64 = words[i].iter().zip(&words[j]).map(|(a, b)| a.conj() * b).sum();
                let cos2 = ip.norm_sqr() / 16.0;
                best = best.min(2.0 * (1.0 - cos2));
            }
        }
        let got = code_min_subspace_distance(&book).unwrap();
        assert!((got - best).abs() < 1e-9, "{got} vs {best}");
    }
}
