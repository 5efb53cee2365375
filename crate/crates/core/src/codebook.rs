//! Message spaces, the additive character and the RS / GRS / CP encoders.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{check_same, Field, FieldElement};
use crate::poly::{raw, Polynomial};

/// How the nonzero field elements are listed as evaluation points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ordering {
    /// `alpha_i = i` (values `1..q`).
    #[default]
    Natural,
    /// `alpha_i = g^(i-1)` for the smallest primitive element `g`.
    PrimitivePowers,
}

/// Additive character of a finite field, tabulated once.
#[derive(Clone)]
pub struct Character {
    table: Vec<Complex64>,
    beta: u32,
}

impl Character {
    /// The canonical character: `x -> exp(2 pi i x / p)` on prime fields and
    /// `x -> exp(2 pi i Tr(x) / p)` on extensions.
    pub fn new(field: &Field) -> Self {
        Self::with_multiplier(field, 1).expect("1 is a valid multiplier")
    }

    /// The twisted character `x -> chi(beta x)`, nontrivial for `beta != 0`.
    pub fn with_multiplier(field: &Field, beta: u32) -> Result<Self> {
        if beta == 0 || !field.contains(beta) {
            return Err(Error::InvalidParameters(format!(
                "character multiplier must be a nonzero element of {field}"
            )));
        }
        let p = field.characteristic() as f64;
        let table = field
            .elements()
            .map(|x| {
                let t = field.trace(field.mul(beta, x)) as f64;
                Complex64::from_polar(1.0, 2.0 * PI * t / p)
            })
            .collect();
        Ok(Character { table, beta })
    }

    #[inline]
    pub fn eval(&self, x: u32) -> Complex64 {
        self.table[x as usize]
    }

    pub fn multiplier(&self) -> u32 {
        self.beta
    }

    /// The image `chi(F_q)` indexed by field value.
    pub fn values(&self) -> &[Complex64] {
        &self.table
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character(q={}, beta={})", self.table.len(), self.beta)
    }
}

/// `chi(x)` for the canonical character of `x`'s field.
pub fn character_eval(x: &FieldElement) -> Complex64 {
    let f = x.field();
    let t = f.trace(x.value()) as f64;
    Complex64::from_polar(1.0, 2.0 * PI * t / f.characteristic() as f64)
}

/// Shared parameters of an RS / GRS / CP instance of length `n = q - 1`.
#[derive(Clone, Debug)]
pub struct CodeParams {
    field: Field,
    k: usize,
    alphas: Vec<u32>,
    alpha_inv: Vec<u32>,
    chi: Character,
}

impl CodeParams {
    /// Natural ordering over the field with `q` elements.
    pub fn new(q: u32, k: usize) -> Result<Self> {
        Self::with_ordering(Field::with_order(q)?, k, Ordering::Natural)
    }

    pub fn with_ordering(field: Field, k: usize, ordering: Ordering) -> Result<Self> {
        let alphas = match ordering {
            Ordering::Natural => (1..field.order()).collect(),
            Ordering::PrimitivePowers => {
                let g = field.primitive_element();
                (0..field.order() - 1).map(|e| field.pow(g, e as u64)).collect()
            }
        };
        Self::with_alphas(field, k, alphas)
    }

    /// Arbitrary ordering; `alphas` must list every nonzero element once.
    pub fn with_alphas(field: Field, k: usize, alphas: Vec<u32>) -> Result<Self> {
        let n = field.order() as usize - 1;
        if alphas.len() != n {
            return Err(Error::LengthMismatch { expected: n, actual: alphas.len() });
        }
        let mut seen = vec![false; field.order() as usize];
        for &a in &alphas {
            if a == 0 || !field.contains(a) || seen[a as usize] {
                return Err(Error::InvalidParameters(
                    "alphas must be a permutation of the nonzero field elements".into(),
                ));
            }
            seen[a as usize] = true;
        }
        if k < 1 || k > n {
            return Err(Error::InvalidParameters(format!("k = {k} must satisfy 1 <= k <= n = {n}")));
        }
        let alpha_inv = alphas.iter().map(|&a| field.inv(a).expect("nonzero")).collect();
        let chi = Character::new(&field);
        Ok(CodeParams { field, k, alphas, alpha_inv, chi })
    }

    /// Same evaluation set and character, different `k`.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        let n = self.n();
        if k < 1 || k > n {
            return Err(Error::InvalidParameters(format!("k = {k} must satisfy 1 <= k <= n = {n}")));
        }
        Ok(CodeParams { k, ..self.clone() })
    }

    /// Replace the character by `x -> chi(beta x)`.
    pub fn with_character(&self, chi: Character) -> Result<Self> {
        if chi.values().len() != self.field.order() as usize {
            return Err(Error::InvalidParameters("character belongs to another field".into()));
        }
        Ok(CodeParams { chi, ..self.clone() })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn p(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Designed distance `n - k + 1`.
    pub fn d(&self) -> usize {
        self.n() - self.k + 1
    }

    /// `k - floor(k/p)`, the number of free coefficients in the CP message space.
    pub fn message_dim(&self) -> usize {
        self.k - self.k / self.p() as usize
    }

    pub fn alphas(&self) -> &[u32] {
        &self.alphas
    }

    /// GRS column multipliers `v_i = alpha_i`.
    pub fn multipliers(&self) -> &[u32] {
        &self.alphas
    }

    pub fn alpha_inverses(&self) -> &[u32] {
        &self.alpha_inv
    }

    pub fn character(&self) -> &Character {
        &self.chi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MessageSpace {
    /// All polynomials of degree at most `k`.
    F,
    /// Degree at most `k` with every coefficient at a multiple of `p` zero.
    Fp,
    /// `f / X` for `f` in `Fp`.
    FpPrime,
}

impl MessageSpace {
    /// Exponents that may carry a nonzero coefficient.
    pub fn free_exponents(self, p: u32, k: usize) -> Vec<usize> {
        let p = p as usize;
        match self {
            MessageSpace::F => (0..=k).collect(),
            MessageSpace::Fp => (1..=k).filter(|e| e % p != 0).collect(),
            MessageSpace::FpPrime => (0..k).filter(|e| (e + 1) % p != 0).collect(),
        }
    }

    /// Cardinality for field order `q = p^m`.
    pub fn size_for(self, q: u32, p: u32, k: usize) -> u128 {
        let e = match self {
            MessageSpace::F => k + 1,
            MessageSpace::Fp | MessageSpace::FpPrime => k - k / p as usize,
        };
        (q as u128).pow(e as u32)
    }

    pub fn size(self, params: &CodeParams) -> u128 {
        self.size_for(params.q(), params.p(), params.k())
    }

    pub fn contains(self, f: &Polynomial, params: &CodeParams) -> Result<bool> {
        check_same(f.field(), params.field())?;
        let free = self.free_exponents(params.p(), params.k());
        let bound = match self {
            MessageSpace::FpPrime => params.k(),
            _ => params.k() + 1,
        };
        Ok(f.coeffs().iter().enumerate().all(|(e, &c)| c == 0 || (e < bound && free.contains(&e))))
    }

    /// Every element of the space, in odometer order over the free coefficients.
    pub fn enumerate(self, params: &CodeParams) -> impl Iterator<Item = Polynomial> + '_ {
        let free = self.free_exponents(params.p(), params.k());
        let len = free.last().map_or(0, |e| e + 1);
        let q = params.q();
        let mut digits = vec![0u32; free.len()];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let mut coeffs = vec![0u32; len];
            for (&e, &d) in free.iter().zip(&digits) {
                coeffs[e] = d;
            }
            done = true;
            for d in digits.iter_mut() {
                *d += 1;
                if *d < q {
                    done = false;
                    break;
                }
                *d = 0;
            }
            Some(Polynomial::from_raw(params.field(), coeffs))
        })
    }
}

pub fn space_membership(f: &Polynomial, space: MessageSpace, params: &CodeParams) -> Result<bool> {
    space.contains(f, params)
}

pub fn space_size(space: MessageSpace, params: &CodeParams) -> u128 {
    space.size(params)
}

/// Zeroes every coefficient at an exponent divisible by `p`, landing in `F_p(k,q)`.
pub fn space_project(f: &Polynomial, params: &CodeParams) -> Result<Polynomial> {
    check_same(f.field(), params.field())?;
    if let Some(d) = f.degree().filter(|&d| d > params.k()) {
        return Err(Error::DegreeTooLarge { degree: d, bound: params.k() });
    }
    let p = params.p() as usize;
    let coeffs = f.coeffs().iter().enumerate().map(|(e, &c)| if e % p == 0 { 0 } else { c }).collect();
    Ok(Polynomial::from_raw(params.field(), coeffs))
}

/// Field-domain codeword, serialized as a list of integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldCodeword(pub Vec<u32>);

impl FieldCodeword {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.0
    }

    pub(crate) fn check(&self, params: &CodeParams) -> Result<()> {
        if self.len() != params.n() {
            return Err(Error::LengthMismatch { expected: params.n(), actual: self.len() });
        }
        if let Some(&bad) = self.0.iter().find(|&&c| !params.field().contains(c)) {
            return Err(Error::OutOfRange(format!("{bad} is not an element of {}", params.field())));
        }
        Ok(())
    }
}

/// Complex-domain word, serialized as `[[re, im], ...]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ComplexWord(pub Vec<Complex64>);

impl ComplexWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.0
    }
}

fn check_degree_below(f: &Polynomial, params: &CodeParams, dim: usize) -> Result<()> {
    check_same(f.field(), params.field())?;
    match f.degree() {
        Some(d) if d >= dim => Err(Error::DegreeTooLarge { degree: d, bound: dim.saturating_sub(1) }),
        _ => Ok(()),
    }
}

/// `(f(alpha_1), ..., f(alpha_n))` for `deg f < dim`.
pub fn rs_encode_dim(f: &Polynomial, params: &CodeParams, dim: usize) -> Result<FieldCodeword> {
    check_degree_below(f, params, dim)?;
    let fl = params.field();
    Ok(FieldCodeword(params.alphas().iter().map(|&a| raw::eval(fl, f.coeffs(), a)).collect()))
}

/// RS encoding with the default dimension `k`.
pub fn rs_encode(f: &Polynomial, params: &CodeParams) -> Result<FieldCodeword> {
    rs_encode_dim(f, params, params.k())
}

/// `(v_1 f(alpha_1), ..., v_n f(alpha_n))` with `v_i = alpha_i`, `deg f < k`.
pub fn grs_encode(f: &Polynomial, params: &CodeParams) -> Result<FieldCodeword> {
    check_degree_below(f, params, params.k())?;
    let fl = params.field();
    Ok(FieldCodeword(
        params.alphas().iter().map(|&a| fl.mul(a, raw::eval(fl, f.coeffs(), a))).collect(),
    ))
}

/// `(chi(f(alpha_1)), ..., chi(f(alpha_n)))` for `f` in `F_p(k,q)`.
pub fn cp_encode(f: &Polynomial, params: &CodeParams) -> Result<ComplexWord> {
    if !MessageSpace::Fp.contains(f, params)? {
        return Err(Error::NotInMessageSpace);
    }
    let fl = params.field();
    let chi = params.character();
    Ok(ComplexWord(params.alphas().iter().map(|&a| chi.eval(raw::eval(fl, f.coeffs(), a))).collect()))
}

/// Applies the code's character coordinate-wise to a field word.
pub fn to_complex(word: &FieldCodeword, params: &CodeParams) -> ComplexWord {
    ComplexWord(word.0.iter().map(|&c| params.character().eval(c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p7(k: usize) -> CodeParams {
        CodeParams::new(7, k).unwrap()
    }

    #[test]
    fn membership_examples() {
        let c = p7(3);
        let f = c.field().clone();
        assert!(MessageSpace::Fp.contains(&Polynomial::monomial(&f, 1, 2), &c).unwrap());
        assert!(!MessageSpace::Fp.contains(&Polynomial::from_ints(&f, &[1, 1]), &c).unwrap());
        let c4 = CodeParams::new(4, 3).unwrap();
        let x2 = Polynomial::monomial(c4.field(), 1, 2);
        assert!(!MessageSpace::Fp.contains(&x2, &c4).unwrap());
        assert!(MessageSpace::F.contains(&x2, &c4).unwrap());
        // X^2 / X = X: X * X = X^2 not allowed over GF(4)
        assert!(!MessageSpace::FpPrime.contains(&Polynomial::x(c4.field()), &c4).unwrap());
        assert!(MessageSpace::FpPrime.contains(&Polynomial::monomial(c4.field(), 1, 2), &c4).unwrap());
        let other = Polynomial::x(&Field::prime(5).unwrap());
        assert!(MessageSpace::F.contains(&other, &c).is_err());
    }

    #[test]
    fn projection_examples() {
        let c = p7(3);
        let f = c.field().clone();
        let g = space_project(&Polynomial::from_ints(&f, &[3, 2]), &c).unwrap();
        assert_eq!(g, Polynomial::from_ints(&f, &[0, 2]));
        let c4 = CodeParams::new(4, 3).unwrap();
        let h = space_project(&Polynomial::from_ints(c4.field(), &[1, 1, 1, 1]), &c4).unwrap();
        assert_eq!(h.coeffs(), &[0, 1, 0, 1]);
        assert_eq!(space_project(&h, &c4).unwrap(), h);
        assert!(matches!(
            space_project(&Polynomial::monomial(&f, 1, 4), &c),
            Err(Error::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn sizes() {
        assert_eq!(space_size(MessageSpace::Fp, &p7(3)), 343);
        assert_eq!(space_size(MessageSpace::Fp, &CodeParams::new(4, 3).unwrap()), 16);
        assert_eq!(MessageSpace::Fp.size_for(7, 7, 0), 1);
        assert_eq!(space_size(MessageSpace::F, &p7(3)), 7u128.pow(4));
    }

    #[test]
    fn encoder_examples() {
        let c = p7(2);
        let f = c.field().clone();
        let w = rs_encode(&Polynomial::from_ints(&f, &[0, 2]), &c).unwrap();
        assert_eq!(w.0, vec![2, 4, 6, 1, 3, 5]);
        assert_eq!(rs_encode(&Polynomial::constant(&f, 3), &c).unwrap().0, vec![3; 6]);
        assert_eq!(rs_encode(&Polynomial::zero(&f), &c).unwrap().0, vec![0; 6]);
        assert_eq!(grs_encode(&Polynomial::one(&f), &c).unwrap().0, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(grs_encode(&Polynomial::x(&f), &c).unwrap().0, vec![1, 4, 2, 2, 4, 1]);
        assert!(rs_encode(&Polynomial::monomial(&f, 1, 2), &c).is_err());
    }

    #[test]
    fn cp_encoder_examples() {
        let c = p7(3);
        let f = c.field().clone();
        let ones = cp_encode(&Polynomial::zero(&f), &c).unwrap();
        assert!(ones.0.iter().all(|z| (z - Complex64::new(1.0, 0.0)).norm() < 1e-15));
        let w = cp_encode(&Polynomial::x(&f), &c).unwrap();
        for (i, z) in w.0.iter().enumerate() {
            let expect = Complex64::from_polar(1.0, 2.0 * PI * (i + 1) as f64 / 7.0);
            assert!((z - expect).norm() < 1e-12);
        }
        assert_eq!(cp_encode(&Polynomial::one(&f), &c), Err(Error::NotInMessageSpace));
    }

    #[test]
    fn character_examples() {
        let f = Field::prime(7).unwrap();
        let e = |v| f.element(v).unwrap();
        assert!((character_eval(&e(0)) - 1.0).norm() < 1e-15);
        let z = character_eval(&e(3));
        assert!((z.re + 0.9010).abs() < 1e-4 && (z.im - 0.4339).abs() < 1e-4);
        assert!((character_eval(&e(3)) * character_eval(&e(4)) - 1.0).norm() < 1e-12);
    }

    #[test]
    fn enumeration_counts() {
        for q in [4u32, 7, 8, 9] {
            for k in 1..=4usize.min(q as usize - 1) {
                let c = CodeParams::new(q, k).unwrap();
                for space in [MessageSpace::Fp, MessageSpace::FpPrime] {
                    let all: Vec<_> = space.enumerate(&c).collect();
                    assert_eq!(all.len() as u128, space.size(&c), "q={q} k={k} {space:?}");
                    assert!(all.iter().all(|f| space.contains(f, &c).unwrap()));
                }
            }
        }
    }

    #[test]
    fn primitive_ordering_is_a_permutation() {
        let c = CodeParams::with_ordering(Field::prime(13).unwrap(), 3, Ordering::PrimitivePowers).unwrap();
        let mut a = c.alphas().to_vec();
        assert_eq!(a[..3], [1, 2, 4]);
        a.sort();
        assert_eq!(a, (1..13).collect::<Vec<_>>());
        assert!(CodeParams::with_alphas(Field::prime(5).unwrap(), 2, vec![1, 1, 2, 3]).is_err());
        assert!(CodeParams::new(7, 0).is_err());
        assert!(CodeParams::new(7, 7).is_err());
    }
}
