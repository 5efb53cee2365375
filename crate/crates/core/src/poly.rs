//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{check_same, Field, FieldElement};

/// Coefficient-vector kernels shared by the decoders. Vectors are low to high
/// and kept trimmed (no trailing zeros; the zero polynomial is empty).
pub(crate) mod raw {
    use crate::field::Field;

    pub fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn eval(f: &Field, a: &[u32], x: u32) -> u32 {
        a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = (0..a.len().max(b.len()))
            .map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(&mut out);
        out
    }

    pub fn sub(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = (0..a.len().max(b.len()))
            .map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(&mut out);
        out
    }

    pub fn scale(f: &Field, a: &[u32], c: u32) -> Vec<u32> {
        let mut out: Vec<u32> = a.iter().map(|&x| f.mul(x, c)).collect();
        trim(&mut out);
        out
    }

    pub fn mul(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        trim(&mut out);
        out
    }

    /// Quotient and remainder; `b` must be trimmed and nonzero.
    pub fn divmod(f: &Field, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let db = b.len() - 1;
        let lead_inv = f.inv(b[db]).expect("trimmed divisor has nonzero leading coefficient");
        let mut r = a.to_vec();
        trim(&mut r);
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut quot = vec![0u32; r.len() - db];
        for i in (0..quot.len()).rev() {
            let c = f.mul(r[i + db], lead_inv);
            quot[i] = c;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    r[i + j] = f.sub(r[i + j], f.mul(c, bj));
                }
            }
        }
        r.truncate(db);
        trim(&mut r);
        trim(&mut quot);
        (quot, r)
    }

    /// Product of `(X - r)` over the given roots.
    pub fn from_roots(f: &Field, roots: &[u32]) -> Vec<u32> {
        let mut out = vec![1u32];
        for &r in roots {
            let nr = f.neg(r);
            out.push(0);
            for i in (0..out.len()).rev() {
                let below = if i > 0 { out[i - 1] } else { 0 };
                out[i] = f.add(below, f.mul(out[i], nr));
            }
        }
        trim(&mut out);
        out
    }

    /// Lagrange interpolation through distinct `xs`.
    pub fn interpolate(f: &Field, xs: &[u32], ys: &[u32]) -> Vec<u32> {
        let m = from_roots(f, xs);
        let mut acc = vec![0u32; xs.len()];
        for (&x, &y) in xs.iter().zip(ys) {
            if y == 0 {
                continue;
            }
            // m / (X - x) by synthetic division
            let mut basis = vec![0u32; xs.len()];
            let mut carry = 0;
            for j in (0..xs.len()).rev() {
                carry = f.add(m[j + 1], f.mul(carry, x));
                basis[j] = carry;
            }
            let denom = eval(f, &basis, x);
            let w = f.div(y, denom).expect("interpolation points are distinct");
            for (a, b) in acc.iter_mut().zip(&basis) {
                *a = f.add(*a, f.mul(w, *b));
            }
        }
        trim(&mut acc);
        acc
    }

    pub fn roots(f: &Field, a: &[u32]) -> Vec<u32> {
        f.elements().filter(|&x| eval(f, a, x) == 0).collect()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<u32>,
}

impl Polynomial {
    pub fn zero(field: &Field) -> Self {
        Polynomial { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Self {
        Polynomial::constant(field, 1)
    }

    pub fn constant(field: &Field, c: u32) -> Self {
        Polynomial::from_raw(field, vec![c % field.order()])
    }

    pub fn x(field: &Field) -> Self {
        Polynomial::monomial(field, 1, 1)
    }

    /// `c X^deg`.
    pub fn monomial(field: &Field, c: u32, deg: usize) -> Self {
        let mut v = vec![0u32; deg + 1];
        v[deg] = c % field.order();
        Polynomial::from_raw(field, v)
    }

    /// Builds from low-to-high coefficients, rejecting values outside the field.
    pub fn from_coeffs(field: &Field, coeffs: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = coeffs.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::OutOfRange(format!("{bad} is not an element of {field}")));
        }
        Ok(Polynomial::from_raw(field, coeffs))
    }

    /// Builds from signed integers, reducing into the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        Polynomial::from_raw(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub(crate) fn from_raw(field: &Field, mut coeffs: Vec<u32>) -> Self {
        raw::trim(&mut coeffs);
        Polynomial { field: field.clone(), coeffs }
    }

    /// Polynomial with the given roots, each of multiplicity one per listing.
    pub fn from_roots(field: &Field, roots: &[u32]) -> Self {
        Polynomial::from_raw(field, raw::from_roots(field, roots))
    }

    /// The unique polynomial of degree below `xs.len()` through the points.
    pub fn interpolate(field: &Field, xs: &[u32], ys: &[u32]) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::LengthMismatch { expected: xs.len(), actual: ys.len() });
        }
        let mut seen = std::collections::HashSet::new();
        for &x in xs.iter().chain(ys) {
            if !field.contains(x) {
                return Err(Error::OutOfRange(format!("{x} is not an element of {field}")));
            }
        }
        if !xs.iter().all(|x| seen.insert(*x)) {
            return Err(Error::InvalidParameters("interpolation points must be distinct".into()));
        }
        Ok(Polynomial::from_raw(field, raw::interpolate(field, xs, ys)))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u32> {
        self.coeffs
    }

    pub fn coeff(&self, j: usize) -> u32 {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        check_same(&self.field, x.field())?;
        FieldElement::new(&self.field, self.eval_at(x.value()))
    }

    pub fn eval_at(&self, x: u32) -> u32 {
        raw::eval(&self.field, &self.coeffs, x)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(raw::add(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(raw::sub(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(raw::mul(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn scale(&self, c: u32) -> Self {
        self.with(raw::scale(&self.field, &self.coeffs, c % self.field.order()))
    }

    /// `X^e * self`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![0u32; e];
        v.extend_from_slice(&self.coeffs);
        self.with(v)
    }

    /// Returns `(quotient, remainder)` with `self = quotient * g + remainder`.
    pub fn divmod(&self, g: &Self) -> Result<(Self, Self)> {
        check_same(&self.field, &g.field)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = raw::divmod(&self.field, &self.coeffs, &g.coeffs);
        Ok((self.with(q), self.with(r)))
    }

    /// All field elements at which the polynomial vanishes, by exhaustive evaluation.
    pub fn roots(&self) -> Result<Vec<FieldElement>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(raw::roots(&self.field, &self.coeffs)
            .into_iter()
            .map(|r| FieldElement::new(&self.field, r).expect("root lies in the field"))
            .collect())
    }

    fn with(&self, coeffs: Vec<u32>) -> Self {
        Polynomial { field: self.field.clone(), coeffs }
    }
}

pub fn poly_eval(f: &Polynomial, x: &FieldElement) -> Result<FieldElement> {
    f.eval(x)
}

pub fn poly_divmod(f: &Polynomial, g: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    f.divmod(g)
}

pub fn poly_roots(f: &Polynomial) -> Result<Vec<FieldElement>> {
    f.roots()
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (j, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "X")?,
                (1, _) => write!(f, "{c}X")?,
                (_, 1) => write!(f, "X^{j}")?,
                _ => write!(f, "{c}X^{j}")?,
            }
        }
        Ok(())
    }
}
