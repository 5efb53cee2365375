//! Bivariate polynomials `Q(X, Y)` stored by powers of `Y`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{check_same, Field, FieldElement};
use crate::poly::{raw, Polynomial};

#[derive(Clone, PartialEq, Eq)]
pub struct BivariatePolynomial {
    field: Field,
    /// `rows[j]` holds the X-coefficients of `Y^j`; each row trimmed, trailing empty rows removed.
    rows: Vec<Vec<u32>>,
}

impl BivariatePolynomial {
    pub fn zero(field: &Field) -> Self {
        BivariatePolynomial { field: field.clone(), rows: Vec::new() }
    }

    /// From `(i, j, c)` triples meaning `c X^i Y^j`; repeated monomials add up.
    pub fn from_terms(field: &Field, terms: &[(usize, usize, u32)]) -> Result<Self> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for &(i, j, c) in terms {
            if !field.contains(c) {
                return Err(Error::OutOfRange(format!("{c} is not an element of {field}")));
            }
            if rows.len() <= j {
                rows.resize(j + 1, Vec::new());
            }
            if rows[j].len() <= i {
                rows[j].resize(i + 1, 0);
            }
            rows[j][i] = field.add(rows[j][i], c);
        }
        Ok(Self::from_rows(field, rows))
    }

    /// `rows[j]` is the coefficient of `Y^j` as a polynomial in `X`.
    pub fn from_y_coeffs(field: &Field, rows: &[Polynomial]) -> Result<Self> {
        for r in rows {
            check_same(field, r.field())?;
        }
        Ok(Self::from_rows(field, rows.iter().map(|r| r.coeffs().to_vec()).collect()))
    }

    pub(crate) fn from_rows(field: &Field, mut rows: Vec<Vec<u32>>) -> Self {
        for r in rows.iter_mut() {
            raw::trim(r);
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        BivariatePolynomial { field: field.clone(), rows }
    }

    pub(crate) fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> u32 {
        self.rows.get(j).and_then(|r| r.get(i)).copied().unwrap_or(0)
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// Coefficient of `Y^j` as a polynomial in `X`.
    pub fn y_coeff(&self, j: usize) -> Polynomial {
        Polynomial::from_raw(&self.field, self.rows.get(j).cloned().unwrap_or_default())
    }

    /// Nonzero terms as `(i, j, c)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(|(j, r)| {
            r.iter().enumerate().filter(|(_, &c)| c != 0).map(move |(i, &c)| (i, j, c))
        })
    }

    pub fn weighted_degree(&self, wx: usize, wy: usize) -> Result<usize> {
        self.terms()
            .map(|(i, j, _)| wx * i + wy * j)
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn eval_at(&self, x: u32, y: u32) -> u32 {
        let f = &self.field;
        self.rows.iter().rev().fold(0, |acc, r| f.add(f.mul(acc, y), raw::eval(f, r, x)))
    }

    /// `Q(X, g(X))`.
    pub fn substitute_y(&self, g: &Polynomial) -> Result<Polynomial> {
        check_same(&self.field, g.field())?;
        let f = &self.field;
        let mut acc: Vec<u32> = Vec::new();
        for r in self.rows.iter().rev() {
            acc = raw::add(f, &raw::mul(f, &acc, g.coeffs()), r);
        }
        Ok(Polynomial::from_raw(f, acc))
    }

    /// `Q(X + a, Y + b)`.
    pub fn shifted(&self, a: u32, b: u32) -> Self {
        let f = &self.field;
        // Taylor shift in X, row by row
        let mut rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|r| {
                let mut c = r.clone();
                let d = c.len();
                for i in 0..d {
                    for j in (i..d.saturating_sub(1)).rev() {
                        c[j] = f.add(c[j], f.mul(a, c[j + 1]));
                    }
                }
                c
            })
            .collect();
        // Taylor shift in Y, treating rows as coefficients
        let d = rows.len();
        for i in 0..d {
            for j in (i..d.saturating_sub(1)).rev() {
                let upper = raw::scale(f, &rows[j + 1], b);
                rows[j] = raw::add(f, &rows[j], &upper);
            }
        }
        Self::from_rows(f, rows)
    }

    /// Order of vanishing at `(a, b)`: smallest total degree in `Q(X+a, Y+b)`.
    pub fn root_multiplicity(&self, a: &FieldElement, b: &FieldElement) -> Result<usize> {
        check_same(&self.field, a.field())?;
        check_same(&self.field, b.field())?;
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.multiplicity_at(a.value(), b.value()))
    }

    pub(crate) fn multiplicity_at(&self, a: u32, b: u32) -> usize {
        self.shifted(a, b)
            .terms()
            .map(|(i, j, _)| i + j)
            .min()
            .expect("shift of a nonzero polynomial is nonzero")
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let f = &self.field;
        let mut rows = vec![Vec::new(); self.rows.len() + other.rows.len() - 1];
        for (j1, r1) in self.rows.iter().enumerate() {
            for (j2, r2) in other.rows.iter().enumerate() {
                rows[j1 + j2] = raw::add(f, &rows[j1 + j2], &raw::mul(f, r1, r2));
            }
        }
        Ok(Self::from_rows(f, rows))
    }

    /// `Y - g(X)`.
    pub fn y_minus(g: &Polynomial) -> Self {
        let f = g.field();
        let neg: Vec<u32> = g.coeffs().iter().map(|&c| f.neg(c)).collect();
        Self::from_rows(f, vec![neg, vec![1]])
    }
}

pub fn bivar_weighted_degree(q: &BivariatePolynomial, wx: usize, wy: usize) -> Result<usize> {
    q.weighted_degree(wx, wy)
}

pub fn bivar_root_multiplicity(
    q: &BivariatePolynomial,
    a: &FieldElement,
    b: &FieldElement,
) -> Result<usize> {
    q.root_multiplicity(a, b)
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(i, j, c)| {
                let mut s = if c != 1 || (i == 0 && j == 0) { c.to_string() } else { String::new() };
                match i {
                    0 => {}
                    1 => s.push('X'),
                    _ => s.push_str(&format!("X^{i}")),
                }
                match j {
                    0 => {}
                    1 => s.push('Y'),
                    _ => s.push_str(&format!("Y^{j}")),
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
