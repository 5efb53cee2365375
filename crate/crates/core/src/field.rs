//! Finite fields GF(p) and GF(p^m).
//!
//! Elements are plain `u32` values in `[0, q)`. In an extension field the
//! value is the base-`p` encoding of the residue polynomial: digit `j` is the
//! coefficient of `X^j`. The defining modulus is the smallest monic
//! irreducible polynomial of degree `m` when polynomials are ordered by that
//! same encoding (so GF(16) uses `X^4 + X + 1`).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest order accepted for a proper extension field (tables are `q^2`).
pub const MAX_EXTENSION_ORDER: u32 = 1024;
/// Largest prime accepted for a prime field.
pub const MAX_PRIME: u32 = 1 << 20;

#[derive(Clone)]
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    ext: Option<Arc<Extension>>,
}

struct Extension {
    modulus: Vec<u32>,
    add: Vec<u16>,
    neg: Vec<u16>,
    exp: Vec<u32>,
    log: Vec<u32>,
    trace: Vec<u32>,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^m` if it is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u32;
    while p.saturating_mul(p) <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(Error::InvalidParameters(format!(
                "{p} is not a supported prime (2 <= p <= {MAX_PRIME})"
            )));
        }
        Ok(Field { p, m: 1, q: p, ext: None })
    }

    pub fn extension(p: u32, m: u32) -> Result<Field> {
        if m == 0 {
            return Err(Error::InvalidParameters("extension degree must be >= 1".into()));
        }
        if m == 1 {
            return Field::prime(p);
        }
        if !is_prime(p) {
            return Err(Error::InvalidParameters(format!("{p} is not prime")));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_EXTENSION_ORDER as u64);
        let q = q.ok_or_else(|| {
            Error::InvalidParameters(format!(
                "GF({p}^{m}) exceeds the supported order {MAX_EXTENSION_ORDER}"
            ))
        })? as u32;
        Ok(Field { p, m, q, ext: Some(Arc::new(Extension::build(p, m, q))) })
    }

    /// The field with `q` elements, `q` a prime power.
    pub fn with_order(q: u32) -> Result<Field> {
        let (p, m) = prime_power(q)
            .ok_or_else(|| Error::InvalidParameters(format!("{q} is not a prime power")))?;
        Field::extension(p, m)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    /// Coefficients (low to high, monic) of the defining polynomial.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.ext.as_ref().map(|e| e.modulus.as_slice())
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.q
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        FieldElement::new(self, value)
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.ext {
            None => {
                let s = a + b;
                if s >= self.q {
                    s - self.q
                } else {
                    s
                }
            }
            Some(e) => e.add[(a * self.q + b) as usize] as u32,
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        match &self.ext {
            None => {
                if a == 0 {
                    0
                } else {
                    self.q - a
                }
            }
            Some(e) => e.neg[a as usize] as u32,
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.ext {
            None => ((a as u64 * b as u64) % self.q as u64) as u32,
            Some(e) => {
                if a == 0 || b == 0 {
                    0
                } else {
                    let s = e.log[a as usize] + e.log[b as usize];
                    e.exp[(s % (self.q - 1)) as usize]
                }
            }
        }
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.ext {
            None => {
                let (mut r0, mut r1) = (self.q as i64, a as i64);
                let (mut t0, mut t1) = (0i64, 1i64);
                while r1 != 0 {
                    let quot = r0 / r1;
                    (r0, r1) = (r1, r0 - quot * r1);
                    (t0, t1) = (t1, t0 - quot * t1);
                }
                t0.rem_euclid(self.q as i64) as u32
            }
            Some(e) => {
                let l = e.log[a as usize];
                e.exp[((self.q - 1 - l) % (self.q - 1)) as usize]
            }
        })
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Image of an integer in the prime subfield.
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Absolute trace to the prime subfield, returned as an integer in `[0, p)`.
    pub fn trace(&self, a: u32) -> u32 {
        match &self.ext {
            None => a,
            Some(e) => e.trace[a as usize],
        }
    }

    /// Smallest element (by value) generating the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        match &self.ext {
            Some(e) => e.exp[1 % e.exp.len()],
            None => {
                let n = self.q - 1;
                let factors = prime_factors(n);
                (1..self.q)
                    .find(|&g| factors.iter().all(|&f| self.pow(g, (n / f) as u64) != 1))
                    .expect("multiplicative group is cyclic")
            }
        }
    }
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.m)
        }
    }
}

pub(crate) fn check_same(a: &Field, b: &Field) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::FieldMismatch { left: a.to_string(), right: b.to_string() })
    }
}

// Arithmetic on digit vectors of GF(p)[X], used only while building tables.
fn digits(mut v: u32, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn prime_poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = Field::prime(p).unwrap().inv(b[db]).unwrap();
    while r.len() > db {
        let top = *r.last().unwrap();
        if top != 0 {
            let f = (top as u64 * lead_inv as u64 % p as u64) as u32;
            let shift = r.len() - 1 - db;
            for (j, &bj) in b.iter().enumerate() {
                let t = (f as u64 * bj as u64 % p as u64) as u32;
                r[shift + j] = (r[shift + j] + p - t) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    for deg in 1..=m / 2 {
        // every monic polynomial of this degree
        for low in 0..p.pow(deg as u32) {
            let mut g = digits(low, p, deg as u32);
            g.push(1);
            if prime_poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    (0..p.pow(m))
        .map(|low| {
            let mut f = digits(low, p, m);
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

impl Extension {
    fn build(p: u32, m: u32, q: u32) -> Extension {
        let modulus = smallest_irreducible(p, m);
        let mut add = vec![0u16; (q * q) as usize];
        let mut neg = vec![0u16; q as usize];
        let dig: Vec<Vec<u32>> = (0..q).map(|v| digits(v, p, m)).collect();
        for a in 0..q {
            for b in 0..q {
                let s: Vec<u32> = dig[a as usize]
                    .iter()
                    .zip(&dig[b as usize])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[(a * q + b) as usize] = undigits(&s, p) as u16;
            }
            let n: Vec<u32> = dig[a as usize].iter().map(|&x| (p - x) % p).collect();
            neg[a as usize] = undigits(&n, p) as u16;
        }

        let mulmod = |a: &[u32], b: &[u32]| -> Vec<u32> {
            let mut prod = vec![0u32; a.len() + b.len() - 1];
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let mut r = prime_poly_rem(&prod, &modulus, p);
            r.resize(m as usize, 0);
            r
        };

        let order = q - 1;
        let mut exp = Vec::new();
        for g in 2..q {
            let gd = dig[g as usize].clone();
            let mut cur = dig[1].clone();
            let mut powers = Vec::with_capacity(order as usize);
            loop {
                powers.push(undigits(&cur, p));
                cur = mulmod(&cur, &gd);
                if undigits(&cur, p) == 1 {
                    break;
                }
            }
            if powers.len() == order as usize {
                exp = powers;
                break;
            }
        }
        let mut log = vec![u32::MAX; q as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }

        let mut ext = Extension { modulus, add, neg, exp, log, trace: Vec::new() };
        let trace: Vec<u32> = (0..q)
            .map(|a| {
                let mut acc = 0u32;
                let mut x = a;
                for _ in 0..m {
                    acc = ext.add_raw(acc, x, q);
                    x = ext.pow_raw(x, p as u64, q);
                }
                debug_assert!(acc < p);
                acc
            })
            .collect();
        ext.trace = trace;
        ext
    }

    fn add_raw(&self, a: u32, b: u32, q: u32) -> u32 {
        self.add[(a * q + b) as usize] as u32
    }

    fn mul_raw(&self, a: u32, b: u32, q: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[((self.log[a as usize] + self.log[b as usize]) % (q - 1)) as usize]
        }
    }

    fn pow_raw(&self, a: u32, mut e: u64, q: u32) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base, q);
            }
            base = self.mul_raw(base, base, q);
            e >>= 1;
        }
        acc
    }
}

/// A field value tagged with its field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    value: u32,
    field: Field,
}

impl FieldElement {
    pub fn new(field: &Field, value: u32) -> Result<Self> {
        if !field.contains(value) {
            return Err(Error::OutOfRange(format!("{value} is not an element of {field}")));
        }
        Ok(FieldElement { value, field: field.clone() })
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        self.with(self.field.neg(self.value))
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.value, e))
    }

    fn with(&self, value: u32) -> Self {
        FieldElement { value, field: self.field.clone() }
    }
}

/// Inverse of a nonzero field element.
pub fn fp_inv(a: &FieldElement) -> Result<FieldElement> {
    a.inv()
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.value, self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
