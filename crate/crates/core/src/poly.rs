//! Integer polynomials in `q`, and sparse integer polynomials in four
//! variables `q, t, x, y`.
//!
//! Coefficients are arbitrary precision, so sums over large extension sets
//! never wrap.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};

/// Dense polynomial in `q` with integer coefficients, lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    /// `c * q^k`.
    pub fn monomial(k: usize, c: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from a histogram of exponents.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Coefficients as `i64`, or `None` if any does not fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_i64(&self, q: i64) -> BigInt {
        self.eval(&BigInt::from(q))
    }

    /// Value at `q = -1`: even-degree coefficients minus odd-degree ones.
    pub fn at_minus_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (k, c)| if k % 2 == 0 { acc + c } else { acc - c })
    }

    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `q^k`, which must divide the polynomial.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.valuation().unwrap_or(0) < k {
            return Err(Error::InexactDivision);
        }
        Ok(Self { coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `q^d P(1/q)` where `d` is given; used to test palindromicity about a
    /// prescribed centre.
    pub fn reflect(&self, d: usize) -> Option<Self> {
        if self.degree().is_some_and(|deg| deg > d) {
            return None;
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[d - k] = c.clone();
        }
        Some(Self::from_coeffs(coeffs))
    }

    /// Exact division; fails unless `divisor` divides `self` over the
    /// integers.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Result<Self> {
        let dd = divisor.degree().ok_or(Error::InexactDivision)?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Ok(Self::zero()) } else { Err(Error::InexactDivision) };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return Err(Error::InexactDivision);
            }
            let factor = top / lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &factor * d;
            }
            quot[k] = factor;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::from_coeffs(quot))
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
                let mono = match k {
                    0 => String::new(),
                    1 => "q".to_string(),
                    _ => format!("q^{k}"),
                };
                (c.clone(), mono)
            }),
        )
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (BigInt, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{mag}{mono}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

pub(crate) fn bigint_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(c.to_string()),
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&bigint_json(c))?;
        }
        seq.end()
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

/// Variables of a [`MultiPolynomial`], in exponent-tuple order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Q = 0,
    T = 1,
    X = 2,
    Y = 3,
}

const VAR_NAMES: [&str; 4] = ["q", "t", "x", "y"];

/// Sparse polynomial in `q, t, x, y`, keyed by exponent tuple.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPolynomial {
    terms: BTreeMap<[u32; 4], BigInt>,
}

impl MultiPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial([0; 4], 1)
    }

    pub fn monomial(exps: [u32; 4], c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, BigInt::from(c));
        p
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0; 4];
        exps[v as usize] = 1;
        Self::monomial(exps, 1)
    }

    pub fn add_term(&mut self, exps: [u32; 4], c: BigInt) {
        let entry = self.terms.entry(exps).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 4], &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: [u32; 4]) -> BigInt {
        self.terms.get(&exps).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True if no term has a positive exponent of `v`.
    pub fn free_of(&self, v: Var) -> bool {
        self.terms.keys().all(|e| e[v as usize] == 0)
    }

    /// Sets `v = 0`.
    pub fn set_zero(&self, v: Var) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[v as usize] == 0)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        Self { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Collapses to a polynomial in `v`, requiring every other exponent to be
    /// zero.
    pub fn to_univariate(&self, v: Var) -> Option<QPolynomial> {
        let mut coeffs = Vec::new();
        for (e, c) in &self.terms {
            if (0..4).any(|i| i != v as usize && e[i] != 0) {
                return None;
            }
            let k = e[v as usize] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += c;
        }
        Some(QPolynomial::from_coeffs(coeffs))
    }
}

impl Add for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn add(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Mul for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn mul(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        let mut out = MultiPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Debug for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .zip(VAR_NAMES)
                    .filter(|(k, _)| **k > 0)
                    .map(|(k, name)| if *k == 1 { name.to_string() } else { format!("{name}^{k}") })
                    .collect();
                (c.clone(), mono.join("*"))
            }),
        )
    }
}

impl Serialize for MultiPolynomial {
    /// Serialized as a list of `[[e_q, e_t, e_x, e_y], coeff]` pairs.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, bigint_json(c)))?;
        }
        seq.end()
    }
}
