use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Univariate polynomial with exact integer coefficients; `coeffs[k]` is the
/// coefficient of `x^k`, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial1V {
    coeffs: Vec<BigInt>,
}

/// Bivariate polynomial in `x, y` with exact integer coefficients, keyed by
/// `(deg_x, deg_y)`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial2V {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl Polynomial1V {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial1V { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `(x - 1)^k`
    pub fn x_minus_one_pow(k: usize) -> Self {
        let mut p = Self::one();
        let base = Self::from_i64(&[-1, 1]);
        for _ in 0..k {
            p = &p * &base;
        }
        p
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial1V { coeffs }
    }

    /// `{"x^2": 1, "x^1": 2}` with coefficients as numbers when they fit in 64 bits.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomials serialize")
    }
}

impl std::ops::Add for &Polynomial1V {
    type Output = Polynomial1V;

    fn add(self, rhs: &Polynomial1V) -> Polynomial1V {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial1V::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl std::ops::Mul for &Polynomial1V {
    type Output = Polynomial1V;

    fn mul(self, rhs: &Polynomial1V) -> Polynomial1V {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial1V::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial1V::from_coeffs(out)
    }
}

impl Polynomial2V {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn monomial(c: BigInt, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn from_terms(terms: &[((u32, u32), i64)]) -> Self {
        let mut p = Self::zero();
        for &((i, j), c) in terms {
            p.add_term(i, j, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        let e = self.terms.entry((i, j)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `p(x, x)`
    pub fn diagonal(&self) -> Polynomial1V {
        let deg = self.terms.keys().map(|(i, j)| (i + j) as usize).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for ((i, j), c) in &self.terms {
            coeffs[(i + j) as usize] += c;
        }
        Polynomial1V::from_coeffs(coeffs)
    }

    /// `p(y, x)`
    pub fn swap_variables(&self) -> Self {
        Polynomial2V {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * x.pow(i) * y.pow(j))
            .sum()
    }

    /// `{"x^2 y^0": 1, ...}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomials serialize")
    }
}

impl std::ops::Add for &Polynomial2V {
    type Output = Polynomial2V;

    fn add(self, rhs: &Polynomial2V) -> Polynomial2V {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl std::ops::Mul for &Polynomial2V {
    type Output = Polynomial2V;

    fn mul(self, rhs: &Polynomial2V) -> Polynomial2V {
        let mut out = Polynomial2V::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

fn json_coeff(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => v.into(),
        None => c.to_string().into(),
    }
}

impl Serialize for Polynomial1V {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if !c.is_zero() {
                map.serialize_entry(&format!("x^{k}"), &json_coeff(c))?;
            }
        }
        map.end()
    }
}

impl Serialize for Polynomial2V {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for ((i, j), c) in ordered(self) {
            map.serialize_entry(&format!("x^{i} y^{j}"), &json_coeff(c))?;
        }
        map.end()
    }
}

/// Terms by decreasing x-degree, then increasing y-degree.
fn ordered(p: &Polynomial2V) -> Vec<((u32, u32), &BigInt)> {
    let mut v: Vec<((u32, u32), &BigInt)> = p.terms.iter().map(|(&k, c)| (k, c)).collect();
    v.sort_by(|((a, b), _), ((c, d), _)| c.cmp(a).then(b.cmp(d)));
    v
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(String, &BigInt)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (mono, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{abs}{mono}")?;
        }
    }
    Ok(())
}

fn power(var: &str, k: u32) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

impl fmt::Display for Polynomial1V {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (power("x", k as u32), c))
            .collect();
        write_terms(f, &terms)
    }
}

impl fmt::Display for Polynomial2V {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, &BigInt)> = ordered(self)
            .into_iter()
            .map(|((i, j), c)| (power("x", i) + &power("y", j), c))
            .collect();
        write_terms(f, &terms)
    }
}
