use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{FromPrimitive, Num};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient ring for polynomials in `q`.
///
/// Any exact commutative ring from the num ecosystem works: `BigInt`, `i64`, `i128`,
/// `BigRational`. Floating types satisfy the bounds too but lose exactness.
pub trait Coeff: Num + Clone + fmt::Debug + fmt::Display + Neg<Output = Self> + FromPrimitive + Send + Sync {}

impl<T> Coeff for T where T: Num + Clone + fmt::Debug + fmt::Display + Neg<Output = Self> + FromPrimitive + Send + Sync {}

/// Converts a count into the coefficient ring.
pub fn from_count<C: Coeff>(n: u64) -> C {
    C::from_u64(n).expect("count representable in coefficient ring")
}

/// Dense polynomial in `q`; `coeffs[i]` is the coefficient of `q^i`. No trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![C::one()] }
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · q^d`.
    pub fn monomial(c: C, d: usize) -> Self {
        let mut coeffs = vec![C::zero(); d];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// `q^d`.
    pub fn q_pow(d: usize) -> Self {
        Self::monomial(C::one(), d)
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds from small integer coefficients; handy in tests and examples.
    pub fn from_ints(ints: &[i64]) -> Self {
        Self::from_coeffs(ints.iter().map(|&i| C::from_i64(i).expect("i64 coefficient")).collect())
    }

    /// Polynomial whose `q^d` coefficient is `counts[d]`.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::from_coeffs(counts.iter().map(|&n| from_count(n)).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplies by `q^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, q: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc * q.clone() + c.clone())
    }

    /// `q^d · f(1/q)`: coefficient `i` of the result is coefficient `d - i` of `self`.
    pub fn reverse(&self, d: usize) -> Result<Self> {
        match self.degree() {
            None => Ok(Self::zero()),
            Some(deg) if deg > d => Err(Error::DegreeTooLarge { degree: deg, bound: d }),
            Some(_) => Ok(Self::from_coeffs((0..=d).map(|i| self.coeff(d - i)).collect())),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Every coefficient is `>= 0`.
    pub fn is_nonnegative(&self) -> bool
    where
        C: PartialOrd,
    {
        self.coeffs.iter().all(|c| *c >= C::zero())
    }
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: Poly<C>) -> Poly<C> {
        &self + &rhs
    }
}

impl<C: Coeff> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), C::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = a.clone() + b.clone();
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Sub for Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: Poly<C>) -> Poly<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "q")?,
                1 => write!(f, "{c}q")?,
                _ if c.is_one() => write!(f, "q^{i}")?,
                _ => write!(f, "{c}q^{i}")?,
            }
        }
        Ok(())
    }
}

/// Serializes as a JSON integer array `[c0, c1, ...]` of arbitrary size.
impl<C: Coeff> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::{Error as _, SerializeSeq};
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            let n = serde_json::Number::from_str(&c.to_string()).map_err(S::Error::custom)?;
            seq.serialize_element(&n)?;
        }
        seq.end()
    }
}

impl<'de, C: Coeff> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = Vec::<serde_json::Number>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|n| C::from_str_radix(&n.to_string(), 10).map_err(|_| D::Error::custom(format!("bad coefficient {n}"))))
            .collect::<std::result::Result<Vec<C>, D::Error>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}
