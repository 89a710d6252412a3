//! Homogeneous symmetric functions with coefficients in `q`.
//!
//! Elements carry a basis tag (monomial, Schur or complete homogeneous) and a map from
//! partitions of `n` to polynomials. Equality compares monomial expansions.

pub mod hall_littlewood;
pub mod kostka;
pub mod pieri;
pub mod tableau;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use hall_littlewood::{hl_h, hl_modified};
pub use kostka::{kostka_foulkes, kostka_number};
pub use pieri::pieri_h;
pub use tableau::{charge, count_ssyt, for_each_ssyt, Tableau};

use crate::error::{Error, Result};
use crate::qcore::{from_count, partitions, Coeff, Partition, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    Schur,
    Homogeneous,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Schur => "s",
            Basis::Homogeneous => "h",
        }
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::Monomial),
            "s" => Ok(Basis::Schur),
            "h" => Ok(Basis::Homogeneous),
            other => Err(Error::InvalidArguments(format!("unknown basis {other:?}"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A degree-`n` symmetric function `Σ_λ c_λ(q) b_λ` in basis `b`.
#[derive(Clone)]
pub struct SymmetricFunction<C> {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<Partition, Poly<C>>,
}

impl<C: Coeff> SymmetricFunction<C> {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymmetricFunction { degree, basis, terms: BTreeMap::new() }
    }

    /// The basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut f = Self::zero(lambda.size(), basis);
        f.terms.insert(lambda, Poly::one());
        f
    }

    pub fn from_terms(degree: usize, basis: Basis, terms: impl IntoIterator<Item = (Partition, Poly<C>)>) -> Result<Self> {
        let mut f = Self::zero(degree, basis);
        for (lambda, c) in terms {
            f.add_term(lambda, &c)?;
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Poly<C>> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> Poly<C> {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · b_λ`.
    pub fn add_term(&mut self, lambda: Partition, c: &Poly<C>) -> Result<()> {
        if lambda.size() != self.degree {
            return Err(Error::SizeMismatch { left: lambda.size(), right: self.degree });
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(lambda).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    /// Sum of two functions of the same degree; `other` is converted to `self`'s basis.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch { left: self.degree, right: other.degree });
        }
        let other = other.to_basis(self.basis)?;
        let mut out = self.clone();
        for (lambda, c) in other.terms {
            out.add_term(lambda, &c)?;
        }
        Ok(out)
    }

    /// Multiplies every coefficient by the polynomial `c`.
    pub fn scale(&self, c: &Poly<C>) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (lambda, a) in &self.terms {
            let prod = a * c;
            if !prod.is_zero() {
                out.terms.insert(lambda.clone(), prod);
            }
        }
        out
    }

    /// Largest `q`-degree among the coefficients.
    pub fn q_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(Poly::degree).max()
    }

    /// Coefficientwise `q`-reversal at degree `d`.
    pub fn q_reverse(&self, d: usize) -> Result<Self> {
        let mut out = Self::zero(self.degree, self.basis);
        for (lambda, c) in &self.terms {
            out.terms.insert(lambda.clone(), c.reverse(d)?);
        }
        Ok(out)
    }

    /// Restricts to the coefficient of `q^d` in every term.
    pub fn q_component(&self, d: usize) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (lambda, c) in &self.terms {
            let a = c.coeff(d);
            if !a.is_zero() {
                out.terms.insert(lambda.clone(), Poly::constant(a));
            }
        }
        out
    }

    /// Same element expressed in `target`.
    pub fn to_basis(&self, target: Basis) -> Result<Self> {
        use Basis::*;
        match (self.basis, target) {
            (a, b) if a == b => Ok(self.clone()),
            (Schur, Monomial) => Ok(self.schur_to_monomial()),
            (Homogeneous, Schur) => Ok(self.homogeneous_to_schur()),
            (Homogeneous, Monomial) => Ok(self.homogeneous_to_schur().schur_to_monomial()),
            (Monomial, Schur) => Ok(self.monomial_to_schur()),
            (from, to) => Err(Error::NotImplementedBasisPair { from: from.tag(), to: to.tag() }),
        }
    }

    /// `s_λ = Σ_μ K_{λμ} m_μ`.
    fn schur_to_monomial(&self) -> Self {
        let mut out = Self::zero(self.degree, Basis::Monomial);
        for (lambda, c) in &self.terms {
            for mu in partitions(self.degree) {
                let k = kostka_number(lambda, &mu);
                if k != 0 {
                    out.add_term(mu, &c.scale(&from_count(k))).expect("same degree");
                }
            }
        }
        out
    }

    /// `h_μ = Σ_λ K_{λμ} s_λ`.
    fn homogeneous_to_schur(&self) -> Self {
        let mut out = Self::zero(self.degree, Basis::Schur);
        for (mu, c) in &self.terms {
            for lambda in partitions(self.degree) {
                let k = kostka_number(&lambda, mu);
                if k != 0 {
                    out.add_term(lambda, &c.scale(&from_count(k))).expect("same degree");
                }
            }
        }
        out
    }

    /// Peels off the lexicographically largest monomial term; the Kostka matrix is
    /// unitriangular with respect to any linear extension of dominance.
    fn monomial_to_schur(&self) -> Self {
        let mut rest = self.clone();
        let mut out = Self::zero(self.degree, Basis::Schur);
        while let Some((lead, c)) = rest.terms.iter().next_back().map(|(l, c)| (l.clone(), c.clone())) {
            let expansion = Self::basis_element(Basis::Schur, lead.clone()).schur_to_monomial().scale(&c);
            for (mu, a) in expansion.terms {
                rest.add_term(mu, &(-a)).expect("same degree");
            }
            debug_assert!(rest.coeff(&lead).is_zero());
            out.add_term(lead, &c).expect("same degree");
        }
        out
    }

    /// Every coefficient in the given basis has nonnegative entries.
    pub fn is_positive_in(&self, basis: Basis) -> Result<bool>
    where
        C: PartialOrd,
    {
        Ok(self.to_basis(basis)?.terms.values().all(Poly::is_nonnegative))
    }

    /// Substitutes `q = value` into every coefficient.
    pub fn eval_q(&self, value: &C) -> BTreeMap<Partition, C> {
        self.terms
            .iter()
            .map(|(l, c)| (l.clone(), c.eval(value)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }
}

impl<C: Coeff> PartialEq for SymmetricFunction<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.degree != other.degree {
            return false;
        }
        if self.basis == other.basis {
            return self.terms == other.terms;
        }
        match (self.to_basis(Basis::Monomial), other.to_basis(Basis::Monomial)) {
            (Ok(a), Ok(b)) => a.terms == b.terms,
            _ => false,
        }
    }
}

impl<C: Coeff> Eq for SymmetricFunction<C> {}

impl<C: Coeff> fmt::Debug for SymmetricFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Coeff> fmt::Display for SymmetricFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){}{lambda}", self.basis)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson<C: Coeff> {
    partition: Partition,
    #[serde(bound = "")]
    coeffs: Poly<C>,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson<C: Coeff> {
    n: usize,
    basis: String,
    #[serde(bound = "")]
    terms: Vec<TermJson<C>>,
}

/// `{"n": .., "basis": "m"|"s"|"h", "terms": [{"partition": [..], "coeffs": [..]}]}`, terms in
/// decreasing lexicographic order of partitions.
impl<C: Coeff> Serialize for SymmetricFunction<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            n: self.degree,
            basis: self.basis.tag().to_string(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(p, c)| TermJson { partition: p.clone(), coeffs: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for SymmetricFunction<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SymFuncJson::<C>::deserialize(d)?;
        let basis = raw.basis.parse().map_err(D::Error::custom)?;
        Self::from_terms(raw.n, basis, raw.terms.into_iter().map(|t| (t.partition, t.coeffs))).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    type S = SymmetricFunction<BigInt>;
    type P = Poly<BigInt>;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn schur_two_to_monomial() {
        let s2 = S::basis_element(Basis::Schur, p(&[2]));
        let m = s2.to_basis(Basis::Monomial).unwrap();
        let expected = S::from_terms(2, Basis::Monomial, [(p(&[2]), P::one()), (p(&[1, 1]), P::one())]).unwrap();
        assert_eq!(m.terms(), expected.terms());
    }

    #[test]
    fn monomial_to_schur_inverts() {
        let f = S::from_terms(2, Basis::Monomial, [(p(&[2]), P::one()), (p(&[1, 1]), P::one())]).unwrap();
        let s = f.to_basis(Basis::Schur).unwrap();
        assert_eq!(s.terms().len(), 1);
        assert_eq!(s.coeff(&p(&[2])), P::one());
        assert_eq!(s.coeff(&p(&[1, 1])), P::zero());
    }

    #[test]
    fn round_trip_every_schur_element() {
        for n in 0..=6 {
            for lam in partitions(n) {
                let s = S::basis_element(Basis::Schur, lam.clone()).scale(&P::from_ints(&[1, -2, 3]));
                let back = s.to_basis(Basis::Monomial).unwrap().to_basis(Basis::Schur).unwrap();
                assert_eq!(back.terms(), s.terms(), "{lam}");
            }
        }
    }

    #[test]
    fn homogeneous_to_monomial() {
        // h_{11} = m_2 + 2 m_{11}
        let h = S::basis_element(Basis::Homogeneous, p(&[1, 1])).to_basis(Basis::Monomial).unwrap();
        assert_eq!(h.coeff(&p(&[2])), P::one());
        assert_eq!(h.coeff(&p(&[1, 1])), P::from_ints(&[2]));
    }

    #[test]
    fn into_homogeneous_is_unsupported() {
        let s = S::basis_element(Basis::Schur, p(&[2]));
        assert!(matches!(s.to_basis(Basis::Homogeneous), Err(Error::NotImplementedBasisPair { .. })));
    }

    #[test]
    fn equality_across_bases() {
        let s = S::basis_element(Basis::Schur, p(&[2]));
        let m = S::from_terms(2, Basis::Monomial, [(p(&[2]), P::one()), (p(&[1, 1]), P::one())]).unwrap();
        assert_eq!(s, m);
        assert_ne!(s, S::basis_element(Basis::Monomial, p(&[2])));
    }

    #[test]
    fn json_layout() {
        let f = S::from_terms(2, Basis::Monomial, [(p(&[1, 1]), P::from_ints(&[1, 2])), (p(&[2]), P::from_ints(&[1, 1]))]).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"n":2,"basis":"m","terms":[{"partition":[2],"coeffs":[1,1]},{"partition":[1,1],"coeffs":[1,2]}]}"#
        );
        let back: S = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn add_term_cancels() {
        let mut f = S::basis_element(Basis::Monomial, p(&[2]));
        f.add_term(p(&[2]), &P::from_ints(&[-1])).unwrap();
        assert!(f.is_zero());
        assert!(f.add_term(p(&[3]), &P::one()).is_err());
    }
}
