use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::field::{check_prime, inv, FpMatrix};
use crate::error::Result;

/// A subspace of `F_p^K` in canonical form.
///
/// Each generator has leading term (largest nonzero index) equal to 1 and vanishes at the
/// leading indices of every other generator; generators are sorted by leading index.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Subspace {
    p: u32,
    ambient: usize,
    basis: Vec<Vec<u8>>,
}

fn leading(v: &[u8]) -> Option<usize> {
    v.iter().rposition(|&x| x != 0)
}

impl Subspace {
    pub fn zero(p: u32, ambient: usize) -> Result<Self> {
        check_prime(p)?;
        Ok(Subspace { p, ambient, basis: Vec::new() })
    }

    pub fn full(p: u32, ambient: usize) -> Result<Self> {
        Self::coordinate(p, ambient, 1..=ambient)
    }

    /// `span{f_i : i ∈ indices}`, 1-indexed.
    pub fn coordinate(p: u32, ambient: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let vs = indices.into_iter().map(|i| {
            let mut v = vec![0; ambient];
            v[i - 1] = 1;
            v
        });
        Self::span(p, ambient, vs)
    }

    /// Span of arbitrary vectors (entries taken mod `p`).
    pub fn span(p: u32, ambient: usize, vectors: impl IntoIterator<Item = Vec<u8>>) -> Result<Self> {
        let mut s = Self::zero(p, ambient)?;
        for v in vectors {
            s.insert(v.into_iter().map(|x| (x as u32 % p) as u8).collect());
        }
        Ok(s)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    /// Leading indices (1-indexed), ascending. These determine the Schubert cell.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|b| leading(b).expect("nonzero generator") + 1).collect()
    }

    /// Clears the leading index of every generator from `v`.
    pub fn reduce(&self, mut v: Vec<u8>) -> Vec<u8> {
        let p = self.p;
        for b in &self.basis {
            let q = leading(b).expect("nonzero generator");
            let c = v[q] as u32;
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = ((*x as u32 + (p - c) * y as u32) % p) as u8;
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[u8]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<u8>) -> bool {
        let p = self.p;
        let mut v = self.reduce(v);
        let Some(q) = leading(&v) else {
            return false;
        };
        let scale = inv(v[q], p) as u32;
        for x in v.iter_mut() {
            *x = (*x as u32 * scale % p) as u8;
        }
        for b in self.basis.iter_mut() {
            let c = b[q] as u32;
            if c != 0 {
                for (x, &y) in b.iter_mut().zip(&v) {
                    *x = ((*x as u32 + (p - c) * y as u32) % p) as u8;
                }
            }
        }
        let at = self.basis.partition_point(|b| leading(b) < Some(q));
        self.basis.insert(at, v);
        true
    }

    /// `V + W`.
    pub fn join(&self, other: &Subspace) -> Subspace {
        let mut out = self.clone();
        for v in &other.basis {
            out.insert(v.clone());
        }
        out
    }

    /// Image under a matrix.
    pub fn image(&self, m: &FpMatrix) -> Subspace {
        let mut out = Subspace { p: self.p, ambient: self.ambient, basis: Vec::new() };
        for v in &self.basis {
            out.insert(m.apply(v));
        }
        out
    }

    /// `M V ⊆ W`.
    pub fn maps_into(&self, m: &FpMatrix, w: &Subspace) -> bool {
        self.basis.iter().all(|v| w.contains_vector(&m.apply(v)))
    }
}

/// Leading-index set of a subspace, i.e. the Schubert cell it lies in.
pub fn cell_of_subspace(v: &Subspace) -> BTreeSet<usize> {
    v.pivots().into_iter().collect()
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?}", self.basis)
    }
}
