use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Primes the point counters accept.
pub const ALLOWED_PRIMES: [u32; 4] = [2, 3, 5, 7];

pub fn check_prime(p: u32) -> Result<()> {
    if ALLOWED_PRIMES.contains(&p) {
        Ok(())
    } else {
        Err(Error::UnsupportedPrime(p))
    }
}

pub(crate) fn inv(a: u8, p: u32) -> u8 {
    debug_assert!(a != 0);
    (1..p as u8).find(|&b| (a as u32 * b as u32) % p == 1).expect("nonzero residue is invertible")
}

/// Square matrix over `F_p`, row-major. Column `j` is the image of `f_{j+1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u32,
    size: usize,
    entries: Vec<u8>,
}

impl FpMatrix {
    pub fn zero(p: u32, size: usize) -> Result<Self> {
        check_prime(p)?;
        Ok(FpMatrix { p, size, entries: vec![0; size * size] })
    }

    pub fn identity(p: u32, size: usize) -> Result<Self> {
        let mut m = Self::zero(p, size)?;
        for i in 0..size {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry at 0-indexed `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u8) {
        self.entries[row * self.size + col] = (value as u32 % self.p) as u8;
    }

    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        (0..self.size)
            .map(|r| {
                let row = &self.entries[r * self.size..(r + 1) * self.size];
                (row.iter().zip(v).map(|(&a, &b)| a as u32 * b as u32).sum::<u32>() % self.p) as u8
            })
            .collect()
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        let n = self.size;
        let mut out = FpMatrix { p: self.p, size: n, entries: vec![0; n * n] };
        for r in 0..n {
            for c in 0..n {
                let s: u32 = (0..n).map(|k| self.get(r, k) as u32 * other.get(k, c) as u32).sum();
                out.entries[r * n + c] = (s % self.p) as u8;
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> FpMatrix {
        let mut out = FpMatrix::identity(self.p, self.size).expect("prime already checked");
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn transpose(&self) -> FpMatrix {
        let n = self.size;
        let mut out = self.clone();
        for r in 0..n {
            for c in 0..n {
                out.entries[c * n + r] = self.get(r, c);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.size).is_zero()
    }

    /// Rows as nested vectors.
    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.entries.chunks(self.size.max(1)).map(<[u8]>::to_vec).take(self.size).collect()
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMatrix(p={}, {:?})", self.p, self.rows())
    }
}

impl Serialize for FpMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            p: u32,
            rows: Vec<Vec<u8>>,
        }
        Raw { p: self.p, rows: self.rows() }.serialize(s)
    }
}
