use rayon::prelude::*;
use serde::Serialize;

use super::field::FpMatrix;
use super::subspace::Subspace;
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::qcore::{q_binom, Composition};

/// Nested subspaces `V_1 ⊂ ... ⊂ V_m` with `dim V_i / V_{i-1} = μ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Flag {
    pub spaces: Vec<Subspace>,
}

impl Flag {
    pub fn last(&self) -> Option<&Subspace> {
        self.spaces.last()
    }

    /// Image of every part under an invertible matrix.
    pub fn image(&self, m: &FpMatrix) -> Flag {
        Flag { spaces: self.spaces.iter().map(|v| v.image(m)).collect() }
    }

    /// The first `m` parts.
    pub fn truncate(&self, m: usize) -> Flag {
        Flag { spaces: self.spaces[..m].to_vec() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `N V_i ⊆ V_i`.
    Stable,
    /// `N V_i ⊆ V_{i-1}`.
    Strict,
}

/// Extra condition on the last part of the flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LastPart {
    Free,
    /// Leading-index set (1-indexed) of `V_m` must equal this set.
    Cell(Vec<usize>),
    /// `V_m` must equal this subspace.
    Fixed(Subspace),
}

/// A flag-counting problem over `F_p`.
#[derive(Debug, Clone)]
pub struct FlagProblem {
    pub nilpotent: FpMatrix,
    pub mu: Composition,
    pub mode: Mode,
    /// `V_m` must contain this subspace.
    pub contain: Subspace,
    pub last: LastPart,
}

impl FlagProblem {
    pub fn new(nilpotent: FpMatrix, mu: Composition, mode: Mode) -> Result<Self> {
        let contain = Subspace::zero(nilpotent.p(), nilpotent.size())?;
        if mu.size() > nilpotent.size() {
            return Err(Error::InvalidArguments(format!("|μ| = {} exceeds K = {}", mu.size(), nilpotent.size())));
        }
        if !mu.is_strong() {
            return Err(Error::InvalidArguments(format!("μ = {:?} is not a strong composition", mu.parts())));
        }
        Ok(FlagProblem { nilpotent, mu, mode, contain, last: LastPart::Free })
    }

    pub fn containing(mut self, contain: Subspace) -> Self {
        self.contain = contain;
        self
    }

    pub fn with_last(mut self, last: LastPart) -> Self {
        self.last = last;
        self
    }

    fn p(&self) -> u32 {
        self.nilpotent.p()
    }

    fn ambient(&self) -> usize {
        self.nilpotent.size()
    }

    /// Indices allowed as leading terms of `V_m`, 1-indexed.
    fn allowed(&self) -> Vec<usize> {
        match &self.last {
            LastPart::Free => (1..=self.ambient()).collect(),
            LastPart::Cell(s) => s.clone(),
            LastPart::Fixed(f) => f.pivots(),
        }
    }

    /// Upper bound on the number of candidate subspaces examined: a product of Gaussian
    /// binomials in `p`.
    pub fn estimate(&self) -> u128 {
        let p = self.p() as u128;
        let mut avail = self.allowed().len() as i64;
        let mut total: u128 = 1;
        let mut level: u128 = 1;
        for &m in self.mu.parts() {
            let g: u128 = q_binom::<i128>(avail, m as i64)
                .coeffs()
                .iter()
                .rev()
                .fold(0u128, |acc, &c| acc.saturating_mul(p).saturating_add(c as u128));
            level = level.saturating_mul(g.max(1));
            total = total.saturating_add(level);
            avail -= m as i64;
        }
        total
    }

    fn extension_ok(&self, prev: &Subspace, next: &Subspace) -> bool {
        let n = &self.nilpotent;
        let stable = match self.mode {
            Mode::Stable => next.maps_into(n, next),
            Mode::Strict => next.maps_into(n, prev),
        };
        if !stable {
            return false;
        }
        if next.join(&self.contain).dim() > self.mu.size() {
            return false;
        }
        if let LastPart::Fixed(f) = &self.last {
            if !f.contains(next) {
                return false;
            }
        }
        true
    }

    fn final_ok(&self, last: &Subspace) -> bool {
        if !last.contains(&self.contain) {
            return false;
        }
        match &self.last {
            LastPart::Free => true,
            LastPart::Cell(s) => {
                let mut s = s.clone();
                s.sort_unstable();
                last.pivots() == s
            }
            LastPart::Fixed(f) => f == last,
        }
    }

    /// All `W ⊇ V` with `dim W = dim V + m` whose new leading indices lie in `allowed`.
    fn extensions(&self, v: &Subspace, m: usize, allowed: &[usize], meter: &Meter) -> Result<Vec<Subspace>> {
        let p = self.p();
        let k = self.ambient();
        let pivots = v.pivots();
        let free_cols: Vec<usize> = (1..=k).filter(|i| !pivots.contains(i)).collect();
        let choices: Vec<usize> = allowed.iter().copied().filter(|i| !pivots.contains(i)).collect();
        let mut out = Vec::new();
        for q in combinations(&choices, m) {
            // coordinates h < q outside the existing and new leading indices
            let qs = &q;
            let slots: Vec<(usize, usize)> = q
                .iter()
                .enumerate()
                .flat_map(|(a, &qa)| {
                    free_cols.iter().filter(move |&&h| h < qa && !qs.contains(&h)).map(move |&h| (a, h))
                })
                .collect();
            let mut digits = vec![0u8; slots.len()];
            loop {
                meter.tick()?;
                let mut w = v.clone();
                for (a, &qa) in q.iter().enumerate() {
                    let mut u = vec![0u8; k];
                    u[qa - 1] = 1;
                    for (&(b, h), &d) in slots.iter().zip(&digits) {
                        if b == a {
                            u[h - 1] = d;
                        }
                    }
                    w.insert(u);
                }
                if self.extension_ok(v, &w) {
                    out.push(w);
                }
                if !increment(&mut digits, p) {
                    break;
                }
            }
        }
        Ok(out)
    }

    /// Enumerates matching flags, calling `f` on each.
    pub fn for_each(&self, budget: Budget, f: &mut dyn FnMut(&Flag)) -> Result<()> {
        budget.check(self.estimate())?;
        let meter = Meter::new(budget);
        let allowed = self.allowed();
        let mut spaces = Vec::with_capacity(self.mu.len());
        let zero = Subspace::zero(self.p(), self.ambient())?;
        self.walk(&zero, 0, &allowed, &meter, &mut spaces, f)
    }

    fn walk(
        &self,
        v: &Subspace,
        level: usize,
        allowed: &[usize],
        meter: &Meter,
        spaces: &mut Vec<Subspace>,
        f: &mut dyn FnMut(&Flag),
    ) -> Result<()> {
        if level == self.mu.len() {
            if self.final_ok(v) {
                f(&Flag { spaces: spaces.clone() });
            }
            return Ok(());
        }
        for w in self.extensions(v, self.mu.parts()[level], allowed, meter)? {
            spaces.push(w.clone());
            self.walk(&w, level + 1, allowed, meter, spaces, f)?;
            spaces.pop();
        }
        Ok(())
    }

    /// Number of matching flags; first-level branches are counted in parallel.
    pub fn count(&self, budget: Budget) -> Result<u128> {
        budget.check(self.estimate())?;
        let meter = Meter::new(budget);
        let allowed = self.allowed();
        let zero = Subspace::zero(self.p(), self.ambient())?;
        if self.mu.is_empty() {
            return Ok(u128::from(self.final_ok(&zero)));
        }
        let first = self.extensions(&zero, self.mu.parts()[0], &allowed, &meter)?;
        first
            .par_iter()
            .map(|w| {
                let mut n = 0u128;
                let mut spaces = vec![w.clone()];
                self.walk(w, 1, &allowed, &meter, &mut spaces, &mut |_| n += 1)?;
                Ok(n)
            })
            .try_reduce(|| 0, |a, b| Ok(a + b))
    }
}

/// `m`-subsets of `items` in lexicographic order.
fn combinations(items: &[usize], m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn go(items: &[usize], start: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < m - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, i + 1, m, cur, out);
            cur.pop();
        }
    }
    go(items, 0, m, &mut cur, &mut out);
    out
}

/// Base-`p` odometer; returns `false` after wrapping to all zeros.
fn increment(digits: &mut [u8], p: u32) -> bool {
    for d in digits.iter_mut() {
        if (*d as u32) + 1 < p {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}

/// Counts flags of type `μ` with the given stability mode, containment and last-part condition.
pub fn count_flags(
    nilpotent: &FpMatrix,
    mu: &Composition,
    mode: Mode,
    contain: &Subspace,
    last: LastPart,
    budget: Budget,
) -> Result<u128> {
    FlagProblem::new(nilpotent.clone(), mu.clone(), mode)?.containing(contain.clone()).with_last(last).count(budget)
}
