use serde::{Deserialize, Serialize};

use super::partition::Partition;

/// A composition with an explicit length; parts may be zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of entries, zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_strong(&self) -> bool {
        self.0.iter().all(|&p| p > 0)
    }

    /// The `i`-th part (1-indexed), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Column lengths of the left-justified diagram `[α]`.
    pub fn column_lengths(&self) -> Vec<usize> {
        let width = self.0.iter().copied().max().unwrap_or(0);
        (1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect()
    }

    /// `α ⊇ λ` entrywise, with `λ` padded by zeros.
    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.len() <= self.len() && (1..=self.len()).all(|i| self.part(i) >= lambda.part(i))
    }

    /// The `i`-th block `α[i]` (1-indexed blocks, 1-indexed positions) for a strong composition.
    pub fn block(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        let start: usize = self.0[..i - 1].iter().sum();
        start + 1..=start + self.0[i - 1]
    }

    /// Block index (1-indexed) of each position `1..=|α|`.
    pub fn block_of_positions(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(i, &p)| std::iter::repeat_n(i + 1, p)).collect()
    }
}

impl From<Vec<usize>> for Composition {
    fn from(v: Vec<usize>) -> Self {
        Composition(v)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.parts().to_vec())
    }
}

/// Number of pairs `i < j` with `α_i < α_j`.
pub fn coinv(alpha: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..alpha.len() {
        for j in i + 1..alpha.len() {
            if alpha[i] < alpha[j] {
                count += 1;
            }
        }
    }
    count
}

/// The positive parts sorted decreasingly.
pub fn sort_desc(alpha: &[usize]) -> Partition {
    let mut parts: Vec<usize> = alpha.iter().copied().filter(|&p| p > 0).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted parts form a partition")
}

/// `Comp(n, s)`: all length-`s` compositions of `n`, in lexicographic order.
pub fn compositions(n: usize, s: usize) -> Vec<Composition> {
    fn go(rem: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 0 {
            if rem == 0 {
                out.push(Composition(cur.clone()));
            }
            return;
        }
        if slots == 1 {
            cur.push(rem);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for p in 0..=rem {
            cur.push(p);
            go(rem - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, s, &mut Vec::new(), &mut out);
    out
}

/// All strong compositions of `n`, in lexicographic order.
pub fn strong_compositions(n: usize) -> Vec<Composition> {
    fn go(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rem == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=rem {
            cur.push(p);
            go(rem - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// Distinct rearrangements of `ν` padded with zeros to length `s`, in lexicographic order.
pub fn rearrangements(nu: &Partition, s: usize) -> Vec<Composition> {
    let mut items: Vec<usize> = nu.parts().to_vec();
    if items.len() > s {
        return Vec::new();
    }
    items.resize(s, 0);
    items.sort_unstable();
    let mut out = vec![Composition(items.clone())];
    // next lexicographic permutation
    while let Some(i) = (1..items.len()).rev().find(|&i| items[i - 1] < items[i]) {
        let j = (i..items.len()).rev().find(|&j| items[j] > items[i - 1]).unwrap();
        items.swap(i - 1, j);
        items[i..].reverse();
        out.push(Composition(items.clone()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coinv_examples() {
        assert_eq!(coinv(&[2, 1, 0]), 0);
        assert_eq!(coinv(&[1, 0, 2]), 2);
        assert_eq!(coinv(&[0, 2, 1]), 2);
    }

    #[test]
    fn sort_desc_examples() {
        assert_eq!(sort_desc(&[0, 2, 1]).parts(), &[2, 1]);
        assert_eq!(sort_desc(&[1, 1]).parts(), &[1, 1]);
        assert_eq!(sort_desc(&[0, 0, 3]).parts(), &[3]);
    }

    #[test]
    fn composition_counts() {
        // C(n+s-1, s-1)
        assert_eq!(compositions(4, 3).len(), 15);
        assert_eq!(compositions(0, 2).len(), 1);
        assert_eq!(compositions(3, 0).len(), 0);
        assert_eq!(compositions(0, 0).len(), 1);
        assert_eq!(strong_compositions(5).len(), 16);
        assert_eq!(strong_compositions(0).len(), 1);
    }

    #[test]
    fn rearrangement_counts() {
        let nu = Partition::new(vec![2, 1, 1]).unwrap();
        assert_eq!(rearrangements(&nu, 4).len(), 12);
        assert_eq!(rearrangements(&nu, 2).len(), 0);
    }

    #[test]
    fn blocks() {
        let mu = Composition::new(vec![2, 1, 3]);
        assert_eq!(mu.block(1), 1..=2);
        assert_eq!(mu.block(3), 4..=6);
        assert_eq!(mu.block_of_positions(), vec![1, 1, 2, 3, 3, 3]);
    }
}
