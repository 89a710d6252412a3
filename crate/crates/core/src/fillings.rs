//! Partial row-decreasing fillings, `dinv`, admissible words and `inv_T`.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::budget::{Budget, Meter};
use crate::diagrams::{check_schubert_compatible, Cell, DeltaInstance, Filling, SchubertCheck};
use crate::error::{Error, Result};
use crate::qcore::{partitions, Coeff, Composition, Partition, Poly};
use crate::symfunc::{Basis, SymmetricFunction};

/// A partial row-decreasing filling: `n` right-justified cells per row, labels weakly
/// decreasing left to right, every cell of `[λ]^r` filled. Empty cells hold `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrdFilling {
    instance: DeltaInstance,
    rows: Vec<Vec<usize>>,
}

impl PrdFilling {
    /// Validates the shape, right-justification, row decrease and `[λ]^r` coverage.
    pub fn from_rows(instance: DeltaInstance, rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |why: &str| Err(Error::InvalidArguments(format!("not a PRD filling: {why}")));
        if rows.len() != instance.s() || rows.iter().zip(instance.shape()).any(|(r, &len)| r.len() != len) {
            return bad("row lengths differ from Λ");
        }
        for (r, row) in rows.iter().enumerate() {
            let first = row.iter().position(|&x| x != 0).unwrap_or(row.len());
            if row[first..].contains(&0) {
                return bad("filled cells are not right justified");
            }
            if row[first..].windows(2).any(|w| w[0] < w[1]) {
                return bad("labels increase along a row");
            }
            if row.len() - first < instance.lambda().part(r + 1) {
                return bad("a cell of [λ]^r is empty");
            }
        }
        if rows.iter().flatten().filter(|&&x| x != 0).count() != instance.n() {
            return bad("number of filled cells differs from n");
        }
        Ok(PrdFilling { instance, rows })
    }

    pub fn instance(&self) -> &DeltaInstance {
        &self.instance
    }

    /// Rows with `0` marking empty cells.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Label of a cell, `None` if the cell is empty or outside `[Λ]`.
    pub fn get(&self, c: Cell) -> Option<usize> {
        if c.row == 0 || c.col == 0 {
            return None;
        }
        self.rows.get(c.row - 1)?.get(c.col - 1).copied().filter(|&x| x != 0)
    }

    /// Multiset of labels as a count vector indexed from label 1.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &x in self.rows.iter().flatten().filter(|&&x| x != 0) {
            c[x - 1] += 1;
        }
        c
    }

    /// Replaces each label `a` by `f(a)`.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> PrdFilling {
        let rows = self.rows.iter().map(|r| r.iter().map(|&x| if x == 0 { 0 } else { f(x) }).collect()).collect();
        PrdFilling { instance: self.instance.clone(), rows }
    }

    /// Collapses the labels in the `i`th block of `μ` to `i`.
    pub fn collapse_blocks(&self, mu: &Composition) -> PrdFilling {
        let block = mu.block_of_positions();
        self.relabel(|a| block[a - 1])
    }
}

impl Serialize for PrdFilling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let width = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let padded: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.resize(width, 0);
                r
            })
            .collect();
        padded.serialize(s)
    }
}

/// An injective map `w: [n] → [K]`, stored as its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w(i)`, 1-indexed.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// Calls `f` on every PRD filling with content `content` (`content[i]` copies of `i + 1`).
pub fn for_each_prd(inst: &DeltaInstance, content: &[usize], f: &mut dyn FnMut(&PrdFilling)) {
    let _ = try_for_each_prd(inst, content, &mut |p| {
        f(p);
        Ok(())
    });
}

fn try_for_each_prd(
    inst: &DeltaInstance,
    content: &[usize],
    f: &mut dyn FnMut(&PrdFilling) -> Result<()>,
) -> Result<()> {
    if content.iter().sum::<usize>() != inst.n() {
        return Ok(());
    }
    let mut rows: Vec<Vec<usize>> = inst.shape().iter().map(|&len| vec![0; len]).collect();
    let mut remaining = content.to_vec();
    fill_row(inst, 0, inst.n(), &mut remaining, &mut rows, f)
}

fn fill_row(
    inst: &DeltaInstance,
    row: usize,
    left: usize,
    remaining: &mut Vec<usize>,
    rows: &mut Vec<Vec<usize>>,
    f: &mut dyn FnMut(&PrdFilling) -> Result<()>,
) -> Result<()> {
    let s = inst.s();
    if row == s {
        if left == 0 {
            f(&PrdFilling { instance: inst.clone(), rows: rows.clone() })?;
        }
        return Ok(());
    }
    let capacity_after: usize = inst.shape()[row + 1..].iter().sum();
    let need_after: usize = (row + 2..=s).map(|r| inst.lambda().part(r)).sum();
    let lo = inst.lambda().part(row + 1).max(left.saturating_sub(capacity_after));
    let hi = inst.shape()[row].min(left.saturating_sub(need_after));
    for len in lo..=hi {
        let mut chosen = vec![0; remaining.len()];
        choose_multiset(0, len, remaining, &mut chosen, &mut |chosen, remaining| {
            // largest labels leftmost
            let width = rows[row].len();
            let mut col = width - len;
            for label in (1..=chosen.len()).rev() {
                for _ in 0..chosen[label - 1] {
                    rows[row][col] = label;
                    col += 1;
                }
            }
            let out = fill_row(inst, row + 1, left - len, remaining, rows, f);
            rows[row].iter_mut().for_each(|x| *x = 0);
            out
        })?;
    }
    Ok(())
}

type ChosenFn<'a> = dyn FnMut(&[usize], &mut Vec<usize>) -> Result<()> + 'a;

/// Sub-multisets of `remaining` of size `size`, each passed with the reduced remainder.
fn choose_multiset(
    label: usize,
    size: usize,
    remaining: &mut Vec<usize>,
    chosen: &mut Vec<usize>,
    f: &mut ChosenFn<'_>,
) -> Result<()> {
    if label == remaining.len() {
        return if size == 0 { f(chosen, remaining) } else { Ok(()) };
    }
    let available: usize = remaining[label..].iter().sum();
    if available < size {
        return Ok(());
    }
    let top = remaining[label].min(size);
    for take in 0..=top {
        chosen[label] = take;
        remaining[label] -= take;
        let out = choose_multiset(label + 1, size - take, remaining, chosen, f);
        remaining[label] += take;
        chosen[label] = 0;
        out?;
    }
    Ok(())
}

/// All PRD fillings of `[Λ]` with `μ_i` copies of `i`.
pub fn enum_prd(inst: &DeltaInstance, mu: &Partition) -> Vec<PrdFilling> {
    let mut out = Vec::new();
    for_each_prd(inst, mu.parts(), &mut |p| out.push(p.clone()));
    out
}

/// Number of diagonal inversions.
///
/// An attacking pair `((i,j),(p,q))` has either `j = q, i < p` or `j = q + 1, i > p`. It is a
/// diagonal inversion if both cells are filled with `φ(i,j) > φ(p,q)`, or if `(i,j)` is empty
/// and `(p,q)` is filled.
pub fn dinv(phi: &PrdFilling) -> usize {
    let inst = phi.instance();
    let s = inst.s();
    let counts = |a: Cell, b: Cell| -> bool {
        match (phi.get(a), phi.get(b)) {
            (Some(x), Some(y)) => x > y,
            (None, Some(_)) => true,
            _ => false,
        }
    };
    let mut total = 0;
    for i in 1..=s {
        for j in 1..=inst.row_len(i) {
            let a = Cell::new(i, j);
            for p in i + 1..=s {
                let b = Cell::new(p, j);
                if inst.contains_cell(b) && counts(a, b) {
                    total += 1;
                }
            }
            if j > 1 {
                for p in 1..i {
                    let b = Cell::new(p, j - 1);
                    if inst.contains_cell(b) && counts(a, b) {
                        total += 1;
                    }
                }
            }
        }
    }
    total
}

fn require_compatible(t: &Filling) -> Result<()> {
    match check_schubert_compatible(t) {
        SchubertCheck::Compatible => Ok(()),
        SchubertCheck::Violated { clause, witnesses } => Err(Error::NotSchubertCompatible(format!(
            "clause {clause} fails at {}",
            witnesses.iter().map(Cell::to_string).collect::<Vec<_>>().join(", ")
        ))),
    }
}

/// Whether `w` is injective, contains `[k]`, and each used label's right neighbour is used earlier.
pub fn is_admissible(t: &Filling, w: &Word) -> bool {
    let inst = t.instance();
    let big_k = inst.big_k();
    let mut position = vec![usize::MAX; big_k + 1];
    for (i, &x) in w.0.iter().enumerate() {
        if x == 0 || x > big_k || position[x] != usize::MAX {
            return false;
        }
        position[x] = i;
    }
    if (1..=inst.k()).any(|x| position[x] == usize::MAX) {
        return false;
    }
    w.0.iter().enumerate().all(|(i, &x)| {
        let c = t.cell_of(x);
        match t.get(Cell::new(c.row, c.col + 1)) {
            None => true,
            Some(right) => position[right] < i,
        }
    })
}

/// All admissible `μ`-increasing words for a Schubert-compatible `T`, in lexicographic order.
pub fn admissible_words(t: &Filling, mu: &Composition) -> Result<Vec<Word>> {
    require_compatible(t)?;
    let inst = t.instance();
    if mu.size() != inst.n() || !mu.is_strong() {
        return Err(Error::InvalidArguments(format!("μ must be a strong composition of {}", inst.n())));
    }
    let block = mu.block_of_positions();
    let big_k = inst.big_k();
    let k = inst.k();
    let mut used = vec![false; big_k + 1];
    let mut word = Vec::with_capacity(inst.n());
    let mut out = Vec::new();

    fn go(
        t: &Filling,
        block: &[usize],
        k: usize,
        used: &mut Vec<bool>,
        word: &mut Vec<usize>,
        out: &mut Vec<Word>,
    ) {
        let n = block.len();
        let i = word.len();
        let missing = (1..=k).filter(|&x| !used[x]).count();
        if missing > n - i {
            return;
        }
        if i == n {
            out.push(Word(word.clone()));
            return;
        }
        let floor = match word.last() {
            Some(&prev) if block[i - 1] == block[i] => prev + 1,
            _ => 1,
        };
        for x in floor..used.len() {
            if used[x] {
                continue;
            }
            let c = t.cell_of(x);
            if t.get(Cell::new(c.row, c.col + 1)).is_some_and(|r| !used[r]) {
                continue;
            }
            used[x] = true;
            word.push(x);
            go(t, block, k, used, word, out);
            word.pop();
            used[x] = false;
        }
    }

    go(t, &block, k, &mut used, &mut word, &mut out);
    Ok(out)
}

/// `PRD_T(w)`: the cell `T^{-1}(w(i))` receives label `i`.
pub fn prd_of_word(t: &Filling, w: &Word) -> Result<PrdFilling> {
    if !is_admissible(t, w) {
        return Err(Error::NotAdmissible(w.0.clone()));
    }
    let inst = t.instance();
    let mut rows: Vec<Vec<usize>> = inst.shape().iter().map(|&len| vec![0; len]).collect();
    for (i, &x) in w.0.iter().enumerate() {
        let c = t.cell_of(x);
        rows[c.row - 1][c.col - 1] = i + 1;
    }
    PrdFilling::from_rows(inst.clone(), rows)
}

/// `inv_T(w)`: pairs `(c, i)` with a later label in row `i` carrying a smaller image (IT1), or
/// failing that an empty cell of row `i` whose `T`-label is below `w(c)` (IT2).
pub fn inv_stat(t: &Filling, w: &Word) -> Result<usize> {
    let phi = prd_of_word(t, w)?;
    let inst = t.instance();
    let mut total = 0;
    for c in 1..=w.len() {
        let wc = w.at(c);
        for i in 1..=inst.s() {
            let row = &phi.rows()[i - 1];
            let it1 = row.iter().any(|&l| l > c && w.at(l) < wc);
            let it2 = || row.iter().enumerate().any(|(j, &l)| l == 0 && t.label(Cell::new(i, j + 1)) < wc);
            if it1 || it2() {
                total += 1;
            }
        }
    }
    Ok(total)
}

/// `Σ_{μ ⊢ n} Σ_{φ ∈ PRD^μ} q^{dinv(φ)} m_μ` with the default budget.
pub fn frob_delta<C: Coeff>(inst: &DeltaInstance) -> Result<SymmetricFunction<C>> {
    frob_delta_with(inst, Budget::default())
}

/// As [`frob_delta`], failing with `ResourceLimit` once more than `budget` fillings are visited.
pub fn frob_delta_with<C: Coeff>(inst: &DeltaInstance, budget: Budget) -> Result<SymmetricFunction<C>> {
    let meter = Meter::new(budget);
    let mus = partitions(inst.n());
    let coeffs: Vec<(Partition, Vec<u64>)> = mus
        .into_par_iter()
        .map(|mu| {
            let mut counts: Vec<u64> = Vec::new();
            try_for_each_prd(inst, mu.parts(), &mut |phi| {
                meter.tick()?;
                let d = dinv(phi);
                if counts.len() <= d {
                    counts.resize(d + 1, 0);
                }
                counts[d] += 1;
                Ok(())
            })?;
            Ok((mu, counts))
        })
        .collect::<Result<_>>()?;
    SymmetricFunction::from_terms(
        inst.n(),
        Basis::Monomial,
        coeffs.into_iter().map(|(mu, counts)| (mu, Poly::from_counts(&counts))),
    )
}

/// `Σ_{φ ∈ PRD^μ} q^{dinv(φ)}` for a single content vector.
pub fn dinv_generating<C: Coeff>(inst: &DeltaInstance, content: &[usize]) -> Poly<C> {
    let mut counts: Vec<u64> = Vec::new();
    for_each_prd(inst, content, &mut |phi| {
        let d = dinv(phi);
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    });
    Poly::from_counts(&counts)
}
