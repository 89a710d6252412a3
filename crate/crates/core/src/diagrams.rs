//! The diagram `[Λ(n, λ, s)]`, its reading-order fillings, Schubert compatibility and the
//! flattening recursion.
//!
//! Cells are `(row, column)`, 1-indexed, English convention: row 1 is the top row and
//! column 1 the leftmost column.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qcore::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The triple `(n, λ, s)` with `Λ_i = λ_i + (n - k)` for `1 <= i <= s` and `K = |Λ|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaInstance {
    n: usize,
    lambda: Partition,
    s: usize,
    shape: Vec<usize>,
}

impl DeltaInstance {
    pub fn new(n: usize, lambda: Partition, s: usize) -> Result<Self> {
        let k = lambda.size();
        if k > n {
            return Err(Error::InvalidInstance(format!("|λ| = {k} exceeds n = {n}")));
        }
        if lambda.len() > s {
            return Err(Error::InvalidInstance(format!("ℓ(λ) = {} exceeds s = {s}", lambda.len())));
        }
        if s == 0 && n > 0 {
            return Err(Error::InvalidInstance("s = 0 requires n = 0".into()));
        }
        let shape = (1..=s).map(|i| lambda.part(i) + (n - k)).collect();
        Ok(DeltaInstance { n, lambda, s, shape })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// `k = |λ|`.
    pub fn k(&self) -> usize {
        self.lambda.size()
    }

    /// Row lengths `Λ_1, ..., Λ_s` (zeros kept when `n = k`).
    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    /// `Λ` as a partition.
    pub fn big_lambda(&self) -> Partition {
        Partition::new(self.shape.clone()).expect("Λ is weakly decreasing")
    }

    /// `K = k + (n - k) s`.
    pub fn big_k(&self) -> usize {
        self.shape.iter().sum()
    }

    /// `Λ_i` (1-indexed).
    pub fn row_len(&self, row: usize) -> usize {
        self.shape[row - 1]
    }

    /// `n(λ) + (s - 1)(n - k)`, the top `q`-degree of the Frobenius characteristic.
    pub fn top_degree(&self) -> usize {
        self.lambda.n_stat() + self.s.saturating_sub(1) * (self.n - self.k())
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.row <= self.s && c.col >= 1 && c.col <= self.shape[c.row - 1]
    }

    /// All cells, row by row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.shape.iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    /// `(i, j) ∈ [λ]^r`, the copy of `λ` right-justified in `[Λ]`.
    pub fn in_lambda_right(&self, c: Cell) -> bool {
        let lam = self.lambda.part(c.row);
        lam > 0 && self.contains_cell(c) && c.col + lam > self.shape[c.row - 1]
    }

    /// `(i, j) ∈ [λ]`, the copy of `λ` left-justified in `[Λ]`.
    pub fn in_lambda_left(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.lambda.part(c.row)
    }

    /// Number of cells in column `col`.
    pub fn column_height(&self, col: usize) -> usize {
        self.shape.iter().filter(|&&len| len >= col).count()
    }
}

impl fmt::Display for DeltaInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, λ={}, s={})", self.n, self.lambda, self.s)
    }
}

impl Serialize for DeltaInstance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            n: usize,
            lambda: &'a Partition,
            s: usize,
            #[serde(rename = "Lambda")]
            shape: &'a [usize],
            #[serde(rename = "K")]
            big_k: usize,
        }
        Raw { n: self.n, lambda: &self.lambda, s: self.s, shape: &self.shape, big_k: self.big_k() }.serialize(s)
    }
}

/// A bijection `T: [Λ] → [K]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    instance: DeltaInstance,
    rows: Vec<Vec<usize>>,
    cells: Vec<Cell>,
}

impl Filling {
    /// Builds from row-major labels; rows must match `Λ` and labels must be `1..=K` exactly once.
    pub fn from_rows(instance: DeltaInstance, rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        if shape != instance.shape() {
            return Err(Error::InvalidArguments(format!("row lengths {shape:?} differ from Λ = {:?}", instance.shape())));
        }
        let big_k = instance.big_k();
        let mut cells = vec![None; big_k];
        for (r, row) in rows.iter().enumerate() {
            for (c, &label) in row.iter().enumerate() {
                if label == 0 || label > big_k || cells[label - 1].is_some() {
                    return Err(Error::InvalidArguments(format!("labels are not a bijection onto 1..={big_k}")));
                }
                cells[label - 1] = Some(Cell::new(r + 1, c + 1));
            }
        }
        let cells = cells.into_iter().map(|c| c.expect("every label placed")).collect();
        Ok(Filling { instance, rows, cells })
    }

    pub fn instance(&self) -> &DeltaInstance {
        &self.instance
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `T(i, j)`.
    pub fn label(&self, c: Cell) -> usize {
        self.rows[c.row - 1][c.col - 1]
    }

    /// `T(i, j)` or `None` outside `[Λ]`.
    pub fn get(&self, c: Cell) -> Option<usize> {
        if c.row == 0 || c.col == 0 {
            return None;
        }
        self.rows.get(c.row - 1)?.get(c.col - 1).copied()
    }

    /// `T^{-1}(label)`.
    pub fn cell_of(&self, label: usize) -> Cell {
        self.cells[label - 1]
    }

    /// Label of the rightmost cell of a row, `T(i, Λ_i)`.
    pub fn rightmost(&self, row: usize) -> Option<usize> {
        self.rows[row - 1].last().copied()
    }

    /// Row-major matrix, ragged rows padded with `0`.
    pub fn to_matrix(&self) -> Vec<Vec<usize>> {
        let width = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        self.rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.resize(width, 0);
                r
            })
            .collect()
    }
}

impl Serialize for Filling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_matrix().serialize(s)
    }
}

fn filling_from_order(inst: &DeltaInstance, order: impl Iterator<Item = Cell>) -> Filling {
    let mut rows: Vec<Vec<usize>> = inst.shape().iter().map(|&len| vec![0; len]).collect();
    for (idx, c) in order.enumerate() {
        rows[c.row - 1][c.col - 1] = idx + 1;
    }
    Filling::from_rows(inst.clone(), rows).expect("reading orders visit every cell once")
}

/// Reads down each column, columns from right to left.
pub fn reading_filling(inst: &DeltaInstance) -> Filling {
    let width = inst.shape().first().copied().unwrap_or(0);
    let order = (1..=width)
        .rev()
        .flat_map(|col| (1..=inst.s()).filter(move |&r| inst.row_len(r) >= col).map(move |r| Cell::new(r, col)));
    filling_from_order(inst, order)
}

/// Reads down each column, columns from left to right.
pub fn reverse_filling(inst: &DeltaInstance) -> Filling {
    let width = inst.shape().first().copied().unwrap_or(0);
    let order = (1..=width)
        .flat_map(|col| (1..=inst.s()).filter(move |&r| inst.row_len(r) >= col).map(move |r| Cell::new(r, col)));
    filling_from_order(inst, order)
}

/// Outcome of [`check_schubert_compatible`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchubertCheck {
    Compatible,
    /// `clause` is 1..=5 in the order: `[λ]^r ↔ [k]`, rows decrease, `[λ]^r` beats the next
    /// column, rightmost labels increase downward, shifting left preserves comparisons.
    Violated { clause: u8, witnesses: Vec<Cell> },
}

impl SchubertCheck {
    pub fn is_compatible(&self) -> bool {
        matches!(self, SchubertCheck::Compatible)
    }
}

/// Checks the five Schubert-compatibility clauses, reporting the first violation.
pub fn check_schubert_compatible(t: &Filling) -> SchubertCheck {
    let inst = t.instance();
    let k = inst.k();
    let violated = |clause, witnesses| SchubertCheck::Violated { clause, witnesses };

    for c in inst.cells().filter(|&c| inst.in_lambda_right(c)) {
        if t.label(c) > k {
            return violated(1, vec![c]);
        }
    }
    for c in inst.cells() {
        let right = Cell::new(c.row, c.col + 1);
        if let Some(r) = t.get(right) {
            if t.label(c) <= r {
                return violated(2, vec![c, right]);
            }
        }
    }
    for c in inst.cells().filter(|&c| inst.in_lambda_right(c)) {
        for other in (1..=inst.s()).map(|r| Cell::new(r, c.col + 1)) {
            if t.get(other).is_some_and(|l| l >= t.label(c)) {
                return violated(3, vec![c, other]);
            }
        }
    }
    let ends: Vec<Cell> = (1..=inst.s()).filter(|&r| inst.row_len(r) > 0).map(|r| Cell::new(r, inst.row_len(r))).collect();
    for (a, b) in ends.iter().zip(ends.iter().skip(1)) {
        if t.label(*a) >= t.label(*b) {
            return violated(4, vec![*a, *b]);
        }
    }
    let inner: Vec<Cell> = inst.cells().filter(|c| c.col > 1).collect();
    for &a in &inner {
        for &b in &inner {
            if t.label(a) > t.label(b) {
                let (la, lb) = (Cell::new(a.row, a.col - 1), Cell::new(b.row, b.col - 1));
                if t.label(la) <= t.label(lb) {
                    return violated(5, vec![a, b]);
                }
            }
        }
    }
    SchubertCheck::Compatible
}

/// The order-preserving relabelling `fl_T^{(i)}` from surviving old labels onto `1..=K'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatMap {
    images: Vec<Option<usize>>,
}

impl FlatMap {
    /// Image of an old label, `None` for deleted labels.
    pub fn apply(&self, label: usize) -> Option<usize> {
        self.images.get(label.wrapping_sub(1)).copied().flatten()
    }

    pub fn deleted(&self) -> Vec<usize> {
        (1..=self.images.len()).filter(|&l| self.images[l - 1].is_none()).collect()
    }
}

/// Flattening at row `i`: returns `fl_T^{(i)}` and `T^{(i)}`.
///
/// For `i <= ℓ(λ)` the cell `(i, Λ_i)` is deleted and the result lives on `Λ(n-1, λ - e_i, s)`.
/// For `i > ℓ(λ)` the first cell of every other row is deleted as well (rows shifted left),
/// giving `Λ(n-1, λ, s)`. Rows are then sorted by their rightmost labels.
pub fn flatten_step(t: &Filling, i: usize) -> Result<(FlatMap, Filling)> {
    let inst = t.instance();
    if i == 0 || i > inst.s() || inst.row_len(i) == 0 {
        return Err(Error::InvalidRow { row: i, rows: inst.s() });
    }
    let lam = inst.lambda();
    let (new_lambda, mut rows): (Partition, Vec<Vec<usize>>) = if i <= lam.len() {
        let mut parts = lam.parts().to_vec();
        parts[i - 1] -= 1;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut rows = t.rows().to_vec();
        rows[i - 1].pop();
        (Partition::new(parts)?, rows)
    } else {
        let rows = t
            .rows()
            .iter()
            .enumerate()
            .map(|(r, row)| if r + 1 == i { row[..row.len() - 1].to_vec() } else { row[1..].to_vec() })
            .collect();
        (lam.clone(), rows)
    };
    let new_inst = DeltaInstance::new(inst.n() - 1, new_lambda, inst.s())?;

    let mut survivors: Vec<usize> = rows.iter().flatten().copied().collect();
    survivors.sort_unstable();
    let mut images = vec![None; inst.big_k()];
    for (idx, &old) in survivors.iter().enumerate() {
        images[old - 1] = Some(idx + 1);
    }
    for row in rows.iter_mut() {
        for l in row.iter_mut() {
            *l = images[*l - 1].expect("survivor");
        }
    }
    rows.sort_by_key(|row| row.last().copied().unwrap_or(usize::MAX));
    let filling = Filling::from_rows(new_inst, rows)
        .map_err(|e| Error::NotSchubertCompatible(format!("flattened filling does not fit Λ: {e}")))?;
    Ok((FlatMap { images }, filling))
}
