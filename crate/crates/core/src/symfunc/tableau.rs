use crate::error::{Error, Result};
use crate::qcore::Partition;

/// A semistandard Young tableau in English convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Validates row-weak and column-strict increase.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]) && r.iter().all(|&x| x > 0));
        let cols_ok = rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi));
        if !rows_ok || !cols_ok {
            return Err(Error::InvalidArguments(format!("not semistandard: {rows:?}")));
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Rows read left to right, bottom row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &x in self.rows.iter().flatten() {
            c[x - 1] += 1;
        }
        c
    }
}

/// Calls `f` on every SSYT of shape `shape` and content `content`.
///
/// Entries equal to `i` form a horizontal strip added on top of the entries `< i`.
pub fn for_each_ssyt(shape: &Partition, content: &[usize], f: &mut dyn FnMut(&Tableau)) {
    if shape.size() != content.iter().sum::<usize>() {
        return;
    }
    let target = shape.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); target.len()];
    fn go(
        letter: usize,
        content: &[usize],
        target: &[usize],
        rows: &mut Vec<Vec<usize>>,
        f: &mut dyn FnMut(&Tableau),
    ) {
        if letter > content.len() {
            let t = Tableau { shape: Partition::new(target.to_vec()).unwrap(), rows: rows.clone() };
            f(&t);
            return;
        }
        let current: Vec<usize> = rows.iter().map(Vec::len).collect();
        let mut added = vec![0; target.len()];
        strips(0, content[letter - 1], &current, target, &mut added, &mut |added| {
            for (r, &a) in added.iter().enumerate() {
                rows[r].extend(std::iter::repeat_n(letter, a));
            }
            go(letter + 1, content, target, rows, f);
            for (r, &a) in added.iter().enumerate() {
                let len = rows[r].len();
                rows[r].truncate(len - a);
            }
        });
    }
    go(1, content, &target, &mut rows, f);
}

/// Horizontal strips of size `left` extending `current` inside `target`, chosen row by row.
fn strips(
    row: usize,
    left: usize,
    current: &[usize],
    target: &[usize],
    added: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if row == current.len() {
        if left == 0 {
            f(added);
        }
        return;
    }
    // a cell in row r may only sit under an already-filled cell of row r-1
    let above = if row == 0 { usize::MAX } else { current[row - 1] };
    let cap = target[row].min(above) - current[row].min(target[row].min(above));
    for a in 0..=cap.min(left) {
        added[row] = a;
        strips(row + 1, left - a, current, target, added, f);
    }
    added[row] = 0;
}

/// Number of SSYT of the given shape and content.
pub fn count_ssyt(shape: &Partition, content: &[usize]) -> u64 {
    let mut n = 0;
    for_each_ssyt(shape, content, &mut |_| n += 1);
    n
}

/// Lascoux–Schützenberger charge of a word whose content is a partition.
///
/// The word is split into standard subwords by scanning right to left cyclically for
/// `1, 2, 3, ...`; within a subword the index rises by one each time the next letter
/// lies to the right of the previous one. The charge is the total of all indices.
pub fn charge(word: &[usize]) -> Result<usize> {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut content = vec![0usize; max];
    for &x in word {
        if x == 0 {
            return Err(Error::NonPartitionContent(content));
        }
        content[x - 1] += 1;
    }
    if content.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NonPartitionContent(content));
    }
    let mut used = vec![false; word.len()];
    let mut remaining = word.len();
    let mut total = 0;
    while remaining > 0 {
        // letters 1..=m present among unused positions, m = number of distinct letters left
        let mut pos = word.len();
        let mut index = 0;
        let mut letter = 1;
        loop {
            let found = (0..pos).rev().find(|&i| !used[i] && word[i] == letter);
            let p = match found {
                Some(p) => p,
                None => match (pos..word.len()).rev().find(|&i| !used[i] && word[i] == letter) {
                    Some(p) => {
                        if letter > 1 {
                            index += 1;
                        }
                        p
                    }
                    None => break,
                },
            };
            used[p] = true;
            remaining -= 1;
            total += index;
            pos = p;
            letter += 1;
        }
    }
    Ok(total)
}
