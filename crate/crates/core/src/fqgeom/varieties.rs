use std::collections::HashSet;

use serde::Serialize;

use super::field::FpMatrix;
use super::flags::{FlagProblem, LastPart, Mode};
use super::subspace::Subspace;
use crate::budget::Budget;
use crate::diagrams::{reading_filling, reverse_filling, Cell, DeltaInstance, Filling};
use crate::error::{Error, Result};
use crate::hlexp::check_alpha;
use crate::qcore::{Composition, Partition};

/// `N_T f_{T(i,j)} = f_{T(i,j+1)}` (zero at the end of a row); `transpose` gives `N_T^t`.
pub fn nilpotent_from_filling(t: &Filling, transpose: bool, p: u32) -> Result<FpMatrix> {
    let inst = t.instance();
    let mut m = FpMatrix::zero(p, inst.big_k())?;
    for c in inst.cells() {
        if let Some(right) = t.get(Cell::new(c.row, c.col + 1)) {
            m.set(right - 1, t.label(c) - 1, 1);
        }
    }
    Ok(if transpose { m.transpose() } else { m })
}

/// Which canonical filling supplies the nilpotent matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FillingKind {
    #[default]
    Reading,
    Reverse,
}

impl FillingKind {
    pub fn build(self, inst: &DeltaInstance) -> Filling {
        match self {
            FillingKind::Reading => reading_filling(inst),
            FillingKind::Reverse => reverse_filling(inst),
        }
    }
}

/// The projected variety `{V_• of type μ : N V_i ⊆ V_i, N^{n-k} F^K ⊆ V_m}` as a flag problem.
pub fn y_mu_problem(inst: &DeltaInstance, mu: &Composition, p: u32, kind: FillingKind, transpose: bool) -> Result<FlagProblem> {
    if mu.size() != inst.n() || !mu.is_strong() {
        return Err(Error::InvalidArguments(format!("μ must be a strong composition of {}", inst.n())));
    }
    let n = nilpotent_from_filling(&kind.build(inst), transpose, p)?;
    let contain = Subspace::full(p, inst.big_k())?.image(&n.pow(inst.n() - inst.k()));
    Ok(FlagProblem::new(n, mu.clone(), Mode::Stable)?.containing(contain))
}

/// `|Y^μ_{n,λ,s}(F_p)|`.
pub fn count_y_mu(
    inst: &DeltaInstance,
    mu: &Composition,
    p: u32,
    kind: FillingKind,
    transpose: bool,
    budget: Budget,
) -> Result<u128> {
    y_mu_problem(inst, mu, p, kind, transpose)?.count(budget)
}

/// `|Stein^μ_λ(F_p)|`: `N`-stable flags of type `μ` in `F_p^{|λ|}`, `N` of Jordan type `λ`.
pub fn count_steinberg(lambda: &Partition, mu: &Composition, p: u32, budget: Budget) -> Result<u128> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch { left: mu.size(), right: lambda.size() });
    }
    let inst = DeltaInstance::new(lambda.size(), lambda.clone(), lambda.len())?;
    let n = nilpotent_from_filling(&reading_filling(&inst), false, p)?;
    FlagProblem::new(n, mu.clone(), Mode::Stable)?.count(budget)
}

/// Labels of the reverse filling inside the left-justified `[α]`, ascending.
pub fn alpha_labels(inst: &DeltaInstance, alpha: &Composition) -> Vec<usize> {
    let t = reverse_filling(inst);
    let mut out: Vec<usize> =
        (1..=inst.s()).flat_map(|r| (1..=alpha.part(r)).map(move |c| Cell::new(r, c))).map(|c| t.label(c)).collect();
    out.sort_unstable();
    out
}

/// `Z^μ_α` (`hat = false`, last part equal to `F^α`) or `Ẑ^μ_α` (`hat = true`, last part in the
/// Schubert cell of `F^α`), inside `Y^μ` for `N^t` of the reverse filling.
pub fn z_problem(inst: &DeltaInstance, alpha: &Composition, mu: &Composition, p: u32, hat: bool) -> Result<FlagProblem> {
    check_alpha(alpha, inst)?;
    let base = y_mu_problem(inst, mu, p, FillingKind::Reverse, true)?;
    let labels = alpha_labels(inst, alpha);
    let last = if hat {
        LastPart::Cell(labels)
    } else {
        LastPart::Fixed(Subspace::coordinate(p, inst.big_k(), labels)?)
    };
    Ok(base.with_last(last))
}

pub fn count_z(inst: &DeltaInstance, alpha: &Composition, mu: &Composition, p: u32, hat: bool, budget: Budget) -> Result<u128> {
    z_problem(inst, alpha, mu, p, hat)?.count(budget)
}

/// Distinct first-`n` truncations of strict flags of type `(1^n, (s-1)^{n-k})` for `N_Λ`.
pub fn spaltenstein_projection(inst: &DeltaInstance, p: u32, budget: Budget) -> Result<usize> {
    let (n, k, s) = (inst.n(), inst.k(), inst.s());
    let mut parts = vec![1; n];
    if s > 1 {
        parts.extend(std::iter::repeat_n(s - 1, n - k));
    }
    let nil = nilpotent_from_filling(&reading_filling(inst), false, p)?;
    let problem = FlagProblem::new(nil, Composition::new(parts), Mode::Strict)?;
    let mut seen = HashSet::new();
    problem.for_each(budget, &mut |f| {
        seen.insert(f.truncate(n));
    })?;
    Ok(seen.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: usize, lam: &[usize], s: usize) -> DeltaInstance {
        DeltaInstance::new(n, Partition::new(lam.to_vec()).unwrap(), s).unwrap()
    }

    fn e(k: usize, i: usize) -> Vec<u8> {
        let mut v = vec![0; k];
        v[i - 1] = 1;
        v
    }

    #[test]
    fn nilpotent_examples() {
        let t = reading_filling(&inst(3, &[2, 1], 2));
        let n = nilpotent_from_filling(&t, false, 2).unwrap();
        assert_eq!(n.apply(&e(3, 2)), e(3, 1));
        assert_eq!(n.apply(&e(3, 1)), vec![0; 3]);
        assert_eq!(n.apply(&e(3, 3)), vec![0; 3]);
        let nt = nilpotent_from_filling(&t, true, 2).unwrap();
        assert_eq!(nt.apply(&e(3, 1)), e(3, 2));
        assert_eq!(nt.apply(&e(3, 2)), vec![0; 3]);
        assert_eq!(nt.apply(&e(3, 3)), vec![0; 3]);

        let t = reading_filling(&inst(7, &[2, 2], 4));
        let n = nilpotent_from_filling(&t, false, 3).unwrap();
        assert_eq!(n.apply(&e(16, 5)), e(16, 3));
        assert_eq!(n.apply(&e(16, 1)), vec![0; 16]);
        assert!(n.is_nilpotent());
        assert!(matches!(nilpotent_from_filling(&t, false, 4), Err(Error::UnsupportedPrime(4))));
    }

    #[test]
    fn y_mu_examples() {
        let b = Budget::default();
        let i = inst(2, &[1], 2);
        let k = FillingKind::Reading;
        assert_eq!(count_y_mu(&i, &Composition::new(vec![1, 1]), 2, k, false, b).unwrap(), 5);
        assert_eq!(count_y_mu(&i, &Composition::new(vec![2]), 2, k, false, b).unwrap(), 3);
        assert_eq!(count_y_mu(&inst(2, &[1, 1], 2), &Composition::new(vec![1, 1]), 3, k, false, b).unwrap(), 4);
        assert_eq!(count_y_mu(&i, &Composition::new(vec![1, 1]), 2, k, true, b).unwrap(), 5);
        assert_eq!(count_y_mu(&i, &Composition::new(vec![1, 1]), 2, FillingKind::Reverse, true, b).unwrap(), 5);
    }

    #[test]
    fn steinberg_examples() {
        let b = Budget::default();
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        for q in [2, 3, 5] {
            assert_eq!(count_steinberg(&p(&[2]), &Composition::new(vec![1, 1]), q, b).unwrap(), 1);
        }
        assert_eq!(count_steinberg(&p(&[1, 1]), &Composition::new(vec![1, 1]), 2, b).unwrap(), 3);
        assert_eq!(count_steinberg(&p(&[1, 1, 1]), &Composition::new(vec![1, 1, 1]), 2, b).unwrap(), 21);
    }

    #[test]
    fn z_examples() {
        let b = Budget::default();
        let i = inst(2, &[1], 2);
        let mu = Composition::new(vec![1, 1]);
        assert_eq!(count_z(&i, &Composition::new(vec![1, 1]), &mu, 2, false, b).unwrap(), 3);
        assert_eq!(count_z(&i, &Composition::new(vec![2, 0]), &mu, 2, true, b).unwrap(), 2);
        assert_eq!(count_z(&i, &Composition::new(vec![2, 0]), &mu, 2, false, b).unwrap(), 1);
        let total: u128 = [vec![2, 0], vec![1, 1]]
            .into_iter()
            .map(|a| count_z(&i, &Composition::new(a), &mu, 2, true, b).unwrap())
            .sum();
        assert_eq!(total, 5);
    }

    #[test]
    fn projection_example() {
        assert_eq!(spaltenstein_projection(&inst(2, &[1], 2), 2, Budget::default()).unwrap(), 5);
    }
}
