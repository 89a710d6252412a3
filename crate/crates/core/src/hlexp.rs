//! Expansion of the Frobenius characteristic into modified Hall–Littlewood functions with
//! q-binomial weights, its q-reversed form, the underlying coinversion identity and free pairs.

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::diagrams::{reverse_filling, Cell, DeltaInstance};
use crate::error::{Error, Result};
use crate::qcore::{coinv, partitions, partitions_bounded, q_binom, rearrangements, Coeff, Composition, Partition, Poly};
use crate::symfunc::hall_littlewood::{hl_h, hl_modified};
use crate::symfunc::{Basis, SymmetricFunction};

/// `λ'_i` with `λ'_0 = s` and zeros past the first row.
fn conj_at(conj: &[usize], i: usize, s: usize) -> usize {
    if i == 0 {
        s
    } else {
        conj.get(i - 1).copied().unwrap_or(0)
    }
}

/// One summand `q^{exponent} · product · H̃_ν`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionTerm<C: Coeff> {
    pub nu: Partition,
    pub exponent: usize,
    #[serde(rename = "qbinom_product")]
    pub product: Poly<C>,
}

/// `Σ_{i≥0} (s - ν'_i)(ν'_{i+1} - λ'_{i+1})`, the `i = 0` summand being zero.
pub fn term_exponent(nu: &Partition, lambda: &Partition, s: usize) -> usize {
    let (nc, lc) = (nu.conjugate(), lambda.conjugate());
    (1..=nu.part(1))
        .map(|i| (s - conj_at(nc.parts(), i, s)) * (conj_at(nc.parts(), i + 1, s) - conj_at(lc.parts(), i + 1, s)))
        .sum()
}

/// `Π_{i≥0} [ν'_i - λ'_{i+1} choose ν'_i - ν'_{i+1}]_q` with `ν'_0 = s`.
pub fn term_product<C: Coeff>(nu: &Partition, lambda: &Partition, s: usize) -> Poly<C> {
    let (nc, lc) = (nu.conjugate(), lambda.conjugate());
    let mut out = Poly::one();
    for i in 0..=nu.part(1) {
        let a = conj_at(nc.parts(), i, s) as i64 - conj_at(lc.parts(), i + 1, s) as i64;
        let b = conj_at(nc.parts(), i, s) as i64 - conj_at(nc.parts(), i + 1, s) as i64;
        out = &out * &q_binom(a, b);
    }
    out
}

/// `Σ_{i≥0} (ν'_i - ν'_{i+1})(ν'_{i+1} - λ'_{i+1})`, the degree of [`term_product`].
fn product_degree(nu: &Partition, lambda: &Partition, s: usize) -> i64 {
    let (nc, lc) = (nu.conjugate(), lambda.conjugate());
    (0..=nu.part(1))
        .map(|i| {
            let a = conj_at(nc.parts(), i, s) as i64 - conj_at(nc.parts(), i + 1, s) as i64;
            a * (conj_at(nc.parts(), i + 1, s) as i64 - conj_at(lc.parts(), i + 1, s) as i64)
        })
        .sum()
}

fn check_pair(nu: &Partition, lambda: &Partition, s: usize) -> Result<()> {
    if !nu.contains(lambda) {
        return Err(Error::NotContained { inner: lambda.parts().to_vec(), outer: nu.parts().to_vec() });
    }
    if nu.len() > s {
        return Err(Error::InvalidArguments(format!("ℓ({nu}) exceeds s = {s}")));
    }
    Ok(())
}

/// `n(ν/λ)`, defined so that the reversed expansion matches term by term:
/// `n(λ) + (s-1)(n-k) - exponent(ν) - deg(product(ν)) - n(ν)`.
pub fn n_skew(nu: &Partition, lambda: &Partition, inst: &DeltaInstance) -> Result<i64> {
    let s = inst.s();
    check_pair(nu, lambda, s)?;
    if nu.size() != inst.n() {
        return Err(Error::SizeMismatch { left: nu.size(), right: inst.n() });
    }
    Ok(inst.top_degree() as i64
        - term_exponent(nu, lambda, s) as i64
        - product_degree(nu, lambda, s)
        - nu.n_stat() as i64)
}

/// `Σ_j C(ν'_j - λ'_j, 2)`, which [`n_skew`] reduces to.
pub fn n_skew_closed_form(nu: &Partition, lambda: &Partition) -> usize {
    let (nc, lc) = (nu.conjugate(), lambda.conjugate());
    (1..=nu.part(1))
        .map(|j| {
            let d = nc.part(j) - lc.part(j);
            d * d.saturating_sub(1) / 2
        })
        .sum()
}

/// Both sides of the coinversion identity: `Σ q^{coinv(α)}` over rearrangements `α ⊇ λ` of `ν`
/// of length `s`, and the q-binomial product.
pub fn coinv_identity_sides<C: Coeff>(nu: &Partition, lambda: &Partition, s: usize) -> Result<(Poly<C>, Poly<C>)> {
    check_pair(nu, lambda, s).map_err(|e| Error::InvalidArguments(e.to_string()))?;
    let mut counts: Vec<u64> = Vec::new();
    for alpha in rearrangements(nu, s).into_iter().filter(|a| a.contains(lambda)) {
        let c = coinv(alpha.parts());
        if counts.len() <= c {
            counts.resize(c + 1, 0);
        }
        counts[c] += 1;
    }
    Ok((Poly::from_counts(&counts), term_product(nu, lambda, s)))
}

/// Partitions `ν ⊢ n` with `ℓ(ν) <= s` and `ν ⊇ λ`, in descending lexicographic order.
pub fn containing_partitions(inst: &DeltaInstance) -> Vec<Partition> {
    partitions_bounded(inst.n(), inst.n(), inst.s()).into_iter().filter(|nu| nu.contains(inst.lambda())).collect()
}

/// The nonzero summands of the expansion.
pub fn hl_terms<C: Coeff>(inst: &DeltaInstance) -> Vec<ExpansionTerm<C>> {
    let (lambda, s) = (inst.lambda(), inst.s());
    containing_partitions(inst)
        .into_iter()
        .map(|nu| ExpansionTerm {
            exponent: term_exponent(&nu, lambda, s),
            product: term_product(&nu, lambda, s),
            nu,
        })
        .filter(|t| {
            debug_assert!(!t.product.is_zero(), "ν ⊇ λ gives a nonzero product");
            !t.product.is_zero()
        })
        .collect()
}

fn check_budget(inst: &DeltaInstance, budget: Budget) -> Result<()> {
    // the expansion costs about one Kostka–Foulkes table of size p(n)²
    let p = partitions(inst.n()).len() as u128;
    budget.check(p * p)
}

/// `Σ_ν q^{exponent(ν)} · product(ν) · H̃_ν` in the monomial basis.
pub fn hl_rhs<C: Coeff>(inst: &DeltaInstance) -> Result<SymmetricFunction<C>> {
    hl_rhs_with(inst, Budget::default())
}

pub fn hl_rhs_with<C: Coeff>(inst: &DeltaInstance, budget: Budget) -> Result<SymmetricFunction<C>> {
    check_budget(inst, budget)?;
    let parts: Vec<SymmetricFunction<C>> = hl_terms::<C>(inst)
        .into_par_iter()
        .map(|t| hl_modified::<C>(&t.nu).scale(&t.product.shift(t.exponent)))
        .collect();
    sum(inst.n(), Basis::Schur, parts)?.to_basis(Basis::Monomial)
}

/// The reversal at degree `n(λ) + (s-1)(n-k)` of `Σ_ν q^{n(ν/λ)} · product(ν) · H_ν`.
pub fn hl_rev_rhs<C: Coeff>(inst: &DeltaInstance) -> Result<SymmetricFunction<C>> {
    hl_rev_rhs_with(inst, Budget::default())
}

pub fn hl_rev_rhs_with<C: Coeff>(inst: &DeltaInstance, budget: Budget) -> Result<SymmetricFunction<C>> {
    check_budget(inst, budget)?;
    let lambda = inst.lambda();
    let parts: Vec<SymmetricFunction<C>> = containing_partitions(inst)
        .into_par_iter()
        .map(|nu| {
            let skew = n_skew(&nu, lambda, inst)?;
            let skew = usize::try_from(skew).map_err(|_| Error::InvalidArguments(format!("n({nu}/{lambda}) < 0")))?;
            Ok(hl_h::<C>(&nu).scale(&term_product::<C>(&nu, lambda, inst.s()).shift(skew)))
        })
        .collect::<Result<_>>()?;
    sum(inst.n(), Basis::Schur, parts)?.q_reverse(inst.top_degree())?.to_basis(Basis::Monomial)
}

fn sum<C: Coeff>(n: usize, basis: Basis, parts: Vec<SymmetricFunction<C>>) -> Result<SymmetricFunction<C>> {
    parts.iter().try_fold(SymmetricFunction::zero(n, basis), |acc, f| acc.add(f))
}

/// Free pairs `(i, j)`, `i > j`, of the reverse filling: `i` labels a cell of `[α] ∖ [λ]` and `j`
/// the leftmost cell outside `[α]` in its row. Sorted by `i` then `j`, both descending.
pub fn free_pairs(alpha: &Composition, inst: &DeltaInstance) -> Result<Vec<(usize, usize)>> {
    check_alpha(alpha, inst)?;
    let t = reverse_filling(inst);
    let lambda = inst.lambda();
    let big: Vec<usize> = (1..=inst.s())
        .flat_map(|r| (lambda.part(r) + 1..=alpha.part(r)).map(move |c| Cell::new(r, c)))
        .map(|c| t.label(c))
        .collect();
    let small: Vec<usize> =
        (1..=inst.s()).filter(|&r| alpha.part(r) < inst.row_len(r)).map(|r| t.label(Cell::new(r, alpha.part(r) + 1))).collect();
    let mut out: Vec<(usize, usize)> =
        big.iter().flat_map(|&i| small.iter().filter(move |&&j| j < i).map(move |&j| (i, j))).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `Σ_{i≥1} (s - α'_i)(α'_{i+1} - λ'_{i+1}) + coinv(α)`.
pub fn free_pair_count(alpha: &Composition, inst: &DeltaInstance) -> Result<usize> {
    check_alpha(alpha, inst)?;
    let s = inst.s();
    let ac = alpha.column_lengths();
    let lc = inst.lambda().conjugate();
    let at = |i: usize| ac.get(i.wrapping_sub(1)).copied().unwrap_or(0);
    let sum: usize = (1..=ac.len()).map(|i| (s - at(i)) * (at(i + 1) - lc.part(i + 1))).sum();
    Ok(sum + coinv(alpha.parts()))
}

pub(crate) fn check_alpha(alpha: &Composition, inst: &DeltaInstance) -> Result<()> {
    if alpha.len() != inst.s() || alpha.size() != inst.n() {
        return Err(Error::InvalidArguments(format!(
            "α = {:?} must have {} parts summing to {}",
            alpha.parts(),
            inst.s(),
            inst.n()
        )));
    }
    if !alpha.contains(inst.lambda()) {
        return Err(Error::NotContained { inner: inst.lambda().parts().to_vec(), outer: alpha.parts().to_vec() });
    }
    Ok(())
}
