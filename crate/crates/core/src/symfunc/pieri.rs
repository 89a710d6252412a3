use super::{Basis, SymmetricFunction};
use crate::qcore::{Coeff, Partition, Poly};

/// `s_λ · h_r` in the Schur basis: the sum of `s_μ` over `μ ⊇ λ` with `μ/λ` a horizontal
/// strip of size `r`.
pub fn pieri_h<C: Coeff>(lambda: &Partition, r: usize) -> SymmetricFunction<C> {
    let mut out = SymmetricFunction::zero(lambda.size() + r, Basis::Schur);
    let old: Vec<usize> = lambda.parts().to_vec();
    let mut new = old.clone();
    new.push(0);
    fn go(row: usize, left: usize, old: &[usize], new: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == new.len() {
            if left == 0 {
                out.push(Partition::new(new.clone()).expect("strip keeps partition shape"));
            }
            return;
        }
        let base = old.get(row).copied().unwrap_or(0);
        // row `row` may grow up to the old length of the row above
        let cap = if row == 0 { left } else { (old[row - 1] - base).min(left) };
        for a in 0..=cap {
            new[row] = base + a;
            go(row + 1, left - a, old, new, out);
        }
        new[row] = base;
    }
    let mut shapes = Vec::new();
    go(0, r, &old, &mut new, &mut shapes);
    for mu in shapes {
        out.add_term(mu, &Poly::one()).expect("degree |λ| + r");
    }
    out
}
