use std::collections::HashSet;

use serde::Serialize;

use super::field::FpMatrix;
use super::flags::{Flag, LastPart};
use super::varieties::{alpha_labels, nilpotent_from_filling, z_problem};
use crate::budget::Budget;
use crate::diagrams::{reverse_filling, Cell, DeltaInstance};
use crate::error::{Error, Result};
use crate::hlexp::free_pairs;
use crate::qcore::Composition;

/// `U_{i,j}(t)` for the reverse filling: shifts the row of `i` onto the row of `j`, so that
/// `N^m f_i ↦ N^m (f_i + t f_j)` and `(N^t)^m f_i ↦ (N^t)^m (f_i + t f_j)`, fixing other rows.
pub fn u_matrix(inst: &DeltaInstance, pair: (usize, usize), t: u8, p: u32) -> Result<FpMatrix> {
    let filling = reverse_filling(inst);
    let (ci, cj) = (filling.cell_of(pair.0), filling.cell_of(pair.1));
    let mut u = FpMatrix::identity(p, inst.big_k())?;
    for c in 1..=inst.row_len(ci.row) {
        let target = (c + cj.col).checked_sub(ci.col).filter(|&x| x >= 1);
        if let Some(dst) = target.and_then(|col| filling.get(Cell::new(cj.row, col))) {
            let src = filling.label(Cell::new(ci.row, c));
            u.set(dst - 1, src - 1, t);
        }
    }
    Ok(u)
}

/// Applies `U_{i,j}(t)` to a flag, after checking that `(i, j)` is a free pair of `α`.
pub fn apply_u(inst: &DeltaInstance, alpha: &Composition, pair: (usize, usize), t: u8, flag: &Flag, p: u32) -> Result<Flag> {
    if !free_pairs(alpha, inst)?.contains(&pair) {
        return Err(Error::NotFreePair(pair.0, pair.1));
    }
    Ok(flag.image(&u_matrix(inst, pair, t, p)?))
}

/// `U_{i_ℓ,j_ℓ}(t_ℓ) ··· U_{i_1,j_1}(t_1)` with the free pairs listed by decreasing `i`.
pub fn composed_u(inst: &DeltaInstance, alpha: &Composition, ts: &[u8], p: u32) -> Result<FpMatrix> {
    let pairs = free_pairs(alpha, inst)?;
    if pairs.len() != ts.len() {
        return Err(Error::InvalidArguments(format!("expected {} parameters, got {}", pairs.len(), ts.len())));
    }
    let mut m = FpMatrix::identity(p, inst.big_k())?;
    for (&pair, &t) in pairs.iter().zip(ts) {
        m = u_matrix(inst, pair, t, p)?.mul(&m);
    }
    Ok(m)
}

/// Outcome of pushing `F_p^ℓ × Z^μ_α` through the composed operators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UMapReport {
    pub free_pairs: usize,
    pub domain: u128,
    pub distinct_images: u128,
    pub images_in_zhat: bool,
    pub zhat: u128,
}

impl UMapReport {
    /// Injective, lands in `Ẑ`, and hits all of it.
    pub fn is_bijection(&self) -> bool {
        self.images_in_zhat && self.distinct_images == self.domain && self.domain == self.zhat
    }
}

/// Enumerates the map `(t, V_•) ↦ U(t) V_•` exhaustively.
pub fn u_map_report(inst: &DeltaInstance, alpha: &Composition, mu: &Composition, p: u32, budget: Budget) -> Result<UMapReport> {
    let ell = free_pairs(alpha, inst)?.len();
    let zhat_problem = z_problem(inst, alpha, mu, p, true)?;
    let zhat = zhat_problem.count(budget)?;
    let mut z = Vec::new();
    z_problem(inst, alpha, mu, p, false)?.for_each(budget, &mut |f| z.push(f.clone()))?;

    let nt = nilpotent_from_filling(&reverse_filling(inst), true, p)?;
    let labels = alpha_labels(inst, alpha);
    let contain = &zhat_problem.contain;
    let in_zhat = |f: &Flag| {
        f.spaces.iter().all(|v| v.maps_into(&nt, v))
            && match f.last() {
                Some(v) => v.contains(contain) && v.pivots() == labels,
                None => contain.dim() == 0 && labels.is_empty(),
            }
    };
    debug_assert!(matches!(zhat_problem.last, LastPart::Cell(_)));

    let mut seen = HashSet::new();
    let mut all_in = true;
    let mut ts = vec![0u8; ell];
    let mut domain = 0u128;
    loop {
        let u = composed_u(inst, alpha, &ts, p)?;
        for f in &z {
            let g = f.image(&u);
            all_in &= in_zhat(&g);
            seen.insert(g);
            domain += 1;
        }
        let mut carry = true;
        for d in ts.iter_mut() {
            if (*d as u32) + 1 < p {
                *d += 1;
                carry = false;
                break;
            }
            *d = 0;
        }
        if carry {
            break;
        }
    }
    Ok(UMapReport { free_pairs: ell, domain, distinct_images: seen.len() as u128, images_in_zhat: all_in, zhat })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fqgeom::subspace::Subspace;
    use crate::qcore::Partition;

    fn inst(n: usize, lam: &[usize], s: usize) -> DeltaInstance {
        DeltaInstance::new(n, Partition::new(lam.to_vec()).unwrap(), s).unwrap()
    }

    #[test]
    fn u_identity_at_zero() {
        let i = inst(2, &[1], 2);
        let a = Composition::new(vec![2, 0]);
        let flag = Flag { spaces: vec![Subspace::coordinate(2, 3, [1]).unwrap(), Subspace::coordinate(2, 3, [1, 3]).unwrap()] };
        assert_eq!(apply_u(&i, &a, (3, 2), 0, &flag, 2).unwrap(), flag);
    }

    #[test]
    fn u_example() {
        let i = inst(2, &[1], 2);
        let a = Composition::new(vec![2, 0]);
        let flag = Flag { spaces: vec![Subspace::coordinate(2, 3, [1]).unwrap(), Subspace::coordinate(2, 3, [1, 3]).unwrap()] };
        let g = apply_u(&i, &a, (3, 2), 1, &flag, 2).unwrap();
        let expect = Subspace::span(2, 3, [vec![1, 0, 0], vec![0, 1, 1]]).unwrap();
        assert_eq!(g.spaces[1], expect);
        assert_eq!(g.spaces[1].pivots(), vec![1, 3]);
        assert!(matches!(apply_u(&i, &a, (2, 1), 1, &flag, 2), Err(Error::NotFreePair(2, 1))));
    }

    #[test]
    fn u_is_unipotent_upper_triangular() {
        let i = inst(4, &[1], 3);
        for alpha in crate::qcore::compositions(4, 3).into_iter().filter(|a| a.contains(i.lambda())) {
            for pair in free_pairs(&alpha, &i).unwrap() {
                let u = u_matrix(&i, pair, 1, 3).unwrap();
                for r in 0..u.size() {
                    assert_eq!(u.get(r, r), 1);
                    for c in 0..r {
                        assert_eq!(u.get(r, c), 0, "{alpha:?} {pair:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn u_map_small() {
        let i = inst(2, &[1], 2);
        let r = u_map_report(&i, &Composition::new(vec![2, 0]), &Composition::new(vec![1, 1]), 2, Budget::default()).unwrap();
        assert_eq!((r.free_pairs, r.domain, r.distinct_images, r.zhat), (1, 2, 2, 2));
        assert!(r.is_bijection());
    }
}
