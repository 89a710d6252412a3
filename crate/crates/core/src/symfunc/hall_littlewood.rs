use super::{kostka_foulkes, Basis, SymmetricFunction};
use crate::qcore::{partitions, Coeff, Partition};

/// Dual Hall–Littlewood function `H_ν = Σ_λ K_{λν}(q) s_λ`, in the Schur basis.
pub fn hl_h<C: Coeff>(nu: &Partition) -> SymmetricFunction<C> {
    let n = nu.size();
    let mut out = SymmetricFunction::zero(n, Basis::Schur);
    for lambda in partitions(n) {
        let k = kostka_foulkes(&lambda, nu).expect("sizes agree");
        out.add_term(lambda, &k).expect("sizes agree");
    }
    out
}

/// Modified Hall–Littlewood function `H̃_ν = q^{n(ν)} H_ν(x; 1/q)`, in the Schur basis.
pub fn hl_modified<C: Coeff>(nu: &Partition) -> SymmetricFunction<C> {
    hl_h::<C>(nu).q_reverse(nu.n_stat()).expect("deg_q H_ν = n(ν)")
}
