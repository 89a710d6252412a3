use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::tableau::{charge, for_each_ssyt};
use crate::error::{Error, Result};
use crate::qcore::{Coeff, Partition, Poly};

type ChargeCounts = Arc<Vec<u64>>;

fn memo() -> &'static RwLock<HashMap<(Partition, Partition), ChargeCounts>> {
    static MEMO: OnceLock<RwLock<HashMap<(Partition, Partition), ChargeCounts>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Number of SSYT of shape `λ` and content `μ` with each charge value, cached per process.
fn charge_counts(lambda: &Partition, mu: &Partition) -> ChargeCounts {
    let key = (lambda.clone(), mu.clone());
    if let Some(hit) = memo().read().expect("kostka memo poisoned").get(&key) {
        return hit.clone();
    }
    let mut counts: Vec<u64> = Vec::new();
    if lambda.dominates(mu) {
        for_each_ssyt(lambda, mu.parts(), &mut |t| {
            let c = charge(&t.reading_word()).expect("tableau content is a partition");
            if counts.len() <= c {
                counts.resize(c + 1, 0);
            }
            counts[c] += 1;
        });
    }
    let counts = Arc::new(counts);
    memo().write().expect("kostka memo poisoned").insert(key, counts.clone());
    counts
}

/// Kostka–Foulkes polynomial `K_{λμ}(q) = Σ_{T ∈ SSYT(λ, μ)} q^{charge(T)}`.
pub fn kostka_foulkes<C: Coeff>(lambda: &Partition, mu: &Partition) -> Result<Poly<C>> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    Ok(Poly::from_counts(&charge_counts(lambda, mu)))
}

/// Kostka number `K_{λμ} = K_{λμ}(1)`; zero when the sizes differ.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> u64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    charge_counts(lambda, mu).iter().sum()
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::qcore::partitions;
    use crate::symfunc::tableau::count_ssyt;

    type P = Poly<BigInt>;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn kostka_foulkes_examples() {
        for lam in partitions(4) {
            assert_eq!(kostka_foulkes::<BigInt>(&lam, &lam).unwrap(), P::one());
        }
        assert_eq!(kostka_foulkes::<BigInt>(&p(&[2]), &p(&[1, 1])).unwrap(), P::from_ints(&[0, 1]));
        assert_eq!(kostka_foulkes::<BigInt>(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), P::from_ints(&[0, 1, 1]));
        assert_eq!(kostka_foulkes::<BigInt>(&p(&[1, 1]), &p(&[2])).unwrap(), P::zero());
    }

    #[test]
    fn size_mismatch() {
        assert!(matches!(kostka_foulkes::<BigInt>(&p(&[2]), &p(&[1])), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn value_at_one_is_kostka_number() {
        for n in 0..=6 {
            for lam in partitions(n) {
                for mu in partitions(n) {
                    let k = kostka_foulkes::<BigInt>(&lam, &mu).unwrap();
                    assert_eq!(k.eval(&BigInt::from(1)), BigInt::from(count_ssyt(&lam, mu.parts())), "{lam} {mu}");
                }
            }
        }
    }

    #[test]
    fn row_shape_gives_q_to_n_mu() {
        // K_{(n),μ}(q) = q^{n(μ)}
        for n in 1..=6 {
            for mu in partitions(n) {
                let k = kostka_foulkes::<BigInt>(&Partition::row(n), &mu).unwrap();
                assert_eq!(k, P::q_pow(mu.n_stat()), "{mu}");
            }
        }
    }
}
