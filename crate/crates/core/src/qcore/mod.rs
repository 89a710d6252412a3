//! Partitions, compositions, q-analogues and exact polynomial arithmetic in `q`.

pub mod composition;
pub mod partition;
pub mod poly;
pub mod qanalog;

pub use composition::{coinv, compositions, rearrangements, sort_desc, strong_compositions, Composition};
pub use partition::{partitions, partitions_bounded, partitions_with_length, Partition};
pub use poly::{from_count, Coeff, Poly};
pub use qanalog::{q_binom, q_factorial, q_int};

/// `conjugate(λ)`.
pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// `n(λ) = Σ_i C(λ'_i, 2)`.
pub fn n_stat(lambda: &Partition) -> usize {
    lambda.n_stat()
}

/// `q_reverse(f, d)`.
pub fn q_reverse<C: Coeff>(f: &Poly<C>, d: usize) -> crate::Result<Poly<C>> {
    f.reverse(d)
}
