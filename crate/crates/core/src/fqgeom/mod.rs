//! Brute-force `F_p` point counts of flag varieties cut out by nilpotent matrices.
//!
//! Subspaces are kept in a canonical echelon form whose leading term is the largest nonzero
//! index, so a subspace's leading-index set names its Schubert cell.

pub mod field;
pub mod flags;
pub mod subspace;
pub mod unipotent;
pub mod varieties;

pub use field::{check_prime, FpMatrix, ALLOWED_PRIMES};
pub use flags::{count_flags, Flag, FlagProblem, LastPart, Mode};
pub use subspace::{cell_of_subspace, Subspace};
pub use unipotent::{apply_u, composed_u, u_map_report, u_matrix, UMapReport};
pub use varieties::{
    alpha_labels, count_steinberg, count_y_mu, count_z, nilpotent_from_filling, spaltenstein_projection, y_mu_problem,
    z_problem, FillingKind,
};
