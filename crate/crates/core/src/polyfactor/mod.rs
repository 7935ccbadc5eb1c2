//! Polynomials over `Z` and `F_p`: root counts, factorization cycle types,
//! discriminants and real-root counts.

mod cycle;
mod disc;
mod polyfp;
mod polyz;

pub use cycle::CycleType;
pub use disc::{verify_discriminants, DISC_NMAX, SQUAREFREE_BOUND, SQUAREFREE_NMAX};
pub use polyfp::{count_roots_mod_p, factorization_cycle_type, PolyFp};
pub use polyz::{
    disc_formula, discriminant_z, real_root_count, reduce_mod_p, resultant, squarefree_witness, PolyZ,
    SquarefreeVerdict,
};
