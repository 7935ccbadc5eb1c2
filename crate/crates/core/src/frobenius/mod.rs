//! The per-prime pipeline: factorization patterns of `f5`, `g` and `h` mod
//! `p` give an `S5` class and candidate classes of the lifted group, from
//! which `a_p²`, the quadratic symbols and the root count are cross-checked.

mod model;
mod report;
mod sweep;

pub use model::{
    admissible_primes, calibrate, h_squarefree_at, CalibrationChoice, CalibrationEvidence, ClassInfo, CosetModel,
    GroupModel, MIN_CALIBRATION_SAMPLE, RAMIFIED,
};
pub use report::{frobenius_report, FrobeniusContext, FrobeniusReport, KroneckerTriple};
pub use sweep::{
    class_triples, sweep, triple_injectivity_check, verify_character_identifications, verify_range, ClassFrequency,
    ClassTriple, RangeSummary, SkippedPrime, CHARACTER_ID_PMAX, MIN_SWEEP_BOUND,
};
