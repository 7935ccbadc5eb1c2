//! Finite, mechanical checks of the arithmetic surrounding the splitting
//! field of `X^5 - X - 1`.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: integers, residues, Kronecker symbols, prime generation and
//!   the small finite fields used by the matrix groups.
//! * [`polyfactor`]: polynomials over `Z` and `F_p`, root counts, cycle types
//!   from distinct-degree factorization, discriminants, Sturm counts.
//! * [`groups`]: the central extension `4_-PGL2(F5)` as 2x2 matrices over
//!   `F25`, its conjugacy classes, permutation actions and tables.
//! * [`asai`]: numeric character tables, tensor induction from an index-2
//!   subgroup, and the character identities built on it.
//! * [`frobenius`]: the per-prime pipeline tying factorization patterns of
//!   `f5`, `g` and `h` to classes of the group.
//! * [`modforms`]: truncated q-series for the weight-one form of level 23.

pub mod arith;
pub mod asai;
pub mod claims;
pub mod config;
pub mod data;
pub mod error;
pub mod frobenius;
pub mod groups;
pub mod modforms;
pub mod polyfactor;
pub mod report;

pub use error::{Error, Result};
