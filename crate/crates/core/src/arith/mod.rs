//! Exact integers, prime-field residues, Kronecker symbols, prime lists and
//! the small finite fields the matrix groups live over.

mod field;
mod integer;
mod kronecker;
mod primes;
mod residue;

pub use field::{F25Elem, FieldElem, SmallFp, F3, F5};
pub use integer::Integer;
pub use kronecker::{kronecker, kronecker_i64};
pub use primes::{is_prime, mul_mod, pow_mod, primes_up_to};
pub(crate) use residue::check_prime_modulus;
pub use residue::{mod_reduce, Residue};
