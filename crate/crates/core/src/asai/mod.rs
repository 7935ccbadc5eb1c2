//! Numeric character theory for the lifted groups: class functions, character
//! tables from the class algebra, tensor induction from an index-2 subgroup,
//! and the identities relating it to the standard representation of `S5`.

mod chartable;
mod classfn;
mod n4;
mod transfer;

pub use chartable::{character_table, structure_constants, CharacterTable};
pub use classfn::{as_integer, format_complex, inner_product, is_near_integer, ClassFunction, ClassShape};
pub use n4::{gl2_f3, verify_n4_identity};
pub use transfer::{
    asai_transfer, chi_from_lemma, det_from_trace, epsilon, predicted_hilbert_product, quadratic_character, theta_std,
    value_at, verify_cor_asai, verify_hilbert_products, verify_prop_asai, AsaiSetup, PglCharacter, Section,
};
