//! Truncated q-series with exact integer coefficients, eta products, theta
//! series of binary quadratic forms, and the level-23 identities.

mod n3;
mod series;

pub use n3::{
    delta, level23_form, n3_table, theta_difference_half, verify_n3, N3Row, LEVEL, NONPRINCIPAL_FORM, PRINCIPAL_FORM,
};
pub use series::{eta_product, euler_product, theta_binary_qf, QSeries};
