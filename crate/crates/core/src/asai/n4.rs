use num_complex::Complex64;

use crate::arith::F3;
use crate::error::{Error, Result};
use crate::groups::{p1_action, GroupData, Mat2};
use crate::report::VerifyReport;

use super::chartable::character_table;
use super::classfn::{format_complex, ClassFunction};

pub fn gl2_f3() -> Result<GroupData<F3>> {
    GroupData::build(&[Mat2::from_i64(1, 1, 0, 1), Mat2::from_i64(0, 1, 1, 0), Mat2::from_i64(2, 0, 0, 1)])
}

/// For each faithful degree-2 irreducible `ρ` of `GL2(F3)`, `χ_ρ² = ε + θ4`
/// where `ε` and `θ4` are the sign and standard characters of
/// `S4 ≅ PGL2(F3)` acting on the four points of `P¹(F3)`.
pub fn verify_n4_identity(seed: u64, tol: f64) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("n4_identity", "square of a faithful 2-dimensional character of GL2(F3)");
    let g = gl2_f3()?;
    rep.check_eq("gl2f3.order", "GL2(F3)", g.order(), 48);
    let p1 = p1_action(&g)?;
    let image: std::collections::BTreeSet<Vec<usize>> = (0..g.order()).map(|x| p1.perm(x).to_vec()).collect();
    rep.check_eq("pgl2f3.order", "PGL2(F3)", image.len(), 24);
    let table = character_table(&g, seed, tol)?;
    let sign_plus_std = ClassFunction::from_elements(&g, 0.0, |x| {
        let t = p1.cycle_type(x);
        Ok(Complex64::new(t.sign() as f64 + t.fixed_points() as f64 - 1.0, 0.0))
    })?;
    let faithful: Vec<&ClassFunction> = table
        .of_degree(2)
        .filter(|chi| {
            // Kernel: classes where the character takes its degree.
            let kernel: usize = (0..chi.values().len())
                .filter(|&k| (chi.value(k) - chi.degree()).norm() <= tol)
                .map(|k| table.class_sizes()[k])
                .sum();
            kernel == 1
        })
        .collect();
    rep.check_eq("faithful_degree2.count", "GL2(F3)", faithful.len(), 2);
    if faithful.is_empty() {
        return Err(Error::Verification("no faithful degree-2 irreducible of GL2(F3)".into()));
    }
    for (k, chi) in faithful.iter().enumerate() {
        let square = chi.tensor(chi)?;
        for (ci, class) in g.classes().iter().enumerate() {
            let lhs = square.value(ci);
            let rhs = sign_plus_std.value(ci);
            let subject = format!("rho{k} {}", g.element(class.representative));
            rep.check("n4.square", subject, format_complex(lhs), format_complex(rhs), (lhs - rhs).norm() <= tol);
        }
    }
    Ok(rep)
}
