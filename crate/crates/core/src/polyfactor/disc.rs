use crate::error::Result;
use crate::report::VerifyReport;

use super::polyz::{disc_formula, discriminant_z, real_root_count, squarefree_witness, PolyZ, SquarefreeVerdict};

pub const DISC_NMAX: u32 = 40;
pub const SQUAREFREE_NMAX: u32 = 20;
pub const SQUAREFREE_BOUND: u64 = 100_000;

/// Discriminants of `X^n - X - 1`: resultant against the closed form, the
/// value 2869 at `n = 5`, bounded squarefreeness, and real-root counts.
pub fn verify_discriminants(nmax: u32, squarefree_nmax: u32, bound: u64) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("disc", "discriminants of X^n - X - 1");
    for n in 2..=nmax {
        let f = PolyZ::x_n_minus_x_minus_1(n as usize);
        let d = discriminant_z(&f)?;
        let formula = disc_formula(n)?;
        let ok = d == formula;
        rep.check("disc.formula", format!("n={n}"), &d, &formula, ok);
        if n <= squarefree_nmax {
            let verdict = squarefree_witness(&formula, bound)?;
            let shown = match &verdict {
                SquarefreeVerdict::NoSquareFactorBelow(b) => format!("none below {b}"),
                SquarefreeVerdict::SquareFactor(p) => format!("{p}^2 divides"),
            };
            rep.check(
                "disc.no_square_factor",
                format!("n={n}"),
                shown,
                format!("none below {bound}"),
                matches!(verdict, SquarefreeVerdict::NoSquareFactorBelow(_)),
            );
        }
    }
    let d5 = discriminant_z(&PolyZ::x_n_minus_x_minus_1(5))?;
    rep.check_eq("disc.f5", "n=5", d5.to_string(), (19 * 151).to_string());
    for n in [3usize, 4, 5] {
        let f = PolyZ::x_n_minus_x_minus_1(n);
        let want = if n % 2 == 1 { 1 } else { 2 };
        rep.check_eq("disc.real_roots", format!("n={n}"), real_root_count(&f)?, want);
    }
    Ok(rep)
}
