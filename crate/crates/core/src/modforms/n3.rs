use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{primes_up_to, Integer};
use crate::error::{Error, Result};
use crate::polyfactor::{count_roots_mod_p, reduce_mod_p, PolyZ};
use crate::report::VerifyReport;

use super::series::{eta_product, theta_binary_qf, QSeries};

pub const LEVEL: u64 = 23;

/// The weight-one form of level 23 as `q ∏(1-q^k)(1-q^{23k})`.
pub fn level23_form(n: usize) -> Result<QSeries> {
    eta_product(&[(1, 1), (23, 1)], n)
}

/// `Δ = q ∏(1-q^k)^24`.
pub fn delta(n: usize) -> Result<QSeries> {
    eta_product(&[(1, 24)], n)
}

/// The two reduced forms of discriminant -23 up to equivalence and sign of `b`.
pub const PRINCIPAL_FORM: (i64, i64, i64) = (1, 1, 6);
pub const NONPRINCIPAL_FORM: (i64, i64, i64) = (2, 1, 3);

/// `(Θ_{x²+xy+6y²} - Θ_{2x²+xy+3y²}) / 2`; errors if some difference is odd.
pub fn theta_difference_half(n: usize) -> Result<QSeries> {
    let (a, b, c) = PRINCIPAL_FORM;
    let (d, e, f) = NONPRINCIPAL_FORM;
    let diff = theta_binary_qf(a, b, c, n)?.sub(&theta_binary_qf(d, e, f, n)?);
    let two = Integer::from(2i64);
    let mut halves = Vec::with_capacity(n + 1);
    for (i, c) in diff.coeffs().iter().enumerate() {
        if !c.is_even() {
            return Err(Error::Verification(format!("theta difference is odd at q^{i}")));
        }
        halves.push(c.div_exact(&two)?);
    }
    Ok(QSeries::new(halves, n))
}

fn first_mismatch<T: PartialEq>(a: &[T], b: &[T]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// Identities for the cubic `X^3 - X - 1`: two expressions of the level-23
/// form agree, it is congruent to `Δ` mod 23, and its prime coefficients
/// count roots of the cubic.
pub fn verify_n3(n_coeff: usize, pmax: u64) -> Result<VerifyReport> {
    if (n_coeff as u64) < pmax {
        return Err(Error::Domain(format!("truncation {n_coeff} is below pmax {pmax}")));
    }
    let mut rep = VerifyReport::new("n3", "weight-one form of level 23 and the cubic X^3 - X - 1");
    let subject = format!("N={n_coeff}");
    let f = level23_form(n_coeff)?;
    rep.check_eq("n3.a1", "F", f.coeffs()[1].to_string(), "1".into());

    let theta = theta_difference_half(n_coeff)?;
    rep.check("n3.theta_parity", &subject, "even", "even", true);
    let m = first_mismatch(f.coeffs(), theta.coeffs());
    rep.check(
        "n3.eta_equals_theta",
        &subject,
        m.map(|i| format!("differs at q^{i}")).unwrap_or_else(|| "equal".into()),
        "equal",
        m.is_none(),
    );

    let d = delta(n_coeff)?;
    rep.check_eq("n3.tau2", "Delta", d.coeffs()[2].to_string(), "-24".into());
    let m = first_mismatch(&d.residues(LEVEL), &f.residues(LEVEL));
    rep.check(
        "n3.delta_congruence",
        &subject,
        m.map(|i| format!("differs at q^{i}")).unwrap_or_else(|| "congruent".into()),
        "congruent mod 23",
        m.is_none(),
    );

    let cubic = PolyZ::x_n_minus_x_minus_1(3);
    let mut bad = None;
    let mut checked = 0;
    let mut distribution: BTreeMap<String, usize> = BTreeMap::new();
    for p in primes_up_to(pmax) {
        if p == LEVEL {
            continue;
        }
        let ap = &f.coeffs()[p as usize];
        let roots = count_roots_mod_p(&reduce_mod_p(&cubic, p)?)?;
        *distribution.entry(ap.to_string()).or_insert(0) += 1;
        checked += 1;
        if Integer::from(roots as u64) != ap + &Integer::one() && bad.is_none() {
            bad = Some((p, roots, ap.clone()));
        }
    }
    let pm = format!("p<={pmax}");
    match bad {
        None => {
            rep.check("n3.root_count", &pm, format!("{checked} primes"), "N_p = 1 + a_p", true);
        }
        Some((p, roots, ap)) => {
            rep.check("n3.root_count", format!("p={p}"), roots, format!("1 + {ap}"), false);
        }
    }
    let dist: Vec<String> = distribution.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    rep.info("n3.ap_distribution", &pm, dist.join(" "));
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct N3Row {
    pub n: usize,
    pub a_n: String,
    pub tau_mod_23: u64,
}

/// Rows `(n, a_n(F), τ(n) mod 23)` for `1 ≤ n ≤ N`.
pub fn n3_table(n: usize) -> Result<Vec<N3Row>> {
    let f = level23_form(n)?;
    let tau = delta(n)?.residues(LEVEL);
    Ok((1..=n).map(|i| N3Row { n: i, a_n: f.coeffs()[i].to_string(), tau_mod_23: tau[i] }).collect())
}
