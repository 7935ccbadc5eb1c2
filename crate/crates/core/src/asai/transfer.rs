use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;

use crate::arith::{F25Elem, FieldElem};
use crate::error::{Error, Result};
use crate::groups::{
    index2_kernels, lifted_group, s5_class_of, w_matrix, LiftedGroup, MatF25, QuadraticCharacter, S5Class, Subgroup,
};
use crate::report::VerifyReport;

use super::chartable::{character_table, CharacterTable};
use super::classfn::{as_integer, format_complex, inner_product, ClassFunction};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Value of a class function of `group` at the matrix `m`.
pub fn value_at(group: &LiftedGroup, f: &ClassFunction, m: &MatF25) -> Result<Complex64> {
    let i = group.index_of(m).ok_or_else(|| Error::Domain(format!("{m} is not in the group")))?;
    Ok(f.value(group.class_of(i)))
}

/// Tensor induction of a character `psi` of the index-2 subgroup `sub` to `group`:
/// `h ↦ ψ(h)ψ(g0⁻¹hg0)` on `sub` and `g ↦ ψ(g²)` off it.
///
/// The result is evaluated on every element with every admissible `g0` and
/// must not depend on either choice.
pub fn asai_transfer(
    psi: &ClassFunction,
    sub: &LiftedGroup,
    group: &LiftedGroup,
    g0: usize,
    tol: f64,
) -> Result<ClassFunction> {
    if sub.order() * 2 != group.order() {
        return Err(Error::Domain("subgroup does not have index 2".into()));
    }
    let inside = |m: &MatF25| sub.index_of(m).is_some();
    let outside: Vec<usize> = (0..group.order()).filter(|&x| !inside(&group.element(x))).collect();
    if !outside.contains(&g0) {
        return Err(Error::Domain("g0 lies in the subgroup".into()));
    }
    let eval = |x: usize, g0: usize| -> Result<Complex64> {
        let m = group.element(x);
        if inside(&m) {
            let g0m = group.element(g0);
            let conj = g0m.inverse().expect("invertible") * m * g0m;
            Ok(value_at(sub, psi, &m)? * value_at(sub, psi, &conj)?)
        } else {
            value_at(sub, psi, &(m * m))
        }
    };
    let f = ClassFunction::from_elements(group, tol, |x| eval(x, g0))?;
    for &other in &outside {
        for (ci, class) in group.classes().iter().enumerate() {
            let v = eval(class.representative, other)?;
            if (v - f.value(ci)).norm() > tol {
                return Err(Error::Verification(format!("transfer depends on the coset representative at class {ci}")));
            }
        }
    }
    Ok(f)
}

/// Linear characters of `PGL2(F5) ≅ S5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PglCharacter {
    Trivial,
    Sign,
}

impl PglCharacter {
    fn eval(self, m: &MatF25) -> Result<f64> {
        Ok(match self {
            PglCharacter::Trivial => 1.0,
            PglCharacter::Sign => s5_class_of(m)?.sign() as f64,
        })
    }
}

/// Which determinant-one lift represents each projective class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Section {
    Smallest,
    Largest,
}

/// Canonical key of the projective image: the matrix scaled so its first
/// nonzero entry is 1.
fn projective_key(m: &MatF25) -> MatF25 {
    let lead = m.entries().into_iter().find(|e| !e.is_zero()).expect("invertible");
    m.scale(lead.inv().expect("nonzero"))
}

/// The character `χ` with `χ(c·s(ḡ)) = α(c)β(ḡ)`, where `s` picks a
/// determinant-one lift of each element of `PGL2(F5)`.
///
/// `alpha` is given on central matrices and must be trivial on `-I`.
/// Multiplicativity is checked on all pairs.
pub fn chi_from_lemma(
    alpha: &dyn Fn(&MatF25) -> Complex64,
    beta: PglCharacter,
    group: &LiftedGroup,
    section: Section,
    tol: f64,
) -> Result<ClassFunction> {
    let center = group.center();
    let minus = MatF25::scalar(-F25Elem::ONE);
    if (alpha(&minus) - c(1.0)).norm() > tol {
        return Err(Error::Domain("alpha is not trivial on the subgroup of order 2".into()));
    }
    for &a in &center {
        for &b in &center {
            let (ma, mb) = (group.element(a), group.element(b));
            if (alpha(&(ma * mb)) - alpha(&ma) * alpha(&mb)).norm() > tol {
                return Err(Error::Domain("alpha is not a character of the centre".into()));
            }
        }
    }
    let mut fibers: BTreeMap<MatF25, Vec<usize>> = BTreeMap::new();
    for (i, m) in group.elements().iter().enumerate() {
        fibers.entry(projective_key(m)).or_default().push(i);
    }
    let mut values = vec![c(0.0); group.order()];
    for members in fibers.values() {
        let lifts: Vec<usize> = members.iter().copied().filter(|&i| group.element(i).det() == F25Elem::ONE).collect();
        let s = match section {
            Section::Smallest => lifts.first(),
            Section::Largest => lifts.last(),
        }
        .copied()
        .ok_or_else(|| Error::Internal("projective class without a determinant-one lift".into()))?;
        let sm = group.element(s);
        let b = beta.eval(&sm)?;
        let s_inv = sm.inverse().expect("invertible");
        for &i in members {
            let scalar = group.element(i) * s_inv;
            if !scalar.is_scalar() {
                return Err(Error::Internal("fiber element is not a scalar multiple".into()));
            }
            values[i] = alpha(&scalar) * b;
        }
    }
    for x in 0..group.order() {
        for y in 0..group.order() {
            if (values[group.mul(x, y)] - values[x] * values[y]).norm() > tol {
                return Err(Error::Internal("extended character is not multiplicative".into()));
            }
        }
    }
    ClassFunction::from_elements(group, tol, |x| Ok(values[x]))
}

/// Pullback of the standard 4-dimensional character of `S5`.
pub fn theta_std(group: &LiftedGroup) -> Result<ClassFunction> {
    ClassFunction::from_elements(group, 0.0, |x| Ok(c(s5_class_of(&group.element(x))?.standard_trace() as f64)))
}

/// Pullback of the sign character of `S5`.
pub fn epsilon(group: &LiftedGroup) -> Result<ClassFunction> {
    ClassFunction::from_elements(group, 0.0, |x| Ok(c(s5_class_of(&group.element(x))?.sign() as f64)))
}

pub fn quadratic_character(group: &LiftedGroup, which: QuadraticCharacter) -> Result<ClassFunction> {
    ClassFunction::from_elements(group, 0.0, |x| Ok(c(which.eval(&group.element(x))? as f64)))
}

/// `det η` computed from the character alone: `(ψ(h)² - ψ(h²)) / 2`.
pub fn det_from_trace(sub: &LiftedGroup, psi: &ClassFunction) -> Result<ClassFunction> {
    ClassFunction::from_elements(sub, 1e-9, |x| {
        let m = sub.element(x);
        let a = value_at(sub, psi, &m)?;
        Ok((a * a - value_at(sub, psi, &(m * m))?) / 2.0)
    })
}

/// The group `2^r_-PGL2(F5)`, its index-2 subgroup `2^r PSL2(F5)` and their
/// character tables.
pub struct AsaiSetup {
    pub r: u32,
    pub group: LiftedGroup,
    pub sub: LiftedGroup,
    pub sub_in_group: Subgroup,
    pub group_table: CharacterTable,
    pub sub_table: CharacterTable,
    pub tol: f64,
}

impl AsaiSetup {
    pub fn new(r: u32, seed: u64, tol: f64) -> Result<Self> {
        let group = lifted_group(r)?;
        let sub_in_group = match r {
            2 => index2_kernels(&group)?.sgn,
            _ => Subgroup::from_members(
                (0..group.order())
                    .filter(|&i| group.element(i).entries().iter().all(|e| e.in_prime_subfield()))
                    .collect(),
            ),
        };
        let sub = group.subgroup_data(&sub_in_group)?;
        let group_table = character_table(&group, seed, tol)?;
        let sub_table = character_table(&sub, seed, tol)?;
        Ok(AsaiSetup { r, group, sub, sub_in_group, group_table, sub_table, tol })
    }

    /// Degree-2 irreducible characters of the index-2 subgroup.
    pub fn etas(&self) -> Vec<ClassFunction> {
        self.sub_table.of_degree(2).cloned().collect()
    }

    pub fn g0(&self) -> usize {
        self.group.index_of(&w_matrix()).expect("w is in the group")
    }

    /// The twisting character attached to `psi`: `(det ψ)⁻¹` on the centre, sign on `PGL2`.
    pub fn chi_for(&self, psi: &ClassFunction, section: Section) -> Result<ClassFunction> {
        let det = det_from_trace(&self.sub, psi)?;
        let alpha = |m: &MatF25| -> Complex64 { value_at(&self.sub, &det, m).map(|d| d.inv()).unwrap_or(c(f64::NAN)) };
        chi_from_lemma(&alpha, PglCharacter::Sign, &self.group, section, self.tol)
    }
}

fn expected_eta_count(r: u32) -> usize {
    // Two degree-2 representations of SL2(F5) per faithful character of the centre.
    2 * (1 << (r - 1))
}

/// Tensor induction twisted by the extended central character recovers the standard
/// representation of `S5`, for every degree-2 irreducible of `2^r PSL2(F5)`.
pub fn verify_prop_asai(setup: &AsaiSetup) -> Result<VerifyReport> {
    let tol = setup.tol;
    let (g, h) = (&setup.group, &setup.sub);
    let subject_r = format!("r={}", setup.r);
    let mut rep = VerifyReport::new(
        format!("asai_prop_r{}", setup.r),
        "twisted tensor induction of each degree-2 irreducible equals the standard character",
    );
    let etas = setup.etas();
    rep.check_eq("eta.count", &subject_r, etas.len(), expected_eta_count(setup.r));
    let theta = theta_std(g)?;
    let eps = epsilon(g)?;
    let theta_eps = theta.tensor(&eps)?;
    let det_sgn = quadratic_character(g, QuadraticCharacter::DetSgn)?;
    let center = g.center();
    for (k, psi) in etas.iter().enumerate() {
        let name = format!("{subject_r} eta{k}");
        let asai = asai_transfer(psi, h, g, setup.g0(), tol)?;
        let det = det_from_trace(h, psi)?;
        for &z in &center {
            let m = g.element(z);
            let lhs = value_at(g, &asai, &m)?;
            let rhs = value_at(h, &det, &m)? * 4.0;
            let subject = format!("{name} c={}", m.entries()[0]);
            rep.check(
                "eq.central_value",
                &subject,
                format_complex(lhs),
                format_complex(rhs),
                (lhs - rhs).norm() <= tol,
            );
            let lambda = value_at(h, psi, &m)? / 2.0;
            let scalar_ok = (value_at(h, &det, &m)? - lambda * lambda).norm() <= tol;
            rep.check("eta.central_scalar", &subject, format_complex(lambda), "λ with det = λ²", scalar_ok);
        }
        let w = w_matrix();
        let aw = value_at(g, &asai, &w)?;
        rep.check("asai.value_at_w", &name, format_complex(aw), "-2", (aw - c(-2.0)).norm() <= tol);
        let mults = setup.group_table.decompose(&asai)?;
        let integral = mults.iter().all(|m| as_integer(*m, tol).is_some());
        rep.check("asai.virtual_character", &name, integral, true, integral);

        let chi = setup.chi_for(psi, Section::Smallest)?;
        let chi2 = setup.chi_for(psi, Section::Largest)?;
        let d = chi.distance(&chi2)?;
        rep.check("chi.section_independent", &name, format!("{d:.1e}"), "0", d <= tol);
        let dq = chi.distance(&det_sgn)?;
        rep.check("chi.equals_det_sgn", &name, format!("{dq:.1e}"), "0", dq <= tol);
        let minus = value_at(g, &chi, &MatF25::scalar(-F25Elem::ONE))?;
        rep.check("chi.minus_identity", &name, format_complex(minus), "1", (minus - c(1.0)).norm() <= tol);

        let twisted = asai.tensor(&chi)?;
        let mut fiber_ok = true;
        for x in 0..g.order() {
            for &z in &center {
                let a = twisted.value(g.class_of(x));
                let b = twisted.value(g.class_of(g.mul(z, x)));
                fiber_ok &= (a - b).norm() <= tol;
            }
        }
        rep.check("twist.factors_through_s5", &name, fiber_ok, true, fiber_ok);
        rep.check(
            "twist.degree",
            &name,
            format_complex(twisted.degree()),
            "4",
            (twisted.degree() - c(4.0)).norm() <= tol,
        );
        let dist = twisted.distance(&theta)?;
        rep.check("twist.equals_theta", &name, format!("{dist:.1e}"), "0", dist <= tol);
        let ip = inner_product(&twisted, &theta)?;
        rep.check("twist.inner_theta", &name, format_complex(ip), "1", (ip - c(1.0)).norm() <= tol);
        let ip = inner_product(&twisted, &theta_eps)?;
        rep.check("twist.inner_theta_eps", &name, format_complex(ip), "0", ip.norm() <= tol);
        let integral = twisted.is_integral(tol);
        rep.check("twist.real_integral", &name, integral, true, integral);
    }
    Ok(rep)
}

/// Lifted formulas for the standard character, checked on every lift.
pub fn verify_cor_asai(setup: &AsaiSetup) -> Result<VerifyReport> {
    let tol = setup.tol;
    let (g, h) = (&setup.group, &setup.sub);
    let mut rep = VerifyReport::new(format!("asai_cor_r{}", setup.r), "standard character from ψ and χ on all lifts");
    let outside: Vec<usize> = (0..g.order()).filter(|&x| !setup.sub_in_group.contains(x)).collect();
    for (k, psi) in setup.etas().iter().enumerate() {
        let chi = setup.chi_for(psi, Section::Smallest)?;
        let mut seen: BTreeMap<S5Class, Vec<Complex64>> = BTreeMap::new();
        for x in 0..g.order() {
            let m = g.element(x);
            let class = s5_class_of(&m)?;
            let chi_x = chi.value(g.class_of(x));
            let bucket = seen.entry(class).or_default();
            if setup.sub_in_group.contains(x) {
                for &y in &outside {
                    let gy = g.element(y);
                    let conj = gy.inverse().expect("invertible") * m * gy;
                    bucket.push(value_at(h, psi, &m)? * value_at(h, psi, &conj)? * chi_x);
                }
            } else {
                bucket.push(value_at(h, psi, &(m * m))? * chi_x);
            }
        }
        for class in S5Class::ALL {
            let vals = seen.get(&class).cloned().unwrap_or_default();
            let want = c(class.standard_trace() as f64);
            let ok = !vals.is_empty() && vals.iter().all(|v| (v - want).norm() <= tol);
            let distinct: BTreeSet<String> = vals.iter().map(|&v| format_complex(v)).collect();
            let subject = format!("r={} eta{k} {}", setup.r, class.label());
            let computed = distinct.into_iter().collect::<Vec<_>>().join("|");
            rep.check("cor.all_lifts", &subject, computed, class.standard_trace(), ok);
        }
    }
    Ok(rep)
}

/// The product of Hecke eigenvalues above `p` for a prime whose Frobenius
/// lies in `class`, given the value of the `det·sgn` character there.
pub fn predicted_hilbert_product(class: S5Class, det_sgn: i8) -> i64 {
    det_sgn as i64 * class.standard_trace()
}

/// Compares [`predicted_hilbert_product`] with `ψ(ĥ)ψ(w⁻¹ĥw)` and `ψ(ĝ²)` on every lift.
pub fn verify_hilbert_products(setup: &AsaiSetup) -> Result<VerifyReport> {
    let tol = setup.tol;
    let (g, h) = (&setup.group, &setup.sub);
    let mut rep = VerifyReport::new(
        format!("hilbert_products_r{}", setup.r),
        "products of eigenvalues above p from the trace of a degree-2 irreducible",
    );
    let w = w_matrix();
    let w_inv = w.inverse().expect("invertible");
    for (k, psi) in setup.etas().iter().enumerate() {
        let mut seen: BTreeMap<(S5Class, i8), (bool, BTreeSet<String>)> = BTreeMap::new();
        for m in g.elements() {
            let class = s5_class_of(m)?;
            let ds = QuadraticCharacter::DetSgn.eval(m)?;
            let value = if h.index_of(m).is_some() {
                value_at(h, psi, m)? * value_at(h, psi, &(w_inv * *m * w))?
            } else {
                value_at(h, psi, &(*m * *m))?
            };
            let want = predicted_hilbert_product(class, ds) as f64;
            let e = seen.entry((class, ds)).or_insert((true, BTreeSet::new()));
            e.0 &= (value - c(want)).norm() <= tol;
            e.1.insert(format_complex(value));
        }
        for ((class, ds), (ok, vals)) in seen {
            let subject = format!("r={} eta{k} {} detsgn={ds:+}", setup.r, class.label());
            let computed = vals.into_iter().collect::<Vec<_>>().join("|");
            rep.check("hilbert.product", &subject, computed, predicted_hilbert_product(class, ds), ok);
        }
    }
    Ok(rep)
}
