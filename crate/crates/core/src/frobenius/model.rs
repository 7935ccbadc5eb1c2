use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, F25Elem};
use crate::data::DataBundle;
use crate::error::{Error, Result};
use crate::groups::{
    class_cycletype_table, class_labels, coset_action, det_sign, lifted_group, p1_action, subgroup_chain,
    ClassCycleTable, LiftedGroup, QuadraticCharacter, S5Class,
};
use crate::polyfactor::{factorization_cycle_type, reduce_mod_p, CycleType, PolyZ};

/// Primes dividing the discriminant of `f5`.
pub const RAMIFIED: [u64; 2] = [19, 151];

pub const MIN_CALIBRATION_SAMPLE: usize = 25;

/// Per-class data of the lifted group used by the pipeline.
#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub s5: S5Class,
    pub trace: F25Elem,
    /// `det` read as `±1`.
    pub det: i8,
    pub det_sgn: i8,
    pub inverse: usize,
}

/// Which normal order-10 subgroup's coset action models `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CosetModel {
    N1,
    N2,
}

impl CosetModel {
    pub const ALL: [CosetModel; 2] = [CosetModel::N1, CosetModel::N2];
}

/// The lifted group with everything the per-prime pipeline looks up.
#[derive(Clone, Debug)]
pub struct GroupModel {
    pub group: LiftedGroup,
    pub classes: Vec<ClassInfo>,
    /// Cycle type on `P¹(F5)` of each `S5` class.
    pub six_point: BTreeMap<S5Class, CycleType>,
    /// Class to 48-point cycle type, for `N1` and `N2`.
    pub tables: [ClassCycleTable; 2],
}

impl GroupModel {
    pub fn build() -> Result<Self> {
        let group = lifted_group(2)?;
        let labels = class_labels(&group)?;
        let mut classes = Vec::with_capacity(labels.len());
        for (ci, class) in group.classes().iter().enumerate() {
            let m = group.element(class.representative);
            classes.push(ClassInfo {
                s5: labels[ci],
                trace: m.trace(),
                det: det_sign(m.det())?,
                det_sgn: QuadraticCharacter::DetSgn.eval(&m)?,
                inverse: group.inverse_class(ci),
            });
        }
        let p1 = p1_action(&group)?;
        let six = class_cycletype_table(&p1, &group)?;
        let mut six_point = BTreeMap::new();
        for (ci, info) in classes.iter().enumerate() {
            if let Some(prev) = six_point.insert(info.s5, six.forward[ci].clone()) {
                if prev != six.forward[ci] {
                    return Err(Error::Internal(format!("6-point type not constant on {}", info.s5)));
                }
            }
        }
        let chain = subgroup_chain(&group, &p1)?;
        let t1 = class_cycletype_table(&coset_action(&group, &chain.n1)?, &group)?;
        let t2 = class_cycletype_table(&coset_action(&group, &chain.n2)?, &group)?;
        Ok(GroupModel { group, classes, six_point, tables: [t1, t2] })
    }

    pub fn table(&self, model: CosetModel) -> &ClassCycleTable {
        &self.tables[model as usize]
    }

    /// Classes over `s5` whose 48-point type is `t48`, before any det filter.
    pub fn classes_over(&self, model: CosetModel, t48: &CycleType, s5: S5Class) -> Vec<usize> {
        self.table(model).classes_with(t48).iter().copied().filter(|&c| self.classes[c].s5 == s5).collect()
    }

    /// `tr²` as an element of `F5`, if the trace squares into the prime field.
    pub fn trace_square(&self, class: usize) -> Option<u8> {
        let t = self.classes[class].trace;
        let sq = t * t;
        (sq.zeta_part() == 0).then(|| sq.re())
    }
}

/// Whether `h mod p` is squarefree, i.e. 48-point data exists at `p`.
pub fn h_squarefree_at(h: &PolyZ, p: u64) -> Result<bool> {
    Ok(reduce_mod_p(h, p)?.is_squarefree())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalibrationEvidence {
    pub model: CosetModel,
    /// Sample primes whose data resolved to a nonempty candidate set.
    pub agreeing: usize,
    pub total: usize,
    /// First prime that failed to resolve, if any.
    pub first_disagreement: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalibrationChoice {
    pub chosen: CosetModel,
    pub primes: Vec<u64>,
    pub evidence: Vec<CalibrationEvidence>,
}

/// The first `count` primes `p ∉ {19, 151}` with `h mod p` squarefree.
pub fn admissible_primes(h: &PolyZ, count: usize) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(count);
    let mut p = 2;
    while out.len() < count {
        if is_prime(p) && !RAMIFIED.contains(&p) && h_squarefree_at(h, p)? {
            out.push(p);
        }
        p += 1;
    }
    Ok(out)
}

/// Decides which coset model `h` realizes: every sample prime must resolve
/// (48-point type, `S5` class from `f5`, det from `(-19/p)`) to at least one
/// class. Among surviving models the first in canonical order wins.
pub fn calibrate(model: &GroupModel, data: &DataBundle, sample: &[u64]) -> Result<CalibrationChoice> {
    if sample.len() < MIN_CALIBRATION_SAMPLE {
        return Err(Error::Domain(format!(
            "calibration needs at least {MIN_CALIBRATION_SAMPLE} primes, got {}",
            sample.len()
        )));
    }
    let distinct: BTreeSet<u64> = sample.iter().copied().collect();
    if distinct.len() != sample.len() {
        return Err(Error::Domain("calibration sample repeats a prime".into()));
    }
    let mut observations = Vec::with_capacity(sample.len());
    for &p in sample {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if RAMIFIED.contains(&p) {
            return Err(Error::Domain(format!("calibration sample contains the ramified prime {p}")));
        }
        let hp = reduce_mod_p(&data.h, p)?;
        if !hp.is_squarefree() {
            return Err(Error::Domain(format!("h is not squarefree mod {p}")));
        }
        let t48 = factorization_cycle_type(&hp)?;
        let t5 = factorization_cycle_type(&reduce_mod_p(&data.f5, p)?)?;
        let s5 =
            S5Class::from_cycle_type(&t5).ok_or_else(|| Error::Internal(format!("no S5 class for {t5} at {p}")))?;
        let det = QuadraticCharacter::Det.kronecker(p);
        observations.push((p, t48, s5, det));
    }
    let mut evidence = Vec::new();
    for cm in CosetModel::ALL {
        let mut agreeing = 0;
        let mut first_disagreement = None;
        for (p, t48, s5, det) in &observations {
            let ok = model.classes_over(cm, t48, *s5).iter().any(|&c| model.classes[c].det == *det);
            if ok {
                agreeing += 1;
            } else if first_disagreement.is_none() {
                first_disagreement = Some(*p);
            }
        }
        evidence.push(CalibrationEvidence { model: cm, agreeing, total: observations.len(), first_disagreement });
    }
    let chosen = evidence
        .iter()
        .find(|e| e.agreeing == e.total)
        .map(|e| e.model)
        .ok_or_else(|| Error::Data("no coset model is consistent with h; h may be corrupt".into()))?;
    Ok(CalibrationChoice { chosen, primes: sample.to_vec(), evidence })
}
