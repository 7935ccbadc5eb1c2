use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{F25Elem, FieldElem};
use crate::error::{Error, Result};
use crate::polyfactor::CycleType;

use super::mat2::MatF25;

/// The seven conjugacy classes of `S5`, labelled by the representatives used
/// in the trace/determinant table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum S5Class {
    #[serde(rename = "(1)")]
    Identity,
    #[serde(rename = "(1,3,5,4,2)")]
    FiveCycle,
    #[serde(rename = "(2,5)(3,4)")]
    DoubleTransposition,
    #[serde(rename = "(1,4)")]
    Transposition,
    #[serde(rename = "(1,4,5)")]
    ThreeCycle,
    #[serde(rename = "(1,5)(2,3,4)")]
    SixElement,
    #[serde(rename = "(1,2,5,3)")]
    FourCycle,
}

impl S5Class {
    /// Table order.
    pub const ALL: [S5Class; 7] = [
        S5Class::Identity,
        S5Class::FiveCycle,
        S5Class::DoubleTransposition,
        S5Class::Transposition,
        S5Class::ThreeCycle,
        S5Class::SixElement,
        S5Class::FourCycle,
    ];

    pub fn label(self) -> &'static str {
        match self {
            S5Class::Identity => "(1)",
            S5Class::FiveCycle => "(1,3,5,4,2)",
            S5Class::DoubleTransposition => "(2,5)(3,4)",
            S5Class::Transposition => "(1,4)",
            S5Class::ThreeCycle => "(1,4,5)",
            S5Class::SixElement => "(1,5)(2,3,4)",
            S5Class::FourCycle => "(1,2,5,3)",
        }
    }

    pub fn from_label(s: &str) -> Option<S5Class> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        S5Class::ALL.into_iter().find(|c| c.label() == compact)
    }

    /// Cycle type on the five letters.
    pub fn cycle_type(self) -> CycleType {
        let parts = match self {
            S5Class::Identity => vec![1, 1, 1, 1, 1],
            S5Class::FiveCycle => vec![5],
            S5Class::DoubleTransposition => vec![2, 2, 1],
            S5Class::Transposition => vec![2, 1, 1, 1],
            S5Class::ThreeCycle => vec![3, 1, 1],
            S5Class::SixElement => vec![2, 3],
            S5Class::FourCycle => vec![4, 1],
        };
        CycleType::from_parts(parts)
    }

    pub fn from_cycle_type(t: &CycleType) -> Option<S5Class> {
        S5Class::ALL.into_iter().find(|c| c.cycle_type() == *t)
    }

    pub fn element_order(self) -> u64 {
        match self {
            S5Class::Identity => 1,
            S5Class::FiveCycle => 5,
            S5Class::DoubleTransposition | S5Class::Transposition => 2,
            S5Class::ThreeCycle => 3,
            S5Class::SixElement => 6,
            S5Class::FourCycle => 4,
        }
    }

    pub fn sign(self) -> i8 {
        self.cycle_type().sign()
    }

    /// Number of elements of `S5` in the class.
    pub fn size(self) -> usize {
        match self {
            S5Class::Identity => 1,
            S5Class::FiveCycle => 24,
            S5Class::DoubleTransposition => 15,
            S5Class::Transposition => 10,
            S5Class::ThreeCycle => 20,
            S5Class::SixElement => 20,
            S5Class::FourCycle => 30,
        }
    }

    /// Trace in the standard 4-dimensional representation: fixed letters minus one.
    pub fn standard_trace(self) -> i64 {
        self.cycle_type().fixed_points() as i64 - 1
    }
}

impl fmt::Display for S5Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Image of a matrix in `PGL2(F5)`: its order there and whether it lies in `PSL2(F5)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveData {
    pub order: u64,
    pub in_psl: bool,
}

/// Projective order and `PSL2` membership of an element of the lifted group.
///
/// The matrix is rescaled so that a nonzero entry becomes 1; the rescaled
/// matrix has entries in `F5` whenever `M` lies in a scalar multiple of
/// `GL2(F5)`, and its determinant class modulo squares is well defined.
pub fn projective_data(m: &MatF25) -> Result<ProjectiveData> {
    let order = m.projective_order().ok_or_else(|| Error::Domain(format!("{m} is singular")))?;
    let lead = m.entries().into_iter().find(|e| !e.is_zero()).expect("invertible matrix has a nonzero entry");
    let normalized = m.scale(lead.inv().expect("nonzero"));
    if !normalized.entries().iter().all(|e| e.in_prime_subfield()) {
        return Err(Error::Domain(format!("{m} is not a scalar multiple of a matrix over F5")));
    }
    let det = normalized.det();
    let in_psl = det.pow(2) == F25Elem::ONE;
    Ok(ProjectiveData { order, in_psl })
}

pub fn s5_class_of(m: &MatF25) -> Result<S5Class> {
    let pd = projective_data(m)?;
    let class = match (pd.order, pd.in_psl) {
        (1, true) => S5Class::Identity,
        (2, true) => S5Class::DoubleTransposition,
        (2, false) => S5Class::Transposition,
        (3, true) => S5Class::ThreeCycle,
        (4, false) => S5Class::FourCycle,
        (5, true) => S5Class::FiveCycle,
        (6, false) => S5Class::SixElement,
        other => return Err(Error::Internal(format!("no S5 class for projective data {other:?}"))),
    };
    Ok(class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::mat2::{Mat2, ZETA};

    #[test]
    fn class_metadata_is_consistent() {
        let total: usize = S5Class::ALL.iter().map(|c| c.size()).sum();
        assert_eq!(total, 120);
        let traces: Vec<i64> = S5Class::ALL.iter().map(|c| c.standard_trace()).collect();
        assert_eq!(traces, vec![4, -1, 0, 2, 1, -1, 0]);
        for c in S5Class::ALL {
            assert_eq!(S5Class::from_label(c.label()), Some(c));
            assert_eq!(S5Class::from_cycle_type(&c.cycle_type()), Some(c));
            let lcm = c.cycle_type().parts().iter().fold(1u64, |acc, &p| {
                let p = p as u64;
                acc * p / num_integer::gcd(acc, p)
            });
            assert_eq!(lcm, c.element_order());
        }
        assert_eq!(S5Class::from_label("(1, 4)"), Some(S5Class::Transposition));
    }

    #[test]
    fn projective_examples() {
        let id = MatF25::identity();
        assert_eq!(projective_data(&id).unwrap(), ProjectiveData { order: 1, in_psl: true });
        let u = MatF25::from_i64(1, 1, 0, 1);
        assert_eq!(projective_data(&u).unwrap(), ProjectiveData { order: 5, in_psl: true });
        let w = Mat2::new(F25Elem::ZERO, ZETA, -ZETA.inv().unwrap(), F25Elem::ZERO);
        assert_eq!(projective_data(&w).unwrap(), ProjectiveData { order: 2, in_psl: false });
        assert_eq!(s5_class_of(&id).unwrap(), S5Class::Identity);
        assert_eq!(s5_class_of(&u).unwrap(), S5Class::FiveCycle);
        assert_eq!(s5_class_of(&w).unwrap(), S5Class::Transposition);
        // Scalar multiples have the same image.
        let two = MatF25::scalar(F25Elem::new(2, 0));
        assert_eq!(s5_class_of(&(two * w)).unwrap(), S5Class::Transposition);
    }
}
