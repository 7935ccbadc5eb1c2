use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::arith::FieldElem;
use crate::error::{Error, Result};
use crate::groups::GroupData;

/// Class sizes of a group together with its identity tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassShape {
    pub tag: u64,
    pub order: usize,
    pub sizes: Vec<usize>,
}

impl ClassShape {
    pub fn of<F: FieldElem>(g: &GroupData<F>) -> Arc<ClassShape> {
        Arc::new(ClassShape { tag: g.tag(), order: g.order(), sizes: g.class_sizes() })
    }
}

/// A complex-valued function on the conjugacy classes of a group.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    shape: Arc<ClassShape>,
    values: Vec<Complex64>,
}

impl ClassFunction {
    pub fn new(shape: Arc<ClassShape>, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != shape.sizes.len() {
            return Err(Error::Domain(format!("{} values for {} classes", values.len(), shape.sizes.len())));
        }
        Ok(ClassFunction { shape, values })
    }

    /// Evaluates `f` on every element; errors if `f` is not constant on a class.
    pub fn from_elements<F: FieldElem>(
        g: &GroupData<F>,
        tol: f64,
        mut f: impl FnMut(usize) -> Result<Complex64>,
    ) -> Result<Self> {
        let mut values = Vec::with_capacity(g.classes().len());
        for (ci, class) in g.classes().iter().enumerate() {
            let v = f(class.representative)?;
            for &m in &class.members {
                let w = f(m)?;
                if (w - v).norm() > tol {
                    return Err(Error::Verification(format!("function is not constant on class {ci}: {v} vs {w}")));
                }
            }
            values.push(v);
        }
        Ok(ClassFunction { shape: ClassShape::of(g), values })
    }

    pub fn constant<F: FieldElem>(g: &GroupData<F>, v: Complex64) -> Self {
        ClassFunction { shape: ClassShape::of(g), values: vec![v; g.classes().len()] }
    }

    pub fn shape(&self) -> &Arc<ClassShape> {
        &self.shape
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value(&self, class: usize) -> Complex64 {
        self.values[class]
    }

    /// Value on the identity class.
    pub fn degree(&self) -> Complex64 {
        self.values[0]
    }

    fn same_group(&self, other: &ClassFunction) -> Result<()> {
        if self.shape.tag != other.shape.tag || self.shape.sizes != other.shape.sizes {
            return Err(Error::Domain("class functions live on different groups".into()));
        }
        Ok(())
    }

    fn zip(&self, other: &ClassFunction, op: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        self.same_group(other)?;
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| op(a, b)).collect();
        Ok(ClassFunction { shape: self.shape.clone(), values })
    }

    pub fn add(&self, other: &ClassFunction) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    /// Pointwise product: the character of the tensor product.
    pub fn tensor(&self, other: &ClassFunction) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    pub fn conj(&self) -> Self {
        ClassFunction { shape: self.shape.clone(), values: self.values.iter().map(|v| v.conj()).collect() }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        ClassFunction { shape: self.shape.clone(), values: self.values.iter().map(|&v| v * s).collect() }
    }

    /// Largest componentwise distance; errors on a group mismatch.
    pub fn distance(&self, other: &ClassFunction) -> Result<f64> {
        self.same_group(other)?;
        Ok(self.values.iter().zip(&other.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }

    pub fn approx_eq(&self, other: &ClassFunction, tol: f64) -> bool {
        self.distance(other).map(|d| d <= tol).unwrap_or(false)
    }

    /// Whether every value is within `tol` of an integer.
    pub fn is_integral(&self, tol: f64) -> bool {
        self.values.iter().all(|v| is_near_integer(*v, tol))
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|&v| format_complex(v)).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `(1/|G|) Σ_g φ(g) conj(ψ(g))`.
pub fn inner_product(phi: &ClassFunction, psi: &ClassFunction) -> Result<Complex64> {
    phi.same_group(psi)?;
    let total: Complex64 =
        phi.values.iter().zip(&psi.values).zip(&phi.shape.sizes).map(|((&a, &b), &n)| a * b.conj() * n as f64).sum();
    Ok(total / phi.shape.order as f64)
}

pub fn is_near_integer(v: Complex64, tol: f64) -> bool {
    v.im.abs() <= tol && (v.re - v.re.round()).abs() <= tol
}

/// `v` rounded to an integer when it is within `tol` of one.
pub fn as_integer(v: Complex64, tol: f64) -> Option<i64> {
    is_near_integer(v, tol).then(|| v.re.round() as i64)
}

/// Compact rendering with six decimals; integers print bare.
pub fn format_complex(v: Complex64) -> String {
    let clean = |x: f64| if x.abs() < 5e-7 { 0.0 } else { x };
    let (re, im) = (clean(v.re), clean(v.im));
    let num = |x: f64| {
        if (x - x.round()).abs() < 5e-7 {
            format!("{}", x.round() as i64)
        } else {
            format!("{x:.6}")
        }
    };
    if im == 0.0 {
        num(re)
    } else if re == 0.0 {
        format!("{}i", num(im))
    } else if im < 0.0 {
        format!("{}-{}i", num(re), num(-im))
    } else {
        format!("{}+{}i", num(re), num(im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_formatting() {
        assert_eq!(format_complex(Complex64::new(2.0, 0.0)), "2");
        assert_eq!(format_complex(Complex64::new(0.0, -1.0)), "-1i");
        assert_eq!(format_complex(Complex64::new(-0.618034, 0.0)), "-0.618034");
        assert_eq!(format_complex(Complex64::new(1.0, 1.5)), "1+1.500000i");
        assert_eq!(as_integer(Complex64::new(3.0000000001, 0.0), 1e-6), Some(3));
        assert_eq!(as_integer(Complex64::new(0.5, 0.0), 1e-6), None);
    }
}
