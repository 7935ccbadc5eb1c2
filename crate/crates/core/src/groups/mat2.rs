use std::fmt;
use std::ops::Mul;

use crate::arith::{F25Elem, FieldElem};

/// A 2x2 matrix, row-major `[[a, b], [c, d]]`.
///
/// The derived ordering is lexicographic on the entries in row-major order,
/// which is the canonical element order used by every group table.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat2<F> {
    m: [F; 4],
}

impl<F: FieldElem> Mat2<F> {
    pub const fn new(a: F, b: F, c: F, d: F) -> Self {
        Mat2 { m: [a, b, c, d] }
    }

    pub fn identity() -> Self {
        Mat2::scalar(F::ONE)
    }

    pub fn scalar(s: F) -> Self {
        Mat2::new(s, F::ZERO, F::ZERO, s)
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(F::from_i64(a), F::from_i64(b), F::from_i64(c), F::from_i64(d))
    }

    pub fn entries(&self) -> [F; 4] {
        self.m
    }

    pub fn det(&self) -> F {
        let [a, b, c, d] = self.m;
        a * d - b * c
    }

    pub fn trace(&self) -> F {
        self.m[0] + self.m[3]
    }

    pub fn scale(&self, s: F) -> Self {
        let [a, b, c, d] = self.m;
        Mat2::new(s * a, s * b, s * c, s * d)
    }

    pub fn inverse(&self) -> Option<Self> {
        let inv = self.det().inv()?;
        let [a, b, c, d] = self.m;
        Some(Mat2::new(d, -b, -c, a).scale(inv))
    }

    pub fn is_scalar(&self) -> bool {
        let [a, b, c, d] = self.m;
        b.is_zero() && c.is_zero() && a == d
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = *self;
        let mut acc = Mat2::identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative order; `None` if singular.
    pub fn order(&self) -> Option<u64> {
        self.inverse()?;
        let id = Mat2::identity();
        let mut x = *self;
        let mut k = 1;
        while x != id {
            x = x * *self;
            k += 1;
        }
        Some(k)
    }

    /// Smallest `k >= 1` with `M^k` scalar: the order of the image in `PGL2`.
    pub fn projective_order(&self) -> Option<u64> {
        self.inverse()?;
        let mut x = *self;
        let mut k = 1;
        while !x.is_scalar() {
            x = x * *self;
            k += 1;
        }
        Some(k)
    }

    /// Dimension of the space of fixed vectors, `dim ker(M - I)`.
    pub fn fixed_space_dim(&self) -> usize {
        let shifted = Mat2::new(self.m[0] - F::ONE, self.m[1], self.m[2], self.m[3] - F::ONE);
        if shifted.m.iter().all(|e| e.is_zero()) {
            2
        } else if shifted.det().is_zero() {
            1
        } else {
            0
        }
    }
}

impl<F: FieldElem> Mul for Mat2<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let [a, b, c, d] = self.m;
        let [e, f, g, h] = o.m;
        Mat2::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }
}

impl<F: FieldElem> fmt::Debug for Mat2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: FieldElem> fmt::Display for Mat2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.m;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// Characteristic polynomial `X^2 - tX + d` rendered with coefficients in
/// `{0..4}` read as small signed integers (`X^2+1`, `X^2-1`, `X^2+2ζX+4`).
pub fn char_poly_string(trace: F25Elem, det: F25Elem) -> String {
    let signed = |x: F25Elem| -> String {
        if x.in_prime_subfield() {
            match x.re() {
                0 => "+0".into(),
                4 => "-1".into(),
                3 => "-2".into(),
                v => format!("+{v}"),
            }
        } else {
            format!("+{x}")
        }
    };
    let lin = -trace;
    let mut s = String::from("X^2");
    if !lin.is_zero() {
        let c = signed(lin);
        s.push_str(&c);
        s.push('X');
    }
    if !det.is_zero() {
        s.push_str(&signed(det));
    }
    s
}

/// `ζ`, the fixed generator of `F25^×` of order 8 with `ζ² = 2`.
pub const ZETA: F25Elem = F25Elem::ZETA;

pub type MatF25 = Mat2<F25Elem>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::F3;

    fn f(a: u8, b: u8) -> F25Elem {
        F25Elem::new(a, b)
    }

    #[test]
    fn inverse_and_orders() {
        let u: MatF25 = Mat2::from_i64(1, 1, 0, 1);
        assert_eq!(u.order(), Some(5));
        assert_eq!(u * u.inverse().unwrap(), Mat2::identity());
        let zinv = ZETA.inv().unwrap();
        let w = Mat2::new(F25Elem::ZERO, ZETA, -zinv, F25Elem::ZERO);
        assert_eq!(w.det(), F25Elem::ONE);
        assert_eq!(w * w, Mat2::scalar(-F25Elem::ONE));
        assert_eq!(w.order(), Some(4));
        assert_eq!(w.projective_order(), Some(2));
        let sing: Mat2<F3> = Mat2::from_i64(1, 2, 2, 1);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn char_poly_rendering() {
        assert_eq!(char_poly_string(F25Elem::ZERO, F25Elem::ONE), "X^2+1");
        assert_eq!(char_poly_string(F25Elem::ZERO, f(4, 0)), "X^2-1");
        assert_eq!(char_poly_string(f(2, 0), F25Elem::ONE), "X^2-2X+1");
    }

    #[test]
    fn fixed_space() {
        assert_eq!(MatF25::identity().fixed_space_dim(), 2);
        assert_eq!(MatF25::from_i64(1, 1, 0, 1).fixed_space_dim(), 1);
        assert_eq!(MatF25::from_i64(0, 1, -1, 0).fixed_space_dim(), 0);
    }
}
