use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

/// A finite field small enough that every element is a `Copy` value with a
/// canonical integer encoding.
pub trait FieldElem:
    Copy
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    const ZERO: Self;
    const ONE: Self;

    fn inv(self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;

    /// Elements of the prime subfield, in canonical order.
    fn prime_subfield() -> Vec<Self>;

    fn in_prime_subfield(self) -> bool;

    /// Canonical encoding; the `Ord` instance agrees with it.
    fn encode(self) -> u32;

    fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Self::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }
}

/// The prime field `F_P` for a small prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmallFp<const P: u8>(u8);

impl<const P: u8> SmallFp<P> {
    pub const fn new(v: u8) -> Self {
        SmallFp(v % P)
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl<const P: u8> Add for SmallFp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        SmallFp((self.0 + o.0) % P)
    }
}

impl<const P: u8> Sub for SmallFp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        SmallFp((self.0 + P - o.0) % P)
    }
}

impl<const P: u8> Mul for SmallFp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        SmallFp(((self.0 as u16 * o.0 as u16) % P as u16) as u8)
    }
}

impl<const P: u8> Neg for SmallFp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        SmallFp((P - self.0) % P)
    }
}

impl<const P: u8> Debug for SmallFp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u8> Display for SmallFp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u8> FieldElem for SmallFp<P> {
    const ZERO: Self = SmallFp(0);
    const ONE: Self = SmallFp(1);

    fn inv(self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(P as u64 - 2))
    }

    fn from_i64(n: i64) -> Self {
        SmallFp(n.rem_euclid(P as i64) as u8)
    }

    fn prime_subfield() -> Vec<Self> {
        (0..P).map(SmallFp).collect()
    }

    fn in_prime_subfield(self) -> bool {
        true
    }

    fn encode(self) -> u32 {
        self.0 as u32
    }
}

pub type F3 = SmallFp<3>;
pub type F5 = SmallFp<5>;

/// An element `a + b·ζ` of `F25 = F5[ζ]/(ζ² - 2)`.
///
/// `2` is a non-square mod 5, so the quotient is a field; `ζ⁴ = 4 = -1`
/// and `ζ` has multiplicative order 8.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct F25Elem {
    a: u8,
    b: u8,
}

impl F25Elem {
    pub const ZETA: F25Elem = F25Elem { a: 0, b: 1 };

    pub const fn new(a: u8, b: u8) -> Self {
        F25Elem { a: a % 5, b: b % 5 }
    }

    /// Rational part `a`.
    pub fn re(self) -> u8 {
        self.a
    }

    /// Coefficient `b` of `ζ`.
    pub fn zeta_part(self) -> u8 {
        self.b
    }

    /// Norm to `F5`: `(a + bζ)(a - bζ) = a² - 2b²`.
    pub fn norm(self) -> u8 {
        let (a, b) = (self.a as i32, self.b as i32);
        (a * a - 2 * b * b).rem_euclid(5) as u8
    }

    /// All 25 elements in canonical order.
    pub fn all() -> impl Iterator<Item = F25Elem> {
        (0..25u8).map(|i| F25Elem::new(i / 5, i % 5))
    }
}

impl Add for F25Elem {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        F25Elem::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for F25Elem {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        F25Elem::new(self.a + 5 - o.a, self.b + 5 - o.b)
    }
}

impl Mul for F25Elem {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b, c, d) = (self.a as u16, self.b as u16, o.a as u16, o.b as u16);
        F25Elem { a: ((a * c + 2 * b * d) % 5) as u8, b: ((a * d + b * c) % 5) as u8 }
    }
}

impl Neg for F25Elem {
    type Output = Self;
    fn neg(self) -> Self {
        F25Elem::new(5 - self.a, 5 - self.b)
    }
}

impl Debug for F25Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

/// Prints `3`, `2ζ`, `ζ`, `1+4ζ`, ...
impl Display for F25Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zeta = match self.b {
            0 => String::new(),
            1 => "ζ".to_string(),
            b => format!("{b}ζ"),
        };
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, _) => write!(f, "{zeta}"),
            (a, _) => write!(f, "{a}+{zeta}"),
        }
    }
}

impl FieldElem for F25Elem {
    const ZERO: Self = F25Elem { a: 0, b: 0 };
    const ONE: Self = F25Elem { a: 1, b: 0 };

    fn inv(self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n_inv = F5::new(self.norm()).inv()?.value();
        Some(F25Elem::new(self.a, 5 - self.b) * F25Elem::new(n_inv, 0))
    }

    fn from_i64(n: i64) -> Self {
        F25Elem::new(n.rem_euclid(5) as u8, 0)
    }

    fn prime_subfield() -> Vec<Self> {
        (0..5).map(|a| F25Elem::new(a, 0)).collect()
    }

    fn in_prime_subfield(self) -> bool {
        self.b == 0
    }

    fn encode(self) -> u32 {
        5 * self.a as u32 + self.b as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_has_order_eight() {
        let z = F25Elem::ZETA;
        assert_eq!(z * z, F25Elem::new(2, 0));
        assert_eq!(z.pow(4), -F25Elem::ONE);
        assert_eq!(z.pow(8), F25Elem::ONE);
        assert_ne!(z.pow(4), F25Elem::ONE);
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        for x in F25Elem::all().filter(|x| !x.is_zero()) {
            assert_eq!(x * x.inv().unwrap(), F25Elem::ONE, "{x}");
        }
        assert!(F25Elem::ZERO.inv().is_none());
    }

    #[test]
    fn zeta_inverse() {
        assert_eq!(F25Elem::ZETA.inv().unwrap(), F25Elem::new(0, 3));
    }

    #[test]
    fn field_axioms_exhaustive() {
        let all: Vec<_> = F25Elem::all().collect();
        for &x in &all {
            assert_eq!(x + F25Elem::ZERO, x);
            assert_eq!(x + (-x), F25Elem::ZERO);
            for &y in &all {
                assert_eq!(x * y, y * x);
                assert_eq!(x + y, y + x);
                assert_eq!((x - y) + y, x);
                for &z in all.iter().step_by(3) {
                    assert_eq!(x * (y + z), x * y + x * z);
                    assert_eq!((x * y) * z, x * (y * z));
                }
            }
        }
        // The multiplicative group is cyclic of order 24.
        assert!(F25Elem::all().any(|g| !g.is_zero() && (1..24).all(|k| g.pow(k) != F25Elem::ONE)));
    }

    #[test]
    fn small_prime_fields() {
        let two = F3::new(2);
        assert_eq!(two * two, F3::ONE);
        assert_eq!(two.inv(), Some(two));
        assert_eq!(F5::from_i64(-1), F5::new(4));
        assert_eq!(F5::new(2).inv(), Some(F5::new(3)));
    }

    #[test]
    fn display_forms() {
        assert_eq!(F25Elem::new(3, 0).to_string(), "3");
        assert_eq!(F25Elem::new(0, 1).to_string(), "ζ");
        assert_eq!(F25Elem::new(0, 2).to_string(), "2ζ");
        assert_eq!(F25Elem::new(1, 4).to_string(), "1+4ζ");
    }
}
