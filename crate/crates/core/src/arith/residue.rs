use std::fmt;

use super::integer::Integer;
use super::primes::{is_prime, mul_mod, pow_mod};
use crate::error::{Error, Result};

/// An element of `F_p` for a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

#[allow(clippy::should_implement_trait)]
impl Residue {
    /// `value` is reduced modulo `modulus`; `modulus` is not re-checked for primality.
    pub fn new(value: u64, modulus: u64) -> Self {
        Residue { value: value % modulus, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: Residue) {
        assert_eq!(self.modulus, other.modulus, "residues from different fields");
    }

    pub fn add(self, other: Residue) -> Residue {
        self.same_field(other);
        Residue::new(self.value + other.value, self.modulus)
    }

    pub fn sub(self, other: Residue) -> Residue {
        self.same_field(other);
        Residue::new(self.value + self.modulus - other.value, self.modulus)
    }

    pub fn mul(self, other: Residue) -> Residue {
        self.same_field(other);
        Residue::new(mul_mod(self.value, other.value, self.modulus), self.modulus)
    }

    pub fn neg(self) -> Residue {
        Residue::new(self.modulus - self.value, self.modulus)
    }

    pub fn pow(self, exp: u64) -> Residue {
        Residue::new(pow_mod(self.value, exp, self.modulus), self.modulus)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Residue> {
        (!self.is_zero()).then(|| self.pow(self.modulus - 2))
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Reduces `n` into `[0, p)`. `p` must be a prime below `2^32`.
pub fn mod_reduce(n: &Integer, p: u64) -> Result<Residue> {
    check_prime_modulus(p)?;
    Ok(Residue::new(n.rem_u64(p), p))
}

pub(crate) fn check_prime_modulus(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if p >= 1 << 32 {
        return Err(Error::Domain(format!("prime {p} exceeds the supported 32-bit range")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    // Schoolbook long division of the decimal digit string, one digit at a time.
    fn long_division_remainder(digits: &str, p: u64) -> u64 {
        digits.bytes().fold(0u64, |r, d| (r * 10 + (d - b'0') as u64) % p)
    }

    #[test]
    fn reduces_examples() {
        assert_eq!(mod_reduce(&Integer::zero(), 7).unwrap().value(), 0);
        let n = Integer::parse("3952905035040").unwrap();
        assert_eq!(long_division_remainder("3952905035040", 7), 3);
        assert_eq!(mod_reduce(&n, 7).unwrap().value(), 3);
        assert_eq!(mod_reduce(&Integer::from(-23), 5).unwrap().value(), 2);
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(matches!(mod_reduce(&Integer::one(), 9), Err(Error::Domain(_))));
        assert!(matches!(mod_reduce(&Integer::one(), 1), Err(Error::Domain(_))));
    }

    #[test]
    fn field_operations() {
        let a = Residue::new(3, 7);
        let b = Residue::new(5, 7);
        assert_eq!(a.add(b).value(), 1);
        assert_eq!(a.sub(b).value(), 5);
        assert_eq!(a.mul(b).value(), 1);
        assert_eq!(a.inv().unwrap(), b);
        assert_eq!(a.neg().value(), 4);
        assert!(Residue::new(0, 7).inv().is_none());
    }
}
