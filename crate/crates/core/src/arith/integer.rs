use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
///
/// A thin newtype so that parsing, printing and the handful of operations the
/// toolkit needs have one fixed, canonical behaviour.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Integer(BigInt);

impl Integer {
    pub fn zero() -> Self {
        Integer(BigInt::zero())
    }

    pub fn one() -> Self {
        Integer(BigInt::one())
    }

    /// Parses an optional sign followed by one or more decimal digits.
    pub fn parse(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let digits = match bytes.first() {
            Some(b'+') | Some(b'-') => &bytes[1..],
            _ => bytes,
        };
        if digits.is_empty() || !digits.iter().all(u8::is_ascii_digit) {
            return Err(Error::Parse(format!("not a decimal integer: {text:?}")));
        }
        let magnitude =
            BigInt::parse_bytes(digits, 10).ok_or_else(|| Error::Parse(format!("not a decimal integer: {text:?}")))?;
        Ok(if bytes[0] == b'-' { Integer(-magnitude) } else { Integer(magnitude) })
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        match self.0.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Integer(self.0.abs())
    }

    pub fn pow(&self, exp: u32) -> Self {
        Integer(num_traits::pow(self.0.clone(), exp as usize))
    }

    pub fn is_even(&self) -> bool {
        self.0.is_even()
    }

    /// Least non-negative residue modulo `m > 0`.
    pub fn rem_u64(&self, m: u64) -> u64 {
        assert!(m > 0, "modulus must be positive");
        self.0.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits in u64")
    }

    /// Division that must leave no remainder.
    pub fn div_exact(&self, divisor: &Integer) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        if !r.is_zero() {
            return Err(Error::Internal(format!("{self} is not divisible by {divisor}")));
        }
        Ok(Integer(q))
    }

    /// Floor division and non-negative remainder for a positive divisor.
    pub fn div_mod_floor(&self, divisor: &Integer) -> (Self, Self) {
        let (q, r) = self.0.div_mod_floor(&divisor.0);
        (Integer(q), Integer(r))
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.0.to_i64()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Integer {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Integer::parse(s)
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer(BigInt::from(v))
    }
}

impl From<u64> for Integer {
    fn from(v: u64) -> Self {
        Integer(BigInt::from(v))
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer(BigInt::from(v))
    }
}

impl From<BigInt> for Integer {
    fn from(v: BigInt) -> Self {
        Integer(v)
    }
}

impl From<Integer> for BigInt {
    fn from(v: Integer) -> Self {
        v.0
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $Assign:ident, $assign:ident) => {
        impl $Trait<Integer> for Integer {
            type Output = Integer;
            fn $method(self, rhs: Integer) -> Integer {
                Integer(self.0.$method(rhs.0))
            }
        }
        impl $Trait<&Integer> for Integer {
            type Output = Integer;
            fn $method(self, rhs: &Integer) -> Integer {
                Integer(self.0.$method(&rhs.0))
            }
        }
        impl $Trait<&Integer> for &Integer {
            type Output = Integer;
            fn $method(self, rhs: &Integer) -> Integer {
                Integer((&self.0).$method(&rhs.0))
            }
        }
        impl $Trait<Integer> for &Integer {
            type Output = Integer;
            fn $method(self, rhs: Integer) -> Integer {
                Integer((&self.0).$method(rhs.0))
            }
        }
        impl $Assign<&Integer> for Integer {
            fn $assign(&mut self, rhs: &Integer) {
                self.0.$assign(&rhs.0);
            }
        }
        impl $Assign<Integer> for Integer {
            fn $assign(&mut self, rhs: Integer) {
                self.0.$assign(rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        Integer(-self.0)
    }
}

impl Neg for &Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        Integer(-&self.0)
    }
}
