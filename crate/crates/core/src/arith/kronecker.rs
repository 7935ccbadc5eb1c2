use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::integer::Integer;

// (2/n) for odd n, indexed by n mod 8.
const TWO_TABLE: [i8; 8] = [0, 1, 0, -1, 0, -1, 0, 1];

fn mod8(n: &BigInt) -> usize {
    n.mod_floor(&BigInt::from(8)).to_usize().unwrap()
}

fn strip_twos(n: &mut BigInt) -> u64 {
    let v = n.trailing_zeros().unwrap_or(0);
    *n >>= v;
    v
}

/// The Kronecker symbol `(a/n)`, defined for all integers `a`, `n`.
///
/// Binary reduction with quadratic reciprocity; handles even, negative and
/// zero `n` with the usual conventions (`(a/0) = [a = ±1]`, `(a/-1) = sign a`).
pub fn kronecker(a: &Integer, n: &Integer) -> i8 {
    let mut a = a.as_bigint().clone();
    let mut b = n.as_bigint().clone();

    if b.is_zero() {
        return if a.abs().is_one() { 1 } else { 0 };
    }
    if a.is_even() && b.is_even() {
        return 0;
    }

    let v = strip_twos(&mut b);
    let mut k: i8 = if v.is_multiple_of(2) { 1 } else { TWO_TABLE[mod8(&a)] };
    if b.is_negative() {
        b = -b;
        if a.is_negative() {
            k = -k;
        }
    }

    // b is now odd and positive.
    loop {
        if a.is_zero() {
            return if b.is_one() { k } else { 0 };
        }
        let v = strip_twos(&mut a);
        if v % 2 == 1 {
            k *= TWO_TABLE[mod8(&b)];
        }
        if mod8(&a) % 4 == 3 && mod8(&b) % 4 == 3 {
            k = -k;
        }
        let r = a.abs();
        a = b.mod_floor(&r);
        b = r;
    }
}

/// [`kronecker`] for machine integers.
pub fn kronecker_i64(a: i64, n: i64) -> i8 {
    kronecker(&Integer::from(a), &Integer::from(n))
}

#[cfg(test)]
mod tests {
    use super::super::primes::pow_mod;
    use super::*;
    use proptest::prelude::*;

    // Independent oracle: factor n by trial division and multiply the local
    // symbols (Euler criterion at odd primes, the mod-8 rule at 2, the sign
    // rule at -1).
    fn oracle(a: i64, n: i64) -> i8 {
        if n == 0 {
            return if a.abs() == 1 { 1 } else { 0 };
        }
        let mut result: i8 = 1;
        let mut m = n;
        if m < 0 {
            m = -m;
            if a < 0 {
                result = -result;
            }
        }
        let mut p = 2i64;
        while m > 1 {
            if p * p > m {
                p = m;
            }
            while m % p == 0 {
                m /= p;
                result *= if p == 2 {
                    if a % 2 == 0 {
                        0
                    } else {
                        match a.rem_euclid(8) {
                            1 | 7 => 1,
                            _ => -1,
                        }
                    }
                } else {
                    let r = a.rem_euclid(p) as u64;
                    if r == 0 {
                        0
                    } else if pow_mod(r, (p as u64 - 1) / 2, p as u64) == 1 {
                        1
                    } else {
                        -1
                    }
                };
            }
            p += 1;
        }
        result
    }

    #[test]
    fn worked_examples() {
        assert_eq!(kronecker_i64(1, 17), 1);
        assert_eq!(kronecker_i64(1, -4), 1);
        assert_eq!(kronecker_i64(-19, 5), 1);
        assert_eq!(kronecker_i64(2869, 2), -1);
        assert_eq!(kronecker_i64(-1, 3), -1);
        assert_eq!(kronecker_i64(5, 0), 0);
        assert_eq!(kronecker_i64(-1, 0), 1);
        assert_eq!(kronecker_i64(6, 4), 0);
        assert_eq!(kronecker_i64(-3, -1), -1);
    }

    #[test]
    fn agrees_with_factorization_oracle_on_grid() {
        for a in -60..=60 {
            for n in -60..=60 {
                assert_eq!(kronecker_i64(a, n), oracle(a, n), "({a}/{n})");
            }
        }
    }

    #[test]
    fn big_arguments() {
        let a = Integer::parse("3952905035040000000000000000000000000001").unwrap();
        let p = Integer::from(1_000_003);
        let r = a.rem_u64(1_000_003) as i64;
        assert_eq!(kronecker(&a, &p), oracle(r, 1_000_003));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn euler_criterion(a in -1_000_000i64..1_000_000, idx in 1usize..1000) {
            let p = crate::arith::primes_up_to(8000)[idx] as i64;
            prop_assume!(a.rem_euclid(p) != 0);
            let e = pow_mod(a.rem_euclid(p) as u64, (p as u64 - 1) / 2, p as u64);
            let expect = if e == 1 { 1 } else { -1 };
            prop_assert_eq!(kronecker_i64(a, p), expect);
        }
    }

    proptest! {
        #[test]
        fn multiplicative_in_numerator(a in -5000i64..5000, b in -5000i64..5000, n in -5000i64..5000) {
            prop_assert_eq!(kronecker_i64(a, n) * kronecker_i64(b, n), kronecker_i64(a * b, n));
        }

        #[test]
        fn multiplicative_in_denominator(a in -5000i64..5000, m in -3000i64..3000, n in -3000i64..3000) {
            prop_assume!(m != 0 && n != 0);
            prop_assert_eq!(kronecker_i64(a, m) * kronecker_i64(a, n), kronecker_i64(a, m * n));
        }

        #[test]
        fn matches_oracle(a in -100_000i64..100_000, n in -100_000i64..100_000) {
            prop_assert_eq!(kronecker_i64(a, n), oracle(a, n));
        }
    }
}
