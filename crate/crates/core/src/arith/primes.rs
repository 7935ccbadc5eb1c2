/// `a * b mod m` without overflow.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` by square-and-multiply.
pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for 64-bit inputs: trial division by small
/// primes followed by Miller-Rabin with the first twelve prime bases.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes `<= limit` in ascending order (sieve of Eratosthenes).
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

#[cfg(test)]
mod tests {
    use super::*;

    // Trial division by every integer below sqrt(n).
    fn naive_is_prime(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn small_lists() {
        assert_eq!(primes_up_to(10), vec![2, 3, 5, 7]);
        let p30 = primes_up_to(30);
        assert_eq!(p30.len(), 10);
        assert_eq!(*p30.last().unwrap(), 29);
        assert!(primes_up_to(1).is_empty());
        assert!(primes_up_to(0).is_empty());
    }

    #[test]
    fn count_below_1e5_matches_independent_oracle() {
        let count = (2..=100_000u64).filter(|&n| naive_is_prime(n)).count();
        assert_eq!(count, 9592);
        assert_eq!(primes_up_to(100_000).len(), count);
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        for n in 0..20_000u64 {
            assert_eq!(is_prime(n), naive_is_prime(n), "{n}");
        }
        assert!(is_prime(18_446_744_073_709_551_557));
        // Strong pseudoprime to bases 2..=11.
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(2869));
    }

    #[test]
    fn pow_mod_edge_cases() {
        assert_eq!(pow_mod(3, 0, 7), 1);
        assert_eq!(pow_mod(3, 6, 7), 1);
        assert_eq!(pow_mod(5, 3, 1), 0);
        assert_eq!(
            pow_mod(u64::MAX, 2, 1_000_000_007),
            mul_mod(u64::MAX % 1_000_000_007, u64::MAX % 1_000_000_007, 1_000_000_007)
        );
    }
}
