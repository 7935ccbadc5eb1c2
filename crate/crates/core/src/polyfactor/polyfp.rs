use std::fmt;

use super::cycle::CycleType;
use crate::arith::{pow_mod, Residue};
use crate::error::{Error, Result};

/// Dense polynomial over `F_p`, constant term first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyFp {
    p: u64,
    coeffs: Vec<u64>,
}

#[inline]
fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

impl PolyFp {
    /// Coefficients are reduced modulo `p`; `p` is trusted to be prime.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut f = PolyFp { p, coeffs: coeffs.into_iter().map(|c| c % p).collect() };
        f.trim();
        f
    }

    pub fn from_residues(p: u64, coeffs: &[Residue]) -> Self {
        assert!(coeffs.iter().all(|r| r.modulus() == p), "mixed moduli");
        PolyFp::new(p, coeffs.iter().map(|r| r.value()).collect())
    }

    pub fn zero(p: u64) -> Self {
        PolyFp { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        PolyFp::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        PolyFp::new(p, vec![0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn residues(&self) -> Vec<Residue> {
        self.coeffs.iter().map(|&c| Residue::new(c, self.p)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> u64 {
        *self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p as u128;
        let x = (x % self.p) as u128;
        self.coeffs.iter().rev().fold(0u128, |acc, &c| (acc * x + c as u128) % p) as u64
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lead(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.p;
        PolyFp::new(p, self.coeffs.iter().map(|&a| ((a as u128 * c as u128) % p as u128) as u64).collect())
    }

    pub fn add(&self, other: &PolyFp) -> Self {
        assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.coeffs.get(i).copied().unwrap_or(0) + other.coeffs.get(i).copied().unwrap_or(0))
            .collect();
        PolyFp::new(self.p, c)
    }

    pub fn sub(&self, other: &PolyFp) -> Self {
        assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.coeffs.get(i).copied().unwrap_or(0) + self.p - other.coeffs.get(i).copied().unwrap_or(0))
            .collect();
        PolyFp::new(self.p, c)
    }

    pub fn mul(&self, other: &PolyFp) -> Self {
        assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return PolyFp::zero(self.p);
        }
        PolyFp::new(self.p, raw_mul(&self.coeffs, &other.coeffs, self.p))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| ((i as u128 % p as u128) * a as u128 % p as u128) as u64)
            .collect();
        PolyFp::new(p, c)
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &PolyFp) -> Result<(PolyFp, PolyFp)> {
        assert_eq!(self.p, divisor.p);
        let dd = divisor.degree().ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let p = self.p;
        let inv = inv_mod(divisor.lead(), p);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((PolyFp::zero(p), self.clone()));
        }
        let mut q = vec![0u64; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = ((r[i] as u128 * inv as u128) % p as u128) as u64;
            q[i - dd] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let t = ((c as u128 * d as u128) % p as u128) as u64;
                r[i - dd + j] = (r[i - dd + j] + p - t) % p;
            }
        }
        r.truncate(dd);
        Ok((PolyFp::new(p, q), PolyFp::new(p, r)))
    }

    pub fn rem(&self, divisor: &PolyFp) -> Result<PolyFp> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &PolyFp) -> PolyFp {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("b nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `X^e mod m`.
    pub fn pow_x_mod(e: u64, m: &PolyFp) -> Result<PolyFp> {
        let reducer = MonicReducer::new(m)?;
        Ok(PolyFp::new(m.p, reducer.pow_x(e)))
    }
}

impl fmt::Display for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (mod {})", self.p);
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "X".to_string(),
                (1, c) => format!("{c}X"),
                (i, 1) => format!("X^{i}"),
                (i, c) => format!("{c}X^{i}"),
            })
            .collect();
        write!(f, "{} (mod {})", terms.join(" + "), self.p)
    }
}

fn raw_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] += x as u128 * y as u128;
        }
    }
    acc.into_iter().map(|c| (c % p as u128) as u64).collect()
}

/// Arithmetic modulo a fixed monic polynomial of degree `n >= 1`, on
/// untrimmed coefficient vectors of length `n`.
struct MonicReducer {
    p: u64,
    modulus: Vec<u64>,
    n: usize,
}

impl MonicReducer {
    fn new(m: &PolyFp) -> Result<Self> {
        let n =
            m.degree().filter(|&d| d >= 1).ok_or_else(|| Error::Domain("modulus must have positive degree".into()))?;
        let monic = m.monic();
        Ok(MonicReducer { p: m.p, modulus: monic.coeffs, n })
    }

    fn reduce(&self, mut c: Vec<u64>) -> Vec<u64> {
        let (p, n) = (self.p, self.n);
        for i in (n..c.len()).rev() {
            let t = c[i] % p;
            if t == 0 {
                continue;
            }
            for j in 0..n {
                let s = ((t as u128 * self.modulus[j] as u128) % p as u128) as u64;
                c[i - n + j] = (c[i - n + j] + p - s) % p;
            }
        }
        c.truncate(n);
        c.resize(n, 0);
        c
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.reduce(raw_mul(a, b, self.p))
    }

    fn x(&self) -> Vec<u64> {
        let mut v = vec![0; self.n.max(2)];
        v[1] = 1;
        self.reduce(v)
    }

    fn pow_x(&self, mut e: u64) -> Vec<u64> {
        let mut acc = {
            let mut v = vec![0; self.n];
            v[0] = 1;
            v
        };
        let mut base = self.x();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Images `X^{ip} mod m` for `i < n`; applying the table to a residue
    /// class raises it to the `p`-th power.
    fn frobenius_table(&self) -> Vec<Vec<u64>> {
        let xp = self.pow_x(self.p);
        let mut table = Vec::with_capacity(self.n);
        let mut cur = {
            let mut v = vec![0; self.n];
            v[0] = 1;
            v
        };
        for _ in 0..self.n {
            let next = self.mul(&cur, &xp);
            table.push(cur);
            cur = next;
        }
        table
    }

    fn apply(&self, table: &[Vec<u64>], a: &[u64]) -> Vec<u64> {
        let mut acc = vec![0u128; self.n];
        for (coef, row) in a.iter().zip(table) {
            if *coef == 0 {
                continue;
            }
            for (s, &r) in acc.iter_mut().zip(row) {
                *s += *coef as u128 * r as u128;
            }
        }
        acc.into_iter().map(|c| (c % self.p as u128) as u64).collect()
    }
}

/// Number of distinct roots of `f` in `F_p`: `deg gcd(X^p - X, f)`.
pub fn count_roots_mod_p(f: &PolyFp) -> Result<usize> {
    let deg = f.degree().ok_or_else(|| Error::Domain("root count of the zero polynomial".into()))?;
    if deg == 0 {
        return Ok(0);
    }
    let xp = PolyFp::pow_x_mod(f.p, f)?;
    let g = xp.sub(&PolyFp::x(f.p)).gcd(f);
    Ok(g.degree().unwrap_or(0))
}

/// Degrees of the irreducible factors of a squarefree `f`, from the
/// distinct-degree stage alone.
pub fn factorization_cycle_type(f: &PolyFp) -> Result<CycleType> {
    let deg = f.degree().ok_or_else(|| Error::Domain("cycle type of the zero polynomial".into()))?;
    if deg == 0 {
        return Ok(CycleType::from_parts(Vec::new()));
    }
    if !f.is_squarefree() {
        return Err(Error::Ramified(format!("polynomial of degree {deg} is not squarefree mod {}", f.p)));
    }
    let p = f.p;
    let reducer = MonicReducer::new(f)?;
    let table = reducer.frobenius_table();
    let x = PolyFp::x(p);

    let mut parts = Vec::new();
    let mut rest = f.monic();
    let mut power = reducer.x();
    let mut d = 1usize;
    while rest.degree().unwrap() >= 2 * d {
        power = reducer.apply(&table, &power);
        let candidate = PolyFp::new(p, power.clone()).sub(&x).rem(&rest)?;
        let g = candidate.gcd(&rest);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 {
            parts.extend(std::iter::repeat_n(d as u32, gd / d));
            rest = rest.div_rem(&g)?.0;
        }
        d += 1;
    }
    if let Some(r) = rest.degree().filter(|&r| r > 0) {
        parts.push(r as u32);
    }
    Ok(CycleType::from_parts(parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, c: &[i64]) -> PolyFp {
        PolyFp::new(p, c.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
    }

    // Enumerates monic irreducibles over a tiny field by sieving out products,
    // then reads off the factor degrees of f by repeated trial division.
    fn monic_irreducibles(p: u64, n: usize) -> Vec<PolyFp> {
        let mut irreducibles: Vec<PolyFp> = Vec::new();
        for d in 1..=n {
            let count = p.pow(d as u32);
            for idx in 0..count {
                let mut c = Vec::with_capacity(d + 1);
                let mut k = idx;
                for _ in 0..d {
                    c.push(k % p);
                    k /= p;
                }
                c.push(1);
                let cand = PolyFp::new(p, c);
                if irreducibles.iter().all(|q| q.degree().unwrap() > d / 2 || !cand.rem(q).unwrap().is_zero()) {
                    irreducibles.push(cand);
                }
            }
        }
        irreducibles
    }

    fn brute_factor_degrees(f: &PolyFp, irreducibles: &[PolyFp]) -> Vec<u32> {
        let mut rest = f.monic();
        let mut degrees = Vec::new();
        for q in irreducibles {
            while rest.degree().unwrap() > 0 && rest.rem(q).unwrap().is_zero() {
                rest = rest.div_rem(q).unwrap().0;
                degrees.push(q.degree().unwrap() as u32);
            }
        }
        degrees.sort_unstable();
        degrees
    }

    #[test]
    fn roots_of_examples() {
        let f5_mod2 = poly(2, &[-1, -1, 0, 0, 0, 1]);
        assert_eq!(f5_mod2.eval(0), 1);
        assert_eq!(f5_mod2.eval(1), 1);
        assert_eq!(count_roots_mod_p(&f5_mod2).unwrap(), 0);
        assert_eq!(count_roots_mod_p(&poly(5, &[-1, -1, 0, 0, 0, 1])).unwrap(), 0);
        assert_eq!(count_roots_mod_p(&poly(5, &[-1, 0, 1])).unwrap(), 2);
        assert!(count_roots_mod_p(&PolyFp::zero(5)).is_err());
        assert_eq!(count_roots_mod_p(&PolyFp::one(5)).unwrap(), 0);
    }

    #[test]
    fn cycle_types_of_examples() {
        let f5 = [-1, -1, 0, 0, 0, 1];
        assert_eq!(factorization_cycle_type(&poly(5, &f5)).unwrap().to_string(), "5");
        let at2 = poly(2, &f5);
        assert_eq!(factorization_cycle_type(&at2).unwrap().to_string(), "2 3");
        assert_eq!(brute_factor_degrees(&at2, &monic_irreducibles(2, 5)), vec![2, 3]);
        let prod = poly(2, &[1, 1, 1]).mul(&poly(2, &[1, 0, 1, 1]));
        assert_eq!(prod, at2);
        assert_eq!(factorization_cycle_type(&poly(2, &[0, 1, 1])).unwrap().to_string(), "1^2");
    }

    #[test]
    fn non_squarefree_is_ramified() {
        let sq = poly(7, &[1, 2, 1]);
        assert!(matches!(factorization_cycle_type(&sq), Err(Error::Ramified(_))));
        // X^7 - 1 = (X - 1)^7 over F_7 has vanishing derivative.
        let frob = poly(7, &[-1, 0, 0, 0, 0, 0, 0, 1]);
        assert!(matches!(factorization_cycle_type(&frob), Err(Error::Ramified(_))));
    }

    #[test]
    fn cycle_type_matches_brute_force_on_small_fields() {
        let mut seed = 0x2545F4914F6CDD1Du64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for &p in &[2u64, 3, 5] {
            let irreducibles = monic_irreducibles(p, 6);
            for _ in 0..60 {
                let deg = 1 + (next() % 6) as usize;
                let mut c: Vec<u64> = (0..deg).map(|_| next() % p).collect();
                c.push(1);
                let f = PolyFp::new(p, c);
                match factorization_cycle_type(&f) {
                    Ok(t) => {
                        assert_eq!(t.parts(), brute_factor_degrees(&f, &irreducibles).as_slice(), "{f}");
                        assert_eq!(t.degree() as usize, deg);
                        assert_eq!(t.fixed_points(), count_roots_mod_p(&f).unwrap());
                    }
                    Err(Error::Ramified(_)) => assert!(!f.is_squarefree()),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn division_identity() {
        let a = poly(11, &[3, 0, 5, 7, 1, 9, 2]);
        let b = poly(11, &[4, 1, 6]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn x_power_reduction() {
        let m = poly(3, &[1, 0, 1]); // X^2 + 1, X has order 4 modulo it
        assert_eq!(PolyFp::pow_x_mod(4, &m).unwrap(), PolyFp::one(3));
        assert_eq!(PolyFp::pow_x_mod(2, &m).unwrap(), poly(3, &[-1]));
    }
}
