use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::polyfp::PolyFp;
use crate::arith::{check_prime_modulus, primes_up_to, Integer};
use crate::error::{Error, Result};

/// Polynomial over `Z`, constant term first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyZ {
    coeffs: Vec<Integer>,
}

impl PolyZ {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Integer::is_zero) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        PolyZ::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    /// `X^n - X - 1`.
    pub fn x_n_minus_x_minus_1(n: usize) -> Self {
        assert!(n >= 2);
        let mut c = vec![Integer::zero(); n + 1];
        c[0] = Integer::from(-1);
        c[1] = Integer::from(-1);
        c[n] = Integer::one();
        PolyZ::new(c)
    }

    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        PolyZ::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Integer::from(i as i64)).collect())
    }

    /// Parses the polynomial text format.
    ///
    /// Either a single line of decimal coefficients `c0 c1 ... cd` (constant
    /// term first), or one `degree: coefficient` entry per line with omitted
    /// degrees taken as zero. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> =
            text.lines().map(|l| l.split('#').next().unwrap().trim()).filter(|l| !l.is_empty()).collect();
        if lines.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if lines.iter().all(|l| l.contains(':')) {
            let mut coeffs: Vec<Integer> = Vec::new();
            let mut seen = Vec::new();
            for line in lines {
                let (deg, coef) = line.split_once(':').unwrap();
                let deg: usize =
                    deg.trim().parse().map_err(|_| Error::Parse(format!("bad degree label in {line:?}")))?;
                if seen.contains(&deg) {
                    return Err(Error::Parse(format!("degree {deg} listed twice")));
                }
                seen.push(deg);
                if coeffs.len() <= deg {
                    coeffs.resize(deg + 1, Integer::zero());
                }
                coeffs[deg] = Integer::parse(coef.trim())?;
            }
            Ok(PolyZ::new(coeffs))
        } else if lines.len() == 1 {
            let coeffs = lines[0].split_whitespace().map(Integer::parse).collect::<Result<Vec<_>>>()?;
            Ok(PolyZ::new(coeffs))
        } else {
            Err(Error::Parse("expected one coefficient line or `degree: coefficient` lines".into()))
        }
    }

    /// Single-line text form, constant term first.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs.iter().map(Integer::to_string).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Coefficientwise reduction; the degree drops when `p` divides the leading
/// coefficient.
pub fn reduce_mod_p(f: &PolyZ, p: u64) -> Result<PolyFp> {
    check_prime_modulus(p)?;
    Ok(PolyFp::new(p, f.coeffs.iter().map(|c| c.rem_u64(p)).collect()))
}

/// Fraction-free (Bareiss) determinant.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Resultant via the Sylvester matrix.
pub fn resultant(f: &PolyZ, g: &PolyZ) -> Result<Integer> {
    let (m, n) = match (f.degree(), g.degree()) {
        (Some(m), Some(n)) => (m, n),
        _ => return Err(Error::Domain("resultant with the zero polynomial".into())),
    };
    let size = m + n;
    if size == 0 {
        return Ok(Integer::one());
    }
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    // Rows hold coefficients from the leading term down.
    for r in 0..n {
        for (j, c) in f.coeffs.iter().rev().enumerate() {
            rows[r][r + j] = c.as_bigint().clone();
        }
    }
    for r in 0..m {
        for (j, c) in g.coeffs.iter().rev().enumerate() {
            rows[n + r][r + j] = c.as_bigint().clone();
        }
    }
    Ok(Integer::from(bareiss_det(rows)))
}

/// `disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f)`.
pub fn discriminant_z(f: &PolyZ) -> Result<Integer> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::Domain("discriminant of a constant polynomial".into())),
    };
    let res = resultant(f, &f.derivative())?;
    let disc = res.div_exact(f.leading().unwrap())?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -disc } else { disc })
}

/// `(-1)^{(n-1)(n-2)/2} (n^n - (1-n)^{n-1})`, the discriminant of `X^n - X - 1`.
pub fn disc_formula(n: u32) -> Result<Integer> {
    if n < 2 {
        return Err(Error::Domain(format!("disc_formula needs n >= 2, got {n}")));
    }
    let nn = Integer::from(n as i64).pow(n);
    let other = Integer::from(1 - n as i64).pow(n - 1);
    let value = nn - other;
    let exp = ((n - 1) * (n - 2) / 2) as u64;
    Ok(if exp % 2 == 1 { -value } else { value })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SquarefreeVerdict {
    /// No `p <= bound` has `p^2 | d`. Not a proof of squarefreeness.
    NoSquareFactorBelow(u64),
    SquareFactor(u64),
}

/// Trial division by primes up to `bound`, reporting the first square divisor.
pub fn squarefree_witness(d: &Integer, bound: u64) -> Result<SquarefreeVerdict> {
    if d.is_zero() {
        return Err(Error::Domain("squarefree check of zero".into()));
    }
    for p in primes_up_to(bound) {
        if p.checked_mul(p).is_some_and(|pp| d.rem_u64(pp) == 0) {
            return Ok(SquarefreeVerdict::SquareFactor(p));
        }
    }
    Ok(SquarefreeVerdict::NoSquareFactorBelow(bound))
}

type RatPoly = Vec<BigRational>;

fn rat_trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn rat_rem(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let c = r.last().unwrap() / lead;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &c * bj;
        }
        r.pop();
        r = rat_trim(r);
    }
    r
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of real roots, counted with a Sturm sequence over exact rationals.
pub fn real_root_count(f: &PolyZ) -> Result<usize> {
    let deg = f.degree().ok_or_else(|| Error::Domain("real roots of the zero polynomial".into()))?;
    if deg == 0 {
        return Ok(0);
    }
    let to_rat =
        |p: &PolyZ| -> RatPoly { p.coeffs.iter().map(|c| BigRational::from_integer(c.as_bigint().clone())).collect() };
    let mut seq = vec![to_rat(f), to_rat(&f.derivative())];
    loop {
        let n = seq.len();
        let r = rat_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    if seq.last().unwrap().len() > 1 {
        return Err(Error::Domain("polynomial is not squarefree over Q".into()));
    }
    let lead_sign = |p: &RatPoly| -> i8 {
        if p.last().unwrap().is_positive() {
            1
        } else {
            -1
        }
    };
    let at_pos_inf = sign_changes(seq.iter().map(lead_sign));
    let at_neg_inf =
        sign_changes(seq.iter().map(|p| if (p.len() - 1) % 2 == 0 { lead_sign(p) } else { -lead_sign(p) }));
    Ok(at_neg_inf - at_pos_inf)
}
