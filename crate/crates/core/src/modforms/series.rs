use std::fmt;

use crate::arith::Integer;
use crate::error::{Error, Result};

/// A power series `a_0 + a_1 q + ... + a_N q^N`, known exactly up to `q^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Integer>,
}

impl QSeries {
    /// Pads or truncates `coeffs` to length `n + 1`.
    pub fn new(mut coeffs: Vec<Integer>, n: usize) -> Self {
        coeffs.resize(n + 1, Integer::zero());
        QSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], n: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect(), n)
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Vec::new(), n)
    }

    pub fn one(n: usize) -> Self {
        Self::new(vec![Integer::one()], n)
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    /// `a_i`, or `None` beyond the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&Integer> {
        self.coeffs.get(i)
    }

    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs[..=n.min(self.order())].to_vec(), n.min(self.order()))
    }

    fn common_order(&self, other: &QSeries) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &QSeries) -> Self {
        let n = self.common_order(other);
        QSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &QSeries) -> Self {
        let n = self.common_order(other);
        QSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect() }
    }

    pub fn scale(&self, c: &Integer) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Product truncated at the smaller order; zero coefficients are skipped,
    /// so multiplying by a sparse series is cheap.
    pub fn mul(&self, other: &QSeries) -> Self {
        let n = self.common_order(other);
        let mut out = vec![Integer::zero(); n + 1];
        let sparse: Vec<(usize, &Integer)> =
            other.coeffs[..=n].iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &sparse {
                if i + j > n {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        QSeries { coeffs: out }
    }

    /// `self^e` by repeated multiplication.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QSeries::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        let unit = if *a0 == Integer::one() {
            Integer::one()
        } else if *a0 == -Integer::one() {
            -Integer::one()
        } else {
            return Err(Error::Domain(format!("constant term {a0} is not a unit")));
        };
        let n = self.order();
        let sparse: Vec<(usize, &Integer)> =
            self.coeffs.iter().enumerate().skip(1).filter(|(_, c)| !c.is_zero()).collect();
        let mut out: Vec<Integer> = Vec::with_capacity(n + 1);
        out.push(unit.clone());
        for k in 1..=n {
            let mut s = Integer::zero();
            for &(j, a) in &sparse {
                if j > k {
                    break;
                }
                s += a * &out[k - j];
            }
            out.push(-(s * &unit));
        }
        Ok(QSeries { coeffs: out })
    }

    /// `f(q^d)`.
    pub fn dilate(&self, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("dilation by 0".into()));
        }
        let n = self.order();
        let mut out = vec![Integer::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate().take(n / d + 1) {
            out[i * d] = c.clone();
        }
        Ok(QSeries { coeffs: out })
    }

    /// `q^s · f`, truncated.
    pub fn shift(&self, s: usize) -> Self {
        let n = self.order();
        let mut out = vec![Integer::zero(); n + 1];
        if s <= n {
            out[s..].clone_from_slice(&self.coeffs[..=n - s]);
        }
        QSeries { coeffs: out }
    }

    /// Coefficients reduced to `[0, m)`.
    pub fn residues(&self, m: u64) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.rem_u64(m)).collect()
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => c.to_string(),
                1 => format!("{c}q"),
                _ => format!("{c}q^{i}"),
            });
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "{} + O(q^{})", terms.join(" + ").replace("+ -", "- "), self.order() + 1)
    }
}

/// `∏_{k≥1} (1 - q^k)` from Euler's pentagonal number theorem.
pub fn euler_product(n: usize) -> QSeries {
    let mut out = vec![Integer::zero(); n + 1];
    out[0] = Integer::one();
    for k in 1usize.. {
        let g1 = k * (3 * k - 1) / 2;
        if g1 > n {
            break;
        }
        let sign = if k % 2 == 1 { -Integer::one() } else { Integer::one() };
        out[g1] = sign.clone();
        let g2 = k * (3 * k + 1) / 2;
        if g2 <= n {
            out[g2] = sign;
        }
    }
    QSeries { coeffs: out }
}

/// `q^{Σ d·e/24} ∏_d ∏_{k≥1} (1 - q^{dk})^{e}` up to `q^N`.
pub fn eta_product(factors: &[(usize, i32)], n: usize) -> Result<QSeries> {
    if n == 0 {
        return Err(Error::Domain("truncation order must be at least 1".into()));
    }
    let weight: i64 = factors.iter().map(|&(d, e)| d as i64 * e as i64).sum();
    if weight.rem_euclid(24) != 0 {
        return Err(Error::Domain(format!("leading power {weight}/24 is not an integer")));
    }
    if weight < 0 {
        return Err(Error::Domain(format!("leading power {weight}/24 is negative")));
    }
    let base = euler_product(n);
    let mut acc = QSeries::one(n);
    for &(d, e) in factors {
        let f = base.dilate(d)?;
        let f = if e < 0 { f.inverse()? } else { f };
        acc = acc.mul(&f.pow(e.unsigned_abs()));
    }
    Ok(acc.shift((weight / 24) as usize))
}

/// Representation numbers of `a x² + b xy + c y²` up to `q^N`.
pub fn theta_binary_qf(a: i64, b: i64, c: i64, n: usize) -> Result<QSeries> {
    let disc = 4 * a * c - b * b;
    if a <= 0 || disc <= 0 {
        return Err(Error::Domain(format!("form ({a},{b},{c}) is not positive definite")));
    }
    let n_i = n as i128;
    let (a, b, c, disc) = (a as i128, b as i128, c as i128, disc as i128);
    let mut counts = vec![0u64; n + 1];
    // 4a·Q = (2ax + by)² + disc·y², so |y| ≤ sqrt(4aN/disc).
    let y_max = ((4 * a * n_i) as f64 / disc as f64).sqrt().floor() as i128 + 1;
    for y in -y_max..=y_max {
        let rest = 4 * a * n_i - disc * y * y;
        if rest < 0 {
            continue;
        }
        let r = (rest as f64).sqrt().floor() as i128 + 1;
        // |2ax + by| ≤ r.
        let lo = (-r - b * y).div_euclid(2 * a);
        let hi = (r - b * y).div_euclid(2 * a) + 1;
        for x in lo..=hi {
            let v = a * x * x + b * x * y + c * y * y;
            if (0..=n_i).contains(&v) {
                counts[v as usize] += 1;
            }
        }
    }
    Ok(QSeries::new(counts.into_iter().map(Integer::from).collect(), n))
}
