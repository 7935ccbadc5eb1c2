use std::cmp::Ordering;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::FieldElem;
use crate::error::{Error, Result};
use crate::groups::GroupData;

use super::classfn::{inner_product, ClassFunction, ClassShape};

const MAX_ATTEMPTS: u64 = 5;
const MAX_TABLE_ORDER: usize = 1000;

/// Irreducible characters of a finite group, computed numerically.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    irreducibles: Vec<ClassFunction>,
    degrees: Vec<u64>,
    class_sizes: Vec<usize>,
    order: usize,
}

impl CharacterTable {
    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn of_degree(&self, d: u64) -> impl Iterator<Item = &ClassFunction> {
        self.irreducibles.iter().zip(&self.degrees).filter(move |(_, &k)| k == d).map(|(c, _)| c)
    }

    /// Multiplicities `⟨φ, χ_i⟩` of every irreducible in `φ`.
    pub fn decompose(&self, phi: &ClassFunction) -> Result<Vec<Complex64>> {
        self.irreducibles.iter().map(|chi| inner_product(phi, chi)).collect()
    }

    /// Largest deviation from row and column orthogonality.
    pub fn orthogonality_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate() {
                let ip = inner_product(a, b).expect("same group");
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((ip - Complex64::new(want, 0.0)).norm());
            }
        }
        let r = self.class_sizes.len();
        for k in 0..r {
            for l in 0..r {
                let s: Complex64 = self.irreducibles.iter().map(|c| c.value(k) * c.value(l).conj()).sum();
                let want = if k == l { self.order as f64 / self.class_sizes[k] as f64 } else { 0.0 };
                // Column sums are of size |G|/|C|; compare relative to that scale.
                let scale = self.order as f64 / self.class_sizes[k] as f64;
                worst = worst.max((s - Complex64::new(want, 0.0)).norm() / scale);
            }
        }
        worst
    }
}

/// Class multiplication coefficients `c[i][j][k]`: the number of pairs
/// `(x, y) ∈ C_i × C_j` with `xy` equal to the representative of `C_k`.
pub fn structure_constants<F: FieldElem>(g: &GroupData<F>) -> Vec<Vec<Vec<u32>>> {
    let r = g.classes().len();
    let mut c = vec![vec![vec![0u32; r]; r]; r];
    for (k, class) in g.classes().iter().enumerate() {
        let z = class.representative;
        for x in 0..g.order() {
            let y = g.mul(g.inverse(x), z);
            c[g.class_of(x)][g.class_of(y)][k] += 1;
        }
    }
    c
}

/// Eigenvectors of an upper-triangular matrix with distinct diagonal entries.
fn triangular_eigenvectors(t: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = t.nrows();
    let mut vecs = DMatrix::zeros(n, n);
    for m in 0..n {
        let lambda = t[(m, m)];
        vecs[(m, m)] = Complex64::new(1.0, 0.0);
        for i in (0..m).rev() {
            let mut s = Complex64::new(0.0, 0.0);
            for j in i + 1..=m {
                s += t[(i, j)] * vecs[(j, m)];
            }
            vecs[(i, m)] = -s / (t[(i, i)] - lambda);
        }
    }
    vecs
}

fn attempt<F: FieldElem>(
    g: &GroupData<F>,
    consts: &[Vec<Vec<u32>>],
    rng: &mut ChaCha8Rng,
    tol: f64,
) -> Result<CharacterTable> {
    let r = consts.len();
    let sizes = g.class_sizes();
    let mut a = DMatrix::<Complex64>::zeros(r, r);
    let mats: Vec<DMatrix<Complex64>> =
        (0..r).map(|j| DMatrix::from_fn(r, r, |i, k| Complex64::new(consts[i][j][k] as f64, 0.0))).collect();
    for m in &mats {
        let coeff: f64 = rng.random_range(-1.0..1.0);
        a += m * Complex64::new(coeff, 0.0);
    }
    let schur = a
        .clone()
        .try_schur(1e-14, 10_000)
        .ok_or_else(|| Error::Numerical("Schur decomposition did not converge".into()))?;
    let (q, t) = schur.unpack();
    let scale = t.diagonal().iter().map(|x| x.norm()).fold(1.0, f64::max);
    for i in 0..r {
        for j in 0..i {
            if (t[(i, i)] - t[(j, j)]).norm() < 1e-6 * scale {
                return Err(Error::Numerical("eigenvalues not separated".into()));
            }
        }
    }
    let vecs = &q * triangular_eigenvectors(&t);
    let shape = ClassShape::of(g);
    let mut chars = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for col in 0..r {
        let v0 = vecs[(0, col)];
        if v0.norm() < 1e-12 {
            return Err(Error::Numerical("eigenvector vanishes at the identity".into()));
        }
        let omega: Vec<Complex64> = (0..r).map(|k| vecs[(k, col)] / v0).collect();
        // Each ω must be a common eigenvector of every class matrix.
        for m in &mats {
            let mv = m * nalgebra::DVector::from_column_slice(&omega);
            let lam = mv[0];
            let resid = (0..r).map(|i| (mv[i] - lam * omega[i]).norm()).fold(0.0, f64::max);
            if resid > 1e-6 * (1.0 + lam.norm()) {
                return Err(Error::Numerical("eigenvector is not common to all class matrices".into()));
            }
        }
        let denom: f64 = (0..r).map(|k| omega[k].norm_sqr() / sizes[k] as f64).sum();
        let d = (g.order() as f64 / denom).sqrt();
        let d_round = d.round();
        if (d - d_round).abs() > tol || d_round < 1.0 {
            return Err(Error::Numerical(format!("degree {d} is not an integer")));
        }
        let values = (0..r).map(|k| omega[k] * d_round / sizes[k] as f64).collect();
        chars.push(ClassFunction::new(shape.clone(), values)?);
        degrees.push(d_round as u64);
    }
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&i, &j| compare_characters(&chars[i], degrees[i], &chars[j], degrees[j]));
    let table = CharacterTable {
        irreducibles: order.iter().map(|&i| chars[i].clone()).collect(),
        degrees: order.iter().map(|&i| degrees[i]).collect(),
        class_sizes: sizes,
        order: g.order(),
    };
    let deg_sum: u64 = table.degrees.iter().map(|d| d * d).sum();
    if deg_sum != g.order() as u64 {
        return Err(Error::Numerical(format!("sum of squared degrees is {deg_sum}")));
    }
    let defect = table.orthogonality_defect();
    if defect > tol {
        return Err(Error::Numerical(format!("orthogonality defect {defect:e}")));
    }
    Ok(table)
}

fn quantize(x: f64) -> i64 {
    (x * 1e6).round() as i64
}

fn compare_characters(a: &ClassFunction, da: u64, b: &ClassFunction, db: u64) -> Ordering {
    da.cmp(&db).then_with(|| {
        let key = |c: &ClassFunction| -> Vec<(i64, i64)> {
            c.values().iter().map(|v| (-quantize(v.re), -quantize(v.im))).collect()
        };
        key(a).cmp(&key(b))
    })
}

/// Character table by simultaneous diagonalisation of the class algebra.
///
/// A random real combination of the class multiplication matrices is
/// triangularised with a complex Schur decomposition; its eigenvectors,
/// normalised at the identity class, are the central characters. Retries
/// with a fresh seed when eigenvalues collide.
pub fn character_table<F: FieldElem>(g: &GroupData<F>, seed: u64, tol: f64) -> Result<CharacterTable> {
    if g.order() > MAX_TABLE_ORDER {
        return Err(Error::Domain(format!("group of order {} is too large", g.order())));
    }
    let consts = structure_constants(g);
    let mut last = None;
    for k in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k));
        match attempt(g, &consts, &mut rng, tol) {
            Ok(t) => return Ok(t),
            Err(e) => last = Some(e),
        }
    }
    Err(Error::Numerical(format!(
        "character table failed after {MAX_ATTEMPTS} seeds: {}",
        last.map(|e| e.to_string()).unwrap_or_default()
    )))
}
