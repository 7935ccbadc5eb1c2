use std::fmt;

use serde::{Deserialize, Serialize};

/// A partition: cycle lengths of a permutation, or degrees of the irreducible
/// factors of a squarefree polynomial.
///
/// Parts are kept sorted in ascending order so equal multisets compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CycleType {
    parts: Vec<u32>,
}

impl CycleType {
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        parts.sort_unstable();
        CycleType { parts }
    }

    /// Cycle type of a permutation given as an image table `i -> perm[i]`.
    pub fn of_permutation(perm: &[usize]) -> Self {
        let mut seen = vec![false; perm.len()];
        let mut parts = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            parts.push(len);
        }
        CycleType::from_parts(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn count(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    pub fn fixed_points(&self) -> usize {
        self.count(1)
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        let odd = self.parts.iter().filter(|&&p| p % 2 == 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Parses the [`Display`](fmt::Display) form, e.g. `1^2 2^2`.
    pub fn parse(text: &str) -> Option<Self> {
        let mut parts = Vec::new();
        for tok in text.split_whitespace() {
            let (part, mult): (u32, usize) = match tok.split_once('^') {
                Some((p, m)) => (p.parse().ok()?, m.parse().ok()?),
                None => (tok.parse().ok()?, 1),
            };
            if part == 0 {
                return None;
            }
            parts.extend(std::iter::repeat_n(part, mult));
        }
        Some(CycleType::from_parts(parts))
    }
}

/// Ascending parts with multiplicities: `2 3`, `1^2 2^2`, `4^12`.
impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mult = self.parts[i..].iter().take_while(|&&p| p == part).count();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if mult == 1 {
                write!(f, "{part}")?;
            } else {
                write!(f, "{part}^{mult}")?;
            }
            i += mult;
        }
        if first {
            f.write_str("-")?;
        }
        Ok(())
    }
}
