//! The shipped polynomials `f5`, `g` and `h`, with integrity checks.

use std::fs;
use std::path::{Path, PathBuf};

use crate::arith::Integer;
use crate::error::{Error, Result};
use crate::polyfactor::PolyZ;

pub const DATA_FILES: [&str; 3] = ["f5.poly", "g.poly", "h.poly"];

const EMBEDDED: [&str; 3] =
    [include_str!("../data/f5.poly"), include_str!("../data/g.poly"), include_str!("../data/h.poly")];

/// Coefficient of `X^46` in `h`.
pub const H_SECOND_COEFFICIENT: &str = "3952905035040";

/// `g` from constant term up.
pub const G_COEFFS: [i64; 7] = [9, 7, -31, 30, -10, -1, 1];

#[derive(Clone, Debug)]
pub struct DataBundle {
    pub f5: PolyZ,
    pub g: PolyZ,
    pub h: PolyZ,
    /// File name and raw text of each source, in [`DATA_FILES`] order.
    pub sources: Vec<(String, String)>,
}

/// The directory holding the shipped data files in the source tree.
pub fn default_data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

impl DataBundle {
    /// Copies compiled into the library.
    pub fn embedded() -> Result<Self> {
        let sources = DATA_FILES.iter().zip(EMBEDDED).map(|(n, t)| (n.to_string(), t.to_string())).collect();
        Self::from_sources(sources)
    }

    pub fn load(dir: &Path) -> Result<Self> {
        let mut sources = Vec::new();
        for name in DATA_FILES {
            let path = dir.join(name);
            let text = fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            sources.push((name.to_string(), text));
        }
        Self::from_sources(sources)
    }

    fn from_sources(sources: Vec<(String, String)>) -> Result<Self> {
        let parse = |i: usize| -> Result<PolyZ> {
            PolyZ::parse(&sources[i].1).map_err(|e| Error::Data(format!("{}: {e}", sources[i].0)))
        };
        let bundle = DataBundle { f5: parse(0)?, g: parse(1)?, h: parse(2)?, sources };
        bundle.validate()?;
        Ok(bundle)
    }

    fn validate(&self) -> Result<()> {
        if self.f5 != PolyZ::x_n_minus_x_minus_1(5) {
            return Err(Error::Data("f5.poly is not X^5 - X - 1".into()));
        }
        if self.g != PolyZ::from_i64(&G_COEFFS) {
            return Err(Error::Data("g.poly does not match the sextic resolvent".into()));
        }
        let h = &self.h;
        if h.degree() != Some(48) {
            return Err(Error::Data(format!("h has degree {:?}, expected 48", h.degree())));
        }
        if h.leading() != Some(&Integer::one()) {
            return Err(Error::Data("h is not monic".into()));
        }
        if let Some((i, _)) = h.coeffs().iter().enumerate().find(|(i, c)| i % 2 == 1 && !c.is_zero()) {
            return Err(Error::Data(format!("h has a nonzero odd-degree coefficient at X^{i}")));
        }
        if h.coeff(46).to_string() != H_SECOND_COEFFICIENT {
            return Err(Error::Data(format!("coefficient of X^46 in h is {}", h.coeff(46))));
        }
        Ok(())
    }
}
