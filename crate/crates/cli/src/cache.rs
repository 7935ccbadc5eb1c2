//! On-disk cache of the calibration, keyed by a format version and a
//! checksum of the data files. Any mismatch or parse failure rebuilds.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use quintic::data::DataBundle;
use quintic::frobenius::{admissible_primes, calibrate, CalibrationChoice, GroupModel, MIN_CALIBRATION_SAMPLE};
use quintic::{Error, Result};

pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    data_checksum: String,
    calibration: CalibrationChoice,
}

/// SHA-256 over every data file's name and contents.
pub fn data_checksum(data: &DataBundle) -> String {
    let mut h = Sha256::new();
    for (name, text) in &data.sources {
        h.update(name.as_bytes());
        h.update([0u8]);
        h.update(text.as_bytes());
        h.update([0u8]);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn read_valid(path: &Path, checksum: &str) -> Option<CalibrationChoice> {
    let text = fs::read_to_string(path).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    (file.version == CACHE_VERSION && file.data_checksum == checksum).then_some(file.calibration)
}

/// The calibration for `data`, read from `path` when the cache is valid and
/// recomputed (and rewritten) otherwise.
pub fn load_or_calibrate(path: Option<&Path>, model: &GroupModel, data: &DataBundle) -> Result<CalibrationChoice> {
    let checksum = data_checksum(data);
    if let Some(c) = path.and_then(|p| read_valid(p, &checksum)) {
        return Ok(c);
    }
    let sample = admissible_primes(&data.h, MIN_CALIBRATION_SAMPLE)?;
    let calibration = calibrate(model, data, &sample)?;
    if let Some(p) = path {
        let file = CacheFile { version: CACHE_VERSION, data_checksum: checksum, calibration: calibration.clone() };
        let text = serde_json::to_string_pretty(&file).map_err(|e| Error::Internal(e.to_string()))?;
        let tmp = p.with_extension("tmp");
        fs::write(&tmp, text)
            .and_then(|_| fs::rename(&tmp, p))
            .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(calibration)
}
