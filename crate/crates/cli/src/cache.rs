//! On-disk cache of Hall polynomials, one file per `(e, ψ, φ1, φ2)` named by
//! the SHA-256 of the key.

use std::path::{Path, PathBuf};

use modbranch::hall::count::{memo_insert, memo_snapshot};
use modbranch::hall::HallPolynomial;
use modbranch::Multisegment;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "MODBRANCH_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Entry {
    e: u32,
    psi: Multisegment,
    phi1: Multisegment,
    phi2: Multisegment,
    poly: HallPolynomial,
}

fn key_hash(psi: &Multisegment, phi1: &Multisegment, phi2: &Multisegment) -> String {
    let key = serde_json::to_string(&(psi.e(), psi, phi1, phi2)).expect("key serializes");
    hex::encode(Sha256::digest(key.as_bytes()))
}

pub fn dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|s| !s.is_empty()).map(PathBuf::from)
}

/// Seeds the in-process memo. Unreadable or mismatched files are skipped.
pub fn load(dir: &Path) {
    let Ok(entries) = std::fs::read_dir(dir) else {
        return;
    };
    for path in entries.flatten().map(|d| d.path()) {
        if path.extension().and_then(|x| x.to_str()) != Some("json") {
            continue;
        }
        let Some(entry) = std::fs::read_to_string(&path).ok().and_then(|s| serde_json::from_str::<Entry>(&s).ok())
        else {
            continue;
        };
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default();
        if stem == key_hash(&entry.psi, &entry.phi1, &entry.phi2) {
            memo_insert(&entry.psi, &entry.phi1, &entry.phi2, entry.poly);
        }
    }
}

/// Writes every memoized polynomial not yet on disk.
pub fn store(dir: &Path) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for (psi, phi1, phi2, poly) in memo_snapshot() {
        let path = dir.join(format!("{}.json", key_hash(&psi, &phi1, &phi2)));
        if path.exists() {
            continue;
        }
        let entry = Entry { e: psi.e(), psi, phi1, phi2, poly };
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_string(&entry).expect("entry serializes"))?;
        std::fs::rename(&tmp, &path)?;
    }
    Ok(())
}
