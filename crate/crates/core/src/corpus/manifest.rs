//! Corpus manifest: which documents to analyze, for which party and year,
//! and under which government status.

use std::collections::HashSet;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A party's standing in government at the given election.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GovStatus {
    Incumbent,
    Opposition,
}

impl GovStatus {
    /// Binary encoding used by the correlation analysis.
    pub fn indicator(self) -> f64 {
        match self {
            GovStatus::Incumbent => 1.0,
            GovStatus::Opposition => 0.0,
        }
    }
}

impl fmt::Display for GovStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GovStatus::Incumbent => "incumbent",
            GovStatus::Opposition => "opposition",
        })
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    party: String,
    year: i32,
    gov_status: GovStatus,
    path: String,
}

/// One document of the corpus.
#[derive(Debug, Clone)]
pub struct ManifestEntry {
    pub party: String,
    pub year: i32,
    pub gov_status: GovStatus,
    /// Resolved against the manifest's directory when relative.
    pub path: PathBuf,
}

/// The validated corpus manifest.
#[derive(Debug, Clone)]
pub struct CorpusManifest {
    pub entries: Vec<ManifestEntry>,
}

impl CorpusManifest {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Loads and validates a JSON manifest: a top-level array of objects with
/// keys `party`, `year`, `gov_status` and `path`. Unknown keys are rejected,
/// (party, year) pairs must be unique, years must be strictly increasing
/// within each party, and every referenced text file must exist.
pub fn load_manifest(path: &Path) -> Result<CorpusManifest> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let raw: Vec<RawEntry> = serde_json::from_str(&text).map_err(|e| Error::Manifest {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })?;
    let fail = |reason: String| Error::Manifest {
        path: path.to_path_buf(),
        reason,
    };
    if raw.is_empty() {
        return Err(fail("empty manifest".into()));
    }

    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let mut seen: HashSet<(String, i32)> = HashSet::new();
    let mut last_year: Vec<(String, i32)> = Vec::new();
    let mut entries = Vec::with_capacity(raw.len());
    for entry in raw {
        if entry.party.trim().is_empty() {
            return Err(fail("entry with empty party".into()));
        }
        if !seen.insert((entry.party.clone(), entry.year)) {
            return Err(fail(format!(
                "duplicate entry for ({}, {})",
                entry.party, entry.year
            )));
        }
        if let Some((_, prev)) = last_year.iter_mut().find(|(p, _)| *p == entry.party) {
            if entry.year <= *prev {
                return Err(fail(format!(
                    "years must be strictly increasing per party: {} {} follows {}",
                    entry.party, entry.year, prev
                )));
            }
            *prev = entry.year;
        } else {
            last_year.push((entry.party.clone(), entry.year));
        }
        let resolved = if Path::new(&entry.path).is_absolute() {
            PathBuf::from(&entry.path)
        } else {
            base.join(&entry.path)
        };
        if !resolved.is_file() {
            return Err(fail(format!(
                "text file not found for ({}, {}): {}",
                entry.party,
                entry.year,
                resolved.display()
            )));
        }
        entries.push(ManifestEntry {
            party: entry.party,
            year: entry.year,
            gov_status: entry.gov_status,
            path: resolved,
        });
    }
    Ok(CorpusManifest { entries })
}
