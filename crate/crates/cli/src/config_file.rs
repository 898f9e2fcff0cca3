//! Optional TOML configuration file. Every key mirrors a command-line flag
//! and flags always win.
//!
//! ```toml
//! manifest = "corpus/manifest.json"
//! valence_lexicon = "data/valence_lexicon.txt"
//! affect_lexicon = "data/affect_lexicon.txt"
//! out = "report"
//! boundary_mode = "strict_paper"
//! parallelism = 4
//! format = "csv"
//! ```

use std::path::{Path, PathBuf};

use serde::Deserialize;

use emotrend_core::report::TableFormat;
use emotrend_core::valence::BoundaryMode;
use emotrend_core::Error;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub manifest: Option<PathBuf>,
    pub valence_lexicon: Option<PathBuf>,
    pub affect_lexicon: Option<PathBuf>,
    pub out: Option<PathBuf>,
    boundary_mode: Option<String>,
    pub parallelism: Option<usize>,
    format: Option<String>,
}

impl ConfigFile {
    pub fn load(path: Option<&Path>) -> Result<Self, Error> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.to_path_buf(),
            source: e,
        })?;
        toml::from_str(&text)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    pub fn boundary_mode(&self) -> Result<Option<BoundaryMode>, Error> {
        match self.boundary_mode.as_deref() {
            None => Ok(None),
            Some("strict_paper") => Ok(Some(BoundaryMode::StrictPaper)),
            Some("inclusive_reference") => Ok(Some(BoundaryMode::InclusiveReference)),
            Some(other) => Err(Error::Config(format!(
                "boundary_mode must be strict_paper or inclusive_reference, found {other:?}"
            ))),
        }
    }

    pub fn table_format(&self) -> Result<Option<TableFormat>, Error> {
        match self.format.as_deref() {
            None => Ok(None),
            Some("csv") => Ok(Some(TableFormat::Csv)),
            Some("json") => Ok(Some(TableFormat::Json)),
            Some(other) => Err(Error::Config(format!(
                "format must be csv or json, found {other:?}"
            ))),
        }
    }
}
