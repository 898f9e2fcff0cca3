//! Valence lexicon: token -> mean valence on the [-4, 4] scale.

use std::collections::HashMap;
use std::path::Path;

use crate::num::Real;
use crate::{Error, Result};

/// The scoring dictionary. Keys are lowercase and unique; every valence is
/// finite and within [-4, 4].
#[derive(Debug, Clone)]
pub struct ValenceLexicon<F> {
    entries: HashMap<String, F>,
}

impl<F: Real> ValenceLexicon<F> {
    /// Loads the standard 4-column tab-separated lexicon file:
    /// `token<TAB>mean<TAB>stddev<TAB>ratings`. Lines starting with `#` are
    /// comments. Only the mean is retained.
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path)
    }

    fn parse(text: &str, origin: &Path) -> Result<Self> {
        let mut entries = HashMap::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 4 {
                return Err(Error::resource(
                    origin,
                    lineno,
                    format!("expected 4 tab-separated columns, found {}", fields.len()),
                ));
            }
            let token = fields[0].trim().to_lowercase();
            if token.is_empty() {
                return Err(Error::resource(origin, lineno, "empty token"));
            }
            let mean: f64 = fields[1].trim().parse().map_err(|_| {
                Error::resource(origin, lineno, format!("non-numeric mean {:?}", fields[1]))
            })?;
            if !mean.is_finite() || !(-4.0..=4.0).contains(&mean) {
                return Err(Error::resource(
                    origin,
                    lineno,
                    format!("mean {mean} outside [-4, 4]"),
                ));
            }
            // the stddev column is parsed for validity but not retained;
            // the raw ratings column is carried as-is
            let _stddev: f64 = fields[2].trim().parse().map_err(|_| {
                Error::resource(origin, lineno, format!("non-numeric stddev {:?}", fields[2]))
            })?;
            if entries.insert(token.clone(), F::constant(mean)).is_some() {
                return Err(Error::resource(origin, lineno, format!("duplicate token {token:?}")));
            }
        }
        if entries.is_empty() {
            return Err(Error::resource(origin, 0, "empty lexicon"));
        }
        Ok(Self { entries })
    }

    pub fn from_entries(entries: HashMap<String, F>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Config("empty lexicon".into()));
        }
        for (token, valence) in &entries {
            if token.to_lowercase() != *token {
                return Err(Error::Config(format!("lexicon token {token:?} is not lowercase")));
            }
            let v = valence.to_f64().unwrap_or(f64::NAN);
            if !v.is_finite() || !(-4.0..=4.0).contains(&v) {
                return Err(Error::Config(format!("valence {v} for {token:?} outside [-4, 4]")));
            }
        }
        Ok(Self { entries })
    }

    /// Looks up a token; callers pass it already lowercased.
    pub fn get(&self, token_lower: &str) -> Option<F> {
        self.entries.get(token_lower).copied()
    }

    pub fn contains(&self, token_lower: &str) -> bool {
        self.entries.contains_key(token_lower)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<ValenceLexicon<f64>> {
        ValenceLexicon::parse(text, Path::new("test.txt"))
    }

    #[test]
    fn reads_token_and_mean() {
        let lex = parse("good\t1.9\t0.9\t[2, 2, 2, 2, 2, 2, 2, 2, 2, 1]\n").unwrap();
        assert_eq!(lex.get("good"), Some(1.9));
        assert_eq!(lex.len(), 1);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let lex = parse("# header\n\ngood\t1.9\t0.9\t[2]\n").unwrap();
        assert_eq!(lex.len(), 1);
    }

    #[test]
    fn empty_file_is_rejected() {
        let err = parse("# only a comment\n").unwrap_err();
        assert!(err.to_string().contains("empty lexicon"));
    }

    #[test]
    fn out_of_range_mean_is_rejected() {
        let err = parse("odd\t9.5\t0.5\t[9]\n").unwrap_err();
        assert!(err.to_string().contains("outside [-4, 4]"));
    }

    #[test]
    fn duplicate_token_is_rejected() {
        let err = parse("good\t1.9\t0.9\t[2]\ngood\t1.0\t0.9\t[1]\n").unwrap_err();
        assert!(err.to_string().contains("duplicate token"));
    }

    #[test]
    fn wrong_arity_is_rejected() {
        let err = parse("good\t1.9\t0.9\n").unwrap_err();
        assert!(err.to_string().contains("4 tab-separated columns"));
        let err = parse("good\t1.9\t0.9\t[2]\textra\n").unwrap_err();
        assert!(err.to_string().contains("4 tab-separated columns"));
    }

    #[test]
    fn non_numeric_mean_is_rejected() {
        let err = parse("good\thigh\t0.9\t[2]\n").unwrap_err();
        assert!(err.to_string().contains("non-numeric mean"));
        let err = parse("good\t1.9\tn/a\t[2]\n").unwrap_err();
        assert!(err.to_string().contains("non-numeric stddev"));
    }

    #[test]
    fn bundled_lexicon_loads_in_both_precisions() {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/valence_lexicon.txt");
        let lex64 = ValenceLexicon::<f64>::from_path(&path).unwrap();
        let lex32 = ValenceLexicon::<f32>::from_path(&path).unwrap();
        assert_eq!(lex64.len(), lex32.len());
        assert_eq!(lex64.get("good"), Some(1.9));
        assert_eq!(lex32.get("good"), Some(1.9f32));
    }
}
