//! Corpus ingestion: manifest loading, text cleanup, sentence segmentation,
//! and the token/lemma streams both analysis engines consume.
//!
//! All operations are pure; the resource tables (abbreviations, lemma table,
//! Unicode map) are loaded once and only read afterwards, so documents can
//! be processed in parallel.

mod clean;
mod lemma;
mod manifest;
mod segment;
mod token;

pub use clean::{clean_text, UnicodeMap};
pub use lemma::Lemmatizer;
pub use manifest::{load_manifest, CorpusManifest, GovStatus, ManifestEntry};
pub use segment::{split_sentences, AbbreviationList};
pub use token::tokenize;

use crate::{Error, Result};

/// The read-only tables used while preparing documents.
#[derive(Debug, Clone)]
pub struct CorpusResources {
    pub unicode_map: UnicodeMap,
    pub abbreviations: AbbreviationList,
    pub lemmatizer: Lemmatizer,
}

impl CorpusResources {
    /// The tables bundled with the crate.
    pub fn embedded() -> Self {
        Self {
            unicode_map: UnicodeMap::embedded(),
            abbreviations: AbbreviationList::embedded(),
            lemmatizer: Lemmatizer::embedded(),
        }
    }
}

/// One prepared document: identity plus its cleaned sentences.
#[derive(Debug, Clone)]
pub struct DocumentRecord {
    pub party: String,
    pub year: i32,
    pub gov_status: GovStatus,
    pub sentences: Vec<String>,
}

impl DocumentRecord {
    /// Builds a record, enforcing that there is at least one sentence and
    /// that no sentence carries a newline.
    pub fn new(
        party: impl Into<String>,
        year: i32,
        gov_status: GovStatus,
        sentences: Vec<String>,
    ) -> Result<Self> {
        let party = party.into();
        if sentences.is_empty() {
            return Err(Error::Document {
                party,
                year,
                reason: "no sentences after cleaning".into(),
            });
        }
        if let Some(bad) = sentences.iter().find(|s| s.contains('\n')) {
            return Err(Error::Document {
                party,
                year,
                reason: format!("sentence contains a newline: {bad:?}"),
            });
        }
        if let Some(bad) = sentences.iter().find(|s| clean::contains_url(s)) {
            return Err(Error::Document {
                party,
                year,
                reason: format!("sentence contains a URL: {bad:?}"),
            });
        }
        Ok(Self {
            party,
            year,
            gov_status,
            sentences,
        })
    }

    /// Cleans and segments raw text into a record.
    pub fn from_raw_text(
        entry: &ManifestEntry,
        raw: &str,
        resources: &CorpusResources,
    ) -> Result<Self> {
        let cleaned = clean_text(raw, &resources.unicode_map);
        let sentences = split_sentences(&cleaned, &resources.abbreviations);
        Self::new(entry.party.clone(), entry.year, entry.gov_status, sentences)
    }
}

/// Prepares a cleaned sentence for affect profiling: tokenize, drop tokens
/// containing anything non-alphanumeric, lowercase, and lemmatize. Order is
/// preserved.
pub fn normalize_for_affect(sentence: &str, lemmatizer: &Lemmatizer) -> Vec<String> {
    tokenize(sentence)
        .into_iter()
        .filter(|t| t.chars().all(char::is_alphanumeric))
        .map(|t| t.to_lowercase())
        // lowercasing a few exotic codepoints introduces combining marks;
        // those tokens are dropped rather than leaked into the lemma stream
        .filter(|t| t.chars().all(char::is_alphanumeric))
        .map(|t| lemmatizer.lemmatize(&t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalize_keeps_word_tokens_only() {
        let lem = Lemmatizer::embedded();
        assert_eq!(
            normalize_for_affect("We protect, we build!", &lem),
            ["we", "protect", "we", "build"]
        );
        assert_eq!(normalize_for_affect("!!!", &lem), Vec::<String>::new());
        assert_eq!(normalize_for_affect("Stronger economies", &lem), ["stronger", "economy"]);
    }

    #[test]
    fn tokens_with_apostrophes_are_dropped() {
        let lem = Lemmatizer::embedded();
        assert_eq!(normalize_for_affect("don't fear change", &lem), ["fear", "change"]);
    }

    #[test]
    fn empty_document_is_rejected() {
        let err = DocumentRecord::new("labour", 2019, GovStatus::Opposition, vec![]).unwrap_err();
        assert!(err.to_string().contains("labour 2019"));
    }

    #[test]
    fn records_reject_uncleaned_sentences() {
        let err = DocumentRecord::new(
            "labour",
            2019,
            GovStatus::Opposition,
            vec!["line one\nline two".into()],
        )
        .unwrap_err();
        assert!(err.to_string().contains("newline"));

        let err = DocumentRecord::new(
            "labour",
            2019,
            GovStatus::Opposition,
            vec!["see https://example.com now".into()],
        )
        .unwrap_err();
        assert!(err.to_string().contains("URL"));
    }

    #[test]
    fn resource_tables_load_from_files() {
        let dir = tempfile::tempdir().unwrap();
        let abbr = dir.path().join("abbr.txt");
        std::fs::write(&abbr, "Mr.\nNo.\n").unwrap();
        let abbr = AbbreviationList::from_path(&abbr).unwrap();
        assert_eq!(abbr.len(), 2);
        assert!(abbr.contains("Mr."));

        let lemmas = dir.path().join("lemmas.tsv");
        std::fs::write(&lemmas, "ran\trun\n").unwrap();
        let lem = Lemmatizer::from_path(&lemmas).unwrap();
        assert_eq!(lem.lemmatize("ran"), "run");

        let map = dir.path().join("map.tsv");
        std::fs::write(&map, "2019\t'\n").unwrap();
        let map = UnicodeMap::from_path(&map).unwrap();
        assert_eq!(clean_text("it\u{2019}s", &map), "it's");
    }

    proptest! {
        #[test]
        fn normalized_lemmas_are_lowercase_alphanumeric(s in "\\PC{0,80}") {
            let lem = Lemmatizer::embedded();
            for lemma in normalize_for_affect(&s, &lem) {
                prop_assert!(!lemma.is_empty());
                prop_assert!(lemma.chars().all(char::is_alphanumeric));
                prop_assert_eq!(lemma.to_lowercase(), lemma.clone());
            }
        }
    }
}
