//! Table-first lemmatization with light suffix fallback.
//!
//! The bundled table covers irregular forms and inflections the dumb rules
//! would mangle; the rules handle regular plurals (-s/-es/-ies) and regular
//! verb endings (-ing/-ed). Unknown forms pass through unchanged.

use std::collections::HashMap;
use std::path::Path;

use crate::{Error, Result};

const EMBEDDED_LEMMAS: &str = include_str!("../../resources/lemmas.tsv");

#[derive(Debug, Clone)]
pub struct Lemmatizer {
    table: HashMap<String, String>,
}

impl Lemmatizer {
    /// The lookup table bundled with the crate (resources/lemmas.tsv).
    pub fn embedded() -> Self {
        Self::parse(EMBEDDED_LEMMAS, Path::new("resources/lemmas.tsv"))
            .expect("embedded lemma table is valid")
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path)
    }

    fn parse(text: &str, origin: &Path) -> Result<Self> {
        let mut table = HashMap::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (inflected, lemma) = line
                .split_once('\t')
                .ok_or_else(|| Error::resource(origin, lineno, "expected inflected<TAB>lemma"))?;
            let (inflected, lemma) = (inflected.trim(), lemma.trim());
            if inflected.is_empty() || lemma.is_empty() {
                return Err(Error::resource(origin, lineno, "empty field"));
            }
            table.insert(inflected.to_string(), lemma.to_string());
        }
        if table.is_empty() {
            return Err(Error::resource(origin, 0, "empty lemma table"));
        }
        Ok(Self { table })
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Returns the lemma for a lowercase token: table lookup, then suffix
    /// rules, then the token itself.
    pub fn lemmatize(&self, token: &str) -> String {
        if let Some(lemma) = self.table.get(token) {
            return lemma.clone();
        }
        if !token.chars().all(|c| c.is_ascii_lowercase()) {
            return token.to_string();
        }
        if let Some(lemma) = suffix_rules(token) {
            return lemma;
        }
        token.to_string()
    }
}

fn suffix_rules(token: &str) -> Option<String> {
    let n = token.len();
    if let Some(stem) = token.strip_suffix("ies") {
        if n >= 5 {
            return Some(format!("{stem}y"));
        }
    }
    if let Some(stem) = token.strip_suffix("es") {
        // only when -es marks a plural of a sibilant stem ("taxes", "churches");
        // otherwise fall through so "crimes" loses just the -s
        if n >= 5 && ends_with_sibilant(stem) {
            return Some(stem.to_string());
        }
    }
    if let Some(stem) = token.strip_suffix('s') {
        if n >= 4 && !token.ends_with("ss") && !token.ends_with("us") && !token.ends_with("is") {
            return Some(stem.to_string());
        }
    }
    if let Some(stem) = token.strip_suffix("ing") {
        if n >= 6 {
            return Some(stem.to_string());
        }
    }
    if let Some(stem) = token.strip_suffix("ed") {
        if n >= 5 {
            return Some(stem.to_string());
        }
    }
    None
}

fn ends_with_sibilant(stem: &str) -> bool {
    stem.ends_with('s')
        || stem.ends_with('x')
        || stem.ends_with('z')
        || stem.ends_with("ch")
        || stem.ends_with("sh")
}
