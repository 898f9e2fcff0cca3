//! Abbreviation-aware sentence segmentation.
//!
//! A boundary is placed after a run of `.`/`!`/`?` that is followed by
//! whitespace and an uppercase letter, unless the run ends in a period that
//! belongs to a listed abbreviation or a dotted acronym ("U.K.", "e.g.").

use std::collections::HashSet;
use std::path::Path;

use crate::{Error, Result};

const EMBEDDED_ABBREVIATIONS: &str = include_str!("../../resources/abbreviations.txt");

/// Period-final tokens that never end a sentence. Matched case-sensitively.
#[derive(Debug, Clone)]
pub struct AbbreviationList {
    entries: HashSet<String>,
}

impl AbbreviationList {
    /// The list bundled with the crate (resources/abbreviations.txt).
    pub fn embedded() -> Self {
        Self::parse(EMBEDDED_ABBREVIATIONS, Path::new("resources/abbreviations.txt"))
            .expect("embedded abbreviation list is valid")
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path)
    }

    fn parse(text: &str, origin: &Path) -> Result<Self> {
        let mut entries = HashSet::new();
        for (idx, line) in text.lines().enumerate() {
            let entry = line.trim();
            if entry.is_empty() || entry.starts_with('#') {
                continue;
            }
            if !entry.ends_with('.') {
                return Err(Error::resource(
                    origin,
                    idx + 1,
                    format!("abbreviation {entry:?} must end with a period"),
                ));
            }
            entries.insert(entry.to_string());
        }
        if entries.is_empty() {
            return Err(Error::resource(origin, 0, "empty abbreviation list"));
        }
        Ok(Self { entries })
    }

    pub fn contains(&self, token: &str) -> bool {
        self.entries.contains(token)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// "U.K.", "e.g.", "J." and the like: alternating letters and periods.
fn is_dotted_acronym(token: &str) -> bool {
    let chars: Vec<char> = token.chars().collect();
    if chars.len() < 2 || !chars.len().is_multiple_of(2) {
        return false;
    }
    chars
        .chunks(2)
        .all(|pair| pair[0].is_ascii_alphabetic() && pair[1] == '.')
}

/// The non-whitespace run ending at `end` (exclusive), with any leading
/// punctuation such as an opening quote or parenthesis removed.
fn trailing_token(chars: &[char], end: usize) -> String {
    let mut start = end;
    while start > 0 && !chars[start - 1].is_whitespace() {
        start -= 1;
    }
    let token: String = chars[start..end].iter().collect();
    token
        .trim_start_matches(|c: char| !c.is_alphanumeric())
        .to_string()
}

/// Splits cleaned text into sentences. Empty input yields an empty list;
/// joining the output with single spaces reproduces the input up to
/// whitespace runs.
pub fn split_sentences(text: &str, abbreviations: &AbbreviationList) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let mut sentences = Vec::new();
    let mut start = 0;
    let mut i = 0;
    while i < chars.len() {
        if !matches!(chars[i], '.' | '!' | '?') {
            i += 1;
            continue;
        }
        let mut run_end = i + 1;
        while run_end < chars.len() && matches!(chars[run_end], '.' | '!' | '?') {
            run_end += 1;
        }
        // closing quotes or brackets stay with the sentence they end
        let mut close_end = run_end;
        while close_end < chars.len() && matches!(chars[close_end], ')' | ']' | '}' | '"' | '\'') {
            close_end += 1;
        }
        let mut next = close_end;
        while next < chars.len() && chars[next].is_whitespace() {
            next += 1;
        }
        let followed_by_upper =
            next > close_end && next < chars.len() && chars[next].is_uppercase();
        let mut boundary = followed_by_upper;
        if boundary && chars[run_end - 1] == '.' {
            let token = trailing_token(&chars, run_end);
            if abbreviations.contains(&token) || is_dotted_acronym(&token) {
                boundary = false;
            }
        }
        if boundary {
            let sentence: String = chars[start..close_end].iter().collect();
            let sentence = sentence.trim();
            if !sentence.is_empty() {
                sentences.push(sentence.to_string());
            }
            start = next;
        }
        i = close_end;
    }
    if start < chars.len() {
        let rest: String = chars[start..].iter().collect();
        let rest = rest.trim();
        if !rest.is_empty() {
            sentences.push(rest.to_string());
        }
    }
    sentences
}
