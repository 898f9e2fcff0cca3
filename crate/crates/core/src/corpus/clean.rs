//! Raw text cleanup: newline removal, URL stripping, and mapping of
//! typographic Unicode (quotes, dashes, ligatures, odd spaces) to ASCII.

use std::collections::HashMap;
use std::path::Path;
use std::sync::LazyLock;

use regex::Regex;

use crate::{Error, Result};

const EMBEDDED_MAP: &str = include_str!("../../resources/unicode_map.tsv");

/// Matches scheme-prefixed URLs (`https://...`) and bare `www.` hosts.
static URL: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"(?i)\b(?:[a-z][a-z0-9+.-]*://|www\.)\S*").expect("valid url pattern")
});

/// Codepoint-to-ASCII replacement table applied during cleaning.
#[derive(Debug, Clone)]
pub struct UnicodeMap {
    replacements: HashMap<char, String>,
}

impl UnicodeMap {
    /// The table bundled with the crate (resources/unicode_map.tsv).
    pub fn embedded() -> Self {
        Self::parse(EMBEDDED_MAP, Path::new("resources/unicode_map.tsv"))
            .expect("embedded unicode map is valid")
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path)
    }

    fn parse(text: &str, origin: &Path) -> Result<Self> {
        let mut replacements = HashMap::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (code, replacement) = line
                .split_once('\t')
                .ok_or_else(|| Error::resource(origin, lineno, "expected codepoint<TAB>replacement"))?;
            let value = u32::from_str_radix(code.trim(), 16)
                .map_err(|_| Error::resource(origin, lineno, format!("bad codepoint {code:?}")))?;
            let ch = char::from_u32(value)
                .ok_or_else(|| Error::resource(origin, lineno, format!("U+{value:04X} is not a character")))?;
            if replacements.insert(ch, replacement.to_string()).is_some() {
                return Err(Error::resource(origin, lineno, format!("duplicate codepoint U+{value:04X}")));
            }
        }
        if replacements.is_empty() {
            return Err(Error::resource(origin, 0, "empty unicode map"));
        }
        Ok(Self { replacements })
    }

    fn apply(&self, text: &str) -> String {
        let mut out = String::with_capacity(text.len());
        for ch in text.chars() {
            match self.replacements.get(&ch) {
                Some(repl) => out.push_str(repl),
                None => out.push(ch),
            }
        }
        out
    }
}

pub(crate) fn contains_url(text: &str) -> bool {
    URL.is_match(text)
}

/// Normalizes raw document text: typographic characters mapped to ASCII,
/// newline runs folded to spaces, URLs removed, whitespace collapsed, and
/// the result trimmed. Total and idempotent on any valid UTF-8 input.
pub fn clean_text(raw: &str, map: &UnicodeMap) -> String {
    let mapped = map.apply(raw);
    let no_newlines: String = mapped
        .chars()
        .map(|c| if c == '\n' || c == '\r' { ' ' } else { c })
        .collect();
    let no_urls = URL.replace_all(&no_newlines, "");
    let mut out = String::with_capacity(no_urls.len());
    let mut last_was_space = false;
    for ch in no_urls.chars() {
        if ch.is_whitespace() {
            if !last_was_space {
                out.push(' ');
            }
            last_was_space = true;
        } else {
            out.push(ch);
            last_was_space = false;
        }
    }
    out.trim().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn map() -> UnicodeMap {
        UnicodeMap::embedded()
    }

    #[test]
    fn newline_runs_become_single_spaces() {
        assert_eq!(clean_text("We will\ninvest.", &map()), "We will invest.");
        assert_eq!(clean_text("a\r\n\r\nb", &map()), "a b");
    }

    #[test]
    fn urls_are_removed() {
        assert_eq!(
            clean_text("See https://labour.org.uk for detail", &map()),
            "See for detail"
        );
        assert_eq!(clean_text("visit www.example.com today", &map()), "visit today");
        assert_eq!(clean_text("ftp://host/file gone", &map()), "gone");
    }

    #[test]
    fn urls_inside_words_are_kept() {
        assert_eq!(clean_text("wwww.notaurl stays", &map()), "wwww.notaurl stays");
    }

    #[test]
    fn typographic_characters_map_to_ascii() {
        assert_eq!(clean_text("It\u{2019}s \u{201C}fair\u{201D}", &map()), "It's \"fair\"");
        assert_eq!(clean_text("pre\u{2013}war \u{2014} era", &map()), "pre-war - era");
        assert_eq!(clean_text("e\u{FB03}cient", &map()), "efficient");
        assert_eq!(clean_text("non\u{00A0}breaking", &map()), "non breaking");
        assert_eq!(clean_text("soft\u{00AD}hyphen", &map()), "softhyphen");
    }

    #[test]
    fn whitespace_collapses_and_trims() {
        assert_eq!(clean_text("  a \t b  ", &map()), "a b");
        assert_eq!(clean_text("", &map()), "");
        assert_eq!(clean_text("\n\n", &map()), "");
    }

    #[test]
    fn unknown_codepoint_line_is_rejected() {
        let err = UnicodeMap::parse("zzzz\t-\n", Path::new("t")).unwrap_err();
        assert!(err.to_string().contains("bad codepoint"));
    }

    proptest! {
        #[test]
        fn clean_is_idempotent(raw in "\\PC{0,120}") {
            let m = map();
            let once = clean_text(&raw, &m);
            prop_assert_eq!(clean_text(&once, &m), once.clone());
        }

        #[test]
        fn clean_output_has_no_newlines_or_urls(raw in "\\PC{0,120}") {
            let cleaned = clean_text(&raw, &map());
            prop_assert!(!cleaned.contains('\n'));
            prop_assert!(!URL.is_match(&cleaned));
            prop_assert!(!cleaned.contains("  "));
        }
    }
}
