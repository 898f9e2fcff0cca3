//! Agreement with the reference valence scorer on the frozen fixtures under
//! data/fixtures/ (generated by scripts/gen_fixtures.py).

use std::path::{Path, PathBuf};

use emotrend_core::valence::{scoring_words, BoundaryMode, SentimentEngine};
use emotrend_core::ValenceLexicon;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn fixture_lines(name: &str) -> Vec<String> {
    let text = std::fs::read_to_string(data(name)).expect("fixture exists");
    text.lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

#[test]
fn compounds_match_the_reference_scorer_within_1e4() {
    let lexicon = ValenceLexicon::from_path(&data("valence_lexicon.txt")).unwrap();
    let engine = SentimentEngine::new(&lexicon, BoundaryMode::InclusiveReference);
    let lines = fixture_lines("fixtures/valence_suite.tsv");
    assert_eq!(lines.len(), 100, "the suite is one hundred sentences");
    let mut worst: f64 = 0.0;
    for line in &lines {
        let mut fields = line.split('\t');
        let sentence = fields.next().unwrap();
        let expected: f64 = fields.next().unwrap().parse().unwrap();
        let expected_label = fields.next().unwrap();
        let score = engine.compound_score(sentence);
        let diff = (score.compound - expected).abs();
        worst = worst.max(diff);
        assert!(
            diff <= 1e-4,
            "{sentence:?}: compound {} vs reference {expected} (|diff| = {diff:.2e})",
            score.compound
        );
        assert_eq!(
            score.label.to_string(),
            expected_label,
            "{sentence:?}: label mismatch at compound {}",
            score.compound
        );
    }
    // the only daylight allowed is the reference's 4-decimal rounding
    assert!(worst <= 5e-5, "worst deviation {worst:.2e}");
}

#[test]
fn word_extraction_matches_the_reference_tokenizer() {
    let lines = fixture_lines("fixtures/scoring_words.tsv");
    assert_eq!(lines.len(), 50, "the extraction suite is fifty phrases");
    for line in &lines {
        let (phrase, expected) = line.split_once('\t').unwrap();
        let words = scoring_words(phrase);
        let expected: Vec<&str> = if expected.is_empty() {
            Vec::new()
        } else {
            expected.split('|').collect()
        };
        assert_eq!(words, expected, "{phrase:?}");
    }
}
