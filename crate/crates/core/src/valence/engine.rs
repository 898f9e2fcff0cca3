//! Rule-based sentence valence scoring.
//!
//! Lexicon lookups are adjusted by contextual heuristics (degree modifiers,
//! negation, capitalization, contrastive "but", idioms, punctuation
//! emphasis) and the summed result is squashed into [-1, 1]. The heuristics
//! deliberately reproduce the reference scorer's behavior, including its
//! oddities (first-index rescaling in the but-clause pass, short tokens
//! keeping their punctuation), so scores agree with it to well under 1e-4.

use crate::corpus::DocumentRecord;
use crate::num::Real;
use crate::{Error, Result};

use super::constants::{
    BOOSTER_DISTANCE_THREE_SCALE, BOOSTER_DISTANCE_TWO_SCALE, BOOSTER_MAP, BUT_POST_CLAUSE_SCALE,
    BUT_PRE_CLAUSE_SCALE, CAPS_EMPHASIS, EXCLAMATION_INCREMENT, EXCLAMATION_MAX_COUNT, IDIOM_MAP,
    NEGATION_SCALAR, NEGATOR_SET, NEGATIVE_BOUNDARY, NEVER_INTENSIFIER_SCALE, NORMALIZATION_ALPHA,
    POSITIVE_BOUNDARY, QUESTION_MAX_EMPHASIS, QUESTION_PAIR_INCREMENT,
};
use super::lexicon::ValenceLexicon;

/// How compound scores of exactly +/-0.05 classify.
///
/// `StrictPaper` treats the boundaries as neutral; `InclusiveReference`
/// matches the reference scorer, where they already count as positive or
/// negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoundaryMode {
    #[default]
    StrictPaper,
    InclusiveReference,
}

/// Ternary sentence sentiment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Positive,
    Negative,
    Neutral,
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Label::Positive => "positive",
            Label::Negative => "negative",
            Label::Neutral => "neutral",
        })
    }
}

/// A scored sentence: normalized compound valence plus its label.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SentenceScore<F> {
    pub compound: F,
    pub label: Label,
}

/// Per-document label tallies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SentimentCounts {
    pub positive: usize,
    pub negative: usize,
    pub neutral: usize,
}

impl SentimentCounts {
    pub fn total(&self) -> usize {
        self.positive + self.negative + self.neutral
    }
}

/// ASCII punctuation stripped from word edges during scoring.
const PUNCTUATION: &str = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";

/// Extracts the word stream the scorer operates on: whitespace-separated
/// tokens with edge punctuation stripped, except that a token whose stripped
/// form has two or fewer characters is kept verbatim.
pub fn scoring_words(sentence: &str) -> Vec<String> {
    sentence
        .split_whitespace()
        .map(|token| {
            let stripped = token.trim_matches(|c| PUNCTUATION.contains(c));
            if stripped.chars().count() <= 2 {
                token.to_string()
            } else {
                stripped.to_string()
            }
        })
        .collect()
}

fn is_all_caps(word: &str) -> bool {
    let mut has_cased = false;
    for c in word.chars() {
        if c.is_lowercase() {
            return false;
        }
        if c.is_uppercase() {
            has_cased = true;
        }
    }
    has_cased
}

fn mixed_case(words: &[String]) -> bool {
    let all_caps = words.iter().filter(|w| is_all_caps(w)).count();
    let differential = words.len() - all_caps;
    differential > 0 && differential < words.len()
}

fn negates(word_lower: &str) -> bool {
    NEGATOR_SET.contains(word_lower) || word_lower.contains("n't")
}

/// Squashes a raw valence sum into (-1, 1); odd and strictly increasing for
/// the bounded sums real sentences produce.
pub fn normalize_score<F: Real>(raw_sum: F) -> F {
    let alpha = F::constant(NORMALIZATION_ALPHA);
    let norm = raw_sum / (raw_sum * raw_sum + alpha).sqrt();
    if norm < -F::one() {
        -F::one()
    } else if norm > F::one() {
        F::one()
    } else {
        norm
    }
}

/// Ternary label for a compound score under the given boundary mode.
pub fn classify<F: Real>(compound: F, mode: BoundaryMode) -> Label {
    debug_assert!(
        compound >= -F::one() && compound <= F::one(),
        "compound {compound} outside [-1, 1]"
    );
    let pos = F::constant(POSITIVE_BOUNDARY);
    let neg = F::constant(NEGATIVE_BOUNDARY);
    let (is_pos, is_neg) = match mode {
        BoundaryMode::StrictPaper => (compound > pos, compound < neg),
        BoundaryMode::InclusiveReference => (compound >= pos, compound <= neg),
    };
    if is_pos {
        Label::Positive
    } else if is_neg {
        Label::Negative
    } else {
        Label::Neutral
    }
}

/// Sentence scorer over an immutable lexicon; cheap to copy around and safe
/// to share across threads.
#[derive(Debug, Clone, Copy)]
pub struct SentimentEngine<'a, F: Real> {
    lexicon: &'a ValenceLexicon<F>,
    mode: BoundaryMode,
}

impl<'a, F: Real> SentimentEngine<'a, F> {
    pub fn new(lexicon: &'a ValenceLexicon<F>, mode: BoundaryMode) -> Self {
        Self { lexicon, mode }
    }

    pub fn boundary_mode(&self) -> BoundaryMode {
        self.mode
    }

    /// Adjusted valence for every token: lexicon value shifted by boosters,
    /// negation, capitalization, idioms, and but-clause weighting. Tokens
    /// without a lexicon entry contribute zero.
    pub fn token_valences(&self, words: &[String]) -> Vec<F> {
        let lower: Vec<String> = words.iter().map(|w| w.to_lowercase()).collect();
        let cap_diff = mixed_case(words);
        let mut sentiments: Vec<F> = Vec::with_capacity(words.len());
        for i in 0..words.len() {
            if BOOSTER_MAP.contains_key(lower[i].as_str()) {
                sentiments.push(F::zero());
                continue;
            }
            if i < words.len() - 1 && lower[i] == "kind" && lower[i + 1] == "of" {
                sentiments.push(F::zero());
                continue;
            }
            sentiments.push(self.word_valence(words, &lower, cap_diff, i));
        }
        but_check(&lower, &mut sentiments);
        sentiments
    }

    /// Scores one cleaned sentence. A sentence with no scoring words (or no
    /// lexicon hits) comes out as compound 0.0, neutral.
    pub fn compound_score(&self, sentence: &str) -> SentenceScore<F> {
        let words = scoring_words(sentence);
        let compound = if words.is_empty() {
            F::zero()
        } else {
            let sentiments = self.token_valences(&words);
            let mut sum = F::zero();
            for s in &sentiments {
                sum += *s;
            }
            let amp = punctuation_emphasis::<F>(sentence);
            if sum > F::zero() {
                sum += amp;
            } else if sum < F::zero() {
                sum -= amp;
            }
            normalize_score(sum)
        };
        SentenceScore {
            compound,
            label: classify(compound, self.mode),
        }
    }

    /// Labels every sentence of a document and tallies the outcome. The
    /// counts always sum to the sentence count.
    pub fn analyze_document(&self, doc: &DocumentRecord) -> Result<SentimentCounts> {
        if doc.sentences.is_empty() {
            return Err(Error::Document {
                party: doc.party.clone(),
                year: doc.year,
                reason: "cannot analyze a document with no sentences".into(),
            });
        }
        let mut counts = SentimentCounts::default();
        for sentence in &doc.sentences {
            match self.compound_score(sentence).label {
                Label::Positive => counts.positive += 1,
                Label::Negative => counts.negative += 1,
                Label::Neutral => counts.neutral += 1,
            }
        }
        Ok(counts)
    }

    fn word_valence(&self, words: &[String], lower: &[String], cap_diff: bool, i: usize) -> F {
        let Some(base) = self.lexicon.get(&lower[i]) else {
            return F::zero();
        };
        let mut valence = base;
        let n = words.len();

        // "no" right before another lexicon word acts as a negator, not as
        // a scored token
        if lower[i] == "no" && i != n - 1 && self.lexicon.contains(&lower[i + 1]) {
            valence = F::zero();
        }
        if (i > 0 && lower[i - 1] == "no")
            || (i > 1 && lower[i - 2] == "no")
            || (i > 2 && lower[i - 3] == "no" && (lower[i - 1] == "or" || lower[i - 1] == "nor"))
        {
            valence = base * F::constant(NEGATION_SCALAR);
        }

        if is_all_caps(&words[i]) && cap_diff {
            if valence > F::zero() {
                valence += F::constant(CAPS_EMPHASIS);
            } else {
                valence -= F::constant(CAPS_EMPHASIS);
            }
        }

        for start_i in 0..3 {
            if i > start_i && !self.lexicon.contains(&lower[i - (start_i + 1)]) {
                let mut scalar =
                    scalar_inc_dec(&words[i - (start_i + 1)], &lower[i - (start_i + 1)], valence, cap_diff);
                if start_i == 1 && scalar != F::zero() {
                    scalar *= F::constant(BOOSTER_DISTANCE_TWO_SCALE);
                }
                if start_i == 2 && scalar != F::zero() {
                    scalar *= F::constant(BOOSTER_DISTANCE_THREE_SCALE);
                }
                valence += scalar;
                valence = negation_check(valence, lower, start_i, i);
                if start_i == 2 {
                    valence = idiom_check(valence, lower, i);
                }
            }
        }

        self.least_check(valence, lower, i)
    }

    fn least_check(&self, valence: F, lower: &[String], i: usize) -> F {
        if i > 1 && !self.lexicon.contains(&lower[i - 1]) && lower[i - 1] == "least" {
            if lower[i - 2] != "at" && lower[i - 2] != "very" {
                return valence * F::constant(NEGATION_SCALAR);
            }
            valence
        } else if i > 0 && !self.lexicon.contains(&lower[i - 1]) && lower[i - 1] == "least" {
            valence * F::constant(NEGATION_SCALAR)
        } else {
            valence
        }
    }
}

fn scalar_inc_dec<F: Real>(word: &str, word_lower: &str, valence: F, cap_diff: bool) -> F {
    let Some(&boost) = BOOSTER_MAP.get(word_lower) else {
        return F::zero();
    };
    let mut scalar = F::constant(boost);
    if valence < F::zero() {
        scalar = -scalar;
    }
    if is_all_caps(word) && cap_diff {
        if valence > F::zero() {
            scalar += F::constant(CAPS_EMPHASIS);
        } else {
            scalar -= F::constant(CAPS_EMPHASIS);
        }
    }
    scalar
}

fn negation_check<F: Real>(mut valence: F, lower: &[String], start_i: usize, i: usize) -> F {
    let neg = F::constant(NEGATION_SCALAR);
    let never = F::constant(NEVER_INTENSIFIER_SCALE);
    match start_i {
        0 => {
            if negates(&lower[i - 1]) {
                valence *= neg;
            }
        }
        1 => {
            if lower[i - 2] == "never" && (lower[i - 1] == "so" || lower[i - 1] == "this") {
                valence *= never;
            } else if lower[i - 2] == "without" && lower[i - 1] == "doubt" {
                // exempt from negation
            } else if negates(&lower[i - 2]) {
                valence *= neg;
            }
        }
        2 => {
            // the second disjunct fires on a bare "so"/"this" at distance
            // one, with or without "never"; this mirrors the reference
            if (lower[i - 3] == "never" && (lower[i - 2] == "so" || lower[i - 2] == "this"))
                || (lower[i - 1] == "so" || lower[i - 1] == "this")
            {
                valence *= never;
            } else if lower[i - 3] == "without"
                && (lower[i - 2] == "doubt" || lower[i - 1] == "doubt")
            {
                // exempt from negation
            } else if negates(&lower[i - 3]) {
                valence *= neg;
            }
        }
        _ => unreachable!("negation window is at most a trigram"),
    }
    valence
}

/// Multiword idiom pass, reached while scoring the word at `i` once the
/// scan is three tokens deep (`i > 2`).
fn idiom_check<F: Real>(mut valence: F, lower: &[String], i: usize) -> F {
    let onezero = format!("{} {}", lower[i - 1], lower[i]);
    let twoonezero = format!("{} {} {}", lower[i - 2], lower[i - 1], lower[i]);
    let twoone = format!("{} {}", lower[i - 2], lower[i - 1]);
    let threetwoone = format!("{} {} {}", lower[i - 3], lower[i - 2], lower[i - 1]);
    let threetwo = format!("{} {}", lower[i - 3], lower[i - 2]);

    for seq in [&onezero, &twoonezero, &twoone, &threetwoone, &threetwo] {
        if let Some(&idiom) = IDIOM_MAP.get(seq.as_str()) {
            valence = F::constant(idiom);
            break;
        }
    }

    let n = lower.len();
    if n - 1 > i {
        let zeroone = format!("{} {}", lower[i], lower[i + 1]);
        if let Some(&idiom) = IDIOM_MAP.get(zeroone.as_str()) {
            valence = F::constant(idiom);
        }
    }
    if n - 1 > i + 1 {
        let zeroonetwo = format!("{} {} {}", lower[i], lower[i + 1], lower[i + 2]);
        if let Some(&idiom) = IDIOM_MAP.get(zeroonetwo.as_str()) {
            valence = F::constant(idiom);
        }
    }

    for gram in [&threetwoone, &threetwo, &twoone] {
        if let Some(&boost) = BOOSTER_MAP.get(gram.as_str()) {
            valence += F::constant(boost);
        }
    }
    valence
}

/// Clause weighting around the first "but": earlier sentiments are halved,
/// later ones amplified. The value-equality index lookup reproduces the
/// reference pass verbatim.
fn but_check<F: Real>(lower: &[String], sentiments: &mut [F]) {
    let Some(but_index) = lower.iter().position(|w| w == "but") else {
        return;
    };
    for k in 0..sentiments.len() {
        let sentiment = sentiments[k];
        let si = sentiments
            .iter()
            .position(|&s| s == sentiment)
            .expect("value read from the slice is present");
        if si < but_index {
            sentiments[si] = sentiment * F::constant(BUT_PRE_CLAUSE_SCALE);
        } else if si > but_index {
            sentiments[si] = sentiment * F::constant(BUT_POST_CLAUSE_SCALE);
        }
    }
}

fn punctuation_emphasis<F: Real>(text: &str) -> F {
    let exclamations = text
        .chars()
        .filter(|&c| c == '!')
        .count()
        .min(EXCLAMATION_MAX_COUNT);
    let ep = F::constant(exclamations as f64) * F::constant(EXCLAMATION_INCREMENT);
    let questions = text.chars().filter(|&c| c == '?').count();
    let qm = if questions > 1 {
        if questions <= 3 {
            F::constant(questions as f64) * F::constant(QUESTION_PAIR_INCREMENT)
        } else {
            F::constant(QUESTION_MAX_EMPHASIS)
        }
    } else {
        F::zero()
    };
    ep + qm
}
