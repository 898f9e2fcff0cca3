//! Rule-based valence scoring: lexicon plus contextual heuristics, compound
//! normalization into [-1, 1], and ternary classification at +/-0.05.

pub mod constants;
mod engine;
mod lexicon;

pub use engine::{
    classify, normalize_score, scoring_words, BoundaryMode, Label, SentenceScore, SentimentCounts,
    SentimentEngine,
};
pub use lexicon::ValenceLexicon;
