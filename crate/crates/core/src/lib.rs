//! Corpus emotion analytics for longitudinal document collections.
//!
//! The crate ingests a manifest of plain-text documents (one per party and
//! election year), scores every sentence with a rule-based valence engine,
//! profiles word-emotion affect frequencies over lemmatized text, derives
//! per-election share and change metrics plus a status correlation matrix,
//! and emits the results as CSV/JSON tables and deterministic SVG charts.
//!
//! Modules follow the pipeline order:
//!
//! - [`corpus`]: manifest loading, text cleaning, sentence segmentation,
//!   tokenization, lemmatization.
//! - [`valence`]: lexicon-driven sentence scoring with contextual heuristics
//!   and compound-score normalization.
//! - [`affect`]: word-emotion association counting and frequency profiles.
//! - [`analytics`]: sentiment shares, inter-election changes, per-party
//!   series, and Pearson/Spearman correlation.
//! - [`report`]: table and chart emission.
//! - [`pipeline`]: end-to-end orchestration used by the CLI.

pub mod affect;
pub mod analytics;
pub mod corpus;
mod error;
pub mod num;
pub mod pipeline;
pub mod report;
pub mod valence;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Double-precision aliases for the generic core types; these are what the
/// CLI pipeline uses.
pub type ValenceLexicon = valence::ValenceLexicon<f64>;
pub type SentenceScore = valence::SentenceScore<f64>;
pub type AffectProfile = affect::AffectProfile<f64>;
pub type ElectionRow = analytics::ElectionRow<f64>;
pub type CorrelationMatrix = analytics::CorrelationMatrix<f64>;
pub type ChartSpec = report::ChartSpec<f64>;
