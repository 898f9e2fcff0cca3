//! End-to-end orchestration: load -> clean -> segment -> score -> profile ->
//! analyze -> report.
//!
//! Documents fan out to a worker pool bounded by `parallelism`; every shared
//! table is read-only after startup and results merge in manifest order, so
//! identical inputs produce byte-identical outputs at any parallelism level.

use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::affect::{profile_lemmas, AffectLexicon};
use crate::analytics::{assemble_rows, build_series, correlation_matrix, DocumentStats};
use crate::corpus::{self, normalize_for_affect, CorpusResources, DocumentRecord, ManifestEntry};
use crate::num::Real;
use crate::report::{render_report, TableFormat};
use crate::valence::{BoundaryMode, SentimentEngine, ValenceLexicon};
use crate::{Error, Result};

/// Everything a full `analyze` run needs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub manifest_path: PathBuf,
    pub valence_lexicon_path: PathBuf,
    pub affect_lexicon_path: PathBuf,
    pub output_dir: PathBuf,
    pub boundary_mode: BoundaryMode,
    pub parallelism: usize,
    /// Table formats to emit; both by default.
    pub table_formats: Vec<TableFormat>,
}

impl RunConfig {
    pub fn new(
        manifest_path: impl Into<PathBuf>,
        valence_lexicon_path: impl Into<PathBuf>,
        affect_lexicon_path: impl Into<PathBuf>,
        output_dir: impl Into<PathBuf>,
    ) -> Self {
        Self {
            manifest_path: manifest_path.into(),
            valence_lexicon_path: valence_lexicon_path.into(),
            affect_lexicon_path: affect_lexicon_path.into(),
            output_dir: output_dir.into(),
            boundary_mode: BoundaryMode::default(),
            parallelism: default_parallelism(),
            table_formats: vec![TableFormat::Csv, TableFormat::Json],
        }
    }

    fn validate(&self) -> Result<()> {
        if self.parallelism == 0 {
            return Err(Error::Config("parallelism must be at least 1".into()));
        }
        if self.table_formats.is_empty() {
            return Err(Error::Config("at least one table format is required".into()));
        }
        for path in [
            &self.manifest_path,
            &self.valence_lexicon_path,
            &self.affect_lexicon_path,
        ] {
            if !path.is_file() {
                return Err(Error::Config(format!("not a readable file: {}", path.display())));
            }
        }
        Ok(())
    }
}

pub fn default_parallelism() -> usize {
    std::thread::available_parallelism().map(usize::from).unwrap_or(1)
}

/// One line of the per-document console summary.
#[derive(Debug, Clone)]
pub struct DocumentSummary {
    pub party: String,
    pub year: i32,
    pub sentences: usize,
    pub pos_share: f64,
    pub neg_share: f64,
    pub neut_share: f64,
}

impl std::fmt::Display for DocumentSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {} {} {:.3} {:.3} {:.3}",
            self.party, self.year, self.sentences, self.pos_share, self.neg_share, self.neut_share
        )
    }
}

/// What a successful run produced.
#[derive(Debug)]
pub struct RunReport {
    /// One entry per manifest document, in manifest order.
    pub summaries: Vec<DocumentSummary>,
    /// The summary rows, grouped by party and year-ascending.
    pub rows: Vec<crate::ElectionRow>,
    /// Absolute paths of every file written.
    pub written: Vec<PathBuf>,
}

fn process_entry(
    entry: &ManifestEntry,
    resources: &CorpusResources,
    engine: &SentimentEngine<'_, f64>,
    affect_lexicon: &AffectLexicon,
) -> Result<DocumentStats<f64>> {
    let raw = std::fs::read_to_string(&entry.path).map_err(|e| Error::io(&entry.path, e))?;
    let doc = DocumentRecord::from_raw_text(entry, &raw, resources)?;
    let counts = engine.analyze_document(&doc)?;
    let mut lemmas = Vec::new();
    for sentence in &doc.sentences {
        lemmas.extend(normalize_for_affect(sentence, &resources.lemmatizer));
    }
    let affect = profile_lemmas(&lemmas, affect_lexicon);
    Ok(DocumentStats {
        party: doc.party,
        year: doc.year,
        gov_status: doc.gov_status,
        sentences: doc.sentences.len(),
        counts,
        affect,
    })
}

/// Runs the full pipeline and writes the report tree under
/// `config.output_dir`. On failure nothing is left behind: files already
/// written are removed before the error is returned.
pub fn run_analyze(config: &RunConfig) -> Result<RunReport> {
    config.validate()?;
    let resources = CorpusResources::embedded();
    let valence_lexicon = ValenceLexicon::<f64>::from_path(&config.valence_lexicon_path)?;
    let affect_lexicon = AffectLexicon::from_path(&config.affect_lexicon_path)?;
    let engine = SentimentEngine::new(&valence_lexicon, config.boundary_mode);
    let manifest = corpus::load_manifest(&config.manifest_path)?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| Error::Config(format!("cannot build worker pool: {e}")))?;
    let stats: Result<Vec<DocumentStats<f64>>> = pool.install(|| {
        manifest
            .entries
            .par_iter()
            .map(|entry| process_entry(entry, &resources, &engine, &affect_lexicon))
            .collect()
    });
    let stats = stats?;

    let rows = assemble_rows(&stats)?;
    let series = build_series(&rows)?;
    let matrix = correlation_matrix(&rows)?;
    let files = render_report(&rows, &series, &matrix, &config.table_formats)?;

    // summaries follow manifest order, whatever the row grouping is
    let mut summaries = Vec::with_capacity(manifest.entries.len());
    for entry in &manifest.entries {
        let row = rows
            .iter()
            .find(|r| r.party == entry.party && r.year == entry.year)
            .expect("every manifest entry produced a row");
        summaries.push(DocumentSummary {
            party: row.party.clone(),
            year: row.year,
            sentences: row.sentences,
            pos_share: row.pos_share,
            neg_share: row.neg_share,
            neut_share: row.neut_share,
        });
    }

    let written = write_files(&config.output_dir, files)?;
    Ok(RunReport {
        summaries,
        rows,
        written,
    })
}

fn write_files(root: &Path, files: Vec<crate::report::OutputFile>) -> Result<Vec<PathBuf>> {
    let mut written: Vec<PathBuf> = Vec::with_capacity(files.len());
    for file in &files {
        let full = root.join(&file.path);
        let result = full
            .parent()
            .map(std::fs::create_dir_all)
            .unwrap_or(Ok(()))
            .and_then(|()| std::fs::write(&full, &file.bytes));
        if let Err(e) = result {
            for path in &written {
                let _ = std::fs::remove_file(path);
            }
            return Err(Error::io(full, e));
        }
        written.push(full);
    }
    Ok(written)
}

/// Affect profile of one free-standing text, using the same cleaning and
/// normalization as the full pipeline. Backs the `affect` CLI subcommand.
pub fn affect_profile_for_text<F: Real>(
    text: &str,
    affect_lexicon: &AffectLexicon,
    resources: &CorpusResources,
) -> crate::affect::AffectProfile<F> {
    let cleaned = corpus::clean_text(text, &resources.unicode_map);
    let lemmas = normalize_for_affect(&cleaned, &resources.lemmatizer);
    profile_lemmas(&lemmas, affect_lexicon)
}

/// Compound score of one sentence after standard cleaning. Backs the
/// `score` CLI subcommand.
pub fn score_sentence<F: Real>(
    sentence: &str,
    lexicon: &ValenceLexicon<F>,
    mode: BoundaryMode,
    resources: &CorpusResources,
) -> crate::valence::SentenceScore<F> {
    let cleaned = corpus::clean_text(sentence, &resources.unicode_map);
    SentimentEngine::new(lexicon, mode).compound_score(&cleaned)
}
