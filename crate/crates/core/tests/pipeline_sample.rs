//! End-to-end pipeline runs over the bundled sample corpus.

use std::path::{Path, PathBuf};

use emotrend_core::pipeline::{run_analyze, RunConfig};
use emotrend_core::Error;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn sample_config(out: &Path) -> RunConfig {
    RunConfig::new(
        data("sample_corpus/manifest.json"),
        data("valence_lexicon.txt"),
        data("affect_lexicon.txt"),
        out,
    )
}

#[test]
fn sample_corpus_produces_the_full_output_tree() {
    let dir = tempfile::tempdir().unwrap();
    let report = run_analyze(&sample_config(dir.path())).unwrap();

    assert_eq!(report.summaries.len(), 12);
    assert_eq!(report.rows.len(), 12);
    for summary in &report.summaries {
        assert!(summary.sentences > 0);
        let total = summary.pos_share + summary.neg_share + summary.neut_share;
        assert!((total - 100.0).abs() <= 0.01, "{summary}");
    }

    // corpus total carries through to the analytics rows unchanged
    let corpus_total: usize = report.summaries.iter().map(|s| s.sentences).sum();
    let row_total: usize = report.rows.iter().map(|r| r.sentences).sum();
    assert_eq!(corpus_total, row_total);

    let csv = std::fs::read_to_string(dir.path().join("tables/summary.csv")).unwrap();
    assert_eq!(csv.lines().count(), 13, "header plus one line per document");

    let expected = [
        "tables/summary.csv",
        "tables/summary.json",
        "charts/labour_sentiment.svg",
        "charts/labour_tja.svg",
        "charts/labour_fasd.svg",
        "charts/labour_all.svg",
        "charts/conservative_sentiment.svg",
        "charts/conservative_tja.svg",
        "charts/conservative_fasd.svg",
        "charts/conservative_all.svg",
        "charts/correlation_heatmap.svg",
    ];
    for rel in expected {
        assert!(dir.path().join(rel).is_file(), "missing {rel}");
    }
    assert_eq!(report.written.len(), expected.len());
}

#[test]
fn single_table_format_restricts_the_tables() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = sample_config(dir.path());
    config.table_formats = vec![emotrend_core::report::TableFormat::Csv];
    run_analyze(&config).unwrap();
    assert!(dir.path().join("tables/summary.csv").is_file());
    assert!(!dir.path().join("tables/summary.json").exists());
}

#[test]
fn missing_document_fails_with_its_path_and_writes_nothing() {
    let corpus = tempfile::tempdir().unwrap();
    std::fs::write(corpus.path().join("present.txt"), "Fine words. More words.").unwrap();
    std::fs::write(
        corpus.path().join("manifest.json"),
        r#"[{"party": "labour", "year": 2001, "gov_status": "incumbent", "path": "present.txt"},
            {"party": "labour", "year": 2005, "gov_status": "incumbent", "path": "absent.txt"}]"#,
    )
    .unwrap();

    let out = tempfile::tempdir().unwrap();
    let mut config = sample_config(out.path());
    config.manifest_path = corpus.path().join("manifest.json");
    let err = run_analyze(&config).unwrap_err();
    assert!(err.to_string().contains("absent.txt"), "{err}");
    assert!(
        std::fs::read_dir(out.path()).unwrap().next().is_none(),
        "output dir must stay empty on failure"
    );
}

#[test]
fn zero_parallelism_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = sample_config(dir.path());
    config.parallelism = 0;
    let err = run_analyze(&config).unwrap_err();
    assert!(matches!(err, Error::Config(_)));
    assert!(err.is_input_error());
}

#[test]
fn unreadable_lexicon_path_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = sample_config(dir.path());
    config.valence_lexicon_path = PathBuf::from("/nonexistent/lexicon.txt");
    let err = run_analyze(&config).unwrap_err();
    assert!(err.is_input_error());
    assert!(err.to_string().contains("/nonexistent/lexicon.txt"));
}
