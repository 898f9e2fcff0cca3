//! Command-line behavior: flags, config-file merging, output format, and
//! exit codes (0 success, 1 input/config error, 2 processing error).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn emotrend(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_emotrend"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn score_prints_compound_and_label() {
    let lexicon = data("valence_lexicon.txt");
    let out = emotrend(&["score", "good", "--valence-lexicon", lexicon.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0.4404 positive");

    let out = emotrend(&["score", "not good", "--valence-lexicon", lexicon.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "-0.3412 negative");

    let out = emotrend(&["score", "", "--valence-lexicon", lexicon.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "0.0000 neutral");
}

#[test]
fn affect_prints_all_ten_categories_and_hits() {
    let lexicon = data("affect_lexicon.txt");
    let out = emotrend(&["affect", "happy happy fear", "--affect-lexicon", lexicon.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(lines.contains(&"joy 0.2000"));
    assert!(lines.contains(&"fear 0.1000"));
    assert_eq!(lines[10], "hits 10");
}

#[test]
fn analyze_prints_a_summary_line_per_document() {
    let dir = tempfile::tempdir().unwrap();
    let out = emotrend(&[
        "analyze",
        "--manifest",
        data("sample_corpus/manifest.json").to_str().unwrap(),
        "--valence-lexicon",
        data("valence_lexicon.txt").to_str().unwrap(),
        "--affect-lexicon",
        data("affect_lexicon.txt").to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 12);
    assert!(text.lines().next().unwrap().starts_with("labour 2001 "));
}

#[test]
fn missing_required_flag_exits_one() {
    let out = emotrend(&["analyze"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--manifest"));
}

#[test]
fn unknown_flag_exits_one() {
    let out = emotrend(&["analyze", "--bogus"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_manifest_path_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = emotrend(&[
        "analyze",
        "--manifest",
        "/nonexistent/manifest.json",
        "--valence-lexicon",
        data("valence_lexicon.txt").to_str().unwrap(),
        "--affect-lexicon",
        data("affect_lexicon.txt").to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn corpus_with_no_usable_sentences_exits_two() {
    let corpus = tempfile::tempdir().unwrap();
    // the document exists but cleans down to nothing
    std::fs::write(corpus.path().join("empty.txt"), "https://example.com\n\n").unwrap();
    std::fs::write(
        corpus.path().join("manifest.json"),
        r#"[{"party": "labour", "year": 2001, "gov_status": "incumbent", "path": "empty.txt"}]"#,
    )
    .unwrap();
    let dir = tempfile::tempdir().unwrap();
    let out = emotrend(&[
        "analyze",
        "--manifest",
        corpus.path().join("manifest.json").to_str().unwrap(),
        "--valence-lexicon",
        data("valence_lexicon.txt").to_str().unwrap(),
        "--affect-lexicon",
        data("affect_lexicon.txt").to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("labour 2001"));
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let config_path = dir.path().join("emotrend.toml");
    std::fs::write(
        &config_path,
        format!(
            "manifest = {:?}\nvalence_lexicon = {:?}\naffect_lexicon = {:?}\nout = {:?}\nformat = \"json\"\n",
            data("sample_corpus/manifest.json"),
            data("valence_lexicon.txt"),
            data("affect_lexicon.txt"),
            dir.path().join("from_config")
        ),
    )
    .unwrap();

    // everything from the file
    let out = emotrend(&["analyze", "--config", config_path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(dir.path().join("from_config/tables/summary.json").is_file());
    assert!(!dir.path().join("from_config/tables/summary.csv").exists());

    // --format on the command line overrides the file's json
    let out = emotrend(&[
        "analyze",
        "--config",
        config_path.to_str().unwrap(),
        "--out",
        dir.path().join("from_flag").to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert!(dir.path().join("from_flag/tables/summary.csv").is_file());
    assert!(!dir.path().join("from_flag/tables/summary.json").exists());
}

#[test]
fn boundary_mode_flag_changes_tie_handling() {
    // craft a lexicon whose single word normalizes to exactly 0.05: start
    // from the closed form and walk ulps until the float result is exact
    let mut x = 0.05 * (15.0f64 / (1.0 - 0.0025)).sqrt();
    let normalize = |v: f64| v / (v * v + 15.0).sqrt();
    for _ in 0..10_000 {
        match normalize(x).partial_cmp(&0.05).unwrap() {
            std::cmp::Ordering::Equal => break,
            std::cmp::Ordering::Less => x = f64::from_bits(x.to_bits() + 1),
            std::cmp::Ordering::Greater => x = f64::from_bits(x.to_bits() - 1),
        }
    }
    assert_eq!(normalize(x), 0.05, "no exact boundary value found");

    let dir = tempfile::tempdir().unwrap();
    let lexicon = dir.path().join("tiny.txt");
    std::fs::write(&lexicon, format!("edge\t{x:e}\t0.1\t[0]\n")).unwrap();

    let strict = emotrend(&["score", "edge", "--valence-lexicon", lexicon.to_str().unwrap()]);
    let inclusive = emotrend(&[
        "score",
        "edge",
        "--valence-lexicon",
        lexicon.to_str().unwrap(),
        "--boundary-mode",
        "inclusive_reference",
    ]);
    assert_eq!(stdout(&strict).trim(), "0.0500 neutral");
    assert_eq!(stdout(&inclusive).trim(), "0.0500 positive");
}
