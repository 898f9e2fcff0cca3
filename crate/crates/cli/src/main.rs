//! `emotrend` command line: `analyze` runs the full corpus pipeline,
//! `score` and `affect` expose the two engines for single inputs.
//!
//! Exit codes: 0 success, 1 input or configuration error, 2 processing
//! error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use emotrend_core::corpus::CorpusResources;
use emotrend_core::pipeline::{self, RunConfig};
use emotrend_core::report::TableFormat;
use emotrend_core::valence::BoundaryMode;
use emotrend_core::{AffectProfile, Error};

mod config_file;

use config_file::ConfigFile;

#[derive(Parser)]
#[command(
    name = "emotrend",
    about = "Corpus emotion analytics: valence scoring, affect profiling, and longitudinal reports",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline over a corpus manifest and write the report tree
    Analyze(AnalyzeArgs),
    /// Score one sentence and print its compound valence and label
    Score(ScoreArgs),
    /// Print the affect frequency profile of one text
    Affect(AffectArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BoundaryModeArg {
    /// scores of exactly +/-0.05 classify as neutral
    #[value(name = "strict_paper")]
    StrictPaper,
    /// +/-0.05 already count as positive/negative, like the reference scorer
    #[value(name = "inclusive_reference")]
    InclusiveReference,
}

impl From<BoundaryModeArg> for BoundaryMode {
    fn from(arg: BoundaryModeArg) -> Self {
        match arg {
            BoundaryModeArg::StrictPaper => BoundaryMode::StrictPaper,
            BoundaryModeArg::InclusiveReference => BoundaryMode::InclusiveReference,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Corpus manifest (JSON array of {party, year, gov_status, path})
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Valence lexicon file (token, mean, stddev, ratings; tab-separated)
    #[arg(long)]
    valence_lexicon: Option<PathBuf>,
    /// Affect lexicon file (word, category, flag; tab-separated)
    #[arg(long)]
    affect_lexicon: Option<PathBuf>,
    /// Output directory for tables/ and charts/
    #[arg(long)]
    out: Option<PathBuf>,
    /// Classification behavior at compound scores of exactly +/-0.05
    #[arg(long, value_enum)]
    boundary_mode: Option<BoundaryModeArg>,
    /// Worker pool size; defaults to the number of CPUs
    #[arg(long)]
    parallelism: Option<usize>,
    /// Emit only this table format instead of both
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Optional TOML config file; command-line flags win over its values
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct ScoreArgs {
    /// The sentence to score
    sentence: String,
    #[arg(long)]
    valence_lexicon: Option<PathBuf>,
    #[arg(long, value_enum)]
    boundary_mode: Option<BoundaryModeArg>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct AffectArgs {
    /// The text to profile
    text: String,
    #[arg(long)]
    affect_lexicon: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Prints one stdout line, exiting quietly if the reader closed the pipe.
fn emit(line: std::fmt::Arguments<'_>) {
    use std::io::Write;
    if writeln!(std::io::stdout(), "{line}").is_err() {
        std::process::exit(0);
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's help/version output is not an error
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let outcome = match cli.command {
        Command::Analyze(args) => run_analyze(args),
        Command::Score(args) => run_score(args),
        Command::Affect(args) => run_affect(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 1 } else { 2 })
        }
    }
}

fn run_analyze(args: AnalyzeArgs) -> Result<(), Error> {
    let file = ConfigFile::load(args.config.as_deref())?;
    let manifest = args
        .manifest
        .or_else(|| file.manifest.clone())
        .ok_or_else(|| Error::Config("--manifest is required".into()))?;
    let valence = args
        .valence_lexicon
        .or_else(|| file.valence_lexicon.clone())
        .ok_or_else(|| Error::Config("--valence-lexicon is required".into()))?;
    let affect = args
        .affect_lexicon
        .or_else(|| file.affect_lexicon.clone())
        .ok_or_else(|| Error::Config("--affect-lexicon is required".into()))?;
    let out = args
        .out
        .or_else(|| file.out.clone())
        .ok_or_else(|| Error::Config("--out is required".into()))?;

    let mut config = RunConfig::new(manifest, valence, affect, out);
    if let Some(mode) = args.boundary_mode.map(BoundaryMode::from).or(file.boundary_mode()?) {
        config.boundary_mode = mode;
    }
    if let Some(parallelism) = args.parallelism.or(file.parallelism) {
        config.parallelism = parallelism;
    }
    let format = match args.format {
        Some(FormatArg::Csv) => Some(TableFormat::Csv),
        Some(FormatArg::Json) => Some(TableFormat::Json),
        None => file.table_format()?,
    };
    if let Some(format) = format {
        config.table_formats = vec![format];
    }

    let report = pipeline::run_analyze(&config)?;
    for summary in &report.summaries {
        emit(format_args!("{summary}"));
    }
    Ok(())
}

fn run_score(args: ScoreArgs) -> Result<(), Error> {
    let file = ConfigFile::load(args.config.as_deref())?;
    let lexicon_path = args
        .valence_lexicon
        .or_else(|| file.valence_lexicon.clone())
        .ok_or_else(|| Error::Config("--valence-lexicon is required".into()))?;
    let mode = args
        .boundary_mode
        .map(BoundaryMode::from)
        .or(file.boundary_mode()?)
        .unwrap_or_default();
    let lexicon = emotrend_core::ValenceLexicon::from_path(&lexicon_path)?;
    let resources = CorpusResources::embedded();
    let score = pipeline::score_sentence(&args.sentence, &lexicon, mode, &resources);
    emit(format_args!("{:.4} {}", score.compound, score.label));
    Ok(())
}

fn run_affect(args: AffectArgs) -> Result<(), Error> {
    let file = ConfigFile::load(args.config.as_deref())?;
    let lexicon_path = args
        .affect_lexicon
        .or_else(|| file.affect_lexicon.clone())
        .ok_or_else(|| Error::Config("--affect-lexicon is required".into()))?;
    let lexicon = emotrend_core::affect::AffectLexicon::from_path(&lexicon_path)?;
    let resources = CorpusResources::embedded();
    let profile: AffectProfile = pipeline::affect_profile_for_text(&args.text, &lexicon, &resources);
    for (category, frequency) in profile.iter() {
        emit(format_args!("{category} {frequency:.4}"));
    }
    emit(format_args!("hits {}", profile.total_hits()));
    Ok(())
}
