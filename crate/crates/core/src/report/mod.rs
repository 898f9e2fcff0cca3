//! Report emission: the summary tables plus the per-party chart set and the
//! correlation heatmap, laid out as
//!
//! ```text
//! tables/summary.csv
//! tables/summary.json
//! charts/<party>_sentiment.svg
//! charts/<party>_tja.svg
//! charts/<party>_fasd.svg
//! charts/<party>_all.svg
//! charts/correlation_heatmap.svg
//! ```

mod chart;
mod heatmap;
mod table;

pub use chart::{palette_color, render_line_chart, ChartSpec, Series, SeriesGroup};
pub use heatmap::render_heatmap;
pub use table::{emit_table, TableFormat, CSV_HEADER};

use std::path::PathBuf;

use crate::affect::{AffectCategory, EmotionGroup};
use crate::analytics::{CorrelationMatrix, ElectionRow, PartySeries};
use crate::num::Real;
use crate::Result;

/// One rendered artifact and its path relative to the output directory.
#[derive(Debug, Clone)]
pub struct OutputFile {
    pub path: PathBuf,
    pub bytes: Vec<u8>,
}

fn file_safe(party: &str) -> String {
    party
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c.to_ascii_lowercase() } else { '_' })
        .collect()
}

fn affect_series<F: Real>(
    series: &PartySeries<F>,
    categories: &[AffectCategory],
) -> Vec<Series<F>> {
    categories
        .iter()
        .map(|&c| Series {
            name: c.name().to_string(),
            points: series.affect_series(c).to_vec(),
        })
        .collect()
}

/// Renders every report artifact in memory, in a fixed order.
pub fn render_report<F: Real>(
    rows: &[ElectionRow<F>],
    series: &[PartySeries<F>],
    matrix: &CorrelationMatrix<F>,
    table_formats: &[TableFormat],
) -> Result<Vec<OutputFile>> {
    let mut files = Vec::new();
    for &format in table_formats {
        let (name, bytes) = match format {
            TableFormat::Csv => ("summary.csv", emit_table(rows, format)?),
            TableFormat::Json => ("summary.json", emit_table(rows, format)?),
        };
        files.push(OutputFile {
            path: PathBuf::from("tables").join(name),
            bytes,
        });
    }

    for party_series in series {
        let party = file_safe(&party_series.party);
        let years = party_series.years.clone();

        let sentiment = ChartSpec::new(
            format!("{} sentiment shares by election", party_series.party),
            "share of sentences (%)",
            years.clone(),
            SeriesGroup::Sentiment,
            vec![
                Series {
                    name: "positive".into(),
                    points: party_series.pos_share.clone(),
                },
                Series {
                    name: "negative".into(),
                    points: party_series.neg_share.clone(),
                },
                Series {
                    name: "neutral".into(),
                    points: party_series.neut_share.clone(),
                },
            ],
        )?;
        let tja = ChartSpec::new(
            format!("{} trust, joy, and anticipation", party_series.party),
            "affect frequency",
            years.clone(),
            SeriesGroup::Tja,
            affect_series(party_series, EmotionGroup::Tja.members()),
        )?;
        let fasd = ChartSpec::new(
            format!("{} fear, anger, sadness, and disgust", party_series.party),
            "affect frequency",
            years.clone(),
            SeriesGroup::Fasd,
            affect_series(party_series, EmotionGroup::Fasd.members()),
        )?;
        let all = ChartSpec::new(
            format!("{} emotion-associated content", party_series.party),
            "affect frequency",
            years,
            SeriesGroup::All,
            affect_series(party_series, &AffectCategory::ALL),
        )?;

        for (suffix, spec) in [("sentiment", sentiment), ("tja", tja), ("fasd", fasd), ("all", all)]
        {
            files.push(OutputFile {
                path: PathBuf::from("charts").join(format!("{party}_{suffix}.svg")),
                bytes: render_line_chart(&spec)?,
            });
        }
    }

    files.push(OutputFile {
        path: PathBuf::from("charts").join("correlation_heatmap.svg"),
        bytes: render_heatmap(matrix)?,
    });
    Ok(files)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn party_names_become_file_safe() {
        assert_eq!(file_safe("Labour"), "labour");
        assert_eq!(file_safe("lib dem"), "lib_dem");
        assert_eq!(file_safe("S&D/21"), "s_d_21");
    }
}
