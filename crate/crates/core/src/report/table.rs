//! Summary-table emission. CSV and JSON carry the same nine fields per
//! (party, year) row; shares print at three decimals, changes at two.

use serde::Serialize;

use crate::analytics::ElectionRow;
use crate::num::Real;
use crate::{Error, Result};

pub const CSV_HEADER: &str =
    "party,year,sentences,gov_status,pos_share,pos_change,neg_share,neg_change,neut_share";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    party: &'a str,
    year: i32,
    sentences: usize,
    gov_status: String,
    pos_share: f64,
    pos_change: f64,
    neg_share: f64,
    neg_change: f64,
    neut_share: f64,
}

/// Serializes rows in the given format. Emission order is the row order,
/// which [`crate::analytics::assemble_rows`] keeps year-ascending per party.
pub fn emit_table<F: Real>(rows: &[ElectionRow<F>], format: TableFormat) -> Result<Vec<u8>> {
    if rows.is_empty() {
        return Err(Error::Report("cannot emit an empty table".into()));
    }
    match format {
        TableFormat::Csv => {
            let mut out = String::with_capacity(64 * (rows.len() + 1));
            out.push_str(CSV_HEADER);
            out.push('\n');
            for row in rows {
                out.push_str(&format!(
                    "{},{},{},{},{:.3},{:.2},{:.3},{:.2},{:.3}\n",
                    row.party,
                    row.year,
                    row.sentences,
                    row.gov_status,
                    row.pos_share,
                    row.pos_change,
                    row.neg_share,
                    row.neg_change,
                    row.neut_share
                ));
            }
            Ok(out.into_bytes())
        }
        TableFormat::Json => {
            let json_rows: Vec<JsonRow<'_>> = rows
                .iter()
                .map(|row| JsonRow {
                    party: &row.party,
                    year: row.year,
                    sentences: row.sentences,
                    gov_status: row.gov_status.to_string(),
                    pos_share: to_f64(row.pos_share),
                    pos_change: to_f64(row.pos_change),
                    neg_share: to_f64(row.neg_share),
                    neg_change: to_f64(row.neg_change),
                    neut_share: to_f64(row.neut_share),
                })
                .collect();
            let mut bytes = serde_json::to_vec_pretty(&json_rows)
                .map_err(|e| Error::Report(format!("json serialization failed: {e}")))?;
            bytes.push(b'\n');
            Ok(bytes)
        }
    }
}

fn to_f64<F: Real>(value: F) -> f64 {
    value.to_f64().expect("Real converts to f64")
}
