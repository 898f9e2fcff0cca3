//! Tabular metrics and correlation analysis: per-election sentiment shares,
//! inter-election changes, per-party longitudinal series, and the
//! affect-vs-government-status correlation matrix.

use crate::affect::{AffectCategory, AffectProfile};
use crate::corpus::GovStatus;
use crate::num::{round_to, Real};
use crate::valence::SentimentCounts;
use crate::{Error, Result};

/// Percentage shares of positive/negative/neutral sentences, at three
/// decimal places. The three always sum to 100 within rounding.
pub fn sentiment_shares<F: Real>(counts: &SentimentCounts) -> Result<(F, F, F)> {
    let total = counts.total();
    if total == 0 {
        return Err(Error::Analytics("cannot compute shares of zero sentences".into()));
    }
    let share = |n: usize| {
        round_to(
            F::constant(100.0) * F::constant(n as f64) / F::constant(total as f64),
            3,
        )
    };
    Ok((share(counts.positive), share(counts.negative), share(counts.neutral)))
}

/// Deltas of a year-ordered share series against the previous election, at
/// two decimal places. The first election's delta is 0.0 by definition.
pub fn share_change<F: Real>(series: &[F]) -> Result<Vec<F>> {
    if series.is_empty() {
        return Err(Error::Analytics("cannot compute changes of an empty series".into()));
    }
    let mut deltas = Vec::with_capacity(series.len());
    deltas.push(F::zero());
    for window in series.windows(2) {
        deltas.push(round_to(window[1] - window[0], 2));
    }
    Ok(deltas)
}

/// Raw per-document results handed over by the pipeline.
#[derive(Debug, Clone)]
pub struct DocumentStats<F> {
    pub party: String,
    pub year: i32,
    pub gov_status: GovStatus,
    pub sentences: usize,
    pub counts: SentimentCounts,
    pub affect: AffectProfile<F>,
}

/// One row of the summary table.
#[derive(Debug, Clone)]
pub struct ElectionRow<F> {
    pub party: String,
    pub year: i32,
    pub gov_status: GovStatus,
    pub sentences: usize,
    pub pos_share: F,
    pub neg_share: F,
    pub neut_share: F,
    pub pos_change: F,
    pub neg_change: F,
    pub affect: AffectProfile<F>,
}

/// Builds the summary rows: shares per document, then change columns within
/// each party's year-ascending series. Rows come out grouped by party in
/// first-appearance order, year-ascending within the party.
pub fn assemble_rows<F: Real>(stats: &[DocumentStats<F>]) -> Result<Vec<ElectionRow<F>>> {
    if stats.is_empty() {
        return Err(Error::Analytics("no documents to assemble".into()));
    }
    let mut parties: Vec<&str> = Vec::new();
    for s in stats {
        if !parties.contains(&s.party.as_str()) {
            parties.push(&s.party);
        }
    }
    let mut rows = Vec::with_capacity(stats.len());
    for party in parties {
        let mut group: Vec<&DocumentStats<F>> = stats.iter().filter(|s| s.party == party).collect();
        group.sort_by_key(|s| s.year);
        let mut pos_series = Vec::with_capacity(group.len());
        let mut neg_series = Vec::with_capacity(group.len());
        let mut shares = Vec::with_capacity(group.len());
        for s in &group {
            let (pos, neg, neut) = sentiment_shares::<F>(&s.counts)
                .map_err(|_| Error::Document {
                    party: s.party.clone(),
                    year: s.year,
                    reason: "document has zero sentences".into(),
                })?;
            pos_series.push(pos);
            neg_series.push(neg);
            shares.push((pos, neg, neut));
        }
        let pos_changes = share_change(&pos_series)?;
        let neg_changes = share_change(&neg_series)?;
        for (i, s) in group.iter().enumerate() {
            rows.push(ElectionRow {
                party: s.party.clone(),
                year: s.year,
                gov_status: s.gov_status,
                sentences: s.sentences,
                pos_share: shares[i].0,
                neg_share: shares[i].1,
                neut_share: shares[i].2,
                pos_change: pos_changes[i],
                neg_change: neg_changes[i],
                affect: s.affect,
            });
        }
    }
    Ok(rows)
}

/// Year-ordered share and affect series for one party.
#[derive(Debug, Clone)]
pub struct PartySeries<F> {
    pub party: String,
    pub years: Vec<i32>,
    pub pos_share: Vec<F>,
    pub neg_share: Vec<F>,
    pub neut_share: Vec<F>,
    affect: [Vec<F>; 10],
}

impl<F: Real> PartySeries<F> {
    pub fn affect_series(&self, category: AffectCategory) -> &[F] {
        &self.affect[category.index()]
    }
}

/// Splits rows into per-party longitudinal series (year ascending), one
/// series per share column and affect category.
pub fn build_series<F: Real>(rows: &[ElectionRow<F>]) -> Result<Vec<PartySeries<F>>> {
    if rows.is_empty() {
        return Err(Error::Analytics("no rows to build series from".into()));
    }
    let mut parties: Vec<&str> = Vec::new();
    for row in rows {
        if !parties.contains(&row.party.as_str()) {
            parties.push(&row.party);
        }
    }
    let mut out = Vec::with_capacity(parties.len());
    for party in parties {
        let mut group: Vec<&ElectionRow<F>> = rows.iter().filter(|r| r.party == party).collect();
        group.sort_by_key(|r| r.year);
        let mut series = PartySeries {
            party: party.to_string(),
            years: group.iter().map(|r| r.year).collect(),
            pos_share: group.iter().map(|r| r.pos_share).collect(),
            neg_share: group.iter().map(|r| r.neg_share).collect(),
            neut_share: group.iter().map(|r| r.neut_share).collect(),
            affect: Default::default(),
        };
        for category in AffectCategory::ALL {
            series.affect[category.index()] =
                group.iter().map(|r| r.affect.frequency(category)).collect();
        }
        out.push(series);
    }
    Ok(out)
}

/// Sample Pearson product-moment correlation of two equal-length vectors.
pub fn pearson<F: Real>(x: &[F], y: &[F]) -> Result<F> {
    if x.len() != y.len() {
        return Err(Error::Analytics(format!(
            "correlation length mismatch: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 2 {
        return Err(Error::Analytics("correlation needs at least two points".into()));
    }
    let n = F::constant(x.len() as f64);
    let mean = |v: &[F]| v.iter().copied().sum::<F>() / n;
    let (mx, my) = (mean(x), mean(y));
    let mut cov = F::zero();
    let mut var_x = F::zero();
    let mut var_y = F::zero();
    for (&a, &b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if var_x == F::zero() || var_y == F::zero() {
        return Err(Error::Analytics(
            "correlation undefined for a constant vector".into(),
        ));
    }
    Ok(cov / (var_x * var_y).sqrt())
}

/// Spearman rank correlation: Pearson over average ranks.
pub fn spearman<F: Real>(x: &[F], y: &[F]) -> Result<F> {
    if x.len() != y.len() {
        return Err(Error::Analytics(format!(
            "correlation length mismatch: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    pearson(&ranks(x), &ranks(y))
}

fn ranks<F: Real>(values: &[F]) -> Vec<F> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).expect("finite values"));
    let mut out = vec![F::zero(); values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        // average rank over the tie run, 1-based
        let rank = F::constant((i + j + 2) as f64) / F::constant(2.0);
        for &idx in &order[i..=j] {
            out[idx] = rank;
        }
        i = j + 1;
    }
    out
}

/// Pearson correlations between the government-status indicator and the ten
/// affect frequencies, pooled over all rows.
#[derive(Debug, Clone)]
pub struct CorrelationMatrix<F> {
    pub variables: Vec<String>,
    cells: Vec<Vec<F>>,
}

impl<F: Real> CorrelationMatrix<F> {
    pub fn size(&self) -> usize {
        self.variables.len()
    }

    pub fn cell(&self, row: usize, col: usize) -> F {
        self.cells[row][col]
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }
}

/// Builds the correlation matrix over `gov_status` (incumbent=1,
/// opposition=0) and the ten affect frequencies. Requires at least three
/// rows spanning both status values.
pub fn correlation_matrix<F: Real>(rows: &[ElectionRow<F>]) -> Result<CorrelationMatrix<F>> {
    if rows.len() < 3 {
        return Err(Error::Analytics(format!(
            "correlation matrix needs at least 3 rows, got {}",
            rows.len()
        )));
    }
    let statuses: Vec<F> = rows
        .iter()
        .map(|r| F::constant(r.gov_status.indicator()))
        .collect();
    if statuses.iter().all(|&s| s == statuses[0]) {
        return Err(Error::Analytics(
            "correlation matrix needs both government status values".into(),
        ));
    }

    let mut variables = vec!["gov_status".to_string()];
    let mut columns = vec![statuses];
    for category in AffectCategory::ALL {
        variables.push(category.name().to_string());
        columns.push(rows.iter().map(|r| r.affect.frequency(category)).collect());
    }

    let n = variables.len();
    let mut cells = vec![vec![F::zero(); n]; n];
    for i in 0..n {
        cells[i][i] = F::one();
        for j in (i + 1)..n {
            let r = pearson(&columns[i], &columns[j]).map_err(|e| {
                Error::Analytics(format!("{} vs {}: {e}", variables[i], variables[j]))
            })?;
            cells[i][j] = r;
            cells[j][i] = r;
        }
    }
    Ok(CorrelationMatrix { variables, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affect::{affect_counts, affect_frequencies, AffectLexicon, CategorySet};
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn counts(pos: usize, neg: usize, neu: usize) -> SentimentCounts {
        SentimentCounts {
            positive: pos,
            negative: neg,
            neutral: neu,
        }
    }

    #[test]
    fn shares_are_percentages_at_three_decimals() {
        assert_eq!(sentiment_shares::<f64>(&counts(2, 1, 1)).unwrap(), (50.0, 25.0, 25.0));
        assert_eq!(
            sentiment_shares::<f64>(&counts(612, 157, 208)).unwrap(),
            (62.641, 16.070, 21.290)
        );
        assert_eq!(
            sentiment_shares::<f64>(&counts(214, 38, 31)).unwrap(),
            (75.618, 13.428, 10.954)
        );
    }

    #[test]
    fn zero_total_is_an_error() {
        assert!(sentiment_shares::<f64>(&counts(0, 0, 0)).is_err());
    }

    #[test]
    fn changes_match_the_published_rows() {
        assert_eq!(share_change::<f64>(&[62.641]).unwrap(), vec![0.0]);
        assert_eq!(share_change::<f64>(&[62.641, 63.92]).unwrap(), vec![0.0, 1.28]);
        assert_eq!(share_change::<f64>(&[16.07, 19.725]).unwrap(), vec![0.0, 3.66]);
        assert!(share_change::<f64>(&[]).is_err());
    }

    #[test]
    fn pearson_handles_the_textbook_cases() {
        assert_eq!(pearson::<f64>(&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]).unwrap(), 1.0);
        assert_eq!(pearson::<f64>(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]).unwrap(), -1.0);
        assert!(pearson::<f64>(&[1.0, 2.0], &[1.0]).is_err());
        assert!(pearson::<f64>(&[1.0], &[1.0]).is_err());
        assert!(pearson::<f64>(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]).is_err());
    }

    #[test]
    fn spearman_is_rank_based() {
        // monotone but nonlinear: rank correlation is exactly 1
        let x = [1.0, 2.0, 3.0, 4.0];
        let y = [1.0, 10.0, 100.0, 1000.0];
        assert!((spearman::<f64>(&x, &y).unwrap() - 1.0).abs() < 1e-12);
        // ties get averaged ranks
        let tied = ranks(&[1.0f64, 1.0, 2.0]);
        assert_eq!(tied, vec![1.5, 1.5, 3.0]);
    }

    fn profile_for(words: &[&str]) -> AffectProfile<f64> {
        use AffectCategory::*;
        let entries: HashMap<String, CategorySet> = [
            ("hope", vec![Positive, Anticipation]),
            ("fear", vec![Negative, Fear]),
            ("joy", vec![Positive, Joy]),
            ("trust", vec![Positive, Trust]),
            ("shock", vec![Negative, Surprise]),
            ("grief", vec![Negative, Sadness]),
            ("rage", vec![Negative, Anger]),
            ("filth", vec![Negative, Disgust]),
        ]
        .into_iter()
        .map(|(w, cats)| (w.to_string(), cats.into_iter().collect()))
        .collect();
        let lexicon = AffectLexicon::from_entries(entries).unwrap();
        let lemmas: Vec<String> = words.iter().map(|s| s.to_string()).collect();
        affect_frequencies(&affect_counts(&lemmas, &lexicon))
    }

    fn stats(
        party: &str,
        year: i32,
        status: GovStatus,
        c: SentimentCounts,
        words: &[&str],
    ) -> DocumentStats<f64> {
        DocumentStats {
            party: party.into(),
            year,
            gov_status: status,
            sentences: c.total(),
            counts: c,
            affect: profile_for(words),
        }
    }

    fn sample_rows() -> Vec<ElectionRow<f64>> {
        use GovStatus::*;
        let stats = vec![
            stats(
                "labour",
                2001,
                Incumbent,
                counts(30, 10, 10),
                &["hope", "joy", "trust", "hope", "shock"],
            ),
            stats(
                "labour",
                2005,
                Incumbent,
                counts(28, 12, 10),
                &["hope", "joy", "trust", "grief"],
            ),
            stats(
                "labour",
                2010,
                Opposition,
                counts(20, 20, 10),
                &["fear", "rage", "hope", "filth"],
            ),
            stats(
                "conservative",
                2001,
                Opposition,
                counts(18, 22, 10),
                &["fear", "grief", "rage", "filth", "shock"],
            ),
            stats(
                "conservative",
                2005,
                Opposition,
                counts(22, 18, 10),
                &["fear", "trust", "grief"],
            ),
            stats(
                "conservative",
                2010,
                Incumbent,
                counts(32, 8, 10),
                &["hope", "joy", "trust", "joy"],
            ),
        ];
        assemble_rows(&stats).unwrap()
    }

    #[test]
    fn rows_carry_shares_and_changes() {
        let rows = sample_rows();
        assert_eq!(rows.len(), 6);
        assert_eq!(rows[0].party, "labour");
        assert_eq!(rows[0].pos_change, 0.0);
        assert_eq!(rows[0].neg_change, 0.0);
        assert_eq!(rows[0].pos_share, 60.0);
        assert_eq!(rows[1].pos_share, 56.0);
        assert_eq!(rows[1].pos_change, -4.0);
        // conservative series restarts at zero change
        assert_eq!(rows[3].party, "conservative");
        assert_eq!(rows[3].pos_change, 0.0);
    }

    #[test]
    fn series_are_year_ordered_per_party() {
        let rows = sample_rows();
        let series = build_series(&rows).unwrap();
        assert_eq!(series.len(), 2);
        assert_eq!(series[0].party, "labour");
        assert_eq!(series[0].years, vec![2001, 2005, 2010]);
        assert_eq!(series[0].pos_share.len(), 3);
        assert_eq!(series[0].affect_series(AffectCategory::Fear).len(), 3);
        assert_eq!(series[1].party, "conservative");
    }

    #[test]
    fn single_row_series() {
        let rows = assemble_rows(&[stats(
            "labour",
            2001,
            GovStatus::Incumbent,
            counts(3, 1, 1),
            &["hope"],
        )])
        .unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].pos_change, 0.0);
        let series = build_series(&rows).unwrap();
        assert_eq!(series[0].years.len(), 1);
    }

    #[test]
    fn matrix_is_symmetric_with_unit_diagonal() {
        let rows = sample_rows();
        let matrix = correlation_matrix(&rows).unwrap();
        assert_eq!(matrix.size(), 11);
        assert_eq!(matrix.variables[0], "gov_status");
        for i in 0..matrix.size() {
            assert_eq!(matrix.cell(i, i), 1.0);
            for j in 0..matrix.size() {
                assert!((matrix.cell(i, j) - matrix.cell(j, i)).abs() <= 1e-12);
                assert!(matrix.cell(i, j).abs() <= 1.0 + 1e-12);
            }
        }
        // designed into the sample: positive affect tracks incumbency
        let pos = matrix.variable_index("positive").unwrap();
        assert!(matrix.cell(0, pos) > 0.0);
        let neg = matrix.variable_index("negative").unwrap();
        assert!(matrix.cell(0, neg) < 0.0);
    }

    #[test]
    fn analytics_work_in_single_precision() {
        let (p, n, u) = sentiment_shares::<f32>(&counts(612, 157, 208)).unwrap();
        assert_eq!((p, n, u), (62.641f32, 16.070, 21.290));
        let r = pearson::<f32>(&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]).unwrap();
        assert!((r - 1.0).abs() < 1e-6);
        assert_eq!(share_change::<f32>(&[62.641, 63.92]).unwrap(), vec![0.0, 1.28]);
    }

    #[test]
    fn matrix_rejects_degenerate_inputs() {
        let rows = sample_rows();
        assert!(correlation_matrix(&rows[..2]).is_err());
        let one_status: Vec<ElectionRow<f64>> = rows
            .iter()
            .filter(|r| r.gov_status == GovStatus::Incumbent)
            .cloned()
            .collect();
        assert!(correlation_matrix(&one_status).is_err());
    }

    proptest! {
        #[test]
        fn shares_sum_to_one_hundred(
            pos in 0usize..2000, neg in 0usize..2000, neu in 0usize..2000
        ) {
            prop_assume!(pos + neg + neu > 0);
            let (p, n, u) = sentiment_shares::<f64>(&counts(pos, neg, neu)).unwrap();
            prop_assert!((p + n + u - 100.0).abs() <= 0.01);
            prop_assert!(p >= 0.0 && n >= 0.0 && u >= 0.0);
        }

        #[test]
        fn translated_series_have_zero_deltas(
            base in proptest::collection::vec(0.0f64..100.0, 1..10),
            offset in -50.0f64..50.0
        ) {
            let translated: Vec<f64> = base.iter().map(|v| v + offset).collect();
            let zeros = share_change(&vec![7.5f64; base.len()]).unwrap();
            prop_assert!(zeros.iter().all(|&d| d == 0.0));
            // adding a constant to every share leaves deltas unchanged
            let d1 = share_change(&base).unwrap();
            let d2 = share_change(&translated).unwrap();
            for (a, b) in d1.iter().zip(&d2) {
                prop_assert!((a - b).abs() <= 0.011);
            }
        }

        #[test]
        fn pearson_is_symmetric_scale_invariant_bounded(
            pairs in proptest::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 3..20),
            scale in 0.1f64..10.0,
            shift in -10.0f64..10.0
        ) {
            let x: Vec<f64> = pairs.iter().map(|p| p.0).collect();
            let y: Vec<f64> = pairs.iter().map(|p| p.1).collect();
            prop_assume!(pearson(&x, &y).is_ok());
            let r = pearson(&x, &y).unwrap();
            prop_assert!((-1.0 - 1e-9..=1.0 + 1e-9).contains(&r));
            prop_assert!((pearson(&y, &x).unwrap() - r).abs() <= 1e-12);
            let scaled: Vec<f64> = x.iter().map(|v| v * scale + shift).collect();
            prop_assert!((pearson(&scaled, &y).unwrap() - r).abs() <= 1e-6);
            let flipped: Vec<f64> = x.iter().map(|v| -v * scale + shift).collect();
            prop_assert!((pearson(&flipped, &y).unwrap() + r).abs() <= 1e-6);
        }
    }
}
