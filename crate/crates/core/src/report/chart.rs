//! Deterministic SVG line charts: identical input yields identical bytes.

use std::collections::BTreeSet;

use crate::affect::AffectCategory;
use crate::num::Real;
use crate::{Error, Result};

/// Which bundle of series a chart carries. Tja, Fasd and All have fixed
/// memberships that [`ChartSpec::new`] enforces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesGroup {
    Sentiment,
    Tja,
    Fasd,
    All,
}

/// One named line.
#[derive(Debug, Clone)]
pub struct Series<F> {
    pub name: String,
    pub points: Vec<F>,
}

/// A validated chart: every series has one point per election year and the
/// series set matches the group definition.
#[derive(Debug, Clone)]
pub struct ChartSpec<F> {
    pub title: String,
    pub y_label: String,
    pub years: Vec<i32>,
    pub group: SeriesGroup,
    pub series: Vec<Series<F>>,
}

impl<F: Real> ChartSpec<F> {
    pub fn new(
        title: impl Into<String>,
        y_label: impl Into<String>,
        years: Vec<i32>,
        group: SeriesGroup,
        series: Vec<Series<F>>,
    ) -> Result<Self> {
        if series.is_empty() {
            return Err(Error::Report("chart needs at least one series".into()));
        }
        if years.is_empty() {
            return Err(Error::Report("chart needs at least one year".into()));
        }
        for s in &series {
            if s.points.len() != years.len() {
                return Err(Error::Report(format!(
                    "series {:?} has {} points for {} years",
                    s.name,
                    s.points.len(),
                    years.len()
                )));
            }
        }
        let names: BTreeSet<&str> = series.iter().map(|s| s.name.as_str()).collect();
        if names.len() != series.len() {
            return Err(Error::Report("duplicate series name".into()));
        }
        let expected: Option<BTreeSet<&str>> = match group {
            SeriesGroup::Sentiment => None,
            SeriesGroup::Tja => Some(["trust", "joy", "anticipation"].into()),
            SeriesGroup::Fasd => Some(["fear", "anger", "sadness", "disgust"].into()),
            SeriesGroup::All => Some(AffectCategory::ALL.iter().map(|c| c.name()).collect()),
        };
        if let Some(expected) = expected {
            if names != expected {
                return Err(Error::Report(format!(
                    "series {names:?} do not match the {group:?} group {expected:?}"
                )));
            }
        }
        Ok(Self {
            title: title.into(),
            y_label: y_label.into(),
            years,
            group,
            series,
        })
    }
}

/// Fixed category-to-color palette so figures stay comparable across runs.
/// Unknown names fall back to a neutral dark grey.
pub fn palette_color(name: &str) -> &'static str {
    match name {
        "positive" => "#1a9850",
        "negative" => "#d73027",
        "neutral" => "#878787",
        "joy" => "#f4c20d",
        "trust" => "#4575b4",
        "anticipation" => "#fd8d3c",
        "surprise" => "#984ea3",
        "fear" => "#543005",
        "sadness" => "#74add1",
        "anger" => "#a50f15",
        "disgust" => "#66a61e",
        _ => "#333333",
    }
}

fn escape_text(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

const WIDTH: f64 = 760.0;
const HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 170.0;
const MARGIN_TOP: f64 = 48.0;
const MARGIN_BOTTOM: f64 = 56.0;

/// Renders the chart to SVG bytes. Output is byte-deterministic for equal
/// input; the y-range is [0, 1.1 * max point].
pub fn render_line_chart<F: Real>(spec: &ChartSpec<F>) -> Result<Vec<u8>> {
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;

    let mut max_value = 0.0f64;
    for s in &spec.series {
        for p in &s.points {
            let v = p.to_f64().unwrap_or(0.0);
            if v < 0.0 {
                return Err(Error::Report(format!(
                    "series {:?} has a negative point; charts cover non-negative values",
                    s.name
                )));
            }
            max_value = max_value.max(v);
        }
    }
    let y_max = if max_value > 0.0 { max_value * 1.1 } else { 1.0 };

    let (year_min, year_max) = (
        *spec.years.first().expect("validated non-empty") as f64,
        *spec.years.last().expect("validated non-empty") as f64,
    );
    let x_of = |year: f64| {
        if (year_max - year_min).abs() < f64::EPSILON {
            MARGIN_LEFT + plot_w / 2.0
        } else {
            MARGIN_LEFT + (year - year_min) / (year_max - year_min) * plot_w
        }
    };
    let y_of = |value: f64| MARGIN_TOP + plot_h - value / y_max * plot_h;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"Helvetica, Arial, sans-serif\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"#ffffff\"/>\n"
    ));
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\" fill=\"#111111\">{}</text>\n",
        MARGIN_LEFT + plot_w / 2.0,
        escape_text(&spec.title)
    ));

    // axes
    svg.push_str(&format!(
        "<line x1=\"{l:.2}\" y1=\"{t:.2}\" x2=\"{l:.2}\" y2=\"{b:.2}\" stroke=\"#222222\" stroke-width=\"1\"/>\n",
        l = MARGIN_LEFT,
        t = MARGIN_TOP,
        b = MARGIN_TOP + plot_h
    ));
    svg.push_str(&format!(
        "<line x1=\"{l:.2}\" y1=\"{b:.2}\" x2=\"{r:.2}\" y2=\"{b:.2}\" stroke=\"#222222\" stroke-width=\"1\"/>\n",
        l = MARGIN_LEFT,
        b = MARGIN_TOP + plot_h,
        r = MARGIN_LEFT + plot_w
    ));

    // y ticks, gridlines, labels
    for i in 0..=5u32 {
        let value = y_max * f64::from(i) / 5.0;
        let y = y_of(value);
        if i > 0 {
            svg.push_str(&format!(
                "<line x1=\"{l:.2}\" y1=\"{y:.2}\" x2=\"{r:.2}\" y2=\"{y:.2}\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n",
                l = MARGIN_LEFT,
                r = MARGIN_LEFT + plot_w
            ));
        }
        svg.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{ty:.2}\" text-anchor=\"end\" font-size=\"11\" fill=\"#333333\">{value:.2}</text>\n",
            x = MARGIN_LEFT - 8.0,
            ty = y + 4.0
        ));
    }
    svg.push_str(&format!(
        "<text x=\"16\" y=\"{y:.2}\" font-size=\"12\" fill=\"#333333\" transform=\"rotate(-90 16 {y:.2})\" text-anchor=\"middle\">{label}</text>\n",
        y = MARGIN_TOP + plot_h / 2.0,
        label = escape_text(&spec.y_label)
    ));

    // x ticks: one per election year
    for &year in &spec.years {
        let x = x_of(year as f64);
        svg.push_str(&format!(
            "<line x1=\"{x:.2}\" y1=\"{b:.2}\" x2=\"{x:.2}\" y2=\"{t:.2}\" stroke=\"#222222\" stroke-width=\"1\"/>\n",
            b = MARGIN_TOP + plot_h,
            t = MARGIN_TOP + plot_h + 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{ty:.2}\" text-anchor=\"middle\" font-size=\"11\" fill=\"#333333\">{year}</text>\n",
            ty = MARGIN_TOP + plot_h + 20.0
        ));
    }
    svg.push_str(&format!(
        "<text x=\"{x:.2}\" y=\"{y:.2}\" text-anchor=\"middle\" font-size=\"12\" fill=\"#333333\">Election year</text>\n",
        x = MARGIN_LEFT + plot_w / 2.0,
        y = HEIGHT - 14.0
    ));

    // series polylines, points, legend
    for (idx, s) in spec.series.iter().enumerate() {
        let color = palette_color(&s.name);
        let coords: Vec<String> = spec
            .years
            .iter()
            .zip(&s.points)
            .map(|(&year, p)| {
                format!("{:.2},{:.2}", x_of(year as f64), y_of(p.to_f64().unwrap_or(0.0)))
            })
            .collect();
        svg.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
            coords.join(" ")
        ));
        for coord in &coords {
            let (x, y) = coord.split_once(',').expect("coord format");
            svg.push_str(&format!("<circle cx=\"{x}\" cy=\"{y}\" r=\"3\" fill=\"{color}\"/>\n"));
        }
        let ly = MARGIN_TOP + 14.0 + idx as f64 * 18.0;
        svg.push_str(&format!(
            "<line x1=\"{x1:.2}\" y1=\"{ly:.2}\" x2=\"{x2:.2}\" y2=\"{ly:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
            x1 = MARGIN_LEFT + plot_w + 16.0,
            x2 = MARGIN_LEFT + plot_w + 40.0
        ));
        svg.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{ty:.2}\" font-size=\"11\" fill=\"#333333\">{name}</text>\n",
            x = MARGIN_LEFT + plot_w + 46.0,
            ty = ly + 4.0,
            name = escape_text(&s.name)
        ));
    }

    svg.push_str("</svg>\n");
    Ok(svg.into_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(points: Vec<Vec<f64>>, names: &[&str], group: SeriesGroup) -> ChartSpec<f64> {
        let series = names
            .iter()
            .zip(points)
            .map(|(name, points)| Series {
                name: name.to_string(),
                points,
            })
            .collect();
        ChartSpec::new("test chart", "value", vec![2001, 2005, 2010], group, series).unwrap()
    }

    #[test]
    fn rendering_is_deterministic() {
        let s = spec(
            vec![vec![0.1, 0.2, 0.3], vec![0.3, 0.2, 0.1], vec![0.0, 0.0, 0.0]],
            &["positive", "negative", "neutral"],
            SeriesGroup::Sentiment,
        );
        assert_eq!(render_line_chart(&s).unwrap(), render_line_chart(&s).unwrap());
    }

    #[test]
    fn constant_series_renders_a_horizontal_polyline() {
        let s = spec(vec![vec![0.5, 0.5, 0.5]], &["positive"], SeriesGroup::Sentiment);
        let svg = String::from_utf8(render_line_chart(&s).unwrap()).unwrap();
        let line = svg.lines().find(|l| l.starts_with("<polyline")).unwrap();
        let points = line.split('"').nth(1).unwrap();
        let ys: Vec<&str> = points
            .split(' ')
            .map(|c| c.split(',').nth(1).unwrap())
            .collect();
        assert!(ys.windows(2).all(|w| w[0] == w[1]), "{points}");
    }

    #[test]
    fn all_group_has_ten_legend_entries() {
        let names: Vec<&str> = crate::affect::AffectCategory::ALL.iter().map(|c| c.name()).collect();
        let points = vec![vec![0.1, 0.1, 0.1]; 10];
        let s = spec(points, &names, SeriesGroup::All);
        let svg = String::from_utf8(render_line_chart(&s).unwrap()).unwrap();
        for name in names {
            assert!(svg.contains(&format!(">{name}</text>")), "missing legend for {name}");
        }
    }

    #[test]
    fn group_membership_is_enforced() {
        let bad = ChartSpec::new(
            "t",
            "v",
            vec![2001],
            SeriesGroup::Tja,
            vec![Series {
                name: "fear".into(),
                points: vec![0.1],
            }],
        );
        assert!(bad.is_err());

        let good = ChartSpec::new(
            "t",
            "v",
            vec![2001],
            SeriesGroup::Fasd,
            ["fear", "anger", "sadness", "disgust"]
                .iter()
                .map(|n| Series {
                    name: n.to_string(),
                    points: vec![0.1],
                })
                .collect(),
        );
        assert!(good.is_ok());
    }

    #[test]
    fn point_count_must_match_years() {
        let err = ChartSpec::<f64>::new(
            "t",
            "v",
            vec![2001, 2005],
            SeriesGroup::Sentiment,
            vec![Series {
                name: "positive".into(),
                points: vec![0.1],
            }],
        )
        .unwrap_err();
        assert!(err.to_string().contains("1 points for 2 years"));
    }

    #[test]
    fn empty_series_list_is_rejected() {
        assert!(ChartSpec::<f64>::new("t", "v", vec![2001], SeriesGroup::Sentiment, vec![]).is_err());
    }
}
