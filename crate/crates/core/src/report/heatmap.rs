//! Correlation-matrix heatmap: an n-by-n grid on a diverging color scale
//! anchored at -1 (blue), 0 (white), and +1 (red), annotated at two
//! decimals. Byte-deterministic for equal input.

use crate::analytics::CorrelationMatrix;
use crate::num::Real;
use crate::Result;

const CELL: f64 = 52.0;
const LABEL_LEFT: f64 = 104.0;
const LABEL_TOP: f64 = 96.0;
const NEGATIVE_ANCHOR: (u8, u8, u8) = (0x31, 0x36, 0x95);
const POSITIVE_ANCHOR: (u8, u8, u8) = (0xa5, 0x00, 0x26);

fn lerp(a: u8, b: u8, t: f64) -> u8 {
    (f64::from(a) + (f64::from(b) - f64::from(a)) * t).round() as u8
}

/// Diverging scale: -1 maps to the blue anchor, 0 to white, +1 to the red
/// anchor; values in between interpolate linearly per channel.
fn cell_color(r: f64) -> String {
    let r = r.clamp(-1.0, 1.0);
    let (anchor, t) = if r < 0.0 {
        (NEGATIVE_ANCHOR, -r)
    } else {
        (POSITIVE_ANCHOR, r)
    };
    format!(
        "#{:02x}{:02x}{:02x}",
        lerp(0xff, anchor.0, t),
        lerp(0xff, anchor.1, t),
        lerp(0xff, anchor.2, t)
    )
}

/// Renders the matrix to SVG bytes.
pub fn render_heatmap<F: Real>(matrix: &CorrelationMatrix<F>) -> Result<Vec<u8>> {
    let n = matrix.size();
    let width = LABEL_LEFT + CELL * n as f64 + 16.0;
    let height = LABEL_TOP + CELL * n as f64 + 16.0;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.0} {height:.0}\" font-family=\"Helvetica, Arial, sans-serif\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{width:.0}\" height=\"{height:.0}\" fill=\"#ffffff\"/>\n"
    ));

    for (i, name) in matrix.variables.iter().enumerate() {
        // column labels, rotated to fit
        let x = LABEL_LEFT + CELL * i as f64 + CELL / 2.0;
        let y = LABEL_TOP - 8.0;
        svg.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{y:.2}\" font-size=\"11\" fill=\"#333333\" \
             text-anchor=\"start\" transform=\"rotate(-55 {x:.2} {y:.2})\">{name}</text>\n"
        ));
        // row labels
        let ry = LABEL_TOP + CELL * i as f64 + CELL / 2.0 + 4.0;
        svg.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{ry:.2}\" font-size=\"11\" fill=\"#333333\" text-anchor=\"end\">{name}</text>\n",
            x = LABEL_LEFT - 8.0
        ));
    }

    for row in 0..n {
        for col in 0..n {
            let r = matrix.cell(row, col).to_f64().expect("Real converts to f64");
            let x = LABEL_LEFT + CELL * col as f64;
            let y = LABEL_TOP + CELL * row as f64;
            svg.push_str(&format!(
                "<rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"{CELL:.2}\" height=\"{CELL:.2}\" \
                 fill=\"{}\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n",
                cell_color(r)
            ));
            let text_color = if r.abs() > 0.55 { "#ffffff" } else { "#1a1a1a" };
            svg.push_str(&format!(
                "<text x=\"{tx:.2}\" y=\"{ty:.2}\" font-size=\"11\" fill=\"{text_color}\" \
                 text-anchor=\"middle\">{r:.2}</text>\n",
                tx = x + CELL / 2.0,
                ty = y + CELL / 2.0 + 4.0
            ));
        }
    }

    svg.push_str("</svg>\n");
    Ok(svg.into_bytes())
}
