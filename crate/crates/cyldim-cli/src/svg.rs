//! SVG rendering of a configuration as a sheared lozenge strip.
//!
//! Rows are drawn bottom to top on a 60-degree grid; the boundary seam
//! between columns `n` and 1 is the dashed line at the right edge. Tiles
//! carry `data-kind` attributes (`v`, `h`, `bg`) so renderings stay easy to
//! inspect; horizontal tiles that wrap past the seam also carry
//! `data-straddle="1"` and reappear as a `ghost` copy at the left edge.

use std::fmt::Write;

use cyldim_core::dimers::{to_lozenge_cells, DimerConfiguration, LozengeKind};

const SIDE: f64 = 36.0;
const MARGIN: f64 = 24.0;
// sin(60 degrees)
const ROW_RISE: f64 = 0.866_025_403_784_438_6;

pub fn render_svg(config: &DimerConfiguration) -> String {
    let n = config.shape().n() as f64;
    let k = config.shape().k() as f64;
    let width = MARGIN * 2.0 + SIDE * (n + 1.0 + k / 2.0);
    let height = MARGIN * 2.0 + SIDE * ROW_RISE * k.max(1.0);
    // bottom-left lattice corner; y grows downward in SVG
    let point = |col: f64, row: f64| -> (f64, f64) {
        (
            MARGIN + SIDE * (1.0 + col + row / 2.0),
            height - MARGIN - SIDE * ROW_RISE * row,
        )
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width:.1} {height:.1}\">"
    );
    let _ = writeln!(
        out,
        "  <style>.loz{{stroke:#555;stroke-width:0.8}} .v{{fill:#7aa6c2}} .h{{fill:#e8a33d}} \
         .bg{{fill:#f2ede2}} .ghost{{opacity:0.45}} .straddle{{stroke:#b03a2e;stroke-width:1.6}} \
         .seam{{stroke:#b03a2e;stroke-width:1.2;stroke-dasharray:6 4}}</style>"
    );
    let quad = |col: usize, row: usize| -> String {
        let (x0, y0) = point(col as f64 - 1.0, row as f64 - 1.0);
        let (x1, y1) = point(col as f64, row as f64 - 1.0);
        let (x2, y2) = point(col as f64, row as f64);
        let (x3, y3) = point(col as f64 - 1.0, row as f64);
        format!("{x0:.1},{y0:.1} {x1:.1},{y1:.1} {x2:.1},{y2:.1} {x3:.1},{y3:.1}")
    };
    for cell in to_lozenge_cells(config) {
        let (kind, class) = match cell.kind {
            LozengeKind::Vertical => ("v", "loz v"),
            LozengeKind::Horizontal => ("h", "loz h"),
            LozengeKind::Background => ("bg", "loz bg"),
        };
        let straddle_class = if cell.straddles_seam { " straddle" } else { "" };
        let straddle_attr = if cell.straddles_seam {
            " data-straddle=\"1\""
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  <polygon class=\"{class}{straddle_class}\" data-kind=\"{kind}\"{straddle_attr} \
             data-row=\"{}\" data-col=\"{}\" points=\"{}\"/>",
            cell.row,
            cell.col,
            quad(cell.col, cell.row)
        );
        if cell.straddles_seam {
            // wrapped copy just left of column 1
            let _ = writeln!(
                out,
                "  <polygon class=\"loz h ghost\" data-kind=\"ghost\" data-row=\"{}\" \
                 points=\"{}\"/>",
                cell.row,
                quad(0, cell.row)
            );
        }
    }
    // the seam sits between column n and column 1 of the next period
    let (sx0, sy0) = point(n, -0.4);
    let (sx1, sy1) = point(n, k + 0.4);
    let _ = writeln!(
        out,
        "  <line class=\"seam\" x1=\"{sx0:.1}\" y1=\"{sy0:.1}\" x2=\"{sx1:.1}\" y2=\"{sy1:.1}\"/>"
    );
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyldim_core::combinatorics::BoxShape;
    use cyldim_core::dimers::enumerate_configurations;

    #[test]
    fn wrap_tile_straddles() {
        let shape = BoxShape::new(1, 3).unwrap();
        let mu = shape.partition(&[2]).unwrap();
        let nu = shape.empty_partition();
        let alpha = shape.composition(&[1]).unwrap();
        let config = &enumerate_configurations(&mu, &nu, &alpha).unwrap()[0];
        let svg = render_svg(config);
        assert_eq!(svg.matches("data-straddle=\"1\"").count(), 1);
        assert_eq!(svg.matches("data-kind=\"h\"").count(), 1);
        assert_eq!(svg.matches("data-kind=\"ghost\"").count(), 1);
        assert!(svg.contains("class=\"seam\""));
        // deterministic output
        assert_eq!(svg, render_svg(config));
    }

    #[test]
    fn identity_strip_has_no_horizontal_tiles() {
        let shape = BoxShape::new(2, 4).unwrap();
        let mu = shape.partition(&[1]).unwrap();
        let alpha = shape.composition(&[0, 0]).unwrap();
        let config = &enumerate_configurations(&mu, &mu, &alpha).unwrap()[0];
        let svg = render_svg(config);
        assert_eq!(svg.matches("data-kind=\"h\"").count(), 0);
        assert_eq!(svg.matches("data-kind=\"v\"").count(), 2);
        assert_eq!(svg.matches("data-kind=\"bg\"").count(), 6);
    }
}
