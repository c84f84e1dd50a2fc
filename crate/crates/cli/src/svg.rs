//! SVG rendering of cusp tilings.
//!
//! Purely combinatorial pictures: every boundary rectangle is drawn as a
//! unit cell at its lattice coordinates, shaded sides solid and white sides
//! dashed, with the lattice basis and the meridian and longitude vectors
//! overlaid. No hyperbolic geometry is computed, so no shapes are implied
//! beyond the combinatorics.

use linkcert_core::polyhedra::{CuspKind, CuspTorus, Decomposition, PolyId, SCoeff};
use std::fmt::Write;

const CELL: f64 = 60.0;
const MARGIN: f64 = 50.0;

pub fn cusp_svg(dec: &Decomposition, cusp: &CuspTorus) -> String {
    let min_w = cusp.tiles.iter().map(|t| t.cell.0).min().unwrap_or(0);
    let max_w = cusp.tiles.iter().map(|t| t.cell.0).max().unwrap_or(0) + 1;
    let min_s = cusp.tiles.iter().map(|t| t.cell.1).min().unwrap_or(0);
    let max_s = cusp.tiles.iter().map(|t| t.cell.1).max().unwrap_or(0) + 1;
    let width = (max_w - min_w) as f64 * CELL + 2.0 * MARGIN;
    let height = (max_s - min_s) as f64 * CELL + 2.0 * MARGIN + 40.0;
    // w increases rightward, s upward
    let x = |w: f64| MARGIN + (w - min_w as f64) * CELL;
    let y = |s: f64| height - 40.0 - MARGIN - (s - min_s as f64) * CELL;

    let mut svg = String::new();
    let _ = write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.0} {height:.0}\">\n"
    );
    let _ = write!(svg, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    let title = match cusp.kind {
        CuspKind::CrossingCircle { region } => format!("crossing circle cusp (region {region})"),
        CuspKind::KnotStrand { component } => format!(
            "knot strand cusp (component {})",
            dec.components[component].diagram_component
        ),
    };
    let long_s = match cusp.longitude.s {
        SCoeff::Known(k) => format!("{k}"),
        SCoeff::Unknown { .. } => "k".to_string(),
    };
    let _ = write!(
        svg,
        "<text x=\"{MARGIN}\" y=\"24\" font-family=\"monospace\" font-size=\"14\">{title}: \
         {} tiles, meridian ({}, {}), longitude ({}, {})</text>\n",
        cusp.tiles.len(),
        cusp.meridian.w,
        cusp.meridian.s,
        cusp.longitude.w,
        long_s,
    );

    // tiles: colored by polyhedron, sides drawn per color of the underlying
    // interior face (shaded solid, white dashed)
    for tile in &cusp.tiles {
        let (cw, cs) = (tile.cell.0 as f64, tile.cell.1 as f64);
        let fill = match tile.poly {
            PolyId::P1 => "#e8f0fe",
            PolyId::P2 => "#fdeedd",
        };
        let _ = write!(
            svg,
            "<rect x=\"{:.1}\" y=\"{:.1}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{fill}\" \
             stroke=\"none\"/>\n",
            x(cw),
            y(cs + 1.0),
        );
        // four sides
        for side in 0..4 {
            let dir = tile.side_dir(side);
            let shaded =
                dec.complex.faces[dec.complex.vertices[tile.vertex].faces[side]].color
                    == linkcert_core::polyhedra::FaceColor::Shaded;
            let (x1, y1, x2, y2) = match dir {
                linkcert_core::polyhedra::Dir::Wp => (x(cw + 1.0), y(cs), x(cw + 1.0), y(cs + 1.0)),
                linkcert_core::polyhedra::Dir::Wn => (x(cw), y(cs), x(cw), y(cs + 1.0)),
                linkcert_core::polyhedra::Dir::Sp => (x(cw), y(cs + 1.0), x(cw + 1.0), y(cs + 1.0)),
                linkcert_core::polyhedra::Dir::Sn => (x(cw), y(cs), x(cw + 1.0), y(cs)),
            };
            let style = if shaded {
                "stroke=\"#444\" stroke-width=\"2.5\""
            } else {
                "stroke=\"#888\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\""
            };
            let _ = write!(svg, "<line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\" {style}/>\n");
        }
        let _ = write!(
            svg,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"11\" \
             text-anchor=\"middle\">{}v{}</text>\n",
            x(cw + 0.5),
            y(cs + 0.5) + 4.0,
            match tile.poly {
                PolyId::P1 => "P1:",
                PolyId::P2 => "P2:",
            },
            tile.vertex,
        );
    }

    // basis arrows from the lower-left corner of the base tile
    let origin = (x(min_w as f64), y(min_s as f64));
    let arrow = |svg: &mut String, dw: f64, ds: f64, color: &str, label: &str| {
        let (x2, y2) = (origin.0 + dw * CELL, origin.1 - ds * CELL);
        let _ = write!(
            svg,
            "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\" stroke=\"{color}\" \
             stroke-width=\"2\" marker-end=\"url(#ah)\"/>\n\
             <text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"12\" \
             fill=\"{color}\">{label}</text>\n",
            origin.0,
            origin.1,
            x2 + 4.0,
            y2 - 4.0,
        );
    };
    let _ = write!(
        svg,
        "<defs><marker id=\"ah\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" \
         orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n"
    );
    arrow(&mut svg, 1.0, 0.0, "#777777", "w");
    arrow(&mut svg, 0.0, 1.0, "#777777", "s");
    arrow(
        &mut svg,
        cusp.meridian.w as f64,
        cusp.meridian.s as f64,
        "#c0392b",
        "meridian",
    );
    let long_s_val = match cusp.longitude.s {
        SCoeff::Known(k) => k as f64,
        SCoeff::Unknown { representative } => representative as f64,
    };
    arrow(&mut svg, cusp.longitude.w as f64, long_s_val, "#1a6e3c", "longitude");

    svg.push_str("</svg>\n");
    svg
}
