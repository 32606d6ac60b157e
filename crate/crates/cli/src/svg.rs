//! SVG staircase rendering for two-variable supports: lattice points of the
//! denoted set, shaded orthants for cone generators, the Newton-polyhedron
//! boundary, and highlighted vertices.

use tropdiff::{GeneratorSet, MultiIndex, VertexPolynomial};

const CELL: i64 = 32;
const MARGIN: i64 = 40;

struct Frame {
    height: i64,
}

impl Frame {
    fn x(&self, v: f64) -> f64 {
        MARGIN as f64 + v * CELL as f64
    }
    fn y(&self, v: f64) -> f64 {
        (self.height - MARGIN) as f64 - v * CELL as f64
    }
}

/// Render an `m = 2` generator set into a standalone SVG document.
pub fn render(set: &GeneratorSet, window: Option<u32>) -> String {
    assert_eq!(set.dim(), 2, "plots are two-dimensional");
    let content_max = set
        .points()
        .iter()
        .chain(set.cones().iter())
        .flat_map(|p| p.entries().iter().copied())
        .max()
        .unwrap_or(0);
    let window = window.unwrap_or((content_max + 2).max(5));
    let side = 2 * MARGIN + window as i64 * CELL;
    let frame = Frame { height: side };

    let mut svg = String::new();
    svg.push_str(&format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<rect width="{side}" height="{side}" fill="white"/>"#
    ));
    svg.push('\n');

    // shaded quadrant for each cone generator
    for apex in set.cones() {
        let (ax, ay) = (apex.get(0) as f64, apex.get(1) as f64);
        if apex.get(0) > window || apex.get(1) > window {
            continue;
        }
        svg.push_str(&format!(
            r##"<rect x="{:.1}" y="{:.1}" width="{:.1}" height="{:.1}" fill="#9ecae1" fill-opacity="0.45"/>"##,
            frame.x(ax),
            frame.y(window as f64),
            (window as f64 - ax) * CELL as f64,
            (window as f64 - ay) * CELL as f64,
        ));
        svg.push('\n');
    }

    // axes with tick labels
    svg.push_str(&format!(
        r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="black"/>"#,
        frame.x(0.0),
        frame.y(0.0),
        frame.x(window as f64),
        frame.y(0.0)
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="black"/>"#,
        frame.x(0.0),
        frame.y(0.0),
        frame.x(0.0),
        frame.y(window as f64)
    ));
    svg.push('\n');
    for k in 0..=window {
        svg.push_str(&format!(
            r#"<text x="{:.1}" y="{:.1}" font-size="10" text-anchor="middle">{k}</text>"#,
            frame.x(k as f64),
            frame.y(0.0) + 16.0
        ));
        svg.push('\n');
        svg.push_str(&format!(
            r#"<text x="{:.1}" y="{:.1}" font-size="10" text-anchor="end">{k}</text>"#,
            frame.x(0.0) - 8.0,
            frame.y(k as f64) + 3.0
        ));
        svg.push('\n');
    }

    // faint grid of lattice positions, then the members of the set
    let bound = MultiIndex::new(vec![window, window]);
    for gx in 0..=window {
        for gy in 0..=window {
            svg.push_str(&format!(
                r##"<circle cx="{:.1}" cy="{:.1}" r="1.5" fill="#d0d0d0"/>"##,
                frame.x(gx as f64),
                frame.y(gy as f64)
            ));
            svg.push('\n');
        }
    }
    for p in set.enumerate_below(&bound) {
        svg.push_str(&format!(
            r##"<circle cx="{:.1}" cy="{:.1}" r="4" fill="#3182bd"/>"##,
            frame.x(p.get(0) as f64),
            frame.y(p.get(1) as f64)
        ));
        svg.push('\n');
    }

    // Newton boundary: vertical ray, staircase segments, horizontal ray
    let verts = VertexPolynomial::from_generator_set(set);
    if !verts.is_zero() {
        let vs = verts.support();
        let mut path = format!(
            "M {:.1} {:.1} L {:.1} {:.1}",
            frame.x(vs[0].get(0) as f64),
            frame.y(window as f64),
            frame.x(vs[0].get(0) as f64),
            frame.y(vs[0].get(1) as f64)
        );
        for v in &vs[1..] {
            path.push_str(&format!(
                " L {:.1} {:.1}",
                frame.x(v.get(0) as f64),
                frame.y(v.get(1) as f64)
            ));
        }
        let last = vs.last().unwrap();
        path.push_str(&format!(
            " L {:.1} {:.1}",
            frame.x(window as f64),
            frame.y(last.get(1) as f64)
        ));
        svg.push_str(&format!(
            r##"<path d="{path}" fill="none" stroke="#e6550d" stroke-width="2"/>"##
        ));
        svg.push('\n');
        for v in vs {
            svg.push_str(&format!(
                r##"<circle cx="{:.1}" cy="{:.1}" r="6" fill="none" stroke="#e6550d" stroke-width="2"/>"##,
                frame.x(v.get(0) as f64),
                frame.y(v.get(1) as f64)
            ));
            svg.push('\n');
        }
    }

    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_well_formed_svg() {
        let set = GeneratorSet::normalize(
            2,
            vec![MultiIndex::new(vec![2, 0]), MultiIndex::new(vec![0, 3])],
            vec![MultiIndex::new(vec![3, 3])],
        )
        .unwrap();
        let svg = render(&set, None);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<svg").count(), 1);
        assert!(svg.contains("path"));
    }
}
