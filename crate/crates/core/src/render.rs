//! SVG drawing of the two equable triangles over a patch of the lattice.
//!
//! World coordinates come from [`EisensteinInt::to_cartesian`]. The viewport
//! transform is the fixed affine map `(x, y) ↦ (40x, -40y)` (see
//! [`to_viewport`]): 40 px per unit with the y axis flipped so that `ω` points
//! up. The `viewBox` is the bounding box of everything drawn, padded by one
//! world unit on every side.
//!
//! The equilateral triangle is shifted 5 units to the right so the two
//! triangles do not overlap.

use std::fmt::Write;

use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::triangle::{LatticeTriangle, EQUABLE_EQUILATERAL, EQUABLE_SCALENE};

pub const PIXELS_PER_UNIT: f64 = 40.0;
pub const DEFAULT_RANGE: i64 = 12;
/// Horizontal shift applied to the equilateral triangle, in world units.
pub const EQUILATERAL_SHIFT: i64 = 5;

const DOT_RADIUS: f64 = 0.06;
const MARGIN: f64 = 1.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    /// Draw the lattice dots and the axes.
    pub grid: bool,
    /// The grid spans `x ∈ [-1/2, range]` and `y ∈ [-√3/2, ⌈4·range/3⌉·√3/2]`.
    pub range: i64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self { grid: true, range: DEFAULT_RANGE }
    }
}

/// World → SVG user units.
pub fn to_viewport((x, y): (f64, f64)) -> (f64, f64) {
    (PIXELS_PER_UNIT * x, -PIXELS_PER_UNIT * y)
}

/// SVG user units → world.
pub fn from_viewport((x, y): (f64, f64)) -> (f64, f64) {
    (x / PIXELS_PER_UNIT, -y / PIXELS_PER_UNIT)
}

/// The triangles as drawn: the equilateral one shifted right, then the
/// scalene one in place.
pub fn figure_triangles() -> [LatticeTriangle; 2] {
    [
        EQUABLE_EQUILATERAL.translate(EisensteinInt::new(EQUILATERAL_SHIFT, 0)),
        EQUABLE_SCALENE,
    ]
}

/// Lattice points with `-1/2 ≤ x ≤ range` on rows `cw = -1 ..= ⌈4·range/3⌉`.
pub fn grid_points(range: i64) -> Vec<EisensteinInt> {
    let top_row = (4 * range + 2) / 3;
    let mut out = Vec::new();
    for cw in -1..=top_row {
        // x = c1 - cw/2, so -1/2 ≤ x ≤ range  ⇔  cw - 1 ≤ 2·c1 ≤ 2·range + cw
        let lo = cw.div_euclid(2);
        let hi = (2 * range + cw).div_euclid(2);
        out.extend((lo..=hi).map(|c1| EisensteinInt::new(c1, cw)));
    }
    out
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

struct Style {
    class: &'static str,
    fill: &'static str,
    stroke: &'static str,
}

const STYLES: [Style; 2] = [
    Style { class: "equilateral", fill: "#ccccff", stroke: "#0000ff" },
    Style { class: "scalene", fill: "#ffcccc", stroke: "#ff0000" },
];

pub fn render_svg(options: &RenderOptions) -> Result<String> {
    if options.range < 1 {
        return Err(Error::InvalidRange(options.range));
    }
    let triangles = figure_triangles();
    let grid = if options.grid { grid_points(options.range) } else { Vec::new() };

    let world: Vec<(f64, f64)> = grid
        .iter()
        .copied()
        .chain(triangles.iter().flat_map(LatticeTriangle::vertices))
        .map(EisensteinInt::to_cartesian)
        .collect();
    let min_x = world.iter().map(|p| p.0).fold(f64::INFINITY, f64::min) - MARGIN;
    let max_x = world.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max) + MARGIN;
    let min_y = world.iter().map(|p| p.1).fold(f64::INFINITY, f64::min) - MARGIN;
    let max_y = world.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max) + MARGIN;
    // the y flip sends the top of the world box to the top of the viewBox
    let (vx, vy) = to_viewport((min_x, max_y));
    let (w, h) = ((max_x - min_x) * PIXELS_PER_UNIT, (max_y - min_y) * PIXELS_PER_UNIT);

    let mut svg = String::new();
    let out = &mut svg;
    // writing to a String cannot fail
    let _ = writeln!(out, r##"<?xml version="1.0" encoding="UTF-8"?>"##);
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="{}" height="{}">"##,
        num(vx),
        num(vy),
        num(w),
        num(h),
        num(w),
        num(h)
    );
    let _ = writeln!(out, "<title>Equable triangles on the Eisenstein lattice</title>");
    let _ = writeln!(out, r##"<rect x="{}" y="{}" width="{}" height="{}" fill="#ffffff"/>"##, num(vx), num(vy), num(w), num(h));

    for (t, style) in triangles.iter().zip(&STYLES) {
        let points = t
            .vertices()
            .map(|z| {
                let (x, y) = to_viewport(z.to_cartesian());
                format!("{},{}", num(x), num(y))
            })
            .join(" ");
        let _ = writeln!(
            out,
            r##"<polygon class="{}" points="{points}" fill="{}" stroke="{}" stroke-width="2"/>"##,
            style.class, style.fill, style.stroke
        );
    }

    if options.grid {
        let (x0, _) = to_viewport((-1.0, 0.0));
        let (x1, _) = to_viewport((options.range as f64 + 0.5, 0.0));
        let (_, y0) = to_viewport((0.0, -MARGIN));
        let (_, y1) = to_viewport((0.0, max_y));
        let _ = writeln!(out, r##"<g class="axes" stroke="#000000" stroke-width="1">"##);
        let _ = writeln!(out, r##"<line x1="{}" y1="0.000000" x2="{}" y2="0.000000"/>"##, num(x0), num(x1));
        let _ = writeln!(out, r##"<line x1="0.000000" y1="{}" x2="0.000000" y2="{}"/>"##, num(y0), num(y1));
        let _ = writeln!(out, "</g>");
        let _ = writeln!(out, r##"<g class="lattice" fill="none" stroke="#000000" stroke-width="1">"##);
        for z in &grid {
            let (x, y) = to_viewport(z.to_cartesian());
            let _ = writeln!(
                out,
                r##"<circle cx="{}" cy="{}" r="{}"/>"##,
                num(x),
                num(y),
                num(DOT_RADIUS * PIXELS_PER_UNIT)
            );
        }
        let _ = writeln!(out, "</g>");
    }

    for (t, style) in triangles.iter().zip(&STYLES) {
        let _ = writeln!(out, r##"<g class="vertices" fill="{}">"##, style.stroke);
        for z in t.vertices() {
            let (x, y) = to_viewport(z.to_cartesian());
            let _ = writeln!(
                out,
                r##"<circle cx="{}" cy="{}" r="{}"/>"##,
                num(x),
                num(y),
                num(2.0 * DOT_RADIUS * PIXELS_PER_UNIT)
            );
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, "</svg>");
    Ok(svg)
}
