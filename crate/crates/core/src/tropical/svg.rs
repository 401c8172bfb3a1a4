use super::{Arrangement, CellComplex};
use crate::error::{input, Result};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::fmt::Write;

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

/// Line drawing of a planar arrangement (`n = 3`): both tropical lines, the
/// vertices of the decomposition, and the label of every maximal cell at its
/// witness point.
pub fn render_svg(arr: &Arrangement, complex: &CellComplex) -> Result<String> {
    if arr.n() != 3 || complex.n() != 3 {
        return input("SVG output needs a planar arrangement (n = 3)");
    }
    let points: Vec<(f64, f64)> = complex
        .cells()
        .iter()
        .map(|c| (to_f64(&c.witness[0]), to_f64(&c.witness[1])))
        .chain([arr.apex_a(), arr.apex_b()].map(|a| (to_f64(&a[0]), to_f64(&a[1]))))
        .collect();
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &points {
        lo_x = lo_x.min(x);
        hi_x = hi_x.max(x);
        lo_y = lo_y.min(y);
        hi_y = hi_y.max(y);
    }
    let pad = 2.0 + 0.25 * (hi_x - lo_x).max(hi_y - lo_y);
    let (lo_x, hi_x, lo_y, hi_y) = (lo_x - pad, hi_x + pad, lo_y - pad, hi_y + pad);
    let scale = 60.0;
    let width = (hi_x - lo_x) * scale;
    let height = (hi_y - lo_y) * scale;
    // SVG's y axis points down.
    let px = |x: f64| (x - lo_x) * scale;
    let py = |y: f64| (hi_y - y) * scale;
    let reach = 2.0 * (hi_x - lo_x + hi_y - lo_y);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (apex, colour) in [(arr.apex_a(), "#1f77b4"), (arr.apex_b(), "#d62728")] {
        let (ax, ay) = (to_f64(&apex[0]), to_f64(&apex[1]));
        for (dx, dy) in [(1.0, 1.0), (0.0, -1.0), (-1.0, 0.0)] {
            let _ = writeln!(
                out,
                r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{colour}" stroke-width="2"/>"#,
                px(ax),
                py(ay),
                px(ax + dx * reach),
                py(ay + dy * reach)
            );
        }
    }
    for cell in complex.cells() {
        let (x, y) = (to_f64(&cell.witness[0]), to_f64(&cell.witness[1]));
        match cell.dim {
            0 => {
                let _ = writeln!(
                    out,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="black"/>"#,
                    px(x),
                    py(y)
                );
            }
            2 => {
                let _ = writeln!(
                    out,
                    r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
                    px(x),
                    py(y),
                    cell.label
                );
            }
            _ => {}
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::enumerate_cells;
    use super::*;

    #[test]
    fn planar_only() {
        let arr = Arrangement::generic(3).unwrap();
        let c = enumerate_cells(&arr).unwrap();
        let svg = render_svg(&arr, &c).unwrap();
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<line").count(), 6);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches("<text").count(), 6);
        let arr4 = Arrangement::generic(4).unwrap();
        assert!(render_svg(&arr4, &enumerate_cells(&arr4).unwrap()).is_err());
    }
}
