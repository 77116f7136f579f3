//! SVG rendering of an instance and, optionally, a solution.

use std::fmt::Write;

use crate::geometry::{Instance, Point, Solution};

const RED: &str = "#d62728";
const BLUE: &str = "#1f77b4";
const GRAY: &str = "#555555";

pub fn render_svg(inst: &Instance, sol: Option<&Solution>) -> String {
    let pts = inst.points();
    let (mut lo, mut hi) = bounds(&pts);
    if let Some(s) = sol {
        for d in [&s.disk1, &s.disk2] {
            lo = Point::new(lo.x.min(d.center.x - d.radius), lo.y.min(d.center.y - d.radius));
            hi = Point::new(hi.x.max(d.center.x + d.radius), hi.y.max(d.center.y + d.radius));
        }
    }
    let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
    let pad = 0.05 * span;
    let (w, h) = (hi.x - lo.x + 2.0 * pad, hi.y - lo.y + 2.0 * pad);
    let dot = 0.006 * span;
    let stroke = 0.002 * span;
    // Flip y so the picture has the usual orientation.
    let fy = |y: f64| lo.y + hi.y - y;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="640" height="{}">"#,
        lo.x - pad,
        lo.y - pad,
        w,
        h,
        (640.0 * h / w).round()
    );
    if let Some(s) = sol {
        for (d, color) in [(&s.disk1, RED), (&s.disk2, BLUE)] {
            let _ = writeln!(
                out,
                r#"  <circle cx="{}" cy="{}" r="{}" fill="{color}" fill-opacity="0.15" stroke="{color}" stroke-width="{stroke}"/>"#,
                d.center.x,
                fy(d.center.y),
                d.radius
            );
        }
    }
    for (k, p) in inst.pairs().iter().enumerate() {
        let _ = writeln!(
            out,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{GRAY}" stroke-opacity="0.5" stroke-width="{}"/>"#,
            p.first.x,
            fy(p.first.y),
            p.second.x,
            fy(p.second.y),
            stroke * 0.5
        );
        let (c1, c2) = match sol.and_then(|s| s.coloring.get(k)) {
            Some(true) => (RED, BLUE),
            Some(false) => (BLUE, RED),
            None => (GRAY, GRAY),
        };
        for (q, color) in [(p.first, c1), (p.second, c2)] {
            let _ = writeln!(
                out,
                r#"  <circle cx="{}" cy="{}" r="{dot}" fill="{color}"/>"#,
                q.x,
                fy(q.y)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

fn bounds(pts: &[Point]) -> (Point, Point) {
    pts.iter().fold(
        (
            Point::new(f64::INFINITY, f64::INFINITY),
            Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        ),
        |(lo, hi), p| {
            (
                Point::new(lo.x.min(p.x), lo.y.min(p.y)),
                Point::new(hi.x.max(p.x), hi.y.max(p.y)),
            )
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Disk;

    #[test]
    fn renders_points_and_disks() {
        let inst = Instance::from_coords(&[((0.0, 0.0), (4.0, 0.0)), ((0.0, 1.0), (4.0, 1.0))]).unwrap();
        let bare = render_svg(&inst, None);
        assert_eq!(bare.matches("<circle").count(), 4);
        assert_eq!(bare.matches("<line").count(), 2);
        let sol = Solution {
            disk1: Disk::new(Point::new(0.0, 0.5), 0.5),
            disk2: Disk::new(Point::new(4.0, 0.5), 0.5),
            coloring: vec![true, true],
            radius: 0.5,
        };
        let svg = render_svg(&inst, Some(&sol));
        assert_eq!(svg.matches("<circle").count(), 6);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    }
}
