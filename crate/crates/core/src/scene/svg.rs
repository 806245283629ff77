//! SVG output: shapes back to front, then optional cover outlines.

use std::fmt::Write;

use crate::cover::{Behaviour, CoverPrimitive, NodeGeometry};
use crate::geometry::{line_angle, point_at, Point2, Rect};

/// Minimal SVG writer. Numbers use Rust's shortest round-trip formatting so
/// output is byte-stable.
#[derive(Debug, Default)]
pub struct Canvas {
    body: String,
}

fn pts(points: &[Point2]) -> String {
    points
        .iter()
        .map(|p| format!("{},{}", p.x, p.y))
        .collect::<Vec<_>>()
        .join(" ")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

impl Canvas {
    #[must_use]
    pub fn new() -> Self {
        Self::default()
    }

    pub fn open_group(&mut self, class: &str, id: Option<u64>) {
        match id {
            Some(id) => {
                let _ = writeln!(self.body, "<g class=\"{}\" data-id=\"{id}\">", escape(class));
            }
            None => {
                let _ = writeln!(self.body, "<g class=\"{}\">", escape(class));
            }
        }
    }

    pub fn close_group(&mut self) {
        self.body.push_str("</g>\n");
    }

    pub fn rect(&mut self, r: Rect, fill: &str) {
        let _ = writeln!(
            self.body,
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" stroke=\"#202020\"/>",
            r.x, r.y, r.w, r.h, escape(fill)
        );
    }

    pub fn framed_rect(&mut self, r: Rect, fill: &str, opacity: f64, stroke: Option<&str>) {
        let stroke = stroke.map_or("none".to_string(), escape);
        let _ = writeln!(
            self.body,
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" fill-opacity=\"{}\" stroke=\"{}\"/>",
            r.x, r.y, r.w, r.h, escape(fill), opacity, stroke
        );
    }

    pub fn polygon(&mut self, points: &[Point2], fill: &str) {
        let _ = writeln!(
            self.body,
            "<polygon points=\"{}\" fill=\"{}\" stroke=\"#202020\"/>",
            pts(points),
            escape(fill)
        );
    }

    pub fn circle(&mut self, c: Point2, r: f64, fill: &str) {
        let _ = writeln!(
            self.body,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\" stroke=\"#202020\"/>",
            c.x, c.y, r, escape(fill)
        );
    }

    pub fn polyline(&mut self, points: &[Point2], stroke: &str, width: f64) {
        let _ = writeln!(
            self.body,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"/>",
            pts(points),
            escape(stroke),
            width
        );
    }

    pub fn line(&mut self, a: Point2, b: Point2, stroke: &str, width: f64) {
        self.polyline(&[a, b], stroke, width);
    }

    pub fn path(&mut self, d: &str, fill: &str) {
        let _ = writeln!(
            self.body,
            "<path d=\"{}\" fill=\"{}\" stroke=\"#202020\"/>",
            d,
            escape(fill)
        );
    }

    /// Outline with holes cut out by the even-odd rule.
    pub fn evenodd_path(&mut self, d: &str, fill: &str) {
        let _ = writeln!(
            self.body,
            "<path d=\"{d}\" fill=\"{}\" fill-rule=\"evenodd\" stroke=\"#202020\"/>",
            escape(fill)
        );
    }

    /// Circle with a concentric hole.
    pub fn ring(&mut self, c: Point2, outer: f64, inner: f64, fill: &str) {
        let d = format!(
            "M {} {} a {o} {o} 0 1 0 {} 0 a {o} {o} 0 1 0 {} 0 Z M {} {} a {i} {i} 0 1 1 {} 0 a {i} {i} 0 1 1 {} 0 Z",
            c.x - outer,
            c.y,
            2.0 * outer,
            -2.0 * outer,
            c.x - inner,
            c.y,
            2.0 * inner,
            -2.0 * inner,
            o = outer,
            i = inner
        );
        let _ = writeln!(
            self.body,
            "<path d=\"{d}\" fill=\"{}\" fill-rule=\"evenodd\" stroke=\"#202020\"/>",
            escape(fill)
        );
    }

    /// Pie slice from `start` sweeping `sweep` radians anticlockwise on screen.
    pub fn sector(&mut self, c: Point2, r: f64, start: f64, sweep: f64, fill: &str) {
        let a = point_at(c, start, r);
        let b = point_at(c, start + sweep, r);
        let large = u8::from(sweep.abs() > std::f64::consts::PI);
        let sweep_flag = u8::from(sweep < 0.0);
        let d = format!(
            "M {} {} L {} {} A {r} {r} 0 {large} {sweep_flag} {} {} Z",
            c.x, c.y, a.x, a.y, b.x, b.y
        );
        self.path(&d, fill);
    }

    pub fn capsule(&mut self, p0: Point2, p1: Point2, r: f64, fill: &str, fill_opacity: f64) {
        let d = capsule_path(p0, p1, r);
        let _ = writeln!(
            self.body,
            "<path d=\"{d}\" fill=\"{}\" fill-opacity=\"{}\" stroke=\"#202020\"/>",
            escape(fill),
            fill_opacity
        );
    }

    pub fn text(&mut self, at: Point2, angle: f64, s: &str) {
        let deg = -angle.to_degrees();
        let _ = writeln!(
            self.body,
            "<text x=\"{}\" y=\"{}\" transform=\"rotate({} {} {})\" font-size=\"12\">{}</text>",
            at.x,
            at.y,
            deg,
            at.x,
            at.y,
            escape(s)
        );
    }

    /// Outline of one cover node. Circles stay circles, strips become capsule
    /// paths, polygons stay polygons.
    pub fn cover_node(&mut self, prim: &CoverPrimitive) {
        let stroke = match prim.behaviour {
            Behaviour::Moveable => "#d02020",
            Behaviour::Frozen => "#2060d0",
            Behaviour::Transparent => "#20a020",
            Behaviour::Nonmoveable => "#606060",
        };
        let fill = if prim.filled { "#ffffff" } else { "none" };
        let attrs = format!(
            "fill=\"{fill}\" stroke=\"{stroke}\" stroke-width=\"1\" data-node=\"{}\"",
            prim.node
        );
        let _ = match &prim.geometry {
            NodeGeometry::Circle { radius, .. } if *radius < 0.0 => Ok(()),
            NodeGeometry::Circle { center, radius } => writeln!(
                self.body,
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" {attrs}/>",
                center.x, center.y, radius
            ),
            NodeGeometry::Strip { p0, p1, radius } => writeln!(
                self.body,
                "<path class=\"capsule\" d=\"{}\" {attrs}/>",
                capsule_path(*p0, *p1, *radius)
            ),
            NodeGeometry::Polygon { vertices } => {
                writeln!(self.body, "<polygon points=\"{}\" {attrs}/>", pts(vertices))
            }
        };
    }

    #[must_use]
    pub fn finish(self, width: f64, height: f64) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n{}</svg>\n",
            self.body
        )
    }
}

fn capsule_path(p0: Point2, p1: Point2, r: f64) -> String {
    let a = line_angle(p0, p1);
    let half = std::f64::consts::FRAC_PI_2;
    let s0 = point_at(p0, a + half, r);
    let s1 = point_at(p1, a + half, r);
    let e1 = point_at(p1, a - half, r);
    let e0 = point_at(p0, a - half, r);
    format!(
        "M {} {} L {} {} A {r} {r} 0 0 1 {} {} L {} {} A {r} {r} 0 0 1 {} {} Z",
        s0.x, s0.y, s1.x, s1.y, e1.x, e1.y, e0.x, e0.y, s0.x, s0.y
    )
}
