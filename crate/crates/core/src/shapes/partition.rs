//! Multicoloured rectangle and circle whose inner partitions slide.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverNode, CursorHint, NodeShape, DEFAULT_HALF_STRIP};
use crate::engine::{MouseButton, MouseLink};
use crate::geometry::{distance, line_angle, normalize_angle, point_at, round_px, Point2, Rect};
use crate::object::{GestureStart, IdGen, Meta, Movable, Released};
use crate::scene::svg::Canvas;

use super::{circle_node_count, points_on_circle, single_compensation, GestureAux, Rotatable, ShapeError, SMALL_NODE_RADIUS};

pub const PARTITION_MIN_SIZE: f64 = 10.0;
pub const PARTITION_MIN_SEGMENT: f64 = 4.0;
pub const PARTITION_MIN_RADIUS: f64 = 15.0;
pub const PARTITION_MIN_SECTOR: f64 = 0.05;

const PALETTE: [&str; 6] = ["#e04040", "#40a040", "#4060e0", "#e0c020", "#a040c0", "#20b0b0"];

/// Rectangle split by vertical partitions. The width is always the sum of
/// the segment sizes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionedRect {
    pub meta: Meta,
    pub x: f64,
    pub y: f64,
    pub h: f64,
    pub segments: Vec<f64>,
    #[serde(skip)]
    aux: Option<GestureAux>,
}

impl PartitionedRect {
    pub fn new(ids: &mut IdGen, x: f64, y: f64, h: f64, segments: Vec<f64>) -> Result<Self, ShapeError> {
        if segments.is_empty() || segments.iter().any(|s| *s < PARTITION_MIN_SEGMENT) {
            return Err(ShapeError::Invalid(format!("every segment must be at least {PARTITION_MIN_SEGMENT}")));
        }
        if h < PARTITION_MIN_SIZE || segments.iter().sum::<f64>() < PARTITION_MIN_SIZE {
            return Err(ShapeError::Invalid(format!("sides must be at least {PARTITION_MIN_SIZE}")));
        }
        Ok(Self { meta: ids.meta(), x, y, h, segments, aux: None })
    }

    #[must_use]
    pub fn width(&self) -> f64 {
        self.segments.iter().sum()
    }

    #[must_use]
    pub fn rect(&self) -> Rect {
        Rect::new(self.x, self.y, self.width(), self.h)
    }

    /// Fractions of every segment and the index of the narrowest.
    #[must_use]
    pub fn distribution(&self) -> GestureAux {
        let w = self.width();
        let fractions: Vec<f64> = self.segments.iter().map(|s| s / w).collect();
        let narrowest = fractions
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .map_or(0, |(i, _)| i);
        GestureAux { fractions, narrowest, ..GestureAux::default() }
    }

    fn n_partitions(&self) -> usize {
        self.segments.len() - 1
    }

    /// Moves partition `k` (between segments `k` and `k + 1`) by `dx`.
    pub fn partition_move(&mut self, k: usize, dx: f64) -> bool {
        if k + 1 >= self.segments.len() {
            return false;
        }
        let left = self.segments[k] + dx;
        let right = self.segments[k + 1] - dx;
        if left >= PARTITION_MIN_SEGMENT && right >= PARTITION_MIN_SEGMENT {
            self.segments[k] = left;
            self.segments[k + 1] = right;
            return true;
        }
        false
    }

    /// Zooms the width by moving the left (`left = true`) or right border,
    /// keeping the fractions captured at catch.
    pub fn rect_zoom_with_ratio(&mut self, aux: &GestureAux, left: bool, dx: f64) -> bool {
        let w = self.width();
        let new_w = if left { w - dx } else { w + dx };
        let narrow = aux.fractions.get(aux.narrowest).copied().unwrap_or(1.0);
        if new_w < PARTITION_MIN_SIZE || new_w * narrow < PARTITION_MIN_SEGMENT {
            return false;
        }
        // Whole pixels, the last segment taking the remainder, so the sum
        // equals the new width exactly.
        let mut segs: Vec<f64> = aux.fractions.iter().map(|f| round_px(new_w * f)).collect();
        let n = segs.len();
        segs[n - 1] = new_w - segs[..n - 1].iter().sum::<f64>();
        if segs.iter().any(|s| *s < PARTITION_MIN_SEGMENT) {
            return false;
        }
        let right_edge = self.x + w;
        self.segments = segs;
        if left {
            self.x = right_edge - self.width();
        }
        true
    }
}

impl Movable for PartitionedRect {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    /// Left and right borders, the partitions, top and bottom borders, then the whole area.
    fn define_cover(&self) -> Cover {
        let r = self.rect();
        let s = DEFAULT_HALF_STRIP;
        let mut nodes = vec![
            CoverNode::rect(Rect::new(r.x - s, r.y, 2.0 * s, r.h)).with_cursor(CursorHint::SizeWE),
            CoverNode::rect(Rect::new(r.right() - s, r.y, 2.0 * s, r.h)).with_cursor(CursorHint::SizeWE),
        ];
        let mut at = r.x;
        for seg in &self.segments[..self.n_partitions()] {
            at += seg;
            nodes.push(CoverNode::rect(Rect::new(at - s, r.y, 2.0 * s, r.h)).with_cursor(CursorHint::SizeWE));
        }
        nodes.push(CoverNode::rect(Rect::new(r.x, r.y - s, r.w, 2.0 * s)).with_cursor(CursorHint::SizeNS));
        nodes.push(CoverNode::rect(Rect::new(r.x, r.bottom() - s, r.w, 2.0 * s)).with_cursor(CursorHint::SizeNS));
        nodes.push(CoverNode::rect(r).with_cursor(CursorHint::SizeAll));
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.x += dx;
        self.y += dy;
    }

    fn start_gesture(&mut self, node: usize, _pt: Point2, button: MouseButton) -> GestureStart {
        self.aux = (button == MouseButton::Left && node < 2).then(|| self.distribution());
        GestureStart::default()
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, _pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        if button != MouseButton::Left {
            return false;
        }
        let np = self.n_partitions();
        match node {
            0 | 1 => match self.aux.clone() {
                Some(aux) => self.rect_zoom_with_ratio(&aux, node == 0, dx),
                None => false,
            },
            n if n < 2 + np => self.partition_move(n - 2, dx),
            n if n == 2 + np => {
                let h = self.h - dy;
                if h >= PARTITION_MIN_SIZE {
                    self.y += dy;
                    self.h = h;
                    return true;
                }
                false
            }
            n if n == 3 + np => {
                let h = self.h + dy;
                if h >= PARTITION_MIN_SIZE {
                    self.h = h;
                    return true;
                }
                false
            }
            _ => {
                self.translate(dx, dy);
                true
            }
        }
    }

    fn finish_gesture(&mut self, _node: usize, _shape: NodeShape) -> Released {
        self.aux = None;
        Released::Keep
    }

    fn basic_points(&self) -> Vec<Point2> {
        let r = self.rect();
        vec![Point2::new(r.x, r.y), Point2::new(r.right(), r.bottom())]
    }

    fn bounds(&self) -> Rect {
        self.rect()
    }

    fn draw(&self, canvas: &mut Canvas) {
        let mut at = self.x;
        for (i, seg) in self.segments.iter().enumerate() {
            canvas.rect(Rect::new(at, self.y, *seg, self.h), PALETTE[i % PALETTE.len()]);
            at += seg;
        }
    }
}

/// Circle split into sectors by sliding partitions; resizable by its border
/// and rotatable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionedCircle {
    pub meta: Meta,
    pub center: Point2,
    pub radius: f64,
    /// Angle of partition 0, where sector 0 starts.
    pub angle: f64,
    /// Positive values; sectors are proportional to them.
    pub values: Vec<f64>,
    pub n_border: usize,
    #[serde(skip)]
    aux: Option<GestureAux>,
}

impl PartitionedCircle {
    pub fn new(ids: &mut IdGen, center: Point2, radius: f64, angle: f64, values: Vec<f64>) -> Result<Self, ShapeError> {
        if values.len() < 2 || values.iter().any(|v| !(*v > 0.0)) {
            return Err(ShapeError::Invalid("need at least two positive values".into()));
        }
        if radius < PARTITION_MIN_RADIUS {
            return Err(ShapeError::Invalid(format!("radius below {PARTITION_MIN_RADIUS}")));
        }
        let c = Self { meta: ids.meta(), center, radius, angle, values, n_border: circle_node_count(radius), aux: None };
        if c.sweeps().iter().any(|s| *s < PARTITION_MIN_SECTOR) {
            return Err(ShapeError::Invalid(format!("every sector must be at least {PARTITION_MIN_SECTOR} rad")));
        }
        Ok(c)
    }

    #[must_use]
    pub fn sweeps(&self) -> Vec<f64> {
        let total: f64 = self.values.iter().sum();
        self.values.iter().map(|v| 2.0 * PI * v / total).collect()
    }

    /// Angle of every partition, starting with partition 0.
    #[must_use]
    pub fn partition_angles(&self) -> Vec<f64> {
        let mut a = self.angle;
        self.sweeps()
            .iter()
            .map(|s| {
                let out = a;
                a += s;
                out
            })
            .collect()
    }

    pub fn redefine_cover_on_release(&mut self) {
        self.n_border = circle_node_count(self.radius);
    }

    /// Window for partition `k`: from the start of the sector before it to
    /// the end of the sector after it. `limits` holds (min angle, window width).
    #[must_use]
    pub fn start_resectoring(&self, k: usize) -> GestureAux {
        let n = self.values.len();
        let sweeps = self.sweeps();
        let before = (k + n - 1) % n;
        let min = self.partition_angles()[k] - sweeps[before];
        GestureAux {
            limits: (min, sweeps[before] + sweeps[k]),
            narrowest: k,
            ..GestureAux::default()
        }
    }

    /// Slides the captured partition toward `p`; both neighbours keep at least
    /// the minimum sector and their sum is conserved.
    pub fn partition_move(&mut self, aux: &GestureAux, p: Point2) -> bool {
        let n = self.values.len();
        let k = aux.narrowest;
        let (min, window) = aux.limits;
        let rel = (line_angle(self.center, p) - min).rem_euclid(2.0 * PI);
        if !(PARTITION_MIN_SECTOR < rel && rel < window - PARTITION_MIN_SECTOR) {
            return false;
        }
        let before = (k + n - 1) % n;
        let pair = self.values[before] + self.values[k];
        self.values[before] = pair * rel / window;
        self.values[k] = pair - self.values[before];
        if k == 0 {
            self.angle = normalize_angle(min + rel);
        }
        true
    }
}

impl Rotatable for PartitionedCircle {
    fn rotation_center(&self) -> Point2 {
        self.center
    }

    fn begin_rotation(&self, p: Point2) -> Result<GestureAux, ShapeError> {
        Ok(single_compensation(self.center, self.angle, p))
    }

    fn rotation_update(&mut self, aux: &GestureAux, p: Point2) {
        self.angle = normalize_angle(line_angle(self.center, p) - aux.compensation);
    }
}

impl Movable for PartitionedCircle {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    /// Border circles, partition strips, then the whole circle.
    fn define_cover(&self) -> Cover {
        let mut nodes: Vec<CoverNode> = points_on_circle(self.center, self.radius, self.n_border, 0.0)
            .into_iter()
            .map(|p| CoverNode::circle(p, SMALL_NODE_RADIUS))
            .collect();
        for a in self.partition_angles() {
            nodes.push(CoverNode::strip(self.center, point_at(self.center, a, self.radius), DEFAULT_HALF_STRIP));
        }
        nodes.push(CoverNode::circle(self.center, round_px(self.radius)).with_cursor(CursorHint::SizeAll).with_clearance(false));
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.center = self.center.offset(dx, dy);
    }

    fn start_gesture(&mut self, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        let parts = self.n_border..self.n_border + self.values.len();
        self.aux = match button {
            MouseButton::Right => self.begin_rotation(pt).ok(),
            MouseButton::Left if parts.contains(&node) => Some(self.start_resectoring(node - self.n_border)),
            MouseButton::Left => None,
        };
        GestureStart::default()
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        let whole = self.n_border + self.values.len();
        match (button, self.aux.clone()) {
            (MouseButton::Left, _) if node == whole => {
                self.translate(dx, dy);
                true
            }
            (MouseButton::Left, _) if node < self.n_border => {
                let r = round_px(distance(self.center, pt));
                if r != self.radius && r >= PARTITION_MIN_RADIUS {
                    self.radius = r;
                    return true;
                }
                false
            }
            (MouseButton::Left, Some(aux)) => self.partition_move(&aux, pt),
            (MouseButton::Right, Some(aux)) => {
                self.rotation_update(&aux, pt);
                true
            }
            _ => false,
        }
    }

    fn finish_gesture(&mut self, _node: usize, _shape: NodeShape) -> Released {
        self.aux = None;
        self.redefine_cover_on_release();
        Released::Keep
    }

    fn basic_points(&self) -> Vec<Point2> {
        let mut pts = vec![self.center];
        pts.extend(self.partition_angles().into_iter().map(|a| point_at(self.center, a, self.radius)));
        pts
    }

    fn bounds(&self) -> Rect {
        Rect::new(self.center.x - self.radius, self.center.y - self.radius, 2.0 * self.radius, 2.0 * self.radius)
    }

    fn draw(&self, canvas: &mut Canvas) {
        for (i, (a, s)) in self.partition_angles().into_iter().zip(self.sweeps()).enumerate() {
            canvas.sector(self.center, self.radius, a, s, PALETTE[i % PALETTE.len()]);
        }
    }
}

crate::leaf_assembly!(PartitionedRect, PartitionedCircle);
