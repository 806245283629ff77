//! Circle split into coloured sectors; it moves and rotates but never resizes.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverNode, CursorHint};
use crate::engine::{MouseButton, MouseLink};
use crate::geometry::{line_angle, normalize_angle, point_at, Point2, Rect};
use crate::object::{GestureStart, IdGen, Meta, Movable};
use crate::scene::svg::Canvas;

use super::{single_compensation, GestureAux, Rotatable, ShapeError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectoredCircle {
    pub meta: Meta,
    pub center: Point2,
    pub radius: f64,
    /// Start angle of the first sector.
    pub angle: f64,
    /// Relative sector sizes.
    pub weights: Vec<f64>,
    #[serde(skip)]
    aux: Option<GestureAux>,
}

impl SectoredCircle {
    pub fn new(ids: &mut IdGen, center: Point2, radius: f64, angle: f64, weights: Vec<f64>) -> Result<Self, ShapeError> {
        if weights.is_empty() || weights.iter().any(|w| !(*w > 0.0)) {
            return Err(ShapeError::Invalid("sector weights must be positive".into()));
        }
        Ok(Self { meta: ids.meta(), center, radius, angle, weights, aux: None })
    }

    /// Points on the border at every sector boundary, plus the center.
    fn marks(&self) -> Vec<Point2> {
        let total: f64 = self.weights.iter().sum();
        let mut a = self.angle;
        let mut out = vec![self.center];
        for w in &self.weights {
            out.push(point_at(self.center, a, self.radius));
            a += 2.0 * std::f64::consts::PI * w / total;
        }
        out
    }
}

impl Rotatable for SectoredCircle {
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

impl Movable for SectoredCircle {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn define_cover(&self) -> Cover {
        Cover::assemble(vec![CoverNode::circle(self.center, self.radius).with_cursor(CursorHint::SizeAll)])
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.center = self.center.offset(dx, dy);
    }

    fn start_gesture(&mut self, _node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        self.aux = (button == MouseButton::Right).then(|| single_compensation(self.center, self.angle, pt));
        GestureStart::default()
    }

    fn move_node(&mut self, _node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        match button {
            MouseButton::Left => {
                self.translate(dx, dy);
                true
            }
            MouseButton::Right => match self.aux.clone() {
                Some(aux) => {
                    self.rotation_update(&aux, pt);
                    true
                }
                None => false,
            },
        }
    }

    fn basic_points(&self) -> Vec<Point2> {
        self.marks()
    }

    fn bounds(&self) -> Rect {
        Rect::new(self.center.x - self.radius, self.center.y - self.radius, 2.0 * self.radius, 2.0 * self.radius)
    }

    fn draw(&self, canvas: &mut Canvas) {
        let total: f64 = self.weights.iter().sum();
        let mut a = self.angle;
        for (i, w) in self.weights.iter().enumerate() {
            let sweep = 2.0 * std::f64::consts::PI * w / total;
            let shade = if i % 2 == 0 { self.meta.color.as_str() } else { "#e0e0e0" };
            canvas.sector(self.center, self.radius, a, sweep, shade);
            a += sweep;
        }
    }
}

crate::leaf_assembly!(SectoredCircle);
