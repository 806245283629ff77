//! Rotatable text label. The host measures the text and supplies the box size.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverNode, CursorHint};
use crate::engine::{MouseButton, MouseLink};
use crate::geometry::{line_angle, normalize_angle, Point2};
use crate::object::{GestureStart, IdGen, Meta, Movable};
use crate::scene::svg::Canvas;

use super::{single_compensation, GestureAux, Rotatable, ShapeError};

/// Which point of the box stays at the anchor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum TextBasis {
    NW,
    N,
    NE,
    W,
    #[default]
    M,
    E,
    SW,
    S,
    SE,
}

impl TextBasis {
    /// Fractions of width and height from the top-left corner.
    #[must_use]
    pub fn fractions(self) -> (f64, f64) {
        match self {
            Self::NW => (0.0, 0.0),
            Self::N => (0.5, 0.0),
            Self::NE => (1.0, 0.0),
            Self::W => (0.0, 0.5),
            Self::M => (0.5, 0.5),
            Self::E => (1.0, 0.5),
            Self::SW => (0.0, 1.0),
            Self::S => (0.5, 1.0),
            Self::SE => (1.0, 1.0),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelBox {
    pub meta: Meta,
    pub text: String,
    /// Position of the basis point; also the rotation center.
    pub anchor: Point2,
    pub basis: TextBasis,
    pub width: f64,
    pub height: f64,
    pub angle: f64,
    #[serde(skip)]
    aux: Option<GestureAux>,
}

impl LabelBox {
    pub fn new(ids: &mut IdGen, text: impl Into<String>, anchor: Point2, basis: TextBasis, width: f64, height: f64, angle: f64) -> Result<Self, ShapeError> {
        if !(width > 0.0 && height > 0.0) {
            return Err(ShapeError::Invalid("label size must be positive".into()));
        }
        Ok(Self { meta: ids.meta(), text: text.into(), anchor, basis, width, height, angle, aux: None })
    }

    /// New size from the host after the text or font changed.
    pub fn remeasure(&mut self, width: f64, height: f64) {
        if width > 0.0 && height > 0.0 {
            self.width = width;
            self.height = height;
        }
    }

    /// Maps box-local offsets from the top-left corner to the screen.
    fn local(&self, u: f64, v: f64) -> Point2 {
        let (fx, fy) = self.basis.fractions();
        let (u, v) = (u - fx * self.width, v - fy * self.height);
        let (s, c) = self.angle.sin_cos();
        Point2::new(self.anchor.x + u * c + v * s, self.anchor.y - u * s + v * c)
    }

    /// Corners clockwise from the top-left one.
    #[must_use]
    pub fn corners(&self) -> [Point2; 4] {
        [
            self.local(0.0, 0.0),
            self.local(self.width, 0.0),
            self.local(self.width, self.height),
            self.local(0.0, self.height),
        ]
    }
}

impl Rotatable for LabelBox {
    fn rotation_center(&self) -> Point2 {
        self.anchor
    }

    fn begin_rotation(&self, p: Point2) -> Result<GestureAux, ShapeError> {
        Ok(single_compensation(self.anchor, self.angle, p))
    }

    fn rotation_update(&mut self, aux: &GestureAux, p: Point2) {
        self.angle = normalize_angle(line_angle(self.anchor, p) - aux.compensation);
    }
}

impl Movable for LabelBox {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn define_cover(&self) -> Cover {
        Cover::assemble(vec![CoverNode::polygon(self.corners().to_vec()).with_cursor(CursorHint::SizeAll)])
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.anchor = self.anchor.offset(dx, dy);
    }

    fn start_gesture(&mut self, _node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        self.aux = (button == MouseButton::Right).then(|| single_compensation(self.anchor, self.angle, pt));
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
        self.corners().to_vec()
    }

    fn draw(&self, canvas: &mut Canvas) {
        canvas.polygon(&self.corners(), "#fffbe0");
        let baseline = self.local(2.0, self.height * 0.75);
        canvas.text(baseline, self.angle, &self.text);
    }
}

crate::leaf_assembly!(LabelBox);
