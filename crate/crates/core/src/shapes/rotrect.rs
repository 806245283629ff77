//! Rectangle at an arbitrary angle: resizable by corners and sides, rotatable
//! around its center.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverNode, CursorHint, DEFAULT_CORNER_RADIUS, DEFAULT_HALF_STRIP};
use crate::engine::{MouseButton, MouseLink};
use crate::geometry::{distance, line_angle, normalize_angle, point_at, Point2};
use crate::object::{GestureStart, IdGen, Meta, Movable};
use crate::scene::svg::Canvas;

use super::{single_compensation, GestureAux, Rotatable, ShapeError, RECT_MIN_SIZE};

/// Unrotated corner order: right-top, left-top, left-bottom, right-bottom.
/// Side node `4 + i` joins corner `i` to corner `i + 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RotRect {
    pub meta: Meta,
    pub center: Point2,
    pub w: f64,
    pub h: f64,
    pub angle: f64,
    pub min_side: f64,
    pub resizable: bool,
    pub rotatable: bool,
    #[serde(skip)]
    gesture: Option<RotGesture>,
}

#[derive(Debug, Clone, PartialEq)]
enum RotGesture {
    Rotate(GestureAux),
    /// Fixed corner and the quadrant signs the dragged corner must keep.
    Corner { fixed: Point2, sign_u: f64, sign_v: f64 },
    /// Midpoint of the fixed side and the outward direction of the moved one.
    Side { fixed_mid: Point2, outward: f64, horizontal: bool },
}

impl RotRect {
    pub fn new(ids: &mut IdGen, center: Point2, w: f64, h: f64, angle: f64) -> Self {
        Self {
            meta: ids.meta(),
            center,
            w: w.abs().max(RECT_MIN_SIZE),
            h: h.abs().max(RECT_MIN_SIZE),
            angle,
            min_side: RECT_MIN_SIZE,
            resizable: true,
            rotatable: true,
            gesture: None,
        }
    }

    #[must_use]
    pub fn corners(&self) -> [Point2; 4] {
        let r = self.w.hypot(self.h) / 2.0;
        let ap = self.h.atan2(self.w);
        let pi = std::f64::consts::PI;
        [
            point_at(self.center, self.angle + ap, r),
            point_at(self.center, self.angle - ap + pi, r),
            point_at(self.center, self.angle + ap + pi, r),
            point_at(self.center, self.angle - ap, r),
        ]
    }

    /// Coordinates of `p` in the rectangle frame: u along the angle, v perpendicular (screen-up positive).
    fn frame(&self, origin: Point2, p: Point2) -> (f64, f64) {
        let d = distance(origin, p);
        let a = line_angle(origin, p) - self.angle;
        (d * a.cos(), d * a.sin())
    }

    fn corner_move(&mut self, fixed: Point2, sign_u: f64, sign_v: f64, p: Point2) -> bool {
        let (u, v) = self.frame(fixed, p);
        if u * sign_u <= 0.0 || v * sign_v <= 0.0 {
            return false;
        }
        let (nw, nh) = (u.abs(), v.abs());
        if nw < self.min_side || nh < self.min_side {
            return false;
        }
        self.w = nw;
        self.h = nh;
        self.center = fixed.midpoint(p);
        true
    }

    fn side_move(&mut self, fixed_mid: Point2, outward: f64, horizontal: bool, p: Point2) -> bool {
        let d = distance(fixed_mid, p);
        let extent = d * (line_angle(fixed_mid, p) - outward).cos();
        if extent < self.min_side {
            return false;
        }
        if horizontal {
            self.w = extent;
        } else {
            self.h = extent;
        }
        self.center = point_at(fixed_mid, outward, extent / 2.0);
        true
    }
}

impl Rotatable for RotRect {
    fn rotation_center(&self) -> Point2 {
        self.center
    }

    fn begin_rotation(&self, p: Point2) -> Result<GestureAux, ShapeError> {
        if !self.rotatable {
            return Err(ShapeError::NotRotatable);
        }
        Ok(single_compensation(self.center, self.angle, p))
    }

    fn rotation_update(&mut self, aux: &GestureAux, p: Point2) {
        self.angle = normalize_angle(line_angle(self.center, p) - aux.compensation);
    }
}

impl Movable for RotRect {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn define_cover(&self) -> Cover {
        let pts = self.corners();
        if !self.resizable {
            return Cover::assemble(vec![CoverNode::polygon(pts.to_vec()).with_cursor(CursorHint::SizeAll)]);
        }
        let mut nodes: Vec<CoverNode> = pts.iter().map(|p| CoverNode::circle(*p, DEFAULT_CORNER_RADIUS)).collect();
        nodes.extend((0..4).map(|i| CoverNode::strip(pts[i], pts[(i + 1) % 4], DEFAULT_HALF_STRIP)));
        nodes.push(CoverNode::polygon(pts.to_vec()).with_cursor(CursorHint::SizeAll));
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.center = self.center.offset(dx, dy);
    }

    fn start_gesture(&mut self, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        let pts = self.corners();
        self.gesture = match button {
            MouseButton::Right => self.begin_rotation(pt).ok().map(RotGesture::Rotate),
            MouseButton::Left if self.resizable && node < 4 => {
                let fixed = pts[(node + 2) % 4];
                let (u, v) = self.frame(fixed, pts[node]);
                Some(RotGesture::Corner { fixed, sign_u: u.signum(), sign_v: v.signum() })
            }
            MouseButton::Left if self.resizable && node < 8 => {
                let i = node - 4;
                let moved_mid = pts[i].midpoint(pts[(i + 1) % 4]);
                let fixed_mid = pts[(i + 2) % 4].midpoint(pts[(i + 3) % 4]);
                Some(RotGesture::Side {
                    fixed_mid,
                    outward: line_angle(fixed_mid, moved_mid),
                    // Sides 1 and 3 (left and right) change the width.
                    horizontal: i % 2 == 1,
                })
            }
            MouseButton::Left => None,
        };
        GestureStart::default()
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        let whole = self.define_cover().last_id();
        match (button, self.gesture.clone()) {
            (MouseButton::Left, _) if node == whole => {
                self.translate(dx, dy);
                true
            }
            (MouseButton::Left, Some(RotGesture::Corner { fixed, sign_u, sign_v })) => self.corner_move(fixed, sign_u, sign_v, pt),
            (MouseButton::Left, Some(RotGesture::Side { fixed_mid, outward, horizontal })) => self.side_move(fixed_mid, outward, horizontal, pt),
            (MouseButton::Right, Some(RotGesture::Rotate(aux))) => {
                self.rotation_update(&aux, pt);
                true
            }
            _ => false,
        }
    }

    fn basic_points(&self) -> Vec<Point2> {
        self.corners().to_vec()
    }

    fn draw(&self, canvas: &mut Canvas) {
        canvas.polygon(&self.corners(), &self.meta.color);
    }
}

crate::leaf_assembly!(RotRect);
