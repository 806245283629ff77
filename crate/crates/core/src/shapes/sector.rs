//! Circle sector no wider than a half circle. Two transparent half-disc
//! squares cut the sector out of one big circular node; flags choose which of
//! the arc and the two sides are resizable.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::cover::{Behaviour, Cover, CoverNode, CursorHint, NodeShape, DEFAULT_NODE_RADIUS};
use crate::engine::{MouseButton, MouseLink};
use crate::geometry::{distance, line_angle, normalize_angle, opposite_side, point_at, round_px, Point2};
use crate::object::{GestureStart, IdGen, Meta, Movable, Released};
use crate::scene::svg::Canvas;

use super::{arc_node_count, points_on_arc, single_compensation, GestureAux, Rotatable, ShapeError, SMALL_NODE_RADIUS};

pub const SECTOR_MIN_RADIUS: f64 = 15.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SectorFlags {
    pub arc_resizable: bool,
    /// Side at `angle_start + angle_sweep`, drawn wide.
    pub end_side_movable: bool,
    /// Side at `angle_start`.
    pub start_side_movable: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sector {
    pub meta: Meta,
    pub center: Point2,
    pub radius: f64,
    pub angle_start: f64,
    /// Signed; |sweep| never exceeds a half turn.
    pub angle_sweep: f64,
    pub flags: SectorFlags,
    pub min_radius: f64,
    /// Direction in which the sector opens, fixed at construction.
    pub opens_ccw: bool,
    /// Arc node count; refreshed on release.
    pub n_arc: usize,
    #[serde(skip)]
    aux: Option<GestureAux>,
}

impl Sector {
    pub fn new(ids: &mut IdGen, center: Point2, radius: f64, angle_start: f64, angle_sweep: f64, flags: SectorFlags) -> Result<Self, ShapeError> {
        if angle_sweep.abs() > PI {
            return Err(ShapeError::Invalid("sector sweep exceeds a half turn".into()));
        }
        if radius < SECTOR_MIN_RADIUS {
            return Err(ShapeError::Invalid(format!("sector radius below {SECTOR_MIN_RADIUS}")));
        }
        Ok(Self {
            meta: ids.meta(),
            center,
            radius,
            angle_start: normalize_angle(angle_start),
            angle_sweep,
            flags,
            min_radius: SECTOR_MIN_RADIUS,
            opens_ccw: angle_sweep >= 0.0,
            n_arc: arc_node_count(angle_sweep, radius),
            aux: None,
        })
    }

    #[must_use]
    pub fn angle_end(&self) -> f64 {
        self.angle_start + self.angle_sweep
    }

    /// Side node ids in cover order: end side, then start side, each only if movable.
    fn side_ids(&self) -> (Option<usize>, Option<usize>) {
        match (self.flags.end_side_movable, self.flags.start_side_movable) {
            (true, true) => (Some(0), Some(1)),
            (true, false) => (Some(0), None),
            (false, true) => (None, Some(0)),
            (false, false) => (None, None),
        }
    }

    fn n_sides(&self) -> usize {
        usize::from(self.flags.end_side_movable) + usize::from(self.flags.start_side_movable)
    }

    fn n_arc_nodes(&self) -> usize {
        if self.flags.arc_resizable {
            self.n_arc
        } else {
            0
        }
    }

    fn both_sides(&self) -> bool {
        self.flags.end_side_movable && self.flags.start_side_movable
    }

    pub fn redefine_cover_on_release(&mut self) {
        self.n_arc = arc_node_count(self.angle_sweep, self.radius);
    }

    /// Captures the allowed half plane (both sides movable) or the small grab
    /// offset (one side movable) for the side `moving_end`.
    fn start_resectoring(&self, moving_end: bool, p: Point2) -> GestureAux {
        if self.both_sides() {
            let fixed = if moving_end { self.angle_start } else { normalize_angle(self.angle_end()) };
            let seg0 = point_at(self.center, fixed, self.radius);
            let seg1 = point_at(self.center, fixed + PI, self.radius);
            let toward = match (moving_end, self.opens_ccw) {
                (true, true) | (false, false) => fixed + FRAC_PI_2,
                _ => fixed - FRAC_PI_2,
            };
            let inside = point_at(self.center, toward, self.radius);
            GestureAux { half_plane: Some((seg0, seg1, inside)), ..GestureAux::default() }
        } else {
            let side = if moving_end { self.angle_end() } else { self.angle_start };
            GestureAux {
                compensation: normalize_angle(line_angle(self.center, p) - side),
                ..GestureAux::default()
            }
        }
    }

    /// Turns one side toward `p`. Returns false when the move would flip the
    /// sector or open it beyond a half turn.
    pub fn sector_side_move(&mut self, aux: &GestureAux, moving_end: bool, p: Point2) -> bool {
        let am = line_angle(self.center, p);
        if let Some((s0, s1, inside)) = aux.half_plane {
            if opposite_side(s0, s1, p, inside).unwrap_or(false) {
                return false;
            }
            if moving_end {
                self.angle_sweep = self.signed_sweep(am - self.angle_start);
            } else {
                let end = normalize_angle(self.angle_end());
                self.angle_sweep = self.signed_sweep(end - am);
                self.angle_start = normalize_angle(end - self.angle_sweep);
            }
            return true;
        }
        let side = am - aux.compensation;
        let sweep = if moving_end {
            self.signed_sweep(side - self.angle_start)
        } else {
            self.signed_sweep(self.angle_end() - side)
        };
        if (sweep >= 0.0) != self.opens_ccw && sweep != 0.0 {
            return false;
        }
        if !moving_end {
            let end = self.angle_end();
            self.angle_start = normalize_angle(end - sweep);
        }
        self.angle_sweep = sweep;
        true
    }

    /// Normalizes a sweep while keeping the half-turn edge on the opening side.
    fn signed_sweep(&self, a: f64) -> f64 {
        let s = normalize_angle(a);
        if !self.opens_ccw && s == PI {
            -PI
        } else {
            s
        }
    }

    fn transparent_squares(&self) -> [Vec<Point2>; 2] {
        let (a, b) = if self.angle_sweep >= 0.0 {
            (self.angle_end(), self.angle_start)
        } else {
            (self.angle_start, self.angle_end())
        };
        let (c, r) = (self.center, self.radius);
        let pa = point_at(c, a, r);
        let pb = point_at(c, b, r);
        [
            vec![pa, point_at(pa, a + FRAC_PI_2, r), point_at(c, a + 3.0 * FRAC_PI_4, r * SQRT_2), point_at(c, a - PI, r)],
            vec![pb, point_at(c, b - PI, r), point_at(c, b - 3.0 * FRAC_PI_4, r * SQRT_2), point_at(pb, b - FRAC_PI_2, r)],
        ]
    }
}

impl Rotatable for Sector {
    fn rotation_center(&self) -> Point2 {
        self.center
    }

    fn begin_rotation(&self, p: Point2) -> Result<GestureAux, ShapeError> {
        Ok(single_compensation(self.center, self.angle_start, p))
    }

    fn rotation_update(&mut self, aux: &GestureAux, p: Point2) {
        self.angle_start = normalize_angle(line_angle(self.center, p) - aux.compensation);
    }
}

impl Movable for Sector {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn define_cover(&self) -> Cover {
        let (c, r) = (self.center, self.radius);
        let mut nodes = Vec::new();
        if self.flags.end_side_movable {
            nodes.push(CoverNode::strip(c, point_at(c, self.angle_end(), r), DEFAULT_NODE_RADIUS));
        }
        if self.flags.start_side_movable {
            nodes.push(CoverNode::strip(c, point_at(c, self.angle_start, r), DEFAULT_NODE_RADIUS));
        }
        if self.flags.arc_resizable {
            nodes.extend(
                points_on_arc(c, r, self.angle_start, self.angle_sweep, self.n_arc)
                    .into_iter()
                    .map(|p| CoverNode::circle(p, SMALL_NODE_RADIUS)),
            );
        }
        for sq in self.transparent_squares() {
            nodes.push(CoverNode::polygon(sq).with_behaviour(Behaviour::Transparent));
        }
        nodes.push(CoverNode::circle(c, r).with_cursor(CursorHint::SizeAll).with_clearance(false));
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.center = self.center.offset(dx, dy);
    }

    fn start_gesture(&mut self, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        let (end_id, start_id) = self.side_ids();
        self.aux = match button {
            MouseButton::Right => self.begin_rotation(pt).ok(),
            MouseButton::Left if Some(node) == end_id => Some(self.start_resectoring(true, pt)),
            MouseButton::Left if Some(node) == start_id => Some(self.start_resectoring(false, pt)),
            MouseButton::Left => None,
        };
        GestureStart::default()
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        let (end_id, start_id) = self.side_ids();
        let arc = self.n_sides()..self.n_sides() + self.n_arc_nodes();
        match (button, self.aux.clone()) {
            (MouseButton::Left, Some(aux)) if Some(node) == end_id || Some(node) == start_id => {
                self.sector_side_move(&aux, Some(node) == end_id, pt)
            }
            (MouseButton::Left, _) if arc.contains(&node) => {
                let r = round_px(distance(self.center, pt));
                if r != self.radius && r >= self.min_radius {
                    self.radius = r;
                    return true;
                }
                false
            }
            (MouseButton::Left, _) => {
                self.translate(dx, dy);
                true
            }
            (MouseButton::Right, Some(aux)) => {
                self.rotation_update(&aux, pt);
                true
            }
            (MouseButton::Right, None) => false,
        }
    }

    fn finish_gesture(&mut self, _node: usize, _shape: NodeShape) -> Released {
        self.aux = None;
        self.redefine_cover_on_release();
        Released::Keep
    }

    fn pops_on_click(&self, node: usize, _shape: NodeShape) -> bool {
        node == self.define_cover().last_id()
    }

    fn basic_points(&self) -> Vec<Point2> {
        vec![
            self.center,
            point_at(self.center, self.angle_start, self.radius),
            point_at(self.center, self.angle_end(), self.radius),
        ]
    }

    fn draw(&self, canvas: &mut Canvas) {
        canvas.sector(self.center, self.radius, self.angle_start, self.angle_sweep, &self.meta.color);
        canvas.line(self.center, point_at(self.center, self.angle_end(), self.radius), "#202020", 3.0);
    }
}

crate::leaf_assembly!(Sector);
