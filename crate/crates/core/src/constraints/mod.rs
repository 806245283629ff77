//! Objects whose moves are checked against a region, their neighbours or a
//! set of walls, and rejected when the check fails.

use serde::{Deserialize, Serialize};

use crate::geometry::{point_segment_distance, segment_segment_distance, segments_cross, Point2};

pub mod adhered;
pub mod balls;
pub mod slider;

pub use adhered::{AdheredStrip, Ball, Labyrinth, PolyWithBall};
pub use balls::BallBoard;
pub use slider::{Slider, SliderBoard, SliderDir};

/// Zero-thickness wall segment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Wall {
    pub p0: Point2,
    pub p1: Point2,
}

impl Wall {
    #[must_use]
    pub const fn new(p0: Point2, p1: Point2) -> Self {
        Self { p0, p1 }
    }
}

/// A circle may go from `old` to `new` when it keeps more than `r` from
/// every wall and its path crosses none of them.
#[must_use]
pub fn labyrinth_allow_circle(walls: &[Wall], old: Point2, new: Point2, r: f64) -> bool {
    walls.iter().all(|w| {
        point_segment_distance(new, w.p0, w.p1).0 > r && segments_cross(w.p0, w.p1, old, new).is_none()
    })
}

/// A capsule pose is legal when its axis stays more than `r` from every wall.
#[must_use]
pub fn labyrinth_allow_capsule(walls: &[Wall], c0: Point2, c1: Point2, r: f64) -> bool {
    walls.iter().all(|w| segment_segment_distance(c0, c1, w.p0, w.p1) > r)
}

/// Whole-capsule translation: the new pose must be legal and the path of the
/// axis midpoint may not cross a wall.
#[must_use]
pub fn labyrinth_allow_capsule_move(walls: &[Wall], old_mid: Point2, c0: Point2, c1: Point2, r: f64) -> bool {
    let new_mid = c0.midpoint(c1);
    labyrinth_allow_capsule(walls, c0, c1, r)
        && walls.iter().all(|w| segments_cross(w.p0, w.p1, old_mid, new_mid).is_none())
}
