//! Planar primitives in screen coordinates.
//!
//! Y grows downward. Angles are in radians and positive when measured
//! anticlockwise as a person sees the screen, so `line_angle` negates the
//! screen Y difference before taking `atan2`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("degenerate line: both points are ({x}, {y})")]
    DegenerateLine { x: f64, y: f64 },
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("axis range is empty: c0 = {c0}, c1 = {c1}")]
    EmptyAxis { c0: f64, c1: f64 },
    #[error("rectangle must have positive width and height, got {w} x {h}")]
    DegenerateRect { w: f64, h: f64 },
    #[error("regular polygon radius must be positive, got {0}")]
    NonPositiveRadius(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    #[must_use]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    #[must_use]
    pub fn offset(self, dx: f64, dy: f64) -> Self {
        Self::new(self.x + dx, self.y + dy)
    }

    #[must_use]
    pub fn midpoint(self, other: Self) -> Self {
        Self::new((self.x + other.x) / 2.0, (self.y + other.y) / 2.0)
    }

    #[must_use]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Axis-aligned rectangle: `x`, `y` is the top left corner.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Rect {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl Rect {
    #[must_use]
    pub const fn new(x: f64, y: f64, w: f64, h: f64) -> Self {
        Self { x, y, w, h }
    }

    #[must_use]
    pub fn from_corners(a: Point2, b: Point2) -> Self {
        let x = a.x.min(b.x);
        let y = a.y.min(b.y);
        Self::new(x, y, (a.x - b.x).abs(), (a.y - b.y).abs())
    }

    #[must_use]
    pub fn left(&self) -> f64 {
        self.x
    }

    #[must_use]
    pub fn top(&self) -> f64 {
        self.y
    }

    #[must_use]
    pub fn right(&self) -> f64 {
        self.x + self.w
    }

    #[must_use]
    pub fn bottom(&self) -> f64 {
        self.y + self.h
    }

    #[must_use]
    pub fn center(&self) -> Point2 {
        Point2::new(self.x + self.w / 2.0, self.y + self.h / 2.0)
    }

    /// Corners clockwise on screen from the top left one.
    #[must_use]
    pub fn corners(&self) -> [Point2; 4] {
        [
            Point2::new(self.left(), self.top()),
            Point2::new(self.right(), self.top()),
            Point2::new(self.right(), self.bottom()),
            Point2::new(self.left(), self.bottom()),
        ]
    }

    #[must_use]
    pub fn contains(&self, p: Point2) -> bool {
        self.left() <= p.x && p.x <= self.right() && self.top() <= p.y && p.y <= self.bottom()
    }

    #[must_use]
    pub fn contains_rect(&self, other: &Rect) -> bool {
        self.left() <= other.left()
            && other.right() <= self.right()
            && self.top() <= other.top()
            && other.bottom() <= self.bottom()
    }

    #[must_use]
    pub fn intersects(&self, other: &Rect) -> bool {
        self.left() <= other.right()
            && other.left() <= self.right()
            && self.top() <= other.bottom()
            && other.top() <= self.bottom()
    }

    #[must_use]
    pub fn union(&self, other: &Rect) -> Rect {
        let l = self.left().min(other.left());
        let t = self.top().min(other.top());
        let r = self.right().max(other.right());
        let b = self.bottom().max(other.bottom());
        Rect::new(l, t, r - l, b - t)
    }

    #[must_use]
    pub fn inflate(&self, left: f64, top: f64, right: f64, bottom: f64) -> Rect {
        Rect::new(
            self.x - left,
            self.y - top,
            self.w + left + right,
            self.h + top + bottom,
        )
    }

    #[must_use]
    pub fn translate(&self, dx: f64, dy: f64) -> Rect {
        Rect::new(self.x + dx, self.y + dy, self.w, self.h)
    }

    /// Bounding box of a point set; `None` for an empty set.
    #[must_use]
    pub fn bounding(points: &[Point2]) -> Option<Rect> {
        let first = points.first()?;
        let (mut l, mut t, mut r, mut b) = (first.x, first.y, first.x, first.y);
        for p in &points[1..] {
            l = l.min(p.x);
            t = t.min(p.y);
            r = r.max(p.x);
            b = b.max(p.y);
        }
        Some(Rect::new(l, t, r - l, b - t))
    }
}

#[must_use]
pub fn distance(a: Point2, b: Point2) -> f64 {
    (b.x - a.x).hypot(b.y - a.y)
}

/// Angle of the vector `from -> to` as seen on screen. Coincident points give 0.
#[must_use]
pub fn line_angle(from: Point2, to: Point2) -> f64 {
    let dx = to.x - from.x;
    let dy = to.y - from.y;
    if dx == 0.0 && dy == 0.0 {
        return 0.0;
    }
    let a = (0.0 - dy).atan2(dx);
    if a == -PI {
        PI
    } else {
        a
    }
}

#[must_use]
pub fn point_at(origin: Point2, angle: f64, d: f64) -> Point2 {
    Point2::new(origin.x + d * angle.cos(), origin.y - d * angle.sin())
}

/// Maps any finite angle into (-π, π].
#[must_use]
pub fn normalize_angle(a: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut r = a.rem_euclid(two_pi);
    if r > PI {
        r -= two_pi;
    }
    if r <= -PI {
        r += two_pi;
    }
    r
}

/// Distance from `p` to the closed segment `a-b` and the nearest segment point.
#[must_use]
pub fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> (f64, Point2) {
    let vx = b.x - a.x;
    let vy = b.y - a.y;
    let len2 = vx * vx + vy * vy;
    if len2 == 0.0 {
        return (distance(p, a), a);
    }
    let t = (((p.x - a.x) * vx + (p.y - a.y) * vy) / len2).clamp(0.0, 1.0);
    let foot = if t == 0.0 {
        a
    } else if t == 1.0 {
        b
    } else {
        Point2::new(a.x + t * vx, a.y + t * vy)
    };
    (distance(p, foot), foot)
}

/// Distance from `p` to the infinite line through `a` and `b`.
pub fn point_line_distance(p: Point2, a: Point2, b: Point2) -> Result<f64, GeometryError> {
    let len = distance(a, b);
    if len == 0.0 {
        return Err(GeometryError::DegenerateLine { x: a.x, y: a.y });
    }
    Ok(cross(a, b, p).abs() / len)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Negative,
    On,
    Positive,
}

fn cross(a: Point2, b: Point2, p: Point2) -> f64 {
    (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
}

/// Sign of `(b - a) x (p - a)` in raw screen coordinates.
pub fn side_of_line(a: Point2, b: Point2, p: Point2) -> Result<Side, GeometryError> {
    if a == b {
        return Err(GeometryError::DegenerateLine { x: a.x, y: a.y });
    }
    let c = cross(a, b, p);
    Ok(if c > 0.0 {
        Side::Positive
    } else if c < 0.0 {
        Side::Negative
    } else {
        Side::On
    })
}

/// True iff `p` and `q` are strictly on the same side of the line `a-b`.
pub fn same_side(a: Point2, b: Point2, p: Point2, q: Point2) -> Result<bool, GeometryError> {
    let sp = side_of_line(a, b, p)?;
    let sq = side_of_line(a, b, q)?;
    Ok(sp != Side::On && sp == sq)
}

/// True iff `p` and `q` are strictly on opposite sides of the line `a-b`.
pub fn opposite_side(a: Point2, b: Point2, p: Point2, q: Point2) -> Result<bool, GeometryError> {
    let sp = side_of_line(a, b, p)?;
    let sq = side_of_line(a, b, q)?;
    Ok(sp != Side::On && sq != Side::On && sp != sq)
}

/// Boundary-inclusive containment in a convex polygon given in either winding.
/// Zero-area vertex lists contain nothing.
pub fn inside_convex_polygon(p: Point2, pts: &[Point2]) -> Result<bool, GeometryError> {
    if pts.len() < 3 {
        return Err(GeometryError::TooFewVertices(pts.len()));
    }
    if polygon_area(pts) == 0.0 {
        return Ok(false);
    }
    let mut pos = false;
    let mut neg = false;
    for i in 0..pts.len() {
        let a = pts[i];
        let b = pts[(i + 1) % pts.len()];
        if a == b {
            continue;
        }
        let c = cross(a, b, p);
        if c > 0.0 {
            pos = true;
        } else if c < 0.0 {
            neg = true;
        }
        if pos && neg {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Signed shoelace area in screen coordinates.
#[must_use]
pub fn polygon_area(pts: &[Point2]) -> f64 {
    let n = pts.len();
    let mut s = 0.0;
    for i in 0..n {
        let a = pts[i];
        let b = pts[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    s / 2.0
}

/// True when every turn has the same sign or is straight.
#[must_use]
pub fn is_convex(pts: &[Point2]) -> bool {
    let n = pts.len();
    if n < 3 {
        return false;
    }
    let mut pos = false;
    let mut neg = false;
    for i in 0..n {
        let c = cross(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]);
        if c > 0.0 {
            pos = true;
        } else if c < 0.0 {
            neg = true;
        }
    }
    !(pos && neg)
}

fn on_segment(a: Point2, b: Point2, p: Point2) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Intersection of two closed segments. Collinear overlaps report a shared point.
#[must_use]
pub fn segments_cross(a0: Point2, a1: Point2, b0: Point2, b1: Point2) -> Option<Point2> {
    let d1 = cross(b0, b1, a0);
    let d2 = cross(b0, b1, a1);
    let d3 = cross(a0, a1, b0);
    let d4 = cross(a0, a1, b1);

    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        let t = d1 / (d1 - d2);
        return Some(Point2::new(a0.x + t * (a1.x - a0.x), a0.y + t * (a1.y - a0.y)));
    }
    if d1 == 0.0 && on_segment(b0, b1, a0) {
        return Some(a0);
    }
    if d2 == 0.0 && on_segment(b0, b1, a1) {
        return Some(a1);
    }
    if d3 == 0.0 && on_segment(a0, a1, b0) {
        return Some(b0);
    }
    if d4 == 0.0 && on_segment(a0, a1, b1) {
        return Some(b1);
    }
    None
}

#[must_use]
pub fn segment_segment_distance(a0: Point2, a1: Point2, b0: Point2, b1: Point2) -> f64 {
    if segments_cross(a0, a1, b0, b1).is_some() {
        return 0.0;
    }
    [
        point_segment_distance(a0, b0, b1).0,
        point_segment_distance(a1, b0, b1).0,
        point_segment_distance(b0, a0, a1).0,
        point_segment_distance(b1, a0, a1).0,
    ]
    .into_iter()
    .fold(f64::INFINITY, f64::min)
}

/// Linear map of one axis range onto `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisMap {
    c0: f64,
    c1: f64,
}

impl AxisMap {
    pub fn new(c0: f64, c1: f64) -> Result<Self, GeometryError> {
        if c0 >= c1 {
            return Err(GeometryError::EmptyAxis { c0, c1 });
        }
        Ok(Self { c0, c1 })
    }

    #[must_use]
    pub fn coef_by_coor(&self, c: f64) -> f64 {
        (c - self.c0) / (self.c1 - self.c0)
    }

    #[must_use]
    pub fn coor_by_coef(&self, f: f64) -> f64 {
        self.c0 + f * (self.c1 - self.c0)
    }
}

/// Position of a coordinate relative to one side of a rectangle.
///
/// Inside the range it is a fraction; outside it is a pixel distance to the
/// nearer edge. Keeping the variant makes the inverse unambiguous.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum AxisCoef {
    /// Fraction of the extent, 0 at the left or top edge.
    Inside(f64),
    /// Pixels before the left or top edge.
    Before(f64),
    /// Pixels beyond the right or bottom edge.
    After(f64),
}

impl AxisCoef {
    /// Signed value: negative distance before, fraction inside, positive distance after.
    #[must_use]
    pub fn value(&self) -> f64 {
        match *self {
            AxisCoef::Inside(f) => f,
            AxisCoef::Before(d) => -d,
            AxisCoef::After(d) => d,
        }
    }

    #[must_use]
    pub fn by_coor(lo: f64, extent: f64, c: f64) -> Self {
        let hi = lo + extent;
        if c < lo {
            AxisCoef::Before(lo - c)
        } else if c > hi {
            AxisCoef::After(c - hi)
        } else {
            AxisCoef::Inside((c - lo) / extent)
        }
    }

    #[must_use]
    pub fn coor(&self, lo: f64, extent: f64) -> f64 {
        match *self {
            AxisCoef::Inside(f) => lo + f * extent,
            AxisCoef::Before(d) => lo - d,
            AxisCoef::After(d) => lo + extent + d,
        }
    }
}

pub fn rect_position_coefs(rect: &Rect, p: Point2) -> Result<(AxisCoef, AxisCoef), GeometryError> {
    check_rect(rect)?;
    Ok((
        AxisCoef::by_coor(rect.x, rect.w, p.x),
        AxisCoef::by_coor(rect.y, rect.h, p.y),
    ))
}

pub fn location_by_coefs(rect: &Rect, xc: AxisCoef, yc: AxisCoef) -> Result<Point2, GeometryError> {
    check_rect(rect)?;
    Ok(Point2::new(xc.coor(rect.x, rect.w), yc.coor(rect.y, rect.h)))
}

fn check_rect(rect: &Rect) -> Result<(), GeometryError> {
    if rect.w > 0.0 && rect.h > 0.0 {
        Ok(())
    } else {
        Err(GeometryError::DegenerateRect { w: rect.w, h: rect.h })
    }
}

/// Vertex `k` lies at `angle0 + 2πk/n`, anticlockwise on screen.
pub fn regular_polygon_vertices(
    center: Point2,
    r: f64,
    n: usize,
    angle0: f64,
) -> Result<Vec<Point2>, GeometryError> {
    if n < 3 {
        return Err(GeometryError::TooFewVertices(n));
    }
    if r <= 0.0 {
        return Err(GeometryError::NonPositiveRadius(r));
    }
    Ok((0..n)
        .map(|k| point_at(center, angle0 + 2.0 * PI * k as f64 / n as f64, r))
        .collect())
}

/// Rounds half away from zero, the rounding used for every real-to-pixel snap.
#[must_use]
pub fn round_px(v: f64) -> f64 {
    v.round()
}
