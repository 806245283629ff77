//! Balls that live inside a resizable rectangle and, optionally, refuse to
//! overlap balls of their own color.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, NodeShape};
use crate::engine::{MouseButton, MouseLink, ObjectId};
use crate::geometry::{distance, Point2, Rect};
use crate::object::{Assembly, GestureStart, IdGen, Meta, Movable, Released};
use crate::scene::svg::Canvas;
use crate::shapes::{RectRange, RectShape, ShapeError};

use super::Ball;

pub const BOARD_MIN_SIZE: f64 = 100.0;
pub const BOARD_MAX_SIZE: f64 = 500.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BallBoard {
    pub rect: RectShape,
    pub balls: Vec<Ball>,
    /// Balls of one color may not overlap.
    pub no_same_color_overlap: bool,
}

/// Allowed range of a ball center along one axis: one pixel of play on the
/// near side, two on the far side.
fn window(lo: f64, hi: f64, r: f64) -> (f64, f64) {
    (lo + r + 1.0, hi - (r + 2.0))
}

impl BallBoard {
    pub fn new(ids: &mut IdGen, rect: Rect, no_same_color_overlap: bool) -> Result<Self, ShapeError> {
        let fits = |v: f64| (BOARD_MIN_SIZE..=BOARD_MAX_SIZE).contains(&v);
        if !fits(rect.w) || !fits(rect.h) {
            return Err(ShapeError::Invalid("board size outside its range".into()));
        }
        let range = RectRange::new(BOARD_MIN_SIZE, BOARD_MAX_SIZE, BOARD_MIN_SIZE, BOARD_MAX_SIZE);
        Ok(Self { rect: RectShape::new(ids, rect, Some(range)), balls: Vec::new(), no_same_color_overlap })
    }

    /// Adds a ball. It must fit the board at its smallest and be legal where
    /// it is placed.
    pub fn add_ball(&mut self, ids: &mut IdGen, center: Point2, radius: f64, color: &str) -> Result<ObjectId, ShapeError> {
        if radius <= 0.0 || 2.0 * radius + 3.0 > BOARD_MIN_SIZE {
            return Err(ShapeError::Invalid("ball does not fit the board".into()));
        }
        let mut ball = Ball::new(ids, center, radius);
        ball.meta.parent_id = self.rect.meta.id;
        ball.meta.color = color.to_string();
        if !self.in_window(&ball, center) || self.overlaps(None, &ball, center) {
            return Err(ShapeError::Invalid("ball placed on an illegal spot".into()));
        }
        let id = ball.meta.id;
        self.balls.push(ball);
        Ok(id)
    }

    fn x_window(&self, r: f64) -> (f64, f64) {
        window(self.rect.rect.left(), self.rect.rect.right(), r)
    }

    fn y_window(&self, r: f64) -> (f64, f64) {
        window(self.rect.rect.top(), self.rect.rect.bottom(), r)
    }

    fn in_window(&self, ball: &Ball, c: Point2) -> bool {
        let (x0, x1) = self.x_window(ball.radius);
        let (y0, y1) = self.y_window(ball.radius);
        (x0..=x1).contains(&c.x) && (y0..=y1).contains(&c.y)
    }

    fn overlaps(&self, skip: Option<usize>, ball: &Ball, c: Point2) -> bool {
        self.no_same_color_overlap
            && self.balls.iter().enumerate().any(|(i, o)| {
                Some(i) != skip && o.meta.color == ball.meta.color && distance(o.center, c) <= o.radius + ball.radius
            })
    }

    /// Every ball inside its window and, when required, apart from its
    /// own-color siblings.
    #[must_use]
    pub fn is_legal(&self) -> bool {
        self.balls.iter().enumerate().all(|(i, b)| self.in_window(b, b.center) && !self.overlaps(Some(i), b, b.center))
    }

    /// Proposed move of ball `k`. Plain boards check x and y separately and
    /// take whichever passes; with the color rule the move is all or nothing.
    pub fn move_ball(&mut self, k: usize, dx: f64, dy: f64) -> bool {
        let b = &self.balls[k];
        let c = b.center;
        let target = c.offset(dx, dy);
        if self.no_same_color_overlap {
            if !self.in_window(b, target) || self.overlaps(Some(k), b, target) {
                return false;
            }
            self.balls[k].center = target;
            return true;
        }
        let (x0, x1) = self.x_window(b.radius);
        let (y0, y1) = self.y_window(b.radius);
        let nx = if (x0..=x1).contains(&target.x) { target.x } else { c.x };
        let ny = if (y0..=y1).contains(&target.y) { target.y } else { c.y };
        if nx == c.x && ny == c.y {
            return false;
        }
        self.balls[k].center = Point2::new(nx, ny);
        true
    }

    /// New board area: every ball is pushed ahead of a moving border. With
    /// the color rule, an area that would squeeze same-colored balls together
    /// is refused.
    pub fn set_area(&mut self, area: Rect) -> bool {
        let old_rect = self.rect.rect;
        let old: Vec<Point2> = self.balls.iter().map(|b| b.center).collect();
        self.rect.rect = area;
        for i in 0..self.balls.len() {
            let r = self.balls[i].radius;
            let (x0, x1) = self.x_window(r);
            let (y0, y1) = self.y_window(r);
            let c = self.balls[i].center;
            self.balls[i].center = Point2::new(c.x.max(x0).min(x1), c.y.max(y0).min(y1));
        }
        if self.no_same_color_overlap && !self.is_legal() {
            self.rect.rect = old_rect;
            for (b, c) in self.balls.iter_mut().zip(old) {
                b.center = c;
            }
            return false;
        }
        true
    }
}

impl Assembly for BallBoard {
    fn meta(&self) -> &Meta {
        &self.rect.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.rect.meta
    }

    fn children(&self) -> Vec<&dyn Assembly> {
        self.balls.iter().map(|b| b as &dyn Assembly).collect()
    }

    fn children_mut(&mut self) -> Vec<&mut dyn Assembly> {
        self.balls.iter_mut().map(|b| b as &mut dyn Assembly).collect()
    }

    fn own_cover(&self) -> Option<Cover> {
        Some(self.rect.define_cover())
    }

    fn start(&mut self, id: ObjectId, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        if id == self.rect.meta.id {
            return self.rect.start_gesture(node, pt, button);
        }
        GestureStart::default()
    }

    fn move_part(&mut self, id: ObjectId, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, link: &mut MouseLink) -> bool {
        if button != MouseButton::Left {
            return false;
        }
        if id == self.rect.meta.id {
            let before = self.rect.rect;
            let mut probe = self.rect.clone();
            if !probe.move_node(node, dx, dy, pt, button, link) {
                return false;
            }
            if probe.rect.w == before.w && probe.rect.h == before.h {
                self.rect = probe;
                let (tx, ty) = (self.rect.rect.x - before.x, self.rect.rect.y - before.y);
                for b in &mut self.balls {
                    Movable::translate(b, tx, ty);
                }
                return true;
            }
            return self.set_area(probe.rect);
        }
        match self.balls.iter().position(|b| b.meta.id == id) {
            Some(k) => self.move_ball(k, dx, dy),
            None => false,
        }
    }

    fn finish(&mut self, id: ObjectId, node: usize, shape: NodeShape) -> Released {
        if id == self.rect.meta.id {
            return self.rect.finish_gesture(node, shape);
        }
        Released::Keep
    }

    fn pops(&self, id: ObjectId, node: usize, shape: NodeShape) -> bool {
        id == self.rect.meta.id && self.rect.pops_on_click(node, shape)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        Movable::translate(&mut self.rect, dx, dy);
        for b in &mut self.balls {
            Movable::translate(b, dx, dy);
        }
    }

    fn bounds(&self) -> Rect {
        self.rect.rect
    }

    fn draw(&self, canvas: &mut Canvas) {
        if self.rect.meta.rendered() {
            Movable::draw(&self.rect, canvas);
        }
        for b in self.balls.iter().rev() {
            Assembly::draw(b, canvas);
        }
    }

    fn basic_points(&self) -> Vec<Point2> {
        Movable::basic_points(&self.rect)
    }
}
