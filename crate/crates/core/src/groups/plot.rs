//! Plot-like three-level chain: a main rectangle, scales glued to it, and
//! comments glued to either.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverNode, CursorHint, NodeShape};
use crate::engine::{MouseButton, MouseLink, ObjectId};
use crate::geometry::{AxisCoef, Point2, Rect};
use crate::object::{contains_id, Assembly, GestureStart, IdGen, Meta, Movable, Released};
use crate::scene::svg::Canvas;
use crate::shapes::{LabelBox, RectShape, ShapeError};

use super::Satellite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScaleDir {
    /// Spans the width; moves up and down.
    Horizontal,
    /// Spans the height; moves left and right.
    Vertical,
}

/// A bar along one side of its parent rectangle. A fixed scale has a single
/// frozen node but keeps following its parent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scale {
    pub meta: Meta,
    pub dir: ScaleDir,
    /// Position across the bar, against the parent rectangle.
    pub pos: AxisCoef,
    pub thickness: f64,
    pub parent_rect: Rect,
    pub comments: Vec<Satellite>,
}

impl Scale {
    pub fn new(ids: &mut IdGen, dir: ScaleDir, parent: Rect, parent_id: ObjectId, at: f64, thickness: f64) -> Self {
        let mut meta = ids.meta();
        meta.parent_id = parent_id;
        let pos = match dir {
            ScaleDir::Horizontal => AxisCoef::by_coor(parent.y, parent.h, at),
            ScaleDir::Vertical => AxisCoef::by_coor(parent.x, parent.w, at),
        };
        Self { meta, dir, pos, thickness, parent_rect: parent, comments: Vec::new() }
    }

    #[must_use]
    pub fn area(&self) -> Rect {
        let p = self.parent_rect;
        match self.dir {
            ScaleDir::Horizontal => Rect::new(p.x, self.pos.coor(p.y, p.h), p.w, self.thickness),
            ScaleDir::Vertical => Rect::new(self.pos.coor(p.x, p.w), p.y, self.thickness, p.h),
        }
    }

    pub fn add_comment(&mut self, label: LabelBox) -> Result<(), ShapeError> {
        let s = Satellite::new(label, self.area(), self.meta.id)?;
        self.comments.push(s);
        Ok(())
    }

    fn sync_comments(&mut self) {
        let a = self.area();
        for c in &mut self.comments {
            c.on_parent_change(a);
        }
    }

    /// Parent changed: reposition by the coefficient, then pass it on.
    pub fn on_parent_change(&mut self, rect: Rect) {
        self.parent_rect = rect;
        self.sync_comments();
    }

    fn own_move(&mut self, dx: f64, dy: f64) -> bool {
        let p = self.parent_rect;
        let a = self.area();
        self.pos = match self.dir {
            ScaleDir::Horizontal if dy != 0.0 => AxisCoef::by_coor(p.y, p.h, a.y + dy),
            ScaleDir::Vertical if dx != 0.0 => AxisCoef::by_coor(p.x, p.w, a.x + dx),
            _ => return false,
        };
        self.sync_comments();
        true
    }
}

impl Assembly for Scale {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn children(&self) -> Vec<&dyn Assembly> {
        self.comments.iter().map(|c| c as &dyn Assembly).collect()
    }

    fn children_mut(&mut self) -> Vec<&mut dyn Assembly> {
        self.comments.iter_mut().map(|c| c as &mut dyn Assembly).collect()
    }

    fn own_cover(&self) -> Option<Cover> {
        let cursor = match self.dir {
            ScaleDir::Horizontal => CursorHint::SizeNS,
            ScaleDir::Vertical => CursorHint::SizeWE,
        };
        Some(Cover::assemble(vec![CoverNode::rect(self.area()).with_cursor(cursor)]))
    }

    fn start(&mut self, id: ObjectId, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        match self.comments.iter_mut().find(|c| c.label.meta.id == id) {
            Some(c) => c.start_gesture(node, pt, button),
            None => GestureStart::default(),
        }
    }

    fn move_part(&mut self, id: ObjectId, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, link: &mut MouseLink) -> bool {
        if id == self.meta.id {
            return button == MouseButton::Left && self.own_move(dx, dy);
        }
        self.comments
            .iter_mut()
            .find(|c| c.label.meta.id == id)
            .is_some_and(|c| c.move_node(node, dx, dy, pt, button, link))
    }

    fn finish(&mut self, id: ObjectId, node: usize, shape: NodeShape) -> Released {
        if let Some(c) = self.comments.iter_mut().find(|c| c.label.meta.id == id) {
            c.finish_gesture(node, shape);
        }
        Released::Keep
    }

    fn pops(&self, _id: ObjectId, _node: usize, _shape: NodeShape) -> bool {
        false
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.parent_rect = self.parent_rect.translate(dx, dy);
        for c in &mut self.comments {
            Movable::translate(c, dx, dy);
        }
    }

    fn bounds(&self) -> Rect {
        self.area()
    }

    fn draw(&self, canvas: &mut Canvas) {
        if self.meta.rendered() {
            canvas.rect(self.area(), "#d8d8d8");
        }
        for c in &self.comments {
            Assembly::draw(c, canvas);
        }
    }

    fn basic_points(&self) -> Vec<Point2> {
        self.area().corners().to_vec()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlotLite {
    pub rect: RectShape,
    pub scales: Vec<Scale>,
    pub comments: Vec<Satellite>,
}

impl PlotLite {
    #[must_use]
    pub fn new(rect: RectShape) -> Self {
        Self { rect, scales: Vec::new(), comments: Vec::new() }
    }

    /// Adds a scale whose near edge sits at `at` across its direction.
    pub fn add_scale(&mut self, ids: &mut IdGen, dir: ScaleDir, at: f64, thickness: f64) -> ObjectId {
        let s = Scale::new(ids, dir, self.rect.rect, self.rect.meta.id, at, thickness);
        let id = s.meta.id;
        self.scales.push(s);
        id
    }

    pub fn add_comment(&mut self, label: LabelBox) -> Result<(), ShapeError> {
        let s = Satellite::new(label, self.rect.rect, self.rect.meta.id)?;
        self.comments.push(s);
        Ok(())
    }

    fn sync(&mut self) {
        let r = self.rect.rect;
        for s in &mut self.scales {
            s.on_parent_change(r);
        }
        for c in &mut self.comments {
            c.on_parent_change(r);
        }
    }
}

impl Assembly for PlotLite {
    fn meta(&self) -> &Meta {
        &self.rect.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.rect.meta
    }

    fn children(&self) -> Vec<&dyn Assembly> {
        let mut v: Vec<&dyn Assembly> = self.scales.iter().map(|s| s as &dyn Assembly).collect();
        v.extend(self.comments.iter().map(|c| c as &dyn Assembly));
        v
    }

    fn children_mut(&mut self) -> Vec<&mut dyn Assembly> {
        let mut v: Vec<&mut dyn Assembly> = self.scales.iter_mut().map(|s| s as &mut dyn Assembly).collect();
        v.extend(self.comments.iter_mut().map(|c| c as &mut dyn Assembly));
        v
    }

    fn own_cover(&self) -> Option<Cover> {
        Some(self.rect.define_cover())
    }

    fn start(&mut self, id: ObjectId, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        if id == self.rect.meta.id {
            return self.rect.start_gesture(node, pt, button);
        }
        if let Some(s) = self.scales.iter_mut().find(|s| contains_id(*s, id)) {
            return s.start(id, node, pt, button);
        }
        match self.comments.iter_mut().find(|c| c.label.meta.id == id) {
            Some(c) => c.start_gesture(node, pt, button),
            None => GestureStart::default(),
        }
    }

    fn move_part(&mut self, id: ObjectId, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, link: &mut MouseLink) -> bool {
        if id == self.rect.meta.id {
            let moved = self.rect.move_node(node, dx, dy, pt, button, link);
            if moved {
                self.sync();
            }
            return moved;
        }
        if let Some(s) = self.scales.iter_mut().find(|s| contains_id(*s, id)) {
            return s.move_part(id, node, dx, dy, pt, button, link);
        }
        self.comments
            .iter_mut()
            .find(|c| c.label.meta.id == id)
            .is_some_and(|c| c.move_node(node, dx, dy, pt, button, link))
    }

    fn finish(&mut self, id: ObjectId, node: usize, shape: NodeShape) -> Released {
        if id == self.rect.meta.id {
            return self.rect.finish_gesture(node, shape);
        }
        if let Some(s) = self.scales.iter_mut().find(|s| contains_id(*s, id)) {
            return s.finish(id, node, shape);
        }
        if let Some(c) = self.comments.iter_mut().find(|c| c.label.meta.id == id) {
            c.finish_gesture(node, shape);
        }
        Released::Keep
    }

    fn pops(&self, id: ObjectId, node: usize, shape: NodeShape) -> bool {
        id == self.rect.meta.id && self.rect.pops_on_click(node, shape)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        Movable::translate(&mut self.rect, dx, dy);
        for s in &mut self.scales {
            s.translate(dx, dy);
        }
        for c in &mut self.comments {
            Movable::translate(c, dx, dy);
        }
    }

    fn bounds(&self) -> Rect {
        let mut r = self.rect.rect;
        for s in self.scales.iter().filter(|s| s.meta.rendered()) {
            r = r.union(&s.area());
        }
        r
    }

    fn draw(&self, canvas: &mut Canvas) {
        if self.rect.meta.rendered() {
            Movable::draw(&self.rect, canvas);
        }
        for c in &self.comments {
            Assembly::draw(c, canvas);
        }
        for s in self.scales.iter().rev() {
            s.draw(canvas);
        }
    }

    fn basic_points(&self) -> Vec<Point2> {
        Movable::basic_points(&self.rect)
    }
}
