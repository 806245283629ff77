//! Satellites: labels that keep their relative place next to a parent rectangle.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, NodeShape};
use crate::engine::{MouseButton, MouseLink, ObjectId};
use crate::geometry::{location_by_coefs, rect_position_coefs, AxisCoef, Point2, Rect};
use crate::object::{Assembly, GestureStart, Meta, Movable, Released};
use crate::scene::svg::Canvas;
use crate::shapes::{LabelBox, RectShape, ShapeError};

/// A label positioned by coefficients against its parent's rectangle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Satellite {
    pub label: LabelBox,
    pub parent_rect: Rect,
    pub xc: AxisCoef,
    pub yc: AxisCoef,
}

impl Satellite {
    pub fn new(mut label: LabelBox, parent_rect: Rect, parent_id: ObjectId) -> Result<Self, ShapeError> {
        let (xc, yc) = rect_position_coefs(&parent_rect, label.anchor).map_err(|e| ShapeError::Invalid(e.to_string()))?;
        label.meta.parent_id = parent_id;
        Ok(Self { label, parent_rect, xc, yc })
    }

    /// The parent moved or changed size: the label follows its coefficients.
    pub fn on_parent_change(&mut self, rect: Rect) {
        self.parent_rect = rect;
        if let Ok(p) = location_by_coefs(&rect, self.xc, self.yc) {
            self.label.anchor = p;
        }
    }

    /// The label moved by itself: the coefficients follow, the parent stays.
    pub fn refresh_coefs(&mut self) {
        if let Ok((xc, yc)) = rect_position_coefs(&self.parent_rect, self.label.anchor) {
            self.xc = xc;
            self.yc = yc;
        }
    }

    #[must_use]
    pub fn location(&self) -> Point2 {
        self.label.anchor
    }

    /// Shifts the label and keeps the coefficients in step.
    pub fn shift(&mut self, dx: f64, dy: f64) {
        Movable::translate(&mut self.label, dx, dy);
        self.refresh_coefs();
    }
}

impl Movable for Satellite {
    fn meta(&self) -> &Meta {
        &self.label.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.label.meta
    }

    fn define_cover(&self) -> Cover {
        self.label.define_cover()
    }

    /// Moves together with the parent, so the coefficients hold.
    fn translate(&mut self, dx: f64, dy: f64) {
        Movable::translate(&mut self.label, dx, dy);
        self.parent_rect = self.parent_rect.translate(dx, dy);
    }

    fn start_gesture(&mut self, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        self.label.start_gesture(node, pt, button)
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, link: &mut MouseLink) -> bool {
        let moved = self.label.move_node(node, dx, dy, pt, button, link);
        if moved {
            self.refresh_coefs();
        }
        moved
    }

    fn finish_gesture(&mut self, node: usize, shape: NodeShape) -> Released {
        self.label.finish_gesture(node, shape)
    }

    fn basic_points(&self) -> Vec<Point2> {
        Movable::basic_points(&self.label)
    }

    fn bounds(&self) -> Rect {
        Movable::bounds(&self.label)
    }

    fn draw(&self, canvas: &mut Canvas) {
        Movable::draw(&self.label, canvas);
    }
}

crate::leaf_assembly!(Satellite);

/// A standard rectangle with any number of comments around it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommentedRect {
    pub rect: RectShape,
    pub comments: Vec<Satellite>,
}

impl CommentedRect {
    #[must_use]
    pub fn new(rect: RectShape) -> Self {
        Self { rect, comments: Vec::new() }
    }

    pub fn add_comment(&mut self, label: LabelBox) -> Result<(), ShapeError> {
        let s = Satellite::new(label, self.rect.rect, self.rect.meta.id)?;
        self.comments.push(s);
        Ok(())
    }

    fn sync(&mut self) {
        let r = self.rect.rect;
        for c in &mut self.comments {
            c.on_parent_change(r);
        }
    }
}

impl Assembly for CommentedRect {
    fn meta(&self) -> &Meta {
        &self.rect.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.rect.meta
    }

    fn children(&self) -> Vec<&dyn Assembly> {
        self.comments.iter().map(|c| c as &dyn Assembly).collect()
    }

    fn children_mut(&mut self) -> Vec<&mut dyn Assembly> {
        self.comments.iter_mut().map(|c| c as &mut dyn Assembly).collect()
    }

    fn own_cover(&self) -> Option<Cover> {
        Some(self.rect.define_cover())
    }

    fn start(&mut self, id: ObjectId, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        if id == self.rect.meta.id {
            return self.rect.start_gesture(node, pt, button);
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
        self.comments
            .iter_mut()
            .find(|c| c.label.meta.id == id)
            .is_some_and(|c| c.move_node(node, dx, dy, pt, button, link))
    }

    fn finish(&mut self, id: ObjectId, node: usize, shape: NodeShape) -> Released {
        if id == self.rect.meta.id {
            return self.rect.finish_gesture(node, shape);
        }
        if let Some(c) = self.comments.iter_mut().find(|c| c.label.meta.id == id) {
            c.finish_gesture(node, shape);
        }
        Released::Keep
    }

    fn pops(&self, id: ObjectId, node: usize, shape: NodeShape) -> bool {
        if id == self.rect.meta.id {
            return self.rect.pops_on_click(node, shape);
        }
        self.comments.iter().any(|c| c.label.meta.id == id && c.pops_on_click(node, shape))
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        Movable::translate(&mut self.rect, dx, dy);
        for c in &mut self.comments {
            Movable::translate(c, dx, dy);
        }
    }

    fn bounds(&self) -> Rect {
        let mut r = self.rect.rect;
        for c in self.comments.iter().filter(|c| c.label.meta.rendered()) {
            r = r.union(&Movable::bounds(c));
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
    }

    fn basic_points(&self) -> Vec<Point2> {
        Movable::basic_points(&self.rect)
    }
}
