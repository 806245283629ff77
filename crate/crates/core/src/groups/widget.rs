//! Rectangular stand-ins for widgets: moved by a frame around them, resized
//! by eight handles, never below a hard minimum size.

use serde::{Deserialize, Serialize};

use crate::cover::{Behaviour, Cover, CoverNode, CursorHint, NodeShape, Resizing};
use crate::engine::{MouseButton, MouseLink, ObjectId};
use crate::geometry::{Point2, Rect};
use crate::object::{Assembly, GestureStart, IdGen, Meta, Movable, Released};
use crate::scene::svg::Canvas;
use crate::shapes::{LabelBox, ShapeError};

use super::{relocation_shift, Satellite};

/// No widget is ever squeezed below this many pixels on either side.
pub const WIDGET_MIN_SIZE: f64 = 16.0;
pub const DEFAULT_FRAME: f64 = 6.0;
pub const DEFAULT_HANDLE: f64 = 9.0;

/// Handle ids, clockwise from the top-left corner; the frame bars and the
/// interior follow.
pub mod handles {
    pub const LT: usize = 0;
    pub const T: usize = 1;
    pub const RT: usize = 2;
    pub const R: usize = 3;
    pub const RB: usize = 4;
    pub const B: usize = 5;
    pub const LB: usize = 6;
    pub const L: usize = 7;
    pub const FRAME_FIRST: usize = 8;
    pub const INTERIOR: usize = 12;
}

fn resizing_allows(wide: Resizing, narrow: Resizing) -> bool {
    matches!(
        (wide, narrow),
        (_, Resizing::None) | (Resizing::Any, _) | (Resizing::WE, Resizing::WE) | (Resizing::NS, Resizing::NS)
    )
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WidgetProxy {
    pub meta: Meta,
    /// What the widget shows, e.g. a button caption.
    #[serde(default)]
    pub caption: String,
    pub bounds: Rect,
    /// `(width, height)`; an axis is resizable only when its minimum is below its maximum.
    #[serde(default)]
    pub min_size: (f64, f64),
    #[serde(default)]
    pub max_size: (f64, f64),
    pub resizing: Resizing,
    pub frame: f64,
    pub handle: f64,
}

impl WidgetProxy {
    pub fn new(ids: &mut IdGen, caption: impl Into<String>, bounds: Rect, min_size: (f64, f64), max_size: (f64, f64)) -> Result<Self, ShapeError> {
        if bounds.w < WIDGET_MIN_SIZE || bounds.h < WIDGET_MIN_SIZE {
            return Err(ShapeError::Invalid(format!("widgets are at least {WIDGET_MIN_SIZE} px on each side")));
        }
        let mut w = Self {
            meta: ids.meta(),
            caption: caption.into(),
            bounds,
            min_size,
            max_size,
            resizing: Resizing::None,
            frame: DEFAULT_FRAME,
            handle: DEFAULT_HANDLE,
        };
        w.resizing = w.resizing_from_range();
        Ok(w)
    }

    /// Frame width, never below 2 px.
    #[must_use]
    pub fn with_frame(mut self, frame: f64) -> Self {
        self.frame = frame.max(2.0);
        self
    }

    fn axis_range(&self, horizontal: bool) -> Option<(f64, f64)> {
        let (lo, hi, cur) = if horizontal {
            (self.min_size.0, self.max_size.0, self.bounds.w)
        } else {
            (self.min_size.1, self.max_size.1, self.bounds.h)
        };
        (lo < hi && lo <= cur && cur <= hi).then_some((lo.max(WIDGET_MIN_SIZE), hi))
    }

    /// The widest resizing the size ranges allow.
    #[must_use]
    pub fn resizing_from_range(&self) -> Resizing {
        match (self.axis_range(true).is_some(), self.axis_range(false).is_some()) {
            (true, true) => Resizing::Any,
            (true, false) => Resizing::WE,
            (false, true) => Resizing::NS,
            (false, false) => Resizing::None,
        }
    }

    /// Narrows the resizing; widening beyond the range-derived one is refused.
    pub fn set_resizing(&mut self, r: Resizing) -> bool {
        if resizing_allows(self.resizing_from_range(), r) {
            self.resizing = r;
            return true;
        }
        false
    }

    fn effective_resizing(&self) -> Resizing {
        if self.meta.movable {
            self.resizing
        } else {
            Resizing::None
        }
    }

    fn horizontal(&self) -> bool {
        matches!(self.effective_resizing(), Resizing::Any | Resizing::WE)
    }

    fn vertical(&self) -> bool {
        matches!(self.effective_resizing(), Resizing::Any | Resizing::NS)
    }

    fn try_width(&mut self, w: f64, keep_right: bool) -> bool {
        let Some((lo, hi)) = self.axis_range(true).or(Some((WIDGET_MIN_SIZE, f64::INFINITY))).filter(|_| self.horizontal()) else {
            return false;
        };
        if w < lo || w > hi || w == self.bounds.w {
            return false;
        }
        if keep_right {
            self.bounds.x = self.bounds.right() - w;
        }
        self.bounds.w = w;
        true
    }

    fn try_height(&mut self, h: f64, keep_bottom: bool) -> bool {
        let Some((lo, hi)) = self.axis_range(false).or(Some((WIDGET_MIN_SIZE, f64::INFINITY))).filter(|_| self.vertical()) else {
            return false;
        };
        if h < lo || h > hi || h == self.bounds.h {
            return false;
        }
        if keep_bottom {
            self.bounds.y = self.bounds.bottom() - h;
        }
        self.bounds.h = h;
        true
    }

    /// Applies a handle drag; each axis is checked on its own.
    pub fn resize_by_handle(&mut self, node: usize, dx: f64, dy: f64) -> bool {
        use handles::*;
        let b = self.bounds;
        let left = |s: &mut Self| s.try_width(b.w - dx, true);
        let right = |s: &mut Self| s.try_width(b.w + dx, false);
        let top = |s: &mut Self| s.try_height(b.h - dy, true);
        let bottom = |s: &mut Self| s.try_height(b.h + dy, false);
        match node {
            LT => left(self) | top(self),
            T => top(self),
            RT => right(self) | top(self),
            R => right(self),
            RB => right(self) | bottom(self),
            B => bottom(self),
            LB => left(self) | bottom(self),
            L => left(self),
            _ => false,
        }
    }

    fn handle_nodes(&self) -> Vec<CoverNode> {
        let b = self.bounds;
        let s = self.handle;
        let corner = |p: Point2| Rect::new(p.x - s / 2.0, p.y - s / 2.0, s, s);
        let hs = |len: f64| (len / 3.0).max(s);
        let (h, v) = (self.horizontal(), self.vertical());
        let corner_cursor = match (h, v) {
            (true, true) => CursorHint::Hand,
            (true, false) => CursorHint::SizeWE,
            _ => CursorHint::SizeNS,
        };
        let (cx, cy) = (b.x + b.w / 2.0, b.y + b.h / 2.0);
        let spots = [
            (Rect::new(b.x - s / 2.0, b.y - s / 2.0, s, s), h || v, corner_cursor),
            (Rect::new(cx - hs(b.w) / 2.0, b.y - s / 2.0, hs(b.w), s), v, CursorHint::SizeNS),
            (corner(Point2::new(b.right(), b.y)), h || v, corner_cursor),
            (Rect::new(b.right() - s / 2.0, cy - hs(b.h) / 2.0, s, hs(b.h)), h, CursorHint::SizeWE),
            (corner(Point2::new(b.right(), b.bottom())), h || v, corner_cursor),
            (Rect::new(cx - hs(b.w) / 2.0, b.bottom() - s / 2.0, hs(b.w), s), v, CursorHint::SizeNS),
            (corner(Point2::new(b.x, b.bottom())), h || v, corner_cursor),
            (Rect::new(b.x - s / 2.0, cy - hs(b.h) / 2.0, s, hs(b.h)), h, CursorHint::SizeWE),
        ];
        spots
            .into_iter()
            .map(|(r, on, cursor)| if on { CoverNode::rect(r).with_cursor(cursor) } else { CoverNode::inert(r.center()) })
            .collect()
    }

    /// Outer area covered by the frame.
    #[must_use]
    pub fn outer(&self) -> Rect {
        let f = self.frame;
        self.bounds.inflate(f, f, f, f)
    }
}

impl Movable for WidgetProxy {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    /// Eight handles, four frame bars (top, right, bottom, left), then the
    /// interior, which belongs to the widget and blocks everything below.
    fn define_cover(&self) -> Cover {
        let b = self.bounds;
        let f = self.frame;
        let mut nodes = self.handle_nodes();
        nodes.extend(
            [
                Rect::new(b.x - f, b.y - f, b.w + 2.0 * f, f),
                Rect::new(b.right(), b.y, f, b.h),
                Rect::new(b.x - f, b.bottom(), b.w + 2.0 * f, f),
                Rect::new(b.x - f, b.y, f, b.h),
            ]
            .map(|r| CoverNode::rect(r).with_cursor(CursorHint::SizeAll)),
        );
        nodes.push(CoverNode::rect(b).with_behaviour(Behaviour::Nonmoveable).with_cursor(CursorHint::Default));
        Cover::assemble(nodes)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.bounds = self.bounds.translate(dx, dy);
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, _pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        if button != MouseButton::Left || !self.meta.movable {
            return false;
        }
        if (handles::FRAME_FIRST..handles::INTERIOR).contains(&node) {
            Movable::translate(self, dx, dy);
            return true;
        }
        self.resize_by_handle(node, dx, dy)
    }

    fn pops_on_click(&self, _node: usize, _shape: NodeShape) -> bool {
        false
    }

    fn basic_points(&self) -> Vec<Point2> {
        self.bounds.corners().to_vec()
    }

    fn bounds(&self) -> Rect {
        self.bounds
    }

    fn draw(&self, canvas: &mut Canvas) {
        canvas.rect(self.bounds, "#e8e8e8");
        if !self.caption.is_empty() {
            canvas.text(Point2::new(self.bounds.x + 4.0, self.bounds.y + self.bounds.h / 2.0 + 4.0), 0.0, &self.caption);
        }
    }
}

crate::leaf_assembly!(control: WidgetProxy);

/// A widget with one comment. A comment left entirely on top of its widget
/// is pushed out next to the widget's upper-right corner.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommentedElement {
    pub element: WidgetProxy,
    pub comment: Satellite,
}

impl CommentedElement {
    pub fn new(element: WidgetProxy, comment: LabelBox) -> Result<Self, ShapeError> {
        let comment = Satellite::new(comment, element.bounds, element.meta.id)?;
        Ok(Self { element, comment })
    }

    /// Moves the comment out when it is fully inside the element.
    pub fn enforced_relocation(&mut self) -> bool {
        match relocation_shift(Movable::bounds(&self.comment), self.element.bounds) {
            Some((dx, dy)) => {
                self.comment.shift(dx, dy);
                true
            }
            None => false,
        }
    }
}

impl Assembly for CommentedElement {
    fn meta(&self) -> &Meta {
        &self.element.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.element.meta
    }

    fn children(&self) -> Vec<&dyn Assembly> {
        vec![&self.comment]
    }

    fn children_mut(&mut self) -> Vec<&mut dyn Assembly> {
        vec![&mut self.comment]
    }

    fn own_cover(&self) -> Option<Cover> {
        Some(self.element.define_cover())
    }

    fn start(&mut self, id: ObjectId, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        if id == self.comment.label.meta.id {
            return self.comment.start_gesture(node, pt, button);
        }
        GestureStart::default()
    }

    fn move_part(&mut self, id: ObjectId, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, link: &mut MouseLink) -> bool {
        if id == self.element.meta.id {
            let moved = self.element.move_node(node, dx, dy, pt, button, link);
            if moved {
                self.comment.on_parent_change(self.element.bounds);
            }
            return moved;
        }
        id == self.comment.label.meta.id && self.comment.move_node(node, dx, dy, pt, button, link)
    }

    fn finish(&mut self, id: ObjectId, node: usize, shape: NodeShape) -> Released {
        if id == self.comment.label.meta.id {
            self.comment.finish_gesture(node, shape);
        }
        if id == self.element.meta.id || id == self.comment.label.meta.id {
            self.enforced_relocation();
        }
        Released::Keep
    }

    fn pops(&self, id: ObjectId, node: usize, shape: NodeShape) -> bool {
        id == self.comment.label.meta.id && self.comment.pops_on_click(node, shape)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        Movable::translate(&mut self.element, dx, dy);
        Movable::translate(&mut self.comment, dx, dy);
    }

    fn bounds(&self) -> Rect {
        let r = self.element.bounds;
        if self.comment.label.meta.rendered() {
            r.union(&Movable::bounds(&self.comment))
        } else {
            r
        }
    }

    fn draw(&self, canvas: &mut Canvas) {
        if self.element.meta.rendered() {
            Movable::draw(&self.element, canvas);
        }
        Assembly::draw(&self.comment, canvas);
    }

    fn basic_points(&self) -> Vec<Point2> {
        Movable::basic_points(&self.element)
    }

    fn is_control(&self) -> bool {
        true
    }
}
