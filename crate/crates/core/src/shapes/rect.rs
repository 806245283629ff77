//! Axis-aligned rectangles: the standard resizable one, the variant that
//! vanishes when squeezed, and the fixed-ratio one.

use serde::{Deserialize, Serialize};

use crate::cover::{rect_cover_unchecked, Cover, CoverNode, CursorHint, NodeShape, Resizing, DEFAULT_CORNER_RADIUS, DEFAULT_HALF_STRIP};
use crate::engine::{MouseButton, MouseLink};
use crate::geometry::{round_px, Point2, Rect};
use crate::object::{IdGen, Meta, Movable, Released};
use crate::scene::svg::Canvas;

use super::{DISAPPEARANCE_SIZE, RECT_MIN_SIZE};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RectRange {
    pub w_min: f64,
    pub w_max: f64,
    pub h_min: f64,
    pub h_max: f64,
}

impl RectRange {
    #[must_use]
    pub const fn new(w_min: f64, w_max: f64, h_min: f64, h_max: f64) -> Self {
        Self { w_min, w_max, h_min, h_max }
    }

    #[must_use]
    pub fn resizing(&self) -> Resizing {
        match (self.w_min < self.w_max, self.h_min < self.h_max) {
            (true, true) => Resizing::Any,
            (true, false) => Resizing::WE,
            (false, true) => Resizing::NS,
            (false, false) => Resizing::None,
        }
    }

    #[must_use]
    pub fn admits(&self, w: f64, h: f64) -> bool {
        self.w_min <= w && w <= self.w_max && self.h_min <= h && h <= self.h_max
    }
}

/// Node ids of a fully resizable standard rectangle.
pub mod any_nodes {
    pub const LT: usize = 0;
    pub const RT: usize = 1;
    pub const RB: usize = 2;
    pub const LB: usize = 3;
    pub const LEFT: usize = 4;
    pub const RIGHT: usize = 5;
    pub const TOP: usize = 6;
    pub const BOTTOM: usize = 7;
    pub const WHOLE: usize = 8;
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RectShape {
    pub meta: Meta,
    pub rect: Rect,
    /// Effective range; the initial size always lies inside it.
    pub range: RectRange,
    pub resizing: Resizing,
    /// Squeezing below the disappearance size and releasing removes it.
    pub disappear: bool,
}

impl RectShape {
    /// Without a range the rectangle is only movable.
    pub fn new(ids: &mut IdGen, rect: Rect, range: Option<RectRange>) -> Self {
        Self::build(ids.meta(), rect, range, false)
    }

    /// A rectangle with no protective minimum that vanishes when released
    /// thinner than the disappearance size.
    pub fn disappearing(ids: &mut IdGen, rect: Rect, range: RectRange) -> Self {
        Self::build(ids.meta(), rect, Some(range), true)
    }

    pub(crate) fn build(meta: Meta, rect: Rect, range: Option<RectRange>, disappear: bool) -> Self {
        let floor = if disappear { 1.0 } else { RECT_MIN_SIZE };
        let range = match range {
            None => RectRange::new(rect.w, rect.w, rect.h, rect.h),
            Some(r) => RectRange::new(
                r.w_min.min(rect.w).max(floor),
                r.w_max.max(rect.w),
                r.h_min.min(rect.h).max(floor),
                r.h_max.max(rect.h),
            ),
        };
        Self { meta, rect, resizing: range.resizing(), range, disappear }
    }

    fn try_left(&mut self, dx: f64) -> bool {
        let w = self.rect.w - dx;
        if self.range.w_min <= w && w <= self.range.w_max {
            self.rect.x += dx;
            self.rect.w = w;
            return true;
        }
        false
    }

    fn try_right(&mut self, dx: f64) -> bool {
        let w = self.rect.w + dx;
        if self.range.w_min <= w && w <= self.range.w_max {
            self.rect.w = w;
            return true;
        }
        false
    }

    fn try_top(&mut self, dy: f64) -> bool {
        let h = self.rect.h - dy;
        if self.range.h_min <= h && h <= self.range.h_max {
            self.rect.y += dy;
            self.rect.h = h;
            return true;
        }
        false
    }

    fn try_bottom(&mut self, dy: f64) -> bool {
        let h = self.rect.h + dy;
        if self.range.h_min <= h && h <= self.range.h_max {
            self.rect.h = h;
            return true;
        }
        false
    }

    /// Applies a border move for the given node; each axis is checked on its own.
    pub(crate) fn resize_node(&mut self, node: usize, dx: f64, dy: f64) -> bool {
        use any_nodes::*;
        match self.resizing {
            Resizing::None => false,
            Resizing::NS => match node {
                0 => self.try_top(dy),
                1 => self.try_bottom(dy),
                _ => false,
            },
            Resizing::WE => match node {
                0 => self.try_left(dx),
                1 => self.try_right(dx),
                _ => false,
            },
            Resizing::Any => match node {
                LT => self.try_top(dy) | self.try_left(dx),
                RT => self.try_top(dy) | self.try_right(dx),
                RB => self.try_bottom(dy) | self.try_right(dx),
                LB => self.try_bottom(dy) | self.try_left(dx),
                LEFT => self.try_left(dx),
                RIGHT => self.try_right(dx),
                TOP => self.try_top(dy),
                BOTTOM => self.try_bottom(dy),
                _ => false,
            },
        }
    }

    #[must_use]
    pub fn whole_node(&self) -> usize {
        match self.resizing {
            Resizing::None => 0,
            Resizing::NS | Resizing::WE => 2,
            Resizing::Any => any_nodes::WHOLE,
        }
    }

    /// True when the rectangle is thin enough to vanish.
    #[must_use]
    pub fn disappearance_check(&self) -> bool {
        self.rect.w.min(self.rect.h) <= DISAPPEARANCE_SIZE
    }
}

impl Movable for RectShape {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn define_cover(&self) -> Cover {
        rect_cover_unchecked(self.rect, self.resizing, DEFAULT_CORNER_RADIUS, DEFAULT_HALF_STRIP)
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.rect = self.rect.translate(dx, dy);
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, _pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        if button != MouseButton::Left {
            return false;
        }
        if node == self.whole_node() {
            self.translate(dx, dy);
            return true;
        }
        self.resize_node(node, dx, dy)
    }

    fn finish_gesture(&mut self, node: usize, _shape: NodeShape) -> Released {
        if self.disappear && node != self.whole_node() && self.disappearance_check() {
            Released::Remove
        } else {
            Released::Keep
        }
    }

    fn basic_points(&self) -> Vec<Point2> {
        self.rect.corners().to_vec()
    }

    fn bounds(&self) -> Rect {
        self.rect
    }

    fn draw(&self, canvas: &mut Canvas) {
        canvas.rect(self.rect, &self.meta.color);
    }
}

/// Node ids of a fixed-ratio rectangle.
pub mod ratio_nodes {
    pub const LEFT: usize = 0;
    pub const RIGHT: usize = 1;
    pub const TOP: usize = 2;
    pub const BOTTOM: usize = 3;
    pub const WHOLE: usize = 4;
}

/// Resizable by its borders only, always keeping `w / h`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixedRatioRect {
    pub meta: Meta,
    pub rect: Rect,
    pub ratio: f64,
    pub w_min: f64,
    pub h_min: f64,
}

impl FixedRatioRect {
    pub fn new(ids: &mut IdGen, rect: Rect, w_min: f64, h_min: f64) -> Self {
        Self {
            meta: ids.meta(),
            rect,
            ratio: rect.w / rect.h,
            w_min: w_min.max(RECT_MIN_SIZE).min(rect.w),
            h_min: h_min.max(RECT_MIN_SIZE).min(rect.h),
        }
    }

    /// Moves one border by `delta` along its axis. Left and right moves keep
    /// the top fixed; top and bottom moves keep the left fixed.
    pub fn fixed_ratio_border_move(&mut self, side: usize, delta: f64) -> bool {
        use ratio_nodes::*;
        let (w, h) = match side {
            LEFT | RIGHT => {
                let w = if side == LEFT { self.rect.w - delta } else { self.rect.w + delta };
                (w, round_px(w / self.ratio))
            }
            TOP | BOTTOM => {
                let h = if side == TOP { self.rect.h - delta } else { self.rect.h + delta };
                (round_px(h * self.ratio), h)
            }
            _ => return false,
        };
        if w < self.w_min || h < self.h_min {
            return false;
        }
        match side {
            LEFT => self.rect.x = self.rect.right() - w,
            TOP => self.rect.y = self.rect.bottom() - h,
            _ => {}
        }
        self.rect.w = w;
        self.rect.h = h;
        true
    }
}

impl Movable for FixedRatioRect {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn define_cover(&self) -> Cover {
        let r = self.rect;
        let hs = DEFAULT_HALF_STRIP;
        Cover::assemble(vec![
            CoverNode::rect(Rect::new(r.left() - hs, r.top(), 2.0 * hs, r.h)).with_cursor(CursorHint::SizeWE),
            CoverNode::rect(Rect::new(r.right() - hs, r.top(), 2.0 * hs, r.h)).with_cursor(CursorHint::SizeWE),
            CoverNode::rect(Rect::new(r.left(), r.top() - hs, r.w, 2.0 * hs)).with_cursor(CursorHint::SizeNS),
            CoverNode::rect(Rect::new(r.left(), r.bottom() - hs, r.w, 2.0 * hs)).with_cursor(CursorHint::SizeNS),
            CoverNode::rect(r),
        ])
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        self.rect = self.rect.translate(dx, dy);
    }

    fn move_node(&mut self, node: usize, dx: f64, dy: f64, _pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        use ratio_nodes::*;
        if button != MouseButton::Left {
            return false;
        }
        match node {
            LEFT | RIGHT => self.fixed_ratio_border_move(node, dx),
            TOP | BOTTOM => self.fixed_ratio_border_move(node, dy),
            WHOLE => {
                self.translate(dx, dy);
                true
            }
            _ => false,
        }
    }

    fn basic_points(&self) -> Vec<Point2> {
        self.rect.corners().to_vec()
    }

    fn bounds(&self) -> Rect {
        self.rect
    }

    fn draw(&self, canvas: &mut Canvas) {
        canvas.rect(self.rect, &self.meta.color);
    }
}

crate::leaf_assembly!(RectShape, FixedRatioRect);
