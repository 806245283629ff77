//! Non-resizable group: pressing any member moves all of them.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, CoverNode, NodeShape};
use crate::engine::{MouseButton, MouseLink};
use crate::geometry::{Point2, Rect};
use crate::object::{IdGen, Meta, Movable};
use crate::scene::svg::Canvas;
use crate::shapes::ShapeError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkedMember {
    pub tag: String,
    pub rect: Rect,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkedRects {
    pub meta: Meta,
    pub members: Vec<LinkedMember>,
}

impl LinkedRects {
    pub fn new(ids: &mut IdGen, members: Vec<LinkedMember>) -> Result<Self, ShapeError> {
        if members.is_empty() || members.iter().any(|m| !(m.rect.w > 0.0 && m.rect.h > 0.0)) {
            return Err(ShapeError::Invalid("linked rectangles need positive members".into()));
        }
        Ok(Self { meta: ids.meta(), members })
    }
}

impl Movable for LinkedRects {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    /// One node per member.
    fn define_cover(&self) -> Cover {
        Cover::assemble(self.members.iter().map(|m| CoverNode::rect(m.rect)).collect())
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        for m in &mut self.members {
            m.rect = m.rect.translate(dx, dy);
        }
    }

    fn move_node(&mut self, _node: usize, dx: f64, dy: f64, _pt: Point2, button: MouseButton, _link: &mut MouseLink) -> bool {
        if button != MouseButton::Left {
            return false;
        }
        self.translate(dx, dy);
        true
    }

    fn pops_on_click(&self, _node: usize, _shape: NodeShape) -> bool {
        false
    }

    fn basic_points(&self) -> Vec<Point2> {
        self.members.iter().flat_map(|m| m.rect.corners()).collect()
    }

    fn draw(&self, canvas: &mut Canvas) {
        for m in &self.members {
            canvas.rect(m.rect, "#e8e8e8");
            canvas.text(Point2::new(m.rect.x + 4.0, m.rect.y + m.rect.h / 2.0 + 4.0), 0.0, &m.tag);
        }
    }
}

crate::leaf_assembly!(control: LinkedRects);
