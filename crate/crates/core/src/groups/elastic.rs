//! Groups whose frame keeps wrapping around freely movable members. Groups
//! nest: a member may itself be a group.

use serde::{Deserialize, Serialize};

use crate::cover::{Behaviour, Cover, CoverNode, CursorHint, NodeShape};
use crate::engine::{MouseButton, MouseLink, ObjectId};
use crate::geometry::{Point2, Rect};
use crate::object::{contains_id, Assembly, GestureStart, IdGen, Meta, Released};
use crate::scene::svg::Canvas;

use super::{CommentedElement, DominantGroup, WidgetProxy};

/// Space kept between the frame ends and the nearest possible title edge.
pub const TITLE_END_MARGIN: f64 = 8.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ElasticElement {
    Proxy(WidgetProxy),
    Commented(CommentedElement),
    Dominant(DominantGroup),
    Group(Box<ElasticGroup>),
}

impl ElasticElement {
    #[must_use]
    pub fn as_dyn(&self) -> &dyn Assembly {
        match self {
            Self::Proxy(p) => p,
            Self::Commented(c) => c,
            Self::Dominant(d) => d,
            Self::Group(g) => g.as_ref(),
        }
    }

    pub fn as_dyn_mut(&mut self) -> &mut dyn Assembly {
        match self {
            Self::Proxy(p) => p,
            Self::Commented(c) => c,
            Self::Dominant(d) => d,
            Self::Group(g) => g.as_mut(),
        }
    }
}

/// Title sitting on the upper line of the frame. Width and height come from
/// the host's font metrics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupTitle {
    pub text: String,
    pub width: f64,
    pub height: f64,
    /// 0 puts the title at the left end of the upper line, 1 at the right end.
    pub alignment_coef: f64,
    pub movable: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupVisuals {
    pub back_color: String,
    /// 0 is opaque; applies to the background fill only.
    pub transparency: f64,
    pub frame_color: String,
    pub show_frame: bool,
    pub title_color: String,
}

impl Default for GroupVisuals {
    fn default() -> Self {
        Self {
            back_color: "#f4f1e4".to_string(),
            transparency: 0.0,
            frame_color: "#404040".to_string(),
            show_frame: true,
            title_color: "#202020".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElasticGroup {
    pub meta: Meta,
    pub elements: Vec<ElasticElement>,
    /// Left, top, right, bottom.
    pub side_spaces: [f64; 4],
    pub title: Option<GroupTitle>,
    #[serde(default)]
    pub visuals: GroupVisuals,
    pub elements_movable: bool,
    /// Derived by [`ElasticGroup::group_update`].
    pub frame: Rect,
}

impl ElasticGroup {
    pub fn new(ids: &mut IdGen, elements: Vec<ElasticElement>, side_spaces: [f64; 4], title: Option<GroupTitle>) -> Self {
        let meta = ids.meta();
        let mut g = Self {
            meta,
            elements,
            side_spaces,
            title,
            visuals: GroupVisuals::default(),
            elements_movable: true,
            frame: Rect::default(),
        };
        for e in &mut g.elements {
            e.as_dyn_mut().meta_mut().parent_id = g.meta.id;
        }
        g.group_update();
        g
    }

    /// Frame around the visible members. Left, right and bottom get their
    /// side space; the top also makes room for half the title. Nothing
    /// visible leaves the frame where it was.
    pub fn group_update(&mut self) {
        let mut union: Option<Rect> = None;
        for e in &self.elements {
            let a = e.as_dyn();
            if a.meta().rendered() {
                let b = a.bounds();
                union = Some(union.map_or(b, |u| u.union(&b)));
            }
        }
        let Some(u) = union else {
            return;
        };
        let [l, t, r, b] = self.side_spaces;
        let top = t + self.title.as_ref().map_or(0.0, |tt| tt.height / 2.0);
        self.frame = u.inflate(l, top, r, b);
    }

    fn title_margin(&self) -> f64 {
        self.title.as_ref().map_or(0.0, |t| TITLE_END_MARGIN + t.width / 2.0)
    }

    /// Area of the title, centered on the upper line of the frame.
    #[must_use]
    pub fn title_rect(&self) -> Option<Rect> {
        let t = self.title.as_ref()?;
        let m = self.title_margin();
        let lo = self.frame.left() + m;
        let hi = self.frame.right() - m;
        let cx = lo + (hi - lo) * t.alignment_coef;
        Some(Rect::new(cx - t.width / 2.0, self.frame.top() - t.height / 2.0, t.width, t.height))
    }

    /// Slides the title along the upper line. Returns false when the title
    /// is fixed or missing.
    pub fn title_drag(&mut self, dx: f64) -> bool {
        let m = self.title_margin();
        let span = self.frame.w - 2.0 * m;
        let Some(t) = self.title.as_mut() else {
            return false;
        };
        if !t.movable {
            return false;
        }
        if span > 0.0 {
            t.alignment_coef = (t.alignment_coef + dx / span).clamp(0.0, 1.0);
        }
        true
    }

    /// Fixes or frees every member at once.
    pub fn set_elements_movable(&mut self, movable: bool) {
        self.elements_movable = movable;
        for e in &mut self.elements {
            e.as_dyn_mut().meta_mut().movable = movable;
        }
    }

    /// Dissolves the group, handing back its members as independent objects.
    #[must_use]
    pub fn into_elements(self) -> Vec<ElasticElement> {
        let mut v = self.elements;
        for e in &mut v {
            let m = e.as_dyn_mut().meta_mut();
            m.parent_id = 0;
            m.visible_as_member = true;
        }
        for e in &mut v {
            crate::object::propagate_visibility(e.as_dyn_mut());
        }
        v
    }

    fn title_node(&self) -> Option<usize> {
        self.title.as_ref().map(|_| 0)
    }
}

impl Assembly for ElasticGroup {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn children(&self) -> Vec<&dyn Assembly> {
        self.elements.iter().map(ElasticElement::as_dyn).collect()
    }

    fn children_mut(&mut self) -> Vec<&mut dyn Assembly> {
        self.elements.iter_mut().map(ElasticElement::as_dyn_mut).collect()
    }

    /// Title first, when there is one, then the whole frame.
    fn own_cover(&self) -> Option<Cover> {
        let mut nodes = Vec::new();
        if let (Some(r), Some(t)) = (self.title_rect(), self.title.as_ref()) {
            let behaviour = if t.movable { Behaviour::Moveable } else { Behaviour::Frozen };
            nodes.push(CoverNode::rect(r).with_behaviour(behaviour).with_cursor(CursorHint::SizeWE));
        }
        nodes.push(CoverNode::rect(self.frame).with_cursor(CursorHint::SizeAll));
        Some(Cover::assemble(nodes))
    }

    fn start(&mut self, id: ObjectId, node: usize, pt: Point2, button: MouseButton) -> GestureStart {
        match self.elements.iter_mut().find(|e| contains_id(e.as_dyn(), id)) {
            Some(e) => e.as_dyn_mut().start(id, node, pt, button),
            None => GestureStart::default(),
        }
    }

    fn move_part(&mut self, id: ObjectId, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, link: &mut MouseLink) -> bool {
        if id == self.meta.id {
            if button != MouseButton::Left {
                return false;
            }
            if Some(node) == self.title_node() {
                return self.title_drag(dx);
            }
            Assembly::translate(self, dx, dy);
            return true;
        }
        let moved = self
            .elements
            .iter_mut()
            .find(|e| contains_id(e.as_dyn(), id))
            .is_some_and(|e| e.as_dyn_mut().move_part(id, node, dx, dy, pt, button, link));
        if moved {
            self.group_update();
        }
        moved
    }

    fn finish(&mut self, id: ObjectId, node: usize, shape: NodeShape) -> Released {
        if id == self.meta.id {
            return Released::Keep;
        }
        if let Some(e) = self.elements.iter_mut().find(|e| contains_id(e.as_dyn(), id)) {
            e.as_dyn_mut().finish(id, node, shape);
            self.group_update();
        }
        Released::Keep
    }

    fn pops(&self, id: ObjectId, node: usize, shape: NodeShape) -> bool {
        self.elements
            .iter()
            .find(|e| contains_id(e.as_dyn(), id))
            .is_some_and(|e| e.as_dyn().pops(id, node, shape))
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        for e in &mut self.elements {
            e.as_dyn_mut().translate(dx, dy);
        }
        self.frame = self.frame.translate(dx, dy);
    }

    fn bounds(&self) -> Rect {
        self.frame
    }

    fn draw(&self, canvas: &mut Canvas) {
        if !self.meta.rendered() {
            return;
        }
        let v = &self.visuals;
        let stroke = v.show_frame.then_some(v.frame_color.as_str());
        canvas.framed_rect(self.frame, &v.back_color, 1.0 - v.transparency, stroke);
        if let (Some(r), Some(t)) = (self.title_rect(), self.title.as_ref()) {
            canvas.framed_rect(r, &v.back_color, 1.0, None);
            canvas.text(Point2::new(r.x, r.bottom() - 2.0), 0.0, &t.text);
        }
        for e in self.elements.iter().rev() {
            e.as_dyn().draw(canvas);
        }
    }

    fn basic_points(&self) -> Vec<Point2> {
        self.frame.corners().to_vec()
    }

    fn is_control(&self) -> bool {
        true
    }

    fn visibility_changed(&mut self) {
        self.group_update();
    }
}
