//! Scene assembly: the ordered object list, the engine built from it,
//! identification, z-order, menu commands, persistence and replay.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constraints::{BallBoard, Labyrinth, PolyWithBall, SliderBoard};
use crate::cover::{Cover, Resizing};
use crate::engine::{ClippingLevel, Engine, Host, MouseButton, MouseLink, ObjectId, CLICK_THRESHOLD};
use crate::geometry::{distance, Point2, Rect};
use crate::groups::{
    CommentedElement, CommentedRect, DominantGroup, ElasticElement, ElasticGroup, LinkedRects, PlotLite, WidgetProxy,
};
use crate::object::{self, contains_id, into_mover, sensed_cover, Assembly, IdGen, Visibility};
use crate::shapes::{
    ChatoyantPoly, ConvexPoly, FixedRatioRect, HoleBoard, HoledPoly, LabelBox, LineShape, NnodeCircle, NnodeRing,
    NnodeStrip, PartitionedCircle, PartitionedRect, Plug, RectShape, RegularPoly, RotRect, Sector, SectoredCircle,
    SegmentedLine,
};

pub mod doc;
pub mod replay;
pub mod svg;
pub mod trace;

pub use doc::{load, save, DocError};
pub use replay::{GestureLog, LogEntry};
pub use trace::{parse_trace, Command, TraceError, TraceEvent};

use svg::Canvas;

macro_rules! scene_objects {
    ($($variant:ident($t:ty)),* $(,)?) => {
        /// Every kind of top-level object a scene can hold.
        #[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
        #[serde(tag = "type")]
        pub enum SceneObject {
            $($variant($t),)*
        }

        impl SceneObject {
            #[must_use]
            pub fn as_dyn(&self) -> &dyn Assembly {
                match self {
                    $(Self::$variant(o) => o,)*
                }
            }

            pub fn as_dyn_mut(&mut self) -> &mut dyn Assembly {
                match self {
                    $(Self::$variant(o) => o,)*
                }
            }
        }

        $(impl From<$t> for SceneObject {
            fn from(o: $t) -> Self {
                Self::$variant(o)
            }
        })*
    };
}

scene_objects! {
    Rect(RectShape),
    FixedRatioRect(FixedRatioRect),
    Line(LineShape),
    SegmentedLine(SegmentedLine),
    SectoredCircle(SectoredCircle),
    Label(LabelBox),
    RotRect(RotRect),
    RegularPoly(RegularPoly),
    ConvexPoly(ConvexPoly),
    ChatoyantPoly(ChatoyantPoly),
    NnodeCircle(NnodeCircle),
    NnodeRing(NnodeRing),
    NnodeStrip(NnodeStrip),
    Sector(Sector),
    PartitionedRect(PartitionedRect),
    PartitionedCircle(PartitionedCircle),
    HoleBoard(HoleBoard),
    Plug(Plug),
    HoledPoly(HoledPoly),
    CommentedRect(CommentedRect),
    Widget(WidgetProxy),
    CommentedElement(CommentedElement),
    DominantGroup(DominantGroup),
    LinkedRects(LinkedRects),
    ElasticGroup(ElasticGroup),
    PlotLite(PlotLite),
    SliderBoard(SliderBoard),
    BallBoard(BallBoard),
    PolyWithBall(PolyWithBall),
    Labyrinth(Labyrinth),
}

impl From<ElasticElement> for SceneObject {
    fn from(e: ElasticElement) -> Self {
        match e {
            ElasticElement::Proxy(p) => Self::Widget(p),
            ElasticElement::Commented(c) => Self::CommentedElement(c),
            ElasticElement::Dominant(d) => Self::DominantGroup(d),
            ElasticElement::Group(g) => Self::ElasticGroup(*g),
        }
    }
}

impl Host for Vec<SceneObject> {
    fn cover(&self, id: ObjectId) -> Option<Cover> {
        self.iter().find(|o| contains_id(o.as_dyn(), id)).and_then(|o| sensed_cover(o.as_dyn(), id))
    }

    fn move_node(&mut self, id: ObjectId, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, link: &mut MouseLink) -> bool {
        self.iter_mut()
            .find(|o| contains_id(o.as_dyn(), id))
            .is_some_and(|o| o.as_dyn_mut().move_part(id, node, dx, dy, pt, button, link))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZAction {
    Top,
    Bottom,
    Up,
    Down,
}

/// How a button release is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClickOutcome {
    Drag,
    /// Left click; `None` when released over empty space.
    LeftClick(Option<ObjectId>),
    /// Right click asks for a context menu, of an object or of the empty area.
    MenuRequest(Option<ObjectId>),
}

/// Travel of at most [`CLICK_THRESHOLD`] pixels is a click.
#[must_use]
pub fn classify_click(down: Point2, up: Point2, button: MouseButton, released: Option<ObjectId>) -> ClickOutcome {
    if distance(down, up) > CLICK_THRESHOLD {
        return ClickOutcome::Drag;
    }
    match button {
        MouseButton::Left => ClickOutcome::LeftClick(released),
        MouseButton::Right => ClickOutcome::MenuRequest(released),
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SceneError {
    #[error("no object with id {0}")]
    UnknownId(ObjectId),
    #[error("object {0} does not support this command")]
    Unsupported(ObjectId),
    #[error("a gesture is in progress")]
    Busy,
}

/// Default spaces of a group formed on the fly: left, top, right, bottom.
pub const TEMPORARY_GROUP_SPACES: [f64; 4] = [12.0, 6.0, 12.0, 12.0];

fn dominant_widget(d: &mut DominantGroup, id: ObjectId) -> Option<&mut WidgetProxy> {
    if d.dominant.meta.id == id {
        return Some(&mut d.dominant);
    }
    d.subordinates.iter_mut().map(|s| &mut s.proxy).find(|w| w.meta.id == id)
}

fn elastic_widget(g: &mut ElasticGroup, id: ObjectId) -> Option<&mut WidgetProxy> {
    g.elements.iter_mut().find_map(|e| match e {
        ElasticElement::Proxy(w) => Some(w).filter(|w| w.meta.id == id),
        ElasticElement::Commented(c) => Some(&mut c.element).filter(|w| w.meta.id == id),
        ElasticElement::Dominant(d) => dominant_widget(d, id),
        ElasticElement::Group(inner) => elastic_widget(inner, id),
    })
}

#[derive(Debug)]
pub struct Scene {
    /// Client area; the Visual clipping level keeps the pointer inside it.
    pub client: Rect,
    /// Clipping restored after every gesture.
    pub clipping: ClippingLevel,
    pub ids: IdGen,
    /// Index 0 is the topmost object.
    pub objects: Vec<SceneObject>,
    engine: Engine,
}

impl Scene {
    #[must_use]
    pub fn new(width: f64, height: f64) -> Self {
        let client = Rect::new(0.0, 0.0, width, height);
        Self {
            client,
            clipping: ClippingLevel::Visual,
            ids: IdGen::default(),
            objects: Vec::new(),
            engine: Engine::new(Some(client)),
        }
    }

    #[must_use]
    pub fn engine(&self) -> &Engine {
        &self.engine
    }

    #[must_use]
    pub fn queue(&self) -> &[ObjectId] {
        self.engine.queue()
    }

    /// Places `obj` on top of everything and rebuilds the queue.
    pub fn add_top(&mut self, obj: impl Into<SceneObject>) {
        self.objects.insert(0, obj.into());
        self.renew();
    }

    /// Places `obj` below everything and rebuilds the queue.
    pub fn add_bottom(&mut self, obj: impl Into<SceneObject>) {
        self.objects.push(obj.into());
        self.renew();
    }

    /// Rebuilds the queue from the object list: controls first, then the
    /// graphical objects, each with its parts ahead of itself.
    pub fn renew(&mut self) {
        let mut q = Vec::new();
        for o in self.objects.iter().filter(|o| o.as_dyn().is_control()) {
            into_mover(o.as_dyn(), &mut q);
        }
        for o in self.objects.iter().filter(|o| !o.as_dyn().is_control()) {
            into_mover(o.as_dyn(), &mut q);
        }
        // Only fails mid-gesture, and every caller rebuilds between gestures.
        let _ = self.engine.set_queue(q);
        self.engine.set_clipping(self.clipping);
    }

    /// Index of the top-level object holding `id`.
    #[must_use]
    pub fn root_index(&self, id: ObjectId) -> Option<usize> {
        self.objects.iter().position(|o| contains_id(o.as_dyn(), id))
    }

    #[must_use]
    pub fn find(&self, id: ObjectId) -> Option<&dyn Assembly> {
        self.objects.iter().find_map(|o| object::find(o.as_dyn(), id))
    }

    /// `id` followed by its parent, grandparent and so on.
    #[must_use]
    pub fn parent_chain(&self, id: ObjectId) -> Option<Vec<ObjectId>> {
        let mut chain = vec![id];
        let mut cur = self.find(id)?;
        while cur.meta().parent_id != 0 {
            let p = cur.meta().parent_id;
            if chain.contains(&p) {
                break;
            }
            chain.push(p);
            cur = self.find(p)?;
        }
        Some(chain)
    }

    /// Reorders the object holding `id`. Returns whether anything changed.
    pub fn z_order(&mut self, id: ObjectId, action: ZAction) -> bool {
        let Some(i) = self.root_index(id) else {
            return false;
        };
        let n = self.objects.len();
        let j = match action {
            ZAction::Top => 0,
            ZAction::Bottom => n - 1,
            ZAction::Up => i.saturating_sub(1),
            ZAction::Down => (i + 1).min(n - 1),
        };
        if i == j {
            return false;
        }
        let o = self.objects.remove(i);
        self.objects.insert(j, o);
        self.renew();
        true
    }

    fn root_mut(&mut self, id: ObjectId) -> Result<&mut dyn Assembly, SceneError> {
        let i = self.root_index(id).ok_or(SceneError::UnknownId(id))?;
        Ok(self.objects[i].as_dyn_mut())
    }

    pub fn set_visibility(&mut self, id: ObjectId, visible: bool) -> Result<(), SceneError> {
        let root = self.root_mut(id)?;
        object::set_visibility(root, id, Visibility::Direct, visible);
        Ok(())
    }

    /// Shows `id` and every part below it.
    pub fn visible_all(&mut self, id: ObjectId) -> Result<(), SceneError> {
        let root = self.root_mut(id)?;
        object::visible_all(root, id);
        Ok(())
    }

    pub fn set_movable(&mut self, id: ObjectId, movable: bool) -> Result<(), SceneError> {
        let root = self.root_mut(id)?;
        let obj = object::find_mut(root, id).ok_or(SceneError::UnknownId(id))?;
        obj.meta_mut().movable = movable;
        Ok(())
    }

    pub fn set_color(&mut self, id: ObjectId, color: &str) -> Result<(), SceneError> {
        let root = self.root_mut(id)?;
        let obj = object::find_mut(root, id).ok_or(SceneError::UnknownId(id))?;
        obj.meta_mut().color = color.to_string();
        Ok(())
    }

    /// Narrows the resizing of a widget, wherever it sits.
    pub fn set_resizing(&mut self, id: ObjectId, resizing: Resizing) -> Result<bool, SceneError> {
        let i = self.root_index(id).ok_or(SceneError::UnknownId(id))?;
        let w = match &mut self.objects[i] {
            SceneObject::Widget(w) => Some(w).filter(|w| w.meta.id == id),
            SceneObject::CommentedElement(c) => Some(&mut c.element).filter(|w| w.meta.id == id),
            SceneObject::DominantGroup(d) => dominant_widget(d, id),
            SceneObject::ElasticGroup(g) => elastic_widget(g, id),
            _ => None,
        };
        w.map(|w| w.set_resizing(resizing)).ok_or(SceneError::Unsupported(id))
    }

    /// Fixes or frees all members of an elastic group.
    pub fn set_members_movable(&mut self, id: ObjectId, movable: bool) -> Result<(), SceneError> {
        let i = self.root_index(id).ok_or(SceneError::UnknownId(id))?;
        match &mut self.objects[i] {
            SceneObject::ElasticGroup(g) if g.meta.id == id => {
                g.set_elements_movable(movable);
                Ok(())
            }
            _ => Err(SceneError::Unsupported(id)),
        }
    }

    /// Makes subordinate `id` the dominant member of its group.
    pub fn switch_dominant(&mut self, id: ObjectId) -> Result<bool, SceneError> {
        let i = self.root_index(id).ok_or(SceneError::UnknownId(id))?;
        let SceneObject::DominantGroup(g) = &self.objects[i] else {
            return Err(SceneError::Unsupported(id));
        };
        match g.switch_dominant(id) {
            Some(ng) => {
                self.objects[i] = SceneObject::DominantGroup(ng);
                self.renew();
                Ok(true)
            }
            None => Ok(false),
        }
    }

    /// Groups the top-level widgets lying fully inside the rectangle spanned
    /// by two corners. Fewer than two such widgets form no group.
    pub fn temporary_group(&mut self, c0: Point2, c1: Point2) -> Option<ObjectId> {
        let frame = Rect::from_corners(c0, c1);
        if frame.w <= 0.0 || frame.h <= 0.0 {
            return None;
        }
        let inside = |o: &SceneObject| matches!(o, SceneObject::Widget(w) if frame.contains_rect(&w.bounds));
        if self.objects.iter().filter(|o| inside(o)).count() < 2 {
            return None;
        }
        let (members, rest): (Vec<_>, Vec<_>) = std::mem::take(&mut self.objects).into_iter().partition(inside);
        self.objects = rest;
        let elements = members
            .into_iter()
            .filter_map(|o| match o {
                SceneObject::Widget(w) => Some(ElasticElement::Proxy(w)),
                _ => None,
            })
            .collect();
        let g = ElasticGroup::new(&mut self.ids, elements, TEMPORARY_GROUP_SPACES, None);
        let id = g.meta.id;
        self.objects.insert(0, SceneObject::ElasticGroup(g));
        self.renew();
        Some(id)
    }

    /// Dissolves a top-level elastic group in place.
    pub fn ungroup(&mut self, id: ObjectId) -> Result<(), SceneError> {
        let i = self.root_index(id).ok_or(SceneError::UnknownId(id))?;
        match &self.objects[i] {
            SceneObject::ElasticGroup(g) if g.meta.id == id => {}
            _ => return Err(SceneError::Unsupported(id)),
        }
        let SceneObject::ElasticGroup(g) = self.objects.remove(i) else {
            unreachable!()
        };
        for (k, e) in g.into_elements().into_iter().enumerate() {
            self.objects.insert(i + k, e.into());
        }
        self.renew();
        Ok(())
    }

    /// Removes the top-level object `id`.
    pub fn delete(&mut self, id: ObjectId) -> Result<(), SceneError> {
        let i = self
            .objects
            .iter()
            .position(|o| o.as_dyn().meta().id == id)
            .ok_or(SceneError::UnknownId(id))?;
        self.objects.remove(i);
        self.renew();
        Ok(())
    }

    /// Runs one menu command. Commands are refused mid-gesture.
    pub fn apply(&mut self, cmd: &Command) -> Result<(), SceneError> {
        if self.engine.gesture().is_some() {
            return Err(SceneError::Busy);
        }
        match cmd {
            Command::Hide(id) => self.set_visibility(*id, false)?,
            Command::Show(id) => self.set_visibility(*id, true)?,
            Command::ShowAll(id) => self.visible_all(*id)?,
            Command::Fix(id) => self.set_movable(*id, false)?,
            Command::Unfix(id) => self.set_movable(*id, true)?,
            Command::LockMembers(id) => self.set_members_movable(*id, false)?,
            Command::UnlockMembers(id) => self.set_members_movable(*id, true)?,
            Command::Color(id, c) => self.set_color(*id, c)?,
            Command::Z(action, id) => {
                self.root_index(*id).ok_or(SceneError::UnknownId(*id))?;
                self.z_order(*id, *action);
            }
            Command::Switch(id) => {
                self.switch_dominant(*id)?;
            }
            Command::Resizing(id, r) => {
                self.set_resizing(*id, *r)?;
            }
            Command::Group(c0, c1) => {
                self.temporary_group(*c0, *c1);
            }
            Command::Ungroup(id) => self.ungroup(*id)?,
            Command::Delete(id) => self.delete(*id)?,
            Command::Clipping(level) => {
                self.clipping = *level;
                self.engine.set_clipping(*level);
            }
        }
        self.renew();
        Ok(())
    }

    /// Paints back to front: the reverse of the queue.
    pub fn paint(&self, canvas: &mut Canvas) {
        let graphics = self.objects.iter().rev().filter(|o| !o.as_dyn().is_control());
        let controls = self.objects.iter().rev().filter(|o| o.as_dyn().is_control());
        for o in graphics.chain(controls) {
            o.as_dyn().draw(canvas);
        }
    }

    /// SVG picture of the scene, optionally with every sensed cover node
    /// outlined on top.
    #[must_use]
    pub fn export_svg(&self, show_covers: bool) -> String {
        let mut canvas = Canvas::new();
        canvas.open_group("shapes", None);
        self.paint(&mut canvas);
        canvas.close_group();
        if show_covers {
            canvas.open_group("covers", None);
            for &id in self.queue().iter().rev() {
                if let Some(cover) = self.objects.cover(id) {
                    canvas.open_group("cover", Some(id));
                    for prim in cover.primitives() {
                        canvas.cover_node(&prim);
                    }
                    canvas.close_group();
                }
            }
            canvas.close_group();
        }
        canvas.finish(self.client.w, self.client.h)
    }
}
