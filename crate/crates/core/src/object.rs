//! The movable-object contract and the assembly tree built on top of it.
//!
//! A [`Movable`] is one object with one cover. An [`Assembly`] is anything
//! that can sit in a scene: a single movable or a complex object made of
//! independently movable parts. Complex objects route node moves to the part
//! that owns the id and keep the other parts in step.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, NodeShape};
use crate::engine::{ClippingLevel, MouseButton, MouseLink, ObjectId};
use crate::geometry::{Point2, Rect};
use crate::scene::svg::Canvas;

fn yes() -> bool {
    true
}

fn default_color() -> String {
    "#4a7bd0".to_string()
}

/// Identity, visibility and movability shared by every object.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub id: ObjectId,
    /// 0 means no parent.
    #[serde(default)]
    pub parent_id: ObjectId,
    #[serde(default = "yes")]
    pub visible: bool,
    #[serde(default = "yes")]
    pub visible_as_member: bool,
    /// A fixed object keeps its cover but every node reacts as Frozen.
    #[serde(default = "yes")]
    pub movable: bool,
    #[serde(default = "default_color")]
    pub color: String,
}

impl Meta {
    #[must_use]
    pub fn new(id: ObjectId) -> Self {
        Self {
            id,
            parent_id: 0,
            visible: true,
            visible_as_member: true,
            movable: true,
            color: default_color(),
        }
    }

    /// Shown and sensed only when both flags are set.
    #[must_use]
    pub fn rendered(&self) -> bool {
        self.visible && self.visible_as_member
    }
}

/// Source of unique object ids. Id 0 is reserved for "none".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdGen {
    next: ObjectId,
}

impl Default for IdGen {
    fn default() -> Self {
        Self { next: 1 }
    }
}

impl IdGen {
    #[must_use]
    pub fn starting_at(next: ObjectId) -> Self {
        Self { next: next.max(1) }
    }

    pub fn fresh(&mut self) -> ObjectId {
        let id = self.next;
        self.next += 1;
        id
    }

    #[must_use]
    pub fn peek(&self) -> ObjectId {
        self.next
    }

    pub fn meta(&mut self) -> Meta {
        Meta::new(self.fresh())
    }
}

/// What an object asks of the engine when a gesture starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GestureStart {
    pub clipping: Option<ClippingLevel>,
}

/// What should happen to an object once a gesture on it ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Released {
    Keep,
    Remove,
}

/// One object with one cover.
pub trait Movable {
    fn meta(&self) -> &Meta;
    fn meta_mut(&mut self) -> &mut Meta;
    fn define_cover(&self) -> Cover;
    /// Forward movement of the whole object.
    fn translate(&mut self, dx: f64, dy: f64);
    /// Reaction to a caught node being dragged. Returns whether anything changed.
    #[allow(clippy::too_many_arguments)]
    fn move_node(
        &mut self,
        node: usize,
        dx: f64,
        dy: f64,
        pt: Point2,
        button: MouseButton,
        link: &mut MouseLink,
    ) -> bool;
    /// Captures gesture-constant values such as compensation angles.
    fn start_gesture(&mut self, _node: usize, _pt: Point2, _button: MouseButton) -> GestureStart {
        GestureStart::default()
    }
    fn finish_gesture(&mut self, _node: usize, _shape: NodeShape) -> Released {
        Released::Keep
    }
    /// Whether a left click released on this node brings the object on top.
    fn pops_on_click(&self, node: usize, _shape: NodeShape) -> bool {
        node == self.define_cover().last_id()
    }
    /// The points that define the geometry.
    fn basic_points(&self) -> Vec<Point2>;
    fn bounds(&self) -> Rect {
        Rect::bounding(&self.basic_points()).unwrap_or_default()
    }
    fn draw(&self, canvas: &mut Canvas);
}

/// Anything that can be placed in a scene.
pub trait Assembly {
    fn meta(&self) -> &Meta;
    fn meta_mut(&mut self) -> &mut Meta;
    fn children(&self) -> Vec<&dyn Assembly> {
        Vec::new()
    }
    fn children_mut(&mut self) -> Vec<&mut dyn Assembly> {
        Vec::new()
    }
    /// Cover of this object itself; `None` for pure containers that are not
    /// registered with the engine.
    fn own_cover(&self) -> Option<Cover>;
    fn start(&mut self, id: ObjectId, node: usize, pt: Point2, button: MouseButton) -> GestureStart;
    #[allow(clippy::too_many_arguments)]
    fn move_part(
        &mut self,
        id: ObjectId,
        node: usize,
        dx: f64,
        dy: f64,
        pt: Point2,
        button: MouseButton,
        link: &mut MouseLink,
    ) -> bool;
    fn finish(&mut self, id: ObjectId, node: usize, shape: NodeShape) -> Released;
    fn pops(&self, id: ObjectId, node: usize, shape: NodeShape) -> bool;
    fn translate(&mut self, dx: f64, dy: f64);
    /// Area occupied by the visible parts.
    fn bounds(&self) -> Rect;
    /// Draws this object and its parts back to front.
    fn draw(&self, canvas: &mut Canvas);
    fn basic_points(&self) -> Vec<Point2>;
    /// Controls precede graphical objects in the queue.
    fn is_control(&self) -> bool {
        false
    }
    /// Hook run after visibility flags anywhere in this subtree changed.
    fn visibility_changed(&mut self) {}
}

/// Registers `a` into `out`: every child first, then the object itself.
pub fn into_mover(a: &dyn Assembly, out: &mut Vec<ObjectId>) {
    for c in a.children() {
        into_mover(c, out);
    }
    if a.own_cover().is_some() {
        out.push(a.meta().id);
    }
}

#[must_use]
pub fn find(a: &dyn Assembly, id: ObjectId) -> Option<&dyn Assembly> {
    if a.meta().id == id {
        return Some(a);
    }
    a.children().into_iter().find_map(|c| find(c, id))
}

pub fn find_mut(a: &mut dyn Assembly, id: ObjectId) -> Option<&mut dyn Assembly> {
    if a.meta().id == id {
        return Some(a);
    }
    a.children_mut().into_iter().find_map(|c| find_mut(c, id))
}

#[must_use]
pub fn contains_id(a: &dyn Assembly, id: ObjectId) -> bool {
    find(a, id).is_some()
}

/// Every meta in the subtree, parents before children.
#[must_use]
pub fn metas(a: &dyn Assembly) -> Vec<&Meta> {
    let mut out = vec![a.meta()];
    for c in a.children() {
        out.extend(metas(c));
    }
    out
}

/// Cover of `id` as the engine should see it: absent when hidden, frozen
/// when the object is fixed.
#[must_use]
pub fn sensed_cover(a: &dyn Assembly, id: ObjectId) -> Option<Cover> {
    let obj = find(a, id)?;
    let m = obj.meta();
    if !m.rendered() {
        return None;
    }
    let mut cover = obj.own_cover()?;
    if !m.movable {
        cover.freeze();
    }
    Some(cover)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Visibility {
    Direct,
    AsMember,
}

/// Pushes `visible && visible_as_member` of `a` into every child's member
/// flag, recursively.
pub fn propagate_visibility(a: &mut dyn Assembly) {
    let flag = a.meta().rendered();
    for c in a.children_mut() {
        c.meta_mut().visible_as_member = flag;
        propagate_visibility(c);
    }
}

/// Sets one flag on `id` inside the tree rooted at `root`. Returns false when
/// the id is not in the tree.
pub fn set_visibility(root: &mut dyn Assembly, id: ObjectId, which: Visibility, value: bool) -> bool {
    let Some(obj) = find_mut(root, id) else {
        return false;
    };
    match which {
        Visibility::Direct => obj.meta_mut().visible = value,
        Visibility::AsMember => obj.meta_mut().visible_as_member = value,
    }
    propagate_visibility(obj);
    notify_visibility(root);
    true
}

/// Restores the direct flag on `id` and every descendant.
pub fn visible_all(root: &mut dyn Assembly, id: ObjectId) -> bool {
    fn restore(a: &mut dyn Assembly) {
        a.meta_mut().visible = true;
        for c in a.children_mut() {
            restore(c);
        }
    }
    let Some(obj) = find_mut(root, id) else {
        return false;
    };
    restore(obj);
    propagate_visibility(obj);
    notify_visibility(root);
    true
}

fn notify_visibility(a: &mut dyn Assembly) {
    for c in a.children_mut() {
        notify_visibility(c);
    }
    a.visibility_changed();
}

/// Implements [`Assembly`] for a single [`Movable`] with no parts. Prefix
/// the list with `control:` for objects that stand in for widgets.
#[macro_export]
macro_rules! leaf_assembly {
    (control: $($t:ty),* $(,)?) => {$(
        $crate::leaf_assembly!(@impl $t, true);
    )*};
    ($($t:ty),* $(,)?) => {$(
        $crate::leaf_assembly!(@impl $t, false);
    )*};
    (@impl $t:ty, $control:expr) => {
        impl $crate::object::Assembly for $t {
            fn meta(&self) -> &$crate::object::Meta {
                $crate::object::Movable::meta(self)
            }
            fn meta_mut(&mut self) -> &mut $crate::object::Meta {
                $crate::object::Movable::meta_mut(self)
            }
            fn own_cover(&self) -> Option<$crate::cover::Cover> {
                Some($crate::object::Movable::define_cover(self))
            }
            fn start(
                &mut self,
                id: $crate::engine::ObjectId,
                node: usize,
                pt: $crate::geometry::Point2,
                button: $crate::engine::MouseButton,
            ) -> $crate::object::GestureStart {
                if id != $crate::object::Movable::meta(self).id {
                    return $crate::object::GestureStart::default();
                }
                $crate::object::Movable::start_gesture(self, node, pt, button)
            }
            fn move_part(
                &mut self,
                id: $crate::engine::ObjectId,
                node: usize,
                dx: f64,
                dy: f64,
                pt: $crate::geometry::Point2,
                button: $crate::engine::MouseButton,
                link: &mut $crate::engine::MouseLink,
            ) -> bool {
                id == $crate::object::Movable::meta(self).id
                    && $crate::object::Movable::move_node(self, node, dx, dy, pt, button, link)
            }
            fn finish(
                &mut self,
                id: $crate::engine::ObjectId,
                node: usize,
                shape: $crate::cover::NodeShape,
            ) -> $crate::object::Released {
                if id != $crate::object::Movable::meta(self).id {
                    return $crate::object::Released::Keep;
                }
                $crate::object::Movable::finish_gesture(self, node, shape)
            }
            fn pops(&self, id: $crate::engine::ObjectId, node: usize, shape: $crate::cover::NodeShape) -> bool {
                id == $crate::object::Movable::meta(self).id
                    && $crate::object::Movable::pops_on_click(self, node, shape)
            }
            fn translate(&mut self, dx: f64, dy: f64) {
                $crate::object::Movable::translate(self, dx, dy)
            }
            fn bounds(&self) -> $crate::geometry::Rect {
                $crate::object::Movable::bounds(self)
            }
            fn draw(&self, canvas: &mut $crate::scene::svg::Canvas) {
                if $crate::object::Movable::meta(self).rendered() {
                    $crate::object::Movable::draw(self, canvas)
                }
            }
            fn basic_points(&self) -> Vec<$crate::geometry::Point2> {
                $crate::object::Movable::basic_points(self)
            }
            fn is_control(&self) -> bool {
                $control
            }
        }
    };
}
