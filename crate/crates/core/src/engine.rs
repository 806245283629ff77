//! The mover: a z-ordered queue of objects and the catch, drag, release cycle.
//!
//! The engine only knows object ids and asks a [`Host`] for covers and for
//! node moves. Index 0 of the queue is checked first; painting goes the
//! other way round.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::{cover_hit, Behaviour, Cover, CoverHit, CursorHint, NodeShape};
use crate::geometry::{Point2, Rect};

pub type ObjectId = u64;

/// Pointer travel at or below this many pixels between down and up is a click.
pub const CLICK_THRESHOLD: f64 = 3.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EngineError {
    #[error("queue index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("object {0} is caught and cannot be removed mid-gesture")]
    CaughtEntry(ObjectId),
    #[error("cursor warp requested but the host registered no warp sink")]
    NoWarpSink,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MouseButton {
    Left,
    Right,
}

/// Ordered from narrowest to widest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClippingLevel {
    /// The pointer is held inside the client area.
    Visual,
    /// The pointer may leave across the right and bottom edges only.
    Safe,
    /// No clamping at all.
    Unsafe,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GestureState {
    pub object_index: usize,
    pub object_id: ObjectId,
    pub node_id: usize,
    pub node_shape: NodeShape,
    pub button: MouseButton,
    pub last_point: Point2,
    /// False when the object was caught by a Frozen node.
    pub movable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointInfo {
    /// `None` when no object is sensed at the point.
    pub object_index: Option<usize>,
    pub object_id: ObjectId,
    pub node_id: usize,
    pub shape: NodeShape,
    pub behaviour: Behaviour,
    pub cursor: CursorHint,
}

impl PointInfo {
    const NONE: PointInfo = PointInfo {
        object_index: None,
        object_id: 0,
        node_id: 0,
        shape: NodeShape::Polygon,
        behaviour: Behaviour::Moveable,
        cursor: CursorHint::Default,
    };
}

/// What the engine needs from whoever owns the objects.
pub trait Host {
    /// Current cover of a queued object, or `None` when it is not sensed.
    fn cover(&self, id: ObjectId) -> Option<Cover>;

    #[allow(clippy::too_many_arguments)]
    fn move_node(
        &mut self,
        id: ObjectId,
        node: usize,
        dx: f64,
        dy: f64,
        pt: Point2,
        button: MouseButton,
        link: &mut MouseLink,
    ) -> bool;
}

/// The link between the pointer and the engine during a gesture.
///
/// Objects that must keep the pointer glued to their grab point cut the link,
/// warp the cursor back and restore it, all from inside `move_node`.
pub struct MouseLink {
    traced: bool,
    headless: bool,
    sink: Option<Box<dyn FnMut(Point2) + Send>>,
    pending: Vec<Point2>,
    fault: Option<EngineError>,
}

impl std::fmt::Debug for MouseLink {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MouseLink")
            .field("traced", &self.traced)
            .field("headless", &self.headless)
            .field("sink", &self.sink.is_some())
            .field("pending", &self.pending)
            .finish()
    }
}

impl MouseLink {
    #[must_use]
    pub fn headless() -> Self {
        Self {
            traced: true,
            headless: true,
            sink: None,
            pending: Vec::new(),
            fault: None,
        }
    }

    #[must_use]
    pub fn traced(&self) -> bool {
        self.traced
    }

    pub fn set_traced(&mut self, on: bool) {
        self.traced = on;
    }

    /// Moves the cursor. Headless links only record the point.
    pub fn warp(&mut self, p: Point2) -> Result<(), EngineError> {
        match (&mut self.sink, self.headless) {
            (Some(sink), _) => sink(p),
            (None, true) => {}
            (None, false) => {
                self.fault = Some(EngineError::NoWarpSink);
                return Err(EngineError::NoWarpSink);
            }
        }
        self.pending.push(p);
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct ClipWindow {
    left: f64,
    top: f64,
    right: f64,
    bottom: f64,
}

impl ClipWindow {
    fn clamp(&self, p: Point2) -> Point2 {
        Point2::new(p.x.max(self.left).min(self.right), p.y.max(self.top).min(self.bottom))
    }
}

/// Outcome of one pointer move, for logging.
#[derive(Debug, Clone, PartialEq)]
pub struct DragReport {
    /// Clamped point delivered to the object; `None` when no gesture was active.
    pub effective: Option<Point2>,
    pub accepted: bool,
    pub warps: Vec<Point2>,
}

#[derive(Debug)]
pub struct Engine {
    queue: Vec<ObjectId>,
    clip_rect: Option<Rect>,
    clipping: ClippingLevel,
    gesture: Option<GestureState>,
    was_gesture: Option<GestureState>,
    window: Option<ClipWindow>,
    link: MouseLink,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new(None)
    }
}

impl Engine {
    /// Headless engine. Clipping starts at Visual when a client area is given.
    #[must_use]
    pub fn new(clip_rect: Option<Rect>) -> Self {
        Self {
            queue: Vec::new(),
            clip_rect,
            clipping: if clip_rect.is_some() {
                ClippingLevel::Visual
            } else {
                ClippingLevel::Unsafe
            },
            gesture: None,
            was_gesture: None,
            window: None,
            link: MouseLink::headless(),
        }
    }

    /// Engine for an interactive host; warps go to `sink`.
    #[must_use]
    pub fn interactive(clip_rect: Option<Rect>, sink: Option<Box<dyn FnMut(Point2) + Send>>) -> Self {
        let mut e = Self::new(clip_rect);
        e.link.headless = false;
        e.link.sink = sink;
        e
    }

    #[must_use]
    pub fn queue(&self) -> &[ObjectId] {
        &self.queue
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.queue.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.queue.is_empty()
    }

    #[must_use]
    pub fn clip_rect(&self) -> Option<Rect> {
        self.clip_rect
    }

    pub fn set_clip_rect(&mut self, r: Option<Rect>) {
        self.clip_rect = r;
    }

    #[must_use]
    pub fn clipping(&self) -> ClippingLevel {
        self.clipping
    }

    #[must_use]
    pub fn gesture(&self) -> Option<&GestureState> {
        self.gesture.as_ref()
    }

    #[must_use]
    pub fn was_gesture(&self) -> Option<&GestureState> {
        self.was_gesture.as_ref()
    }

    #[must_use]
    pub fn traced(&self) -> bool {
        self.link.traced
    }

    fn caught_id(&self) -> Option<ObjectId> {
        self.gesture.map(|g| g.object_id)
    }

    pub fn add(&mut self, id: ObjectId) {
        self.queue.push(id);
    }

    pub fn insert(&mut self, pos: usize, id: ObjectId) -> Result<(), EngineError> {
        if pos > self.queue.len() {
            return Err(EngineError::IndexOutOfRange { index: pos, len: self.queue.len() });
        }
        self.queue.insert(pos, id);
        if let Some(g) = &mut self.gesture {
            if g.object_index >= pos {
                g.object_index += 1;
            }
        }
        Ok(())
    }

    pub fn remove_at(&mut self, pos: usize) -> Result<ObjectId, EngineError> {
        let len = self.queue.len();
        let id = *self.queue.get(pos).ok_or(EngineError::IndexOutOfRange { index: pos, len })?;
        if let Some(g) = &mut self.gesture {
            if g.object_index == pos {
                return Err(EngineError::CaughtEntry(id));
            }
            if g.object_index > pos {
                g.object_index -= 1;
            }
        }
        Ok(self.queue.remove(pos))
    }

    pub fn clear(&mut self) -> Result<(), EngineError> {
        if let Some(id) = self.caught_id() {
            return Err(EngineError::CaughtEntry(id));
        }
        self.queue.clear();
        Ok(())
    }

    /// Reverses `count` entries starting at `pos`; `reverse(i, 2)` swaps neighbours.
    pub fn reverse(&mut self, pos: usize, count: usize) -> Result<(), EngineError> {
        let end = pos.checked_add(count).filter(|&e| e <= self.queue.len()).ok_or(
            EngineError::IndexOutOfRange { index: pos.saturating_add(count), len: self.queue.len() },
        )?;
        if let Some(g) = &self.gesture {
            if (pos..end).contains(&g.object_index) && count > 1 {
                return Err(EngineError::CaughtEntry(g.object_id));
            }
        }
        self.queue[pos..end].reverse();
        Ok(())
    }

    /// Replaces the whole queue. Used by scene rebuilds between gestures.
    pub fn set_queue(&mut self, ids: Vec<ObjectId>) -> Result<(), EngineError> {
        if let Some(id) = self.caught_id() {
            return Err(EngineError::CaughtEntry(id));
        }
        self.queue = ids;
        Ok(())
    }

    fn window_for(&self, level: ClippingLevel) -> Option<ClipWindow> {
        let r = self.clip_rect?;
        match level {
            ClippingLevel::Visual => Some(ClipWindow {
                left: r.left(),
                top: r.top(),
                right: r.right(),
                bottom: r.bottom(),
            }),
            ClippingLevel::Safe => Some(ClipWindow {
                left: r.left(),
                top: r.top(),
                right: f64::INFINITY,
                bottom: f64::INFINITY,
            }),
            ClippingLevel::Unsafe => None,
        }
    }

    pub fn catch<H: Host + ?Sized>(&mut self, host: &H, p: Point2, button: MouseButton) -> bool {
        if self.gesture.is_some() {
            return false;
        }
        for (index, &id) in self.queue.iter().enumerate() {
            let Some(cover) = host.cover(id) else { continue };
            match cover_hit(&cover, p) {
                CoverHit::Miss | CoverHit::TransparentFallthrough => continue,
                CoverHit::Blocked => return false,
                CoverHit::Frozen { node } => {
                    self.gesture = Some(GestureState {
                        object_index: index,
                        object_id: id,
                        node_id: node,
                        node_shape: cover.nodes()[node].shape(),
                        button,
                        last_point: p,
                        movable: false,
                    });
                    self.window = None;
                    return true;
                }
                CoverHit::Grab { node, shape, .. } => {
                    self.gesture = Some(GestureState {
                        object_index: index,
                        object_id: id,
                        node_id: node,
                        node_shape: shape,
                        button,
                        last_point: p,
                        movable: true,
                    });
                    self.window = self.window_for(self.clipping);
                    return true;
                }
            }
        }
        false
    }

    pub fn drag<H: Host + ?Sized>(&mut self, host: &mut H, p: Point2) -> bool {
        self.drag_report(host, p).accepted
    }

    /// Same as [`Engine::drag`] but also reports the clamped point and any warps.
    pub fn drag_report<H: Host + ?Sized>(&mut self, host: &mut H, p: Point2) -> DragReport {
        let idle = DragReport { effective: None, accepted: false, warps: Vec::new() };
        let Some(g) = self.gesture else { return idle };
        if !self.link.traced || !g.movable {
            return idle;
        }
        let eff = match self.window {
            Some(w) => w.clamp(p),
            None => p,
        };
        let dx = eff.x - g.last_point.x;
        let dy = eff.y - g.last_point.y;
        self.link.pending.clear();
        let accepted = host.move_node(g.object_id, g.node_id, dx, dy, eff, g.button, &mut self.link);
        let warps = std::mem::take(&mut self.link.pending);
        let last = warps.last().copied().unwrap_or(eff);
        if let Some(gs) = &mut self.gesture {
            gs.last_point = last;
        }
        DragReport { effective: Some(eff), accepted, warps }
    }

    /// Ends the gesture and returns `(object_index, node_id, node_shape)`.
    pub fn release(&mut self) -> Option<(usize, usize, NodeShape)> {
        let g = self.gesture.take()?;
        self.was_gesture = Some(g);
        self.window = None;
        Some((g.object_index, g.node_id, g.node_shape))
    }

    /// Info about the upper sensed node at `p`.
    #[must_use]
    pub fn point_info<H: Host + ?Sized>(&self, host: &H, p: Point2) -> PointInfo {
        self.point_info_all(host, p).into_iter().next().unwrap_or(PointInfo::NONE)
    }

    /// Every sensed node at `p`, one per object, in queue order.
    #[must_use]
    pub fn point_info_all<H: Host + ?Sized>(&self, host: &H, p: Point2) -> Vec<PointInfo> {
        let mut out = Vec::new();
        for (index, &id) in self.queue.iter().enumerate() {
            let Some(cover) = host.cover(id) else { continue };
            let found = cover.nodes().iter().find(|n| n.contains(p));
            match found {
                None => continue,
                Some(n) if n.behaviour == Behaviour::Transparent => continue,
                Some(n) => out.push(PointInfo {
                    object_index: Some(index),
                    object_id: id,
                    node_id: n.id,
                    shape: n.shape(),
                    behaviour: n.behaviour,
                    cursor: n.cursor,
                }),
            }
        }
        out
    }

    /// Any level is accepted while idle; mid-gesture only widening is.
    pub fn set_clipping(&mut self, level: ClippingLevel) -> bool {
        match self.gesture {
            None => {
                self.clipping = level;
                true
            }
            Some(g) => {
                if level < self.clipping {
                    return false;
                }
                self.clipping = level;
                if g.movable {
                    self.window = self.window_for(level);
                }
                true
            }
        }
    }

    pub fn set_traced(&mut self, on: bool) {
        self.link.set_traced(on);
    }

    /// Warps the cursor and makes `p` the reference point of the gesture.
    pub fn warp(&mut self, p: Point2) -> Result<(), EngineError> {
        self.link.warp(p)?;
        self.link.pending.clear();
        if let Some(g) = &mut self.gesture {
            g.last_point = p;
        }
        Ok(())
    }

    /// Error raised by a warp attempted inside `move_node`, if any.
    pub fn take_fault(&mut self) -> Option<EngineError> {
        self.link.fault.take()
    }
}
