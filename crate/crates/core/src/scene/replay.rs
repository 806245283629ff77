//! Feeds trace events through the engine the way an interactive host does,
//! and records what happened.

use std::fmt;

use crate::engine::{MouseButton, ObjectId};
use crate::geometry::Point2;
use crate::object::{Movable, Released};
use crate::shapes::FitTolerance;

use super::trace::button_tag;
use super::{classify_click, ClickOutcome, Command, Scene, SceneObject, TraceEvent, ZAction};

#[derive(Debug, Clone, PartialEq)]
pub enum LogEntry {
    /// `caught` holds the object and node; `movable` is false for a frozen catch.
    Down { at: Point2, button: MouseButton, caught: Option<(ObjectId, usize, bool)> },
    /// `effective` is the clamped point given to the object.
    Move { at: Point2, effective: Option<Point2>, accepted: bool },
    Warp(Point2),
    Up { at: Point2, button: MouseButton, released: Option<(ObjectId, usize)> },
    Removed(ObjectId),
    Click { outcome: ClickOutcome, popped: bool },
    DoubleClick { at: Point2, id: Option<ObjectId> },
    /// A released plug closed a hole on a board; both are gone.
    Filled { plug: ObjectId, board: ObjectId },
    Command { cmd: Command, error: Option<String> },
    /// Fault raised by the engine, such as a warp with no sink.
    Fault(String),
}

fn opt_id(id: Option<ObjectId>) -> String {
    id.map_or_else(|| "EMPTY".to_string(), |i| i.to_string())
}

impl fmt::Display for LogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogEntry::Down { at, button, caught } => {
                write!(f, "DOWN {} {} {}", at.x, at.y, button_tag(*button))?;
                match caught {
                    Some((id, node, true)) => write!(f, " CATCH {id} {node}"),
                    Some((id, node, false)) => write!(f, " FROZEN {id} {node}"),
                    None => write!(f, " MISS"),
                }
            }
            LogEntry::Move { at, effective, accepted } => match effective {
                Some(e) => write!(f, "MOVE {} {} EFF {} {} {}", at.x, at.y, e.x, e.y, if *accepted { "OK" } else { "NO" }),
                None => write!(f, "MOVE {} {} IDLE", at.x, at.y),
            },
            LogEntry::Warp(p) => write!(f, "WARP {} {}", p.x, p.y),
            LogEntry::Up { at, button, released } => {
                write!(f, "UP {} {} {}", at.x, at.y, button_tag(*button))?;
                match released {
                    Some((id, node)) => write!(f, " RELEASE {id} {node}"),
                    None => Ok(()),
                }
            }
            LogEntry::Removed(id) => write!(f, "REMOVE {id}"),
            LogEntry::Filled { plug, board } => write!(f, "FILL {plug} {board}"),
            LogEntry::Click { outcome, popped } => match outcome {
                ClickOutcome::Drag => write!(f, "DRAG"),
                ClickOutcome::LeftClick(id) => write!(f, "CLICK {}{}", opt_id(*id), if *popped { " POP" } else { "" }),
                ClickOutcome::MenuRequest(id) => write!(f, "MENU {}", opt_id(*id)),
            },
            LogEntry::DoubleClick { at, id } => write!(f, "DCLICK {} {} {}", at.x, at.y, opt_id(*id)),
            LogEntry::Command { cmd, error } => match error {
                None => write!(f, "CMD {cmd} OK"),
                Some(e) => write!(f, "CMD {cmd} FAIL {e}"),
            },
            LogEntry::Fault(e) => write!(f, "FAULT {e}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct GestureLog {
    pub entries: Vec<LogEntry>,
}

impl GestureLog {
    /// Cursor warps, in order.
    #[must_use]
    pub fn warps(&self) -> Vec<Point2> {
        self.entries
            .iter()
            .filter_map(|e| match e {
                LogEntry::Warp(p) => Some(*p),
                _ => None,
            })
            .collect()
    }

    /// Effective points of every tick that reached an object.
    #[must_use]
    pub fn effective_points(&self) -> Vec<Point2> {
        self.entries
            .iter()
            .filter_map(|e| match e {
                LogEntry::Move { effective, .. } => *effective,
                _ => None,
            })
            .collect()
    }
}

impl fmt::Display for GestureLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Where the current button went down.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct PressState {
    pub(crate) down: Option<(Point2, MouseButton)>,
}

impl Scene {
    /// Runs a whole trace.
    pub fn replay(&mut self, events: &[TraceEvent]) -> GestureLog {
        let mut log = GestureLog::default();
        let mut press = PressState::default();
        for ev in events {
            self.handle_event(ev, &mut press, &mut log);
        }
        log
    }

    fn handle_event(&mut self, ev: &TraceEvent, press: &mut PressState, log: &mut GestureLog) {
        match ev {
            TraceEvent::Down(p, b) => self.on_down(*p, *b, press, log),
            TraceEvent::Move(p) => self.on_move(*p, log),
            TraceEvent::Up(p, b) => self.on_up(*p, *b, press, log),
            TraceEvent::DoubleClick(p) => {
                let info = self.engine.point_info(&self.objects, *p);
                let id = info.object_index.map(|_| info.object_id);
                log.entries.push(LogEntry::DoubleClick { at: *p, id });
            }
            TraceEvent::Warp(_) => {}
            TraceEvent::Cmd(c) => {
                let error = self.apply(c).err().map(|e| e.to_string());
                log.entries.push(LogEntry::Command { cmd: c.clone(), error });
            }
        }
    }

    fn on_down(&mut self, p: Point2, b: MouseButton, press: &mut PressState, log: &mut GestureLog) {
        if self.engine.gesture().is_some() {
            return;
        }
        press.down = Some((p, b));
        let mut caught = None;
        if self.engine.catch(&self.objects, p, b) {
            let g = *self.engine.gesture().expect("caught");
            caught = Some((g.object_id, g.node_id, g.movable));
            if g.movable {
                if let Some(i) = self.root_index(g.object_id) {
                    let start = self.objects[i].as_dyn_mut().start(g.object_id, g.node_id, p, b);
                    if let Some(level) = start.clipping {
                        self.engine.set_clipping(level);
                    }
                }
            }
        }
        log.entries.push(LogEntry::Down { at: p, button: b, caught });
    }

    fn on_move(&mut self, p: Point2, log: &mut GestureLog) {
        let report = self.engine.drag_report(&mut self.objects, p);
        log.entries.push(LogEntry::Move { at: p, effective: report.effective, accepted: report.accepted });
        log.entries.extend(report.warps.into_iter().map(LogEntry::Warp));
        if let Some(fault) = self.engine.take_fault() {
            log.entries.push(LogEntry::Fault(fault.to_string()));
        }
    }

    /// A plug dropped outside the client area is discarded; one that fits a
    /// hole closes it. Returns whether the object list changed.
    fn settle_plug(&mut self, id: ObjectId, log: &mut GestureLog) -> bool {
        let Some(i) = self.objects.iter().position(|o| matches!(o, SceneObject::Plug(p) if p.meta.id == id)) else {
            return false;
        };
        let SceneObject::Plug(plug) = &self.objects[i] else {
            return false;
        };
        if !Movable::bounds(plug).intersects(&self.client) {
            self.objects.remove(i);
            log.entries.push(LogEntry::Removed(id));
            return true;
        }
        let plug = plug.clone();
        let board = self.objects.iter_mut().find_map(|o| match o {
            SceneObject::HoleBoard(b) if b.meta.rendered() => b.fill(&plug, FitTolerance::default()).then_some(b.meta.id),
            _ => None,
        });
        let Some(board) = board else {
            return false;
        };
        self.objects.remove(i);
        log.entries.push(LogEntry::Filled { plug: id, board });
        true
    }

    fn on_up(&mut self, p: Point2, b: MouseButton, press: &mut PressState, log: &mut GestureLog) {
        let down = press.down.take();
        let mut released = None;
        let mut popped = false;
        let mut renew = false;
        if let Some((_, node, shape)) = self.engine.release() {
            let g = *self.engine.was_gesture().expect("released");
            let id = g.object_id;
            released = Some(id);
            log.entries.push(LogEntry::Up { at: p, button: b, released: Some((id, node)) });
            self.engine.set_clipping(self.clipping);
            if let Some(i) = self.root_index(id) {
                let outcome = if g.movable {
                    self.objects[i].as_dyn_mut().finish(id, node, shape)
                } else {
                    Released::Keep
                };
                if outcome == Released::Remove && self.objects[i].as_dyn().meta().id == id {
                    self.objects.remove(i);
                    log.entries.push(LogEntry::Removed(id));
                    renew = true;
                } else if b == MouseButton::Left
                    && down.is_some_and(|(d, _)| crate::geometry::distance(d, p) <= crate::engine::CLICK_THRESHOLD)
                    && self.objects[i].as_dyn().pops(id, node, shape)
                {
                    popped = self.z_order(id, ZAction::Top);
                }
                renew |= g.movable && self.settle_plug(id, log);
            }
        } else {
            log.entries.push(LogEntry::Up { at: p, button: b, released: None });
        }
        if renew {
            self.renew();
        }
        if let Some((d, _)) = down {
            let outcome = classify_click(d, p, b, released.filter(|id| self.find(*id).is_some()));
            log.entries.push(LogEntry::Click { outcome, popped });
        }
    }
}
