//! Pointer traces: one event per line.
//!
//! ```text
//! # comment
//! DOWN 120 80 L
//! MOVE 130 85
//! UP 130 85 L
//! DCLICK 40 40
//! CMD hide 7
//! CMD color 7 #c04040
//! ```
//!
//! A `#` starts a comment at the beginning of a line or when followed by
//! whitespace, so colors such as `#c04040` survive.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::cover::Resizing;
use crate::engine::{ClippingLevel, MouseButton, ObjectId};
use crate::geometry::Point2;

use super::ZAction;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("trace line {line}: {message}")]
pub struct TraceError {
    pub line: usize,
    pub message: String,
}

/// Menu command, as issued from a context menu or a `CMD` trace line.
#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Hide(ObjectId),
    Show(ObjectId),
    /// Shows the object and every part below it.
    ShowAll(ObjectId),
    Fix(ObjectId),
    Unfix(ObjectId),
    /// Fixes all members of an elastic group.
    LockMembers(ObjectId),
    UnlockMembers(ObjectId),
    Color(ObjectId, String),
    Z(ZAction, ObjectId),
    Switch(ObjectId),
    Resizing(ObjectId, Resizing),
    /// Temporary group of the widgets inside the rectangle of two corners.
    Group(Point2, Point2),
    Ungroup(ObjectId),
    Delete(ObjectId),
    Clipping(ClippingLevel),
}

#[derive(Debug, Clone, PartialEq)]
pub enum TraceEvent {
    Down(Point2, MouseButton),
    Move(Point2),
    Up(Point2, MouseButton),
    DoubleClick(Point2),
    /// Recorded cursor warp. Replay produces its own and skips these.
    Warp(Point2),
    Cmd(Command),
}

fn coord(tok: Option<&str>) -> Result<f64, String> {
    let t = tok.ok_or("missing coordinate")?;
    t.parse::<i64>()
        .map(|v| v as f64)
        .map_err(|_| format!("coordinate {t:?} is not an integer"))
}

fn point<'a>(it: &mut impl Iterator<Item = &'a str>) -> Result<Point2, String> {
    let x = coord(it.next())?;
    let y = coord(it.next())?;
    Ok(Point2::new(x, y))
}

fn button(tok: Option<&str>) -> Result<MouseButton, String> {
    match tok {
        Some("L") => Ok(MouseButton::Left),
        Some("R") => Ok(MouseButton::Right),
        other => Err(format!("expected L or R, found {other:?}")),
    }
}

fn id(tok: Option<&str>) -> Result<ObjectId, String> {
    let t = tok.ok_or("missing object id")?;
    t.parse().map_err(|_| format!("bad object id {t:?}"))
}

fn resizing(tok: Option<&str>) -> Result<Resizing, String> {
    match tok {
        Some("none") => Ok(Resizing::None),
        Some("ns") => Ok(Resizing::NS),
        Some("we") => Ok(Resizing::WE),
        Some("any") => Ok(Resizing::Any),
        other => Err(format!("unknown resizing {other:?}")),
    }
}

fn clipping(tok: Option<&str>) -> Result<ClippingLevel, String> {
    match tok {
        Some("visual") => Ok(ClippingLevel::Visual),
        Some("safe") => Ok(ClippingLevel::Safe),
        Some("unsafe") => Ok(ClippingLevel::Unsafe),
        other => Err(format!("unknown clipping level {other:?}")),
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut it = s.split_whitespace();
        let verb = it.next().ok_or("empty command")?;
        let cmd = match verb {
            "hide" => Command::Hide(id(it.next())?),
            "show" => Command::Show(id(it.next())?),
            "showall" => Command::ShowAll(id(it.next())?),
            "fix" => Command::Fix(id(it.next())?),
            "unfix" => Command::Unfix(id(it.next())?),
            "lockmembers" => Command::LockMembers(id(it.next())?),
            "unlockmembers" => Command::UnlockMembers(id(it.next())?),
            "color" => {
                let i = id(it.next())?;
                Command::Color(i, it.next().ok_or("missing color")?.to_string())
            }
            "top" => Command::Z(ZAction::Top, id(it.next())?),
            "bottom" => Command::Z(ZAction::Bottom, id(it.next())?),
            "up" => Command::Z(ZAction::Up, id(it.next())?),
            "down" => Command::Z(ZAction::Down, id(it.next())?),
            "switch" => Command::Switch(id(it.next())?),
            "resizing" => {
                let i = id(it.next())?;
                Command::Resizing(i, resizing(it.next())?)
            }
            "group" => Command::Group(point(&mut it)?, point(&mut it)?),
            "ungroup" => Command::Ungroup(id(it.next())?),
            "delete" => Command::Delete(id(it.next())?),
            "clipping" => Command::Clipping(clipping(it.next())?),
            other => return Err(format!("unknown command {other:?}")),
        };
        if let Some(extra) = it.next() {
            return Err(format!("unexpected {extra:?} after command"));
        }
        Ok(cmd)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Hide(i) => write!(f, "hide {i}"),
            Command::Show(i) => write!(f, "show {i}"),
            Command::ShowAll(i) => write!(f, "showall {i}"),
            Command::Fix(i) => write!(f, "fix {i}"),
            Command::Unfix(i) => write!(f, "unfix {i}"),
            Command::LockMembers(i) => write!(f, "lockmembers {i}"),
            Command::UnlockMembers(i) => write!(f, "unlockmembers {i}"),
            Command::Color(i, c) => write!(f, "color {i} {c}"),
            Command::Z(a, i) => {
                let verb = match a {
                    ZAction::Top => "top",
                    ZAction::Bottom => "bottom",
                    ZAction::Up => "up",
                    ZAction::Down => "down",
                };
                write!(f, "{verb} {i}")
            }
            Command::Switch(i) => write!(f, "switch {i}"),
            Command::Resizing(i, r) => {
                let r = match r {
                    Resizing::None => "none",
                    Resizing::NS => "ns",
                    Resizing::WE => "we",
                    Resizing::Any => "any",
                };
                write!(f, "resizing {i} {r}")
            }
            Command::Group(a, b) => write!(f, "group {} {} {} {}", a.x, a.y, b.x, b.y),
            Command::Ungroup(i) => write!(f, "ungroup {i}"),
            Command::Delete(i) => write!(f, "delete {i}"),
            Command::Clipping(c) => {
                let c = match c {
                    ClippingLevel::Visual => "visual",
                    ClippingLevel::Safe => "safe",
                    ClippingLevel::Unsafe => "unsafe",
                };
                write!(f, "clipping {c}")
            }
        }
    }
}

pub(crate) fn button_tag(b: MouseButton) -> &'static str {
    match b {
        MouseButton::Left => "L",
        MouseButton::Right => "R",
    }
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::Down(p, b) => write!(f, "DOWN {} {} {}", p.x, p.y, button_tag(*b)),
            TraceEvent::Move(p) => write!(f, "MOVE {} {}", p.x, p.y),
            TraceEvent::Up(p, b) => write!(f, "UP {} {} {}", p.x, p.y, button_tag(*b)),
            TraceEvent::DoubleClick(p) => write!(f, "DCLICK {} {}", p.x, p.y),
            TraceEvent::Warp(p) => write!(f, "WARP {} {}", p.x, p.y),
            TraceEvent::Cmd(c) => write!(f, "CMD {c}"),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    if line.trim_start().starts_with('#') {
        return "";
    }
    let bytes = line.as_bytes();
    for (i, b) in bytes.iter().enumerate() {
        if *b == b'#' && bytes.get(i + 1).is_none_or(u8::is_ascii_whitespace) {
            return &line[..i];
        }
    }
    line
}

fn parse_line(line: &str) -> Result<Option<TraceEvent>, String> {
    let body = strip_comment(line).trim();
    if body.is_empty() {
        return Ok(None);
    }
    if let Some(rest) = body.strip_prefix("CMD ") {
        return rest.parse().map(|c| Some(TraceEvent::Cmd(c)));
    }
    let mut it = body.split_whitespace();
    let kind = it.next().unwrap_or("");
    let ev = match kind {
        "DOWN" => {
            let p = point(&mut it)?;
            TraceEvent::Down(p, button(it.next())?)
        }
        "MOVE" => TraceEvent::Move(point(&mut it)?),
        "UP" => {
            let p = point(&mut it)?;
            TraceEvent::Up(p, button(it.next())?)
        }
        "DCLICK" => TraceEvent::DoubleClick(point(&mut it)?),
        "WARP" => TraceEvent::Warp(point(&mut it)?),
        other => return Err(format!("unknown event {other:?}")),
    };
    if let Some(extra) = it.next() {
        return Err(format!("unexpected {extra:?} after event"));
    }
    Ok(Some(ev))
}

/// Parses a whole trace. Line numbers in errors start at 1.
pub fn parse_trace(text: &str) -> Result<Vec<TraceEvent>, TraceError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        match parse_line(line) {
            Ok(Some(ev)) => out.push(ev),
            Ok(None) => {}
            Err(message) => return Err(TraceError { line: i + 1, message }),
        }
    }
    Ok(out)
}
