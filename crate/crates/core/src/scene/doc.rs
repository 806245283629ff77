//! Scene documents: a magic line, a JSON header, then one JSON record per
//! top-level object in z-order, topmost first.
//!
//! Keys keep declaration order and numbers use shortest round-trip
//! formatting, so saving a loaded document reproduces it byte for byte.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::ClippingLevel;
use crate::object::IdGen;

use super::{Scene, SceneObject};

pub const MAGIC: &str = "mover-scene";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("empty document")]
    Empty,
    #[error("not a scene document: first line is {0:?}")]
    BadMagic(String),
    #[error("unsupported format version {0}")]
    UnsupportedVersion(String),
    #[error("malformed header: {0}")]
    Header(#[source] serde_json::Error),
    #[error("record {index} (line {line}): {source}")]
    Record {
        index: usize,
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("header announces {expected} records, found {found}")]
    Count { expected: usize, found: usize },
    #[error("serialization failed: {0}")]
    Write(#[source] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct Header {
    width: f64,
    height: f64,
    clipping: ClippingLevel,
    next_id: u64,
    objects: usize,
}

pub fn save(scene: &Scene) -> Result<String, DocError> {
    let header = Header {
        width: scene.client.w,
        height: scene.client.h,
        clipping: scene.clipping,
        next_id: scene.ids.peek(),
        objects: scene.objects.len(),
    };
    let mut out = format!("{MAGIC} {FORMAT_VERSION}\n");
    out.push_str(&serde_json::to_string(&header).map_err(DocError::Write)?);
    out.push('\n');
    for o in &scene.objects {
        out.push_str(&serde_json::to_string(o).map_err(DocError::Write)?);
        out.push('\n');
    }
    Ok(out)
}

pub fn load(text: &str) -> Result<Scene, DocError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, first) = lines.next().ok_or(DocError::Empty)?;
    let version = match first.trim().split_once(' ') {
        Some((MAGIC, v)) => v.trim(),
        _ => return Err(DocError::BadMagic(first.to_string())),
    };
    if version != FORMAT_VERSION.to_string() {
        return Err(DocError::UnsupportedVersion(version.to_string()));
    }
    let (_, head) = lines.next().ok_or(DocError::Count { expected: 0, found: 0 })?;
    let header: Header = serde_json::from_str(head).map_err(DocError::Header)?;
    let mut objects = Vec::with_capacity(header.objects);
    for (index, (i, line)) in lines.enumerate() {
        let obj: SceneObject =
            serde_json::from_str(line).map_err(|source| DocError::Record { index, line: i + 1, source })?;
        objects.push(obj);
    }
    if objects.len() != header.objects {
        return Err(DocError::Count { expected: header.objects, found: objects.len() });
    }
    let mut scene = Scene::new(header.width, header.height);
    scene.clipping = header.clipping;
    scene.ids = IdGen::starting_at(header.next_id);
    scene.objects = objects;
    scene.renew();
    Ok(scene)
}
