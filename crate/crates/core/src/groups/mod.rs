//! Complex objects: parts that move on their own and keep each other in step.

use crate::geometry::Rect;

pub mod dominant;
pub mod elastic;
pub mod linked;
pub mod plot;
pub mod satellite;
pub mod widget;

pub use dominant::{DominantGroup, Subordinate};
pub use elastic::{ElasticElement, ElasticGroup, GroupTitle, GroupVisuals};
pub use linked::{LinkedMember, LinkedRects};
pub use plot::{PlotLite, Scale, ScaleDir};
pub use satellite::{CommentedRect, Satellite};
pub use widget::{CommentedElement, WidgetProxy};

/// Gap left between a relocated part and the corner of its parent.
pub const RELOCATION_GAP: f64 = 4.0;

/// Shift that takes `part` out of `parent` to just beyond its upper-right
/// corner, or `None` when `part` is not fully inside `parent`.
#[must_use]
pub fn relocation_shift(part: Rect, parent: Rect) -> Option<(f64, f64)> {
    if !parent.contains_rect(&part) {
        return None;
    }
    let dx = parent.right() + RELOCATION_GAP - part.left();
    let dy = parent.top() - RELOCATION_GAP - part.bottom();
    Some((dx, dy))
}
