//! A group led by one widget: subordinates follow the dominant one and may
//! not be left lying entirely on top of it.

use serde::{Deserialize, Serialize};

use crate::cover::{Cover, NodeShape};
use crate::engine::{MouseButton, MouseLink, ObjectId};
use crate::geometry::{location_by_coefs, rect_position_coefs, AxisCoef, Point2, Rect};
use crate::object::{Assembly, GestureStart, IdGen, Meta, Movable, Released};
use crate::scene::svg::Canvas;

use super::widget::handles;
use super::{relocation_shift, WidgetProxy};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Subordinate {
    pub proxy: WidgetProxy,
    /// Top-left corner against the dominant's bounds.
    pub xc: AxisCoef,
    pub yc: AxisCoef,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominantGroup {
    pub meta: Meta,
    pub dominant: WidgetProxy,
    pub subordinates: Vec<Subordinate>,
    pub show_prompts: bool,
}

fn corner_coefs(of: Rect, against: Rect) -> (AxisCoef, AxisCoef) {
    rect_position_coefs(&against, Point2::new(of.x, of.y))
        .unwrap_or((AxisCoef::Inside(0.0), AxisCoef::Inside(0.0)))
}

impl DominantGroup {
    pub fn new(ids: &mut IdGen, mut dominant: WidgetProxy, subordinates: Vec<WidgetProxy>) -> Self {
        let meta = ids.meta();
        dominant.meta.parent_id = meta.id;
        let d = dominant.bounds;
        let subordinates = subordinates
            .into_iter()
            .map(|mut proxy| {
                proxy.meta.parent_id = meta.id;
                let (xc, yc) = corner_coefs(proxy.bounds, d);
                Subordinate { proxy, xc, yc }
            })
            .collect();
        Self { meta, dominant, subordinates, show_prompts: false }
    }

    fn reposition(&mut self) {
        let d = self.dominant.bounds;
        for s in &mut self.subordinates {
            if let Ok(p) = location_by_coefs(&d, s.xc, s.yc) {
                s.proxy.bounds.x = p.x;
                s.proxy.bounds.y = p.y;
            }
        }
    }

    /// Pushes out every subordinate lying fully on the dominant. Returns how
    /// many were moved.
    pub fn check_subordinates(&mut self) -> usize {
        let d = self.dominant.bounds;
        let mut moved = 0;
        for s in &mut self.subordinates {
            if let Some((dx, dy)) = relocation_shift(s.proxy.bounds, d) {
                Movable::translate(&mut s.proxy, dx, dy);
                (s.xc, s.yc) = corner_coefs(s.proxy.bounds, d);
                moved += 1;
            }
        }
        moved
    }

    /// Rebuilds the group around one of its subordinates. `None` when `id`
    /// is already dominant or not in the group.
    #[must_use]
    pub fn switch_dominant(&self, id: ObjectId) -> Option<DominantGroup> {
        let pos = self.subordinates.iter().position(|s| s.proxy.meta.id == id)?;
        let mut subs: Vec<WidgetProxy> = self.subordinates.iter().map(|s| s.proxy.clone()).collect();
        let new_dom = subs.remove(pos);
        subs.insert(pos, self.dominant.clone());
        let d = new_dom.bounds;
        Some(DominantGroup {
            meta: self.meta.clone(),
            dominant: new_dom,
            subordinates: subs
                .into_iter()
                .map(|proxy| {
                    let (xc, yc) = corner_coefs(proxy.bounds, d);
                    Subordinate { proxy, xc, yc }
                })
                .collect(),
            show_prompts: self.show_prompts,
        })
    }
}

impl Assembly for DominantGroup {
    fn meta(&self) -> &Meta {
        &self.meta
    }

    fn meta_mut(&mut self) -> &mut Meta {
        &mut self.meta
    }

    fn children(&self) -> Vec<&dyn Assembly> {
        let mut v: Vec<&dyn Assembly> = self.subordinates.iter().map(|s| &s.proxy as &dyn Assembly).collect();
        v.push(&self.dominant);
        v
    }

    fn children_mut(&mut self) -> Vec<&mut dyn Assembly> {
        let mut v: Vec<&mut dyn Assembly> = self.subordinates.iter_mut().map(|s| &mut s.proxy as &mut dyn Assembly).collect();
        v.push(&mut self.dominant);
        v
    }

    fn own_cover(&self) -> Option<Cover> {
        None
    }

    fn start(&mut self, _id: ObjectId, _node: usize, _pt: Point2, _button: MouseButton) -> GestureStart {
        GestureStart::default()
    }

    fn move_part(&mut self, id: ObjectId, node: usize, dx: f64, dy: f64, pt: Point2, button: MouseButton, link: &mut MouseLink) -> bool {
        if id == self.dominant.meta.id {
            let moved = self.dominant.move_node(node, dx, dy, pt, button, link);
            if moved {
                if (handles::FRAME_FIRST..handles::INTERIOR).contains(&node) {
                    for s in &mut self.subordinates {
                        Movable::translate(&mut s.proxy, dx, dy);
                    }
                } else {
                    self.reposition();
                }
            }
            return moved;
        }
        let d = self.dominant.bounds;
        match self.subordinates.iter_mut().find(|s| s.proxy.meta.id == id) {
            Some(s) => {
                let moved = s.proxy.move_node(node, dx, dy, pt, button, link);
                if moved {
                    (s.xc, s.yc) = corner_coefs(s.proxy.bounds, d);
                }
                moved
            }
            None => false,
        }
    }

    fn finish(&mut self, id: ObjectId, _node: usize, _shape: NodeShape) -> Released {
        if id == self.dominant.meta.id || self.subordinates.iter().any(|s| s.proxy.meta.id == id) {
            self.check_subordinates();
        }
        Released::Keep
    }

    fn pops(&self, _id: ObjectId, _node: usize, _shape: NodeShape) -> bool {
        false
    }

    fn translate(&mut self, dx: f64, dy: f64) {
        Movable::translate(&mut self.dominant, dx, dy);
        for s in &mut self.subordinates {
            Movable::translate(&mut s.proxy, dx, dy);
        }
    }

    fn bounds(&self) -> Rect {
        let mut r = self.dominant.bounds;
        for s in self.subordinates.iter().filter(|s| s.proxy.meta.rendered()) {
            r = r.union(&s.proxy.bounds);
        }
        r
    }

    fn draw(&self, canvas: &mut Canvas) {
        Assembly::draw(&self.dominant, canvas);
        for s in self.subordinates.iter().rev() {
            Assembly::draw(&s.proxy, canvas);
        }
    }

    fn basic_points(&self) -> Vec<Point2> {
        Movable::basic_points(&self.dominant)
    }

    fn is_control(&self) -> bool {
        true
    }
}
