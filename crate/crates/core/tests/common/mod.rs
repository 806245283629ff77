//! Scene builders and a scripted pointer shared by the integration tests.
//!
//! Every golden case is a scene built in code plus a script that drives the
//! pointer over the scene's cover nodes. The script replays each gesture on a
//! working copy as it goes, so later gestures aim at where objects actually are.

#![allow(dead_code)]

use std::f64::consts::PI;
use std::path::PathBuf;

use mover_core::constraints::{BallBoard, Labyrinth, PolyWithBall, SliderBoard, SliderDir, Wall};
use mover_core::cover::{CoverNode, NodeGeometry};
use mover_core::engine::{MouseButton, ObjectId};
use mover_core::geometry::{point_at, Point2, Rect};
use mover_core::groups::{
    CommentedElement, CommentedRect, DominantGroup, ElasticElement, ElasticGroup, GroupTitle, LinkedMember,
    LinkedRects, PlotLite, ScaleDir, WidgetProxy,
};
use mover_core::scene::{Command, Scene, TraceEvent};
use mover_core::shapes::{
    ChatoyantPoly, ConvexPoly, FixedRatioRect, Hole, HoleBoard, HoledPoly, LabelBox, LineShape, NnodeCircle,
    NnodeRing, NnodeStrip, PartitionedCircle, PartitionedRect, Plug, PlugForm, PolyZoom, RectRange, RectShape,
    RegularPoly, RotRect, Sector, SectorFlags, SectoredCircle, SegmentedLine, TextBasis,
};

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 600.0;

#[must_use]
pub fn p(x: f64, y: f64) -> Point2 {
    Point2::new(x, y)
}

/// Traces carry integer coordinates only.
#[must_use]
pub fn ip(q: Point2) -> Point2 {
    Point2::new(q.x.round(), q.y.round())
}

/// A point inside the node, or `None` for inert nodes.
#[must_use]
pub fn rep_point(node: &CoverNode) -> Option<Point2> {
    match &node.geometry {
        NodeGeometry::Circle { radius, .. } if *radius < 0.0 => None,
        NodeGeometry::Circle { center, .. } => Some(*center),
        NodeGeometry::Strip { p0, p1, .. } => Some(p0.midpoint(*p1)),
        NodeGeometry::Polygon { vertices } => {
            let n = vertices.len() as f64;
            let (sx, sy) = vertices.iter().fold((0.0, 0.0), |(x, y), v| (x + v.x, y + v.y));
            Some(p(sx / n, sy / n))
        }
    }
}

#[must_use]
pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

const DELTAS: [(f64, f64); 4] = [(14.0, 9.0), (-11.0, 7.0), (9.0, -13.0), (-8.0, -6.0)];

/// Working scene plus the events fed to it so far.
pub struct Script {
    pub scene: Scene,
    pub events: Vec<TraceEvent>,
}

impl Script {
    #[must_use]
    pub fn new(scene: Scene) -> Self {
        Self { scene, events: Vec::new() }
    }

    pub fn run(&mut self, evs: Vec<TraceEvent>) {
        self.scene.replay(&evs);
        self.events.extend(evs);
    }

    /// Drag from `from` to `to` in `steps` equal moves.
    pub fn drag(&mut self, from: Point2, to: Point2, button: MouseButton, steps: usize) {
        let from = ip(from);
        let to = ip(to);
        let mut evs = vec![TraceEvent::Down(from, button)];
        for k in 1..=steps {
            let t = k as f64 / steps as f64;
            evs.push(TraceEvent::Move(ip(p(from.x + (to.x - from.x) * t, from.y + (to.y - from.y) * t))));
        }
        evs.push(TraceEvent::Up(to, button));
        self.run(evs);
    }

    pub fn click(&mut self, at: Point2, button: MouseButton) {
        let at = ip(at);
        self.run(vec![TraceEvent::Down(at, button), TraceEvent::Up(at, button)]);
    }

    pub fn dclick(&mut self, at: Point2) {
        self.run(vec![TraceEvent::DoubleClick(ip(at))]);
    }

    pub fn cmd(&mut self, text: &str) {
        let c: Command = text.parse().expect("script command parses");
        self.run(vec![TraceEvent::Cmd(c)]);
    }

    #[must_use]
    pub fn node_point(&self, id: ObjectId, node: usize) -> Option<Point2> {
        let cover = self.scene.find(id)?.own_cover()?;
        rep_point(cover.node(node)?)
    }

    #[must_use]
    pub fn bounds(&self, id: ObjectId) -> Rect {
        self.scene.find(id).map(|a| a.bounds()).unwrap_or_default()
    }

    /// Drags a handful of nodes of `id`, twists it with the right button and
    /// clicks its last node.
    pub fn exercise(&mut self, id: ObjectId) {
        let Some(n) = self.scene.find(id).and_then(|a| a.own_cover()).map(|c| c.len()) else {
            return;
        };
        let picks: Vec<usize> = if n <= 12 { (0..n).collect() } else { vec![0, n / 4, n / 2, n - 2, n - 1] };
        for (k, node) in picks.into_iter().enumerate() {
            let Some(at) = self.node_point(id, node) else {
                continue;
            };
            let (dx, dy) = DELTAS[k % DELTAS.len()];
            self.drag(at, at.offset(dx, dy), MouseButton::Left, 3);
        }
        let last = n - 1;
        if let Some(at) = self.node_point(id, last) {
            let c = self.bounds(id).center();
            let r = ((at.x - c.x).powi(2) + (at.y - c.y).powi(2)).sqrt().max(30.0);
            let a0 = mover_core::geometry::line_angle(c, at);
            let mut evs = vec![TraceEvent::Down(ip(at), MouseButton::Right)];
            for k in 1..=4 {
                evs.push(TraceEvent::Move(ip(point_at(c, a0 + PI / 12.0 * f64::from(k), r))));
            }
            let end = ip(point_at(c, a0 + PI / 3.0, r));
            evs.push(TraceEvent::Up(end, MouseButton::Right));
            self.run(evs);
        }
        if let Some(at) = self.node_point(id, last) {
            self.click(at, MouseButton::Left);
        }
    }

    /// Exercises every queued object, in the queue order at call time.
    pub fn exercise_all(&mut self) {
        let ids: Vec<ObjectId> = self.scene.queue().to_vec();
        for id in ids {
            self.exercise(id);
        }
    }

    #[must_use]
    pub fn trace_text(&self) -> String {
        let mut s = String::new();
        for e in &self.events {
            s.push_str(&e.to_string());
            s.push('\n');
        }
        s
    }
}

pub struct GoldenCase {
    pub name: &'static str,
    pub build: fn() -> Scene,
    pub script: fn(&mut Script),
}

#[must_use]
pub fn golden_cases() -> Vec<GoldenCase> {
    vec![
        GoldenCase { name: "rects", build: rects, script: rects_script },
        GoldenCase { name: "lines", build: lines, script: plain_script },
        GoldenCase { name: "polygons", build: polygons, script: plain_script },
        GoldenCase { name: "circles", build: circles, script: plain_script },
        GoldenCase { name: "partitions", build: partitions, script: plain_script },
        GoldenCase { name: "holes", build: holes, script: holes_script },
        GoldenCase { name: "comments", build: comments, script: comments_script },
        GoldenCase { name: "groups", build: groups, script: groups_script },
        GoldenCase { name: "plot", build: plot, script: plain_script },
        GoldenCase { name: "sliders", build: sliders, script: sliders_script },
        GoldenCase { name: "balls", build: balls, script: plain_script },
        GoldenCase { name: "labyrinth", build: labyrinth, script: labyrinth_script },
    ]
}

fn plain_script(s: &mut Script) {
    s.exercise_all();
    if let Some(&id) = s.scene.queue().last() {
        let at = s.bounds(id).center();
        s.dclick(at);
    }
}

pub fn rects() -> Scene {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let a = RectShape::new(&mut s.ids, Rect::new(60., 60., 160., 100.), Some(RectRange::new(40., 300., 30., 200.)));
    s.add_bottom(a);
    let f = FixedRatioRect::new(&mut s.ids, Rect::new(300., 60., 120., 80.), 30., 20.);
    s.add_bottom(f);
    let d = RectShape::disappearing(&mut s.ids, Rect::new(500., 60., 100., 60.), RectRange::new(0., 200., 0., 200.));
    s.add_bottom(d);
    let b = RectShape::new(&mut s.ids, Rect::new(60., 300., 120., 80.), None);
    s.add_bottom(b);
    s
}

fn rects_script(s: &mut Script) {
    s.exercise_all();
    // Squeeze the vanishing rectangle by its right border.
    let r = s.bounds(3);
    let at = p(r.right(), r.center().y);
    s.drag(at, at.offset(-(r.w - 4.0), 0.0), MouseButton::Left, 4);
    // Rectangles take their resizing from their range; the command is refused.
    s.cmd("resizing 1 ns");
    s.cmd("color 2 #c04040");
    s.cmd("fix 4");
    s.exercise(4);
    s.cmd("unfix 4");
    s.cmd("top 4");
    s.cmd("bottom 1");
    s.cmd("up 1");
    s.cmd("down 4");
}

pub fn lines() -> Scene {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let l = LineShape::new(&mut s.ids, p(80., 80.), p(260., 140.));
    s.add_bottom(l);
    let pts = vec![p(80., 250.), p(160., 220.), p(240., 280.), p(320., 230.)];
    let sl = SegmentedLine::new(&mut s.ids, pts, p(200., 250.)).unwrap();
    s.add_bottom(sl);
    let lb = LabelBox::new(&mut s.ids, "label", p(450., 100.), TextBasis::NW, 90., 20., 0.3).unwrap();
    s.add_bottom(lb);
    let rr = RotRect::new(&mut s.ids, p(550., 300.), 140., 60., 0.5);
    s.add_bottom(rr);
    s
}

pub fn polygons() -> Scene {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let a = RegularPoly::new(&mut s.ids, p(150., 150.), 80., 6, 0.0, PolyZoom::ZoomByBorder).unwrap();
    s.add_bottom(a);
    let b = RegularPoly::new(&mut s.ids, p(400., 150.), 60., 5, 0.0, PolyZoom::ZoomByVertices).unwrap();
    s.add_bottom(b);
    let c = ConvexPoly::new(&mut s.ids, vec![p(80., 350.), p(220., 330.), p(260., 450.), p(120., 500.)], 10.).unwrap();
    s.add_bottom(c);
    let verts = vec![p(440., 360.), p(580., 380.), p(560., 480.), p(450., 470.)];
    let d = ChatoyantPoly::new(&mut s.ids, p(505., 420.), verts).unwrap();
    s.add_bottom(d);
    let e = RegularPoly::new(&mut s.ids, p(660., 150.), 50., 4, 0.2, PolyZoom::NonResizable).unwrap();
    s.add_bottom(e);
    s
}

pub fn circles() -> Scene {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let c = NnodeCircle::new(&mut s.ids, p(120., 120.), 80.).unwrap();
    s.add_bottom(c);
    let r = NnodeRing::new(&mut s.ids, p(330., 130.), 90., 45.).unwrap();
    s.add_bottom(r);
    let st = NnodeStrip::new(&mut s.ids, p(520., 100.), p(680., 140.), 25.).unwrap();
    s.add_bottom(st);
    let flags = SectorFlags { arc_resizable: true, end_side_movable: true, start_side_movable: true };
    let sec = Sector::new(&mut s.ids, p(150., 400.), 100., 0.2, 1.6, flags).unwrap();
    s.add_bottom(sec);
    let sc = SectoredCircle::new(&mut s.ids, p(450., 420.), 90., 0.0, vec![1., 2., 3.]).unwrap();
    s.add_bottom(sc);
    s
}

pub fn partitions() -> Scene {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let r = PartitionedRect::new(&mut s.ids, 60., 80., 100., vec![60., 40., 80.]).unwrap();
    s.add_bottom(r);
    let c = PartitionedCircle::new(&mut s.ids, p(500., 300.), 120., 0.3, vec![1., 1., 2., 3.]).unwrap();
    s.add_bottom(c);
    s
}

pub fn holes() -> Scene {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let mut board = HoleBoard::new(&mut s.ids, Rect::new(50., 50., 400., 300.), 10.).unwrap();
    board.add_hole(Hole { form: PlugForm::Circle, center: p(150., 150.), radius: 30., angle: 0.0 }).unwrap();
    board.add_hole(Hole { form: PlugForm::Polygon(4), center: p(300., 150.), radius: 35., angle: 0.0 }).unwrap();
    s.add_bottom(board);
    let hp = HoledPoly::new(&mut s.ids, p(250., 480.), 80., 6, 0.0, 30., 10.).unwrap();
    s.add_top(hp);
    let round = Plug::new(&mut s.ids, PlugForm::Circle, p(600., 150.), 30., 0.0).unwrap();
    s.add_top(round);
    let square = Plug::new(&mut s.ids, PlugForm::Polygon(4), p(600., 350.), 35., 0.4).unwrap();
    s.add_top(square);
    s
}

fn holes_script(s: &mut Script) {
    // The round plug goes straight into the round hole, the square one
    // needs turning first.
    s.drag(p(600., 150.), p(150., 150.), MouseButton::Left, 6);
    s.drag(p(600., 350.), p(300., 150.), MouseButton::Left, 6);
    s.exercise_all();
}

pub fn comments() -> Scene {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let rect = RectShape::new(&mut s.ids, Rect::new(80., 80., 200., 120.), Some(RectRange::new(40., 400., 40., 300.)));
    let mut cr = CommentedRect::new(rect);
    let note = LabelBox::new(&mut s.ids, "note", p(300., 70.), TextBasis::NW, 60., 18., 0.0).unwrap();
    cr.add_comment(note).unwrap();
    s.add_bottom(cr);
    let w = WidgetProxy::new(&mut s.ids, "OK", Rect::new(450., 100., 100., 40.), (40., 20.), (300., 200.)).unwrap();
    let hint = LabelBox::new(&mut s.ids, "hint", p(570., 90.), TextBasis::NW, 50., 18., 0.0).unwrap();
    s.add_bottom(CommentedElement::new(w, hint).unwrap());
    let lone = WidgetProxy::new(&mut s.ids, "Cancel", Rect::new(450., 350., 120., 50.), (0., 0.), (0., 0.)).unwrap();
    s.add_bottom(lone);
    s
}

fn comments_script(s: &mut Script) {
    s.exercise_all();
    // Drop the hint fully on its button: it is pushed back out.
    let b = s.bounds(3);
    let hint = s.bounds(4);
    let target = p(b.x + 10.0 + hint.w / 2.0, b.y + 10.0 + hint.h / 2.0);
    s.drag(hint.center(), target, MouseButton::Left, 3);
    s.cmd("resizing 3 we");
    s.exercise(3);
    s.cmd("resizing 3 any");
    s.cmd("resizing 3 none");
    s.cmd("delete 5");
}

pub fn groups() -> Scene {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let ids = &mut s.ids;
    let dom = WidgetProxy::new(ids, "main", Rect::new(80., 80., 120., 60.), (40., 30.), (300., 200.)).unwrap();
    let s1 = WidgetProxy::new(ids, "a", Rect::new(220., 80., 60., 30.), (0., 0.), (0., 0.)).unwrap();
    let s2 = WidgetProxy::new(ids, "b", Rect::new(80., 160., 60., 30.), (0., 0.), (0., 0.)).unwrap();
    let dg = DominantGroup::new(ids, dom, vec![s1, s2]);
    let linked = LinkedRects::new(
        ids,
        vec![
            LinkedMember { tag: "a".into(), rect: Rect::new(400., 80., 80., 50.) },
            LinkedMember { tag: "b".into(), rect: Rect::new(500., 80., 60., 80.) },
        ],
    )
    .unwrap();
    let e1 = WidgetProxy::new(ids, "x", Rect::new(100., 350., 80., 30.), (40., 20.), (200., 100.)).unwrap();
    let e2 = WidgetProxy::new(ids, "y", Rect::new(220., 350., 80., 30.), (0., 0.), (0., 0.)).unwrap();
    let e3w = WidgetProxy::new(ids, "z", Rect::new(100., 420., 80., 30.), (0., 0.), (0., 0.)).unwrap();
    let e3c = LabelBox::new(ids, "z?", p(190., 410.), TextBasis::NW, 30., 16., 0.0).unwrap();
    let e3 = CommentedElement::new(e3w, e3c).unwrap();
    let title = GroupTitle { text: "Group".into(), width: 50., height: 14., alignment_coef: 0.0, movable: true };
    let eg = ElasticGroup::new(
        ids,
        vec![ElasticElement::Proxy(e1), ElasticElement::Proxy(e2), ElasticElement::Commented(e3)],
        [10., 8., 10., 10.],
        Some(title),
    );
    let f1 = WidgetProxy::new(ids, "p", Rect::new(500., 400., 60., 30.), (0., 0.), (0., 0.)).unwrap();
    let f2 = WidgetProxy::new(ids, "q", Rect::new(600., 400., 60., 30.), (0., 0.), (0., 0.)).unwrap();
    s.add_bottom(dg);
    s.add_bottom(linked);
    s.add_bottom(eg);
    s.add_bottom(f1);
    s.add_bottom(f2);
    s
}

fn groups_script(s: &mut Script) {
    s.exercise_all();
    // Dominant widget 1, subordinates 2 and 3; elastic group 10 with
    // members 6, 7 and the commented element 8 (comment 9).
    s.cmd("switch 2");
    s.exercise(2);
    s.cmd("lockmembers 10");
    s.exercise(6);
    s.cmd("unlockmembers 10");
    s.cmd("resizing 6 we");
    s.exercise(6);
    s.cmd("hide 7");
    s.cmd("hide 10");
    s.cmd("show 10");
    s.exercise(10);
    s.cmd("showall 10");
    let gid = s.scene.ids.peek();
    s.cmd("group 490 390 700 450");
    s.exercise(gid);
    s.cmd(&format!("ungroup {gid}"));
}

pub fn plot() -> Scene {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let rect = RectShape::new(&mut s.ids, Rect::new(150., 100., 400., 300.), Some(RectRange::new(100., 600., 100., 450.)));
    let mut pl = PlotLite::new(rect);
    pl.add_scale(&mut s.ids, ScaleDir::Horizontal, 420., 30.);
    pl.add_scale(&mut s.ids, ScaleDir::Vertical, 100., 30.);
    let c = LabelBox::new(&mut s.ids, "title", p(250., 70.), TextBasis::NW, 80., 18., 0.0).unwrap();
    pl.add_comment(c).unwrap();
    s.add_bottom(pl);
    s
}

pub fn sliders() -> Scene {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let rect = RectShape::new(&mut s.ids, Rect::new(100., 100., 400., 300.), Some(RectRange::new(100., 600., 100., 450.)));
    let mut b = SliderBoard::new(rect);
    b.add_slider(&mut s.ids, SliderDir::Vertical, 0.3, true);
    b.add_slider(&mut s.ids, SliderDir::Vertical, 0.6, true);
    b.add_slider(&mut s.ids, SliderDir::Horizontal, 0.5, false);
    s.add_bottom(b);
    s
}

fn sliders_script(s: &mut Script) {
    s.cmd("clipping safe");
    s.exercise_all();
    s.cmd("clipping unsafe");
    let r = s.bounds(1);
    let at = p(r.center().x, r.bottom() - 20.0);
    s.drag(at, p(-300., 900.), MouseButton::Left, 5);
    s.cmd("clipping visual");
    let r = s.bounds(1);
    let at = p(r.center().x, r.bottom() - 20.0);
    s.drag(at, p(1200., -300.), MouseButton::Left, 5);
}

pub fn balls() -> Scene {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let mut a = BallBoard::new(&mut s.ids, Rect::new(60., 60., 300., 300.), false).unwrap();
    a.add_ball(&mut s.ids, p(120., 120.), 20., "#d04040").unwrap();
    a.add_ball(&mut s.ids, p(250., 250.), 25., "#4040d0").unwrap();
    s.add_bottom(a);
    let mut b = BallBoard::new(&mut s.ids, Rect::new(420., 60., 300., 250.), true).unwrap();
    b.add_ball(&mut s.ids, p(480., 120.), 20., "#d04040").unwrap();
    b.add_ball(&mut s.ids, p(600., 120.), 20., "#d04040").unwrap();
    b.add_ball(&mut s.ids, p(540., 250.), 20., "#4040d0").unwrap();
    s.add_bottom(b);
    let poly = RegularPoly::new(&mut s.ids, p(200., 480.), 90., 6, 0.0, PolyZoom::ZoomByVertices).unwrap();
    let pwb = PolyWithBall::new(&mut s.ids, poly, p(200., 480.), 20.).unwrap();
    s.add_bottom(pwb);
    s
}

pub fn labyrinth() -> Scene {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let w = |a: Point2, b: Point2| Wall { p0: a, p1: b };
    let walls = vec![
        w(p(100., 100.), p(700., 100.)),
        w(p(700., 100.), p(700., 500.)),
        w(p(700., 500.), p(100., 500.)),
        w(p(100., 500.), p(100., 100.)),
        w(p(400., 100.), p(400., 380.)),
    ];
    let mut l = Labyrinth::new(&mut s.ids, walls);
    l.add_ball(&mut s.ids, p(200., 200.), 20.).unwrap();
    l.add_ball(&mut s.ids, p(550., 300.), 15.).unwrap();
    let strip = NnodeStrip::new(&mut s.ids, p(150., 440.), p(260., 440.), 15.).unwrap();
    l.add_strip(strip).unwrap();
    s.add_bottom(l);
    s
}

fn labyrinth_script(s: &mut Script) {
    s.exercise_all();
    // One jump straight across the inner wall, then a slow push into it.
    let c = s.bounds(2).center();
    s.drag(c, c.offset(300.0, 0.0), MouseButton::Left, 1);
    let c = s.bounds(2).center();
    s.drag(c, c.offset(300.0, 0.0), MouseButton::Left, 30);
}
