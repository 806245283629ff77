//! Acceptance run: one PASS or FAIL line per criterion, each stated with its
//! tolerance. Exits non-zero when any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fs;
use std::panic::{self, AssertUnwindSafe};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{golden_cases, golden_dir, ip, p, rep_point, HEIGHT, WIDTH};
use mover_core::constraints::{Labyrinth, Wall};
use mover_core::cover::{
    cover_hit, standard_rect_cover, Behaviour, Cover, CoverHit, CoverNode, NodeGeometry, Resizing, DEFAULT_CORNER_RADIUS,
    DEFAULT_HALF_STRIP,
};
use mover_core::engine::{ClippingLevel, Engine, Host, MouseButton, ObjectId};
use mover_core::geometry::{line_angle, normalize_angle, point_at, Point2, Rect};
use mover_core::groups::{
    relocation_shift, CommentedElement, DominantGroup, ElasticElement, ElasticGroup, GroupTitle, WidgetProxy,
};
use mover_core::groups::widget::WIDGET_MIN_SIZE;
use mover_core::object::{Assembly, Movable};
use mover_core::scene::{load, parse_trace, save, GestureLog, LogEntry, Scene, SceneObject, TraceEvent};
use mover_core::shapes::{
    BorderScalable, ChatoyantPoly, ConvexPoly, HoledPoly, LabelBox, LineShape, NnodeCircle, NnodeRing, NnodeStrip,
    PartitionedCircle, PartitionedRect, Plug, PlugForm, PolyZoom, RectRange, RectShape, RegularPoly, RotRect, Rotatable,
    Sector, SectorFlags, SectoredCircle, SegmentedLine, TextBasis,
};

type Check = fn() -> Result<String, String>;

fn main() {
    let checks: Vec<(&str, &str, Check)> = vec![
        ("cover order", "exact agreement", cover_order),
        ("transparent fallthrough", "exact object ids", transparent_fallthrough),
        ("standard rectangle covers", "exact node counts and order", standard_covers),
        ("rotation isometry", "distances 1e-6, angles 1e-9, return 1e-6", rotation_isometry),
        ("border scaling", "radius within 1 px", border_scaling),
        ("n-node circle rebuild", "exact node counts", nnode_rebuild),
        ("shape minima under fuzz", "exact bounds", minima_fuzz),
        ("partition conservation", "exact width, angle sum 1e-9", partition_conservation),
        ("convex vertex moves", "exact oracle agreement", convex_moves),
        ("clipping levels", "exact", clipping_levels),
        ("ball adhesion", "exact offset, clearance > radius", ball_adhesion),
        ("visibility algebra", "exact flags", visibility_algebra),
        ("elastic frame", "exact frame", elastic_frame),
        ("enforced relocation", "exact positions", enforced_relocation),
        ("determinism and persistence", "byte identical", determinism_persistence),
        ("disappearance on release", "exact", disappearance),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, tol, check) in checks {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| (*s).to_string()))
                    .unwrap_or_default();
                Err(format!("panicked: {msg}"))
            });
        match outcome {
            Ok(detail) => println!("PASS {name} [{tol}]: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} [{tol}]: {why}");
            }
        }
    }
    let _ = panic::take_hook();
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn step(scene: &mut Scene, ev: TraceEvent) -> GestureLog {
    scene.replay(std::slice::from_ref(&ev))
}

fn caught(log: &GestureLog) -> Option<(ObjectId, usize, bool)> {
    log.entries.iter().find_map(|e| match e {
        LogEntry::Down { caught, .. } => *caught,
        _ => None,
    })
}

fn cmd(scene: &mut Scene, text: &str) -> Result<(), String> {
    let c = text.parse().map_err(|e| format!("{text}: {e}"))?;
    let log = step(scene, TraceEvent::Cmd(c));
    for e in &log.entries {
        if let LogEntry::Command { error: Some(err), .. } = e {
            return Err(format!("{text}: {err}"));
        }
    }
    Ok(())
}

fn top(scene: &Scene) -> &SceneObject {
    &scene.objects[0]
}

// ---------------------------------------------------------------- cover order

/// Random node with integer geometry; strips are axis aligned or diagonal so
/// that exact integer containment is the truth.
fn random_node(r: &mut ChaCha8Rng) -> CoverNode {
    let behaviour = match r.gen_range(0..10) {
        0 => Behaviour::Nonmoveable,
        1 => Behaviour::Transparent,
        2 => Behaviour::Frozen,
        _ => Behaviour::Moveable,
    };
    let c = p(f64::from(r.gen_range(20..180)), f64::from(r.gen_range(20..180)));
    let node = match r.gen_range(0..5) {
        0 => CoverNode::circle(c, f64::from(r.gen_range(2..40))),
        1 => {
            let len = f64::from(r.gen_range(0..60));
            let other = match r.gen_range(0..3) {
                0 => c.offset(len, 0.0),
                1 => c.offset(0.0, len),
                _ => c.offset(len, -len),
            };
            CoverNode::strip(c, other, f64::from(r.gen_range(1..12)))
        }
        2 => CoverNode::rect(Rect::new(c.x, c.y, f64::from(r.gen_range(1..60)), f64::from(r.gen_range(1..60)))),
        3 => {
            // Diamond or triangle with integer vertices.
            let a = f64::from(r.gen_range(3..40));
            let b = f64::from(r.gen_range(3..40));
            if r.gen_bool(0.5) {
                CoverNode::polygon(vec![c.offset(0.0, -b), c.offset(a, 0.0), c.offset(0.0, b), c.offset(-a, 0.0)])
            } else {
                CoverNode::polygon(vec![c, c.offset(a, 0.0), c.offset(0.0, b)])
            }
        }
        _ => {
            // Collinear vertices: zero area, contains nothing.
            let a = f64::from(r.gen_range(3..40));
            CoverNode::polygon(vec![c, c.offset(a, a), c.offset(2.0 * a, 2.0 * a)])
        }
    };
    node.with_behaviour(behaviour)
}

fn cross_i(a: (i64, i64), b: (i64, i64), q: (i64, i64)) -> i64 {
    (b.0 - a.0) * (q.1 - a.1) - (b.1 - a.1) * (q.0 - a.0)
}

fn ipt(q: Point2) -> (i64, i64) {
    (q.x as i64, q.y as i64)
}

/// Containment in exact integer arithmetic.
fn oracle_contains(node: &CoverNode, q: Point2) -> bool {
    let qi = ipt(q);
    match &node.geometry {
        NodeGeometry::Circle { center, radius } => {
            let c = ipt(*center);
            let r = *radius as i64;
            (qi.0 - c.0).pow(2) + (qi.1 - c.1).pow(2) <= r * r
        }
        NodeGeometry::Strip { p0, p1, radius } => {
            let (a, b) = (ipt(*p0), ipt(*p1));
            let r = *radius as i64;
            let v = (b.0 - a.0, b.1 - a.1);
            let w = (qi.0 - a.0, qi.1 - a.1);
            let len2 = v.0 * v.0 + v.1 * v.1;
            let dot = w.0 * v.0 + w.1 * v.1;
            if len2 == 0 || dot <= 0 {
                w.0 * w.0 + w.1 * w.1 <= r * r
            } else if dot >= len2 {
                (qi.0 - b.0).pow(2) + (qi.1 - b.1).pow(2) <= r * r
            } else {
                let c = i128::from(cross_i(a, b, qi));
                c * c <= i128::from(r * r) * i128::from(len2)
            }
        }
        NodeGeometry::Polygon { vertices } => {
            let v: Vec<(i64, i64)> = vertices.iter().map(|x| ipt(*x)).collect();
            let n = v.len();
            let area2: i64 = (0..n).map(|i| v[i].0 * v[(i + 1) % n].1 - v[(i + 1) % n].0 * v[i].1).sum();
            if area2 == 0 {
                return false;
            }
            let signs: Vec<i64> = (0..n).map(|i| cross_i(v[i], v[(i + 1) % n], qi).signum()).collect();
            !(signs.contains(&1) && signs.contains(&-1))
        }
    }
}

fn oracle_hit(nodes: &[CoverNode], q: Point2) -> CoverHit {
    match nodes.iter().find(|n| oracle_contains(n, q)) {
        None => CoverHit::Miss,
        Some(n) => match n.behaviour {
            Behaviour::Nonmoveable => CoverHit::Blocked,
            Behaviour::Transparent => CoverHit::TransparentFallthrough,
            Behaviour::Frozen => CoverHit::Frozen { node: n.id },
            Behaviour::Moveable => CoverHit::Grab { node: n.id, shape: n.shape(), cursor: n.cursor },
        },
    }
}

fn node_landmarks(n: &CoverNode) -> Vec<Point2> {
    match &n.geometry {
        NodeGeometry::Circle { center, radius } => vec![*center, center.offset(*radius, 0.0), center.offset(0.0, -*radius)],
        NodeGeometry::Strip { p0, p1, radius } => vec![*p0, *p1, p0.offset(0.0, *radius), p1.offset(*radius, 0.0)],
        NodeGeometry::Polygon { vertices } => vertices.clone(),
    }
}

fn cover_order() -> Result<String, String> {
    let mut r = rng(1);
    let mut points = 0;
    let mut hits = 0;
    for k in 0..1000 {
        let n = r.gen_range(2..=8);
        let cover = Cover::new((0..n).map(|_| random_node(&mut r)).collect()).map_err(|e| e.to_string())?;
        let mut probes: Vec<Point2> = cover.nodes().iter().flat_map(node_landmarks).collect();
        while probes.len() < 60 {
            probes.push(p(f64::from(r.gen_range(0..220)), f64::from(r.gen_range(0..220))));
        }
        for q in probes {
            let expected = oracle_hit(cover.nodes(), q);
            let got = cover_hit(&cover, q);
            ensure(got == expected, || format!("cover {k} at {q:?}: got {got:?}, oracle {expected:?}"))?;
            points += 1;
            hits += usize::from(expected != CoverHit::Miss);
        }
    }
    Ok(format!("1000 covers, {points} probes ({hits} inside some node) all agree"))
}

// ---------------------------------------------------- transparent fallthrough

fn transparent_fallthrough() -> Result<String, String> {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let rect = RectShape::new(&mut s.ids, Rect::new(200., 100., 400., 400.), None);
    let rect_id = Assembly::meta(&rect).id;
    s.add_bottom(rect);
    let (ro, ri) = (120.0, 60.0);
    let ring = NnodeRing::new(&mut s.ids, p(400., 300.), ro, ri).map_err(|e| e.to_string())?;
    let ring_id = Assembly::meta(&ring).id;
    s.add_top(ring);
    let mut r = rng(2);
    let c = p(400., 300.);
    for (lo, hi, want, label) in [(0.0, ri - 7.0, rect_id, "hole"), (ri + 7.0, ro - 7.0, ring_id, "body")] {
        for _ in 0..50 {
            let at = ip(point_at(c, r.gen_range(0.0..2.0 * PI), r.gen_range(lo..hi)));
            let log = s.replay(&[TraceEvent::Down(at, MouseButton::Right), TraceEvent::Up(at, MouseButton::Right)]);
            let got = caught(&log).map(|c| c.0);
            ensure(got == Some(want), || format!("{label} point {at:?} caught {got:?}, expected {want}"))?;
        }
    }
    Ok("50 hole points reach the rectangle, 50 body points catch the ring".into())
}

// ------------------------------------------------- standard rectangle covers

fn standard_covers() -> Result<String, String> {
    let rect = Rect::new(100., 50., 80., 40.);
    let (cr, hs) = (DEFAULT_CORNER_RADIUS, DEFAULT_HALF_STRIP);
    let mid = rect.center();
    let left = p(rect.left(), mid.y);
    let right = p(rect.right(), mid.y);
    let upper = p(mid.x, rect.top());
    let lower = p(mid.x, rect.bottom());
    let cases: [(Resizing, Vec<Point2>); 4] = [
        (Resizing::None, vec![]),
        (Resizing::NS, vec![upper, lower]),
        (Resizing::WE, vec![left, right]),
        (Resizing::Any, vec![left, right, upper, lower]),
    ];
    for (resizing, borders) in cases {
        let cover = standard_rect_cover(rect, resizing, cr, hs).map_err(|e| e.to_string())?;
        let corners = if resizing == Resizing::Any { 4 } else { 0 };
        let expect_len = corners + borders.len() + 1;
        ensure(cover.len() == expect_len, || format!("{resizing:?}: {} nodes, expected {expect_len}", cover.len()))?;
        for (k, c) in rect.corners().iter().enumerate().take(corners) {
            let ok = matches!(cover.nodes()[k].geometry, NodeGeometry::Circle { center, radius } if center == *c && radius == cr);
            ensure(ok, || format!("{resizing:?}: node {k} is not the corner circle at {c:?}"))?;
        }
        for (j, b) in borders.iter().enumerate() {
            let id = corners + j;
            let hit = cover_hit(&cover, *b);
            let want_node = if corners > 0 { id } else { j };
            ensure(
                matches!(hit, CoverHit::Grab { node, .. } if node == want_node),
                || format!("{resizing:?}: border point {b:?} hit {hit:?}, expected node {want_node}"),
            )?;
        }
        let whole = cover.last_id();
        ensure(matches!(cover_hit(&cover, mid), CoverHit::Grab { node, .. } if node == whole), || {
            format!("{resizing:?}: center is not caught by the whole-area node")
        })?;
        ensure(cover.nodes()[whole].contains(p(rect.left() + 1.0, rect.top() + 1.0)), || format!("{resizing:?}: whole node misses the interior"))?;
    }
    Ok("None 1, NS 3, WE 3, Any 9 nodes; corners LT RT RB LB, borders L R T B, whole last".into())
}

// ----------------------------------------------------------- rotation

fn pairwise(pts: &[Point2]) -> Vec<f64> {
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            out.push(mover_core::geometry::distance(pts[i], pts[j]));
        }
    }
    out
}

fn angle_diff(a: f64, b: f64) -> f64 {
    normalize_angle(a - b).abs()
}

fn rotation_one<T: Movable + Rotatable + Clone>(name: &str, shape: &T, r: &mut ChaCha8Rng) -> Result<(), String> {
    let c = shape.rotation_center();
    let pts0 = Movable::basic_points(shape);
    let d0 = pairwise(&pts0);
    let rel0 = |q: Point2, a_mouse: f64| normalize_angle(line_angle(c, q) - a_mouse);
    for trial in 0..100 {
        let a0 = r.gen_range(-PI..PI);
        let m0 = point_at(c, a0, r.gen_range(40.0..200.0));
        let aux = shape.begin_rotation(m0).map_err(|e| format!("{name}: {e}"))?;
        let base: Vec<Option<f64>> = pts0
            .iter()
            .map(|q| (mover_core::geometry::distance(c, *q) > 1e-6).then(|| rel0(*q, a0)))
            .collect();
        let mut s = shape.clone();
        for k in 0..20 {
            let a = r.gen_range(-PI..PI);
            let m = point_at(c, a, r.gen_range(20.0..250.0));
            s.rotation_update(&aux, m);
            let pts = Movable::basic_points(&s);
            for (x, y) in pairwise(&pts).iter().zip(&d0) {
                ensure((x - y).abs() <= 1e-6, || format!("{name} trial {trial} step {k}: distance {x} vs {y}"))?;
            }
            for (q, b) in pts.iter().zip(&base) {
                if let Some(b) = b {
                    let d = angle_diff(rel0(*q, a), *b);
                    ensure(d <= 1e-9, || format!("{name} trial {trial} step {k}: relative angle drifted by {d}"))?;
                }
            }
        }
        s.rotation_update(&aux, m0);
        for (q, q0) in Movable::basic_points(&s).iter().zip(&pts0) {
            let d = mover_core::geometry::distance(*q, *q0);
            ensure(d <= 1e-6, || format!("{name} trial {trial}: back at the grab point, off by {d}"))?;
        }
    }
    // One full turn in 1 degree steps.
    let a0 = 0.3;
    let m0 = point_at(c, a0, 120.0);
    let aux = shape.begin_rotation(m0).map_err(|e| format!("{name}: {e}"))?;
    let mut s = shape.clone();
    for deg in 1..=360 {
        s.rotation_update(&aux, point_at(c, a0 + f64::from(deg).to_radians(), 120.0));
    }
    for (q, q0) in Movable::basic_points(&s).iter().zip(&pts0) {
        let d = mover_core::geometry::distance(*q, *q0);
        ensure(d <= 1e-6, || format!("{name}: full turn ends {d} away"))?;
    }
    Ok(())
}

fn rotation_isometry() -> Result<String, String> {
    let mut ids = mover_core::object::IdGen::default();
    let c = p(400., 300.);
    let mut r = rng(4);
    let flags = SectorFlags { arc_resizable: true, end_side_movable: true, start_side_movable: true };
    let err = |e: mover_core::shapes::ShapeError| e.to_string();
    rotation_one("line", &LineShape::new(&mut ids, p(330., 280.), p(470., 330.)), &mut r)?;
    let seg = SegmentedLine::new(&mut ids, vec![p(300., 300.), p(360., 260.), p(430., 330.), p(500., 290.)], c).map_err(err)?;
    rotation_one("segmented line", &seg, &mut r)?;
    rotation_one("rotated rectangle", &RotRect::new(&mut ids, c, 140., 60., 0.3), &mut r)?;
    let label = LabelBox::new(&mut ids, "label", c, TextBasis::M, 80., 20., 0.2).map_err(err)?;
    rotation_one("label", &label, &mut r)?;
    let reg = RegularPoly::new(&mut ids, c, 80., 5, 0.2, PolyZoom::ZoomByBorder).map_err(err)?;
    rotation_one("regular polygon", &reg, &mut r)?;
    let chat = ChatoyantPoly::new(&mut ids, c, vec![p(340., 250.), p(470., 270.), p(450., 370.), p(350., 350.)]).map_err(err)?;
    rotation_one("chatoyant polygon", &chat, &mut r)?;
    rotation_one("n-node circle", &NnodeCircle::new(&mut ids, c, 80.).map_err(err)?, &mut r)?;
    rotation_one("n-node ring", &NnodeRing::new(&mut ids, c, 90., 45.).map_err(err)?, &mut r)?;
    rotation_one("n-node strip", &NnodeStrip::new(&mut ids, p(340., 300.), p(460., 320.), 25.).map_err(err)?, &mut r)?;
    rotation_one("sector", &Sector::new(&mut ids, c, 100., 0.3, 1.2, flags).map_err(err)?, &mut r)?;
    rotation_one("sectored circle", &SectoredCircle::new(&mut ids, c, 90., 0.1, vec![1., 2., 3.]).map_err(err)?, &mut r)?;
    rotation_one("partitioned circle", &PartitionedCircle::new(&mut ids, c, 100., 0.1, vec![1., 1., 2.]).map_err(err)?, &mut r)?;
    rotation_one("plug", &Plug::new(&mut ids, PlugForm::Polygon(5), c, 40., 0.3).map_err(err)?, &mut r)?;
    rotation_one("holed polygon", &HoledPoly::new(&mut ids, c, 80., 6, 0.0, 30., 10.).map_err(err)?, &mut r)?;
    Ok("14 rotatable kinds, 100 traces of 20 updates each plus a 360 step orbit".into())
}

// ------------------------------------------------------------ border scaling

fn border_scaling() -> Result<String, String> {
    let mut ids = mover_core::object::IdGen::default();
    let c = p(300., 300.);
    let poly = RegularPoly::new(&mut ids, c, 100., 6, 0.0, PolyZoom::ZoomByBorder).map_err(|e| e.to_string())?;
    let aux = poly.begin_border_scaling(p(380., 300.)).map_err(|e| e.to_string())?;
    ensure(aux.scaling == 1.25, || format!("grab at 80 gives scaling {}", aux.scaling))?;
    let mut s = poly.clone();
    s.scale_update(&aux, p(360., 300.));
    ensure((s.radius - 75.0).abs() <= 1.0, || format!("pointer at 60 gives radius {}", s.radius))?;
    let mut r = rng(5);
    let min_d = poly.min_r / 1.25 + 2.0;
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let d = r.gen_range(min_d..400.0);
        let mut s = poly.clone();
        let accepted = s.scale_update(&aux, point_at(c, r.gen_range(-PI..PI), d));
        ensure(accepted, || format!("scaling to distance {d} refused"))?;
        let err = (s.radius - 1.25 * d).abs();
        worst = worst.max(err);
        ensure(err <= 1.0, || format!("distance {d}: radius {} off by {err}", s.radius))?;
    }
    Ok(format!("scaling 1.25 at 80 px, radius 75 at 60 px, worst of 1000 random distances {worst:.3} px"))
}

// ------------------------------------------------------------ n-node rebuild

fn nnode_rebuild() -> Result<String, String> {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let c = p(300., 300.);
    let circle = NnodeCircle::new(&mut s.ids, c, 100.).map_err(|e| e.to_string())?;
    let id = Assembly::meta(&circle).id;
    s.add_top(circle);
    let state = |s: &Scene| match top(s) {
        SceneObject::NnodeCircle(n) => (n.n_border, Movable::define_cover(n).len(), n.radius),
        _ => unreachable!(),
    };
    ensure(state(&s).0 == 79 && state(&s).1 == 80, || format!("r 100: {:?}", state(&s)))?;
    let log = step(&mut s, TraceEvent::Down(p(400., 300.), MouseButton::Left));
    ensure(caught(&log) == Some((id, 0, true)), || format!("catch at the east node gave {:?}", caught(&log)))?;
    step(&mut s, TraceEvent::Move(p(350., 300.)));
    let mid = state(&s);
    ensure(mid == (79, 80, 50.0), || format!("mid-gesture state {mid:?}"))?;
    step(&mut s, TraceEvent::Up(p(350., 300.), MouseButton::Left));
    let end = state(&s);
    ensure(end == (39, 40, 50.0), || format!("after release {end:?}"))?;
    Ok("r 100: 79 border nodes, cover 80; unchanged mid-gesture at r 50; 39 and 40 after release".into())
}

// ------------------------------------------------------------- minima fuzz

/// Drives random gestures at the cover nodes of object `id`, one event per
/// replay call, checking `inv` after every event. Pointer moves lean toward
/// the middle of the client area so the object stays reachable.
fn fuzz(
    scene: &mut Scene,
    id: ObjectId,
    seed: u64,
    events: usize,
    mut inv: impl FnMut(&Scene, Option<(usize, MouseButton)>, &TraceEvent) -> Result<(), String>,
) -> Result<usize, String> {
    let mut r = rng(seed);
    let mut count = 0;
    let centre = p(WIDTH / 2.0, HEIGHT / 2.0);
    while count < events {
        let cover = scene.find(id).and_then(|a| a.own_cover()).ok_or("object vanished")?;
        let node = r.gen_range(0..cover.len());
        let Some(at) = cover.node(node).and_then(rep_point) else { continue };
        let mut cur = ip(at);
        let button = if r.gen_bool(0.85) { MouseButton::Left } else { MouseButton::Right };
        let ev = TraceEvent::Down(cur, button);
        let log = step(scene, ev.clone());
        let grip = caught(&log).filter(|c| c.0 == id).map(|c| (c.1, button));
        inv(scene, grip, &ev)?;
        count += 1;
        for _ in 0..r.gen_range(1..=6) {
            let pull = r.gen_range(0.0..0.2);
            let dx = (centre.x - cur.x) * pull + r.gen_range(-30.0..30.0);
            let dy = (centre.y - cur.y) * pull + r.gen_range(-30.0..30.0);
            cur = ip(cur.offset(dx, dy));
            let ev = TraceEvent::Move(cur);
            step(scene, ev.clone());
            inv(scene, grip, &ev)?;
            count += 1;
        }
        let ev = TraceEvent::Up(cur, button);
        step(scene, ev.clone());
        inv(scene, grip, &ev)?;
        count += 1;
    }
    Ok(count)
}

fn single(build: impl FnOnce(&mut Scene) -> SceneObject) -> (Scene, ObjectId) {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let obj = build(&mut s);
    let id = obj.as_dyn().meta().id;
    s.add_top(obj);
    (s, id)
}

fn minima_fuzz() -> Result<String, String> {
    const N: usize = 10_000;
    let mut total = 0;
    let at = |what: &str, ev: &TraceEvent, msg: String| format!("{what} after {ev}: {msg}");

    let (mut s, id) = single(|s| LineShape::new(&mut s.ids, p(300., 300.), p(420., 260.)).into());
    total += fuzz(&mut s, id, 70, N, |s, _, ev| match top(s) {
        SceneObject::Line(l) => ensure(l.length() >= 20.0, || at("line", ev, format!("length {}", l.length()))),
        _ => Err("line lost".into()),
    })?;

    let (mut s, id) = single(|s| NnodeStrip::new(&mut s.ids, p(300., 300.), p(420., 300.), 25.).unwrap().into());
    total += fuzz(&mut s, id, 71, N, |s, _, ev| match top(s) {
        SceneObject::NnodeStrip(t) => {
            let len = mover_core::geometry::distance(t.c0, t.c1);
            ensure(t.radius >= 12.0 && len >= 20.0, || at("strip", ev, format!("radius {} length {len}", t.radius)))
        }
        _ => Err("strip lost".into()),
    })?;

    let range = RectRange::new(40., 300., 30., 200.);
    let (mut s, id) = single(|s| RectShape::new(&mut s.ids, Rect::new(300., 200., 160., 100.), Some(range)).into());
    total += fuzz(&mut s, id, 72, N, |s, _, ev| match top(s) {
        SceneObject::Rect(t) => {
            let (w, h) = (t.rect.w, t.rect.h);
            ensure((40.0..=300.0).contains(&w) && (30.0..=200.0).contains(&h), || at("rectangle", ev, format!("{w} x {h}")))
        }
        _ => Err("rectangle lost".into()),
    })?;

    let (mut s, id) = single(|s| PartitionedRect::new(&mut s.ids, 200., 200., 100., vec![60., 40., 80.]).unwrap().into());
    total += fuzz(&mut s, id, 73, N, |s, _, ev| match top(s) {
        SceneObject::PartitionedRect(t) => ensure(t.segments.iter().all(|x| *x >= 4.0) && t.h >= 10.0, || {
            at("partitioned rectangle", ev, format!("segments {:?} height {}", t.segments, t.h))
        }),
        _ => Err("partitioned rectangle lost".into()),
    })?;

    let (mut s, id) = single(|s| PartitionedCircle::new(&mut s.ids, p(400., 300.), 120., 0.3, vec![1., 1., 2., 3.]).unwrap().into());
    total += fuzz(&mut s, id, 74, N, |s, _, ev| match top(s) {
        SceneObject::PartitionedCircle(t) => {
            let sw = t.sweeps();
            ensure(sw.iter().all(|x| *x >= 0.05) && t.radius >= 15.0, || at("partitioned circle", ev, format!("sweeps {sw:?}")))
        }
        _ => Err("partitioned circle lost".into()),
    })?;

    let flags = SectorFlags { arc_resizable: true, end_side_movable: true, start_side_movable: true };
    let (mut s, id) = single(|s| Sector::new(&mut s.ids, p(400., 300.), 100., 0.2, 1.6, flags).unwrap().into());
    total += fuzz(&mut s, id, 75, N, |s, _, ev| match top(s) {
        SceneObject::Sector(t) => ensure(t.angle_sweep.abs() <= PI && t.radius >= t.min_radius, || {
            at("sector", ev, format!("sweep {} radius {}", t.angle_sweep, t.radius))
        }),
        _ => Err("sector lost".into()),
    })?;

    let (mut s, id) = single(|s| NnodeRing::new(&mut s.ids, p(400., 300.), 90., 45.).unwrap().into());
    total += fuzz(&mut s, id, 76, N, |s, _, ev| match top(s) {
        SceneObject::NnodeRing(t) => ensure(t.r_inner >= t.min_inner && t.r_outer - t.r_inner >= t.min_width, || {
            at("ring", ev, format!("outer {} inner {}", t.r_outer, t.r_inner))
        }),
        _ => Err("ring lost".into()),
    })?;

    let (mut s, id) = single(|s| NnodeCircle::new(&mut s.ids, p(400., 300.), 80.).unwrap().into());
    total += fuzz(&mut s, id, 77, N, |s, _, ev| match top(s) {
        SceneObject::NnodeCircle(t) => ensure(t.radius >= t.min_radius, || at("circle", ev, format!("radius {}", t.radius))),
        _ => Err("circle lost".into()),
    })?;

    let (mut s, id) = single(|s| {
        WidgetProxy::new(&mut s.ids, "w", Rect::new(300., 200., 100., 40.), (10., 10.), (300., 200.)).unwrap().into()
    });
    total += fuzz(&mut s, id, 78, N, |s, _, ev| match top(s) {
        SceneObject::Widget(t) => {
            let b = t.bounds;
            ensure(b.w >= WIDGET_MIN_SIZE && b.h >= WIDGET_MIN_SIZE && b.w <= 300.0 && b.h <= 200.0, || {
                at("widget", ev, format!("{} x {}", b.w, b.h))
            })
        }
        _ => Err("widget lost".into()),
    })?;

    let (mut s, id) = single(|s| {
        ConvexPoly::new(&mut s.ids, vec![p(300., 250.), p(450., 240.), p(480., 360.), p(320., 380.)], 10.).unwrap().into()
    });
    total += fuzz(&mut s, id, 79, N, |s, _, ev| match top(s) {
        SceneObject::ConvexPoly(t) => {
            let v = &t.vertices;
            let n = v.len();
            let short = (0..n).map(|i| mover_core::geometry::distance(v[i], v[(i + 1) % n])).fold(f64::INFINITY, f64::min);
            ensure(short > t.min_side, || at("convex polygon", ev, format!("side {short}")))
        }
        _ => Err("convex polygon lost".into()),
    })?;
    Ok(format!("10 shapes, {total} events, every minimum held after every event"))
}

// --------------------------------------------------- partition conservation

fn partition_conservation() -> Result<String, String> {
    let (mut s, id) = single(|s| PartitionedRect::new(&mut s.ids, 150., 200., 100., vec![60., 40., 80., 50.]).unwrap().into());
    let mut last_sum = 230.0;
    let n = 4;
    let rect_events = fuzz(&mut s, id, 80, 10_000, |s, grip, ev| {
        let SceneObject::PartitionedRect(t) = top(s) else { return Err("lost".into()) };
        let sum: f64 = t.segments.iter().sum();
        ensure(t.segments.iter().all(|x| x.fract() == 0.0), || format!("after {ev}: fractional segments {:?}", t.segments))?;
        ensure(sum == t.rect().w, || format!("after {ev}: sum {sum} vs width {}", t.rect().w))?;
        let partition_drag = matches!(grip, Some((k, MouseButton::Left)) if (2..2 + n - 1).contains(&k));
        if partition_drag {
            ensure(sum == last_sum, || format!("after {ev}: partition drag changed the width {last_sum} -> {sum}"))?;
        }
        last_sum = sum;
        Ok(())
    })?;
    let (mut s, id) = single(|s| PartitionedCircle::new(&mut s.ids, p(400., 300.), 120., 0.3, vec![1., 1., 2., 3.]).unwrap().into());
    let circle_events = fuzz(&mut s, id, 81, 10_000, |s, _, ev| {
        let SceneObject::PartitionedCircle(t) = top(s) else { return Err("lost".into()) };
        let total: f64 = t.sweeps().iter().sum();
        ensure((total - 2.0 * PI).abs() <= 1e-9, || format!("after {ev}: sweeps sum to {total}"))
    })?;
    Ok(format!(
        "rectangle: {rect_events} events, integral segments summing to the width, partition drags keep it; circle: {circle_events} events"
    ))
}

// ---------------------------------------------------------- convex moves

fn convex_oracle(v: &[Point2], min_side: f64) -> bool {
    let n = v.len();
    let crosses: Vec<f64> = (0..n)
        .map(|i| {
            let (a, b, c) = (v[i], v[(i + 1) % n], v[(i + 2) % n]);
            (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
        })
        .collect();
    let strict = crosses.iter().all(|c| *c > 0.0) || crosses.iter().all(|c| *c < 0.0);
    let turning: f64 = (0..n)
        .map(|i| {
            let (a, b, c) = (v[i], v[(i + 1) % n], v[(i + 2) % n]);
            normalize_angle(line_angle(b, c) - line_angle(a, b))
        })
        .sum();
    let simple = (turning.abs() - 2.0 * PI).abs() < 1e-6;
    let sides = (0..n).all(|i| mover_core::geometry::distance(v[i], v[(i + 1) % n]) > min_side);
    strict && simple && sides
}

fn convex_moves() -> Result<String, String> {
    let mut ids = mover_core::object::IdGen::default();
    let hex: Vec<Point2> = (0..6).map(|k| ip(point_at(p(400., 300.), PI / 3.0 * f64::from(k), 100.))).collect();
    let mut poly = ConvexPoly::new(&mut ids, hex, 10.).map_err(|e| e.to_string())?;
    let mut r = rng(9);
    let mut accepted = 0;
    for k in 0..1000 {
        let i = r.gen_range(0..6);
        let (dx, dy) = (f64::from(r.gen_range(-60..=60)), f64::from(r.gen_range(-60..=60)));
        let mut cand = poly.vertices.clone();
        cand[i] = cand[i].offset(dx, dy);
        let want = convex_oracle(&cand, poly.min_side);
        let got = poly.convex_vertex_move(i, dx, dy);
        ensure(got == want, || format!("move {k}: vertex {i} by ({dx}, {dy}) accepted {got}, oracle {want}"))?;
        ensure(convex_oracle(&poly.vertices, poly.min_side), || format!("move {k}: polygon no longer convex"))?;
        accepted += usize::from(got);
    }
    Ok(format!("1000 random vertex moves, {accepted} accepted, decisions match the oracle"))
}

// ----------------------------------------------------------- clipping

fn clipping_levels() -> Result<String, String> {
    let build = || {
        let mut s = Scene::new(WIDTH, HEIGHT);
        let rect = RectShape::new(&mut s.ids, Rect::new(350., 250., 100., 100.), None);
        s.add_top(rect);
        s
    };
    let mut r = rng(10);
    let mut beyond = 0;
    for (level, word) in [(ClippingLevel::Visual, "visual"), (ClippingLevel::Safe, "safe"), (ClippingLevel::Unsafe, "unsafe")] {
        let mut s = build();
        cmd(&mut s, &format!("clipping {word}"))?;
        for _ in 0..50 {
            let c = s.find(1).map(|a| a.bounds().center()).ok_or("rect lost")?;
            let mut evs = vec![TraceEvent::Down(ip(c), MouseButton::Left)];
            for _ in 0..6 {
                evs.push(TraceEvent::Move(p(f64::from(r.gen_range(-900..1700)), f64::from(r.gen_range(-700..1300)))));
            }
            evs.push(TraceEvent::Up(p(400., 300.), MouseButton::Left));
            let log = s.replay(&evs);
            for e in &log.entries {
                let LogEntry::Move { at, effective: Some(eff), .. } = e else { continue };
                let ok = match level {
                    ClippingLevel::Visual => s.client.contains(*eff),
                    ClippingLevel::Safe => eff.x >= 0.0 && eff.y >= 0.0 && (eff.x == at.x || at.x < 0.0) && (eff.y == at.y || at.y < 0.0),
                    ClippingLevel::Unsafe => eff == at,
                };
                ensure(ok, || format!("{word}: pointer {at:?} delivered as {eff:?}"))?;
                beyond += usize::from(level == ClippingLevel::Safe && (eff.x > WIDTH || eff.y > HEIGHT));
            }
            // Recover the rectangle for the next gesture.
            s = build();
            cmd(&mut s, &format!("clipping {word}"))?;
        }
    }
    ensure(beyond > 0, || "safe clipping never let the pointer past the right or bottom edge".into())?;

    // Narrowing is refused while a gesture runs; widening or keeping is fine.
    let s = build();
    let mut host: Vec<SceneObject> = s.objects.clone();
    let mut e = Engine::new(Some(s.client));
    e.set_queue(vec![1]).map_err(|e| e.to_string())?;
    ensure(e.set_clipping(ClippingLevel::Safe), || "idle change refused".into())?;
    ensure(e.catch(&host, p(400., 300.), MouseButton::Left), || "catch failed".into())?;
    ensure(!e.set_clipping(ClippingLevel::Visual), || "narrowing accepted mid-gesture".into())?;
    ensure(e.set_clipping(ClippingLevel::Safe), || "same level refused mid-gesture".into())?;
    ensure(e.set_clipping(ClippingLevel::Unsafe), || "widening refused mid-gesture".into())?;
    ensure(!e.set_clipping(ClippingLevel::Safe), || "narrowing accepted mid-gesture".into())?;
    let rep = e.drag_report(&mut host, p(-50., -50.));
    ensure(rep.effective == Some(p(-50., -50.)), || format!("unsafe drag clamped to {:?}", rep.effective))?;
    e.release();
    ensure(e.set_clipping(ClippingLevel::Visual), || "idle narrowing refused".into())?;
    Ok(format!("visual stays in the client area, safe only clamps left and top ({beyond} ticks past right or bottom), unsafe is raw; mid-gesture narrowing refused"))
}

// --------------------------------------------------------- ball adhesion

fn seg_dist2(q: Point2, a: Point2, b: Point2) -> f64 {
    let (vx, vy) = (b.x - a.x, b.y - a.y);
    let len2 = vx * vx + vy * vy;
    let t = if len2 == 0.0 { 0.0 } else { (((q.x - a.x) * vx + (q.y - a.y) * vy) / len2).clamp(0.0, 1.0) };
    let (fx, fy) = (a.x + t * vx - q.x, a.y + t * vy - q.y);
    fx * fx + fy * fy
}

fn segments_meet(a0: Point2, a1: Point2, b0: Point2, b1: Point2) -> bool {
    let o = |a: Point2, b: Point2, c: Point2| ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).signum();
    let (d1, d2, d3, d4) = (o(b0, b1, a0), o(b0, b1, a1), o(a0, a1, b0), o(a0, a1, b1));
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

fn ball_adhesion() -> Result<String, String> {
    let mut s = common::labyrinth();
    let walls: Vec<Wall> = match top(&s) {
        SceneObject::Labyrinth(l) => l.walls.clone(),
        _ => return Err("no labyrinth".into()),
    };
    let lab = |s: &Scene| -> Labyrinth {
        match top(s) {
            SceneObject::Labyrinth(l) => l.clone(),
            _ => unreachable!(),
        }
    };
    let mut r = rng(11);
    let (mut ticks, mut refused, mut gestures) = (0, 0, 0);
    for g in 0..300 {
        let l = lab(&s);
        let k = r.gen_range(0..l.balls.len());
        let ball = &l.balls[k];
        let bid = ball.meta.id;
        let grab = ball.center.offset(f64::from(r.gen_range(-8..=8)), f64::from(r.gen_range(-8..=8)));
        let log = step(&mut s, TraceEvent::Down(grab, MouseButton::Left));
        if caught(&log).map(|c| c.0) != Some(bid) {
            step(&mut s, TraceEvent::Up(grab, MouseButton::Left));
            continue;
        }
        gestures += 1;
        let offset = (grab.x - ball.center.x, grab.y - ball.center.y);
        let mut cursor = grab;
        for _ in 0..15 {
            let jump = r.gen_bool(0.2);
            let span = if jump { 300 } else { 8 };
            let to = cursor.offset(f64::from(r.gen_range(-span..=span)), f64::from(r.gen_range(-span..=span)));
            let before = lab(&s).balls[k].center;
            let log = step(&mut s, TraceEvent::Move(to));
            let mut delivered = None;
            for e in &log.entries {
                match e {
                    LogEntry::Move { effective, accepted, .. } => {
                        delivered = *effective;
                        refused += usize::from(!accepted);
                    }
                    LogEntry::Warp(w) => delivered = Some(*w),
                    _ => {}
                }
            }
            cursor = delivered.unwrap_or(to);
            let after = lab(&s).balls[k].center;
            let rel = (cursor.x - after.x, cursor.y - after.y);
            ensure(rel == offset, || format!("gesture {g}: cursor minus center {rel:?}, caught at {offset:?}"))?;
            let rad = lab(&s).balls[k].radius;
            for w in &walls {
                ensure(seg_dist2(after, w.p0, w.p1) > rad * rad, || format!("gesture {g}: ball at {after:?} touches a wall"))?;
                ensure(!segments_meet(before, after, w.p0, w.p1), || format!("gesture {g}: ball crossed a wall from {before:?} to {after:?}"))?;
            }
            ticks += 1;
        }
        step(&mut s, TraceEvent::Up(cursor, MouseButton::Left));
    }
    ensure(refused > 0, || "no move was ever refused; the walls were never tested".into())?;
    Ok(format!("{gestures} gestures, {ticks} ticks ({refused} refused with a warp back), offset exact and walls never touched or crossed"))
}

// ----------------------------------------------------- visibility algebra

fn proxy(ids: &mut mover_core::object::IdGen, x: f64, y: f64) -> WidgetProxy {
    WidgetProxy::new(ids, "w", Rect::new(x, y, 60., 30.), (0., 0.), (0., 0.)).unwrap()
}

/// Outer group 5 holds widget 1 and group 4, which holds widget 2 and
/// group 3, which holds widgets... ids come from construction order.
fn nested() -> (Scene, [ObjectId; 3], Vec<ObjectId>) {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let ids = &mut s.ids;
    let a = proxy(ids, 100., 100.);
    let b = proxy(ids, 100., 200.);
    let c = proxy(ids, 100., 300.);
    let d = proxy(ids, 200., 300.);
    let leaves = vec![a.meta.id, b.meta.id, c.meta.id, d.meta.id];
    let g3 = ElasticGroup::new(ids, vec![ElasticElement::Proxy(c), ElasticElement::Proxy(d)], [6., 6., 6., 6.], None);
    let g3id = g3.meta.id;
    let g2 = ElasticGroup::new(ids, vec![ElasticElement::Proxy(b), ElasticElement::Group(Box::new(g3))], [6., 6., 6., 6.], None);
    let g2id = g2.meta.id;
    let g1 = ElasticGroup::new(ids, vec![ElasticElement::Proxy(a), ElasticElement::Group(Box::new(g2))], [6., 6., 6., 6.], None);
    let g1id = g1.meta.id;
    s.add_top(g1);
    (s, [g1id, g2id, g3id], leaves)
}

/// Walks the tree checking each member flag against its parent and every
/// rendered flag against the product of direct flags along the path.
fn check_tree(s: &Scene, a: &dyn Assembly, parent_rendered: bool, path_direct: bool) -> Result<(), String> {
    let m = a.meta();
    ensure(m.visible_as_member == parent_rendered, || format!("{}: member flag {} under a parent rendered {parent_rendered}", m.id, m.visible_as_member))?;
    let expect = path_direct && m.visible;
    ensure(m.rendered() == expect, || format!("{}: rendered {} expected {expect}", m.id, m.rendered()))?;
    if a.own_cover().is_some() {
        ensure(s.objects.cover(m.id).is_some() == expect, || format!("{}: sensed state disagrees with rendered {expect}", m.id))?;
    }
    for c in a.children() {
        check_tree(s, c, m.rendered(), expect)?;
    }
    Ok(())
}

fn visibility_algebra() -> Result<String, String> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut commands = 0;
    for setting in 0..8u8 {
        for perm in perms {
            let (mut s, groups, _) = nested();
            for k in perm {
                let show = setting & (1 << k) != 0;
                cmd(&mut s, &format!("{} {}", if show { "show" } else { "hide" }, groups[k]))?;
                commands += 1;
                check_tree(&s, top(&s).as_dyn(), true, true)?;
            }
            for (k, g) in groups.iter().enumerate() {
                let direct = s.find(*g).ok_or("group lost")?.meta().visible;
                ensure(direct == (setting & (1 << k) != 0), || format!("group {g}: direct flag {direct} after setting {setting:03b}"))?;
            }
            cmd(&mut s, &format!("showall {}", groups[0]))?;
            check_tree(&s, top(&s).as_dyn(), true, true)?;
            let all = s.find(groups[0]).map(mover_core::object::metas).ok_or("lost")?.iter().all(|m| m.rendered());
            ensure(all, || "showall left something hidden".into())?;
        }
    }
    // Hiding a member, then hiding and showing its group, keeps the member hidden.
    let (mut s, groups, leaves) = nested();
    let c = leaves[2];
    for text in [format!("hide {c}"), format!("hide {}", groups[0]), format!("show {}", groups[0])] {
        cmd(&mut s, &text)?;
        check_tree(&s, top(&s).as_dyn(), true, true)?;
    }
    let m = s.find(c).ok_or("member lost")?.meta().clone();
    ensure(!m.visible && !m.rendered(), || "member reappeared with its group".into())?;
    ensure(s.find(leaves[3]).is_some_and(|a| a.meta().rendered()), || "sibling stayed hidden".into())?;
    Ok(format!("8 settings x 6 orders ({commands} commands) on a three-level tree; hidden member stays hidden"))
}

// ---------------------------------------------------------- elastic frame

fn expected_frame(g: &ElasticGroup, prev: Rect) -> Rect {
    let union = g
        .elements
        .iter()
        .map(ElasticElement::as_dyn)
        .filter(|a| a.meta().rendered())
        .map(|a| a.bounds())
        .reduce(|u, b| u.union(&b));
    let [l, t, r, b] = g.side_spaces;
    let half = g.title.as_ref().map_or(0.0, |tt| tt.height / 2.0);
    union.map_or(prev, |u| Rect::new(u.x - l, u.y - t - half, u.w + l + r, u.h + t + half + b))
}

fn elastic_frame() -> Result<String, String> {
    let mut s = Scene::new(WIDTH, HEIGHT);
    let ids = &mut s.ids;
    let mut elements = Vec::new();
    let mut members = Vec::new();
    for (k, (x, y)) in [(200., 150.), (300., 150.), (400., 150.), (200., 250.), (300., 250.)].into_iter().enumerate() {
        let (min, max) = if k % 2 == 0 { ((30., 20.), (150., 90.)) } else { ((0., 0.), (0., 0.)) };
        let w = WidgetProxy::new(ids, "m", Rect::new(x, y, 70., 40.), min, max).unwrap();
        members.push(w.meta.id);
        elements.push(ElasticElement::Proxy(w));
    }
    let w = WidgetProxy::new(ids, "c", Rect::new(400., 250., 70., 40.), (30., 20.), (150., 90.)).unwrap();
    members.push(w.meta.id);
    let note = LabelBox::new(ids, "note", p(480., 240.), TextBasis::NW, 40., 16., 0.0).unwrap();
    members.push(Assembly::meta(&note).id);
    elements.push(ElasticElement::Commented(CommentedElement::new(w, note).map_err(|e| e.to_string())?));
    let title = GroupTitle { text: "Options".into(), width: 60., height: 14., alignment_coef: 0.3, movable: true };
    let g = ElasticGroup::new(ids, elements, [10., 8., 12., 9.], Some(title));
    let gid = g.meta.id;
    s.add_top(g);

    let group = |s: &Scene| -> ElasticGroup {
        match top(s) {
            SceneObject::ElasticGroup(g) => g.clone(),
            _ => unreachable!(),
        }
    };
    let mut r = rng(13);
    let mut prev = group(&s).frame;
    let mut events = 0;
    let mut check = |s: &Scene, ev: &str| -> Result<(), String> {
        let g = group(s);
        let want = expected_frame(&g, prev);
        ensure(g.frame == want, || format!("after {ev}: frame {:?}, formula {want:?}", g.frame))?;
        prev = g.frame;
        Ok(())
    };
    check(&s, "construction")?;
    while events < 500 {
        if r.gen_bool(0.1) {
            let m = members[r.gen_range(0..members.len())];
            let text = format!("{} {m}", if r.gen_bool(0.5) { "hide" } else { "show" });
            cmd(&mut s, &text)?;
            check(&s, &text)?;
            events += 1;
            continue;
        }
        let target = if r.gen_bool(0.15) { gid } else { members[r.gen_range(0..members.len())] };
        let Some(cover) = s.find(target).and_then(|a| a.own_cover()) else { continue };
        let Some(at) = cover.node(r.gen_range(0..cover.len())).and_then(rep_point) else { continue };
        let mut cur = ip(at);
        let mut evs = vec![TraceEvent::Down(cur, MouseButton::Left)];
        for _ in 0..r.gen_range(1..5) {
            cur = cur.offset(f64::from(r.gen_range(-25..=25)), f64::from(r.gen_range(-25..=25)));
            evs.push(TraceEvent::Move(cur));
        }
        evs.push(TraceEvent::Up(cur, MouseButton::Left));
        for ev in evs {
            step(&mut s, ev.clone());
            check(&s, &ev.to_string())?;
            events += 1;
        }
    }
    Ok(format!("{events} events on a six-member titled group; frame matches the formula after each"))
}

// ------------------------------------------------------ enforced relocation

fn enforced_relocation() -> Result<String, String> {
    let build = || {
        let mut s = Scene::new(WIDTH, HEIGHT);
        let w = WidgetProxy::new(&mut s.ids, "OK", Rect::new(300., 200., 160., 80.), (40., 20.), (400., 300.)).unwrap();
        let note = LabelBox::new(&mut s.ids, "note", p(480., 180.), TextBasis::NW, 40., 16., 0.0).unwrap();
        s.add_top(CommentedElement::new(w, note).unwrap());
        s
    };
    let parts = |s: &Scene| -> CommentedElement {
        match top(s) {
            SceneObject::CommentedElement(c) => c.clone(),
            _ => unreachable!(),
        }
    };
    let drag = |s: &mut Scene, from: Point2, to: Point2| {
        s.replay(&[TraceEvent::Down(from, MouseButton::Left), TraceEvent::Move(to), TraceEvent::Up(to, MouseButton::Left)]);
    };

    // Dropped fully inside: pushed out, and a second pass changes nothing.
    let mut s = build();
    let c0 = Movable::bounds(&parts(&s).comment);
    drag(&mut s, c0.center(), p(340. + c0.w / 2.0, 240. + c0.h / 2.0));
    let mut ce = parts(&s);
    let after = Movable::bounds(&ce.comment);
    ensure(!ce.element.bounds.contains_rect(&after), || format!("comment left inside at {after:?}"))?;
    ensure(after != c0, || "comment did not move at all".into())?;
    ensure(relocation_shift(after, ce.element.bounds).is_none() && !ce.enforced_relocation(), || "second relocation moved the comment".into())?;
    ensure(Movable::bounds(&ce.comment) == after, || "second relocation changed the position".into())?;

    // One pixel outside: left alone.
    let mut s = build();
    let e = parts(&s).element.bounds;
    let c0 = Movable::bounds(&parts(&s).comment);
    let target = p(e.right() - c0.w + 1.0 + c0.w / 2.0, e.y + 20.0 + c0.h / 2.0);
    drag(&mut s, c0.center(), target);
    let after = Movable::bounds(&parts(&s).comment);
    ensure(after.x == e.right() - c0.w + 1.0 && after.y == e.y + 20.0, || format!("comment straddling the edge moved to {after:?}"))?;

    // Dominant resize that swallows a subordinate: pushed out on release.
    let mut s = Scene::new(WIDTH, HEIGHT);
    let dom = WidgetProxy::new(&mut s.ids, "main", Rect::new(100., 100., 120., 60.), (40., 30.), (300., 200.)).unwrap();
    let sub = WidgetProxy::new(&mut s.ids, "sub", Rect::new(110., 148., 30., 20.), (0., 0.), (0., 0.)).unwrap();
    let (did, sid) = (dom.meta.id, sub.meta.id);
    let dg = DominantGroup::new(&mut s.ids, dom, vec![sub]);
    s.add_top(dg);
    let handle = s
        .find(did)
        .and_then(|a| a.own_cover())
        .and_then(|c| c.node(mover_core::groups::widget::handles::B).and_then(rep_point))
        .ok_or("no bottom handle")?;
    let from = ip(handle);
    let to = from.offset(0.0, 80.0);
    s.replay(&[TraceEvent::Down(from, MouseButton::Left), TraceEvent::Move(to)]);
    let d = s.find(did).ok_or("dominant lost")?.bounds();
    let sb = s.find(sid).ok_or("subordinate lost")?.bounds();
    ensure(d.contains_rect(&sb), || format!("setup: subordinate {sb:?} not swallowed by {d:?}"))?;
    s.replay(&[TraceEvent::Up(to, MouseButton::Left)]);
    let d = s.find(did).ok_or("dominant lost")?.bounds();
    let sb = s.find(sid).ok_or("subordinate lost")?.bounds();
    ensure(!d.contains_rect(&sb), || format!("subordinate {sb:?} still inside {d:?} after release"))?;
    ensure(relocation_shift(sb, d).is_none(), || "relocated subordinate would move again".into())?;
    Ok("inside drop relocated once, 1 px overlap kept, swallowed subordinate pushed out on release".into())
}

// ----------------------------------------------- determinism and persistence

const ALL_TYPES: [&str; 30] = [
    "Rect", "FixedRatioRect", "Line", "SegmentedLine", "SectoredCircle", "Label", "RotRect", "RegularPoly",
    "ConvexPoly", "ChatoyantPoly", "NnodeCircle", "NnodeRing", "NnodeStrip", "Sector", "PartitionedRect",
    "PartitionedCircle", "HoleBoard", "Plug", "HoledPoly", "CommentedRect", "Widget", "CommentedElement",
    "DominantGroup", "LinkedRects", "ElasticGroup", "PlotLite", "SliderBoard", "BallBoard", "PolyWithBall", "Labyrinth",
];

const ALL_VERBS: [&str; 18] = [
    "hide", "show", "showall", "fix", "unfix", "lockmembers", "unlockmembers", "color", "top", "bottom", "up", "down",
    "switch", "resizing", "group", "ungroup", "delete", "clipping",
];

fn determinism_persistence() -> Result<String, String> {
    let mut types = BTreeSet::new();
    let mut verbs = BTreeSet::new();
    let mut cases = 0;
    for case in golden_cases() {
        let dir = golden_dir().join(case.name);
        let read = |f: &str| fs::read_to_string(dir.join(f)).map_err(|e| format!("{}/{f}: {e}", case.name));
        let scene_text = read("scene.mvs")?;
        let trace_text = read("trace.txt")?;
        let events = parse_trace(&trace_text).map_err(|e| e.to_string())?;
        let run = || -> Result<(String, String, String), String> {
            let mut s = load(&scene_text).map_err(|e| e.to_string())?;
            let log = s.replay(&events);
            Ok((log.to_string(), save(&s).map_err(|e| e.to_string())?, s.export_svg(true)))
        };
        let first = run()?;
        ensure(first == run()?, || format!("{}: two replays differ", case.name))?;
        for text in [&scene_text, &first.1] {
            let again = save(&load(text).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            ensure(&again == text, || format!("{}: save after load is not identical", case.name))?;
        }
        let s = load(&scene_text).map_err(|e| e.to_string())?;
        for o in &s.objects {
            let v = serde_json::to_value(o).map_err(|e| e.to_string())?;
            if let Some(t) = v.get("type").and_then(|t| t.as_str()) {
                types.insert(t.to_string());
            }
        }
        for line in trace_text.lines() {
            let mut it = line.split_whitespace();
            if it.next() == Some("CMD") {
                if let Some(v) = it.next() {
                    verbs.insert(v.to_string());
                }
            }
        }
        cases += 1;
    }
    let missing_types: Vec<_> = ALL_TYPES.iter().filter(|t| !types.contains(**t)).collect();
    ensure(missing_types.is_empty(), || format!("object types never exercised: {missing_types:?}"))?;
    let missing_verbs: Vec<_> = ALL_VERBS.iter().filter(|v| !verbs.contains(**v)).collect();
    ensure(missing_verbs.is_empty(), || format!("commands never exercised: {missing_verbs:?}"))?;
    Ok(format!("{cases} stored traces replay identically twice; save-load-save identical; all 30 object types and 18 commands covered"))
}

// ------------------------------------------------------------ disappearance

fn disappearance() -> Result<String, String> {
    let build = || {
        let mut s = Scene::new(WIDTH, HEIGHT);
        let r = RectShape::disappearing(&mut s.ids, Rect::new(300., 200., 100., 60.), RectRange::new(0., 300., 0., 300.));
        s.add_top(r);
        s
    };
    let mut s = build();
    let from = p(400., 230.);
    let mut evs = vec![TraceEvent::Down(from, MouseButton::Left)];
    for x in [380., 340., 310., 304.] {
        evs.push(TraceEvent::Move(p(x, 230.)));
    }
    let log = s.replay(&evs);
    ensure(caught(&log).is_some_and(|c| c.0 == 1 && c.1 == 5), || format!("right border not caught: {:?}", caught(&log)))?;
    let w = s.find(1).map(|a| a.bounds().w);
    ensure(w == Some(4.0), || format!("squeezed width {w:?}"))?;
    let log = step(&mut s, TraceEvent::Up(p(304., 230.), MouseButton::Left));
    ensure(log.entries.contains(&LogEntry::Removed(1)), || format!("no removal logged:\n{log}"))?;
    ensure(s.find(1).is_none() && !s.queue().contains(&1), || "squeezed rectangle still present".into())?;

    let mut r = rng(16);
    let mut s = build();
    for k in 0..30 {
        let c = s.find(1).ok_or("rectangle vanished after a whole move")?.bounds().center();
        let to = p(f64::from(r.gen_range(-100..900)), f64::from(r.gen_range(-100..700)));
        let log = s.replay(&[TraceEvent::Down(ip(c), MouseButton::Left), TraceEvent::Move(to), TraceEvent::Up(to, MouseButton::Left)]);
        ensure(caught(&log).is_some_and(|c| c.1 == 8), || format!("move {k}: whole node not caught"))?;
        ensure(s.find(1).is_some() && s.queue().contains(&1), || format!("move {k}: rectangle removed after a whole-area move"))?;
    }
    Ok("squeezed to 4 px and released: removed and dequeued; 30 whole-area moves: kept".into())
}
