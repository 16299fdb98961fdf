//! Geometric realization: convex layouts of the pieces, crossing pairs, and
//! recursive expansion of thick edges.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::augment::{augment_planarization, AugmentedEmbedding};
use super::contract::{contract, ContractionTree};
use super::convex::{is_strictly_convex, tutte_layout};
use super::embedding::OnePlaneEmbedding;
use super::map::{EdgeKind, Map, VertexKind};
use super::RacError;
use crate::constrained::{outside_pair, slope_curve};
use crate::drawing::{DeclaredCrossing, Drawing, DrawingEdge};
use crate::geometry::{
    intersect, orient, point_in_triangle, segment_intersection, AffineMap, ConvexPolygon, CubicBezier,
    Point, Rect,
};
use crate::math::sqrt;

/// Side length of the base edge of the top-level outer face.
const BASE: f64 = 100.0;
/// Shrink factor and relative floor for the thick-edge triangle search.
const SHRINK: f64 = 0.5;
const SHRINK_FLOOR: f64 = 1e-6;

/// A RAC drawing together with the construction scaffolding.
#[derive(Clone, Debug)]
pub struct RacLayout {
    pub drawing: Drawing,
    /// Original edge id of every output edge.
    pub edge_ids: Vec<usize>,
    /// Positions of all vertices of the augmented graph, helpers included;
    /// `None` for vertices removed during augmentation.
    pub positions: Vec<Option<Point>>,
    /// Curves of augmentation edges (drawn, but not part of the output).
    pub augmentation_curves: Vec<CubicBezier>,
    pub helper_vertices: Vec<usize>,
    pub tree: ContractionTree,
}

/// Draws `emb` with one cubic curve per edge and right-angle crossings.
pub fn draw_rac(emb: &OnePlaneEmbedding) -> Result<Drawing, RacError> {
    draw_rac_detailed(emb).map(|l| l.drawing)
}

pub fn draw_rac_detailed(emb: &OnePlaneEmbedding) -> Result<RacLayout, RacError> {
    let aug = augment_planarization(emb.planarize()?);
    let tree = contract(&aug)?;
    let mut st = State {
        pos: vec![None; aug.map.vertex_count()],
        drawn: Vec::new(),
        orig: BTreeMap::new(),
        extra: Vec::new(),
    };
    draw_piece(&tree, 0, None, &mut st)?;
    assemble(&aug, tree, st)
}

struct State {
    pos: Vec<Option<Point>>,
    /// Every curve drawn so far with its endpoint vertices.
    drawn: Vec<(CubicBezier, [usize; 2])>,
    /// Original edge id -> curve and the vertex at `p0`.
    orig: BTreeMap<usize, (CubicBezier, usize)>,
    extra: Vec<CubicBezier>,
}

impl State {
    fn at(&self, v: usize) -> Point {
        self.pos[v].expect("vertex placed before use")
    }

    fn record(&mut self, curve: CubicBezier, a: usize, b: usize, kind: EdgeKind) {
        self.drawn.push((curve, [a, b]));
        match kind.orig() {
            Some(id) => {
                self.orig.insert(id, (curve, a));
            }
            None => self.extra.push(curve),
        }
    }
}

/// The piece without its dummies and their segments.
fn strip_crossings(map: &Map) -> Map {
    let mut h = map.clone();
    let dummies: Vec<usize> = h.vertices().filter(|&v| h.is_dummy(v)).collect();
    for x in dummies {
        for e in h.rot[x].clone() {
            h.remove_edge(e);
        }
        h.remove_vertex(x);
    }
    h
}

fn draw_piece(tree: &ContractionTree, i: usize, apex: Option<Point>, st: &mut State) -> Result<(), RacError> {
    let node = &tree.nodes[i];
    let map = &node.map;

    // A real-real dart B -> A on the outer face of the planarization.
    let outer_face = map.face(node.outer);
    let base = *outer_face
        .iter()
        .find(|d| !map.is_dummy(d.v) && !map.is_dummy(map.head(**d)))
        .ok_or(RacError::FaceLength(outer_face.len()))?;
    let outer_dummy = outer_face.iter().map(|d| d.v).find(|&v| map.is_dummy(v));

    let h = strip_crossings(map);
    let walk: Vec<usize> = h.face(base).iter().map(|d| d.v).collect();
    // Counterclockwise outer cycle starting A, B.
    let mut outer: Vec<usize> = walk.iter().rev().copied().collect();
    let ia = outer.iter().position(|&v| v == map.head(base)).unwrap();
    outer.rotate_left(ia);
    let (a, b) = (outer[0], outer[1]);

    let (pa, pb) = match node.root {
        Some(_) => (st.at(a), st.at(b)),
        None => (Point::new(0.0, 0.0), Point::new(BASE, 0.0)),
    };
    let tip = apex.unwrap_or_else(|| {
        let mid = pa.midpoint(pb);
        let up = (pb - pa).perp();
        match outer.len() {
            3 => mid + up * (sqrt(3.0) / 2.0),
            _ => mid + up,
        }
    });

    let mut fixed = vec![(a, pa), (b, pb)];
    let mut outer_pair = None;
    match outer.len() {
        3 => fixed.push((outer[2], tip)),
        4 => {
            let x = outer_dummy.ok_or(RacError::FaceLength(4))?;
            let op = outside_pair(pa, pb, tip)?;
            fixed.push((outer[2], op.e));
            fixed.push((outer[3], op.f));
            outer_pair = Some((x, op));
        }
        len => return Err(RacError::FaceLength(len)),
    }

    let mut adj = vec![Vec::new(); h.vertex_count()];
    for e in h.edges() {
        let [u, v] = h.ends[e];
        adj[u].push(v);
        adj[v].push(u);
    }
    let layout = tutte_layout(&adj, &fixed)?;
    for v in h.vertices() {
        st.pos[v] = Some(layout[v]);
    }

    // Interior faces of H must be convex triangles or kites.
    let (faces, face_of) = h.faces();
    let outer_index = h.face_index(&face_of, base);
    for (fi, f) in faces.iter().enumerate() {
        if fi == outer_index {
            continue;
        }
        if !(3..=4).contains(&f.len()) {
            return Err(RacError::FaceLength(f.len()));
        }
        let poly: Vec<Point> = f.iter().map(|d| st.at(d.v)).collect();
        if !is_strictly_convex(&poly) {
            return Err(RacError::NonConvexFace(f[0].v));
        }
    }

    for e in h.edges() {
        if map.kind[e] == EdgeKind::Root {
            continue;
        }
        let [u, v] = h.ends[e];
        st.record(CubicBezier::line(st.at(u), st.at(v)), u, v, map.kind[e]);
    }

    if let Some((x, op)) = outer_pair {
        let (e_v, f_v) = (outer[2], outer[3]);
        st.pos[x] = Some(op.crossing);
        st.record(op.curve_ae, e_v, a, segment_kind(map, x, a));
        st.record(op.curve_bf, f_v, b, segment_kind(map, x, b));
    }

    let dummies: Vec<usize> = map
        .vertices()
        .filter(|&v| map.is_dummy(v) && Some(v) != outer_dummy)
        .collect();
    for x in dummies {
        let nb: Vec<usize> = map.rot[x].iter().map(|&e| map.other(e, x)).collect();
        let p: Vec<Point> = nb.iter().map(|&v| st.at(v)).collect();
        // Either diagonal may stay straight; keep the curve that stays
        // further from the sides of the kite.
        let mut best: Option<(f64, usize, Point, CubicBezier)> = None;
        for j in 0..2 {
            let q: Vec<Point> = (0..4).map(|k| p[(j + k) % 4]).collect();
            let (cross, curve) = kite_curve(&q)?;
            let c = clearance(&curve, &q);
            if best.as_ref().map_or(true, |b| c > b.0) {
                best = Some((c, j, cross, curve));
            }
        }
        let (_, j, cross, curve) = best.unwrap();
        st.pos[x] = Some(cross);
        let (c0, c2, s1, s3) = (nb[j], nb[j + 2], nb[j + 1], nb[(j + 3) % 4]);
        st.record(curve, c0, c2, map.kind[map.rot[x][j]]);
        st.record(CubicBezier::line(st.at(s1), st.at(s3)), s1, s3, map.kind[map.rot[x][j + 1]]);
    }

    for th in &node.thick {
        for &c in &th.children {
            let (pa, pb) = (st.at(th.a), st.at(th.b));
            let x = find_apex(pa, pb, th.a, th.b, st)?;
            draw_piece(tree, c, Some(x), st)?;
        }
    }
    Ok(())
}

/// Curve from `q[0]` to `q[2]` crossing the straight `q[1] q[3]` at a right
/// angle inside the convex quadrilateral `q`.
fn kite_curve(q: &[Point]) -> Result<(Point, CubicBezier), RacError> {
    let quad = ConvexPolygon::new(q.to_vec())?;
    let (s, _) = segment_intersection(q[0], q[2], q[1], q[3]).ok_or(RacError::Geometry(
        crate::geometry::GeometryError::InvalidPolygon("kite diagonals do not cross"),
    ))?;
    let cross = q[0].lerp(q[2], s);
    let frame = AffineMap::segment_to_unit(q[0], q[2])?;
    let normal = frame.apply_vector((q[3] - q[1]).perp());
    let spec = slope_curve(&quad, q[0], q[2], cross, normal.y / normal.x)?;
    Ok((cross, spec.curve))
}

/// Smallest distance from inner samples of `c` to the sides of `q`,
/// relative to the longest side. Samples outside `q` count as negative.
fn clearance(c: &CubicBezier, q: &[Point]) -> f64 {
    let scale = (0..4).map(|k| q[k].distance(q[(k + 1) % 4])).fold(0.0, f64::max);
    let mut best = f64::INFINITY;
    for i in 1..64 {
        let p = c.at(i as f64 / 64.0);
        for k in 0..4 {
            let (a, b) = (q[k], q[(k + 1) % 4]);
            let d = segment_distance(p, a, b);
            best = best.min(if orient(a, b, p) < 0.0 { -d } else { d });
        }
    }
    best / scale
}

fn segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let t = ((p - a).dot(ab) / ab.hypot2()).clamp(0.0, 1.0);
    p.distance(a + ab * t)
}

/// Kind of the crossing segment at dummy `x` whose far end is `v`.
fn segment_kind(map: &Map, x: usize, v: usize) -> EdgeKind {
    map.rot[x]
        .iter()
        .find(|&&e| map.other(e, x) == v)
        .map_or(EdgeKind::Augment, |&e| map.kind[e])
}

/// Apex of an empty isosceles triangle to the left of `a -> b`, halving the
/// height from `|ab|` until nothing drawn so far meets it.
fn find_apex(a: Point, b: Point, ia: usize, ib: usize, st: &State) -> Result<Point, RacError> {
    let len = a.distance(b);
    let mid = a.midpoint(b);
    let up = (b - a).perp() * (1.0 / len);
    let mut h = len;
    while h >= SHRINK_FLOOR * len {
        let x = mid + up * h;
        if triangle_is_empty(a, b, x, ia, ib, st) {
            return Ok(x);
        }
        h *= SHRINK;
    }
    Err(RacError::RegionExhausted { u: ia, v: ib })
}

fn triangle_is_empty(a: Point, b: Point, x: Point, ia: usize, ib: usize, st: &State) -> bool {
    let len = a.distance(b);
    let tol = 1e-9 * len;
    let bbox = Rect::from_points(&[a, b, x]).inflate(tol);
    for (v, p) in st.pos.iter().enumerate() {
        if let Some(p) = p {
            if v != ia && v != ib && point_in_triangle(*p, a, b, x, tol) {
                return false;
            }
        }
    }
    let sides = [CubicBezier::line(a, x), CubicBezier::line(x, b)];
    for (c, ends) in &st.drawn {
        if ends.contains(&ia) && ends.contains(&ib) {
            continue;
        }
        if !c.control_box().overlaps(&bbox) {
            continue;
        }
        for k in 1..16 {
            let q = c.at(k as f64 / 16.0);
            if point_in_triangle(q, a, b, x, -tol) {
                return false;
            }
        }
        for s in &sides {
            match intersect(c, s, tol) {
                Ok(hits) => match hits.points() {
                    Some(hits) => {
                        if hits
                            .iter()
                            .any(|h| h.point.distance(a) > 1e3 * tol && h.point.distance(b) > 1e3 * tol)
                        {
                            return false;
                        }
                    }
                    None => return false,
                },
                Err(_) => return false,
            }
        }
    }
    true
}

fn assemble(aug: &AugmentedEmbedding, tree: ContractionTree, st: State) -> Result<RacLayout, RacError> {
    let mut pos = st.pos.clone();
    let mut edges = Vec::with_capacity(aug.edges.len());
    let mut edge_ids = Vec::with_capacity(aug.edges.len());
    let mut index = BTreeMap::new();
    for oe in &aug.edges {
        let (curve, start) = st.orig.get(&oe.id).copied().ok_or(RacError::Empty)?;
        let curve = if start == oe.u { curve } else { curve.reversed() };
        index.insert(oe.id, edges.len());
        edges.push(DrawingEdge {
            u: oe.u,
            v: oe.v,
            curve,
        });
        edge_ids.push(oe.id);
    }
    // Dissolved dummies have no crossing left; park them on the midpoint
    // of the edge that used to pass through them.
    for &(y, through) in &aug.dissolved {
        pos[y] = Some(edges[index[&through]].curve.at(0.5));
    }
    let crossings = aug
        .crossings
        .iter()
        .map(|(&x, &(e1, e2))| DeclaredCrossing {
            e1: index[&e1],
            e2: index[&e2],
            point: pos[x].unwrap_or(Point::ORIGIN),
        })
        .collect();
    let vertices = (0..aug.n).map(|v| pos[v].unwrap_or(Point::ORIGIN)).collect();
    let helper_vertices = aug
        .map
        .vertices()
        .filter(|&v| aug.map.vkind[v] == VertexKind::Helper)
        .collect();
    Ok(RacLayout {
        drawing: Drawing {
            vertices,
            edges,
            crossings,
        },
        edge_ids,
        positions: pos,
        augmentation_curves: st.extra,
        helper_vertices,
        tree,
    })
}
