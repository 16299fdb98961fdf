//! Planar drawings with one cubic curve per edge, built from a joint-box
//! (one-bend) grid layout.
//!
//! Every vertex `v` of a [`JointBoxDrawing`] owns a diamond of half-width
//! `2 deg(v) + 2`. Seen from `v`, the plane splits into eight sectors of
//! `pi/4`, counterclockwise from the positive x-axis:
//!
//! | sector      | 0-45   | 45-90 | 90-135 | 135-180 | 180-225 | 225-270 | 270-315 | 315-360 |
//! |-------------|--------|-------|--------|---------|---------|---------|---------|---------|
//! | region      | port R | free M| free M | port L  | free L  | port M  | port M  | free R  |
//!
//! An edge leaves its port endpoint `A` through one of `d = deg(A)` ports and
//! enters its other endpoint `B` through a free region. A similarity moves
//! `A` to the origin and the port sector onto `0 <= y < x`; there the edge is
//! drawn as [`gamma_curve`].

mod fixtures;

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::drawing::{Drawing, DrawingEdge};
use crate::geometry::{AffineMap, CubicBezier, GeometryError, Point};

pub use fixtures::{make_fixture, FIXTURE_NAMES};

/// Port regions of a joint box. The middle region is split at the bottom
/// corner into two halves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PortRegion {
    L,
    R,
    MLeft,
    MRight,
}

/// Free regions of a joint box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FreeRegion {
    L,
    R,
    M,
}

impl PortRegion {
    /// Straight down belongs to both middle halves; listing `MRight` first
    /// settles it there.
    pub const ALL: [PortRegion; 4] = [PortRegion::R, PortRegion::L, PortRegion::MRight, PortRegion::MLeft];

    /// Linear part of the map from drawing directions to the normalized
    /// frame, where the port sector becomes `0 <= angle < pi/4`.
    fn linear(self) -> [[f64; 2]; 2] {
        match self {
            PortRegion::R => [[1.0, 0.0], [0.0, 1.0]],
            PortRegion::L => [[-1.0, 0.0], [0.0, 1.0]],
            PortRegion::MRight => [[0.0, -1.0], [1.0, 0.0]],
            PortRegion::MLeft => [[0.0, -1.0], [-1.0, 0.0]],
        }
    }

    /// The free region an edge through this port must end in.
    pub fn partner(self) -> FreeRegion {
        match self {
            PortRegion::L => FreeRegion::R,
            PortRegion::R => FreeRegion::L,
            PortRegion::MLeft | PortRegion::MRight => FreeRegion::M,
        }
    }
}

/// One edge of a joint-box layout.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JointBoxEdge {
    /// Port endpoint.
    pub a: usize,
    pub port: PortRegion,
    /// Port number, `1..=deg(a)`, counted from the middle of the side of
    /// the box that carries the port.
    pub index: usize,
    /// Free endpoint.
    pub b: usize,
    pub free: FreeRegion,
    /// The bend of the one-bend polyline: the port on the joint box of `a`.
    pub bend: (i64, i64),
}

/// A one-bend grid drawing with joint boxes.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct JointBoxDrawing {
    pub positions: Vec<(i64, i64)>,
    pub edges: Vec<JointBoxEdge>,
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum PlanarError {
    #[error("{name} = {value} is outside its domain")]
    Domain { name: &'static str, value: f64 },
    #[error("edge {edge} references vertex {vertex}, but there are only {count} vertices")]
    VertexOutOfRange { edge: usize, vertex: usize, count: usize },
    #[error("edge {0} is a loop")]
    Loop(usize),
    #[error("edge {edge} uses port {index}, but its port vertex has degree {degree}")]
    PortIndex { edge: usize, index: usize, degree: usize },
    #[error("vertex {vertex} uses port {index} of region {region:?} twice")]
    DuplicatePort { vertex: usize, region: PortRegion, index: usize },
    #[error("edge {0} pairs a port region with an incompatible free region")]
    Incompatible(usize),
    #[error("edge {0} leaves the wedge 0 <= y < x - 1 of its port region")]
    OutsideWedge(usize),
    #[error("edge {0} has a bend that is not its port")]
    BendMismatch(usize),
    #[error("joint boxes of vertices {0} and {1} overlap")]
    OverlappingBoxes(usize, usize),
    #[error("vertex {0} receives edges in both halves of its free M region")]
    MixedFreeM(usize),
    #[error("edge {0} runs along a diagonal, so it has no port region")]
    Diagonal(usize),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

impl JointBoxDrawing {
    pub fn vertex_count(&self) -> usize {
        self.positions.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.positions.len()];
        for e in &self.edges {
            if e.a < deg.len() {
                deg[e.a] += 1;
            }
            if e.b < deg.len() {
                deg[e.b] += 1;
            }
        }
        deg
    }

    pub fn position(&self, v: usize) -> Point {
        let (x, y) = self.positions[v];
        Point::new(x as f64, y as f64)
    }

    /// Larger side of the bounding box of all vertex positions.
    pub fn grid_width(&self) -> i64 {
        let span = |f: fn(&(i64, i64)) -> i64| {
            let lo = self.positions.iter().map(f).min().unwrap_or(0);
            let hi = self.positions.iter().map(f).max().unwrap_or(0);
            hi - lo
        };
        span(|p| p.0).max(span(|p| p.1))
    }

    /// Grid position of port `index` of `region` on the joint box of a
    /// vertex at `at` with degree `d`.
    pub fn port_point(at: (i64, i64), d: usize, region: PortRegion, index: usize) -> (i64, i64) {
        let (d, i) = (d as i64, index as i64);
        let (u, w) = (d + 1 + i, d + 1 - i);
        // The linear parts are orthogonal, so the inverse is the transpose.
        let m = region.linear();
        let x = m[0][0] as i64 * u + m[1][0] as i64 * w;
        let y = m[0][1] as i64 * u + m[1][1] as i64 * w;
        (at.0 + x, at.1 + y)
    }

    /// Checks the joint-box invariants: indices in range, compatible
    /// regions, far endpoints inside the port wedge, ports used once, bends
    /// on their ports, disjoint boxes and one active free M half per vertex.
    pub fn validate(&self) -> Result<(), PlanarError> {
        let count = self.positions.len();
        for (i, e) in self.edges.iter().enumerate() {
            for vertex in [e.a, e.b] {
                if vertex >= count {
                    return Err(PlanarError::VertexOutOfRange { edge: i, vertex, count });
                }
            }
            if e.a == e.b {
                return Err(PlanarError::Loop(i));
            }
        }
        let deg = self.degrees();
        let mut used = BTreeSet::new();
        // Per vertex: the port half at the far end of its free M edges.
        let mut free_m: Vec<Option<PortRegion>> = vec![None; count];
        for (i, e) in self.edges.iter().enumerate() {
            if e.index == 0 || e.index > deg[e.a] {
                return Err(PlanarError::PortIndex { edge: i, index: e.index, degree: deg[e.a] });
            }
            if e.port.partner() != e.free {
                return Err(PlanarError::Incompatible(i));
            }
            if !used.insert((e.a, e.port, e.index)) {
                return Err(PlanarError::DuplicatePort { vertex: e.a, region: e.port, index: e.index });
            }
            let b = normalize_edge(e, self)?.apply_point(self.position(e.b));
            if !(b.y >= 0.0 && b.y < b.x - 1.0) {
                return Err(PlanarError::OutsideWedge(i));
            }
            if e.bend != Self::port_point(self.positions[e.a], deg[e.a], e.port, e.index) {
                return Err(PlanarError::BendMismatch(i));
            }
            if e.free == FreeRegion::M {
                match free_m[e.b] {
                    Some(h) if h != e.port => return Err(PlanarError::MixedFreeM(e.b)),
                    _ => free_m[e.b] = Some(e.port),
                }
            }
        }
        for u in 0..count {
            for v in u + 1..count {
                let (pu, pv) = (self.positions[u], self.positions[v]);
                let l1 = (pu.0 - pv.0).abs() + (pu.1 - pv.1).abs();
                let reach = 2 * deg[u] as i64 + 2 + 2 * deg[v] as i64 + 2;
                if l1 <= reach {
                    return Err(PlanarError::OverlappingBoxes(u, v));
                }
            }
        }
        Ok(())
    }

    /// Builds a joint-box drawing from vertex positions and an edge list.
    ///
    /// The direction of each edge decides which endpoint holds the port and
    /// which region it uses; no edge may be parallel to a diagonal. Ports in
    /// a region are numbered in angular order starting at 1. The result is
    /// validated.
    pub fn from_layout(positions: Vec<(i64, i64)>, edges: &[(usize, usize)]) -> Result<JointBoxDrawing, PlanarError> {
        let count = positions.len();
        let mut staged = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= count {
                    return Err(PlanarError::VertexOutOfRange { edge: i, vertex, count });
                }
            }
            if u == v {
                return Err(PlanarError::Loop(i));
            }
            let (a, b, port) = match port_sector(positions[u], positions[v]) {
                Some(r) => (u, v, r),
                None => match port_sector(positions[v], positions[u]) {
                    Some(r) => (v, u, r),
                    None => return Err(PlanarError::Diagonal(i)),
                },
            };
            staged.push((a, b, port));
        }
        let mut jbd = JointBoxDrawing {
            positions,
            edges: Vec::with_capacity(staged.len()),
        };
        for &(a, b, port) in &staged {
            jbd.edges.push(JointBoxEdge {
                a,
                port,
                index: 0,
                b,
                free: port.partner(),
                bend: (0, 0),
            });
        }
        let deg = jbd.degrees();
        for a in 0..count {
            for port in PortRegion::ALL {
                let mut group: Vec<(f64, usize)> = (0..jbd.edges.len())
                    .filter(|&e| jbd.edges[e].a == a && jbd.edges[e].port == port)
                    .map(|e| {
                        let m = normalized_linear(port);
                        let q = m.apply_vector(jbd.position(jbd.edges[e].b) - jbd.position(a));
                        (q.y / q.x, e)
                    })
                    .collect();
                // Steeper edges take the ports nearer the corner.
                group.sort_by(|x, y| y.0.total_cmp(&x.0));
                for (n, &(_, e)) in group.iter().enumerate() {
                    let edge = &mut jbd.edges[e];
                    edge.index = n + 1;
                    edge.bend = Self::port_point(jbd.positions[a], deg[a], port, n + 1);
                }
            }
        }
        jbd.validate()?;
        Ok(jbd)
    }
}

/// The port region of `from` whose sector contains the direction to `to`.
fn port_sector(from: (i64, i64), to: (i64, i64)) -> Option<PortRegion> {
    let (dx, dy) = (to.0 - from.0, to.1 - from.1);
    PortRegion::ALL.into_iter().find(|&r| {
        let m = r.linear();
        let x = m[0][0] as i64 * dx + m[0][1] as i64 * dy;
        let y = m[1][0] as i64 * dx + m[1][1] as i64 * dy;
        y >= 0 && y < x
    })
}

fn normalized_linear(region: PortRegion) -> AffineMap {
    AffineMap {
        linear: region.linear(),
        translation: Point::ORIGIN,
    }
}

/// The similarity taking `edge` to its normalized pose: the port endpoint at
/// the origin and the port sector onto `0 <= y < x`, so that port `i` of a
/// degree-`d` vertex sits at `(d + 1 + i, d + 1 - i)`.
pub fn normalize_edge(edge: &JointBoxEdge, jbd: &JointBoxDrawing) -> Result<AffineMap, PlanarError> {
    let count = jbd.positions.len();
    if edge.a >= count {
        return Err(PlanarError::VertexOutOfRange { edge: 0, vertex: edge.a, count });
    }
    let lin = normalized_linear(edge.port);
    Ok(lin.compose(&AffineMap::translate(-jbd.position(edge.a))))
}

/// Parameters of the curve for an edge whose far endpoint is `(b1, b2)` in
/// the normalized frame.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeCurveParams {
    pub b1: f64,
    pub b2: f64,
    pub s: f64,
    pub i: usize,
    pub d: usize,
    pub k: f64,
    pub q: Point,
    pub p: Point,
}

impl EdgeCurveParams {
    pub fn new(b1: f64, b2: f64, i: usize, d: usize) -> Result<EdgeCurveParams, PlanarError> {
        if !(b1 > 1.0) || !b1.is_finite() {
            return Err(PlanarError::Domain { name: "b1", value: b1 });
        }
        if !(b2 >= 0.0 && b2 < b1 - 1.0) {
            return Err(PlanarError::Domain { name: "b2", value: b2 });
        }
        if d == 0 || i == 0 || i > d {
            return Err(PlanarError::Domain { name: "i", value: i as f64 });
        }
        let s = b2 / b1;
        let k = i as f64 / (d + 1) as f64;
        let q = Point::new(1.0, 0.0).lerp(Point::new(1.5, 0.5), s);
        let p = Point::new(1.0, 1.0).lerp(q, k);
        Ok(EdgeCurveParams { b1, b2, s, i, d, k, q, p })
    }

    pub fn curve(&self) -> CubicBezier {
        CubicBezier::new(Point::ORIGIN, self.p, self.p, Point::new(self.b1, self.b2))
    }
}

/// The cubic from the origin to `(b1, b2)` with the repeated control point
/// `P = (1 - k)(1, 1) + k Q`, `Q = (1 - s)(1, 0) + s (3/2, 1/2)`,
/// `s = b2 / b1`, `k = i / (d + 1)`.
pub fn gamma_curve(b1: f64, b2: f64, i: usize, d: usize) -> Result<CubicBezier, PlanarError> {
    Ok(EdgeCurveParams::new(b1, b2, i, d)?.curve())
}

/// Replaces every one-bend edge of `jbd` by its normalized curve mapped back
/// into the grid. Vertex positions are kept and edge `j` of the result is
/// edge `j` of `jbd`, oriented from its port endpoint.
pub fn draw_planar(jbd: &JointBoxDrawing) -> Result<Drawing, PlanarError> {
    jbd.validate()?;
    let deg = jbd.degrees();
    let vertices: Vec<Point> = (0..jbd.vertex_count()).map(|v| jbd.position(v)).collect();
    let mut edges = Vec::with_capacity(jbd.edges.len());
    for e in &jbd.edges {
        let map = normalize_edge(e, jbd)?;
        let b = map.apply_point(vertices[e.b]);
        let local = gamma_curve(b.x, b.y, e.index, deg[e.a])?;
        let mut curve = map.inverse()?.apply(&local)?;
        // Endpoints are grid points; pin them against rounding.
        curve.p0 = vertices[e.a];
        curve.p3 = vertices[e.b];
        edges.push(DrawingEdge {
            u: e.a,
            v: e.b,
            curve,
        });
    }
    Ok(Drawing {
        vertices,
        edges,
        crossings: Vec::new(),
    })
}
