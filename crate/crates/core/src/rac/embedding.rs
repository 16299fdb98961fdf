use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::map::{Dart, EdgeKind, Map, VertexKind};
use crate::geometry::{segment_intersection, Point};
use crate::math::atan2;

/// A combinatorial 1-plane embedding, given by its planarization.
///
/// Every crossing is a degree-4 dummy vertex. `rotation[v]` lists the
/// segment ids around `v` counterclockwise; each segment id occurs at
/// exactly two vertices. At a dummy with rotation `[s0, s1, s2, s3]`,
/// segments `s0, s2` form one original edge and `s1, s3` the other. An
/// original edge is identified by the smallest id among its segments.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OnePlaneEmbedding {
    pub n: usize,
    pub rotation: Vec<Vec<usize>>,
    pub dummies: Vec<usize>,
    /// Pairs of crossing original edges.
    pub crossing_pairs: Vec<(usize, usize)>,
    /// The outer face, as the face to the left of the dart leaving
    /// `vertex` along `segment`. Defaults to the first segment of vertex 0.
    pub outer_face: Option<(usize, usize)>,
}

/// Violations of the embedding invariants.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EmbeddingError {
    #[error("rotation has {found} lists but n = {n}")]
    RotationCount { n: usize, found: usize },
    #[error("dummy vertex {0} is out of range")]
    DummyOutOfRange(usize),
    #[error("segment {segment} appears {count} times (must be exactly 2)")]
    SegmentEnds { segment: usize, count: usize },
    #[error("segment {0} is a loop")]
    Loop(usize),
    #[error("the planarization is not connected")]
    Disconnected,
    #[error("Euler check failed: V - E + F = {v} - {e} + {f} != 2")]
    Euler { v: usize, e: usize, f: usize },
    #[error("dummy vertex {vertex} has degree {degree} (must be 4)")]
    DummyDegree { vertex: usize, degree: usize },
    #[error("dummy vertex {0} is adjacent to another dummy (an edge crosses twice)")]
    AdjacentDummies(usize),
    #[error("the crossing at dummy {0} does not have four distinct endpoints")]
    CrossingEndpoints(usize),
    #[error("crossing_pairs do not match the dummies: {0}")]
    CrossingPairs(&'static str),
    #[error("original graph is not simple: two edges join {u} and {v}")]
    NotSimple { u: usize, v: usize },
    #[error("edge {0} is crossed more than once")]
    MultipleCrossings(usize),
    #[error("outer face dart ({vertex}, {segment}) does not exist")]
    OuterFace { vertex: usize, segment: usize },
}

/// An edge of the original graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OriginalEdge {
    pub id: usize,
    pub u: usize,
    pub v: usize,
    /// Crossing dummy, if the edge is crossed.
    pub dummy: Option<usize>,
}

/// A validated embedding in internal form.
#[derive(Clone, Debug)]
pub(crate) struct Planarization {
    pub map: Map,
    pub outer: Option<Dart>,
    /// Original edges by ascending id.
    pub edges: Vec<OriginalEdge>,
    /// For each dummy, the two original edge ids crossing there.
    pub crossings: BTreeMap<usize, (usize, usize)>,
    pub n: usize,
}

impl OnePlaneEmbedding {
    /// Reads the embedding off a straight-line drawing in which every edge
    /// is crossed at most once, properly.
    ///
    /// Crossings become dummies `points.len()..`. An uncrossed edge `i` is
    /// segment `i`; a crossed edge keeps id `i` for the half at its first
    /// endpoint and gets a fresh id above `edges.len()` for the other. The
    /// outer face is the face of negative signed area.
    pub fn from_straight_line(points: &[Point], edges: &[(usize, usize)]) -> Result<OnePlaneEmbedding, EmbeddingError> {
        let n0 = points.len();
        let m = edges.len();
        let seg = |i: usize| (points[edges[i].0], points[edges[i].1]);
        let mut crossed: Vec<Option<usize>> = vec![None; m];
        let mut pos: Vec<Point> = points.to_vec();
        let mut pairs = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let (a, b) = seg(i);
                let (c, d) = seg(j);
                let Some((s, u)) = segment_intersection(a, b, c, d) else { continue };
                let inner = |t: f64| t > 1e-12 && t < 1.0 - 1e-12;
                if !inner(s) || !inner(u) {
                    continue;
                }
                for k in [i, j] {
                    if crossed[k].is_some() {
                        return Err(EmbeddingError::MultipleCrossings(k));
                    }
                    crossed[k] = Some(pos.len());
                }
                pos.push(a.lerp(b, s));
                pairs.push((i, j));
            }
        }
        let n = pos.len();
        // Segment list: (id, end, end).
        let mut segments: Vec<(usize, usize, usize)> = Vec::new();
        let mut next = m;
        for (i, &(u, v)) in edges.iter().enumerate() {
            match crossed[i] {
                None => segments.push((i, u, v)),
                Some(x) => {
                    segments.push((i, u, x));
                    segments.push((next, x, v));
                    next += 1;
                }
            }
        }
        let mut around: Vec<Vec<(f64, usize)>> = vec![Vec::new(); n];
        for &(id, u, v) in &segments {
            for (a, b) in [(u, v), (v, u)] {
                let d = pos[b] - pos[a];
                around[a].push((atan2(d.y, d.x), id));
            }
        }
        let rotation: Vec<Vec<usize>> = around
            .into_iter()
            .map(|mut l| {
                l.sort_by(|p, q| p.0.total_cmp(&q.0));
                l.into_iter().map(|(_, id)| id).collect()
            })
            .collect();
        let mut emb = OnePlaneEmbedding {
            n,
            rotation,
            dummies: (n0..n).collect(),
            crossing_pairs: pairs,
            outer_face: None,
        };
        let pz = emb.planarize()?;
        let (faces, _) = pz.map.faces();
        let area = |f: &Vec<Dart>| {
            f.iter()
                .map(|d| pos[d.v].cross(pos[pz.map.head(*d)]))
                .sum::<f64>()
        };
        if let Some(f) = faces.iter().min_by(|a, b| area(a).total_cmp(&area(b))) {
            // Segment ids are dense, so internal and external ids agree.
            emb.outer_face = Some((f[0].v, f[0].e));
        }
        Ok(emb)
    }

    /// Checks every invariant and returns the original edges.
    pub fn validate(&self) -> Result<Vec<OriginalEdge>, EmbeddingError> {
        self.planarize().map(|p| p.edges)
    }

    pub(crate) fn planarize(&self) -> Result<Planarization, EmbeddingError> {
        let n = self.n;
        if self.rotation.len() != n {
            return Err(EmbeddingError::RotationCount {
                n,
                found: self.rotation.len(),
            });
        }
        let mut vkind = vec![VertexKind::Real; n];
        for &d in &self.dummies {
            if d >= n {
                return Err(EmbeddingError::DummyOutOfRange(d));
            }
            vkind[d] = VertexKind::Dummy;
        }

        // Segment id -> the vertices it appears at.
        let mut seen: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, list) in self.rotation.iter().enumerate() {
            for &s in list {
                seen.entry(s).or_default().push(v);
            }
        }
        let mut map = Map::new(vkind);
        let mut internal: BTreeMap<usize, usize> = BTreeMap::new();
        let mut external: Vec<usize> = Vec::new();
        for (&s, at) in &seen {
            if at.len() != 2 {
                return Err(EmbeddingError::SegmentEnds {
                    segment: s,
                    count: at.len(),
                });
            }
            if at[0] == at[1] {
                return Err(EmbeddingError::Loop(s));
            }
            let e = map.add_edge(at[0], at[1], EdgeKind::Augment);
            internal.insert(s, e);
            external.push(s);
        }
        for (v, list) in self.rotation.iter().enumerate() {
            map.rot[v] = list.iter().map(|s| internal[s]).collect();
        }

        // Original edges: uncrossed segments, and segment pairs through dummies.
        let mut edges: Vec<OriginalEdge> = Vec::new();
        let mut crossings = BTreeMap::new();
        for &x in &self.dummies {
            let r = &map.rot[x];
            if r.len() != 4 {
                return Err(EmbeddingError::DummyDegree {
                    vertex: x,
                    degree: r.len(),
                });
            }
            let nb: Vec<usize> = r.iter().map(|&e| map.other(e, x)).collect();
            if nb.iter().any(|&w| map.is_dummy(w)) {
                return Err(EmbeddingError::AdjacentDummies(x));
            }
            let distinct: BTreeSet<usize> = nb.iter().copied().collect();
            if distinct.len() != 4 {
                return Err(EmbeddingError::CrossingEndpoints(x));
            }
            let r = r.clone();
            let mut ids = [0usize; 2];
            for j in 0..2 {
                let (sa, sb) = (r[j], r[j + 2]);
                let id = external[sa].min(external[sb]);
                ids[j] = id;
                map.kind[sa] = EdgeKind::Original(id);
                map.kind[sb] = EdgeKind::Original(id);
                edges.push(OriginalEdge {
                    id,
                    u: nb[j].min(nb[j + 2]),
                    v: nb[j].max(nb[j + 2]),
                    dummy: Some(x),
                });
            }
            crossings.insert(x, (ids[0].min(ids[1]), ids[0].max(ids[1])));
        }
        for e in 0..map.ends.len() {
            let [a, b] = map.ends[e];
            if !map.is_dummy(a) && !map.is_dummy(b) {
                let id = external[e];
                map.kind[e] = EdgeKind::Original(id);
                edges.push(OriginalEdge {
                    id,
                    u: a.min(b),
                    v: a.max(b),
                    dummy: None,
                });
            }
        }
        edges.sort_by_key(|e| e.id);

        if !map.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        let (ok, v, e, f) = map.euler_ok();
        if !ok {
            return Err(EmbeddingError::Euler { v, e, f });
        }

        let mut declared: Vec<(usize, usize)> = self
            .crossing_pairs
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        declared.sort_unstable();
        let mut derived: Vec<(usize, usize)> = crossings.values().copied().collect();
        derived.sort_unstable();
        if declared != derived {
            return Err(EmbeddingError::CrossingPairs(
                "each dummy must be listed once as the pair of edges crossing there",
            ));
        }

        let mut pairs = BTreeSet::new();
        for e in &edges {
            if !pairs.insert((e.u, e.v)) {
                return Err(EmbeddingError::NotSimple { u: e.u, v: e.v });
            }
        }

        let outer = match self.outer_face {
            Some((vertex, segment)) => {
                let e = internal
                    .get(&segment)
                    .copied()
                    .filter(|&e| vertex < n && map.ends[e].contains(&vertex))
                    .ok_or(EmbeddingError::OuterFace { vertex, segment })?;
                Some(Dart { v: vertex, e })
            }
            None => map
                .vertices()
                .find(|&v| !map.rot[v].is_empty())
                .map(|v| Dart { v, e: map.rot[v][0] }),
        };

        Ok(Planarization {
            map,
            outer,
            edges,
            crossings,
            n,
        })
    }
}
