//! Kite augmentation and triangulation of the planarization.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::embedding::{OnePlaneEmbedding, OriginalEdge, Planarization};
use super::map::{Dart, EdgeKind, Map, VertexKind};
use super::RacError;

/// A triangulated planarization in which every crossing sits inside an
/// empty kite.
#[derive(Clone, Debug)]
pub struct AugmentedEmbedding {
    pub(crate) map: Map,
    pub(crate) outer: Option<Dart>,
    pub(crate) edges: Vec<OriginalEdge>,
    /// Live crossings: dummy -> the two original edge ids.
    pub(crate) crossings: BTreeMap<usize, (usize, usize)>,
    /// Dummies dissolved because a crossed edge had an uncrossed twin, with
    /// the original edge that still runs through them.
    pub(crate) dissolved: Vec<(usize, usize)>,
    pub(crate) n: usize,
}

impl AugmentedEmbedding {
    /// Lengths of all faces of the planarization.
    pub fn face_lengths(&self) -> Vec<usize> {
        self.map.faces().0.iter().map(Vec::len).collect()
    }

    /// Vertices including dummies and star-triangulation apices.
    pub fn vertex_count(&self) -> usize {
        self.map.live_vertex_count()
    }

    pub fn helper_count(&self) -> usize {
        self.map
            .vertices()
            .filter(|&v| self.map.vkind[v] == VertexKind::Helper)
            .count()
    }

    /// Endpoints of all edges added by the augmentation.
    pub fn augmentation_edges(&self) -> Vec<(usize, usize)> {
        self.map
            .edges()
            .filter(|&e| self.map.kind[e] == EdgeKind::Augment)
            .map(|e| {
                let [a, b] = self.map.ends[e];
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// Crossing pairs that are still present.
    pub fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        self.crossings.values().copied().collect()
    }

    /// Whether an augmentation edge joins `u` and `v`.
    pub fn has_augmentation_edge(&self, u: usize, v: usize) -> bool {
        self.augmentation_edges().contains(&(u.min(v), u.max(v)))
    }
}

/// Kite-augments and triangulates `emb`.
///
/// 1. Around every crossing, each wedge whose face is not a triangle gets an
///    edge between the two neighbouring endpoints, closing the kite.
/// 2. A crossed edge with an uncrossed twin is dropped; its twin carries the
///    original edge and the crossing disappears.
/// 3. Faces of length 2 are removed, augmentation edges first, until none
///    remain.
/// 4. Every face longer than 3 (or bounded by a single bridge) gets an apex
///    joined to all of its corners.
pub fn augment(emb: &OnePlaneEmbedding) -> Result<AugmentedEmbedding, RacError> {
    let pz = emb.planarize()?;
    Ok(augment_planarization(pz))
}

pub(crate) fn augment_planarization(pz: Planarization) -> AugmentedEmbedding {
    let Planarization {
        mut map,
        mut outer,
        mut edges,
        mut crossings,
        n,
    } = pz;

    let dummies: Vec<usize> = crossings.keys().copied().collect();
    for &x in &dummies {
        insert_kite(&mut map, x);
    }

    let mut dissolved = Vec::new();
    for &y in &dummies {
        if let Some(twin) = crossed_twin(&map, y) {
            let through = dissolve(&mut map, y, twin, &mut outer);
            crossings.remove(&y);
            dissolved.push((y, through));
            for e in edges.iter_mut().filter(|e| e.dummy == Some(y)) {
                e.dummy = None;
            }
        }
    }

    remove_two_faces(&mut map, &mut outer);
    star_triangulate(&mut map);

    AugmentedEmbedding {
        map,
        outer,
        edges,
        crossings,
        dissolved,
        n,
    }
}

fn insert_kite(map: &mut Map, x: usize) {
    for j in 0..4 {
        let sj = map.rot[x][j];
        let sk = map.rot[x][(j + 1) % 4];
        if map.face(Dart { v: x, e: sj }).len() == 3 {
            continue;
        }
        let nj = map.other(sj, x);
        let nk = map.other(sk, x);
        let g = map.add_edge(nj, nk, EdgeKind::Augment);
        map.insert_before(nj, sj, g);
        map.insert_after(nk, sk, g);
    }
}

/// A crossed edge at `y` that has an uncrossed augmentation edge between
/// its endpoints: returns (segment slot index 0 or 1 at `y`, twin edge).
fn crossed_twin(map: &Map, y: usize) -> Option<(usize, usize)> {
    if map.rot[y].len() != 4 {
        return None;
    }
    for j in 0..2 {
        let a = map.other(map.rot[y][j], y);
        let b = map.other(map.rot[y][j + 2], y);
        let twin = map.rot[a].iter().copied().find(|&e| {
            map.kind[e] == EdgeKind::Augment && map.other(e, a) == b
        });
        if let Some(t) = twin {
            return Some((j, t));
        }
    }
    None
}

/// Drops the crossed edge through `y` that has twin `t`, hands its identity
/// to `t`, and merges the other edge's two segments into one.
/// Returns the id of the merged edge.
fn dissolve(map: &mut Map, y: usize, (j, t): (usize, usize), outer: &mut Option<Dart>) -> usize {
    let segs = map.rot[y].clone();
    let (sa, sb) = (segs[j], segs[j + 2]);
    let (sc, sd) = (segs[(j + 1) % 4], segs[(j + 3) % 4]);
    let orig_a = map.kind[sa];
    let orig_c = map.kind[sc];
    map.kind[t] = orig_a;
    let c = map.other(sc, y);
    let d = map.other(sd, y);
    let merged = map.add_edge(c, d, orig_c);
    let ic = map.index_in_rot(c, sc);
    map.rot[c][ic] = merged;
    let id = map.index_in_rot(d, sd);
    map.rot[d][id] = merged;
    map.rot[y].clear();
    for s in [sa, sb, sc, sd] {
        map.remove_edge(s);
    }
    map.remove_vertex(y);
    if let Some(o) = outer {
        if !map.alive[o.e] {
            *o = Dart {
                v: c,
                e: merged,
            };
        }
    }
    orig_c.orig().expect("crossing segments carry their original edge")
}

fn remove_two_faces(map: &mut Map, outer: &mut Option<Dart>) {
    loop {
        let (faces, _) = map.faces();
        let found = faces
            .iter()
            .find(|f| f.len() == 2 && f[0].e != f[1].e)
            .cloned();
        let Some(f) = found else { break };
        let (d0, d1) = (f[0], f[1]);
        let aug = |e: usize| map.kind[e] == EdgeKind::Augment;
        let (gone, keep) = match (aug(d0.e), aug(d1.e)) {
            (true, false) => (d0, d1),
            (false, true) => (d1, d0),
            _ if d0.e > d1.e => (d0, d1),
            _ => (d1, d0),
        };
        map.remove_edge(gone.e);
        if let Some(o) = outer {
            if o.e == gone.e {
                // The 2-face merges into the face beyond `gone`, which the
                // kept dart of the 2-face now bounds.
                *o = keep;
            }
        }
    }
}

fn star_triangulate(map: &mut Map) {
    let (faces, _) = map.faces();
    for f in faces {
        let bridge = f.len() == 2 && f[0].e == f[1].e;
        if f.len() <= 3 && !bridge {
            continue;
        }
        let apex = map.add_vertex(VertexKind::Helper);
        let mut spokes = Vec::with_capacity(f.len());
        for d in &f {
            let g = map.add_edge(apex, d.v, EdgeKind::Augment);
            map.insert_after(d.v, d.e, g);
            spokes.push(g);
        }
        map.rot[apex] = spokes;
    }
}
