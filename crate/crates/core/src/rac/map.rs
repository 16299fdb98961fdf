//! Rotation-system planar maps over a shared vertex and edge numbering.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) type VertexId = usize;
pub(crate) type EdgeId = usize;

/// A dart: edge `e` traversed away from vertex `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Dart {
    pub v: VertexId,
    pub e: EdgeId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum VertexKind {
    Real,
    /// Crossing point of two original edges.
    Dummy,
    /// Apex added by star triangulation.
    Helper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum EdgeKind {
    /// A segment of the original edge with this id (the whole edge when it
    /// is uncrossed).
    Original(usize),
    /// Added during augmentation; never part of the output.
    Augment,
    /// Stands for contracted pieces; drawn straight, emitted only if it
    /// also represents an original edge.
    Thick(Option<usize>),
    /// The edge along which a contracted piece attaches to its parent.
    Root,
}

impl EdgeKind {
    pub fn orig(self) -> Option<usize> {
        match self {
            EdgeKind::Original(o) => Some(o),
            EdgeKind::Thick(o) => o,
            _ => None,
        }
    }
}

/// Planar map: per-vertex counterclockwise edge lists.
///
/// Faces are traced with the left-face rule: after arriving at `w` along
/// `e`, continue along the counterclockwise predecessor of `e` at `w`.
/// Interior faces then come out counterclockwise.
#[derive(Clone, Debug)]
pub(crate) struct Map {
    pub ends: Vec<[VertexId; 2]>,
    pub kind: Vec<EdgeKind>,
    pub alive: Vec<bool>,
    pub rot: Vec<Vec<EdgeId>>,
    pub vkind: Vec<VertexKind>,
    pub present: Vec<bool>,
}

impl Map {
    pub fn new(vkind: Vec<VertexKind>) -> Map {
        let n = vkind.len();
        Map {
            ends: Vec::new(),
            kind: Vec::new(),
            alive: Vec::new(),
            rot: vec![Vec::new(); n],
            vkind,
            present: vec![true; n],
        }
    }

    pub fn add_vertex(&mut self, kind: VertexKind) -> VertexId {
        self.vkind.push(kind);
        self.rot.push(Vec::new());
        self.present.push(true);
        self.vkind.len() - 1
    }

    /// Registers an edge without placing it in any rotation.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, kind: EdgeKind) -> EdgeId {
        self.ends.push([u, v]);
        self.kind.push(kind);
        self.alive.push(true);
        self.ends.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vkind.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vkind.len()).filter(move |&v| self.present[v])
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.ends.len()).filter(move |&e| self.alive[e])
    }

    pub fn other(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.ends[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn head(&self, d: Dart) -> VertexId {
        self.other(d.e, d.v)
    }

    pub fn is_dummy(&self, v: VertexId) -> bool {
        self.vkind[v] == VertexKind::Dummy
    }

    pub fn index_in_rot(&self, v: VertexId, e: EdgeId) -> usize {
        self.rot[v]
            .iter()
            .position(|&x| x == e)
            .expect("edge missing from rotation")
    }

    /// Counterclockwise successor of `e` around `v`.
    #[cfg(test)]
    pub fn succ(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let r = &self.rot[v];
        let i = self.index_in_rot(v, e);
        r[(i + 1) % r.len()]
    }

    /// Counterclockwise predecessor of `e` around `v`.
    pub fn pred(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let r = &self.rot[v];
        let i = self.index_in_rot(v, e);
        r[(i + r.len() - 1) % r.len()]
    }

    /// Next dart along the face to the left of `d`.
    pub fn next_in_face(&self, d: Dart) -> Dart {
        let w = self.head(d);
        Dart {
            v: w,
            e: self.pred(w, d.e),
        }
    }

    pub fn face(&self, start: Dart) -> Vec<Dart> {
        let mut out = vec![start];
        let mut d = self.next_in_face(start);
        while d != start {
            out.push(d);
            d = self.next_in_face(d);
            debug_assert!(out.len() <= 2 * self.ends.len() + 2, "face walk did not close");
        }
        out
    }

    /// Inserts `g` immediately before `anchor` (clockwise side) at `v`.
    pub fn insert_before(&mut self, v: VertexId, anchor: EdgeId, g: EdgeId) {
        let i = self.index_in_rot(v, anchor);
        self.rot[v].insert(i, g);
    }

    /// Inserts `g` immediately after `anchor` (counterclockwise side) at `v`.
    pub fn insert_after(&mut self, v: VertexId, anchor: EdgeId, g: EdgeId) {
        let i = self.index_in_rot(v, anchor);
        self.rot[v].insert(i + 1, g);
    }

    pub fn remove_edge(&mut self, e: EdgeId) {
        let [a, b] = self.ends[e];
        for v in [a, b] {
            if let Some(i) = self.rot[v].iter().position(|&x| x == e) {
                self.rot[v].remove(i);
            }
        }
        self.alive[e] = false;
    }

    pub fn remove_vertex(&mut self, v: VertexId) {
        debug_assert!(self.rot[v].is_empty());
        self.present[v] = false;
    }

    fn dart_slot(&self, d: Dart) -> usize {
        2 * d.e + usize::from(self.ends[d.e][0] != d.v)
    }

    /// All faces, each as its dart cycle, plus the face index of every dart
    /// slot (`2 e + side`).
    pub fn faces(&self) -> (Vec<Vec<Dart>>, Vec<usize>) {
        let mut face_of = vec![usize::MAX; 2 * self.ends.len()];
        let mut faces = Vec::new();
        for e in self.edges() {
            for v in self.ends[e] {
                let d = Dart { v, e };
                if face_of[self.dart_slot(d)] != usize::MAX {
                    continue;
                }
                let f = self.face(d);
                for &x in &f {
                    face_of[self.dart_slot(x)] = faces.len();
                }
                faces.push(f);
            }
        }
        (faces, face_of)
    }

    pub fn face_index(&self, face_of: &[usize], d: Dart) -> usize {
        face_of[self.dart_slot(d)]
    }

    pub fn live_edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn live_vertex_count(&self) -> usize {
        self.vertices().count()
    }

    /// True if the map (ignoring absent vertices) is connected.
    pub fn is_connected(&self) -> bool {
        let start = match self.vertices().next() {
            Some(v) => v,
            None => return true,
        };
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &e in &self.rot[v] {
                let w = self.other(e, v);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        self.vertices().all(|v| seen[v])
    }

    /// Euler characteristic check `V - E + F = 2` for a connected map.
    pub fn euler_ok(&self) -> (bool, usize, usize, usize) {
        let v = self.live_vertex_count();
        let e = self.live_edge_count();
        let f = if e == 0 { 1 } else { self.faces().0.len() };
        (v + f == e + 2, v, e, f)
    }
}
