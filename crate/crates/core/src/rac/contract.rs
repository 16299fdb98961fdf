//! Contraction of separation pairs into thick edges.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::augment::AugmentedEmbedding;
use super::map::{Dart, EdgeId, EdgeKind, Map};
use super::RacError;

/// Returns a separation pair of the simple graph `adj` if it has one.
///
/// For every vertex `u`, the articulation points of `G - u` are exactly the
/// partners `w` with `{u, w}` separating.
pub fn find_separation_pair(adj: &[Vec<usize>]) -> Option<(usize, usize)> {
    let n = adj.len();
    if n < 4 {
        return None;
    }
    for u in 0..n {
        let mut removed = vec![false; n];
        removed[u] = true;
        let comps = components(adj, &removed);
        if comps.len() > 1 {
            // u alone separates; pair it with a vertex of the largest part
            // whose removal leaves something on both sides.
            let big = comps.iter().max_by_key(|c| c.len()).unwrap();
            if big.len() >= 2 || comps.len() >= 3 {
                let w = big[0];
                return Some((u.min(w), u.max(w)));
            }
            continue;
        }
        if let Some(w) = articulation_point(adj, &removed) {
            return Some((u.min(w), u.max(w)));
        }
    }
    None
}

fn components(adj: &[Vec<usize>], removed: &[bool]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = removed.to_vec();
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Some articulation point of the graph without the `removed` vertices.
fn articulation_point(adj: &[Vec<usize>], removed: &[bool]) -> Option<usize> {
    let n = adj.len();
    let root = (0..n).find(|&v| !removed[v])?;
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    // Iterative DFS: (vertex, parent, next neighbour index).
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    disc[root] = time;
    low[root] = time;
    time += 1;
    let mut root_children = 0;
    while let Some(&(v, parent, i)) = stack.last() {
        if i < adj[v].len() {
            let top = stack.len() - 1;
            stack[top].2 += 1;
            let w = adj[v][i];
            if removed[w] || w == parent {
                continue;
            }
            if disc[w] == usize::MAX {
                disc[w] = time;
                low[w] = time;
                time += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p != root && low[v] >= disc[p] {
                    return Some(p);
                }
            }
        }
    }
    (root_children > 1).then_some(root)
}

/// One piece of the contraction: a map whose crossing-augmented graph is
/// simple and 3-connected.
#[derive(Clone, Debug)]
pub(crate) struct PieceNode {
    pub map: Map,
    /// The outer face is the face to the left of this dart.
    pub outer: Dart,
    /// For contracted pieces: `(a, b, root edge)`. The piece is drawn to
    /// the left of `a -> b`.
    pub root: Option<(usize, usize, EdgeId)>,
    pub thick: Vec<ThickEdge>,
}

#[derive(Clone, Debug)]
pub(crate) struct ThickEdge {
    pub a: usize,
    pub b: usize,
    pub children: Vec<usize>,
}

/// The pieces produced by [`contract`]; node 0 is the top-level graph `G*`.
#[derive(Clone, Debug)]
pub struct ContractionTree {
    pub(crate) nodes: Vec<PieceNode>,
}

impl ContractionTree {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of contracted pieces on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        fn go(t: &ContractionTree, i: usize) -> usize {
            t.nodes[i]
                .thick
                .iter()
                .flat_map(|th| th.children.iter())
                .map(|&c| 1 + go(t, c))
                .max()
                .unwrap_or(0)
        }
        go(self, 0)
    }

    /// Non-dummy vertices of piece `i`.
    pub fn piece_vertices(&self, i: usize) -> Vec<usize> {
        let m = &self.nodes[i].map;
        m.vertices().filter(|&v| !m.is_dummy(v)).collect()
    }

    /// Vertices of piece `i` that are not its attachment pair.
    pub fn interior_vertices(&self, i: usize) -> Vec<usize> {
        let node = &self.nodes[i];
        node.map
            .vertices()
            .filter(|&v| match node.root {
                Some((a, b, _)) => v != a && v != b,
                None => true,
            })
            .collect()
    }

    /// The crossing-augmented graph of piece `i` on its non-dummy vertices.
    pub fn piece_graph(&self, i: usize) -> (Vec<usize>, Vec<Vec<usize>>) {
        let (verts, adj, _) = piece_graph(&self.nodes[i].map);
        (verts, adj)
    }
}

/// Compact adjacency of a piece, with each crossing replaced by its two
/// edges. Also reports a repeated edge if there is one.
fn piece_graph(map: &Map) -> (Vec<usize>, Vec<Vec<usize>>, Option<(usize, usize)>) {
    let verts: Vec<usize> = map.vertices().filter(|&v| !map.is_dummy(v)).collect();
    let index: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for e in map.edges() {
        let [a, b] = map.ends[e];
        if !map.is_dummy(a) && !map.is_dummy(b) {
            pairs.push((a.min(b), a.max(b)));
        }
    }
    for x in map.vertices().filter(|&v| map.is_dummy(v)) {
        let nb: Vec<usize> = map.rot[x].iter().map(|&e| map.other(e, x)).collect();
        if nb.len() == 4 {
            for j in 0..2 {
                pairs.push((nb[j].min(nb[j + 2]), nb[j].max(nb[j + 2])));
            }
        }
    }
    let mut adj = vec![Vec::new(); verts.len()];
    let mut set = BTreeSet::new();
    let mut repeated = None;
    for (a, b) in pairs {
        if !set.insert((a, b)) {
            repeated.get_or_insert((a, b));
            continue;
        }
        let (ia, ib) = (index[&a], index[&b]);
        adj[ia].push(ib);
        adj[ib].push(ia);
    }
    (verts, adj, repeated)
}

/// Splits the augmented embedding at parallel uncrossed edges until every
/// piece is simple and 3-connected.
///
/// For `k` parallel edges between `u` and `v` the sphere splits into `k`
/// regions. The region holding the outer face stays, the others become
/// child pieces (each closed by a root edge `u v`), and the group is
/// replaced by one thick edge.
pub fn contract(aug: &AugmentedEmbedding) -> Result<ContractionTree, RacError> {
    let outer = aug.outer.ok_or(RacError::Empty)?;
    let mut nodes = vec![PieceNode {
        map: aug.map.clone(),
        outer,
        root: None,
        thick: Vec::new(),
    }];
    let mut i = 0;
    while i < nodes.len() {
        let mut node = nodes[i].clone();
        while let Some((u, v, group)) = find_group(&node.map) {
            split_group(&mut node, &mut nodes, u, v, &group);
        }
        let (verts, adj, repeated) = piece_graph(&node.map);
        if let Some((a, b)) = repeated {
            return Err(RacError::NotSimple { u: a, v: b });
        }
        if let Some((a, b)) = find_separation_pair(&adj) {
            return Err(RacError::SeparationPair {
                u: verts[a],
                v: verts[b],
            });
        }
        nodes[i] = node;
        i += 1;
    }
    Ok(ContractionTree { nodes })
}

/// Some pair of non-dummy vertices joined by two or more edges, with the
/// edges in counterclockwise order around the first vertex.
fn find_group(map: &Map) -> Option<(usize, usize, Vec<EdgeId>)> {
    for u in map.vertices() {
        if map.is_dummy(u) {
            continue;
        }
        let mut by_other: BTreeMap<usize, Vec<EdgeId>> = BTreeMap::new();
        for &e in &map.rot[u] {
            let w = map.other(e, u);
            if !map.is_dummy(w) {
                by_other.entry(w).or_default().push(e);
            }
        }
        if let Some((w, es)) = by_other.into_iter().find(|(_, es)| es.len() >= 2) {
            return Some((u, w, es));
        }
    }
    None
}

fn split_group(node: &mut PieceNode, nodes: &mut Vec<PieceNode>, u: usize, v: usize, group: &[EdgeId]) {
    let map = &node.map;
    let (faces, face_of) = map.faces();
    // Regions: faces connected across edges outside the group.
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in map.edges() {
        if group.contains(&e) {
            continue;
        }
        let [a, b] = map.ends[e];
        let fa = map.face_index(&face_of, Dart { v: a, e });
        let fb = map.face_index(&face_of, Dart { v: b, e });
        let (ra, rb) = (find(&mut parent, fa), find(&mut parent, fb));
        parent[ra] = rb;
    }
    let outer_region = {
        let f = map.face_index(&face_of, node.outer);
        find(&mut parent, f)
    };

    let k = group.len();
    let mut child_edges_all: BTreeSet<EdgeId> = BTreeSet::new();
    let mut child_verts_all: BTreeSet<usize> = BTreeSet::new();
    let mut children = Vec::new();
    for i in 0..k {
        let (ei, ej) = (group[i], group[(i + 1) % k]);
        let f0 = map.face_index(&face_of, Dart { v: u, e: ei });
        let region = find(&mut parent, f0);
        if region == outer_region || faces[f0].len() == 2 {
            continue;
        }
        let mut edges: BTreeSet<EdgeId> = BTreeSet::new();
        let mut verts: BTreeSet<usize> = BTreeSet::new();
        for (fi, f) in faces.iter().enumerate() {
            if find(&mut parent, fi) != region {
                continue;
            }
            for d in f {
                edges.insert(d.e);
                verts.insert(d.v);
            }
        }
        let mut child = map.clone();
        for e in child.edges().collect::<Vec<_>>() {
            if !edges.contains(&e) {
                child.alive[e] = false;
            }
        }
        for w in 0..child.vertex_count() {
            if verts.contains(&w) {
                let keep: Vec<EdgeId> =
                    child.rot[w].iter().copied().filter(|e| edges.contains(e)).collect();
                child.rot[w] = keep;
            } else {
                child.rot[w].clear();
                child.present[w] = false;
            }
        }
        let r = child.add_edge(u, v, EdgeKind::Root);
        for w in [u, v] {
            let pi = child.index_in_rot(w, ei);
            child.rot[w][pi] = r;
            let pj = child.index_in_rot(w, ej);
            child.rot[w].remove(pj);
        }
        child.alive[ei] = false;
        child.alive[ej] = false;
        nodes.push(PieceNode {
            map: child,
            outer: Dart { v, e: r },
            root: Some((u, v, r)),
            thick: Vec::new(),
        });
        children.push(nodes.len() - 1);
        child_edges_all.extend(edges.iter().copied().filter(|e| !group.contains(e)));
        child_verts_all.extend(verts.iter().copied().filter(|&w| w != u && w != v));
    }

    let orig = group.iter().find_map(|&e| node.map.kind[e].orig());
    let map = &mut node.map;
    let t = map.add_edge(u, v, EdgeKind::Thick(orig));
    for &e in &child_edges_all {
        map.alive[e] = false;
    }
    for &w in &child_verts_all {
        map.rot[w].clear();
        map.present[w] = false;
    }
    for w in [u, v] {
        let mut out = Vec::with_capacity(map.rot[w].len());
        let mut placed = false;
        for &e in &map.rot[w] {
            if child_edges_all.contains(&e) {
                continue;
            }
            if group.contains(&e) {
                if !placed {
                    out.push(t);
                    placed = true;
                }
                continue;
            }
            out.push(e);
        }
        map.rot[w] = out;
    }
    for &e in group {
        map.alive[e] = false;
    }
    if group.contains(&node.outer.e) {
        node.outer = Dart {
            v: node.outer.v,
            e: t,
        };
    }
    node.thick.push(ThickEdge {
        a: u,
        b: v,
        children,
    });
}
