//! Random 1-plane embeddings: stacked triangulations with kite crossings.

use bezier_rac::rac::OnePlaneEmbedding;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum GenError {
    #[error("n must be at least 4 (got {0})")]
    TooSmall(usize),
    #[error("crossing fraction must lie in [0, 1] (got {0})")]
    Fraction(f64),
}

/// A random 1-plane embedding on `n` real vertices.
///
/// Vertices are inserted one at a time into a uniformly chosen inner face
/// of a triangulation that starts from the triangle `0 1 2`, followed by
/// `2n` attempted flips of random inner edges. Then pairs of
/// inner faces sharing an edge are merged into kites: the shared edge `ab`
/// is crossed by the new edge `cd` joining the two opposite corners. Pairs
/// are disjoint, and `cd` must not exist yet. About `crossing_fraction`
/// of the `(2n - 5) / 2` possible pairs become kites; fewer when the
/// greedy choice runs out. Output is deterministic for a fixed seed.
pub fn gen_one_planar(n: usize, crossing_fraction: f64, seed: u64) -> Result<OnePlaneEmbedding, GenError> {
    if n < 4 {
        return Err(GenError::TooSmall(n));
    }
    if !(0.0..=1.0).contains(&crossing_fraction) {
        return Err(GenError::Fraction(crossing_fraction));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // rot[v]: neighbours counterclockwise; faces: inner triangles ccw.
    let mut rot: Vec<Vec<usize>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2]];
    for v in 3..n {
        let fi = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[fi];
        insert_after(&mut rot[a], b, v);
        insert_after(&mut rot[b], c, v);
        insert_after(&mut rot[c], a, v);
        rot.push(vec![a, b, c]);
        faces[fi] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }

    // Random flips break up the deep nesting that pure insertion creates.
    for _ in 0..2 * n {
        let fi = rng.gen_range(0..faces.len());
        let j = rng.gen_range(0..3);
        let (a, b) = (faces[fi][j], faces[fi][(j + 1) % 3]);
        let Some(gi) = faces.iter().position(|g| has_dart(*g, b, a)) else { continue };
        let c = opposite(faces[fi], a, b);
        let d = opposite(faces[gi], a, b);
        if rot[c].contains(&d) || rot[a].len() <= 3 || rot[b].len() <= 3 {
            continue;
        }
        rot[a].retain(|&w| w != b);
        rot[b].retain(|&w| w != a);
        insert_after(&mut rot[c], a, d);
        insert_after(&mut rot[d], b, c);
        faces[fi] = [a, d, c];
        faces[gi] = [d, b, c];
    }

    // Inner edges with both incident faces, in random order.
    let mut left_of = std::collections::BTreeMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for j in 0..3 {
            left_of.insert((f[j], f[(j + 1) % 3]), fi);
        }
    }
    let mut shared: Vec<(usize, usize)> = left_of
        .keys()
        .copied()
        .filter(|&(a, b)| a < b && left_of.contains_key(&(b, a)))
        .collect();
    shared.shuffle(&mut rng);
    let target = (crossing_fraction * (faces.len() / 2) as f64).round() as usize;
    let mut used = vec![false; faces.len()];
    // (a, b, c, d): ab is crossed by cd, c left of a -> b.
    let mut kites: Vec<(usize, usize, usize, usize)> = Vec::new();
    for (a, b) in shared {
        if kites.len() >= target {
            break;
        }
        let (f, g) = (left_of[&(a, b)], left_of[&(b, a)]);
        if used[f] || used[g] {
            continue;
        }
        let c = opposite(faces[f], a, b);
        let d = opposite(faces[g], a, b);
        let new_edge = (c.min(d), c.max(d));
        if rot[c].contains(&d) || kites.iter().any(|k| (k.2.min(k.3), k.2.max(k.3)) == new_edge) {
            continue;
        }
        used[f] = true;
        used[g] = true;
        kites.push((a, b, c, d));
    }

    // Planarization: kite k gets dummy n + k.
    let total = n + kites.len();
    let mut prot: Vec<Vec<usize>> = rot.clone();
    prot.resize(total, Vec::new());
    for (k, &(a, b, c, d)) in kites.iter().enumerate() {
        let x = n + k;
        replace(&mut prot[a], b, x);
        replace(&mut prot[b], a, x);
        insert_after(&mut prot[c], a, x);
        insert_after(&mut prot[d], b, x);
        prot[x] = vec![a, d, b, c];
    }

    // Segment ids: one per planarization edge, numbered in order of the
    // smaller endpoint.
    let mut seg = std::collections::BTreeMap::new();
    for (u, list) in prot.iter().enumerate() {
        for &w in list {
            let key = (u.min(w), u.max(w));
            let next = seg.len();
            seg.entry(key).or_insert(next);
        }
    }
    let rotation: Vec<Vec<usize>> = prot
        .iter()
        .enumerate()
        .map(|(u, list)| list.iter().map(|&w| seg[&(u.min(w), u.max(w))]).collect())
        .collect();
    let edge_id = |x: usize, p: usize, q: usize| seg[&(x.min(p), x.max(p))].min(seg[&(x.min(q), x.max(q))]);
    let crossing_pairs = kites
        .iter()
        .enumerate()
        .map(|(k, &(a, b, c, d))| {
            let x = n + k;
            (edge_id(x, a, b), edge_id(x, c, d))
        })
        .collect();
    Ok(OnePlaneEmbedding {
        n: total,
        rotation,
        dummies: (n..total).collect(),
        crossing_pairs,
        // Left of 1 -> 0 is the outer face; 0-1 is never crossed.
        outer_face: Some((1, seg[&(0, 1)])),
    })
}

fn insert_after(list: &mut Vec<usize>, anchor: usize, v: usize) {
    let i = list.iter().position(|&w| w == anchor).expect("anchor in rotation");
    list.insert(i + 1, v);
}

fn replace(list: &mut [usize], old: usize, new: usize) {
    let i = list.iter().position(|&w| w == old).expect("neighbour in rotation");
    list[i] = new;
}

fn has_dart(f: [usize; 3], a: usize, b: usize) -> bool {
    (0..3).any(|j| f[j] == a && f[(j + 1) % 3] == b)
}

fn opposite(f: [usize; 3], a: usize, b: usize) -> usize {
    f.into_iter().find(|&v| v != a && v != b).unwrap()
}
