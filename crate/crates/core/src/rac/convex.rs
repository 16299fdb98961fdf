//! Barycentric (Tutte) layouts with a fixed convex outer face.

use alloc::vec;
use alloc::vec::Vec;

use super::RacError;
use crate::geometry::{orient, Point};
use crate::EPS_GEOM;

/// Straight-line layout of a plane graph together with its faces.
#[derive(Clone, Debug)]
pub struct ConvexDrawing {
    pub positions: Vec<Point>,
    /// Vertex cycles; interior faces counterclockwise.
    pub faces: Vec<Vec<usize>>,
}

impl ConvexDrawing {
    /// Faces (by index) that are not strictly convex, skipping `outer`.
    pub fn nonconvex_faces(&self, outer: Option<usize>) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| Some(i) != outer && !is_strictly_convex(&self.cycle(i)))
            .collect()
    }

    fn cycle(&self, i: usize) -> Vec<Point> {
        self.faces[i].iter().map(|&v| self.positions[v]).collect()
    }
}

/// True if the polygon turns left at every corner, with cross products
/// above `EPS_GEOM` relative to the squared diameter.
pub fn is_strictly_convex(poly: &[Point]) -> bool {
    let n = poly.len();
    if n < 3 {
        return false;
    }
    let mut diam2: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            diam2 = diam2.max(poly[i].distance(poly[j]) * poly[i].distance(poly[j]));
        }
    }
    (0..n).all(|i| {
        let (a, b, c) = (poly[i], poly[(i + 1) % n], poly[(i + 2) % n]);
        orient(a, b, c) > EPS_GEOM * diam2
    })
}

/// Places every vertex not in `fixed` at a weighted average of its
/// neighbours, each neighbour `u` weighted by `1 / deg(u)`. Any positive
/// weights keep faces convex; these keep hubs from crowding their fans.
///
/// `adj` may contain vertices with no neighbours; they are left at the
/// origin. The system is solved densely with partial pivoting.
pub fn tutte_layout(adj: &[Vec<usize>], fixed: &[(usize, Point)]) -> Result<Vec<Point>, RacError> {
    let n = adj.len();
    let mut pos = vec![Point::ORIGIN; n];
    let mut is_fixed = vec![false; n];
    for &(v, p) in fixed {
        pos[v] = p;
        is_fixed[v] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&v| !is_fixed[v] && !adj[v].is_empty()).collect();
    let m = free.len();
    if m == 0 {
        return Ok(pos);
    }
    let mut index = vec![usize::MAX; n];
    for (i, &v) in free.iter().enumerate() {
        index[v] = i;
    }
    // Row i: (sum w_u) x_v - sum of free w_u x_u = sum of fixed w_u x_u.
    let w = m + 2;
    let mut a = vec![0.0f64; m * w];
    for (i, &v) in free.iter().enumerate() {
        let row = &mut a[i * w..(i + 1) * w];
        for &u in &adj[v] {
            let wu = 1.0 / adj[u].len() as f64;
            row[i] += wu;
            if is_fixed[u] {
                row[m] += wu * pos[u].x;
                row[m + 1] += wu * pos[u].y;
            } else {
                row[index[u]] -= wu;
            }
        }
    }
    solve_in_place(&mut a, m)?;
    for (i, &v) in free.iter().enumerate() {
        pos[v] = Point::new(a[i * w + m], a[i * w + m + 1]);
    }
    Ok(pos)
}

/// Gauss-Jordan elimination on an `m x (m + 2)` row-major system.
fn solve_in_place(a: &mut [f64], m: usize) -> Result<(), RacError> {
    let w = m + 2;
    for col in 0..m {
        let pivot = (col..m)
            .max_by(|&i, &j| a[i * w + col].abs().total_cmp(&a[j * w + col].abs()))
            .unwrap();
        if a[pivot * w + col].abs() < 1e-12 {
            return Err(RacError::SingularSystem);
        }
        if pivot != col {
            for k in 0..w {
                a.swap(pivot * w + k, col * w + k);
            }
        }
        let p = a[col * w + col];
        for k in col..w {
            a[col * w + k] /= p;
        }
        for i in 0..m {
            if i == col {
                continue;
            }
            let f = a[i * w + col];
            if f == 0.0 {
                continue;
            }
            for k in col..w {
                a[i * w + k] -= f * a[col * w + k];
            }
        }
    }
    Ok(())
}
