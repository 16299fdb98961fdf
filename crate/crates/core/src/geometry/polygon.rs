use alloc::vec::Vec;

use super::{orient, CubicBezier, GeometryError, Point, Rect};
use crate::EPS_GEOM;

/// A convex polygon with counterclockwise vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

/// Work limit for [`ConvexPolygon::contains`]; pieces left over when it is
/// exhausted are judged by their endpoints.
const CONTAINS_BUDGET: usize = 1 << 16;

impl ConvexPolygon {
    /// Validates and wraps a counterclockwise vertex list.
    ///
    /// Collinear consecutive vertices are accepted within [`EPS_GEOM`]
    /// (relative to the polygon's size).
    pub fn new(vertices: Vec<Point>) -> Result<ConvexPolygon, GeometryError> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeometryError::InvalidPolygon("fewer than 3 vertices"));
        }
        if !vertices.iter().all(|p| p.is_finite()) {
            return Err(GeometryError::InvalidPolygon("non-finite vertex"));
        }
        let scale = Rect::from_points(&vertices).diagonal();
        if !(scale > 0.0) {
            return Err(GeometryError::InvalidPolygon("zero extent"));
        }
        let mut area2 = 0.0;
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if a.distance(b) <= EPS_GEOM * scale {
                return Err(GeometryError::InvalidPolygon("repeated vertex"));
            }
            if orient(a, b, c) < -EPS_GEOM * scale * scale {
                return Err(GeometryError::InvalidPolygon("not convex and counterclockwise"));
            }
            area2 += a.cross(b);
        }
        if !(area2 > EPS_GEOM * scale * scale) {
            return Err(GeometryError::InvalidPolygon("not counterclockwise"));
        }
        // Winding once: the turning angles must not wrap around.
        let mut turns = 0.0;
        for i in 0..n {
            let e0 = vertices[(i + 1) % n] - vertices[i];
            let e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
            turns += crate::math::atan2(e0.cross(e1), e0.dot(e1));
        }
        if turns > 2.0 * core::f64::consts::PI + 1e-6 {
            return Err(GeometryError::InvalidPolygon("self-overlapping"));
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn triangle(a: Point, b: Point, c: Point) -> Result<ConvexPolygon, GeometryError> {
        ConvexPolygon::new(alloc::vec![a, b, c])
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn bounding_box(&self) -> Rect {
        Rect::from_points(&self.vertices)
    }

    /// Signed distance of `p` from the boundary, positive inside.
    pub fn inner_distance(&self, p: Point) -> f64 {
        let n = self.vertices.len();
        let mut d = f64::INFINITY;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let e = b - a;
            d = d.min(e.cross(p - a) / e.hypot());
        }
        d
    }

    /// True if `p` lies inside the polygon inflated by `tol`.
    pub fn contains_point(&self, p: Point, tol: f64) -> bool {
        self.inner_distance(p) >= -tol
    }

    /// True if the whole curve lies inside the polygon inflated by `tol`.
    ///
    /// Pieces whose control polygon lies inside are accepted by the convex
    /// hull property; pieces with an endpoint outside reject; the rest are
    /// split until one of those holds or they are shorter than `tol`.
    pub fn contains(&self, c: &CubicBezier, tol: f64) -> bool {
        if !self.contains_point(c.p0, tol) || !self.contains_point(c.p3, tol) {
            return false;
        }
        let mut stack = alloc::vec![*c];
        let mut budget = CONTAINS_BUDGET;
        while let Some(piece) = stack.pop() {
            if piece.points().iter().all(|&p| self.contains_point(p, tol)) {
                continue;
            }
            let mid = piece.at(0.5);
            if !self.contains_point(mid, tol) {
                return false;
            }
            if piece.control_box().diagonal() <= tol || budget == 0 {
                continue;
            }
            budget -= 1;
            let (l, r) = piece.split(0.5);
            stack.push(l);
            stack.push(r);
        }
        true
    }
}

/// Point-in-triangle test with tolerance, for either orientation.
pub fn point_in_triangle(p: Point, a: Point, b: Point, c: Point, tol: f64) -> bool {
    let s = if orient(a, b, c) >= 0.0 { 1.0 } else { -1.0 };
    [(a, b), (b, c), (c, a)].iter().all(|&(u, v)| {
        let e = v - u;
        let len = e.hypot();
        len > 0.0 && s * e.cross(p - u) / len >= -tol
    })
}

/// Proper or touching intersection of segments `ab` and `cd`: returns the
/// parameters `(s, u)` along each segment, or `None` if they are parallel
/// or disjoint.
pub fn segment_intersection(a: Point, b: Point, c: Point, d: Point) -> Option<(f64, f64)> {
    let r = b - a;
    let q = d - c;
    let den = r.cross(q);
    if den == 0.0 {
        return None;
    }
    let w = c - a;
    let s = w.cross(q) / den;
    let u = w.cross(r) / den;
    if (0.0..=1.0).contains(&s) && (0.0..=1.0).contains(&u) {
        Some((s, u))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn rejects_bad_polygons() {
        let cw = vec![Point::new(0.0, 0.0), Point::new(0.0, 1.0), Point::new(1.0, 0.0)];
        assert!(ConvexPolygon::new(cw).is_err());
        let dup = vec![
            Point::new(0.0, 0.0),
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ];
        assert!(ConvexPolygon::new(dup).is_err());
        let reflex = vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 0.3),
            Point::new(1.0, 2.0),
        ];
        assert!(ConvexPolygon::new(reflex).is_err());
        let star = vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(2.0, 1.0),
        ];
        assert!(ConvexPolygon::new(star).is_err());
    }

    #[test]
    fn accepts_collinear_vertex() {
        let p = vec![
            Point::new(0.0, 0.0),
            Point::new(0.5, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ];
        assert!(ConvexPolygon::new(p).is_ok());
    }

    #[test]
    fn curve_inside_square() {
        let c = CubicBezier::new(
            Point::new(0.1, 0.1),
            Point::new(0.2, 0.9),
            Point::new(0.8, 0.9),
            Point::new(0.9, 0.1),
        );
        assert!(unit_square().contains(&c, 0.0));
    }

    #[test]
    fn endpoint_outside() {
        let c = CubicBezier::line(Point::new(0.5, 0.5), Point::new(1.5, 0.5));
        assert!(!unit_square().contains(&c, 1e-9));
    }

    #[test]
    fn control_points_outside_but_curve_inside() {
        // Control polygon pokes out; the curve peaks at y = 0.75 * 1.2 = 0.9.
        let c = CubicBezier::new(
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.2),
            Point::new(1.0, 1.2),
            Point::new(1.0, 0.0),
        );
        assert!(unit_square().contains(&c, 0.0));
        let c2 = CubicBezier::new(
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.4),
            Point::new(1.0, 1.4),
            Point::new(1.0, 0.0),
        );
        assert!(!unit_square().contains(&c2, 1e-9));
    }

    #[test]
    fn triangle_membership() {
        let (a, b, c) = (Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0));
        assert!(point_in_triangle(Point::new(0.2, 0.2), a, b, c, 0.0));
        assert!(point_in_triangle(Point::new(0.2, 0.2), a, c, b, 0.0));
        assert!(!point_in_triangle(Point::new(0.6, 0.6), a, b, c, 1e-9));
    }

    #[test]
    fn segments_cross() {
        let r = segment_intersection(
            Point::new(0.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, 0.0),
        );
        assert_eq!(r, Some((0.5, 0.5)));
    }
}
