use super::{CubicBezier, GeometryError, Point};
use crate::math;

/// An affine map `p -> M p + t` of the plane.
///
/// Béziers are affinely equivariant: mapping the control points maps the
/// curve. The constructions only use similarities (angle-preserving maps),
/// which also preserve crossing angles and scale curvature uniformly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffineMap {
    /// Row-major linear part `[[a, b], [c, d]]`.
    pub linear: [[f64; 2]; 2],
    pub translation: Point,
}

impl AffineMap {
    pub const IDENTITY: AffineMap = AffineMap {
        linear: [[1.0, 0.0], [0.0, 1.0]],
        translation: Point::ORIGIN,
    };

    pub fn translate(v: Point) -> AffineMap {
        AffineMap {
            translation: v,
            ..AffineMap::IDENTITY
        }
    }

    pub fn rotate(theta: f64) -> AffineMap {
        let (s, c) = (math::sin(theta), math::cos(theta));
        AffineMap {
            linear: [[c, -s], [s, c]],
            translation: Point::ORIGIN,
        }
    }

    pub fn scale(s: f64) -> AffineMap {
        AffineMap {
            linear: [[s, 0.0], [0.0, s]],
            translation: Point::ORIGIN,
        }
    }

    /// The reflection `(x, y) -> (-x, y)`.
    pub fn mirror_x() -> AffineMap {
        AffineMap {
            linear: [[-1.0, 0.0], [0.0, 1.0]],
            translation: Point::ORIGIN,
        }
    }

    /// The orientation-preserving similarity sending `from` to the origin and
    /// `to` to `(1, 0)`.
    pub fn segment_to_unit(from: Point, to: Point) -> Result<AffineMap, GeometryError> {
        let d = to - from;
        let len2 = d.hypot2();
        if !(len2 > 0.0) || !len2.is_finite() {
            return Err(GeometryError::SingularMap);
        }
        // Rotation by -angle(d), scaled by 1/|d|.
        let a = d.x / len2;
        let b = d.y / len2;
        let linear = [[a, b], [-b, a]];
        let t = -apply_linear(&linear, from);
        Ok(AffineMap {
            linear,
            translation: t,
        })
    }

    /// `self` applied after `first`.
    pub fn compose(&self, first: &AffineMap) -> AffineMap {
        let m = &self.linear;
        let n = &first.linear;
        let linear = [
            [
                m[0][0] * n[0][0] + m[0][1] * n[1][0],
                m[0][0] * n[0][1] + m[0][1] * n[1][1],
            ],
            [
                m[1][0] * n[0][0] + m[1][1] * n[1][0],
                m[1][0] * n[0][1] + m[1][1] * n[1][1],
            ],
        ];
        AffineMap {
            linear,
            translation: self.apply_point(first.translation),
        }
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.linear;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn is_invertible(&self) -> bool {
        let det = self.determinant();
        det != 0.0 && det.is_finite()
    }

    /// True when the linear part is a nonzero multiple of an orthogonal matrix.
    pub fn is_similarity(&self, tol: f64) -> bool {
        let m = &self.linear;
        let c0 = Point::new(m[0][0], m[1][0]);
        let c1 = Point::new(m[0][1], m[1][1]);
        let (n0, n1) = (c0.hypot2(), c1.hypot2());
        n0 > 0.0 && (n0 - n1).abs() <= tol * n0 && c0.dot(c1).abs() <= tol * n0
    }

    pub fn inverse(&self) -> Result<AffineMap, GeometryError> {
        let det = self.determinant();
        if det == 0.0 || !det.is_finite() {
            return Err(GeometryError::SingularMap);
        }
        let m = &self.linear;
        let linear = [
            [m[1][1] / det, -m[0][1] / det],
            [-m[1][0] / det, m[0][0] / det],
        ];
        let translation = -apply_linear(&linear, self.translation);
        Ok(AffineMap {
            linear,
            translation,
        })
    }

    #[inline]
    pub fn apply_point(&self, p: Point) -> Point {
        apply_linear(&self.linear, p) + self.translation
    }

    /// Maps only the linear part (for direction vectors).
    #[inline]
    pub fn apply_vector(&self, v: Point) -> Point {
        apply_linear(&self.linear, v)
    }

    /// Transforms a curve by mapping its control points.
    pub fn apply(&self, c: &CubicBezier) -> Result<CubicBezier, GeometryError> {
        if !self.is_invertible() {
            return Err(GeometryError::SingularMap);
        }
        Ok(self.apply_unchecked(c))
    }

    pub(crate) fn apply_unchecked(&self, c: &CubicBezier) -> CubicBezier {
        CubicBezier::new(
            self.apply_point(c.p0),
            self.apply_point(c.p1),
            self.apply_point(c.p2),
            self.apply_point(c.p3),
        )
    }
}

#[inline]
fn apply_linear(m: &[[f64; 2]; 2], p: Point) -> Point {
    Point::new(m[0][0] * p.x + m[0][1] * p.y, m[1][0] * p.x + m[1][1] * p.y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Point, b: Point, tol: f64) -> bool {
        a.distance(b) <= tol
    }

    #[test]
    fn segment_to_unit_maps_endpoints() {
        let a = Point::new(3.0, -1.0);
        let b = Point::new(-2.0, 4.0);
        let m = AffineMap::segment_to_unit(a, b).unwrap();
        assert!(close(m.apply_point(a), Point::ORIGIN, 1e-14));
        assert!(close(m.apply_point(b), Point::new(1.0, 0.0), 1e-14));
        assert!(m.is_similarity(1e-12));
        assert!(m.determinant() > 0.0);
    }

    #[test]
    fn inverse_round_trips() {
        let m = AffineMap::rotate(0.7)
            .compose(&AffineMap::scale(2.5))
            .compose(&AffineMap::mirror_x());
        let m = AffineMap::translate(Point::new(1.0, 2.0)).compose(&m);
        let inv = m.inverse().unwrap();
        let p = Point::new(-0.3, 8.0);
        assert!(close(inv.apply_point(m.apply_point(p)), p, 1e-13));
        assert!(close(m.compose(&inv).apply_point(p), p, 1e-13));
    }

    #[test]
    fn singular_map_is_rejected() {
        let m = AffineMap {
            linear: [[1.0, 2.0], [2.0, 4.0]],
            translation: Point::ORIGIN,
        };
        assert_eq!(m.inverse(), Err(GeometryError::SingularMap));
        let c = CubicBezier::line(Point::ORIGIN, Point::new(1.0, 1.0));
        assert_eq!(m.apply(&c), Err(GeometryError::SingularMap));
        assert!(AffineMap::segment_to_unit(Point::ORIGIN, Point::ORIGIN).is_err());
    }

    #[test]
    fn mirror_is_a_similarity_with_negative_determinant() {
        let m = AffineMap::mirror_x();
        assert!(m.is_similarity(0.0));
        assert!(m.determinant() < 0.0);
    }
}
