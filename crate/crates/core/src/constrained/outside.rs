use super::{ConstructionError, SAFETY};
use crate::geometry::{orient, AffineMap, CubicBezier, Point, QuadBezier};
use crate::math;

/// A right-angle crossing pair drawn outside the quadrilateral `ABEF`.
///
/// `curve_ae` runs from `E` (t = 0) to `A` (t = 1) and `curve_bf` from `F`
/// to `B`; they cross at the same parameter `t_cross` on both curves.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OutsidePairResult {
    pub e: Point,
    pub f: Point,
    pub curve_ae: CubicBezier,
    pub curve_bf: CubicBezier,
    pub crossing: Point,
    pub t_cross: f64,
    /// Apex of the isosceles triangle the construction used.
    pub apex: Point,
}

/// Apex `C` of an isosceles triangle `ABC` inside `ABD`: `C` is on the
/// perpendicular bisector of `AB`, at 0.9 times the largest height that
/// stays inside `ABD`.
pub fn isosceles_inscribe(a: Point, b: Point, d: Point) -> Result<Point, ConstructionError> {
    let ab = b - a;
    let len = ab.hypot();
    if !(len > 0.0) || orient(a, b, d).abs() <= crate::EPS_GEOM * len * len {
        return Err(ConstructionError::Degenerate("triangle ABD is degenerate"));
    }
    let m = a.midpoint(b);
    let mut n = ab.perp().normalize();
    if n.dot(d - m) < 0.0 {
        n = -n;
    }
    // First exit of the ray m + h n through edge AD or BD.
    let mut h_max = f64::INFINITY;
    for (p, q) in [(a, d), (b, d)] {
        let e = q - p;
        let den = n.cross(e);
        if den.abs() <= f64::EPSILON * e.hypot() {
            continue;
        }
        let w = p - m;
        let h = w.cross(e) / den;
        let s = w.cross(n) / den;
        if h > 0.0 && (-1e-12..=1.0 + 1e-12).contains(&s) {
            h_max = h_max.min(h);
        }
    }
    if !h_max.is_finite() {
        return Err(ConstructionError::Degenerate("bisector does not meet ABD"));
    }
    Ok(m + n * (SAFETY * h_max))
}

/// Builds the crossing pair for the triangle `ABC`.
///
/// If `C` lies on the perpendicular bisector of `AB` it is used as the apex
/// directly; otherwise an isosceles triangle is inscribed first. Both
/// orientations of `ABC` are accepted.
pub fn outside_pair(a: Point, b: Point, c: Point) -> Result<OutsidePairResult, ConstructionError> {
    let len = a.distance(b);
    if !(len > 0.0) || !a.is_finite() || !b.is_finite() || !c.is_finite() {
        return Err(ConstructionError::Degenerate("A and B must be distinct finite points"));
    }
    if orient(a, b, c).abs() <= crate::EPS_GEOM * len * len {
        return Err(ConstructionError::Degenerate("triangle ABC is degenerate"));
    }
    let off_bisector = (c.distance(a) - c.distance(b)).abs();
    let apex = if off_bisector <= 1e-12 * len {
        c
    } else {
        isosceles_inscribe(a, b, c)?
    };

    // Normalize: A -> (0,0), B -> (1,0), apex above the x-axis.
    let mut to_unit = AffineMap::segment_to_unit(a, b)?;
    if to_unit.apply_point(apex).y < 0.0 {
        let flip = AffineMap {
            linear: [[1.0, 0.0], [0.0, -1.0]],
            translation: Point::ORIGIN,
        };
        to_unit = flip.compose(&to_unit);
    }
    let back = to_unit.inverse()?;
    let cy = to_unit.apply_point(apex).y;
    let cn = Point::new(0.5, cy);

    let ex = e_x(cy);
    if !(ex > 0.5 && ex < 1.0) {
        return Err(ConstructionError::Infeasible("no admissible root for E"));
    }
    let en = Point::new(ex, 0.5 * cy);
    let fnn = Point::new(1.0 - ex, 0.5 * cy);
    let t_cross = t_cross(cy);

    let g1 = QuadBezier::new(en, cn, Point::new(0.0, 0.0)).elevate();
    let g2 = QuadBezier::new(fnn, cn, Point::new(1.0, 0.0)).elevate();
    let crossing_n = g1.at(t_cross);

    let map = |p: Point| back.apply_point(p);
    let curve_ae = back.apply_unchecked(&g1);
    let curve_bf = back.apply_unchecked(&g2);
    // Pin the endpoints to the caller's points exactly.
    let curve_ae = CubicBezier { p3: a, ..curve_ae };
    let curve_bf = CubicBezier { p3: b, ..curve_bf };
    Ok(OutsidePairResult {
        e: curve_ae.p0,
        f: curve_bf.p0,
        curve_ae,
        curve_bf,
        crossing: map(crossing_n),
        t_cross,
        apex,
    })
}

/// Abscissa of `E` in the normalized frame, for apex height `cy`.
fn e_x(cy: f64) -> f64 {
    let cy2 = cy * cy;
    let disc = 16.0 * cy2 * cy2 + 48.0 * cy2 * cy + 40.0 * cy2 + 12.0 * cy + 1.0;
    0.25 * (4.0 * cy2 + 6.0 * cy - math::sqrt(disc) + 3.0)
}

/// Parameter at which the two normalized curves cross (slopes -1 and +1).
fn t_cross(cy: f64) -> f64 {
    (4.0 * cy + 1.0) / (6.0 * cy) - math::sqrt(4.0 * cy * cy + 8.0 * cy + 1.0) / (6.0 * cy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::FRAC_PI_2;

    use crate::geometry::crossing_angle;

    #[test]
    fn inscribe_examples() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(1.0, 0.0);
        let c = isosceles_inscribe(a, b, Point::new(0.5, 1.0)).unwrap();
        assert!(c.distance(Point::new(0.5, 0.9)) < 1e-15);
        let c = isosceles_inscribe(a, b, Point::new(0.0, 1.0)).unwrap();
        assert!(c.distance(Point::new(0.5, 0.45)) < 1e-15);
        assert!(isosceles_inscribe(a, b, Point::new(2.0, 0.0)).is_err());
    }

    #[test]
    fn unit_height_values() {
        let r = outside_pair(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.5, 1.0))
            .unwrap();
        let sqrt13 = math::sqrt(13.0);
        assert!((r.t_cross - (5.0 - sqrt13) / 6.0).abs() < 1e-15);
        assert!((r.e.x - (13.0 - math::sqrt(117.0)) / 4.0).abs() < 1e-15);
        assert!((r.crossing.x - 0.5).abs() < 1e-15);
        let angle = crossing_angle(&r.curve_ae, r.t_cross, &r.curve_bf, r.t_cross).unwrap();
        assert!((angle - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn slopes_are_minus_and_plus_one() {
        for &cy in &[0.01, 0.3, 1.0, 7.0, 100.0] {
            let r = outside_pair(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.5, cy))
                .unwrap();
            let d1 = r.curve_ae.deriv(r.t_cross);
            let d2 = r.curve_bf.deriv(r.t_cross);
            assert!((d1.y / d1.x + 1.0).abs() < 1e-9, "cy = {cy}");
            assert!((d2.y / d2.x - 1.0).abs() < 1e-9, "cy = {cy}");
            assert!((r.crossing.x - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn clockwise_triangle_and_endpoints() {
        let (a, b, c) = (Point::new(3.0, 1.0), Point::new(-1.0, 4.0), Point::new(-5.0, -6.0));
        let r = outside_pair(a, b, c).unwrap();
        assert_eq!(r.curve_ae.p3, a);
        assert_eq!(r.curve_bf.p3, b);
        assert!(r.curve_ae.at(r.t_cross).distance(r.curve_bf.at(r.t_cross)) < 1e-12);
    }
}
