use alloc::vec::Vec;

use super::{ConstructionError, SAFETY};
use crate::geometry::{AffineMap, ConvexPolygon, CubicBezier, Point};
use crate::math;

/// Beyond this crossing abscissa the frame is mirrored by `x -> 1 - x`.
pub const MIRROR_THRESHOLD: f64 = 8.0 / 9.0;

/// Control data of the right-angle curve `f1` in the normalized frame.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RightAngleCurveParams {
    pub x0: f64,
    pub d1x: f64,
    pub c1: Point,
    pub d1: Point,
    pub t0: f64,
    pub r: f64,
}

/// `f1` runs from `(0,0)` through `(x0, 0)` with a vertical tangent at `t0`
/// to `(1,0)`; its x-coordinate is monotone.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RightAngleCurve {
    pub curve: CubicBezier,
    pub params: RightAngleCurveParams,
}

/// Result of [`slope_curve`].
#[derive(Clone, Debug, PartialEq)]
pub struct SlopeCurveSpec {
    pub quad: ConvexPolygon,
    pub x: Point,
    /// Requested slope, relative to the frame where `start -> end` is the
    /// positive x-axis.
    pub m: f64,
    /// Weight of `f1` in the blend `k f1 + (1 - k) f2`.
    pub k: f64,
    /// Signed scale of `f1` after fitting.
    pub r: f64,
    /// Parameter at which the curve passes through `x`.
    pub t0: f64,
    /// Whether the construction ran in the mirrored frame.
    pub mirrored: bool,
    /// The curve, from `start` to `end`.
    pub curve: CubicBezier,
}

/// Builds `f1` for crossing abscissa `x0` in `(0, 8/9]` and scale `r != 0`.
pub fn right_angle_curve(x0: f64, r: f64) -> Result<RightAngleCurve, ConstructionError> {
    if !(x0 > 0.0 && x0 <= MIRROR_THRESHOLD) {
        return Err(ConstructionError::Domain {
            name: "x0",
            value: x0,
        });
    }
    if r == 0.0 || !r.is_finite() {
        return Err(ConstructionError::Domain {
            name: "r",
            value: r,
        });
    }
    let d1x = x0 + math::cbrt(x0 * x0 - x0 * x0 * x0);
    let c1x = 0.5 * (d1x - math::sqrt((4.0 * d1x - 3.0 * d1x * d1x).max(0.0)));
    let c1y = (1.0 - 2.0 * c1x + d1x) / (2.0 * d1x - c1x) * r;
    let t0 = (c1x - 2.0 * d1x) / (-1.0 + 3.0 * c1x - 3.0 * d1x);
    if !(t0 > 0.0 && t0 < 1.0) {
        return Err(ConstructionError::Infeasible("t0 outside (0, 1)"));
    }
    let d1 = Point::new(d1x, -r);
    let c1 = Point::new(c1x, c1y);
    let curve = CubicBezier::new(Point::new(0.0, 0.0), d1, c1, Point::new(1.0, 0.0));
    Ok(RightAngleCurve {
        curve,
        params: RightAngleCurveParams {
            x0,
            d1x,
            c1,
            d1,
            t0,
            r,
        },
    })
}

/// The straight curve `f2` on the x-axis from `(0,0)` to `(1,0)` with
/// `f2(t0) = (x0, 0)`.
pub fn baseline_curve(x0: f64, t0: f64) -> Result<CubicBezier, ConstructionError> {
    if !(t0 > 0.0 && t0 < 1.0) {
        return Err(ConstructionError::Domain {
            name: "t0",
            value: t0,
        });
    }
    let c = Point::new((x0 - t0 * t0 * t0) / (3.0 * (1.0 - t0) * t0), 0.0);
    Ok(CubicBezier::new(Point::new(0.0, 0.0), c, c, Point::new(1.0, 0.0)))
}

/// Largest `|r|` (times 0.9) for which the bounding kite of `f1` fits in
/// `target`, a convex polygon in the normalized frame containing the
/// segment from `(0,0)` to `(1,0)`.
///
/// The kite is `(0,0), (x0, -r x0/D1x), (1,0), (x0, r K)`; the bound holds
/// for either sign of `r`.
pub fn fit_r(target: &ConvexPolygon, x0: f64, d1x: f64, c1x: f64) -> Result<f64, ConstructionError> {
    let tol = 1e-9;
    if !target.contains_point(Point::new(0.0, 0.0), tol)
        || !target.contains_point(Point::new(1.0, 0.0), tol)
    {
        return Err(ConstructionError::Infeasible("target does not contain segment AB"));
    }
    let (up, down) = vertical_extent(target, x0)
        .ok_or(ConstructionError::Infeasible("target has no extent at x0"))?;
    let below = x0 / d1x;
    let above = (1.0 - 2.0 * c1x + d1x) * (x0 - 1.0) / ((c1x - 1.0) * (2.0 * d1x - c1x));
    if !(below > 0.0 && above > 0.0) {
        return Err(ConstructionError::Infeasible("bounding kite is degenerate"));
    }
    // r > 0 puts the `below` vertex under the axis; r < 0 swaps the sides.
    let pos = (up / above).min(down / below);
    let neg = (up / below).min(down / above);
    let r = SAFETY * pos.min(neg);
    if !(r > 0.0) {
        return Err(ConstructionError::Infeasible("target is flat at x0"));
    }
    Ok(r)
}

/// Heights above and below the x-axis of `poly` along the line `x = x0`.
fn vertical_extent(poly: &ConvexPolygon, x0: f64) -> Option<(f64, f64)> {
    let v = poly.vertices();
    let n = v.len();
    let mut ys: Vec<f64> = Vec::new();
    for i in 0..n {
        let (p, q) = (v[i], v[(i + 1) % n]);
        if (p.x - x0) * (q.x - x0) <= 0.0 && p.x != q.x {
            let s = (x0 - p.x) / (q.x - p.x);
            ys.push(p.y + (q.y - p.y) * s);
        } else if p.x == x0 {
            ys.push(p.y);
        }
    }
    let hi = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = ys.iter().copied().fold(f64::INFINITY, f64::min);
    (hi.is_finite() && lo.is_finite()).then_some((hi.max(0.0), (-lo).max(0.0)))
}

/// Replaces the diagonal `start -> end` of `quad` by a cubic through `x`
/// with slope `m`.
///
/// The slope is measured in the frame where `start` is the origin and `end`
/// is `(1, 0)`. For `m != 0` the curve meets the line through `start` and
/// `end` only at `start`, `x` and `end`; for `m = 0` it is the straight
/// diagonal.
pub fn slope_curve(
    quad: &ConvexPolygon,
    start: Point,
    end: Point,
    x: Point,
    m: f64,
) -> Result<SlopeCurveSpec, ConstructionError> {
    if !m.is_finite() {
        return Err(ConstructionError::Domain {
            name: "m",
            value: m,
        });
    }
    let to_unit = AffineMap::segment_to_unit(start, end)?;
    let xn = to_unit.apply_point(x);
    if xn.y.abs() > 1e-7 {
        return Err(ConstructionError::Degenerate("X is not on the diagonal"));
    }
    let x0 = xn.x;
    let scale = start.distance(end);
    if !(x0 * scale > 1e-9 * scale.max(1.0) && (1.0 - x0) * scale > 1e-9 * scale.max(1.0)) {
        return Err(ConstructionError::Degenerate("X coincides with an endpoint"));
    }
    let mirrored = x0 > MIRROR_THRESHOLD;
    // frame: unit frame, or its mirror image x -> 1 - x.
    let frame = if mirrored {
        AffineMap {
            linear: [[-1.0, 0.0], [0.0, 1.0]],
            translation: Point::new(1.0, 0.0),
        }
        .compose(&to_unit)
    } else {
        to_unit
    };
    let (x0, m_frame) = if mirrored { (1.0 - x0, -m) } else { (x0, m) };

    let mut local: Vec<Point> = quad.vertices().iter().map(|&p| frame.apply_point(p)).collect();
    if mirrored {
        local.reverse();
    }
    let local_quad = ConvexPolygon::new(local)?;

    let probe = right_angle_curve(x0, 1.0)?;
    let params = probe.params;
    let t0 = params.t0;
    let f2 = baseline_curve(x0, t0)?;
    let r_abs = fit_r(&local_quad, x0, params.d1x, params.c1.x)?;

    // Orient f1 so that its vertical tangent at t0 points the way m does.
    let probe_dy = probe.curve.deriv(t0).y;
    let sign = if (probe_dy > 0.0) == (m_frame >= 0.0) { 1.0 } else { -1.0 };
    let f1 = right_angle_curve(x0, sign * r_abs)?;
    let d1 = f1.curve.deriv(t0);
    let d2 = f2.deriv(t0);
    let k = m_frame * d2.x / (d1.y + m_frame * (d2.x - d1.x));
    if !(0.0..=1.0).contains(&k) {
        return Err(ConstructionError::Infeasible("blend weight k outside [0, 1]"));
    }
    let blend = |a: Point, b: Point| a * k + b * (1.0 - k);
    let f3 = CubicBezier::new(
        Point::new(0.0, 0.0),
        blend(f1.curve.p1, f2.p1),
        blend(f1.curve.p2, f2.p2),
        Point::new(1.0, 0.0),
    );

    let back = frame.inverse()?;
    let mut curve = back.apply_unchecked(&f3);
    let mut t_out = t0;
    if mirrored {
        curve = curve.reversed();
        t_out = 1.0 - t0;
    }
    curve.p0 = start;
    curve.p3 = end;
    Ok(SlopeCurveSpec {
        quad: quad.clone(),
        x,
        m,
        k,
        r: f1.params.r,
        t0: t_out,
        mirrored,
        curve,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn diamond(h: f64) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.5, -h),
            Point::new(1.0, 0.0),
            Point::new(0.5, h),
        ])
        .unwrap()
    }

    #[test]
    fn half_way_values() {
        let f = right_angle_curve(0.5, 1.0).unwrap();
        assert_eq!(f.params.d1x, 1.0);
        assert_eq!(f.params.c1.x, 0.0);
        assert_eq!(f.params.t0, 0.5);
        let p = f.curve.at(0.5);
        assert!(p.distance(Point::new(0.5, 0.0)) < 1e-15);
        assert!(f.curve.deriv(0.5).x.abs() < 1e-15);
    }

    #[test]
    fn threshold_values() {
        let f = right_angle_curve(8.0 / 9.0, 1.0).unwrap();
        assert!((f.params.d1x - 4.0 / 3.0).abs() < 1e-15);
        assert!((f.params.c1.x - 2.0 / 3.0).abs() < 1e-15);
        assert!((f.params.t0 - 2.0 / 3.0).abs() < 1e-15);
        assert!(right_angle_curve(0.9, 1.0).is_err());
        assert!(right_angle_curve(0.0, 1.0).is_err());
        assert!(right_angle_curve(0.5, 0.0).is_err());
    }

    #[test]
    fn baseline_values() {
        let f2 = baseline_curve(0.5, 0.5).unwrap();
        assert_eq!(f2.p1, Point::new(0.5, 0.0));
        let f2 = baseline_curve(8.0 / 9.0, 2.0 / 3.0).unwrap();
        assert!((f2.p1.x - 8.0 / 9.0).abs() < 1e-15);
        assert!(baseline_curve(0.5, 0.0).is_err());
        assert!(baseline_curve(0.5, 1.0).is_err());
    }

    #[test]
    fn fit_r_on_diamond() {
        let r = fit_r(&diamond(0.25), 0.5, 1.0, 0.0).unwrap();
        assert!((r - 0.9 * 0.5).abs() < 1e-15);
    }

    #[test]
    fn unit_slope_at_midpoint() {
        let s = slope_curve(
            &diamond(0.5),
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.5, 0.0),
            1.0,
        )
        .unwrap();
        // f1y'(1/2) = 3r/2 and f2x'(1/2) = 3/4, so k = 1/(2r + 1).
        assert!(s.r > 0.0);
        assert!((s.r - 0.9).abs() < 1e-15);
        assert!((s.k - 1.0 / (2.0 * s.r + 1.0)).abs() < 1e-15);
        let d = s.curve.deriv(s.t0);
        assert!((d.y / d.x - 1.0).abs() < 1e-12);
        assert!(s.curve.at(s.t0).distance(Point::new(0.5, 0.0)) < 1e-15);
        assert!(s.quad.contains(&s.curve, 1e-12));
    }

    #[test]
    fn unit_scale_gives_one_third() {
        // Target sized so that fit_r returns exactly |r| = 1.
        let h = 1.0 / 1.8;
        let s = slope_curve(
            &diamond(h),
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.5, 0.0),
            1.0,
        )
        .unwrap();
        assert!((s.r - 1.0).abs() < 1e-15);
        assert!((s.k - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn mirrored_frame() {
        let quad = ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.95, -0.3),
            Point::new(1.0, 0.0),
            Point::new(0.9, 0.4),
        ])
        .unwrap();
        let x = Point::new(0.95, 0.0);
        let s = slope_curve(&quad, Point::new(0.0, 0.0), Point::new(1.0, 0.0), x, -2.0).unwrap();
        assert!(s.mirrored);
        assert_eq!(s.curve.p0, Point::new(0.0, 0.0));
        assert!(s.curve.at(s.t0).distance(x) < 1e-12);
        let d = s.curve.deriv(s.t0);
        assert!((d.y / d.x + 2.0).abs() < 1e-9);
        assert!(quad.contains(&s.curve, 1e-12));
    }

    #[test]
    fn zero_slope_is_the_diagonal() {
        let s = slope_curve(
            &diamond(0.5),
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.3, 0.0),
            0.0,
        )
        .unwrap();
        assert_eq!(s.k, 0.0);
        assert!(s.curve.points().iter().all(|p| p.y == 0.0));
    }
}
