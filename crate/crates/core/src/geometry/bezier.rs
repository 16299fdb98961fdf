use super::{GeometryError, Point, Rect};
use crate::math;
use crate::EPS_DERIV;

/// A cubic Bézier curve given by its control polygon.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubicBezier {
    pub p0: Point,
    pub p1: Point,
    pub p2: Point,
    pub p3: Point,
}

/// A quadratic Bézier curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadBezier {
    pub q0: Point,
    pub q1: Point,
    pub q2: Point,
}

fn check_unit(name: &'static str, t: f64) -> Result<(), GeometryError> {
    if (0.0..=1.0).contains(&t) {
        Ok(())
    } else {
        Err(GeometryError::Domain { name, value: t })
    }
}

impl CubicBezier {
    #[inline]
    pub const fn new(p0: Point, p1: Point, p2: Point, p3: Point) -> CubicBezier {
        CubicBezier { p0, p1, p2, p3 }
    }

    /// A straight segment as a cubic with control points at the thirds.
    pub fn line(a: Point, b: Point) -> CubicBezier {
        CubicBezier::new(a, a.lerp(b, 1.0 / 3.0), a.lerp(b, 2.0 / 3.0), b)
    }

    pub fn points(&self) -> [Point; 4] {
        [self.p0, self.p1, self.p2, self.p3]
    }

    pub fn is_finite(&self) -> bool {
        self.points().iter().all(|p| p.is_finite())
    }

    /// The same curve traversed backwards.
    pub fn reversed(&self) -> CubicBezier {
        CubicBezier::new(self.p3, self.p2, self.p1, self.p0)
    }

    /// Evaluates the curve; `t` must lie in `[0, 1]`.
    pub fn eval(&self, t: f64) -> Result<Point, GeometryError> {
        check_unit("t", t)?;
        Ok(self.at(t))
    }

    /// Evaluates the Bernstein form without a domain check.
    ///
    /// Returns `p0` and `p3` bit-for-bit at `t = 0` and `t = 1`.
    #[inline]
    pub fn at(&self, t: f64) -> Point {
        let mt = 1.0 - t;
        let a = mt * mt * mt;
        let b = 3.0 * mt * mt * t;
        let c = 3.0 * mt * t * t;
        let d = t * t * t;
        Point::new(
            a * self.p0.x + b * self.p1.x + c * self.p2.x + d * self.p3.x,
            a * self.p0.y + b * self.p1.y + c * self.p2.y + d * self.p3.y,
        )
    }

    /// First derivative `f'(t)`.
    #[inline]
    pub fn deriv(&self, t: f64) -> Point {
        let mt = 1.0 - t;
        let d0 = self.p1 - self.p0;
        let d1 = self.p2 - self.p1;
        let d2 = self.p3 - self.p2;
        (d0 * (mt * mt) + d1 * (2.0 * mt * t) + d2 * (t * t)) * 3.0
    }

    /// Second derivative `f''(t)`.
    #[inline]
    pub fn deriv2(&self, t: f64) -> Point {
        let a = self.p2 - self.p1 * 2.0 + self.p0;
        let b = self.p3 - self.p2 * 2.0 + self.p1;
        (a * (1.0 - t) + b * t) * 6.0
    }

    /// Unsigned curvature `|x'y'' - y'x''| / (x'^2 + y'^2)^(3/2)`.
    ///
    /// Fails with [`GeometryError::DegenerateTangent`] when `|f'(t)|` is
    /// below [`EPS_DERIV`].
    pub fn curvature_at(&self, t: f64) -> Result<f64, GeometryError> {
        self.signed_curvature_at(t).map(f64::abs)
    }

    /// Curvature with sign: positive when the curve turns left.
    pub fn signed_curvature_at(&self, t: f64) -> Result<f64, GeometryError> {
        let d1 = self.deriv(t);
        let speed2 = d1.hypot2();
        if !(speed2.is_finite() && math::sqrt(speed2) >= EPS_DERIV) {
            return Err(GeometryError::DegenerateTangent { t });
        }
        let d2 = self.deriv2(t);
        Ok(d1.cross(d2) / (speed2 * math::sqrt(speed2)))
    }

    /// De Casteljau split at `t` in the open interval `(0, 1)`.
    pub fn subdivide(&self, t: f64) -> Result<(CubicBezier, CubicBezier), GeometryError> {
        if !(t > 0.0 && t < 1.0) {
            return Err(GeometryError::Domain {
                name: "t",
                value: t,
            });
        }
        Ok(self.split(t))
    }

    #[inline]
    pub(crate) fn split(&self, t: f64) -> (CubicBezier, CubicBezier) {
        let p01 = self.p0.lerp(self.p1, t);
        let p12 = self.p1.lerp(self.p2, t);
        let p23 = self.p2.lerp(self.p3, t);
        let p012 = p01.lerp(p12, t);
        let p123 = p12.lerp(p23, t);
        let mid = p012.lerp(p123, t);
        (
            CubicBezier::new(self.p0, p01, p012, mid),
            CubicBezier::new(mid, p123, p23, self.p3),
        )
    }

    /// The piece of the curve over `[t0, t1]`.
    pub fn subsegment(&self, t0: f64, t1: f64) -> CubicBezier {
        let (from, to) = (self.at(t0), self.at(t1));
        let scale = (t1 - t0) / 3.0;
        CubicBezier::new(
            from,
            from + self.deriv(t0) * scale,
            to - self.deriv(t1) * scale,
            to,
        )
    }

    /// Bounding box of the control polygon (contains the curve).
    pub fn control_box(&self) -> Rect {
        Rect::from_points(&self.points())
    }

    /// Largest distance of an inner control point from the chord `p0 p3`.
    pub fn flatness(&self) -> f64 {
        let chord = self.p3 - self.p0;
        let len = chord.hypot();
        if len <= f64::MIN_POSITIVE {
            return (self.p1 - self.p0).hypot().max((self.p2 - self.p0).hypot());
        }
        let d1 = (self.p1 - self.p0).cross(chord).abs() / len;
        let d2 = (self.p2 - self.p0).cross(chord).abs() / len;
        // Control points beyond the chord ends also make the piece non-flat.
        let s1 = (self.p1 - self.p0).dot(chord) / len;
        let s2 = (self.p2 - self.p0).dot(chord) / len;
        let over = |s: f64| (-s).max(s - len).max(0.0);
        d1.max(d2).max(over(s1)).max(over(s2))
    }

    /// Unit tangent at `p0`, taken towards the first control point distinct
    /// from `p0`. `None` if all control points coincide.
    pub fn start_direction(&self) -> Option<Point> {
        [self.p1, self.p2, self.p3]
            .into_iter()
            .map(|p| p - self.p0)
            .find(|v| v.hypot() > EPS_DERIV)
            .map(Point::normalize)
    }

    /// Unit tangent leaving `p3` backwards along the curve.
    pub fn end_direction(&self) -> Option<Point> {
        self.reversed().start_direction()
    }

    /// Maximum curvature over `[0, 1]`: `samples` uniform samples followed
    /// by golden-section refinement around the best one. Returns `(t, kappa)`.
    pub fn max_curvature(&self, samples: usize) -> Result<(f64, f64), GeometryError> {
        let n = samples.max(2);
        let mut best = (0.0, -1.0);
        let mut best_i = 0;
        for i in 0..=n {
            let t = i as f64 / n as f64;
            let k = self.curvature_at(t)?;
            if k > best.1 {
                best = (t, k);
                best_i = i;
            }
        }
        let lo = best_i.saturating_sub(1) as f64 / n as f64;
        let hi = (best_i + 1).min(n) as f64 / n as f64;
        let refined = golden_max(|t| self.curvature_at(t), lo, hi, 60)?;
        if refined.1 > best.1 {
            best = refined;
        }
        Ok(best)
    }
}

fn golden_max<F>(f: F, mut a: f64, mut b: f64, iters: usize) -> Result<(f64, f64), GeometryError>
where
    F: Fn(f64) -> Result<f64, GeometryError>,
{
    let r = (math::sqrt(5.0) - 1.0) / 2.0;
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    for _ in 0..iters {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d)?;
        }
    }
    Ok(if fc > fd { (c, fc) } else { (d, fd) })
}

impl QuadBezier {
    #[inline]
    pub const fn new(q0: Point, q1: Point, q2: Point) -> QuadBezier {
        QuadBezier { q0, q1, q2 }
    }

    pub fn eval(&self, t: f64) -> Result<Point, GeometryError> {
        check_unit("t", t)?;
        let mt = 1.0 - t;
        Ok(self.q0 * (mt * mt) + self.q1 * (2.0 * mt * t) + self.q2 * (t * t))
    }

    /// The cubic tracing the same curve with the same parametrization.
    pub fn elevate(&self) -> CubicBezier {
        CubicBezier::new(
            self.q0,
            (self.q0 + self.q1 * 2.0) * (1.0 / 3.0),
            (self.q1 * 2.0 + self.q2) * (1.0 / 3.0),
            self.q2,
        )
    }
}

/// Acute angle in `[0, pi/2]` between the tangents of `a` at `ta` and `b`
/// at `tb`.
pub fn crossing_angle(
    a: &CubicBezier,
    ta: f64,
    b: &CubicBezier,
    tb: f64,
) -> Result<f64, GeometryError> {
    check_unit("ta", ta)?;
    check_unit("tb", tb)?;
    let da = a.deriv(ta);
    let db = b.deriv(tb);
    if !(da.hypot() >= EPS_DERIV) {
        return Err(GeometryError::DegenerateTangent { t: ta });
    }
    if !(db.hypot() >= EPS_DERIV) {
        return Err(GeometryError::DegenerateTangent { t: tb });
    }
    Ok(math::atan2(da.cross(db).abs(), da.dot(db).abs()))
}
