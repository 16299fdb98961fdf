//! Brute-force oracles shared by the integration tests. None of this calls
//! into the library's intersection or curvature code.
#![allow(dead_code)]

use std::collections::HashMap;

use bezier_rac::{CubicBezier, Point};

pub fn pt(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

/// Bernstein evaluation, written out independently of the library.
pub fn bernstein(c: &CubicBezier, t: f64) -> Point {
    let s = 1.0 - t;
    let [p0, p1, p2, p3] = c.points();
    let (b0, b1, b2, b3) = (s * s * s, 3.0 * s * s * t, 3.0 * s * t * t, t * t * t);
    pt(
        b0 * p0.x + b1 * p1.x + b2 * p2.x + b3 * p3.x,
        b0 * p0.y + b1 * p1.y + b2 * p2.y + b3 * p3.y,
    )
}

fn bernstein_deriv(c: &CubicBezier, t: f64) -> Point {
    let s = 1.0 - t;
    let [p0, p1, p2, p3] = c.points();
    let d = |a: Point, b: Point| pt(b.x - a.x, b.y - a.y);
    let (q0, q1, q2) = (d(p0, p1), d(p1, p2), d(p2, p3));
    pt(
        3.0 * (s * s * q0.x + 2.0 * s * t * q1.x + t * t * q2.x),
        3.0 * (s * s * q0.y + 2.0 * s * t * q1.y + t * t * q2.y),
    )
}

/// Curvature from central differences of positions with step `h`, the
/// first derivative improved by one Richardson step. For a cubic both
/// difference quotients are then exact up to rounding.
pub fn fd_curvature(c: &CubicBezier, t: f64, h: f64) -> f64 {
    let p = |u: f64| bernstein(c, u);
    let diff = |h: f64| {
        let (a, b) = (p(t - h), p(t + h));
        ((b.x - a.x) / (2.0 * h), (b.y - a.y) / (2.0 * h))
    };
    let ((x1, y1), (x2, y2)) = (diff(h), diff(h / 2.0));
    let (dx, dy) = ((4.0 * x2 - x1) / 3.0, (4.0 * y2 - y1) / 3.0);
    let (a, m, b) = (p(t - h), p(t), p(t + h));
    let (ddx, ddy) = ((b.x - 2.0 * m.x + a.x) / (h * h), (b.y - 2.0 * m.y + a.y) / (h * h));
    (dx * ddy - dy * ddx).abs() / (dx * dx + dy * dy).powf(1.5)
}

/// Contacts of two curves found by crossing their `n`-segment polylines
/// and polishing each crossing with Newton's method. Returns
/// `(ta, tb, point)` sorted by `ta`, merging points closer than `merge`.
pub fn sampled_intersections(a: &CubicBezier, b: &CubicBezier, n: usize, merge: f64) -> Vec<(f64, f64, Point)> {
    let pa: Vec<Point> = (0..=n).map(|i| bernstein(a, i as f64 / n as f64)).collect();
    let pb: Vec<Point> = (0..=n).map(|i| bernstein(b, i as f64 / n as f64)).collect();
    let seg_len = |p: &[Point]| p.windows(2).map(|w| w[0].distance(w[1])).fold(0.0, f64::max);
    let cell = seg_len(&pa).max(seg_len(&pb)).max(1e-12);
    let key = |p: Point| ((p.x / cell).floor() as i64, (p.y / cell).floor() as i64);
    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for j in 0..n {
        let (k0, k1) = (key(pb[j]), key(pb[j + 1]));
        for x in k0.0.min(k1.0)..=k0.0.max(k1.0) {
            for y in k0.1.min(k1.1)..=k0.1.max(k1.1) {
                grid.entry((x, y)).or_default().push(j);
            }
        }
    }
    let mut raw = Vec::new();
    for i in 0..n {
        let (k0, k1) = (key(pa[i]), key(pa[i + 1]));
        let mut cand: Vec<usize> = Vec::new();
        for x in k0.0.min(k1.0)..=k0.0.max(k1.0) {
            for y in k0.1.min(k1.1)..=k0.1.max(k1.1) {
                if let Some(v) = grid.get(&(x, y)) {
                    cand.extend(v);
                }
            }
        }
        cand.sort_unstable();
        cand.dedup();
        for j in cand {
            if let Some((s, u)) = seg_cross(pa[i], pa[i + 1], pb[j], pb[j + 1]) {
                raw.push(((i as f64 + s) / n as f64, (j as f64 + u) / n as f64));
            }
        }
    }
    let mut out: Vec<(f64, f64, Point)> = Vec::new();
    for (ta, tb) in raw {
        let (ta, tb) = newton(a, b, ta, tb);
        let p = bernstein(a, ta);
        if !out.iter().any(|q| q.2.distance(p) < merge) {
            out.push((ta, tb, p));
        }
    }
    out.sort_by(|x, y| x.0.total_cmp(&y.0));
    out
}

/// Crossing of segments `ab` and `cd` with parameters in `[0, 1)`.
fn seg_cross(a: Point, b: Point, c: Point, d: Point) -> Option<(f64, f64)> {
    let r = pt(b.x - a.x, b.y - a.y);
    let s = pt(d.x - c.x, d.y - c.y);
    let den = r.x * s.y - r.y * s.x;
    if den == 0.0 {
        return None;
    }
    let w = pt(c.x - a.x, c.y - a.y);
    let t = (w.x * s.y - w.y * s.x) / den;
    let u = (w.x * r.y - w.y * r.x) / den;
    ((0.0..1.0).contains(&t) && (0.0..1.0).contains(&u)).then_some((t, u))
}

fn newton(a: &CubicBezier, b: &CubicBezier, mut ta: f64, mut tb: f64) -> (f64, f64) {
    for _ in 0..30 {
        let (pa, pb) = (bernstein(a, ta), bernstein(b, tb));
        let (fx, fy) = (pa.x - pb.x, pa.y - pb.y);
        let (da, db) = (bernstein_deriv(a, ta), bernstein_deriv(b, tb));
        // J = [da, -db]
        let det = da.x * (-db.y) - (-db.x) * da.y;
        if det.abs() < 1e-300 {
            break;
        }
        let ua = (fx * (-db.y) - (-db.x) * fy) / det;
        let ub = (da.x * fy - da.y * fx) / det;
        ta = (ta - ua).clamp(0.0, 1.0);
        tb = (tb - ub).clamp(0.0, 1.0);
        if ua.abs() < 1e-16 && ub.abs() < 1e-16 {
            break;
        }
    }
    (ta, tb)
}

/// A convex polygon from vertices in either orientation.
pub fn convex(mut v: Vec<Point>) -> bezier_rac::ConvexPolygon {
    bezier_rac::ConvexPolygon::new(v.clone()).unwrap_or_else(|_| {
        v.reverse();
        bezier_rac::ConvexPolygon::new(v).expect("convex polygon")
    })
}

/// Checks the right-angle pair for triangle `abc`: both curves inside
/// `ABC`, neither inside the open quadrilateral `ABEF`, one crossing at a
/// right angle.
pub fn check_outside_pair(a: Point, b: Point, c: Point, tol: f64, tol_angle: f64) -> Result<(), String> {
    use bezier_rac::constrained::outside_pair;
    use bezier_rac::geometry::{crossing_angle, intersect};
    let r = outside_pair(a, b, c).map_err(|e| format!("construction failed: {e}"))?;
    let abc = convex(vec![a, b, c]);
    for (name, curve) in [("AE", &r.curve_ae), ("BF", &r.curve_bf)] {
        if !abc.contains(curve, tol) {
            return Err(format!("curve {name} leaves ABC"));
        }
    }
    let abef = convex(vec![a, b, r.e, r.f]);
    for curve in [&r.curve_ae, &r.curve_bf] {
        for i in 0..=1000 {
            let p = bernstein(curve, i as f64 / 1000.0);
            if abef.inner_distance(p) > tol {
                return Err(format!("curve enters ABEF at {p:?}"));
            }
        }
    }
    let hits = intersect(&r.curve_ae, &r.curve_bf, 1e-9).map_err(|e| e.to_string())?;
    let hits = hits.points().ok_or("curves overlap")?.to_vec();
    if hits.len() != 1 {
        return Err(format!("{} crossings", hits.len()));
    }
    let h = hits[0];
    let angle = crossing_angle(&r.curve_ae, h.ta, &r.curve_bf, h.tb).map_err(|e| e.to_string())?;
    if (angle - std::f64::consts::FRAC_PI_2).abs() > tol_angle {
        return Err(format!("crossing angle {angle}"));
    }
    Ok(())
}

/// Checks [`slope_curve`](bezier_rac::constrained::slope_curve) on quad
/// `q` (counterclockwise) with diagonal `q[0] -> q[2]`.
pub fn check_slope_curve(q: &[Point; 4], x: Point, m: f64) -> Result<(), String> {
    use bezier_rac::constrained::slope_curve;
    let quad = convex(q.to_vec());
    let (start, end) = (q[0], q[2]);
    let s = slope_curve(&quad, start, end, x, m).map_err(|e| format!("construction failed: {e}"))?;
    let c = &s.curve;
    if c.p0 != start || c.p3 != end {
        return Err("endpoints moved".into());
    }
    if bernstein(c, s.t0).distance(x) > 1e-8 {
        return Err(format!("misses X by {}", bernstein(c, s.t0).distance(x)));
    }
    // Frame with start at the origin and end at (1, 0).
    let len = start.distance(end);
    let (ux, uy) = ((end.x - start.x) / len, (end.y - start.y) / len);
    let frame = |p: Point| pt(((p.x - start.x) * ux + (p.y - start.y) * uy) / len, (-(p.x - start.x) * uy + (p.y - start.y) * ux) / len);
    let d = c.deriv(s.t0);
    let dl = pt(d.x * ux + d.y * uy, -d.x * uy + d.y * ux);
    let slope = dl.y / dl.x;
    if ((slope - m) / m.abs().max(1e-300)).abs() > 1e-6 {
        return Err(format!("slope {slope} instead of {m}"));
    }
    let diam = q.iter().flat_map(|a| q.iter().map(move |b| a.distance(*b))).fold(0.0, f64::max);
    if !quad.contains(c, 1e-9 * diam) {
        return Err("curve leaves the quadrilateral".into());
    }
    let xl = frame(x);
    let delta = 1e-3;
    let mut side = [0.0f64; 2];
    for i in 1..2000 {
        let t = i as f64 / 2000.0;
        let p = frame(bernstein(c, t));
        if (p.x - xl.x) * p.y * m.signum() < -1e-12 {
            return Err(format!("curve leaves its quadrants at t = {t}"));
        }
        if t < delta || t > 1.0 - delta || (t - s.t0).abs() < delta {
            continue;
        }
        let k = usize::from(t > s.t0);
        if p.y == 0.0 || side[k] * p.y < 0.0 {
            return Err(format!("curve meets line AB at t = {t}"));
        }
        side[k] = p.y;
    }
    Ok(())
}
