//! Numerical certification of a [`Drawing`].
//!
//! Everything here reads only the drawing itself: vertex positions, edge
//! curves and the declared crossings.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use crate::drawing::{Drawing, DrawingError};
use crate::geometry::{crossing_angle, intersect_with, CubicBezier, IntersectOptions, Point};
use crate::math::{acos_clamped, sqrt};

/// Tolerances for [`verify`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    /// Allowed deviation of a crossing angle from a right angle, radians.
    pub tol_angle: f64,
    /// Distance below which two curves touch.
    pub tol: f64,
    /// Parameter radius around shared endpoints in which contacts are
    /// ignored.
    pub endpoint_exclusion: f64,
    pub curvature_samples: usize,
    /// Smallest acceptable angle between edges at a vertex.
    pub min_resolution: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tol_angle: 1e-6,
            tol: 1e-9,
            endpoint_exclusion: 1e-4,
            curvature_samples: 1024,
            min_resolution: 1e-9,
        }
    }
}

/// Which properties [`verify`] certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Declared crossings must exist exactly once and be right angles.
    Rac,
    /// No crossings at all.
    Planar,
}

/// A contact between two edges away from shared endpoints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Contact {
    pub e1: usize,
    pub e2: usize,
    pub point: Point,
    pub angle: f64,
    pub declared: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    Invalid(DrawingError),
    UnexpectedIntersection { e1: usize, e2: usize, point: Point },
    OverlappingEdges { e1: usize, e2: usize },
    BadAngle { e1: usize, e2: usize, angle: f64 },
    MissingCrossing { e1: usize, e2: usize },
    RepeatedCrossing { e1: usize, e2: usize, count: usize },
    /// The declared crossing point is not where the curves meet.
    MisplacedCrossing { e1: usize, e2: usize, distance: f64 },
    ResolutionShortfall { vertex: usize, angle: f64 },
    /// A vertex lies on an edge that is not incident to it.
    ContainmentBreach { vertex: usize, edge: usize },
    InfiniteCurvature { edge: usize, t: f64 },
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub crossings: Vec<Contact>,
    pub violations: Vec<Violation>,
    /// Per vertex; `PI` for vertices of degree below 2.
    pub min_angular_resolution: Vec<f64>,
    pub max_curvature: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn unexpected_count(&self) -> usize {
        self.violations
            .iter()
            .filter(|v| matches!(v, Violation::UnexpectedIntersection { .. } | Violation::OverlappingEdges { .. }))
            .count()
    }
}

/// Full check of `d`: census, mode-specific crossing audit, angular
/// resolution, curvature and vertex containment.
pub fn verify(d: &Drawing, mode: Mode, opts: &VerifyOptions) -> VerificationReport {
    if let Err(e) = d.validate(opts.tol.max(1e-12)) {
        return VerificationReport {
            violations: vec![Violation::Invalid(e)],
            ..Default::default()
        };
    }
    let mut report = census(d, opts);
    match mode {
        Mode::Rac => check_rac(d, &mut report, opts.tol_angle),
        Mode::Planar => {
            for c in &report.crossings {
                report.violations.push(Violation::UnexpectedIntersection {
                    e1: c.e1,
                    e2: c.e2,
                    point: c.point,
                });
            }
        }
    }
    report.min_angular_resolution = (0..d.vertices.len()).map(|v| angular_resolution(d, v)).collect();
    for (v, &a) in report.min_angular_resolution.iter().enumerate() {
        if a < opts.min_resolution {
            report.violations.push(Violation::ResolutionShortfall { vertex: v, angle: a });
        }
    }
    let (kappa, cusps) = max_curvature(d, opts.curvature_samples);
    report.max_curvature = kappa;
    report.violations.extend(cusps);
    report.violations.extend(containment(d, opts.tol));
    report
}

/// All pairwise contacts between edges, ignoring touches at shared
/// endpoints. Overlaps are reported as violations right away.
pub fn census(d: &Drawing, opts: &VerifyOptions) -> VerificationReport {
    let mut report = VerificationReport::default();
    let declared: BTreeMap<(usize, usize), usize> = d
        .crossings
        .iter()
        .enumerate()
        .map(|(i, c)| ((c.e1.min(c.e2), c.e1.max(c.e2)), i))
        .collect();
    for (i, j) in candidate_pairs(d, opts.tol) {
        let (a, b) = (&d.edges[i], &d.edges[j]);
        let mut o = IntersectOptions::new(opts.tol);
        o.exclusion_radius = opts.endpoint_exclusion;
        for (ta, va) in [(0.0, a.u), (1.0, a.v)] {
            for (tb, vb) in [(0.0, b.u), (1.0, b.v)] {
                if va == vb {
                    o = o.excluding(ta, tb);
                }
            }
        }
        match intersect_with(&a.curve, &b.curve, &o) {
            Ok(hits) => match hits.points() {
                Some(hits) => {
                    for h in hits {
                        report.crossings.push(Contact {
                            e1: i,
                            e2: j,
                            point: h.point,
                            angle: crossing_angle(&a.curve, h.ta, &b.curve, h.tb).unwrap_or(0.0),
                            declared: declared.contains_key(&(i, j)),
                        });
                    }
                }
                None => report.violations.push(Violation::OverlappingEdges { e1: i, e2: j }),
            },
            Err(_) => report.violations.push(Violation::OverlappingEdges { e1: i, e2: j }),
        }
    }
    report
}

/// Edge pairs whose control boxes overlap, by a sweep over `x`.
fn candidate_pairs(d: &Drawing, tol: f64) -> Vec<(usize, usize)> {
    let boxes: Vec<_> = d.edges.iter().map(|e| e.curve.control_box().inflate(tol)).collect();
    let mut order: Vec<usize> = (0..boxes.len()).collect();
    order.sort_by(|&a, &b| boxes[a].min.x.total_cmp(&boxes[b].min.x));
    let mut out = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    for &i in &order {
        active.retain(|&j| boxes[j].max.x >= boxes[i].min.x);
        for &j in &active {
            if boxes[i].overlaps(&boxes[j]) {
                out.push((i.min(j), i.max(j)));
            }
        }
        active.push(i);
    }
    out.sort_unstable();
    out
}

/// Audits the census against the declared crossings.
pub fn check_rac(d: &Drawing, report: &mut VerificationReport, tol_angle: f64) {
    let mut found: BTreeMap<(usize, usize), Vec<Contact>> = BTreeMap::new();
    for c in &report.crossings {
        if c.declared {
            found.entry((c.e1, c.e2)).or_default().push(*c);
        } else {
            report.violations.push(Violation::UnexpectedIntersection {
                e1: c.e1,
                e2: c.e2,
                point: c.point,
            });
        }
    }
    for dc in &d.crossings {
        let key = (dc.e1.min(dc.e2), dc.e1.max(dc.e2));
        let hits = found.get(&key).map_or(&[][..], Vec::as_slice);
        match hits.len() {
            0 => report.violations.push(Violation::MissingCrossing { e1: key.0, e2: key.1 }),
            1 => {
                let c = hits[0];
                if (c.angle - FRAC_PI_2).abs() > tol_angle {
                    report.violations.push(Violation::BadAngle {
                        e1: key.0,
                        e2: key.1,
                        angle: c.angle,
                    });
                }
                let scale = d.bounding_box().map_or(1.0, |b| b.diagonal().max(1.0));
                let dist = c.point.distance(dc.point);
                if dist > 1e-6 * scale {
                    report.violations.push(Violation::MisplacedCrossing {
                        e1: key.0,
                        e2: key.1,
                        distance: dist,
                    });
                }
            }
            n => report.violations.push(Violation::RepeatedCrossing {
                e1: key.0,
                e2: key.1,
                count: n,
            }),
        }
    }
}

/// Unit tangent directions of the edges at `v`.
fn tangents(d: &Drawing, v: usize) -> Vec<Point> {
    let mut out = Vec::new();
    for e in &d.edges {
        if e.u == v {
            out.extend(e.curve.start_direction());
        }
        if e.v == v {
            out.extend(e.curve.end_direction());
        }
    }
    out
}

/// Smallest angle between two edge tangents at `v`; `PI` below degree 2.
pub fn angular_resolution(d: &Drawing, v: usize) -> f64 {
    let t = tangents(d, v);
    if t.len() < 2 {
        return PI;
    }
    let mut best = PI;
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            best = best.min(acos_clamped(t[i].dot(t[j])));
        }
    }
    best
}

/// Largest curvature over the open parameter interval of every edge, and a
/// violation for every interior cusp.
pub fn max_curvature(d: &Drawing, samples: usize) -> (f64, Vec<Violation>) {
    let mut best: f64 = 0.0;
    let mut bad = Vec::new();
    for (i, e) in d.edges.iter().enumerate() {
        match edge_max_curvature(&e.curve, samples) {
            Ok(k) => best = best.max(k),
            Err(t) => bad.push(Violation::InfiniteCurvature { edge: i, t }),
        }
    }
    (best, bad)
}

/// Maximum curvature of `c` over `(0, 1)`; `Err(t)` at a cusp. Curves with
/// collinear control points count as straight.
pub fn edge_max_curvature(c: &CubicBezier, samples: usize) -> Result<f64, f64> {
    let scale = c.control_box().diagonal();
    if c.flatness() <= 1e-12 * scale && collinear_monotone(c) {
        return Ok(0.0);
    }
    let n = samples.max(4);
    let k = |t: f64| c.curvature_at(t).map_err(|_| t);
    let mut best = (0.0, 0usize);
    for i in 1..n {
        let v = k(i as f64 / n as f64)?;
        if v > best.0 {
            best = (v, i);
        }
    }
    // Golden-section refinement on the bracketing samples, kept off the
    // endpoints.
    let edge = 1e-9;
    let mut a = ((best.1 as f64 - 1.0) / n as f64).max(edge);
    let mut b = ((best.1 as f64 + 1.0) / n as f64).min(1.0 - edge);
    let r = (sqrt(5.0) - 1.0) / 2.0;
    let mut x1 = b - r * (b - a);
    let mut x2 = a + r * (b - a);
    let (mut f1, mut f2) = (k(x1)?, k(x2)?);
    for _ in 0..80 {
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = k(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = k(x2)?;
        }
    }
    Ok(best.0.max(f1).max(f2))
}

/// Straight curves whose inner control points do not double back.
fn collinear_monotone(c: &CubicBezier) -> bool {
    let chord = c.p3 - c.p0;
    let s1 = (c.p1 - c.p0).dot(chord);
    let s2 = (c.p2 - c.p0).dot(chord);
    let l2 = chord.hypot2();
    (0.0..=l2).contains(&s1) && (0.0..=l2).contains(&s2) && s1 <= s2
}

/// Vertices of positive degree that sit on non-incident edges.
fn containment(d: &Drawing, tol: f64) -> Vec<Violation> {
    let mut degree = vec![0usize; d.vertices.len()];
    for e in &d.edges {
        degree[e.u] += 1;
        degree[e.v] += 1;
    }
    let mut out = Vec::new();
    for (ei, e) in d.edges.iter().enumerate() {
        let bbox = e.curve.control_box().inflate(tol);
        for (v, &p) in d.vertices.iter().enumerate() {
            if degree[v] == 0 || v == e.u || v == e.v || !bbox.contains(p) {
                continue;
            }
            let point = CubicBezier::line(p, p);
            let o = IntersectOptions::new(tol);
            if let Ok(hits) = intersect_with(&e.curve, &point, &o) {
                if hits.points().map_or(true, |h| !h.is_empty()) {
                    out.push(Violation::ContainmentBreach { vertex: v, edge: ei });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{DeclaredCrossing, DrawingEdge};

    fn straight(vertices: &[(f64, f64)], edges: &[(usize, usize)]) -> Drawing {
        let vertices: Vec<Point> = vertices.iter().map(|&p| p.into()).collect();
        let edges = edges
            .iter()
            .map(|&(u, v)| DrawingEdge {
                u,
                v,
                curve: CubicBezier::line(vertices[u], vertices[v]),
            })
            .collect();
        Drawing {
            vertices,
            edges,
            crossings: Vec::new(),
        }
    }

    fn diagonals(top: f64) -> Drawing {
        let mut d = straight(
            &[(0.0, 0.0), (2.0, 0.0), (1.0, -top), (1.0, top)],
            &[(0, 1), (2, 3)],
        );
        d.crossings.push(DeclaredCrossing {
            e1: 0,
            e2: 1,
            point: Point::new(1.0, 0.0),
        });
        d
    }

    #[test]
    fn disjoint_edges_have_no_contacts() {
        let d = straight(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)], &[(0, 1), (2, 3)]);
        let r = verify(&d, Mode::Planar, &VerifyOptions::default());
        assert!(r.crossings.is_empty());
        assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn perpendicular_diagonals_pass() {
        let d = diagonals(1.0);
        let r = verify(&d, Mode::Rac, &VerifyOptions::default());
        assert_eq!(r.crossings.len(), 1);
        assert!((r.crossings[0].angle - FRAC_PI_2).abs() < 1e-12);
        assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn skew_diagonals_fail_with_bad_angle() {
        // Segments (0,0)-(2,0) and (0,-1)-(2,1) meet at 45 degrees.
        let mut d = straight(&[(0.0, 0.0), (2.0, 0.0), (0.0, -1.0), (2.0, 1.0)], &[(0, 1), (2, 3)]);
        d.crossings.push(DeclaredCrossing {
            e1: 0,
            e2: 1,
            point: Point::new(1.0, 0.0),
        });
        let r = verify(&d, Mode::Rac, &VerifyOptions::default());
        assert!(r.violations.iter().any(|v| matches!(v, Violation::BadAngle { .. })));
    }

    #[test]
    fn undeclared_crossing_is_unexpected() {
        let mut d = diagonals(1.0);
        d.crossings.clear();
        let r = verify(&d, Mode::Rac, &VerifyOptions::default());
        assert_eq!(r.unexpected_count(), 1);
    }

    #[test]
    fn perpendicular_edges_resolution() {
        let d = straight(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)], &[(0, 1), (0, 2)]);
        assert!((angular_resolution(&d, 0) - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(angular_resolution(&d, 1), PI);
    }

    #[test]
    fn coincident_tangents_give_zero_resolution() {
        let mut d = straight(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0)], &[(0, 1)]);
        d.edges.push(DrawingEdge {
            u: 0,
            v: 2,
            curve: CubicBezier::new(
                Point::new(0.0, 0.0),
                Point::new(1.0, 0.0),
                Point::new(2.0, 0.0),
                Point::new(2.0, 1.0),
            ),
        });
        assert_eq!(angular_resolution(&d, 0), 0.0);
        let r = verify(&d, Mode::Planar, &VerifyOptions::default());
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::ResolutionShortfall { vertex: 0, .. })));
    }

    #[test]
    fn straight_drawing_has_zero_curvature() {
        let d = straight(&[(0.0, 0.0), (3.0, 1.0), (1.0, 4.0)], &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(max_curvature(&d, 64).0, 0.0);
    }

    #[test]
    fn arch_curvature() {
        let c = CubicBezier::new(
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
        );
        // Curvature peaks at the ends, approached from inside.
        let k = edge_max_curvature(&c, 1024).unwrap();
        assert!((k - 8.0 / 3.0).abs() < 1e-6, "{k}");
    }

    #[test]
    fn cusp_is_reported() {
        let c = CubicBezier::new(
            Point::new(0.0, 0.0),
            Point::new(2.0, 1.0),
            Point::new(0.0, 1.0),
            Point::new(2.0, 0.0),
        );
        // deriv(1/2) = 3/4 (p3 + p2 - p1 - p0) = 0.
        assert!(edge_max_curvature(&c, 1024).is_err());
    }

    #[test]
    fn vertex_on_edge_is_a_breach() {
        let d = straight(&[(0.0, 0.0), (2.0, 0.0), (1.0, 0.0), (1.0, 1.0)], &[(0, 1), (2, 3)]);
        let r = verify(&d, Mode::Planar, &VerifyOptions::default());
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::ContainmentBreach { vertex: 2, edge: 0 })));
    }
}
