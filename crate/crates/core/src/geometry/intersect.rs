//! Curve–curve intersection by recursive bounding-box subdivision.

use alloc::vec::Vec;

use super::{CubicBezier, GeometryError, Point};

/// One intersection point: `a.at(ta)` and `b.at(tb)` are within tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hit {
    pub ta: f64,
    pub tb: f64,
    pub point: Point,
}

/// Result of [`intersect`].
#[derive(Clone, Debug, PartialEq)]
pub enum Intersection {
    Points(Vec<Hit>),
    /// The curves share a sub-arc of positive length.
    Overlap,
}

impl Intersection {
    /// The hits, or `None` for an overlap.
    pub fn points(&self) -> Option<&[Hit]> {
        match self {
            Intersection::Points(h) => Some(h),
            Intersection::Overlap => None,
        }
    }
}

/// Parameters for [`intersect_with`].
#[derive(Clone, Debug, PartialEq)]
pub struct IntersectOptions {
    /// Distance below which two points count as the same.
    pub tol: f64,
    /// Parameter pairs `(ta, tb)` where contacts are expected and ignored,
    /// typically shared endpoints.
    pub exclude: Vec<(f64, f64)>,
    /// Half-width of the ignored parameter window around each excluded pair.
    pub exclusion_radius: f64,
}

impl IntersectOptions {
    pub fn new(tol: f64) -> IntersectOptions {
        IntersectOptions {
            tol,
            exclude: Vec::new(),
            exclusion_radius: DEFAULT_EXCLUSION,
        }
    }

    pub fn excluding(mut self, ta: f64, tb: f64) -> IntersectOptions {
        self.exclude.push((ta, tb));
        self
    }

    fn excluded(&self, ta: f64, tb: f64) -> bool {
        let r = self.exclusion_radius;
        self.exclude
            .iter()
            .any(|&(ea, eb)| (ta - ea).abs() <= r && (tb - eb).abs() <= r)
    }

    fn excludes_box(&self, a: (f64, f64), b: (f64, f64)) -> bool {
        let r = self.exclusion_radius;
        self.exclude.iter().any(|&(ea, eb)| {
            a.0 >= ea - r && a.1 <= ea + r && b.0 >= eb - r && b.1 <= eb + r
        })
    }
}

/// Default parameter-space exclusion radius around shared endpoints.
pub const DEFAULT_EXCLUSION: f64 = 1e-4;
/// Hits closer than this in both parameters are merged.
const CLUSTER: f64 = 1e-5;
const MAX_DEPTH: u32 = 64;
/// Overlap is declared when candidate contacts cover this much of either
/// curve's parameter range.
const OVERLAP_SPAN: f64 = 1e-3;
const MAX_CANDIDATES: usize = 1 << 14;

#[derive(Clone, Copy)]
struct Piece {
    curve: CubicBezier,
    t0: f64,
    t1: f64,
}

impl Piece {
    fn split(&self) -> (Piece, Piece) {
        let (l, r) = self.curve.split(0.5);
        let tm = 0.5 * (self.t0 + self.t1);
        (
            Piece {
                curve: l,
                t0: self.t0,
                t1: tm,
            },
            Piece {
                curve: r,
                t0: tm,
                t1: self.t1,
            },
        )
    }
}

/// Intersections of `a` and `b` with no exclusions.
pub fn intersect(a: &CubicBezier, b: &CubicBezier, tol: f64) -> Result<Intersection, GeometryError> {
    intersect_with(a, b, &IntersectOptions::new(tol))
}

/// Intersections of `a` and `b`.
///
/// Every returned hit satisfies `|a(ta) - b(tb)| < tol`; hits within
/// `1e-5` in both parameters are merged, and hits inside an exclusion
/// window are dropped.
pub fn intersect_with(
    a: &CubicBezier,
    b: &CubicBezier,
    opts: &IntersectOptions,
) -> Result<Intersection, GeometryError> {
    let tol = opts.tol;
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(GeometryError::Domain {
            name: "tol",
            value: tol,
        });
    }
    let mut cands: Vec<Candidate> = Vec::new();
    let mut stack = alloc::vec![(
        Piece {
            curve: *a,
            t0: 0.0,
            t1: 1.0
        },
        Piece {
            curve: *b,
            t0: 0.0,
            t1: 1.0
        },
        0u32
    )];
    let flat_tol = 0.25 * tol;
    while let Some((pa, pb, depth)) = stack.pop() {
        let ba = pa.curve.control_box().inflate(0.5 * tol);
        let bb = pb.curve.control_box().inflate(0.5 * tol);
        if !ba.overlaps(&bb) {
            continue;
        }
        if opts.excludes_box((pa.t0, pa.t1), (pb.t0, pb.t1)) {
            continue;
        }
        let fa = linear_deviation(&pa.curve) <= flat_tol;
        let fb = linear_deviation(&pb.curve) <= flat_tol;
        if (fa && fb) || depth >= MAX_DEPTH {
            flat_pair(&pa, &pb, tol, &mut cands);
            if cands.len() > MAX_CANDIDATES {
                return Ok(Intersection::Overlap);
            }
            continue;
        }
        let split_a = ba.diagonal() >= bb.diagonal();
        if split_a {
            let (l, r) = pa.split();
            stack.push((l, pb, depth + 1));
            stack.push((r, pb, depth + 1));
        } else {
            let (l, r) = pb.split();
            stack.push((pa, l, depth + 1));
            stack.push((pa, r, depth + 1));
        }
    }

    if is_overlap(&cands) {
        return Ok(Intersection::Overlap);
    }

    let mut raw: Vec<(f64, f64, f64)> = Vec::new();
    for c in &cands {
        let (ta, tb) = polish(a, b, c.ta, c.tb);
        let gap = a.at(ta).distance(b.at(tb));
        if gap < tol && !opts.excluded(ta, tb) {
            raw.push((ta, tb, gap));
        }
    }
    Ok(Intersection::Points(cluster(a, raw)))
}

/// Single-linkage clustering of `(ta, tb, gap)` triples; each cluster is
/// represented by its smallest-gap member.
fn cluster(a: &CubicBezier, mut raw: Vec<(f64, f64, f64)>) -> Vec<Hit> {
    raw.sort_by(|x, y| x.0.total_cmp(&y.0));
    let n = raw.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if raw[j].0 - raw[i].0 >= CLUSTER {
                break;
            }
            if (raw[j].1 - raw[i].1).abs() < CLUSTER {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[rj] = ri;
            }
        }
    }
    let mut best: Vec<Option<usize>> = alloc::vec![None; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        match best[r] {
            Some(k) if raw[k].2 <= raw[i].2 => {}
            _ => best[r] = Some(i),
        }
    }
    let mut hits: Vec<Hit> = best
        .into_iter()
        .flatten()
        .map(|k| Hit {
            ta: raw[k].0,
            tb: raw[k].1,
            point: a.at(raw[k].0),
        })
        .collect();
    hits.sort_by(|x, y| x.ta.total_cmp(&y.ta));
    hits
}

#[derive(Clone, Copy, Debug)]
struct Candidate {
    ta: f64,
    tb: f64,
    /// Parameter extent on each curve when the flat pieces were collinear
    /// and overlapping; zero for point contacts.
    span_a: (f64, f64),
    span_b: (f64, f64),
}

/// How far the piece is from the uniformly parametrized chord: both the
/// shape and the parameter speed must be close to linear for chord
/// parameters to be usable.
fn linear_deviation(c: &CubicBezier) -> f64 {
    let d1 = c.p1.distance(c.p0.lerp(c.p3, 1.0 / 3.0));
    let d2 = c.p2.distance(c.p0.lerp(c.p3, 2.0 / 3.0));
    d1.max(d2)
}

fn flat_pair(pa: &Piece, pb: &Piece, tol: f64, out: &mut Vec<Candidate>) {
    let (a0, a1) = (pa.curve.p0, pa.curve.p3);
    let (b0, b1) = (pb.curve.p0, pb.curve.p3);
    let ra = a1 - a0;
    let rb = b1 - b0;
    let la = ra.hypot();
    let lb = rb.hypot();
    let lerp_a = |s: f64| pa.t0 + (pa.t1 - pa.t0) * s;
    let lerp_b = |s: f64| pb.t0 + (pb.t1 - pb.t0) * s;

    // Collinear overlap: both chords on a common line within tol.
    if la > tol && lb > tol {
        let dist_line = |p: Point, o: Point, r: Point, l: f64| (p - o).cross(r).abs() / l;
        if dist_line(b0, a0, ra, la) <= tol && dist_line(b1, a0, ra, la) <= tol {
            let proj = |p: Point| (p - a0).dot(ra) / (la * la);
            let (s0, s1) = (proj(b0), proj(b1));
            let lo = s0.min(s1).max(0.0);
            let hi = s0.max(s1).min(1.0);
            if (hi - lo) * la > tol {
                let back = |s: f64| (a0 + ra * s - b0).dot(rb) / (lb * lb);
                let (u0, u1) = (back(lo), back(hi));
                out.push(Candidate {
                    ta: lerp_a(0.5 * (lo + hi)),
                    tb: lerp_b(0.5 * (u0 + u1)),
                    span_a: (lerp_a(lo), lerp_a(hi)),
                    span_b: (lerp_b(u0.min(u1)), lerp_b(u0.max(u1))),
                });
                return;
            }
        }
    }

    if let Some((s, u)) = super::segment_intersection(a0, a1, b0, b1) {
        out.push(point_candidate(lerp_a(s), lerp_b(u)));
        return;
    }
    // Closest approach between the two chords catches grazing contacts.
    let (s, u, d) = closest_segments(a0, a1, b0, b1);
    if d < tol {
        out.push(point_candidate(lerp_a(s), lerp_b(u)));
    }
}

fn point_candidate(ta: f64, tb: f64) -> Candidate {
    Candidate {
        ta,
        tb,
        span_a: (ta, ta),
        span_b: (tb, tb),
    }
}

fn closest_segments(a0: Point, a1: Point, b0: Point, b1: Point) -> (f64, f64, f64) {
    let proj = |p: Point, o: Point, e: Point| {
        let l2 = e.hypot2();
        if l2 == 0.0 {
            0.0
        } else {
            ((p - o).dot(e) / l2).clamp(0.0, 1.0)
        }
    };
    let ea = a1 - a0;
    let eb = b1 - b0;
    let mut best = (0.0, 0.0, f64::INFINITY);
    let mut consider = |s: f64, u: f64| {
        let d = (a0 + ea * s).distance(b0 + eb * u);
        if d < best.2 {
            best = (s, u, d);
        }
    };
    consider(0.0, proj(a0, b0, eb));
    consider(1.0, proj(a1, b0, eb));
    consider(proj(b0, a0, ea), 0.0);
    consider(proj(b1, a0, ea), 1.0);
    best
}

fn is_overlap(cands: &[Candidate]) -> bool {
    let covered = |spans: &mut Vec<(f64, f64)>| -> f64 {
        spans.sort_by(|x, y| x.0.total_cmp(&y.0));
        let mut total = 0.0;
        let mut cur: Option<(f64, f64)> = None;
        for &(lo, hi) in spans.iter() {
            match cur {
                Some((clo, chi)) if lo <= chi => cur = Some((clo, chi.max(hi))),
                Some((clo, chi)) => {
                    total += chi - clo;
                    cur = Some((lo, hi));
                }
                None => cur = Some((lo, hi)),
            }
        }
        if let Some((clo, chi)) = cur {
            total += chi - clo;
        }
        total
    };
    let mut sa: Vec<(f64, f64)> = cands
        .iter()
        .filter(|c| c.span_a.1 > c.span_a.0)
        .map(|c| c.span_a)
        .collect();
    let mut sb: Vec<(f64, f64)> = cands
        .iter()
        .filter(|c| c.span_b.1 > c.span_b.0)
        .map(|c| c.span_b)
        .collect();
    covered(&mut sa) >= OVERLAP_SPAN || covered(&mut sb) >= OVERLAP_SPAN
}

/// Newton iteration on `a(s) - b(u) = 0`, kept only if it improves the gap.
fn polish(a: &CubicBezier, b: &CubicBezier, ta: f64, tb: f64) -> (f64, f64) {
    let gap = |s: f64, u: f64| a.at(s).distance(b.at(u));
    let mut best = (ta, tb, gap(ta, tb));
    let (mut s, mut u) = (ta, tb);
    for _ in 0..16 {
        let f = a.at(s) - b.at(u);
        let da = a.deriv(s);
        let db = b.deriv(u);
        // Solve [da, -db] (ds, du)^T = -f.
        let det = -da.cross(db);
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let ds = -(f.x * -db.y - (-db.x) * f.y) / det;
        let du = -(da.x * f.y - da.y * f.x) / det;
        s = (s + ds).clamp(0.0, 1.0);
        u = (u + du).clamp(0.0, 1.0);
        let g = gap(s, u);
        if g < best.2 {
            best = (s, u, g);
        }
        if g == 0.0 || (ds.abs() < 1e-16 && du.abs() < 1e-16) {
            break;
        }
    }
    if (best.0 - ta).abs() > 1e-3 || (best.1 - tb).abs() > 1e-3 {
        // Newton wandered to a different contact; keep the subdivision hit.
        return (ta, tb);
    }
    (best.0, best.1)
}
