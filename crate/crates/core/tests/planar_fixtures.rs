use bezier_rac::planar::{draw_planar, make_fixture, FIXTURE_NAMES};
use bezier_rac::verify::{angular_resolution, max_curvature, verify, Mode, VerifyOptions};
use bezier_rac::{CubicBezier, Point};

fn all_fixtures() -> Vec<String> {
    let mut names: Vec<String> = FIXTURE_NAMES.iter().map(|s| s.to_string()).collect();
    names.extend((4..=32).map(|n| format!("wheel-{n}")));
    names.extend([3, 5, 64].iter().map(|d| format!("star-{d}")));
    names
}

#[test]
fn fixtures_draw_without_contacts() {
    for name in all_fixtures() {
        let jbd = make_fixture(&name).unwrap();
        let d = draw_planar(&jbd).unwrap();
        let r = verify(&d, Mode::Planar, &VerifyOptions::default());
        assert_eq!(r.unexpected_count(), 0, "{name}: {:?}", r.violations);
        assert!(r.crossings.is_empty(), "{name}");
    }
}

fn tangent_at(c: &CubicBezier, start: bool) -> Point {
    let [p0, p1, p2, p3] = c.points();
    let v = if start { if p1 != p0 { p1 - p0 } else { p2 - p0 } } else if p2 != p3 { p2 - p3 } else { p1 - p3 };
    v.normalize()
}

fn angle(a: Point, b: Point) -> f64 {
    a.dot(b).clamp(-1.0, 1.0).acos()
}

#[test]
fn port_tangents_meet_the_degree_bound() {
    for name in all_fixtures() {
        let jbd = make_fixture(&name).unwrap();
        let d = draw_planar(&jbd).unwrap();
        for (v, &deg) in jbd.degrees().iter().enumerate() {
            let bound = (1.0 / (10f64.sqrt() * deg as f64)).asin();
            // (tangent, ported at v)
            let mut tans = Vec::new();
            for e in &d.edges {
                if e.u == v {
                    tans.push((tangent_at(&e.curve, true), true));
                }
                if e.v == v {
                    tans.push((tangent_at(&e.curve, false), false));
                }
            }
            for i in 0..tans.len() {
                for j in i + 1..tans.len() {
                    if tans[i].1 || tans[j].1 {
                        let a = angle(tans[i].0, tans[j].0);
                        assert!(a >= bound - 1e-9, "{name} v{v}: {a} < {bound}");
                    }
                }
            }
        }
    }
}

#[test]
fn stars_meet_the_degree_bound_at_every_vertex() {
    for d in [2, 3, 4, 8, 16, 32, 64] {
        let jbd = make_fixture(&format!("star-{d}")).unwrap();
        let drawing = draw_planar(&jbd).unwrap();
        let bound = (1.0 / (10f64.sqrt() * d as f64)).asin();
        assert!(angular_resolution(&drawing, 0) >= bound - 1e-9, "star-{d}");
    }
}

#[test]
fn curvature_is_bounded_by_grid_width() {
    for name in all_fixtures() {
        let jbd = make_fixture(&name).unwrap();
        let d = draw_planar(&jbd).unwrap();
        let w = jbd.grid_width() as f64;
        let (k, bad) = max_curvature(&d, 1024);
        assert!(bad.is_empty(), "{name}");
        assert!(k <= (12.0f64 / 128.0).sqrt() * w.sqrt() + 1e-6, "{name}: {k} vs width {w}");
    }
}
