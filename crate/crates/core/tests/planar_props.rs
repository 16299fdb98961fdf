use bezier_rac::geometry::{intersect_with, IntersectOptions};
use bezier_rac::planar::{gamma_curve, EdgeCurveParams};
use proptest::prelude::*;

/// `(b1, b2, d, i)` inside the admissible wedge.
fn edge() -> impl Strategy<Value = (f64, f64, usize, usize)> {
    (1.01f64..1000.0, 0.0f64..1.0, 1usize..64)
        .prop_flat_map(|(b1, u, d)| (Just(b1), Just(u * (b1 - 1.0) * 0.999), Just(d), 1..=d))
}

fn contacts(a: &bezier_rac::CubicBezier, b: &bezier_rac::CubicBezier, opts: IntersectOptions) -> usize {
    intersect_with(a, b, &opts).unwrap().points().map_or(usize::MAX, |h| h.len())
}

proptest! {
    #[test]
    fn curves_stay_in_the_open_wedge((b1, b2, d, i) in edge()) {
        let g = gamma_curve(b1, b2, i, d).unwrap();
        for j in 1..1000 {
            let p = g.at(j as f64 / 1000.0);
            prop_assert!(p.x > p.y && p.y > 0.0, "{:?}", p);
        }
    }

    #[test]
    fn changing_k_nests_the_curves((b1, b2, d, i) in edge().prop_filter("two ports", |e| e.2 >= 2), lower in 1usize..64) {
        let j = 1 + lower % (d - 1).max(1);
        let (hi, lo) = (i.max(j), i.min(j));
        prop_assume!(hi != lo);
        let g1 = gamma_curve(b1, b2, hi, d).unwrap();
        let g2 = gamma_curve(b1, b2, lo, d).unwrap();
        let opts = IntersectOptions::new(1e-9).excluding(0.0, 0.0).excluding(1.0, 1.0);
        prop_assert_eq!(contacts(&g1, &g2, opts), 0);
        // Rotate so that P1 -> P2 points straight up; g2 is then above g1.
        let p1 = EdgeCurveParams::new(b1, b2, hi, d).unwrap().p;
        let p2 = EdgeCurveParams::new(b1, b2, lo, d).unwrap().p;
        let up = (p2 - p1).normalize();
        for k in 1..100 {
            let t = k as f64 / 100.0;
            let gap = g2.at(t) - g1.at(t);
            prop_assert!(gap.dot(up) > 0.0);
            prop_assert!(gap.cross(up).abs() <= 1e-9 * gap.hypot().max(1.0));
        }
    }

    #[test]
    fn moving_b_keeps_curves_apart(
        (b1, b2, d, i) in edge(),
        lift in 1.0f64..50.0,
        lean in -1.0f64..1.0,
    ) {
        // C is counterclockwise of B, and BC makes an angle in [pi/4, 3pi/4].
        let (c1, c2) = (b1 + lean * lift, b2 + lift);
        prop_assume!(c2 < c1 - 1.0);
        let g1 = gamma_curve(b1, b2, i, d).unwrap();
        let g2 = gamma_curve(c1, c2, i, d).unwrap();
        let opts = IntersectOptions::new(1e-9).excluding(0.0, 0.0);
        prop_assert_eq!(contacts(&g1, &g2, opts), 0);
        let shear = |p: bezier_rac::Point| (p.x - p.y, p.x + p.y);
        for g in [&g1, &g2] {
            let mut last = shear(g.at(0.0));
            for k in 1..=400 {
                let s = shear(g.at(k as f64 / 400.0));
                prop_assert!(s.0 >= last.0 - 1e-12 && s.1 >= last.1 - 1e-12);
                last = s;
            }
        }
    }

    /// The normalized bound holds once `b1` is past about 7; see the
    /// acceptance run for the full sweep from `b1 = 4`.
    #[test]
    fn normalized_curvature_bound_for_longer_edges(
        b1 in 8.0f64..5000.0, u in 0.0f64..1.0, k in 0.001f64..0.999, t in 0.0f64..=1.0,
    ) {
        let b2 = u * (b1 - 1.0) * 0.999;
        // Any k in (0, 1) is some i / (d + 1); build the curve directly.
        let s = b2 / b1;
        let q = bezier_rac::Point::new(1.0 + 0.5 * s, 0.5 * s);
        let p = bezier_rac::Point::new(1.0, 1.0).lerp(q, k);
        let g = bezier_rac::CubicBezier::new(bezier_rac::Point::ORIGIN, p, p, bezier_rac::Point::new(b1, b2));
        let kappa = g.curvature_at(t).unwrap();
        prop_assert!(kappa * kappa / b1 <= 12.0 / 128.0 + 1e-6, "{}", kappa * kappa / b1);
    }

    #[test]
    fn curvature_below_three_at_b1_four(u in 0.0f64..1.0, k in 0.0f64..=1.0, t in 0.0f64..=1.0) {
        let (b1, s) = (4.0, u);
        let q = bezier_rac::Point::new(1.0 + 0.5 * s, 0.5 * s);
        let p = bezier_rac::Point::new(1.0, 1.0).lerp(q, k);
        let g = bezier_rac::CubicBezier::new(bezier_rac::Point::ORIGIN, p, p, bezier_rac::Point::new(b1, s * b1));
        prop_assert!(g.curvature_at(t).unwrap() < 3.0);
    }
}
