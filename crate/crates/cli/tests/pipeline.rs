use bezier_rac::rac::{augment, draw_rac, draw_rac_detailed};
use bezier_rac::verify::{verify, Mode, VerifyOptions};
use bezier_rac::{CubicBezier, Drawing, Point};
use bezier_rac_cli::gen::gen_one_planar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn run(n: usize, fraction: f64, seed: u64) {
    let emb = gen_one_planar(n, fraction, seed).unwrap();
    let d = draw_rac(&emb).unwrap_or_else(|e| panic!("n={n} seed={seed}: {e}"));
    let r = verify(&d, Mode::Rac, &VerifyOptions::default());
    assert!(r.passed(), "n={n} seed={seed}: {:?}", &r.violations[..r.violations.len().min(5)]);
    assert_eq!(r.crossings.len(), emb.crossing_pairs.len());
}

#[test]
fn small_generated_graphs() {
    for seed in 0..10 {
        for n in [4, 6, 10, 20] {
            for f in [0.0, 0.5, 1.0] {
                run(n, f, seed);
            }
        }
    }
}

#[test]
fn declared_crossings_are_the_embedding_crossings() {
    for seed in 0..5 {
        let emb = gen_one_planar(30, 1.0, seed).unwrap();
        let layout = draw_rac_detailed(&emb).unwrap();
        let mut got: Vec<(usize, usize)> = layout
            .drawing
            .crossings
            .iter()
            .map(|c| {
                let (a, b) = (layout.edge_ids[c.e1], layout.edge_ids[c.e2]);
                (a.min(b), a.max(b))
            })
            .collect();
        let mut want: Vec<(usize, usize)> = emb.crossing_pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        got.sort_unstable();
        want.sort_unstable();
        assert_eq!(got, want, "seed {seed}");
    }
}

#[test]
fn augmentation_keeps_crossings_and_triangulates() {
    for seed in 0..10 {
        let emb = gen_one_planar(40, 0.7, seed).unwrap();
        let aug = augment(&emb).unwrap();
        let norm = |v: Vec<(usize, usize)>| v.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect::<Vec<_>>();
        let mut got = norm(aug.crossing_pairs());
        let mut want = norm(emb.crossing_pairs.clone());
        got.sort_unstable();
        want.sort_unstable();
        assert_eq!(got, want, "seed {seed}");
        assert!(aug.face_lengths().iter().all(|&l| l == 3), "seed {seed}");
        for (a, b) in aug.augmentation_edges() {
            assert!(!emb.dummies.contains(&a) && !emb.dummies.contains(&b), "augmentation edge {a}-{b} at a crossing");
        }
    }
}

/// Moves one control point of `d` by `delta`.
fn mutate(d: &Drawing, edge: usize, point: usize, delta: Point) -> Drawing {
    let mut out = d.clone();
    let mut p = out.edges[edge].curve.points();
    p[point] = p[point] + delta;
    out.edges[edge].curve = CubicBezier::new(p[0], p[1], p[2], p[3]);
    out
}

#[test]
fn mutated_drawings_fail_verification() {
    let opts = VerifyOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for seed in 0..4 {
        let emb = gen_one_planar(20, 1.0, seed).unwrap();
        let d = draw_rac(&emb).unwrap();
        assert!(verify(&d, Mode::Rac, &opts).passed());
        let crossed: Vec<usize> = d.crossings.iter().flat_map(|c| [c.e1, c.e2]).collect();
        for _ in 0..25 {
            let theta = rng.gen_range(0.0..std::f64::consts::TAU);
            let dir = Point::new(theta.cos(), theta.sin());
            // Endpoints: anything beyond the tolerance detaches the curve.
            let e = rng.gen_range(0..d.edges.len());
            let end = if rng.gen() { 0 } else { 3 };
            let r = verify(&mutate(&d, e, end, dir * (10.0 * opts.tol)), Mode::Rac, &opts);
            assert!(!r.passed(), "seed {seed}: endpoint of edge {e} moved unnoticed");
            // Inner control points of crossing edges: the crossing angle or
            // the crossing itself changes.
            let e = crossed[rng.gen_range(0..crossed.len())];
            let inner = rng.gen_range(1..3);
            let r = verify(&mutate(&d, e, inner, dir * 10.0), Mode::Rac, &opts);
            assert!(!r.passed(), "seed {seed}: control point {inner} of edge {e} moved unnoticed");
        }
    }
}
