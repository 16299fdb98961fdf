//! Hand-built joint-box layouts.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::{JointBoxDrawing, PlanarError};
use crate::math::{cos, round, sin};

/// Names accepted by [`make_fixture`]; `star-d` and `wheel-n` take any
/// `d >= 1` and `4 <= n <= 32`.
pub const FIXTURE_NAMES: &[&str] = &[
    "single-edge",
    "star-2",
    "star-4",
    "star-8",
    "star-16",
    "star-32",
    "wheel-4",
    "wheel-8",
    "wheel-16",
    "two-boxes",
];

/// Builds the named fixture.
pub fn make_fixture(name: &str) -> Result<JointBoxDrawing, PlanarError> {
    let unknown = || PlanarError::UnknownFixture(name.to_string());
    let param = |prefix: &str| -> Option<usize> { name.strip_prefix(prefix)?.parse().ok() };
    if name == "single-edge" {
        JointBoxDrawing::from_layout([(0, 0), (10, 0)].into(), &[(0, 1)])
    } else if name == "two-boxes" {
        two_boxes()
    } else if let Some(d) = param("star-") {
        (d >= 1).then(|| star(d)).ok_or_else(unknown)?
    } else if let Some(n) = param("wheel-") {
        (4..=32).contains(&n).then(|| wheel(n)).ok_or_else(unknown)?
    } else {
        Err(unknown())
    }
}

/// A hub with `d` leaves, all reached through its right port region.
fn star(d: usize) -> Result<JointBoxDrawing, PlanarError> {
    let d = d as i64;
    let mut positions = Vec::with_capacity(d as usize + 1);
    positions.push((0, 0));
    for j in 0..d {
        positions.push((10 * d + 10, 10 * j));
    }
    let edges: Vec<(usize, usize)> = (1..=d as usize).map(|v| (0, v)).collect();
    JointBoxDrawing::from_layout(positions, &edges)
}

/// A hub inside a cycle of `n` rim vertices on a wide ellipse. The rim
/// avoids the sector straight above the hub, and its flatness keeps rim
/// edges shallow, so no vertex is entered from above on both sides.
fn wheel(n: usize) -> Result<JointBoxDrawing, PlanarError> {
    let radius = 10.0 * (n as f64 + 2.0);
    let mut positions = Vec::with_capacity(n + 1);
    positions.push((0, 0));
    for j in 0..n {
        let t = (135.0 + 270.0 * (j as f64 + 0.5) / n as f64).to_radians();
        let mut p = (round(3.0 * radius * cos(t)) as i64, round(radius * sin(t)) as i64);
        // Rounding can still land an edge on or next to a diagonal.
        let mut near: Vec<(i64, i64)> = alloc::vec![positions[0]];
        near.extend(positions.last().filter(|_| j > 0));
        near.extend(positions.get(1).filter(|_| j + 1 == n));
        while near.iter().any(|q| ((p.0 - q.0).abs() - (p.1 - q.1).abs()).abs() <= 1) {
            p.0 += 1;
        }
        positions.push(p);
    }
    let mut edges: Vec<(usize, usize)> = (1..=n).map(|v| (0, v)).collect();
    edges.extend((1..=n).map(|v| (v, v % n + 1)));
    JointBoxDrawing::from_layout(positions, &edges)
}

/// Two adjacent hubs with three leaves each.
fn two_boxes() -> Result<JointBoxDrawing, PlanarError> {
    let positions = [
        (0, 0),
        (60, 10),
        (-30, 7),
        (-25, -28),
        (5, -35),
        (90, 22),
        (85, -20),
        (55, -30),
    ];
    let edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)];
    JointBoxDrawing::from_layout(positions.into(), &edges)
}
