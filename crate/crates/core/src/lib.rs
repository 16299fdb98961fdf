//! Graph drawing with one cubic Bézier curve per edge.
//!
//! The crate has two drawing pipelines and a verifier:
//!
//! * [`rac`] turns a combinatorial 1-plane embedding into a 1-planar drawing
//!   where every crossing is at a right angle (a RAC drawing). Crossing edges
//!   are built from the constrained curve constructions in [`constrained`].
//! * [`planar`] replaces the one-bend edges of a joint-box layout with single
//!   cubic curves that keep angular resolution proportional to `1/degree(v)`
//!   and curvature `O(sqrt(n))`.
//! * [`verify`] certifies any [`Drawing`] numerically: intersection census,
//!   crossing angles, angular resolution and curvature.
//!
//! Everything here is pure computation over immutable inputs, so the crate is
//! `no_std` (it needs `alloc`). File formats, rendering and the command-line
//! front end live in the companion `bezier-rac-cli` crate.
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod constrained;
mod drawing;
pub mod geometry;
mod math;
pub mod planar;
pub mod rac;
pub mod verify;

pub use drawing::{DeclaredCrossing, Drawing, DrawingEdge, DrawingError};
pub use geometry::{AffineMap, ConvexPolygon, CubicBezier, Point, QuadBezier};

/// Tolerance used by geometric predicates (orientation, containment).
pub const EPS_GEOM: f64 = 1e-9;

/// Below this speed a tangent is considered degenerate.
pub const EPS_DERIV: f64 = 1e-12;
