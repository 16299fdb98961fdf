//! Curve constructions with prescribed crossing behaviour.
//!
//! * [`outside_pair`] draws two curves inside a triangle `ABC` that start at
//!   `A` and `B`, stay outside the quadrilateral `ABEF` they close off, and
//!   cross once at a right angle.
//! * [`slope_curve`] replaces the diagonal `AB` of a convex quadrilateral by
//!   a cubic that passes through a chosen point `X` of `AB` with a chosen
//!   slope, staying inside the quadrilateral.

mod outside;
mod slope;

pub use outside::{isosceles_inscribe, outside_pair, OutsidePairResult};
pub use slope::{
    baseline_curve, fit_r, right_angle_curve, slope_curve, RightAngleCurve,
    RightAngleCurveParams, SlopeCurveSpec, MIRROR_THRESHOLD,
};

use crate::geometry::GeometryError;

/// Safety factor applied to every containment-fitted size.
pub const SAFETY: f64 = 0.9;

#[derive(Clone, Copy, Debug, PartialEq, thiserror::Error)]
pub enum ConstructionError {
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("{name} = {value} is outside its domain")]
    Domain { name: &'static str, value: f64 },
    #[error("construction infeasible: {0}")]
    Infeasible(&'static str),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
