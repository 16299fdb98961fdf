use alloc::vec::Vec;

use crate::geometry::{CubicBezier, Point, Rect};

/// A drawn graph: vertex positions and one cubic curve per edge.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Drawing {
    pub vertices: Vec<Point>,
    pub edges: Vec<DrawingEdge>,
    /// Pairs of edges (indices into `edges`) that are meant to cross.
    pub crossings: Vec<DeclaredCrossing>,
}

/// An edge from `u` to `v`; `curve.p0` sits at `u` and `curve.p3` at `v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DrawingEdge {
    pub u: usize,
    pub v: usize,
    pub curve: CubicBezier,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeclaredCrossing {
    pub e1: usize,
    pub e2: usize,
    pub point: Point,
}

/// Structural problems found by [`Drawing::validate`].
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum DrawingError {
    #[error("edge {edge} references vertex {vertex}, but there are only {count} vertices")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        count: usize,
    },
    #[error("edge {0} has non-finite control points")]
    NonFinite(usize),
    #[error("edge {0} does not start and end at its endpoint positions")]
    DetachedEndpoint(usize),
    #[error("crossing {0} references a missing edge")]
    CrossingOutOfRange(usize),
    #[error("vertex {0} has a non-finite position")]
    NonFiniteVertex(usize),
}

impl Drawing {
    /// Bounding box of all vertices and control points.
    pub fn bounding_box(&self) -> Option<Rect> {
        let mut pts: Vec<Point> = self.vertices.clone();
        for e in &self.edges {
            pts.extend_from_slice(&e.curve.points());
        }
        if pts.is_empty() {
            None
        } else {
            Some(Rect::from_points(&pts))
        }
    }

    /// Checks indices, finiteness and that each curve is attached to its
    /// endpoints (within `tol`).
    pub fn validate(&self, tol: f64) -> Result<(), DrawingError> {
        let count = self.vertices.len();
        for (i, p) in self.vertices.iter().enumerate() {
            if !p.is_finite() {
                return Err(DrawingError::NonFiniteVertex(i));
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            for vertex in [e.u, e.v] {
                if vertex >= count {
                    return Err(DrawingError::VertexOutOfRange {
                        edge: i,
                        vertex,
                        count,
                    });
                }
            }
            if !e.curve.is_finite() {
                return Err(DrawingError::NonFinite(i));
            }
            if e.curve.p0.distance(self.vertices[e.u]) > tol
                || e.curve.p3.distance(self.vertices[e.v]) > tol
            {
                return Err(DrawingError::DetachedEndpoint(i));
            }
        }
        for (i, c) in self.crossings.iter().enumerate() {
            if c.e1 >= self.edges.len() || c.e2 >= self.edges.len() {
                return Err(DrawingError::CrossingOutOfRange(i));
            }
        }
        Ok(())
    }

    /// Degree of every vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = alloc::vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn validate_catches_detached_edge() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(1.0, 0.0);
        let mut d = Drawing {
            vertices: vec![a, b],
            edges: vec![DrawingEdge {
                u: 0,
                v: 1,
                curve: CubicBezier::line(a, b),
            }],
            crossings: vec![],
        };
        assert_eq!(d.validate(1e-9), Ok(()));
        d.edges[0].curve.p3 = Point::new(1.0, 1.0);
        assert_eq!(d.validate(1e-9), Err(DrawingError::DetachedEndpoint(0)));
        d.edges[0].v = 5;
        assert!(matches!(
            d.validate(1e-9),
            Err(DrawingError::VertexOutOfRange { .. })
        ));
    }
}
