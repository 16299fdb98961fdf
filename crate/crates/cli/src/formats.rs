//! JSON file formats.
//!
//! Every format is a plain serde type with unknown fields rejected, plus a
//! conversion into the core type that runs the core validation. The matching
//! JSON Schema documents live in `schemas/`.

use std::fs;
use std::path::Path;

use bezier_rac::planar::{FreeRegion, JointBoxDrawing, JointBoxEdge, PlanarError, PortRegion};
use bezier_rac::rac::{EmbeddingError, OnePlaneEmbedding};
use bezier_rac::verify::{VerificationReport, Violation};
use bezier_rac::{CubicBezier, DeclaredCrossing, Drawing, DrawingEdge, DrawingError, Point};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid embedding: {0}")]
    Embedding(#[from] EmbeddingError),
    #[error("invalid drawing: {0}")]
    Drawing(#[from] DrawingError),
    #[error("invalid joint-box drawing: {0}")]
    JointBox(#[from] PlanarError),
    #[error("declared degree of vertex {vertex} is {declared}, but it has {actual} edges")]
    Degree { vertex: usize, declared: usize, actual: usize },
}

/// A 1-plane embedding on disk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingFile {
    pub n: usize,
    pub rotation: Vec<Vec<usize>>,
    #[serde(default)]
    pub dummies: Vec<usize>,
    #[serde(default)]
    pub crossing_pairs: Vec<[usize; 2]>,
    /// `[vertex, segment]`: the face to the left of that dart.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_face: Option<[usize; 2]>,
}

impl From<&OnePlaneEmbedding> for EmbeddingFile {
    fn from(e: &OnePlaneEmbedding) -> Self {
        EmbeddingFile {
            n: e.n,
            rotation: e.rotation.clone(),
            dummies: e.dummies.clone(),
            crossing_pairs: e.crossing_pairs.iter().map(|&(a, b)| [a, b]).collect(),
            outer_face: e.outer_face.map(|(v, s)| [v, s]),
        }
    }
}

impl EmbeddingFile {
    /// Converts and validates.
    pub fn to_embedding(&self) -> Result<OnePlaneEmbedding, FormatError> {
        let emb = OnePlaneEmbedding {
            n: self.n,
            rotation: self.rotation.clone(),
            dummies: self.dummies.clone(),
            crossing_pairs: self.crossing_pairs.iter().map(|p| (p[0], p[1])).collect(),
            outer_face: self.outer_face.map(|f| (f[0], f[1])),
        };
        emb.validate()?;
        Ok(emb)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub u: usize,
    pub v: usize,
    pub ctrl: [[f64; 2]; 4],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossingRecord {
    pub e1: usize,
    pub e2: usize,
    pub point: [f64; 2],
}

/// A drawing on disk. Numbers are written as shortest round-trip decimals,
/// so saving and loading is lossless.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingFile {
    pub vertices: Vec<[f64; 2]>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default)]
    pub crossings: Vec<CrossingRecord>,
}

fn arr(p: Point) -> [f64; 2] {
    [p.x, p.y]
}

fn pt(a: [f64; 2]) -> Point {
    Point::new(a[0], a[1])
}

impl From<&Drawing> for DrawingFile {
    fn from(d: &Drawing) -> Self {
        DrawingFile {
            vertices: d.vertices.iter().copied().map(arr).collect(),
            edges: d
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    u: e.u,
                    v: e.v,
                    ctrl: e.curve.points().map(arr),
                })
                .collect(),
            crossings: d
                .crossings
                .iter()
                .map(|c| CrossingRecord {
                    e1: c.e1,
                    e2: c.e2,
                    point: arr(c.point),
                })
                .collect(),
        }
    }
}

impl DrawingFile {
    /// Converts without validation; [`bezier_rac::verify::verify`] reports
    /// structural problems as violations.
    pub fn to_drawing(&self) -> Drawing {
        Drawing {
            vertices: self.vertices.iter().copied().map(pt).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| {
                    let [a, b, c, d] = e.ctrl.map(pt);
                    DrawingEdge {
                        u: e.u,
                        v: e.v,
                        curve: CubicBezier::new(a, b, c, d),
                    }
                })
                .collect(),
            crossings: self
                .crossings
                .iter()
                .map(|c| DeclaredCrossing {
                    e1: c.e1,
                    e2: c.e2,
                    point: pt(c.point),
                })
                .collect(),
        }
    }

    /// Converts and runs [`Drawing::validate`].
    pub fn to_valid_drawing(&self, tol: f64) -> Result<Drawing, FormatError> {
        let d = self.to_drawing();
        d.validate(tol)?;
        Ok(d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PortName {
    L,
    R,
    MLeft,
    MRight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FreeName {
    L,
    R,
    M,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JointBoxEdgeRecord {
    /// Port endpoint.
    pub a: usize,
    pub region: PortName,
    pub port: usize,
    /// Free endpoint.
    pub b: usize,
    pub free: FreeName,
    pub bend: [i64; 2],
}

/// A joint-box layout on disk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JointBoxFile {
    pub positions: Vec<[i64; 2]>,
    /// Redundant with the edge list; checked on load when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<usize>>,
    pub edges: Vec<JointBoxEdgeRecord>,
}

impl From<&JointBoxDrawing> for JointBoxFile {
    fn from(j: &JointBoxDrawing) -> Self {
        JointBoxFile {
            positions: j.positions.iter().map(|&(x, y)| [x, y]).collect(),
            degrees: Some(j.degrees()),
            edges: j
                .edges
                .iter()
                .map(|e| JointBoxEdgeRecord {
                    a: e.a,
                    region: match e.port {
                        PortRegion::L => PortName::L,
                        PortRegion::R => PortName::R,
                        PortRegion::MLeft => PortName::MLeft,
                        PortRegion::MRight => PortName::MRight,
                    },
                    port: e.index,
                    b: e.b,
                    free: match e.free {
                        FreeRegion::L => FreeName::L,
                        FreeRegion::R => FreeName::R,
                        FreeRegion::M => FreeName::M,
                    },
                    bend: [e.bend.0, e.bend.1],
                })
                .collect(),
        }
    }
}

impl JointBoxFile {
    /// Converts and validates.
    pub fn to_joint_box(&self) -> Result<JointBoxDrawing, FormatError> {
        let j = JointBoxDrawing {
            positions: self.positions.iter().map(|p| (p[0], p[1])).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| JointBoxEdge {
                    a: e.a,
                    port: match e.region {
                        PortName::L => PortRegion::L,
                        PortName::R => PortRegion::R,
                        PortName::MLeft => PortRegion::MLeft,
                        PortName::MRight => PortRegion::MRight,
                    },
                    index: e.port,
                    b: e.b,
                    free: match e.free {
                        FreeName::L => FreeRegion::L,
                        FreeName::R => FreeRegion::R,
                        FreeName::M => FreeRegion::M,
                    },
                    bend: (e.bend[0], e.bend[1]),
                })
                .collect(),
        };
        j.validate()?;
        if let Some(declared) = &self.degrees {
            let actual = j.degrees();
            for v in 0..actual.len().max(declared.len()) {
                let (d, a) = (declared.get(v).copied().unwrap_or(0), actual.get(v).copied().unwrap_or(0));
                if d != a {
                    return Err(FormatError::Degree {
                        vertex: v,
                        declared: d,
                        actual: a,
                    });
                }
            }
        }
        Ok(j)
    }
}

/// Reads and parses a JSON file.
pub fn load<T: DeserializeOwned>(path: &Path) -> Result<T, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Read {
        path: path.display().to_string(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

/// Writes `value` as pretty-printed JSON.
pub fn save<T: Serialize>(path: &Path, value: &T) -> Result<(), FormatError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).map_err(|source| FormatError::Write {
        path: path.display().to_string(),
        source,
    })
}

fn violation_json(v: &Violation) -> Value {
    match v {
        Violation::Invalid(e) => json!({"kind": "invalid-drawing", "message": e.to_string()}),
        Violation::UnexpectedIntersection { e1, e2, point } => {
            json!({"kind": "unexpected-intersection", "e1": e1, "e2": e2, "point": arr(*point)})
        }
        Violation::OverlappingEdges { e1, e2 } => json!({"kind": "overlapping-edges", "e1": e1, "e2": e2}),
        Violation::BadAngle { e1, e2, angle } => json!({"kind": "bad-angle", "e1": e1, "e2": e2, "angle": angle}),
        Violation::MissingCrossing { e1, e2 } => json!({"kind": "missing-crossing", "e1": e1, "e2": e2}),
        Violation::RepeatedCrossing { e1, e2, count } => {
            json!({"kind": "repeated-crossing", "e1": e1, "e2": e2, "count": count})
        }
        Violation::MisplacedCrossing { e1, e2, distance } => {
            json!({"kind": "misplaced-crossing", "e1": e1, "e2": e2, "distance": distance})
        }
        Violation::ResolutionShortfall { vertex, angle } => {
            json!({"kind": "resolution-shortfall", "vertex": vertex, "angle": angle})
        }
        Violation::ContainmentBreach { vertex, edge } => {
            json!({"kind": "containment-breach", "vertex": vertex, "edge": edge})
        }
        Violation::InfiniteCurvature { edge, t } => json!({"kind": "infinite-curvature", "edge": edge, "t": t}),
    }
}

/// The report as a JSON document.
pub fn report_json(r: &VerificationReport) -> Value {
    json!({
        "passed": r.passed(),
        "crossings": r.crossings.iter().map(|c| json!({
            "e1": c.e1,
            "e2": c.e2,
            "point": arr(c.point),
            "angle": c.angle,
            "declared": c.declared,
        })).collect::<Vec<_>>(),
        "violations": r.violations.iter().map(violation_json).collect::<Vec<_>>(),
        "min_angular_resolution": r.min_angular_resolution,
        "max_curvature": r.max_curvature,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_fields_are_rejected() {
        let err = serde_json::from_str::<DrawingFile>(r#"{"vertices": [], "edges": [], "extra": 1}"#);
        assert!(err.is_err());
    }

    #[test]
    fn crossings_default_to_empty() {
        let d: DrawingFile = serde_json::from_str(r#"{"vertices": [[0, 0]], "edges": []}"#).unwrap();
        assert!(d.crossings.is_empty());
    }

    #[test]
    fn degree_mismatch_is_reported() {
        let mut f = JointBoxFile::from(&bezier_rac::planar::make_fixture("single-edge").unwrap());
        f.degrees = Some(vec![1, 2]);
        assert!(matches!(f.to_joint_box(), Err(FormatError::Degree { vertex: 1, .. })));
    }

    #[test]
    fn report_lists_violations_by_kind() {
        let r = VerificationReport {
            violations: vec![Violation::MissingCrossing { e1: 0, e2: 1 }],
            ..Default::default()
        };
        let v = report_json(&r);
        assert_eq!(v["passed"], false);
        assert_eq!(v["violations"][0]["kind"], "missing-crossing");
    }
}
