//! Right-angle-crossing drawings of 1-plane graphs.
//!
//! The pipeline runs [`augment`] (kites and triangulation), [`contract`]
//! (separation pairs become thick edges), a Tutte layout of every piece
//! with the crossing pairs removed, then re-inserts each crossing pair with
//! a right-angle construction and draws contracted pieces recursively into
//! empty triangles next to their thick edges.

mod augment;
mod contract;
mod convex;
mod draw;
mod embedding;
mod map;

pub use augment::{augment, AugmentedEmbedding};
pub use contract::{contract, find_separation_pair, ContractionTree};
pub use convex::{is_strictly_convex, tutte_layout, ConvexDrawing};
pub use draw::{draw_rac, draw_rac_detailed, RacLayout};
pub use embedding::{EmbeddingError, OnePlaneEmbedding, OriginalEdge};

use crate::constrained::ConstructionError;
use crate::geometry::GeometryError;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum RacError {
    #[error("invalid embedding: {0}")]
    Embedding(#[from] EmbeddingError),
    #[error("the embedding has no edges")]
    Empty,
    #[error("piece is not simple: repeated edge {u}-{v}")]
    NotSimple { u: usize, v: usize },
    #[error("piece is not 3-connected: {{{u}, {v}}} is a separation pair with no parallel edges")]
    SeparationPair { u: usize, v: usize },
    #[error("face of length {0} after removing crossings (expected 3 or 4)")]
    FaceLength(usize),
    #[error("barycentric system is singular")]
    SingularSystem,
    #[error("face through vertex {0} is not convex")]
    NonConvexFace(usize),
    #[error("no empty triangle next to thick edge {u}-{v}")]
    RegionExhausted { u: usize, v: usize },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
