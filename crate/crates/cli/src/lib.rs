//! File formats, SVG output, test-graph generation and the command-line
//! front end for `bezier-rac`.

pub mod app;
pub mod formats;
pub mod gen;
pub mod svg;
