//! File formats, mesh export, diagnostics and benchmarking.

pub mod bench;
pub mod json;
pub mod mesh;
pub mod report;

pub use bench::benchmark;
pub use json::{parse_simplex, parse_spatch, parse_trimmed, simplex_to_json, spatch_to_json, trimmed_to_json};
pub use mesh::{spatch_mesh, trimmed_mesh, Mesh};
pub use report::{build_report, convert_timed, ConversionReport};
