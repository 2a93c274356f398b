//! Drawings, sampled data and printable meshes.
//!
//! Every writer targets a `std::io::Write`; nothing here touches the filesystem.

mod arcs;
mod data;
mod mesh;
mod stl;
mod svg;

pub use arcs::{partition_arcs, Arc, ArcSet};
pub use data::{write_csv, write_json};
pub use mesh::{tube_sweep, tube_sweep_range, TriMesh, TubeParams, TubeSweep};
pub use stl::{write_stl, STL_HEADER};
pub use svg::{write_svg, write_svg_polylines, SvgStyle, DEFAULT_PALETTE};
