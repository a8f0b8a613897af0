//! Conservative remapping of cell averages between curvilinear quadrilateral
//! meshes with Lagrange curved edges.

pub mod clipping;
pub mod demo;
pub mod experiments;
pub mod fields;
pub mod geometry;
pub mod integrate;
pub mod mesh;
pub mod limiter;
pub mod reconstruct;
pub mod remap;
pub mod svg;
