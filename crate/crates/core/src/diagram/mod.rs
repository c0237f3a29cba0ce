//! Knot diagrams: PD codes, faces, checkerboard colorings and Goeritz forms.

mod faces;
mod goeritz;
mod pd;

pub use faces::{build_faces, checkerboard, Coloring, Corner, FaceComplex};
pub use goeritz::{definite_goeritz, goeritz_matrix, FormSource, GoeritzForm};
pub use pd::{parse_pd, PlanarDiagram};
