//! Exact Moore-Penrose inverses of incidence matrices, Laplacian
//! pseudoinverses, resistance distances, Kirchhoff indices and spanning-tree
//! counts for the ladder `L_n`, the circular ladder `CL_n` and the Möbius
//! ladder `M_n`.
//!
//! Closed forms live in [`closed_form`]; [`linalg`] holds an independent
//! elimination oracle over the rationals, and [`verify`] compares the two.

#![forbid(unsafe_code)]

pub mod closed_form;
pub mod error;
pub mod export;
pub mod graph;
pub mod linalg;
pub mod sequences;
pub mod verify;

pub use closed_form::{ClosedFormResult, MatrixKind};
pub use error::{Error, Result};
pub use graph::{build_graph, Family, FamilySpec, OrientedGraph};
pub use linalg::RationalMatrix;
