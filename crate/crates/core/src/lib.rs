//! Finite higher-rank graphs presented by a colored skeleton and commuting
//! squares, with exact decisions for local periodicity, cofinality and the
//! ideal structure that they control. Every verdict comes with a certificate
//! that can be re-checked without trusting the procedure that produced it.

pub mod analysis;
pub mod cli;
pub mod degree;
pub mod document;
pub mod error;
pub mod factorization;
pub mod fixtures;
pub mod ideals;
pub mod matrix;
pub mod periodicity;
pub mod random;
pub mod skeleton;
pub mod validation;

pub use degree::Degree;
pub use document::GraphDocument;
pub use error::{Error, Result};
pub use factorization::{KGraph, Path, PathDoc, SquareSpec, SwapSchedule};
pub use skeleton::{EdgeId, EdgeSpec, Skeleton, VertexId};
pub use validation::{ValidationReport, Violation};
