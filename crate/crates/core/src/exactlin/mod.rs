//! Deterministic exact linear algebra over `Q` and `F_p`.

mod matrix;
mod scalar;
mod subspace;
mod tensor;
pub mod vector;

pub use matrix::{Echelon, Matrix};
pub use scalar::{Field, Scalar};
pub use subspace::Subspace;
pub use tensor::{closure_bilinear, is_closed, StructureTensor};
pub use vector::Vector;
