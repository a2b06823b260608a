//! Algebras, coalgebras and Hopf algebras with verified constructions.

mod algebra;
mod hopf;
mod maps;

pub use algebra::{end_algebra, end_element_to_matrix, matrix_algebra, matrix_to_end_element, tensor_product_algebra, AlgebraData};
pub use hopf::{dual_hopf, verify_hopf_axioms, verify_structure, CoalgebraData, HopfAlgebraData};
pub use maps::{check_algebra_morphism, check_isomorphism, LinearMapData};
