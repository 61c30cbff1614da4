//! Exact rational linear algebra used as an independent oracle for the
//! closed forms.

mod elimination;
mod matrix;
mod oracle;
mod pseudo;

pub use elimination::{bareiss_determinant, bareiss_integer, gauss_jordan_inverse, rank};
pub use matrix::{EntryDiff, RationalMatrix};
pub use oracle::{
    kirchhoff_from_lplus, matrix_tree_count, matrix_tree_count_deleting, path_sum_resistance,
    resistance_from_lplus, resistance_matrix_from_lplus,
};
pub use pseudo::{penrose_check, pinv_incidence, pinv_laplacian, PenroseReport};
