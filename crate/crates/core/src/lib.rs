//! Exact computations for conditional oriented matroids.
//!
//! Sign vectors live on ground sets `{0..n-1}` with `n <= 64`. Geometry and
//! linear algebra are generic over the scalar type; the aliases below fix
//! the exact instantiations used throughout.

pub mod circuits;
pub mod com;
pub mod error;
pub mod exactalg;
pub mod fixtures;
pub mod minors;
pub mod nbc;
pub mod realize;
pub mod rings;
pub mod scalar;
pub mod sign;

pub use circuits::{circuits, in_generator_set, om_circuits, orthogonal, realized_patterns, CircuitSet};
pub use com::{
    check_com, check_face_symmetry, check_strong_elimination, coloops, is_com, is_oriented_matroid, topes,
    AxiomKind, AxiomWitness, Com,
};
pub use error::{Error, Result};
pub use exactalg::{determinant, hermite_normal_form, in_row_span, rank, row_span_coefficients, Matrix, RowSpan};
pub use nbc::{broken_circuit, nbc_sets, verify_nbc_recursion, verify_nbc_tope, LinearOrder, NbcFamily};
pub use realize::{covectors, sign_vector_at_point, strictly_feasible, Hyperplane, OpenRegion, Strict};
pub use rings::{
    e_x_eval, f_x_eval, gr_multiply, heaviside, hilbert_series, nbc_basis_matrix, presentation, rho_eval,
    verify_presentation, EMonomial, FiltrationReport, Mode, Presentation, TopeFunction, UPoly,
};
pub use scalar::{IntScalar, OrderedField};
pub use sign::{IndexSet, Sign, SignVector, MAX_GROUND_SET};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Integer matrix over arbitrary-precision integers.
pub type IntMatrix = Matrix<Integer>;
/// Rational arrangement.
pub type Arrangement = realize::Arrangement<Rational>;
