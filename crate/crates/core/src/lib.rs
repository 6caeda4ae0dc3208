//! su(2)_P representations and the finite oscillator with an equidistant
//! position spectrum.
//!
//! - [`algebra`]: representations, relation and Casimir checks
//! - [`orthopoly`]: hypergeometric sums, dual Hahn functions, Krawtchouk,
//!   Laguerre, Hermite and parabose functions
//! - [`oscillator`]: position/momentum operators, eigenvector matrices and
//!   wavefunctions
//! - [`spectral`]: an independent tridiagonal eigen-oracle
//! - [`dunkl`]: reflection-differential realizations on polynomials

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod dunkl;
pub mod error;
pub mod export;
pub mod field;
pub mod linalg;
pub mod orthopoly;
pub mod oscillator;
pub mod spectral;
pub mod surd;

pub use algebra::{
    admissible, build_exact, build_representation, casimir_value, coeff_a, highest_weight, verify_alpha_factorization,
    AlgebraParams, ExactRep, HalfInt, RelationReport, RepMatrices, Sign,
};
pub use error::{Error, Result};
pub use field::Field;
pub use linalg::{BandMatrix, RepScalar, Scalar, TridiagonalOperator};
pub use orthopoly::{DualHahnParams, GridFunction};
pub use oscillator::{
    analytic_u, analytic_v, boundary_limit_check, hamiltonian_spectrum, momentum_operator, position_operator,
    scaled_limit_error, wavefunction, EigvecMatrixU, Kind, Side, WavefunctionTable,
};
pub use spectral::{char_poly_exact, inverse_iteration_vector, sturm_eigenvalues, CharPoly};
pub use surd::Surd;
