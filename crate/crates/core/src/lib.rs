//! Exact construction and verification of linear relations between double
//! zeta values of odd weight.
//!
//! The crate builds period-polynomial eigenspaces with exact rational linear
//! algebra, derives the Type I / Type II relations they induce among the
//! formal symbols Z_{r,s} of odd weight, proves candidate relations in the
//! formal double zeta space, connects the relation vectors to the left kernel
//! of the evaluation matrix for zeta(even, odd), and double-checks everything
//! numerically with guaranteed error bounds.
//!
//! The crate is `no_std` (it allocates but never touches the platform);
//! serialization, file formats and the command-line front end live in the
//! companion CLI crate.

#![no_std]

extern crate alloc;

pub mod error;
pub mod exact;
pub mod formal;
pub mod numeric;
pub mod period;
pub mod relation;
pub mod zagier;

pub use error::{Error, Result};
pub use exact::{beta_integral, binom, HomPoly, Mat2, QMatrix, Rational};
pub use formal::{sum_formula_check, CheckOutcome, FormalSpace};
pub use numeric::{
    c_constant, convergence_table, double_zeta, restricted_ratio, restricted_sum, verify_numeric,
    zeta, ConvergenceRow, NumericReport, Precision,
};
pub use period::{
    dim_cusp_forms, dim_modular_forms, is_period_polynomial, period_basis, PeriodBasis, Sign,
};
pub use relation::{
    b_coeffs, c_coeffs, find_symmetric_h, l1, l1_alt, l2, l2_alt, lambda_from_h, type1_relation,
    type2_relation, CoeffTable, Provenance, Relation, TableKind,
};
pub use zagier::{
    canonical_relation, combine_kernel_element, relation_rank, renorm_matrices,
    renormalized_vector, unfolded_bracket, zagier_matrix, zagier_submatrix, KernelElement,
    RenormKind, RenormMatrices, ZagierMatrix,
};
