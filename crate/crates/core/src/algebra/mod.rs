//! Exact symbolic algebra: scalars, su(1,1), its enveloping and Clifford
//! algebras, and the Dirac operators built from them.

pub mod clifford;
pub mod dirac;
pub mod envelope;
pub mod lie;
pub mod number;
pub mod relative;
pub mod spin;
pub mod tensor;

use thiserror::Error;

pub use clifford::{quantize, structure_tensor, CliffElement, ExtElement};
pub use dirac::{
    cubic_dirac, dirac_square_identity, formal_adjoint, langle_squared, r_operator, real_imag_parts,
    T_CUBIC, T_HALF, T_NATURAL,
};
pub use envelope::{casimir, EnvElement};
pub use lie::{dual_basis, killing_form, LieBasisVector, LieElement};
pub use number::AlgNumber;
pub use relative::{relative_dirac, RelativeDirac, SubalgebraSpec};
pub use spin::SpinOperator;
pub use tensor::EnvCliff;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("the Killing form restricted to the subalgebra is degenerate")]
    DegenerateSubalgebra,
    #[error("the spanning set is not closed under the bracket")]
    NotASubalgebra,
    #[error("the spanning set is linearly dependent or empty")]
    InvalidSpan,
}
