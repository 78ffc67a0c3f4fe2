//! Exact and certified computations for the cubic Dirac operator on SU(1,1).
//!
//! - [`algebra`]: exact symbolic identities in `U(su(1,1)) ⊗ Cl(su(1,1))`.
//! - [`fibers`]: the Dirac operators realized on tempered representations as
//!   banded operators on weight spaces.
//! - [`series`]: certified enclosures of the spectral series that control
//!   summability of the resolvent.
//! - [`verify`]: the verification harness behind the `verify` binary.

pub mod algebra;
pub mod fibers;
pub mod series;
pub mod verify;
