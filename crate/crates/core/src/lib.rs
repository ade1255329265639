//! Exact symbolic engine for kinematical Lie algebras.
//!
//! Structure constants live over [`scalar::Scalar`], an exact Laurent
//! polynomial ring with Gaussian-rational coefficients. On top of that sit
//! enveloping-algebra normal forms ([`uea`]), Casimir verification
//! ([`casimir`]), Inonu-Wigner contractions ([`contraction`]), and the
//! interpretation layer that labels Casimirs as observables ([`mhi`]).

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod casimir;
pub mod catalog;
pub mod cli;
pub mod contraction;
pub mod expr;
pub mod io;
pub mod limit;
pub mod mhi;
pub mod report;
pub mod scalar;
pub mod uea;

pub use algebra::{BasisChange, Generator, LieAlgebra, LinComb, Renaming, ValidationReport};
pub use scalar::{GaussianRational, Scalar};
pub use uea::{Element, Uea};
