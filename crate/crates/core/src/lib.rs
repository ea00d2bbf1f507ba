//! Certification of nonnegative trigonometric polynomials.
//!
//! A trigonometric polynomial `T(t) = y0 + Σ Re(y_m e^{imt})` is nonnegative
//! exactly when it is the squared modulus of an algebraic polynomial on the
//! unit circle (Fejér–Riesz). This crate factors such polynomials, classifies
//! membership in the cone of nonnegative coefficient vectors with numeric and
//! algebraic certificates, computes the resultant/discriminant forms whose
//! zero set carries the cone boundary, and applies the machinery to test
//! starlike univalence of polynomials on the unit disk.
//!
//! Exact Gaussian-rational arithmetic is the default for every identity
//! check; floating arithmetic enters only where roots are required.
//!
//! The crate is `no_std` compatible (with `alloc`); the companion `poscone`
//! binary carries IO, JSON formats and the command-line front end.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod cone;
pub mod elim;
mod error;
pub mod poly;
pub mod quadmap;
pub mod roots;
pub mod sample;
pub mod scalar;
pub mod starlike;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
