//! Resonances and residue representations for the Laplacian on rank one
//! Riemannian symmetric spaces of non-compact type.
//!
//! The crate is `no_std` and only needs an allocator. Weight arithmetic is
//! exact; floating point appears only in density evaluation, quadrature and
//! growth-rate fitting.
#![no_std]

extern crate alloc;

pub mod branching;
pub mod plancherel;
pub mod error;
pub mod liealg;
pub mod numverify;
pub mod rational;
pub mod residuerep;
pub mod resonances;

pub use error::{Error, Result};
pub use rational::Q;
