//! Exact homological invariants of finite-dimensional algebras.
//!
//! Everything is computed symbolically over the rationals: algebras are
//! given by structure constants or bound quivers, modules by action
//! matrices, and the homological layer builds minimal resolutions, Ext
//! tables, Gorenstein-projective certificates, rigidity degrees, relative
//! dominant dimensions and the Gorenstein rigidity dimension on top.
//!
//! The crate is `no_std` + `alloc`; IO, file formats and the command line
//! live in the companion `grig` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod module;




pub mod error;




pub mod idem;
pub mod mat;

pub mod quiver;
pub mod rat;



pub use error::{Error, Result};
pub use mat::{Mat, RowSpace};

pub use rat::Rat;

/// Default depth for resolutions, coresolutions and Ext tables.
pub const DEFAULT_CUTOFF: usize = 24;

/// Retry budget for randomized element searches (idempotent splitting,
/// invertible intertwiners).
pub const RETRY_BUDGET: usize = 32;
