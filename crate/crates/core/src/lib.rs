//! Normal coverings and independent sets of classes for linear groups
//! `SL_n(q) <= G <= GL_n(q)`.
//!
//! The crate is `no_std` (it needs `alloc`). It contains the integer and
//! finite-field kernels, the witness-matrix constructors, the covering and
//! independent-set constructions, the bounds engine, and a shape-level
//! verification harness. File formats and the command line live in the
//! `normcov` crate.
#![no_std]

extern crate alloc;

pub mod bounds;
pub mod covering;
pub mod error;
pub mod gf;
pub mod matgroup;
pub mod numtheory;
pub mod verify;

pub use error::{Error, Result};
