//! Exact computation of chromatic symmetric functions of unit interval
//! orders, their G-analogues, correct-sequence models of the e-coefficients,
//! and executable bijections between those models.
//!
//! The crate is `no_std` and only needs `alloc`. All coefficients are
//! arbitrary-precision integers.

#![no_std]

extern crate alloc;

mod error;
pub mod limits;

pub mod partitions;
pub mod polyring;
pub mod symfunc;
pub mod uio;
pub mod chromatic;
pub mod ganalogue;
pub mod corrects;
pub mod bijections;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use partitions::Partition;
pub use polyring::{VPoly, VertexMonomial};
pub use symfunc::{Basis, SymF};
pub use uio::{Graph, Uio};
