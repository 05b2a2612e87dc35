//! Stable bases of fundamental affine sl(r+1) modules built from partition overlaid patterns.

pub mod clbasis;
pub mod cli;
pub mod error;
pub mod fock;
pub mod gtpattern;
pub mod linalg;
pub mod partitions;
pub mod pop;
pub mod report;
pub mod rootdata;
pub mod translate;
pub mod verify;

pub use error::{Error, Result};
