//! Exact computations with finite (twisted) Weyl groups: good-position braid
//! representatives, codimension checks for nilpotent orbits and dimension
//! formulas for affine Springer fibers.

pub mod braid;
pub mod cli;
pub mod cyclo;
pub mod eigen;
pub mod error;
pub mod goodbraid;
pub mod orbits;
pub mod partition;
pub mod rootsys;
pub mod springer;

pub use error::{Error, Result};
