//! Exact tools for the Yang–Baxter and braid equations: finite set-theoretic
//! solutions and their extensions, rational R-matrices and r-matrices, finite
//! dimensional Hopf algebras, and words in braid-like groups together with
//! their permutation representations.

pub mod braid;
pub mod error;
pub mod extension;
pub mod group;
pub mod hopf;
pub mod io;
pub mod linear;
pub mod matrix;
mod par;
pub mod product;
pub mod report;
pub mod ybset;

pub use error::{Error, Result};
pub use report::{CheckReport, Failure};
