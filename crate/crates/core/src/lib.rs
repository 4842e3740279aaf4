//! Exact construction and verification of peripheric chains of twists for
//! U(sl(N)), their Jordanian and Reshetikhin enlargements, and the
//! classical r-matrices, carrier algebras and Frobenius forms attached to them.
//!
//! Every identity is checked with exact rational (or jet) arithmetic in
//! concrete matrix representations, so a check either holds exactly or
//! reports the entries where it fails.

pub mod error;
pub mod exactring;
pub mod hopfverify;
pub mod classical;
pub mod linalg;
pub mod liealg;
pub mod report;
pub mod suites;
pub mod tensorexpr;
pub mod twistlib;

pub use error::{Error, Result};
