//! Finite braces and deformed set-theoretic solutions of the Yang-Baxter equation.
//!
//! Structures are Cayley tables over `{0, ..., n-1}`; every property is
//! decided by exhaustive scans, which keeps the library usable as its own
//! oracle at desk scale (carriers of a few dozen elements).

pub mod brace;
pub mod catalog;
pub mod deform;
pub mod error;
pub mod io;
pub mod report;
pub mod scan;
pub mod table;
pub mod truss;
pub mod ybe;

pub use error::{Error, Result};
