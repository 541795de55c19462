//! Exact computer algebra for Temperley-Lieb and Jones-Wenzl diagram algebras.
//!
//! Coefficients live in Q(q) ([`coeff::RingElem`]) or in a cyclotomic
//! specialization at a root of unity; every identity is checked as an exact
//! structural equality.

pub mod cache;
pub mod coeff;
pub mod diagrams;
pub mod error;
pub mod genrel;
pub mod jw;
pub mod linalg;
pub mod meander;
pub mod networks;
pub mod render;
pub mod suites;
pub mod tangle;
pub mod wenzl;

pub use error::{Error, Result};
