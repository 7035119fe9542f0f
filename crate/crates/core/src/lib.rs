//! Exact chromatic polynomials, list color functions and DP color functions,
//! specialized to theta graphs, with a harness that checks the known
//! identities and inequalities between them on bounded instances.
//!
//! All counts are exact. Polynomials and closed forms use arbitrary-precision
//! integers; enumeration counts are `u64` with checked arithmetic, so an
//! overflow is reported as an error rather than wrapping.

pub mod budget;
pub mod certificate;
pub mod chromatic;
pub mod dpcover;
pub mod error;
pub mod graph;
pub mod listcolor;
pub mod oracle;
pub mod poly;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Graph, ThetaGraph, ThetaSpec};
pub use poly::IntPolynomial;
