//! An exact-arithmetic matroid and Tutte-polynomial workbench.
//!
//! The crate provides a rank-oracle matroid abstraction with the standard
//! constructions (duals, minors, direct sums, series and parallel doubling,
//! relaxations, lattice-path matroids), three independent Tutte-polynomial
//! engines, base-packing decisions with verified certificates, and an
//! inequality lab that turns the convexity and max-inequality statements
//! into executable, exactly-certified checks.

pub mod catalog;
pub mod error;
pub mod graph;
pub mod interval;
pub mod lab;
pub mod limits;
pub mod matroid;
pub mod packing;
pub mod poly;
pub mod report;
pub mod sturm;
pub mod subset;
pub mod tutte;

pub use error::{Error, Result};
pub use limits::Limits;
pub use matroid::{Descriptor, Matroid};
pub use poly::{RatPoly, TuttePolynomial};
pub use report::{CheckReport, InstanceRef, Verdict};
pub use subset::Subset;
