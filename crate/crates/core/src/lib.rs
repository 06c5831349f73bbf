//! Exact counting of 3 x n Latin rectangles over `lambda` symbols.
//!
//! The count equals the chromatic polynomial of `K3 □ Kn` (the line graph of
//! `K_{3,n}`) at `lambda`. The crate computes it through several independent
//! routes and checks them against each other:
//!
//! * closed forms in [`formulas`],
//! * deletion–contraction on the graph itself in [`chromatic`],
//! * brute-force enumeration in [`oracle`].
//!
//! [`verify`] bundles the cross-checks and [`table`] renders counts for the CLI.

pub mod chromatic;
pub mod combinatorics;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod oracle;
pub mod poly;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, SplitParams};
pub use num_bigint::BigInt;
pub use poly::Poly;
