//! Consensus Patterns: exact solvers, and an executable parameterized
//! reduction from Multi-Colored Clique together with the checks that its
//! correctness rests on.
//!
//! * [`stringcore`]: alphabets, weighted instances, Hamming machinery, the objective.
//! * [`solvers`]: two independent exhaustive solvers that serve as oracles for each other.
//! * [`cliquegraph`]: colored graphs and a brute-force multicolored clique search.
//! * [`reduction`]: graph → instance, decoding, and the per-lemma / theorem checks.
//! * [`harness`]: seeded generators and the round-trip suite.
//!
//! Enumeration loops run on rayon when the `parallel` feature is on (the
//! default); results never depend on the worker count.

pub mod cliquegraph;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod harness;
pub mod reduction;
pub mod solvers;
pub mod stringcore;

pub use error::{Error, Result};
pub use exec::Exec;
