//! Combinatorial invariants of finite simplicial complexes and executable
//! upper-bound statements built on them.
//!
//! The crate is organised bottom-up:
//!
//! - [`complex`]: facet-defined complexes, faces, links and skeleta.
//! - [`vectors`]: exact f-, h- and short simplicial h-vector transforms.
//! - [`linalg`]: fraction-free integer rank used by the homology module.
//! - [`homology`]: reduced rational Betti numbers and link-based classifiers.
//! - [`cyclic`]: boundary complexes of cyclic polytopes via Gale evenness.
//! - [`verifier`]: pass/fail reports for the upper-bound inequalities,
//!   Dehn–Sommerville symmetry and the Buchsbaum lower bounds.
//! - [`corpus`] and [`io`]: named generators and the facet-list file format.
//! - [`cli`]: the `ubc` command-line front end.

pub mod cli;
pub mod complex;
pub mod corpus;
pub mod cyclic;
pub mod error;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod vectors;
pub mod verifier;

pub use complex::{Face, SimplicialComplex, Vertex};
pub use error::{Error, Result};
pub use vectors::{FVector, HVector, Rational, ShortHVector};
