//! Verification toolkit for quantum symmetries of small graphs.
//!
//! The crate is organised around five areas:
//!
//! - [`graph`]: simple graphs, permutations, automorphism search and the
//!   disjoint-automorphism criterion for quantum symmetry.
//! - [`boolean_group`]: the elementary abelian group `Z_2^k`, its Fourier
//!   transform pair and the folded cube graphs as Cayley graphs.
//! - [`spectral`]: closed-form spectra and eigenprojections of folded cubes,
//!   cross-checked against a dense eigensolver.
//! - [`star_algebra`]: finite-dimensional matrix models of `C*(Z_n * Z_m)` and
//!   the explicit magic-unitary witness built from two disjoint automorphisms.
//! - [`so_twist`]: the relation system of `SO_n^{-1}`, its classical points,
//!   the bicharacter twist of `C(SO_{2m+1})` and the action on folded cubes.
//!
//! Heavy loops (automorphism branches, per-word residuals, Monte-Carlo
//! samples, abelian point sweeps) run on rayon when the `parallel` feature is
//! enabled. Every result is collected in a fixed order, so output does not
//! depend on scheduling.

pub mod boolean_group;
pub mod config;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod so_twist;
pub mod spectral;
pub mod star_algebra;

pub use config::{Config, Exec};
pub use error::{Error, Result};
pub use graph::{Graph, Permutation};
