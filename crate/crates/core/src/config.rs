//! Tolerances, enumeration bounds and the execution policy.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How data-parallel loops are executed.
///
/// `Parallel` silently degrades to sequential execution when the crate is
/// built without the `parallel` feature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Order-preserving map over a slice.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Order-preserving map over an index range.
    pub fn map_range<U, F>(self, range: Range<usize>, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(usize) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().map(f).collect(),
            _ => range.map(f).collect(),
        }
    }

    /// Maximum of `f` over the range (0.0 for an empty range).
    ///
    /// `f64::max` is associative and commutative, so the parallel reduction
    /// is bit-identical to the sequential one.
    pub fn max_range<F>(self, range: Range<usize>, f: F) -> f64
    where
        F: Fn(usize) -> f64 + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().map(f).reduce(|| 0.0, f64::max),
            _ => range.map(f).fold(0.0, f64::max),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// Eigenvector residuals and twisted/Monte-Carlo relation defects.
    pub residual_tol: f64,
    /// Projector identities (idempotence, symmetry, resolution of identity).
    pub projector_tol: f64,
    /// Algebraic defects of magic-unitary witnesses.
    pub algebra_tol: f64,
    /// Lower bar for reporting a noncommutativity certificate as positive.
    pub certificate_floor: f64,
    /// Largest graph handed to the automorphism search.
    pub max_automorphism_vertices: usize,
    /// Stop the automorphism search once this many have been found.
    pub max_automorphisms: usize,
    /// Largest `n - 1` accepted when building folded cubes.
    pub max_fold_width: u32,
    /// Largest matrix handed to the dense symmetric eigensolver.
    pub max_dense_vertices: usize,
    pub exec: Exec,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            residual_tol: 1e-9,
            projector_tol: 1e-10,
            algebra_tol: 1e-10,
            certificate_floor: 1e-2,
            max_automorphism_vertices: 32,
            max_automorphisms: 1 << 20,
            max_fold_width: 12,
            max_dense_vertices: 2048,
            exec: Exec::default(),
        }
    }
}

impl Config {
    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    /// Replace every pass/fail tolerance with `tol`.
    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.residual_tol = tol;
        self.projector_tol = tol;
        self.algebra_tol = tol;
        self
    }
}
