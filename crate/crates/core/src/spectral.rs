//! Spectra, eigenspaces and eigenprojections of folded cube graphs.
//!
//! The eigenvector attached to a word `w` is the character `ψ(T_w)` with
//! eigenvalue `Σ_s (-1)^{w_s} + (-1)^{|w|}`. For odd `n` the distinct
//! eigenvalues are `λ_k = n - 2k`, `k` even, and level `k` is spanned by the
//! words of length `k` or `k - 1`, giving multiplicity `C(n, k)`.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::boolean_group::{self, character, GroupWord};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::{is_automorphism, Graph, Permutation};

pub fn eigenvalue_of_bits(bits: GroupWord, n: u32) -> Result<i64> {
    if n == 0 || bits.width() != n - 1 {
        return Err(Error::dimension(
            n.saturating_sub(1) as usize,
            bits.width() as usize,
        ));
    }
    Ok(eigenvalue(bits))
}

fn eigenvalue(w: GroupWord) -> i64 {
    let ones = w.weight() as i64;
    let zeros = w.width() as i64 - ones;
    let parity = if ones % 2 == 0 { 1 } else { -1 };
    zeros - ones + parity
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Level {
    pub k: u32,
    pub lambda: i64,
    pub basis: Vec<GroupWord>,
}

impl Level {
    pub fn multiplicity(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenData {
    pub n: u32,
    pub levels: Vec<Level>,
}

impl EigenData {
    pub fn level(&self, k: u32) -> Option<&Level> {
        self.levels.iter().find(|l| l.k == k)
    }
}

/// Groups words by eigenvalue; `k = (n - λ) / 2`. Levels come out sorted by `k`.
fn group_levels(n: u32) -> Vec<Level> {
    let width = n - 1;
    let mut by_k: BTreeMap<u32, Vec<GroupWord>> = BTreeMap::new();
    for w in GroupWord::all(width) {
        let k = ((n as i64 - eigenvalue(w)) / 2) as u32;
        by_k.entry(k).or_default().push(w);
    }
    by_k.into_iter()
        .map(|(k, basis)| Level {
            k,
            lambda: n as i64 - 2 * k as i64,
            basis,
        })
        .collect()
}

pub fn eigen_data(n: u32) -> Result<EigenData> {
    eigen_data_with(n, &Config::default())
}

/// Eigenvalue levels of `FQ_n` for odd `n`.
///
/// Besides grouping by eigenvalue, checks that level `k` consists exactly of
/// the words of length `k` or `k - 1`.
pub fn eigen_data_with(n: u32, cfg: &Config) -> Result<EigenData> {
    check_odd(n)?;
    check_width(n, cfg)?;
    let levels = group_levels(n);
    for level in &levels {
        let by_length = GroupWord::all(n - 1)
            .filter(|w| w.weight() == level.k || w.weight() + 1 == level.k)
            .count();
        if level.k % 2 != 0 || by_length != level.basis.len() {
            return Err(Error::usage(format!(
                "level k = {} of FQ_{n} does not match the word-length description",
                level.k
            )));
        }
    }
    Ok(EigenData { n, levels })
}

fn check_odd(n: u32) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::usage(format!(
            "eigenspace structure is only handled for odd n >= 3, got {n}"
        )));
    }
    Ok(())
}

fn check_width(n: u32, cfg: &Config) -> Result<()> {
    if n < 2 {
        return Err(Error::usage(format!("folded cube needs n >= 2, got {n}")));
    }
    if n - 1 > cfg.max_fold_width {
        return Err(Error::Capacity {
            what: "folded cube vertices",
            limit: 1 << cfg.max_fold_width,
            requested: 1usize.checked_shl(n - 1).unwrap_or(usize::MAX),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelReport {
    pub k: u32,
    pub lambda: i64,
    pub multiplicity: usize,
    pub max_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: u32,
    pub levels: Vec<LevelReport>,
    pub numeric_match: bool,
    /// `‖ε v_w − λ(w) v_w‖_∞` per word, in word index order.
    #[serde(skip)]
    pub residuals: Vec<f64>,
    #[serde(skip)]
    pub tolerance: f64,
}

impl SpectrumReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn pass(&self) -> bool {
        self.numeric_match && self.max_residual() <= self.tolerance
    }
}

pub fn verify_spectrum(n: u32) -> Result<SpectrumReport> {
    verify_spectrum_with(n, &Config::default())
}

/// Checks every closed-form eigenpair of `FQ_n` against the adjacency
/// operator and compares the predicted spectrum with a dense symmetric
/// eigensolver.
///
/// Works for even `n` too: levels are still formed by grouping words with
/// equal eigenvalue.
pub fn verify_spectrum_with(n: u32, cfg: &Config) -> Result<SpectrumReport> {
    check_width(n, cfg)?;
    let size = 1usize << (n - 1);
    if size > cfg.max_dense_vertices {
        return Err(Error::Capacity {
            what: "dense eigensolver dimension",
            limit: cfg.max_dense_vertices,
            requested: size,
        });
    }
    let graph = boolean_group::folded_cube_with(n, cfg)?;
    let width = n - 1;
    let residuals = cfg.exec.map_range(0..size, |idx| {
        let w = GroupWord::new(idx as u64, width).expect("index within width");
        let v = character(w);
        let ev = graph.apply_adjacency(&v);
        let lambda = eigenvalue(w) as f64;
        ev.iter()
            .zip(&v)
            .map(|(a, b)| (a - lambda * b).abs())
            .fold(0.0, f64::max)
    });

    let levels = group_levels(n)
        .into_iter()
        .map(|l| LevelReport {
            k: l.k,
            lambda: l.lambda,
            multiplicity: l.basis.len(),
            max_residual: l
                .basis
                .iter()
                .map(|w| residuals[w.index()])
                .fold(0.0, f64::max),
        })
        .collect::<Vec<_>>();

    let mut predicted: Vec<f64> = GroupWord::all(width)
        .map(|w| eigenvalue(w) as f64)
        .collect();
    predicted.sort_by(f64::total_cmp);
    let mut numeric: Vec<f64> = graph
        .adjacency_matrix()
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .collect();
    numeric.sort_by(f64::total_cmp);
    let numeric_match = predicted.len() == numeric.len()
        && predicted
            .iter()
            .zip(&numeric)
            .all(|(a, b)| (a - b).abs() <= cfg.residual_tol);

    Ok(SpectrumReport {
        n,
        levels,
        numeric_match,
        residuals,
        tolerance: cfg.residual_tol,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericLevel {
    pub lambda: f64,
    pub multiplicity: usize,
}

/// Distinct adjacency eigenvalues of an arbitrary graph, largest first,
/// from the dense symmetric eigensolver. Eigenvalues closer than `1e-6`
/// are merged and reported rounded to nine decimals.
pub fn numeric_spectrum(g: &Graph, cfg: &Config) -> Result<Vec<NumericLevel>> {
    if g.n_vertices() > cfg.max_dense_vertices {
        return Err(Error::Capacity {
            what: "dense eigensolver dimension",
            limit: cfg.max_dense_vertices,
            requested: g.n_vertices(),
        });
    }
    let mut values: Vec<f64> = g
        .adjacency_matrix()
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .collect();
    values.sort_by(|a, b| b.total_cmp(a));
    let mut clusters: Vec<Vec<f64>> = Vec::new();
    for v in values {
        match clusters.last_mut() {
            Some(c) if (c[c.len() - 1] - v).abs() < 1e-6 => c.push(v),
            _ => clusters.push(vec![v]),
        }
    }
    Ok(clusters
        .into_iter()
        .map(|c| {
            let mean = c.iter().sum::<f64>() / c.len() as f64;
            let lambda = (mean * 1e9).round() / 1e9;
            NumericLevel {
                lambda: if lambda == 0.0 { 0.0 } else { lambda },
                multiplicity: c.len(),
            }
        })
        .collect())
}

/// Orthogonal projection onto level `k` of `FQ_n`:
/// `P_k = 2^{-(n-1)} Σ_{w ∈ basis(k)} ψ(T_w) ψ(T_w)^T`.
pub fn eigenprojection(n: u32, k: u32) -> Result<DMatrix<f64>> {
    let data = eigen_data(n)?;
    projection_for(&data, k)
}

fn projection_for(data: &EigenData, k: u32) -> Result<DMatrix<f64>> {
    let level = data.level(k).ok_or_else(|| {
        Error::usage(format!(
            "k = {k} is not an eigenvalue level of FQ_{}",
            data.n
        ))
    })?;
    let width = data.n - 1;
    let size = 1usize << width;
    // Characters are multiplicative, so entry (x, y) only depends on x XOR y.
    let mut kernel = vec![0.0; size];
    for &w in &level.basis {
        for (d, slot) in kernel.iter_mut().enumerate() {
            let dw = GroupWord::new(d as u64, width).expect("index within width");
            *slot += if w.dot(dw) { -1.0 } else { 1.0 };
        }
    }
    let scale = 1.0 / size as f64;
    Ok(DMatrix::from_fn(size, size, |x, y| kernel[x ^ y] * scale))
}

/// All eigenprojections of `FQ_n`, cached for repeated commutation tests.
#[derive(Debug, Clone)]
pub struct EigenProjections {
    pub n: u32,
    pub graph: Graph,
    pub data: EigenData,
    pub projections: Vec<DMatrix<f64>>,
}

impl EigenProjections {
    pub fn new(n: u32) -> Result<Self> {
        let data = eigen_data(n)?;
        let projections = data
            .levels
            .iter()
            .map(|l| projection_for(&data, l.k))
            .collect::<Result<Vec<_>>>()?;
        Ok(EigenProjections {
            n,
            graph: boolean_group::folded_cube(n)?,
            data,
            projections,
        })
    }

    /// `max_k ‖P·E_k − E_k·P‖_max` for the permutation matrix `P` of `p`.
    ///
    /// `P E − E P = P (E − Pᵀ E P)`, so the entrywise max equals
    /// `max |E[p(i), p(j)] − E[i, j]|`.
    pub fn commutator_defect(&self, p: &Permutation) -> Result<f64> {
        let size = self.graph.n_vertices();
        if p.len() != size {
            return Err(Error::dimension(size, p.len()));
        }
        let mut worst: f64 = 0.0;
        for e in &self.projections {
            for i in 0..size {
                for j in 0..size {
                    worst = worst.max((e[(p.apply(i), p.apply(j))] - e[(i, j)]).abs());
                }
            }
        }
        Ok(worst)
    }

    /// True iff `p` commutes with every eigenprojection within `tol`.
    /// Non-automorphisms are rejected as a usage error.
    pub fn preserves(&self, p: &Permutation, tol: f64) -> Result<bool> {
        if !is_automorphism(&self.graph, p)? {
            return Err(Error::usage(format!(
                "{p} is not an automorphism of FQ_{}",
                self.n
            )));
        }
        Ok(self.commutator_defect(p)? <= tol)
    }
}

pub fn preserves_eigenspaces(n: u32, p: &Permutation) -> Result<bool> {
    EigenProjections::new(n)?.preserves(p, Config::default().projector_tol)
}
