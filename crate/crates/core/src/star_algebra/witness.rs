use serde::{Deserialize, Serialize};

use super::AlgebraElement;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::{is_automorphism, Graph, Permutation};

/// An `r × r` matrix of algebra elements of a common dimension, row-major.
#[derive(Debug, Clone)]
pub struct MagicUnitary {
    r: usize,
    dim: usize,
    entries: Vec<AlgebraElement>,
}

impl MagicUnitary {
    pub fn from_entries(r: usize, entries: Vec<AlgebraElement>) -> Result<Self> {
        if entries.len() != r * r {
            return Err(Error::dimension(r * r, entries.len()));
        }
        let dim = entries.first().map_or(0, AlgebraElement::dim);
        if let Some(bad) = entries.iter().find(|e| e.dim() != dim) {
            return Err(Error::dimension(dim, bad.dim()));
        }
        Ok(MagicUnitary { r, dim, entries })
    }

    /// The classical magic unitary `u_{ij} = δ_{j, π(i)} · 1`.
    pub fn from_permutation(p: &Permutation, dim: usize) -> Self {
        let r = p.len();
        let entries = (0..r * r)
            .map(|idx| {
                let (i, j) = (idx / r, idx % r);
                if p.apply(i) == j {
                    AlgebraElement::identity(dim)
                } else {
                    AlgebraElement::zero(dim)
                }
            })
            .collect();
        MagicUnitary { r, dim, entries }
    }

    pub fn size(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.entries[i * self.r + j]
    }

    pub fn entries(&self) -> &[AlgebraElement] {
        &self.entries
    }
}

/// Builds `u'_{ij} = Σ_{τ^l(i)=j} q_l + Σ_{σ^k(i)=j} p_k − δ_{ij}·1` after
/// checking every hypothesis: `σ`, `τ` non-trivial, disjoint automorphisms
/// of `g` whose orders match `p.len()` and `q.len()`.
pub fn build_witness(
    g: &Graph,
    sigma: &Permutation,
    tau: &Permutation,
    p: &[AlgebraElement],
    q: &[AlgebraElement],
) -> Result<MagicUnitary> {
    let r = g.n_vertices();
    for perm in [sigma, tau] {
        if perm.len() != r {
            return Err(Error::dimension(r, perm.len()));
        }
    }
    if sigma.is_identity() {
        return Err(Error::usage("hypothesis failed: sigma is the identity"));
    }
    if tau.is_identity() {
        return Err(Error::usage("hypothesis failed: tau is the identity"));
    }
    if !is_automorphism(g, sigma)? {
        return Err(Error::usage(
            "hypothesis failed: sigma is not an automorphism",
        ));
    }
    if !is_automorphism(g, tau)? {
        return Err(Error::usage(
            "hypothesis failed: tau is not an automorphism",
        ));
    }
    if !sigma.is_disjoint_from(tau)? {
        return Err(Error::usage(
            "hypothesis failed: sigma and tau are not disjoint",
        ));
    }
    if sigma.order() != p.len() as u64 {
        return Err(Error::usage(format!(
            "hypothesis failed: order(sigma) = {} but {} projections p were given",
            sigma.order(),
            p.len()
        )));
    }
    if tau.order() != q.len() as u64 {
        return Err(Error::usage(format!(
            "hypothesis failed: order(tau) = {} but {} projections q were given",
            tau.order(),
            q.len()
        )));
    }
    build_witness_unchecked(sigma, tau, p, q)
}

/// The same formula without hypothesis checks; only sizes are validated.
/// Exists to observe what goes wrong when the hypotheses fail.
pub fn build_witness_unchecked(
    sigma: &Permutation,
    tau: &Permutation,
    p: &[AlgebraElement],
    q: &[AlgebraElement],
) -> Result<MagicUnitary> {
    let r = sigma.len();
    if tau.len() != r {
        return Err(Error::dimension(r, tau.len()));
    }
    let dim = p
        .first()
        .or(q.first())
        .map(AlgebraElement::dim)
        .ok_or_else(|| Error::usage("no projections supplied"))?;
    if let Some(bad) = p.iter().chain(q).find(|x| x.dim() != dim) {
        return Err(Error::dimension(dim, bad.dim()));
    }
    // powers[k - 1] = σ^k for k in 1..=n
    let sigma_powers: Vec<Permutation> = (1..=p.len() as u64).map(|k| sigma.pow(k)).collect();
    let tau_powers: Vec<Permutation> = (1..=q.len() as u64).map(|l| tau.pow(l)).collect();
    let one = AlgebraElement::identity(dim);
    let mut entries = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            let mut e = AlgebraElement::zero(dim);
            for (tl, ql) in tau_powers.iter().zip(q) {
                if tl.apply(i) == j {
                    e = &e + ql;
                }
            }
            for (sk, pk) in sigma_powers.iter().zip(p) {
                if sk.apply(i) == j {
                    e = &e + pk;
                }
            }
            if i == j {
                e = &e - &one;
            }
            entries.push(e);
        }
    }
    MagicUnitary::from_entries(r, entries)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub projection_defect: f64,
    pub rowsum_defect: f64,
    pub colsum_defect: f64,
    pub commutation_defect: f64,
    pub noncomm_certificate: f64,
    pub seed: Option<u64>,
    pub pass: bool,
}

impl WitnessReport {
    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    /// `c` clears the reporting floor, i.e. the entries visibly fail to commute.
    pub fn certifies_quantum_symmetry(&self, cfg: &Config) -> bool {
        self.pass && self.noncomm_certificate > cfg.certificate_floor
    }
}

pub fn certify_witness(g: &Graph, u: &MagicUnitary) -> Result<WitnessReport> {
    certify_witness_with(g, u, &Config::default())
}

/// Measures the magic-unitary relations of `u` against the graph:
/// projection entries, unit row and column sums, `u(ε ⊗ 1) = (ε ⊗ 1)u`, and
/// the largest commutator between two entries.
pub fn certify_witness_with(g: &Graph, u: &MagicUnitary, cfg: &Config) -> Result<WitnessReport> {
    let r = g.n_vertices();
    if u.size() != r {
        return Err(Error::dimension(r, u.size()));
    }
    let dim = u.dim();
    let one = AlgebraElement::identity(dim);
    let entries = u.entries();

    let projection_defect = cfg
        .exec
        .max_range(0..r * r, |idx| entries[idx].projection_defect());

    let line_defect = |row: bool| {
        cfg.exec.max_range(0..r, |a| {
            let s = (0..r).fold(AlgebraElement::zero(dim), |acc, b| {
                let e = if row { u.get(a, b) } else { u.get(b, a) };
                &acc + e
            });
            (&s - &one).norm()
        })
    };
    let rowsum_defect = line_defect(true);
    let colsum_defect = line_defect(false);

    // (uε)_{ij} = Σ_{k ~ j} u_{ik},  (εu)_{ij} = Σ_{k ~ i} u_{kj}
    let commutation_defect = cfg.exec.max_range(0..r * r, |idx| {
        let (i, j) = (idx / r, idx % r);
        let left = g
            .neighbors(j)
            .iter()
            .fold(AlgebraElement::zero(dim), |acc, &k| &acc + u.get(i, k));
        let right = g
            .neighbors(i)
            .iter()
            .fold(AlgebraElement::zero(dim), |acc, &k| &acc + u.get(k, j));
        (&left - &right).norm()
    });

    let noncomm_certificate = cfg.exec.max_range(0..r * r, |a| {
        (a + 1..r * r)
            .map(|b| entries[a].commutator(&entries[b]).norm())
            .fold(0.0, f64::max)
    });

    let pass = projection_defect <= cfg.algebra_tol
        && rowsum_defect <= cfg.algebra_tol
        && colsum_defect <= cfg.algebra_tol
        && commutation_defect <= cfg.algebra_tol;
    Ok(WitnessReport {
        projection_defect,
        rowsum_defect,
        colsum_defect,
        commutation_defect,
        noncomm_certificate,
        seed: None,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecoveryReport {
    /// One vertex per non-trivial cycle of `σ` (the cycle minimum), ascending.
    pub sigma_representatives: Vec<usize>,
    pub tau_representatives: Vec<usize>,
    /// `‖Π_s u'_{s, σ^k(s)} − p_k‖` for `k = 1..=n`.
    pub sigma_residuals: Vec<f64>,
    pub tau_residuals: Vec<f64>,
    pub max_residual: f64,
    pub pass: bool,
}

pub fn recovery_products(
    u: &MagicUnitary,
    sigma: &Permutation,
    tau: &Permutation,
    p: &[AlgebraElement],
    q: &[AlgebraElement],
) -> Result<RecoveryReport> {
    recovery_products_with(u, sigma, tau, p, q, &Config::default())
}

/// Recovers every `p_k` (and `q_l`) as an ordered product of witness
/// entries along one representative per non-trivial cycle.
pub fn recovery_products_with(
    u: &MagicUnitary,
    sigma: &Permutation,
    tau: &Permutation,
    p: &[AlgebraElement],
    q: &[AlgebraElement],
    cfg: &Config,
) -> Result<RecoveryReport> {
    let r = u.size();
    for perm in [sigma, tau] {
        if perm.len() != r {
            return Err(Error::dimension(r, perm.len()));
        }
    }
    let recover = |perm: &Permutation, targets: &[AlgebraElement]| -> (Vec<usize>, Vec<f64>) {
        let reps: Vec<usize> = perm
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| c[0])
            .collect();
        let residuals = targets
            .iter()
            .enumerate()
            .map(|(idx, target)| {
                let power = perm.pow(idx as u64 + 1);
                let product = reps
                    .iter()
                    .fold(AlgebraElement::identity(u.dim()), |acc, &s| {
                        &acc * u.get(s, power.apply(s))
                    });
                (&product - target).norm()
            })
            .collect();
        (reps, residuals)
    };
    let (sigma_representatives, sigma_residuals) = recover(sigma, p);
    let (tau_representatives, tau_residuals) = recover(tau, q);
    let max_residual = sigma_residuals
        .iter()
        .chain(&tau_residuals)
        .copied()
        .fold(0.0, f64::max);
    Ok(RecoveryReport {
        sigma_representatives,
        tau_representatives,
        sigma_residuals,
        tau_residuals,
        max_residual,
        pass: max_residual <= cfg.algebra_tol,
    })
}
