use std::f64::consts::TAU;

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::AlgebraElement;
use crate::boolean_group::C64;
use crate::error::{Error, Result};

/// Projections `p_1..p_n`, `q_1..q_m` realising `C*(Z_n * Z_m)` on `C^{nm}`.
///
/// `p[k - 1]` holds `p_k`; `p_n` is the spectral projection for eigenvalue 1.
#[derive(Debug, Clone)]
pub struct FreeProductModel {
    pub n: usize,
    pub m: usize,
    pub seed: Option<u64>,
    pub p: Vec<AlgebraElement>,
    pub q: Vec<AlgebraElement>,
}

impl FreeProductModel {
    pub fn dim(&self) -> usize {
        self.n * self.m
    }

    /// `p_k`, `k` in `1..=n`.
    pub fn p(&self, k: usize) -> &AlgebraElement {
        &self.p[k - 1]
    }

    /// `q_l`, `l` in `1..=m`.
    pub fn q(&self, l: usize) -> &AlgebraElement {
        &self.q[l - 1]
    }

    /// `max_{k,l} ‖[p_k, q_l]‖`.
    pub fn max_commutator(&self) -> f64 {
        self.p
            .iter()
            .flat_map(|p| self.q.iter().map(move |q| p.commutator(q).norm()))
            .fold(0.0, f64::max)
    }

    /// The same model pushed through `x ↦ W x W*`.
    pub fn conjugated(&self, w: &DMatrix<C64>) -> Self {
        FreeProductModel {
            n: self.n,
            m: self.m,
            seed: self.seed,
            p: self.p.iter().map(|x| x.conjugate_by(w)).collect(),
            q: self.q.iter().map(|x| x.conjugate_by(w)).collect(),
        }
    }
}

/// Haar-distributed unitary from a seeded complex Gaussian matrix: QR, then
/// the phases of `R`'s diagonal are moved into `Q`.
pub fn random_unitary(dim: usize, seed: u64) -> DMatrix<C64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = DMatrix::from_fn(dim, dim, |_, _| {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        C64::new(re, im)
    });
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 {
            d / d.norm()
        } else {
            C64::new(1.0, 0.0)
        };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    q
}

fn root_of_unity(order: usize, power: i64) -> C64 {
    let angle = TAU * (power.rem_euclid(order as i64) as f64) / order as f64;
    C64::from_polar(1.0, angle)
}

/// `(1/order) Σ_j ω^{-k j} D^j` for a diagonal `D` given by its diagonal.
fn spectral_projection(diag_exponents: &[usize], order: usize, k: usize) -> DMatrix<C64> {
    let dim = diag_exponents.len();
    let mut out = DMatrix::zeros(dim, dim);
    for (a, &e) in diag_exponents.iter().enumerate() {
        let mut s = C64::new(0.0, 0.0);
        for j in 0..order {
            s += root_of_unity(order, -((k * j) as i64)) * root_of_unity(order, (e * j) as i64);
        }
        out[(a, a)] = s / order as f64;
    }
    out
}

pub fn rep_free_product(n: usize, m: usize, seed: u64) -> Result<FreeProductModel> {
    let mut model = rep_free_product_with_unitary(n, m, &random_unitary(n * m, seed))?;
    model.seed = Some(seed);
    Ok(model)
}

/// Both generators diagonal: every `p_k` commutes with every `q_l`.
pub fn commuting_free_product(n: usize, m: usize) -> Result<FreeProductModel> {
    rep_free_product_with_unitary(n, m, &DMatrix::identity(n * m, n * m))
}

/// `U = diag(ω_n^{⌊a/m⌋})`, `V = Q diag(ω_m^{⌊a/n⌋}) Q*`; `p_k`, `q_l` are
/// their spectral projections written as character sums.
pub fn rep_free_product_with_unitary(
    n: usize,
    m: usize,
    unitary: &DMatrix<C64>,
) -> Result<FreeProductModel> {
    if n < 2 || m < 2 {
        return Err(Error::usage(format!(
            "free product model needs n, m >= 2, got n = {n}, m = {m}"
        )));
    }
    let dim = n * m;
    if unitary.nrows() != dim || unitary.ncols() != dim {
        return Err(Error::dimension(dim, unitary.nrows()));
    }
    let u_exps: Vec<usize> = (0..dim).map(|a| a / m).collect();
    let v_exps: Vec<usize> = (0..dim).map(|a| a / n).collect();
    let p = (1..=n)
        .map(|k| AlgebraElement::from_matrix(spectral_projection(&u_exps, n, k % n)))
        .collect::<Result<Vec<_>>>()?;
    let q = (1..=m)
        .map(|l| {
            let d = spectral_projection(&v_exps, m, l % m);
            AlgebraElement::from_matrix(unitary * d * unitary.adjoint())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FreeProductModel {
        n,
        m,
        seed: None,
        p,
        q,
    })
}
