use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::signed::{abelian_points, SignedPermMatrix};
use crate::boolean_group::{
    fourier, inverse_fourier, tau_generators, Basis, FunctionVector, GroupWord, C64,
};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::{automorphisms_with, is_automorphism, Graph, Permutation};
use crate::spectral::EigenProjections;

/// Precomputed data for turning classical points of `SO_n^{-1}` into vertex
/// permutations of `FQ_n`.
#[derive(Debug, Clone)]
pub struct ActionContext {
    n: usize,
    width: u32,
    taus: Vec<GroupWord>,
    /// `coords[w]`: the subset of `{τ_1, .., τ_{n-1}}` whose product is `w`.
    coords: Vec<u64>,
    projections: EigenProjections,
}

impl ActionContext {
    pub fn new(n: usize) -> Result<Self> {
        let taus = tau_generators(n as u32)?;
        let width = n as u32 - 1;
        let mut coords = vec![u64::MAX; 1 << width];
        for subset in 0u64..1 << width {
            let w = (0..width as usize)
                .filter(|&i| (subset >> i) & 1 == 1)
                .fold(0u64, |acc, i| acc ^ taus[i].bits());
            coords[w as usize] = subset;
        }
        debug_assert!(!coords.contains(&u64::MAX));
        Ok(ActionContext {
            n,
            width,
            taus,
            coords,
            projections: EigenProjections::new(n as u32)?,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.projections.graph
    }

    /// Image of the group element `w` under `τ_i ↦ s_i τ_{π(i)}`, as a sign
    /// and a word.
    fn act_on_word(&self, g: &SignedPermMatrix, w: GroupWord) -> (f64, GroupWord) {
        let subset = self.coords[w.index()];
        let mut sign = 1.0;
        let mut image = GroupWord::identity(self.width);
        for i in (0..self.n - 1).filter(|&i| (subset >> i) & 1 == 1) {
            sign *= g.signs()[i] as f64;
            image = image ^ self.taus[g.perm().apply(i)];
        }
        (sign, image)
    }

    /// The vertex permutation induced by `α(τ_i) = Σ_j τ_j ⊗ u_{ji}` at the
    /// classical point `g`: extended to `C*(Z_2^{n-1})` and conjugated by the
    /// Fourier transform into the point basis.
    pub fn action(&self, g: &SignedPermMatrix) -> Result<Permutation> {
        if g.n() != self.n {
            return Err(Error::dimension(self.n, g.n()));
        }
        // α(τ_n) must equal α(τ_1) ... α(τ_{n-1})
        let last = self.n - 1;
        let (sign, image) = self.act_on_word(g, self.taus[last]);
        if image != self.taus[g.perm().apply(last)] || sign != g.signs()[last] as f64 {
            return Err(Error::usage(format!(
                "point with quantum determinant {} does not extend to an algebra map",
                g.quantum_determinant()
            )));
        }
        let size = 1usize << self.width;
        let mut images = vec![0; size];
        for (x, slot) in images.iter_mut().enumerate() {
            let point =
                FunctionVector::basis_vector(GroupWord::new(x as u64, self.width)?, Basis::Point);
            let spectrum = fourier(&point)?;
            let mut moved = vec![C64::new(0.0, 0.0); size];
            for w in GroupWord::all(self.width) {
                let (s, image) = self.act_on_word(g, w);
                moved[image.index()] += spectrum.coefficient(w) * s;
            }
            let back = inverse_fourier(&FunctionVector::new(self.width, Basis::Group, moved)?)?;
            *slot = unit_position(back.coefficients())
                .ok_or_else(|| Error::usage("action matrix is not a permutation matrix"))?;
        }
        Permutation::new(images)
    }

    /// The action together with the automorphism and eigenspace checks.
    pub fn checked_action(&self, g: &SignedPermMatrix, cfg: &Config) -> Result<ActionOutcome> {
        let perm = self.action(g)?;
        let automorphism = is_automorphism(self.graph(), &perm)?;
        let eigenspace_defect = self.projections.commutator_defect(&perm)?;
        Ok(ActionOutcome {
            preserves_eigenspaces: eigenspace_defect <= cfg.projector_tol,
            perm,
            automorphism,
            eigenspace_defect,
        })
    }
}

fn unit_position(c: &[C64]) -> Option<usize> {
    const EPS: f64 = 1e-9;
    let mut hit = None;
    for (i, v) in c.iter().enumerate() {
        if (v - C64::new(1.0, 0.0)).norm() < EPS {
            if hit.is_some() {
                return None;
            }
            hit = Some(i);
        } else if v.norm() > EPS {
            return None;
        }
    }
    hit
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ActionOutcome {
    pub perm: Permutation,
    pub automorphism: bool,
    pub eigenspace_defect: f64,
    pub preserves_eigenspaces: bool,
}

/// Vertex permutation of `FQ_n` induced by the classical point `g`.
pub fn classical_point_action(g: &SignedPermMatrix) -> Result<Permutation> {
    ActionContext::new(g.n())?.action(g)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ActionSweepReport {
    pub n: usize,
    pub points: usize,
    pub distinct_images: usize,
    pub automorphism_group_order: usize,
    pub all_automorphisms: bool,
    pub all_preserve_eigenspaces: bool,
    pub max_eigenspace_defect: f64,
    /// Images are pairwise distinct and exhaust the automorphism group.
    pub bijective: bool,
    pub pass: bool,
}

/// Runs the action over every classical point of `SO_n^{-1}` and compares
/// the images with the automorphism group of `FQ_n`.
pub fn classical_action_sweep(n: usize) -> Result<ActionSweepReport> {
    classical_action_sweep_with(n, &Config::default())
}

pub fn classical_action_sweep_with(n: usize, cfg: &Config) -> Result<ActionSweepReport> {
    let ctx = ActionContext::new(n)?;
    let points = abelian_points(n)?;
    let outcomes = cfg
        .exec
        .map(&points, |g| ctx.checked_action(g, cfg))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let autos: BTreeSet<Permutation> = automorphisms_with(ctx.graph(), cfg)?.into_iter().collect();
    let images: BTreeSet<Permutation> = outcomes.iter().map(|o| o.perm.clone()).collect();
    let all_automorphisms = outcomes.iter().all(|o| o.automorphism);
    let all_preserve_eigenspaces = outcomes.iter().all(|o| o.preserves_eigenspaces);
    let max_eigenspace_defect = outcomes
        .iter()
        .map(|o| o.eigenspace_defect)
        .fold(0.0, f64::max);
    let bijective = images.len() == points.len() && images == autos;
    Ok(ActionSweepReport {
        n,
        points: points.len(),
        distinct_images: images.len(),
        automorphism_group_order: autos.len(),
        all_automorphisms,
        all_preserve_eigenspaces,
        max_eigenspace_defect,
        bijective,
        pass: all_automorphisms && all_preserve_eigenspaces && bijective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::so_twist::all_signed_perms;

    #[test]
    fn identity_point_acts_trivially() {
        for n in [3, 5, 7] {
            let p = classical_point_action(&SignedPermMatrix::identity(n)).unwrap();
            assert!(p.is_identity(), "n = {n}");
        }
    }

    #[test]
    fn negative_determinant_is_rejected() {
        let flip = SignedPermMatrix::new(Permutation::identity(3), vec![-1, 1, 1]).unwrap();
        let err = classical_point_action(&flip).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
        let ctx = ActionContext::new(3).unwrap();
        let rejected = all_signed_perms(3)
            .unwrap()
            .iter()
            .filter(|g| ctx.action(g).is_err())
            .count();
        assert_eq!(rejected, 24);
    }

    #[test]
    fn k4_points_biject_onto_s4() {
        let r = classical_action_sweep(3).unwrap();
        assert_eq!(r.points, 24);
        assert_eq!(r.automorphism_group_order, 24);
        assert!(r.bijective && r.pass, "{r:?}");
    }

    #[test]
    fn clebsch_points_biject_onto_its_automorphisms() {
        let r = classical_action_sweep(5).unwrap();
        assert_eq!(r.points, 1920);
        assert_eq!(r.automorphism_group_order, 1920);
        assert!(r.all_preserve_eigenspaces);
        assert!(r.max_eigenspace_defect < 1e-12);
        assert!(r.bijective && r.pass, "{r:?}");
    }

    #[test]
    fn action_is_a_homomorphism() {
        let ctx = ActionContext::new(3).unwrap();
        let pts = abelian_points(3).unwrap();
        for g in &pts {
            for h in &pts {
                let gh = ctx.action(&g.mul(h).unwrap()).unwrap();
                let composed = ctx
                    .action(g)
                    .unwrap()
                    .compose(&ctx.action(h).unwrap())
                    .unwrap();
                assert_eq!(gh, composed);
            }
        }
    }

    #[test]
    fn homomorphism_spot_check_n5() {
        let ctx = ActionContext::new(5).unwrap();
        let pts = abelian_points(5).unwrap();
        for g in pts.iter().step_by(97) {
            for h in pts.iter().step_by(131) {
                let gh = ctx.action(&g.mul(h).unwrap()).unwrap();
                let composed = ctx
                    .action(g)
                    .unwrap()
                    .compose(&ctx.action(h).unwrap())
                    .unwrap();
                assert_eq!(gh, composed);
            }
        }
    }

    #[test]
    fn sign_flips_of_tau_pairs_act_by_translation() {
        // diag(-1, -1, 1) flips the sign of τ_1 and τ_2: a character twist
        // in the group basis, a translation on vertices.
        let g = SignedPermMatrix::new(Permutation::identity(3), vec![-1, -1, 1]).unwrap();
        let p = classical_point_action(&g).unwrap();
        let shift = p.apply(0);
        assert_ne!(shift, 0);
        for x in 0..4 {
            assert_eq!(p.apply(x), x ^ shift);
        }
    }
}
