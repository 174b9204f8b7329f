use itertools::Itertools;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::sampling::sample_points;
use super::signed::{all_permutations, all_signed_perms, SignedPermMatrix};
use super::twisted::{star_word, word_sign, GradedMonomial, TwistedPoly};
use super::{bicharacter, Bicharacter};
use crate::boolean_group::tau_generators;
use crate::config::Config;
use crate::error::{Error, Result};

/// Work bound for the tuple sums of the `τ`-product lemma:
/// points × `n^l` × injective `l`-tuples.
pub const MAX_LEMMA_P_WORK: usize = 1 << 25;

/// Where the relations are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum Model {
    /// Every signed permutation matrix, exact commutative arithmetic.
    Abelian,
    /// Seeded special orthogonal samples, each ordered product carrying its
    /// bicharacter twist sign.
    Twisted { samples: usize, seed: u64 },
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::Abelian => "abelian",
            Model::Twisted { .. } => "twisted",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Model::Abelian => None,
            Model::Twisted { seed, .. } => Some(*seed),
        }
    }
}

/// One relation or lemma evaluated over a set of points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub relation: String,
    pub model: String,
    pub points: usize,
    pub max_defect: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
    pub seed: Option<u64>,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckReport {
    fn new(n: usize, checks: Vec<RelationCheck>, seed: Option<u64>, tolerance: f64) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        CheckReport {
            n,
            checks,
            seed,
            tolerance,
            pass,
        }
    }

    pub fn check(&self, relation: &str) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| c.relation == relation)
    }

    /// Concatenates reports on the same `n`.
    pub fn merge(mut self, other: CheckReport) -> CheckReport {
        self.checks.extend(other.checks);
        self.pass &= other.pass;
        self.seed = self.seed.or(other.seed);
        self
    }
}

fn check(relation: &str, model: &str, points: usize, max_defect: f64, tol: f64) -> RelationCheck {
    RelationCheck {
        relation: relation.to_string(),
        model: model.to_string(),
        points,
        max_defect,
        pass: max_defect <= tol,
    }
}

/// Evaluation points together with the sign rule for ordered products.
struct Points {
    matrices: Vec<DMatrix<f64>>,
    twist: Option<Bicharacter>,
}

impl Points {
    fn for_model(n: usize, model: &Model) -> Result<Points> {
        match *model {
            Model::Abelian => Ok(Points {
                matrices: all_signed_perms(n)?
                    .iter()
                    .map(SignedPermMatrix::to_matrix)
                    .collect(),
                twist: None,
            }),
            Model::Twisted { samples, seed } => {
                let bc = twist_for(n)?;
                if samples == 0 {
                    return Err(Error::usage("twisted model needs at least one sample"));
                }
                Ok(Points {
                    matrices: sample_points(n, samples, 0, seed).0,
                    twist: Some(bc),
                })
            }
        }
    }

    /// `sign · Π_a point[i_a, j_a]` for the ordered word `(i_a, j_a)`.
    fn word_value(&self, point: &DMatrix<f64>, word: &[(usize, usize)]) -> f64 {
        let sign = self.twist.as_ref().map_or(1, |bc| word_sign(bc, word));
        sign as f64 * word.iter().map(|&(i, j)| point[(i, j)]).product::<f64>()
    }
}

fn twist_for(n: usize) -> Result<Bicharacter> {
    if n.is_multiple_of(2) || !(3..=5).contains(&n) {
        return Err(Error::usage(format!(
            "the twisted model is available for n in {{3, 5}}, got {n}"
        )));
    }
    bicharacter((n - 1) / 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaSoReport {
    pub n: usize,
    pub matrices: usize,
    /// Matrices with `Σ_σ u_{σ(1)1} ... u_{σ(n)n} = 1`.
    pub determinant_positive: usize,
    /// Matrices with `u_{jn} = Σ_{I_j} u_{i_1 1} ... u_{i_{n-1} n-1}` for all `j`.
    pub column_formula_holds: usize,
    /// Matrices where exactly one of the two conditions holds.
    pub disagreements: usize,
    pub holds: bool,
}

impl LemmaSoReport {
    pub fn to_check(&self) -> RelationCheck {
        check(
            "lemma_so",
            "abelian",
            self.matrices,
            self.disagreements as f64,
            0.0,
        )
    }
}

/// Sign-free sum `Σ_σ Π_a u(σ(a), col(a))` over `S_n` in integers, where
/// `col` is the column used at position `a`.
fn sign_free_sum(m: &SignedPermMatrix, perms: &[Vec<usize>], cols: &[usize]) -> i64 {
    perms
        .iter()
        .map(|s| {
            cols.iter()
                .enumerate()
                .map(|(a, &c)| m.entry(s[a], c))
                .product::<i64>()
        })
        .sum()
}

/// Exhaustive check, over all `2^n · n!` signed permutation matrices, that
/// the quantum determinant equals 1 exactly when the last column is given
/// by the injective-tuple formula.
pub fn lemma_so_bruteforce(n: usize) -> Result<LemmaSoReport> {
    lemma_so_bruteforce_with(n, &Config::default())
}

pub fn lemma_so_bruteforce_with(n: usize, cfg: &Config) -> Result<LemmaSoReport> {
    if n > 5 {
        return Err(Error::Capacity {
            what: "determinant equivalence check (n)",
            limit: 5,
            requested: n,
        });
    }
    if n < 2 {
        return Err(Error::usage("determinant equivalence check needs n >= 2"));
    }
    let all = all_signed_perms(n)?;
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let cols: Vec<usize> = (0..n).collect();
    // I_j: injective (n-1)-tuples avoiding j
    let tuples: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|j| (0..n).filter(|&i| i != j).permutations(n - 1).collect())
        .collect();
    let flags = cfg.exec.map(&all, |m| {
        let det_one = sign_free_sum(m, &perms, &cols) == 1;
        let formula = (0..n).all(|j| {
            let rhs: i64 = tuples[j]
                .iter()
                .map(|t| (0..n - 1).map(|a| m.entry(t[a], a)).product::<i64>())
                .sum();
            m.entry(j, n - 1) == rhs
        });
        (det_one, formula)
    });
    let determinant_positive = flags.iter().filter(|f| f.0).count();
    let column_formula_holds = flags.iter().filter(|f| f.1).count();
    let disagreements = flags.iter().filter(|f| f.0 != f.1).count();
    Ok(LemmaSoReport {
        n,
        matrices: all.len(),
        determinant_positive,
        column_formula_holds,
        disagreements,
        holds: disagreements == 0,
    })
}

/// Evaluates `Σ_σ u_{σ(1)1} ... u_{σ(n-1)n-1} u_{σ(n)k}` for every `k ≠ n`
/// (expected 0) and for `k = n` (expected: the quantum determinant, which is
/// `d` on abelian points and 1 on twisted special orthogonal samples).
pub fn lemma_sumzero_check(n: usize, model: &Model) -> Result<CheckReport> {
    lemma_sumzero_check_with(n, model, &Config::default())
}

pub fn lemma_sumzero_check_with(n: usize, model: &Model, cfg: &Config) -> Result<CheckReport> {
    if !(2..=5).contains(&n) {
        return Err(Error::usage(format!(
            "sum-zero check needs 2 <= n <= 5, got {n}"
        )));
    }
    let pts = Points::for_model(n, model)?;
    let perms = all_permutations(n);
    let sum = |point: &DMatrix<f64>, k: usize| -> f64 {
        perms
            .iter()
            .map(|s| {
                let word: Vec<(usize, usize)> = (0..n)
                    .map(|a| (s.apply(a), if a == n - 1 { k } else { a }))
                    .collect();
                pts.word_value(point, &word)
            })
            .sum()
    };
    let expected_det = |point: &DMatrix<f64>| -> f64 {
        match model {
            Model::Abelian => SignedPermMatrix::from_matrix(
                &(0..n)
                    .map(|i| (0..n).map(|j| point[(i, j)] as i64).collect())
                    .collect::<Vec<_>>(),
            )
            .map(|m| m.quantum_determinant() as f64)
            .unwrap_or(f64::NAN),
            Model::Twisted { .. } => 1.0,
        }
    };
    let zero_defect = cfg.exec.max_range(0..pts.matrices.len(), |p| {
        (0..n - 1)
            .map(|k| sum(&pts.matrices[p], k).abs())
            .fold(0.0, f64::max)
    });
    let det_defect = cfg.exec.max_range(0..pts.matrices.len(), |p| {
        let point = &pts.matrices[p];
        (sum(point, n - 1) - expected_det(point)).abs()
    });
    let tol = match model {
        Model::Abelian => 0.0,
        Model::Twisted { .. } => cfg.residual_tol,
    };
    let name = model.name();
    let count = pts.matrices.len();
    Ok(CheckReport::new(
        n,
        vec![
            check("lemma_sumzero", name, count, zero_defect, tol),
            check("lemma_sumzero_control", name, count, det_defect, tol),
        ],
        model.seed(),
        tol,
    ))
}

/// Compares, for every injective `(i_1, .., i_l)`, the element
/// `Σ_{j_1..j_l} τ_{j_1} ... τ_{j_l} ⊗ u_{j_1 i_1} ... u_{j_l i_l}` of
/// `C*(Z_2^{n-1}) ⊗ A` with the same sum over pairwise distinct `j`. Also
/// reports the adjacent-repeat sums `Σ_k u_{k i_s} u_{k i_{s+1}}`, which
/// vanish by orthogonality.
pub fn lemma_p_check(n: usize, l: usize, model: &Model) -> Result<CheckReport> {
    lemma_p_check_with(n, l, model, &Config::default())
}

pub fn lemma_p_check_with(n: usize, l: usize, model: &Model, cfg: &Config) -> Result<CheckReport> {
    if n > 5 {
        return Err(Error::Capacity {
            what: "tau-product lemma (n)",
            limit: 5,
            requested: n,
        });
    }
    let taus = tau_generators(n as u32)?;
    if l == 0 || l > n {
        return Err(Error::usage(format!(
            "l must satisfy 1 <= l <= n = {n}, got {l}"
        )));
    }
    let pts = Points::for_model(n, model)?;
    let i_tuples: Vec<Vec<usize>> = (0..n).permutations(l).collect();
    let j_tuples: Vec<Vec<usize>> = (0..l).map(|_| 0..n).multi_cartesian_product().collect();
    let work = pts
        .matrices
        .len()
        .saturating_mul(i_tuples.len())
        .saturating_mul(j_tuples.len());
    if work > MAX_LEMMA_P_WORK {
        return Err(Error::Capacity {
            what: "tau-product lemma evaluations",
            limit: MAX_LEMMA_P_WORK,
            requested: work,
        });
    }
    let distinct: Vec<bool> = j_tuples.iter().map(|j| j.iter().all_unique()).collect();
    let words: Vec<usize> = j_tuples
        .iter()
        .map(|j| j.iter().fold(0u64, |acc, &a| acc ^ taus[a].bits()) as usize)
        .collect();
    let size = 1usize << (n - 1);

    let defect = cfg.exec.max_range(0..pts.matrices.len(), |p| {
        let point = &pts.matrices[p];
        let mut worst: f64 = 0.0;
        let mut full = vec![0.0; size];
        let mut restricted = vec![0.0; size];
        let mut word = Vec::with_capacity(l);
        for is in &i_tuples {
            full.iter_mut().for_each(|x| *x = 0.0);
            restricted.iter_mut().for_each(|x| *x = 0.0);
            for (t, js) in j_tuples.iter().enumerate() {
                word.clear();
                word.extend(js.iter().zip(is).map(|(&j, &i)| (j, i)));
                let v = pts.word_value(point, &word);
                full[words[t]] += v;
                if distinct[t] {
                    restricted[words[t]] += v;
                }
            }
            for (a, b) in full.iter().zip(&restricted) {
                worst = worst.max((a - b).abs());
            }
        }
        worst
    });
    let adjacent = cfg.exec.max_range(0..pts.matrices.len(), |p| {
        let point = &pts.matrices[p];
        i_tuples
            .iter()
            .flat_map(|is| is.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>())
            .map(|(a, b)| {
                (0..n)
                    .map(|k| pts.word_value(point, &[(k, a), (k, b)]))
                    .sum::<f64>()
                    .abs()
            })
            .fold(0.0, f64::max)
    });
    let tol = match model {
        Model::Abelian => 0.0,
        Model::Twisted { .. } => cfg.residual_tol,
    };
    let name = model.name();
    let count = pts.matrices.len();
    Ok(CheckReport::new(
        n,
        vec![
            check("lemma_p", name, count, defect, tol),
            check("lemma_p_adjacent", name, count, adjacent, tol),
        ],
        model.seed(),
        tol,
    ))
}

/// Number of control samples with determinant `-1`.
pub const CONTROL_SAMPLES: usize = 10;

/// Builds every defining relation of `SO_{2m+1}^{-1}` in the twisted
/// product with exact sign arithmetic and evaluates it on `samples` seeded
/// special orthogonal matrices.
///
/// Checks: `selfadjoint` (real points, trivially 0), `orthogonality`,
/// `anticommutation`, `commutation`, `twist_signs` (number of permutations
/// whose accumulated twist sign differs from `sgn`), `determinant` (must be
/// 1) and `determinant_control` (must be -1 on determinant `-1` samples).
pub fn twisted_relation_check(m: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    twisted_relation_check_with(m, samples, seed, &Config::default())
}

pub fn twisted_relation_check_with(
    m: usize,
    samples: usize,
    seed: u64,
    cfg: &Config,
) -> Result<CheckReport> {
    if !(1..=2).contains(&m) {
        return Err(Error::usage(format!(
            "twist check supports m in {{1, 2}}, got {m}"
        )));
    }
    if samples == 0 {
        return Err(Error::usage("twist check needs at least one sample"));
    }
    let bc = bicharacter(m)?;
    let n = bc.n();
    let (special, flipped) = sample_points(n, samples, CONTROL_SAMPLES, seed);
    let g = |i: usize, j: usize| TwistedPoly::generator(n, i, j);

    // (polynomial, expected value)
    let mut orthogonality = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut rows = TwistedPoly::zero(n);
            let mut cols = TwistedPoly::zero(n);
            for k in 0..n {
                rows = rows.add(&g(i, k)?.star(&g(j, k)?, &bc)?)?;
                cols = cols.add(&g(k, i)?.star(&g(k, j)?, &bc)?)?;
            }
            let delta = (i == j) as u8 as f64;
            orthogonality.push((rows, delta));
            orthogonality.push((cols, delta));
        }
    }
    let mut anticommutation = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in (0..n).filter(|&k| k != j) {
                let row = g(i, j)?
                    .star(&g(i, k)?, &bc)?
                    .add(&g(i, k)?.star(&g(i, j)?, &bc)?)?;
                let col = g(j, i)?
                    .star(&g(k, i)?, &bc)?
                    .add(&g(k, i)?.star(&g(j, i)?, &bc)?)?;
                anticommutation.push(row);
                anticommutation.push(col);
            }
        }
    }
    let mut commutation = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in (0..n).filter(|&k| k != i) {
                for l in (0..n).filter(|&l| l != j) {
                    commutation.push(
                        g(i, j)?
                            .star(&g(k, l)?, &bc)?
                            .sub(&g(k, l)?.star(&g(i, j)?, &bc)?)?,
                    );
                }
            }
        }
    }
    let mut determinant = TwistedPoly::zero(n);
    let mut sign_mismatches = 0usize;
    for s in all_permutations(n) {
        let word: Vec<(usize, usize)> = (0..n).map(|a| (s.apply(a), a)).collect();
        let term = star_word(&bc, &word)?;
        if term.coefficient(&GradedMonomial::from_factors(word)) != s.sign() as i64 {
            sign_mismatches += 1;
        }
        determinant = determinant.add(&term)?;
    }

    let over = |points: &[DMatrix<f64>], f: &(dyn Fn(&DMatrix<f64>) -> Result<f64> + Sync)| {
        let values = cfg.exec.map(points, |p| f(p));
        values
            .into_iter()
            .try_fold(0.0, |acc: f64, v| v.map(|v| acc.max(v)))
    };
    let selfadjoint = 0.0;
    let orth = over(&special, &|p| {
        orthogonality
            .iter()
            .map(|(poly, want)| poly.eval(p).map(|v| (v - want).abs()))
            .try_fold(0.0, |acc: f64, v| v.map(|v| acc.max(v)))
    })?;
    let vanish = |polys: &[TwistedPoly]| {
        over(&special, &|p| {
            polys
                .iter()
                .map(|poly| poly.eval(p).map(f64::abs))
                .try_fold(0.0, |acc: f64, v| v.map(|v| acc.max(v)))
        })
    };
    let anti = vanish(&anticommutation)?;
    let comm = vanish(&commutation)?;
    let det = over(&special, &|p| determinant.eval(p).map(|v| (v - 1.0).abs()))?;
    let control = over(&flipped, &|p| determinant.eval(p).map(|v| (v + 1.0).abs()))?;

    let tol = cfg.residual_tol;
    let name = "twisted";
    Ok(CheckReport::new(
        n,
        vec![
            check("selfadjoint", name, samples, selfadjoint, tol),
            check("orthogonality", name, samples, orth, tol),
            check("anticommutation", name, samples, anti, tol),
            check("commutation", name, samples, comm, tol),
            check(
                "twist_signs",
                name,
                n_factorial(n),
                sign_mismatches as f64,
                0.0,
            ),
            check("determinant", name, samples, det, tol),
            check("determinant_control", name, CONTROL_SAMPLES, control, tol),
        ],
        Some(seed),
        tol,
    ))
}

fn n_factorial(n: usize) -> usize {
    (1..=n).product()
}
