use itertools::Itertools;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Permutation;

/// Largest `n` for which all `2^n · n!` signed permutations are enumerated.
pub const MAX_SIGNED_N: usize = 6;

/// A signed permutation matrix: column `j` has its single non-zero entry
/// `signs[j]` in row `perm(j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SignedPermJson", into = "SignedPermJson")]
pub struct SignedPermMatrix {
    perm: Permutation,
    signs: Vec<i8>,
}

#[derive(Serialize, Deserialize)]
struct SignedPermJson {
    n: usize,
    perm: Permutation,
    signs: Vec<i8>,
}

impl TryFrom<SignedPermJson> for SignedPermMatrix {
    type Error = Error;

    fn try_from(j: SignedPermJson) -> Result<Self> {
        if j.perm.len() != j.n {
            return Err(Error::dimension(j.n, j.perm.len()));
        }
        SignedPermMatrix::new(j.perm, j.signs)
    }
}

impl From<SignedPermMatrix> for SignedPermJson {
    fn from(m: SignedPermMatrix) -> Self {
        SignedPermJson {
            n: m.n(),
            perm: m.perm,
            signs: m.signs,
        }
    }
}

impl SignedPermMatrix {
    pub fn new(perm: Permutation, signs: Vec<i8>) -> Result<Self> {
        if signs.len() != perm.len() {
            return Err(Error::dimension(perm.len(), signs.len()));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::usage("signs must be +1 or -1"));
        }
        Ok(SignedPermMatrix { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermMatrix {
            perm: Permutation::identity(n),
            signs: vec![1; n],
        }
    }

    /// Reads a matrix with exactly one `±1` per row and column.
    pub fn from_matrix(m: &[Vec<i64>]) -> Result<Self> {
        let n = m.len();
        let mut images = vec![usize::MAX; n];
        let mut signs = vec![0; n];
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::dimension(n, row.len()));
            }
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 | -1 if images[j] == usize::MAX => {
                        images[j] = i;
                        signs[j] = v as i8;
                    }
                    _ => return Err(Error::usage("not a signed permutation matrix")),
                }
            }
        }
        if images.contains(&usize::MAX) {
            return Err(Error::usage("not a signed permutation matrix"));
        }
        SignedPermMatrix::new(Permutation::new(images)?, signs)
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Entry `(i, j)`, 0-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if self.perm.apply(j) == i {
            self.signs[j] as i64
        } else {
            0
        }
    }

    pub fn to_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n(), self.n(), |i, j| self.entry(i, j) as f64)
    }

    /// `d = Π_a u_{π(a), a}`, the only surviving term of the sign-free sum
    /// `Σ_σ u_{σ(1)1} ... u_{σ(n)n}` on a signed permutation matrix.
    pub fn quantum_determinant(&self) -> i8 {
        self.signs.iter().product()
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &SignedPermMatrix) -> Result<SignedPermMatrix> {
        let perm = self.perm.compose(&other.perm)?;
        let signs = (0..self.n())
            .map(|j| self.signs[other.perm.apply(j)] * other.signs[j])
            .collect();
        Ok(SignedPermMatrix { perm, signs })
    }

    /// The transpose, which is the inverse.
    pub fn transpose(&self) -> SignedPermMatrix {
        let inv = self.perm.inverse();
        let signs = (0..self.n()).map(|j| self.signs[inv.apply(j)]).collect();
        SignedPermMatrix { perm: inv, signs }
    }

    /// Checks orthogonality, the row/column zero products and the
    /// commutation of disjoint entries in exact integer arithmetic.
    pub fn satisfies_scalar_relations(&self) -> bool {
        satisfies_scalar_relations(self.n(), |i, j| self.entry(i, j))
    }
}

/// The commutative-scalar form of the defining relations of `O_n^{-1}` on an
/// integer matrix: `Σ_k u_ik u_jk = Σ_k u_ki u_kj = δ_ij`,
/// `u_ij u_ik = -u_ik u_ij` (so `u_ij u_ik = 0`) and the same in columns for
/// `j ≠ k`. Commutation of entries in distinct rows and columns and
/// self-adjointness are automatic for real scalars.
pub fn satisfies_scalar_relations(n: usize, u: impl Fn(usize, usize) -> i64) -> bool {
    for i in 0..n {
        for j in 0..n {
            let delta = (i == j) as i64;
            let rows: i64 = (0..n).map(|k| u(i, k) * u(j, k)).sum();
            let cols: i64 = (0..n).map(|k| u(k, i) * u(k, j)).sum();
            if rows != delta || cols != delta {
                return false;
            }
            for k in 0..n {
                if k != j && (u(i, j) * u(i, k) != 0 || u(j, i) * u(k, i) != 0) {
                    return false;
                }
            }
        }
    }
    true
}

fn check_signed_bound(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::usage("n must be positive"));
    }
    if n > MAX_SIGNED_N {
        return Err(Error::Capacity {
            what: "signed permutation enumeration (n)",
            limit: MAX_SIGNED_N,
            requested: n,
        });
    }
    Ok(())
}

/// All `n!` permutations of `{0, .., n-1}` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    (0..n)
        .permutations(n)
        .map(|images| Permutation::new(images).expect("itertools yields bijections"))
        .collect()
}

/// All `2^n · n!` signed permutation matrices, permutations in lexicographic
/// order and sign patterns by ascending bit mask (bit `j` set means `-1`).
pub fn all_signed_perms(n: usize) -> Result<Vec<SignedPermMatrix>> {
    check_signed_bound(n)?;
    let mut out = Vec::with_capacity((1 << n) * (1..=n).product::<usize>());
    for perm in all_permutations(n) {
        for mask in 0u32..1 << n {
            let signs = (0..n)
                .map(|j| if (mask >> j) & 1 == 1 { -1 } else { 1 })
                .collect();
            out.push(SignedPermMatrix {
                perm: perm.clone(),
                signs,
            });
        }
    }
    Ok(out)
}

/// The classical points of `SO_n^{-1}`: signed permutation matrices with
/// quantum determinant `+1`. There are `2^{n-1} · n!` of them.
pub fn abelian_points(n: usize) -> Result<Vec<SignedPermMatrix>> {
    Ok(all_signed_perms(n)?
        .into_iter()
        .filter(|m| m.quantum_determinant() == 1)
        .collect())
}
