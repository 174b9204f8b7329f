use serde::{Deserialize, Serialize};

use crate::boolean_group::GroupWord;
use crate::error::{Error, Result};

/// The `±1` bicharacter on `Z_2^{2m} = ⟨t_1, .., t_{2m+1}⟩`,
/// `t_{2m+1} = t_1 ... t_{2m}`, tabulated on the `2m + 1` generators.
///
/// `table[i][j] = σ(t_{i+1}, t_{j+1})` with
/// `σ(t_i, t_j) = -1 = -σ(t_j, t_i)` for `i < j ≤ 2m`,
/// `σ(t_i, t_i) = (-1)^m` and
/// `σ(t_i, t_{2m+1}) = (-1)^{m-i} = -σ(t_{2m+1}, t_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bicharacter {
    pub m: usize,
    pub table: Vec<Vec<i8>>,
}

fn neg_pow(e: usize) -> i8 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl Bicharacter {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::usage("bicharacter needs m >= 1"));
        }
        let n = 2 * m + 1;
        let last = 2 * m;
        let mut table = vec![vec![0i8; n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = if i == j {
                    neg_pow(m)
                } else if i < j && j < last {
                    -1
                } else if j < i && i < last {
                    1
                } else if j == last {
                    // 1-based i + 1
                    neg_pow(m + i + 1)
                } else {
                    -neg_pow(m + j + 1)
                };
            }
        }
        Ok(Bicharacter { m, table })
    }

    /// Number of generators, `2m + 1`.
    pub fn n(&self) -> usize {
        self.table.len()
    }

    pub fn width(&self) -> u32 {
        2 * self.m as u32
    }

    /// `σ(t_{i+1}, t_{j+1})`, 0-based generator indices.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.table[i][j]
    }

    /// Generator `t_{i+1}` as a word in `Z_2^{2m}`.
    pub fn generator(&self, i: usize) -> GroupWord {
        let w = self.width();
        if i == 2 * self.m {
            GroupWord::all_ones(w)
        } else {
            GroupWord::generator(i as u32, w)
        }
    }

    /// Multiplicative extension from the first `2m` rows and columns.
    pub fn eval(&self, x: GroupWord, y: GroupWord) -> Result<i8> {
        let w = self.width();
        for word in [x, y] {
            if word.width() != w {
                return Err(Error::dimension(w as usize, word.width() as usize));
            }
        }
        let mut s = 1;
        for a in (0..w).filter(|&a| x.bit(a)) {
            for b in (0..w).filter(|&b| y.bit(b)) {
                s *= self.table[a as usize][b as usize];
            }
        }
        Ok(s)
    }

    /// True iff row and column `2m + 1` of the table agree with the
    /// multiplicative extension through `t_{2m+1} = t_1 ... t_{2m}`.
    pub fn is_consistent(&self) -> bool {
        (0..self.n()).all(|i| {
            (0..self.n()).all(|j| {
                self.eval(self.generator(i), self.generator(j)).ok() == Some(self.table[i][j])
            })
        })
    }
}

pub fn bicharacter(m: usize) -> Result<Bicharacter> {
    let bc = Bicharacter::new(m)?;
    if !bc.is_consistent() {
        return Err(Error::usage(format!(
            "bicharacter table for m = {m} is not multiplicative"
        )));
    }
    Ok(bc)
}
