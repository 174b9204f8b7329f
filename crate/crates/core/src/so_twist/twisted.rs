use std::collections::BTreeMap;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::Bicharacter;
use crate::boolean_group::GroupWord;
use crate::error::{Error, Result};

/// A commutative monomial `[u_{i_1 j_1} ... u_{i_r j_r}]` in `C(SO_n)`,
/// stored as its sorted multiset of 0-based index pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GradedMonomial {
    factors: Vec<(usize, usize)>,
}

impl GradedMonomial {
    pub fn one() -> Self {
        GradedMonomial {
            factors: Vec::new(),
        }
    }

    pub fn generator(i: usize, j: usize) -> Self {
        GradedMonomial {
            factors: vec![(i, j)],
        }
    }

    pub fn from_factors(mut factors: Vec<(usize, usize)>) -> Self {
        factors.sort_unstable();
        GradedMonomial { factors }
    }

    pub fn factors(&self) -> &[(usize, usize)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// Left and right `Z_2^{2m}` degrees: `u_ij` has bidegree `(t_i, t_j)`.
    pub fn bidegree(&self, bc: &Bicharacter) -> (GroupWord, GroupWord) {
        let zero = GroupWord::identity(bc.width());
        self.factors.iter().fold((zero, zero), |(l, r), &(i, j)| {
            (l ^ bc.generator(i), r ^ bc.generator(j))
        })
    }

    fn merged(&self, other: &GradedMonomial) -> GradedMonomial {
        let mut factors = Vec::with_capacity(self.degree() + other.degree());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        GradedMonomial::from_factors(factors)
    }

    /// Value at a point of `O_n`: the product of the matching entries.
    pub fn eval(&self, point: &DMatrix<f64>) -> f64 {
        self.factors.iter().map(|&(i, j)| point[(i, j)]).product()
    }
}

/// An integer combination of commutative monomials in `n × n` generators,
/// multiplied with the twisted product
/// `[u_ij] ⋆ [u_kl] = σ(t_i, t_k) σ(t_j, t_l) [u_ij u_kl]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedPoly {
    n: usize,
    terms: BTreeMap<GradedMonomial, i64>,
}

impl TwistedPoly {
    pub fn zero(n: usize) -> Self {
        TwistedPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        TwistedPoly::monomial(n, GradedMonomial::one(), 1)
    }

    fn monomial(n: usize, m: GradedMonomial, c: i64) -> Self {
        let mut p = TwistedPoly::zero(n);
        if c != 0 {
            p.terms.insert(m, c);
        }
        p
    }

    /// `[u_{i+1, j+1}]`.
    pub fn generator(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= n || j >= n {
            return Err(Error::usage(format!(
                "generator u({}, {}) outside 1..={n}",
                i + 1,
                j + 1
            )));
        }
        Ok(TwistedPoly::monomial(n, GradedMonomial::generator(i, j), 1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<GradedMonomial, i64> {
        &self.terms
    }

    pub fn coefficient(&self, m: &GradedMonomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &TwistedPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::dimension(self.n, other.n));
        }
        Ok(())
    }

    fn accumulate(&mut self, m: GradedMonomial, c: i64) {
        let entry = self.terms.entry(m).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn add(&self, other: &TwistedPoly) -> Result<TwistedPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.accumulate(m.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> TwistedPoly {
        let mut out = TwistedPoly::zero(self.n);
        if c != 0 {
            out.terms = self
                .terms
                .iter()
                .map(|(m, &v)| (m.clone(), v * c))
                .collect();
        }
        out
    }

    pub fn sub(&self, other: &TwistedPoly) -> Result<TwistedPoly> {
        self.add(&other.scale(-1))
    }

    /// The twisted product, extended bilinearly.
    pub fn star(&self, other: &TwistedPoly, bc: &Bicharacter) -> Result<TwistedPoly> {
        self.check_same(other)?;
        if bc.n() != self.n {
            return Err(Error::dimension(bc.n(), self.n));
        }
        let mut out = TwistedPoly::zero(self.n);
        for (a, &ca) in &self.terms {
            let (la, ra) = a.bidegree(bc);
            for (b, &cb) in &other.terms {
                let (lb, rb) = b.bidegree(bc);
                let s = bc.eval(la, lb)? * bc.eval(ra, rb)?;
                out.accumulate(a.merged(b), s as i64 * ca * cb);
            }
        }
        Ok(out)
    }

    /// Pointwise value `Σ c_m · m(point)`.
    pub fn eval(&self, point: &DMatrix<f64>) -> Result<f64> {
        if point.nrows() != self.n || point.ncols() != self.n {
            return Err(Error::dimension(self.n, point.nrows()));
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, &c)| c as f64 * m.eval(point))
            .sum())
    }
}

pub fn twisted_product(f: &TwistedPoly, h: &TwistedPoly, bc: &Bicharacter) -> Result<TwistedPoly> {
    f.star(h, bc)
}

/// `[u_{a_1}] ⋆ ... ⋆ [u_{a_r}]` for an ordered word of generators.
pub fn star_word(bc: &Bicharacter, word: &[(usize, usize)]) -> Result<TwistedPoly> {
    word.iter()
        .try_fold(TwistedPoly::one(bc.n()), |acc, &(i, j)| {
            acc.star(&TwistedPoly::generator(bc.n(), i, j)?, bc)
        })
}

/// Sign of `[u_{a_1}] ⋆ ... ⋆ [u_{a_r}]` relative to the commutative
/// monomial: `Π_{r<s} σ(t_{i_r}, t_{i_s}) σ(t_{j_r}, t_{j_s})`.
pub fn word_sign(bc: &Bicharacter, word: &[(usize, usize)]) -> i8 {
    let mut s = 1;
    for (r, &(ir, jr)) in word.iter().enumerate() {
        for &(is, js) in &word[r + 1..] {
            s *= bc.get(ir, is) * bc.get(jr, js);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::so_twist::bicharacter;
    use proptest::prelude::*;

    fn gen(n: usize, i: usize, j: usize) -> TwistedPoly {
        TwistedPoly::generator(n, i - 1, j - 1).unwrap()
    }

    fn mono(f: &[(usize, usize)]) -> GradedMonomial {
        GradedMonomial::from_factors(f.iter().map(|&(i, j)| (i - 1, j - 1)).collect())
    }

    #[test]
    fn same_row_generators_anticommute() {
        let bc = bicharacter(1).unwrap();
        let ab = gen(3, 1, 2).star(&gen(3, 1, 3), &bc).unwrap();
        let ba = gen(3, 1, 3).star(&gen(3, 1, 2), &bc).unwrap();
        assert_eq!(ab.coefficient(&mono(&[(1, 2), (1, 3)])), 1);
        assert_eq!(ba.coefficient(&mono(&[(1, 2), (1, 3)])), -1);
        assert!(ab.add(&ba).unwrap().is_zero());
    }

    #[test]
    fn disjoint_generators_commute() {
        let bc = bicharacter(2).unwrap();
        let ab = gen(5, 1, 2).star(&gen(5, 3, 4), &bc).unwrap();
        let ba = gen(5, 3, 4).star(&gen(5, 1, 2), &bc).unwrap();
        assert_eq!(ab, ba);
        assert!(!ab.is_zero());
    }

    #[test]
    fn one_is_neutral() {
        let bc = bicharacter(1).unwrap();
        let f = gen(3, 2, 3).add(&gen(3, 1, 1).scale(4)).unwrap();
        assert_eq!(TwistedPoly::one(3).star(&f, &bc).unwrap(), f);
        assert_eq!(f.star(&TwistedPoly::one(3), &bc).unwrap(), f);
    }

    #[test]
    fn width_mismatch_is_rejected() {
        let bc = bicharacter(1).unwrap();
        assert!(matches!(
            gen(3, 1, 1).star(&gen(5, 1, 1), &bc),
            Err(Error::Dimension { .. })
        ));
        assert!(gen(5, 1, 1).star(&gen(5, 1, 1), &bc).is_err());
        assert!(TwistedPoly::generator(3, 3, 0).is_err());
    }

    #[test]
    fn eval_multiplies_entries() {
        let p = gen(3, 1, 2).add(&gen(3, 3, 3).scale(-2)).unwrap();
        let point = DMatrix::from_fn(3, 3, |i, j| (3 * i + j) as f64);
        assert_eq!(p.eval(&point).unwrap(), 1.0 - 2.0 * 8.0);
    }

    fn word_strategy() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
        (1usize..=2).prop_flat_map(|m| {
            let n = 2 * m + 1;
            (Just(m), prop::collection::vec((0..n, 0..n), 0..5))
        })
    }

    proptest! {
        #[test]
        fn star_is_associative(
            (m, a) in word_strategy(),
            b in prop::collection::vec((0usize..3, 0usize..3), 0..4),
            c in prop::collection::vec((0usize..3, 0usize..3), 0..4),
        ) {
            let bc = bicharacter(m).unwrap();
            let n = bc.n();
            let poly = |w: &[(usize, usize)]| {
                TwistedPoly::monomial(n, GradedMonomial::from_factors(w.to_vec()), 1)
            };
            let (pa, pb, pc) = (poly(&a), poly(&b), poly(&c));
            let left = pa.star(&pb, &bc).unwrap().star(&pc, &bc).unwrap();
            let right = pa.star(&pb.star(&pc, &bc).unwrap(), &bc).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn word_sign_matches_iterated_star((m, w) in word_strategy()) {
            let bc = bicharacter(m).unwrap();
            let p = star_word(&bc, &w).unwrap();
            let key = GradedMonomial::from_factors(w.clone());
            prop_assert_eq!(p.terms().len(), 1);
            prop_assert_eq!(p.coefficient(&key), word_sign(&bc, &w) as i64);
        }
    }
}
