use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on `{0, .., n-1}`, stored as its image array.
///
/// `p.apply(i) == p.images()[i]`. Composition follows function notation:
/// `a.compose(&b)` applies `b` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

/// Cycle notation, 0-based, fixed points omitted: `(0 1)(2 3)`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.iter().all(|c| c.len() == 1) {
            return f.write_str("()");
        }
        for c in cycles.iter().filter(|c| c.len() > 1) {
            f.write_str("(")?;
            for (idx, v) in c.iter().enumerate() {
                if idx > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::Parse(format!(
                    "image array {images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from cycles written with 1-based labels, the way
    /// they appear in hand-written cycle notation.
    pub fn from_cycles_one_based(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (idx, &label) in cycle.iter().enumerate() {
                let next = cycle[(idx + 1) % cycle.len()];
                if label == 0 || label > n || next == 0 || next > n {
                    return Err(Error::Parse(format!("label out of range 1..={n}")));
                }
                if touched[label - 1] {
                    return Err(Error::Parse(format!("label {label} repeated in cycles")));
                }
                touched[label - 1] = true;
                images[label - 1] = next - 1;
            }
        }
        Permutation::new(images)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::dimension(self.len(), other.len()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut images = vec![0; self.len()];
        for cycle in self.cycles() {
            let len = cycle.len() as u64;
            let shift = (k % len) as usize;
            for (idx, &v) in cycle.iter().enumerate() {
                images[v] = cycle[(idx + shift) % cycle.len()];
            }
        }
        Permutation { images }
    }

    /// Disjoint cycles including fixed points. Each cycle starts at its
    /// minimum; cycles are sorted by that minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.images[start];
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.images[v];
            }
            out.push(cycle);
        }
        out
    }

    /// Least common multiple of the cycle lengths; 1 for the identity.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    /// `+1` for even, `-1` for odd permutations.
    pub fn sign(&self) -> i8 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Moved points in ascending order.
    pub fn support(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, v)| i != *v)
            .map(|(i, _)| i)
            .collect()
    }

    /// True iff no point is moved by both permutations.
    pub fn is_disjoint_from(&self, other: &Permutation) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::dimension(self.len(), other.len()));
        }
        Ok(self
            .images
            .iter()
            .zip(&other.images)
            .enumerate()
            .all(|(i, (&a, &b))| a == i || b == i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn order_and_cycles() {
        let p = Permutation::from_cycles_one_based(6, &[&[1, 2, 3], &[4, 5]]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycles(), vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
        assert_eq!(p.pow(1), p);
    }

    #[test]
    fn disjointness() {
        let a = Permutation::from_cycles_one_based(4, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles_one_based(4, &[&[3, 4]]).unwrap();
        assert!(a.is_disjoint_from(&b).unwrap());
        assert!(!a.is_disjoint_from(&a).unwrap());
        assert!(Permutation::identity(4).is_disjoint_from(&a).unwrap());
        assert!(a.is_disjoint_from(&Permutation::identity(5)).is_err());
    }

    #[test]
    fn serde_is_image_array() {
        let p = Permutation::new(vec![1, 0, 2]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,0,2]");
        let q: Permutation = serde_json::from_str("[2,0,1]").unwrap();
        assert_eq!(q.apply(0), 2);
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..12).prop_flat_map(|n| {
            Just((0..n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::new(v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn inverse_and_power_laws(p in arb_perm()) {
            let id = Permutation::identity(p.len());
            prop_assert_eq!(p.compose(&p.inverse()).unwrap(), id.clone());
            prop_assert_eq!(p.pow(p.order()), id);
            let mut acc = Permutation::identity(p.len());
            for k in 0..5u64 {
                prop_assert_eq!(p.pow(k), acc.clone());
                acc = p.compose(&acc).unwrap();
            }
        }

        #[test]
        fn sign_is_multiplicative(p in arb_perm(), seed in any::<u64>()) {
            let n = p.len();
            let mut images: Vec<usize> = (0..n).collect();
            images.rotate_left((seed as usize) % n.max(1));
            let q = Permutation::new(images).unwrap();
            prop_assert_eq!(p.compose(&q).unwrap().sign(), p.sign() * q.sign());
        }
    }

    #[test]
    fn sign_of_small_permutations() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        assert_eq!(Permutation::new(vec![1, 0, 2]).unwrap().sign(), -1);
        assert_eq!(Permutation::new(vec![1, 2, 0]).unwrap().sign(), 1);
        assert_eq!(Permutation::new(vec![1, 2, 3, 0]).unwrap().sign(), -1);
    }
}
