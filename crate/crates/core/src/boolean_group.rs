//! The elementary abelian group `Z_2^k`, its Fourier transform pair and the
//! folded cube graphs.
//!
//! A group element `t_1^{i_1} ... t_k^{i_k}` is a [`GroupWord`] whose bit `s`
//! holds the exponent of `t_{s+1}`. Vectors indexed by words use the natural
//! integer order of the bits, which makes both transforms the standard
//! Walsh-Hadamard matrix.

use std::fmt;
use std::ops::BitXor;

use nalgebra::Complex;
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub type C64 = Complex<f64>;

pub const MAX_WORD_WIDTH: u32 = 32;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    bits: u64,
    width: u32,
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupWord({})", self)
    }
}

/// Exponents in generator order, e.g. `1100` for `t_1 t_2` in width 4.
impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in 0..self.width {
            f.write_str(if self.bit(s) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl GroupWord {
    pub fn new(bits: u64, width: u32) -> Result<Self> {
        if width > MAX_WORD_WIDTH {
            return Err(Error::Capacity {
                what: "group word width",
                limit: MAX_WORD_WIDTH as usize,
                requested: width as usize,
            });
        }
        if bits >> width != 0 {
            return Err(Error::usage(format!("bits {bits:#b} exceed width {width}")));
        }
        Ok(GroupWord { bits, width })
    }

    /// Word from an exponent list `(i_1, .., i_k)`.
    pub fn from_exponents(exps: &[u8]) -> Result<Self> {
        let mut bits = 0;
        for (s, &e) in exps.iter().enumerate() {
            if e > 1 {
                return Err(Error::usage("exponents must be 0 or 1"));
            }
            bits |= (e as u64) << s;
        }
        Self::new(bits, exps.len() as u32)
    }

    pub fn identity(width: u32) -> Self {
        GroupWord { bits: 0, width }
    }

    /// `t_{s+1}`, 0-based `s`.
    pub fn generator(s: u32, width: u32) -> Self {
        assert!(s < width, "generator index {s} out of width {width}");
        GroupWord {
            bits: 1 << s,
            width,
        }
    }

    /// `t_1 t_2 ... t_k`.
    pub fn all_ones(width: u32) -> Self {
        GroupWord {
            bits: mask(width),
            width,
        }
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn index(self) -> usize {
        self.bits as usize
    }

    #[inline]
    pub fn width(self) -> u32 {
        self.width
    }

    #[inline]
    pub fn bit(self, s: u32) -> bool {
        (self.bits >> s) & 1 == 1
    }

    /// Word length with respect to `t_1, .., t_k`.
    #[inline]
    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    /// Parity of `i · j`, the exponent in the character `(-1)^{i·j}`.
    #[inline]
    pub fn dot(self, other: GroupWord) -> bool {
        (self.bits & other.bits).count_ones() % 2 == 1
    }

    pub fn checked_mul(self, other: GroupWord) -> Result<GroupWord> {
        if self.width != other.width {
            return Err(Error::dimension(self.width as usize, other.width as usize));
        }
        Ok(self ^ other)
    }

    pub fn is_identity(self) -> bool {
        self.bits == 0
    }

    /// All `2^width` words in index order.
    pub fn all(width: u32) -> impl Iterator<Item = GroupWord> {
        (0..1u64 << width).map(move |bits| GroupWord { bits, width })
    }
}

/// Serialized as its exponent string, e.g. `"1100"`.
impl Serialize for GroupWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let exps = text
            .chars()
            .map(|c| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                other => Err(serde::de::Error::custom(format!(
                    "invalid exponent {other:?}"
                ))),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        GroupWord::from_exponents(&exps).map_err(serde::de::Error::custom)
    }
}

fn mask(width: u32) -> u64 {
    if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// Group product. Panics on width mismatch; use [`GroupWord::mul`] for a
/// checked product.
impl BitXor for GroupWord {
    type Output = GroupWord;

    fn bitxor(self, rhs: GroupWord) -> GroupWord {
        assert_eq!(self.width, rhs.width, "group word width mismatch");
        GroupWord {
            bits: self.bits ^ rhs.bits,
            width: self.width,
        }
    }
}

/// Which basis the coefficients of a [`FunctionVector`] refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Point masses `e_g` of `C(Z_2^k)`.
    Point,
    /// Group elements `T_g` of `C*(Z_2^k)`.
    Group,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FunctionVectorJson", into = "FunctionVectorJson")]
pub struct FunctionVector {
    width: u32,
    basis: Basis,
    coefficients: Vec<C64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctionVectorJson {
    pub width: u32,
    pub basis: Basis,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl TryFrom<FunctionVectorJson> for FunctionVector {
    type Error = Error;

    fn try_from(j: FunctionVectorJson) -> Result<Self> {
        if j.re.len() != j.im.len() {
            return Err(Error::Parse("re and im must have equal length".into()));
        }
        let coefficients =
            j.re.iter()
                .zip(&j.im)
                .map(|(&re, &im)| C64::new(re, im))
                .collect();
        FunctionVector::new(j.width, j.basis, coefficients)
    }
}

impl From<FunctionVector> for FunctionVectorJson {
    fn from(v: FunctionVector) -> Self {
        FunctionVectorJson {
            width: v.width,
            basis: v.basis,
            re: v.coefficients.iter().map(|c| c.re).collect(),
            im: v.coefficients.iter().map(|c| c.im).collect(),
        }
    }
}

impl FunctionVector {
    pub fn new(width: u32, basis: Basis, coefficients: Vec<C64>) -> Result<Self> {
        if width > MAX_WORD_WIDTH {
            return Err(Error::Capacity {
                what: "function vector width",
                limit: MAX_WORD_WIDTH as usize,
                requested: width as usize,
            });
        }
        let len = 1usize << width;
        if coefficients.len() != len {
            return Err(Error::dimension(len, coefficients.len()));
        }
        Ok(FunctionVector {
            width,
            basis,
            coefficients,
        })
    }

    pub fn zeros(width: u32, basis: Basis) -> Self {
        FunctionVector {
            width,
            basis,
            coefficients: vec![C64::new(0.0, 0.0); 1 << width],
        }
    }

    /// `e_g` or `T_g` depending on `basis`.
    pub fn basis_vector(g: GroupWord, basis: Basis) -> Self {
        let mut v = Self::zeros(g.width(), basis);
        v.coefficients[g.index()] = C64::new(1.0, 0.0);
        v
    }

    pub fn from_real(width: u32, basis: Basis, values: &[f64]) -> Result<Self> {
        Self::new(
            width,
            basis,
            values.iter().map(|&x| C64::new(x, 0.0)).collect(),
        )
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coefficients(&self) -> &[C64] {
        &self.coefficients
    }

    pub fn coefficient(&self, g: GroupWord) -> C64 {
        self.coefficients[g.index()]
    }

    /// Hermitian inner product `Σ conj(a_i) b_i` of two vectors in the same basis.
    pub fn inner(&self, other: &FunctionVector) -> Result<C64> {
        if self.width != other.width {
            return Err(Error::dimension(self.width as usize, other.width as usize));
        }
        if self.basis != other.basis {
            return Err(Error::usage("inner product of vectors in different bases"));
        }
        Ok(self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn max_abs_diff(&self, other: &FunctionVector) -> f64 {
        self.coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// In-place unnormalised Walsh-Hadamard transform:
/// `x_j ← Σ_i (-1)^{i·j} x_i`.
pub fn walsh_hadamard_in_place(x: &mut [C64]) {
    let n = x.len();
    assert!(n.is_power_of_two(), "length {n} is not a power of two");
    let mut h = 1;
    while h < n {
        for block in (0..n).step_by(2 * h) {
            for i in block..block + h {
                let a = x[i];
                let b = x[i + h];
                x[i] = a + b;
                x[i + h] = a - b;
            }
        }
        h *= 2;
    }
}

/// Fourier transform `φ: C(Z_2^k) → C*(Z_2^k)`,
/// `e_{t^i} ↦ 2^{-k} Σ_j (-1)^{i·j} T_{t^j}`.
pub fn fourier(v: &FunctionVector) -> Result<FunctionVector> {
    if v.basis != Basis::Point {
        return Err(Error::usage("fourier expects a point-basis vector"));
    }
    let mut c = v.coefficients.clone();
    walsh_hadamard_in_place(&mut c);
    let scale = 1.0 / (1u64 << v.width) as f64;
    for x in &mut c {
        *x *= scale;
    }
    Ok(FunctionVector {
        width: v.width,
        basis: Basis::Group,
        coefficients: c,
    })
}

/// Inverse Fourier transform `ψ: C*(Z_2^k) → C(Z_2^k)`,
/// `T_{t^i} ↦ Σ_j (-1)^{i·j} e_{t^j}`.
pub fn inverse_fourier(v: &FunctionVector) -> Result<FunctionVector> {
    if v.basis != Basis::Group {
        return Err(Error::usage("inverse_fourier expects a group-basis vector"));
    }
    let mut c = v.coefficients.clone();
    walsh_hadamard_in_place(&mut c);
    Ok(FunctionVector {
        width: v.width,
        basis: Basis::Point,
        coefficients: c,
    })
}

/// Real ±1 point-basis coefficients of `ψ(T_w)`: the character `(-1)^{w·j}`.
pub fn character(w: GroupWord) -> Vec<f64> {
    GroupWord::all(w.width())
        .map(|j| if w.dot(j) { -1.0 } else { 1.0 })
        .collect()
}

fn check_fold_bounds(n: u32, cfg: &Config) -> Result<u32> {
    if n < 2 {
        return Err(Error::usage(format!("folded cube needs n >= 2, got {n}")));
    }
    let width = n - 1;
    if width > cfg.max_fold_width {
        return Err(Error::Capacity {
            what: "folded cube vertices",
            limit: 1 << cfg.max_fold_width,
            requested: 1usize.checked_shl(width).unwrap_or(usize::MAX),
        });
    }
    Ok(width)
}

pub fn folded_cube(n: u32) -> Result<Graph> {
    folded_cube_with(n, &Config::default())
}

/// `FQ_n` on bit strings of length `n-1`: neighbours differ in exactly one
/// position or are complements. For `n = 2` both rules give the same single
/// edge.
pub fn folded_cube_with(n: u32, cfg: &Config) -> Result<Graph> {
    let width = check_fold_bounds(n, cfg)?;
    let full = mask(width);
    Graph::from_fn(1 << width, |x, y| {
        let (x, y) = (x as u64, y as u64);
        (x ^ y).count_ones() == 1 || y == (!x & full)
    })
}

/// The connecting set `{t_1, .., t_{n-1}, t_n = t_1 ... t_{n-1}}` of `FQ_n`.
pub fn folded_cube_connecting_set(n: u32) -> Result<Vec<GroupWord>> {
    if n < 2 {
        return Err(Error::usage(format!("folded cube needs n >= 2, got {n}")));
    }
    let width = n - 1;
    let mut set: Vec<GroupWord> = (0..width).map(|s| GroupWord::generator(s, width)).collect();
    set.push(GroupWord::all_ones(width));
    Ok(set)
}

pub fn cayley_folded_cube(n: u32) -> Result<Graph> {
    cayley_folded_cube_with(n, &Config::default())
}

/// Cayley graph of `Z_2^{n-1}` for the connecting set of `FQ_n`:
/// `g ~ h` iff `g = h t_k` for some `k`.
pub fn cayley_folded_cube_with(n: u32, cfg: &Config) -> Result<Graph> {
    let width = check_fold_bounds(n, cfg)?;
    let set = folded_cube_connecting_set(n)?;
    let size = 1usize << width;
    let mut edges = std::collections::BTreeSet::new();
    for g in GroupWord::all(width) {
        for &t in &set {
            let h = g ^ t;
            edges.insert([g.index().min(h.index()), g.index().max(h.index())]);
        }
    }
    let edges: Vec<[usize; 2]> = edges.into_iter().collect();
    Graph::from_edges(size, &edges)
}

/// The words `τ_i = t_1 ... ť_i ... t_{n-1}` (`i < n`) and `τ_n = t_1 ... t_{n-1}`.
///
/// For odd `n` they satisfy `τ_n = τ_1 ... τ_{n-1}` and generate the whole
/// group; both facts are checked before returning.
pub fn tau_generators(n: u32) -> Result<Vec<GroupWord>> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::usage(format!(
            "tau generators need odd n >= 3, got {n}"
        )));
    }
    let width = n - 1;
    if width > MAX_WORD_WIDTH {
        return Err(Error::Capacity {
            what: "group word width",
            limit: MAX_WORD_WIDTH as usize,
            requested: width as usize,
        });
    }
    let all = GroupWord::all_ones(width);
    let mut taus: Vec<GroupWord> = (0..width)
        .map(|s| all ^ GroupWord::generator(s, width))
        .collect();
    taus.push(all);

    let product = taus[..width as usize]
        .iter()
        .fold(GroupWord::identity(width), |acc, &t| acc ^ t);
    if product != taus[width as usize] || gf2_rank(&taus) != width as usize {
        return Err(Error::usage("tau words fail their defining relations"));
    }
    Ok(taus)
}

/// Rank over GF(2) of a set of words, by Gaussian elimination.
pub fn gf2_rank(words: &[GroupWord]) -> usize {
    let mut rows: Vec<u64> = words.iter().map(|w| w.bits()).collect();
    let mut rank = 0;
    for bit in 0..64 {
        let pivot = (rank..rows.len()).find(|&r| (rows[r] >> bit) & 1 == 1);
        if let Some(p) = pivot {
            rows.swap(rank, p);
            for r in 0..rows.len() {
                if r != rank && (rows[r] >> bit) & 1 == 1 {
                    rows[r] ^= rows[rank];
                }
            }
            rank += 1;
        }
    }
    rank
}
