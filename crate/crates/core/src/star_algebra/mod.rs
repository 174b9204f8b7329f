//! Finite-dimensional *-algebra arithmetic and magic-unitary witnesses.
//!
//! A pair of non-trivial disjoint automorphisms `σ`, `τ` of orders `n`, `m`
//! turns any family of projections `p_1..p_n`, `q_1..q_m` with
//! `Σ p_k = 1 = Σ q_l` into a magic unitary
//! `u' = Σ_l τ^l ⊗ q_l + Σ_k σ^k ⊗ p_k − 1` commuting with the adjacency
//! matrix. Representing `C*(Z_n * Z_m)` on `C^{nm}` with a generic unitary
//! twist makes `p` and `q` fail to commute, so the entries of `u'` do too.

mod element;
mod model;
mod witness;

pub use element::AlgebraElement;
pub use model::{
    commuting_free_product, random_unitary, rep_free_product, rep_free_product_with_unitary,
    FreeProductModel,
};
pub use witness::{
    build_witness, build_witness_unchecked, certify_witness, certify_witness_with,
    recovery_products, recovery_products_with, MagicUnitary, RecoveryReport, WitnessReport,
};
