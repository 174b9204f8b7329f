//! The relation system of `O_n^{-1}` and `SO_n^{-1}`.
//!
//! Generators `u_ij` satisfy `u_ij = u_ij*`, row and column orthogonality
//! `Σ_k u_ik u_jk = Σ_k u_ki u_kj = δ_ij`, anticommutation inside rows and
//! columns and commutation otherwise; `SO_n^{-1}` adds the sign-free
//! determinant `Σ_σ u_{σ(1)1} ... u_{σ(n)n} = 1`.
//!
//! Classical points are signed permutation matrices. For odd `n = 2m + 1`
//! the relations are realised by twisting the product of `C(SO_n)` with a
//! `±1` bicharacter on `Z_2^{2m}`; the checks evaluate twisted products
//! pointwise on seeded special orthogonal samples.

mod action;
mod bicharacter;
mod checks;
mod sampling;
mod signed;
mod twisted;

pub use action::{
    classical_action_sweep, classical_action_sweep_with, classical_point_action, ActionContext,
    ActionOutcome, ActionSweepReport,
};
pub use bicharacter::{bicharacter, Bicharacter};
pub use checks::{
    lemma_p_check, lemma_p_check_with, lemma_so_bruteforce, lemma_so_bruteforce_with,
    lemma_sumzero_check, lemma_sumzero_check_with, twisted_relation_check,
    twisted_relation_check_with, CheckReport, LemmaSoReport, Model, RelationCheck, CONTROL_SAMPLES,
    MAX_LEMMA_P_WORK,
};
pub use sampling::{sample_orthogonal, sample_points, sample_special_orthogonal};
pub use signed::{
    abelian_points, all_permutations, all_signed_perms, satisfies_scalar_relations,
    SignedPermMatrix, MAX_SIGNED_N,
};
pub use twisted::{star_word, twisted_product, word_sign, GradedMonomial, TwistedPoly};
