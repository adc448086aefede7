//! Permutation groups: stabilizer chains, actions, composition factors and
//! the group classes Γ_d and Θ_d.

mod composition;
pub mod constructions;
mod group;
mod permutation;
mod theta;

pub use composition::{
    composition_factors, composition_factors_with, coset_action, factors_min_gamma_degree,
    is_gamma_d, is_gamma_d_with, is_regular_on, is_semiregular, min_faithful_degree,
    min_gamma_degree, min_gamma_degree_with, nontrivial_blocks, order_primes,
    prime_factors_exceed, small_prime_factors, CompositionFactor, CompositionOptions, FactorKind,
    Witness, DEFAULT_ORDER_CAP,
};
pub use group::PermGroup;
pub use permutation::Permutation;
pub use theta::{certify_theta, certify_theta_with, min_theta_degree, GroupData, LeafTag, StructureTree};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("expected permutations of degree {expected}, got degree {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("image array is not a bijection")]
    NotABijection,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("the blocks are not permuted by the group")]
    BlocksNotInvariant,
    #[error("group order {order} exceeds the cap {cap}")]
    GroupTooLarge { order: String, cap: String },
    #[error("the given points do not form an orbit")]
    NotAnOrbit,
    #[error("inconsistent structure tree: {0}")]
    InconsistentTree(String),
    #[error("composition factor lacks a permutation representation")]
    MissingWitness,
    #[error("embedding search exceeded its node budget")]
    SearchBudgetExceeded,
}
