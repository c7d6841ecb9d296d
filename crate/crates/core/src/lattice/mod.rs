//! The chain universe of a network and its structure: quasi-semilattice law
//! checks, the σ and δ equivalences, δ-class semilattices, the quotient and
//! its epimorphism, the order structure of classes, spanning-tree minima and
//! their Matrix-Tree counts, and class isomorphism.
//!
//! The laws this module checks, writing `∪̊` for reducing over the universe
//! L of connected chains plus the empty chain:
//!
//! | Law | Statement | Checker |
//! |-----|-----------|---------|
//! | idempotence   | `l ∪̊ l = l`                                | [`check_laws`] |
//! | commutativity | `a ∪̊ b = b ∪̊ a`                           | [`check_laws`] |
//! | non-associativity | a counterexample triple exists whenever some P1 meets P2 and P3 with P2, P3 disjoint | [`check_laws`] |
//! | δ congruence  | `δ(a, b)` implies `δ(c ∪̊ a, c ∪̊ b)`       | [`check_delta_congruence`] |
//! | σ incompatibility | equal sizes need not survive reducing  | [`find_sigma_violation`] |
//! | class closure | each δ-class is an associative sub-magma    | [`check_class_semilattice`] |
//! | order         | `a ⪯ b iff a ∪̊ b = b` is a partial order   | [`chain_leq`] |
//! | extremes      | unique maximum `(P, S_P)`; minima are the spanning trees, counted by `det` of the reduced Laplacian | [`local_max`], [`local_minima`], [`count_minima`] |
//! | epimorphism   | `χ(a ∪̊ b) = χ(a) ∗ χ(b)` onto the quotient | [`check_chi_homomorphism`], [`check_quotient_laws`] |
//!
//! Everything is verified by exhaustive enumeration at desk scale; the caps
//! are [`MAX_ENUMERATION_TENSORS`] and [`MAX_SEARCH_TENSORS`].

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::chain::ChainError;
use crate::network::TensorId;

mod classes;
mod iso;
mod laws;
mod matrix_tree;
mod order;
mod universe;

pub use classes::{
    check_class_semilattice, chi, delta_class, delta_related, quotient_star, sigma_related,
};
pub use iso::{class_isomorphic, IsoWitness};
pub use laws::{
    check_chi_homomorphism, check_delta_congruence, check_laws, check_quotient_laws,
    enumerate_chains, find_sigma_violation,
};
pub use matrix_tree::{count_minima, Laplacian, TensorGraph};
pub use order::{chain_leq, is_inducible, local_max, local_minima};

/// Exhaustive chain enumeration refuses networks beyond this many tensors.
pub const MAX_ENUMERATION_TENSORS: usize = 12;

/// Isomorphism search and explicit minima listing refuse classes beyond
/// this many tensors.
pub const MAX_SEARCH_TENSORS: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("network too large for exhaustive enumeration: {size} tensors exceeds cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("tensor set {0} does not induce a connected tensor graph")]
    NotInducible(DeltaKey),
    #[error("removed index {index} out of range for {order} tensors")]
    BadIndex { index: usize, order: usize },
    #[error("empty tensor set cannot key a class")]
    EmptyKey,
    #[error("class is empty")]
    EmptyClass,
    #[error(transparent)]
    Chain(#[from] ChainError),
}

/// Key of a δ-class: the nonempty tensor set shared by all its chains.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DeltaKey(BTreeSet<TensorId>);

impl DeltaKey {
    pub fn new(tensors: BTreeSet<TensorId>) -> Result<Self, LatticeError> {
        if tensors.is_empty() {
            return Err(LatticeError::EmptyKey);
        }
        Ok(DeltaKey(tensors))
    }

    pub fn from_ids(ids: &[TensorId]) -> Result<Self, LatticeError> {
        Self::new(ids.iter().cloned().collect())
    }

    pub fn tensors(&self) -> &BTreeSet<TensorId> {
        &self.0
    }

    pub fn tensor_count(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for DeltaKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids = self
            .0
            .iter()
            .map(TensorId::as_str)
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{{{ids}}}")
    }
}
