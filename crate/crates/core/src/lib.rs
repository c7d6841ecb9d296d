//! Computational algebra on networks represented by tensors.
//!
//! Tensors are the primitive relations of a general network. Chain addition
//! joins tensors sharing indices into 2-chains, and reducing merges chains
//! through shared tensors; the universe of connected chains forms an
//! idempotent, commutative, non-associative magma. The [`lattice`] module
//! checks those laws exhaustively at desk scale, analyzes the δ-classes
//! (each a semilattice with a unique maximum and spanning-tree minima,
//! counted exactly by a reduced-Laplacian determinant), and builds the
//! quotient. The [`paths`] module realizes the graph inverse semigroup of a
//! directed network, with pq* normal forms and Cuntz-Krieger relation
//! generation.
//!
//! Everything is immutable after construction; all operations are pure.

pub mod chain;
pub mod corpus;
mod format;
pub mod lattice;
pub mod magma;
pub mod network;
pub mod paths;

pub use chain::{is_connected, Chain, ChainError, TensorChain, TwoChain};
pub use lattice::{
    chain_leq, check_chi_homomorphism, check_class_semilattice, check_delta_congruence,
    check_laws, check_quotient_laws, chi, class_isomorphic, count_minima, delta_class,
    delta_related, enumerate_chains, find_sigma_violation, is_inducible, local_max, local_minima,
    quotient_star, sigma_related, DeltaKey, IsoWitness, Laplacian, LatticeError, TensorGraph,
    MAX_ENUMERATION_TENSORS, MAX_SEARCH_TENSORS,
};
pub use magma::{CayleyTable, LawReport, MagmaError};
pub use network::{Network, NetworkError, NetworkKind, Tensor, TensorId, VertexId};
pub use paths::{
    all_generators, bar_add, ck_relations, normal_forms_up_to, parse_word, paths_up_to,
    verify_generator_relations, vertex_leq, Ck1Relation, Ck2Relation, DirectedEdge,
    DirectedGraph, DirectedPath, Generator, NormalForm, PathError, RelationSet,
};
