//! Isomorphism of δ-classes. Two classes are isomorphic semilattices when
//! their tensor graphs are; the witness carries the node bijection θ, the
//! induced 2-chain bijection τ, and has had the induced class map verified
//! as a magma isomorphism.

use std::collections::{BTreeMap, BTreeSet};

use crate::chain::{Chain, TensorChain, TwoChain};
use crate::lattice::matrix_tree::TensorGraph;
use crate::lattice::{delta_class, DeltaKey, LatticeError, MAX_SEARCH_TENSORS};
use crate::network::{Network, TensorId};

/// Witness that two δ-classes are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    theta: BTreeMap<TensorId, TensorId>,
    tau: BTreeMap<TwoChain, TwoChain>,
}

impl IsoWitness {
    /// The tensor bijection P₁ → P₂.
    pub fn theta(&self) -> &BTreeMap<TensorId, TensorId> {
        &self.theta
    }

    /// The induced 2-chain bijection S_{P₁} → S_{P₂}.
    pub fn tau(&self) -> &BTreeMap<TwoChain, TwoChain> {
        &self.tau
    }
}

/// Search for a tensor-graph isomorphism between two class keys, pruning on
/// degree sequences, and verify the induced class map. The first witness in
/// lexicographic node order is returned.
pub fn class_isomorphic(
    net: &Network,
    k1: &DeltaKey,
    k2: &DeltaKey,
) -> Result<Option<IsoWitness>, LatticeError> {
    for key in [k1, k2] {
        let size = key.tensor_count();
        if size > MAX_SEARCH_TENSORS {
            return Err(LatticeError::TooLarge {
                size,
                cap: MAX_SEARCH_TENSORS,
            });
        }
    }
    let g1 = TensorGraph::over(net, k1)?;
    let g2 = TensorGraph::over(net, k2)?;
    for (key, graph) in [(k1, &g1), (k2, &g2)] {
        if !graph.is_connected() {
            return Err(LatticeError::NotInducible(key.clone()));
        }
    }
    if g1.nodes().len() != g2.nodes().len()
        || g1.edges().len() != g2.edges().len()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return Ok(None);
    }

    let n = g1.nodes().len();
    let mut assignment: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if !assign(&g1, &g2, &mut assignment, &mut used) {
        return Ok(None);
    }

    let theta: BTreeMap<TensorId, TensorId> = (0..n)
        .map(|i| (g1.nodes()[i].clone(), g2.nodes()[assignment[i]].clone()))
        .collect();
    let mut tau = BTreeMap::new();
    for &(i, j) in g1.edges() {
        let from = link(net, &g1.nodes()[i], &g1.nodes()[j]);
        let to = link(net, &g2.nodes()[assignment[i]], &g2.nodes()[assignment[j]]);
        tau.insert(from, to);
    }
    let witness = IsoWitness { theta, tau };
    verify_class_map(net, k1, k2, &witness)?;
    Ok(Some(witness))
}

fn link(net: &Network, a: &TensorId, b: &TensorId) -> TwoChain {
    net.chain_add(a, b)
        .expect("nodes come from the network")
        .expect("graph edges are nonempty 2-chains")
}

fn assign(g1: &TensorGraph, g2: &TensorGraph, assignment: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let i = assignment.len();
    if i == g1.nodes().len() {
        return true;
    }
    for candidate in 0..g2.nodes().len() {
        if used[candidate] || g1.degree(i) != g2.degree(candidate) {
            continue;
        }
        let consistent = (0..i).all(|prev| {
            g1.has_edge(prev, i) == g2.has_edge(assignment[prev], candidate)
        });
        if !consistent {
            continue;
        }
        assignment.push(candidate);
        used[candidate] = true;
        if assign(g1, g2, assignment, used) {
            return true;
        }
        assignment.pop();
        used[candidate] = false;
    }
    false
}

/// Check that mapping chains through (θ, τ) is a bijection of the two
/// classes commuting with reducing. This always holds for a tensor-graph
/// isomorphism; the verification backs the returned witness.
fn verify_class_map(
    net: &Network,
    k1: &DeltaKey,
    k2: &DeltaKey,
    witness: &IsoWitness,
) -> Result<(), LatticeError> {
    let class1 = delta_class(net, k1)?;
    let class2 = delta_class(net, k2)?;
    let eta = |chain: &Chain| -> Chain { map_chain(chain, witness) };
    let image: BTreeSet<Chain> = class1.iter().map(&eta).collect();
    assert_eq!(
        image, class2,
        "a tensor-graph isomorphism must map the classes onto each other"
    );
    for a in &class1 {
        for b in &class1 {
            let mapped = net.reduce(&eta(a), &eta(b))?;
            let direct = eta(&net.reduce(a, b)?);
            assert_eq!(mapped, direct, "the induced class map must commute with reducing");
        }
    }
    Ok(())
}

fn map_chain(chain: &Chain, witness: &IsoWitness) -> Chain {
    let Chain::NonEmpty(tc) = chain else {
        return Chain::Empty;
    };
    let tensors: BTreeSet<TensorId> = tc
        .tensors()
        .iter()
        .map(|t| witness.theta[t].clone())
        .collect();
    let links: BTreeSet<TwoChain> = tc.links().iter().map(|l| witness.tau[l].clone()).collect();
    Chain::NonEmpty(TensorChain::new_unchecked(tensors, links))
}
