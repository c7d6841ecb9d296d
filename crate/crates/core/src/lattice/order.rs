//! The partial order induced by reducing, and the extremal chains of each
//! δ-class: the unique maximum (P, S_P) and the spanning-tree minima.

use std::collections::BTreeSet;

use crate::chain::{is_connected, Chain, ChainError, TwoChain};
use crate::lattice::universe::Universe;
use crate::lattice::{DeltaKey, LatticeError, MAX_SEARCH_TENSORS};
use crate::network::Network;

/// l1 ⪯ l2 iff l1 ∪̊ l2 = l2.
pub fn chain_leq(net: &Network, a: &Chain, b: &Chain) -> Result<bool, ChainError> {
    Ok(net.reduce(a, b)? == *b)
}

fn key_links(net: &Network, key: &DeltaKey) -> Result<BTreeSet<TwoChain>, LatticeError> {
    let ids: Vec<_> = key.tensors().iter().cloned().collect();
    let mut links = BTreeSet::new();
    for (i, a) in ids.iter().enumerate() {
        for b in &ids[i + 1..] {
            if let Some(link) = net.chain_add(a, b)? {
                links.insert(link);
            }
        }
    }
    Ok(links)
}

/// True iff the key's induced tensor graph is connected.
pub fn is_inducible(net: &Network, key: &DeltaKey) -> Result<bool, LatticeError> {
    let links = key_links(net, key)?;
    Ok(is_connected(key.tensors(), &links))
}

/// The unique maximum of the class: the chain (P, S_P) carrying every
/// 2-chain the key admits.
pub fn local_max(net: &Network, key: &DeltaKey) -> Result<Chain, LatticeError> {
    let links = key_links(net, key)?;
    if !is_connected(key.tensors(), &links) {
        return Err(LatticeError::NotInducible(key.clone()));
    }
    let chain = net
        .make_chain(key.tensors().clone(), links)
        .expect("S_P connects an inducible key");
    Ok(Chain::NonEmpty(chain))
}

/// The minima of the class: exactly the spanning trees of the induced
/// tensor graph, each with |S| = |P| - 1. Empty when the key is not
/// inducible.
pub fn local_minima(net: &Network, key: &DeltaKey) -> Result<BTreeSet<Chain>, LatticeError> {
    let size = key.tensor_count();
    if size > MAX_SEARCH_TENSORS {
        return Err(LatticeError::TooLarge {
            size,
            cap: MAX_SEARCH_TENSORS,
        });
    }
    let u = Universe::over_key(net, key)?;
    let p = u.full_mask();
    Ok(u.spanning_trees_for_p(p)
        .into_iter()
        .map(|c| u.to_chain(Some(c)))
        .collect())
}
