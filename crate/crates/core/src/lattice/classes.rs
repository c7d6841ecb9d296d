//! σ and δ relatedness, δ-classes, class semilattice verification, the
//! quotient operation and the projection χ.

use std::collections::{BTreeSet, HashSet};

use crate::chain::Chain;
use crate::lattice::universe::{Packed, Universe};
use crate::lattice::{DeltaKey, LatticeError, MAX_ENUMERATION_TENSORS};
use crate::network::{Network, TensorId};

/// σ relates chains of equal tensor-set cardinality; the empty chain counts
/// as size 0 and is related only to itself.
pub fn sigma_related(a: &Chain, b: &Chain) -> bool {
    a.tensor_count() == b.tensor_count()
}

/// δ relates chains with the same tensor set.
pub fn delta_related(a: &Chain, b: &Chain) -> bool {
    match (a, b) {
        (Chain::Empty, Chain::Empty) => true,
        (Chain::NonEmpty(x), Chain::NonEmpty(y)) => x.tensors() == y.tensors(),
        _ => false,
    }
}

/// The δ-class key of a chain; `None` for the empty chain.
pub fn chi(chain: &Chain) -> Option<DeltaKey> {
    match chain {
        Chain::Empty => None,
        Chain::NonEmpty(tc) => {
            Some(DeltaKey::new(tc.tensors().clone()).expect("chain tensor sets are nonempty"))
        }
    }
}

/// The induced operation on δ-classes: the union key when the tensor sets
/// intersect, the empty class otherwise.
pub fn quotient_star(a: Option<&DeltaKey>, b: Option<&DeltaKey>) -> Option<DeltaKey> {
    match (a, b) {
        (Some(x), Some(y)) if !x.tensors().is_disjoint(y.tensors()) => Some(
            DeltaKey::new(x.tensors().union(y.tensors()).cloned().collect())
                .expect("union of nonempty sets is nonempty"),
        ),
        _ => None,
    }
}

/// All chains whose tensor set is exactly the key: the connected spanning
/// sub-edge-sets of the induced tensor graph. Empty when the key does not
/// induce a connected graph.
pub fn delta_class(net: &Network, key: &DeltaKey) -> Result<BTreeSet<Chain>, LatticeError> {
    let size = key.tensor_count();
    if size > MAX_ENUMERATION_TENSORS {
        return Err(LatticeError::TooLarge {
            size,
            cap: MAX_ENUMERATION_TENSORS,
        });
    }
    let u = Universe::over_key(net, key)?;
    let p = u.full_mask();
    Ok(u.chains_for_p(p)
        .into_iter()
        .map(|c| u.to_chain(Some(c)))
        .collect())
}

/// True iff the given set of chains is closed under reducing and reducing
/// is associative on all of its triples. Idempotence and commutativity are
/// inherited from the ambient quasi-semilattice.
pub fn check_class_semilattice(
    net: &Network,
    class: &BTreeSet<Chain>,
) -> Result<bool, LatticeError> {
    if class.is_empty() {
        return Err(LatticeError::EmptyClass);
    }
    let mut ids: BTreeSet<TensorId> = BTreeSet::new();
    for chain in class {
        net.validate_chain(chain)?;
        if let Chain::NonEmpty(tc) = chain {
            ids.extend(tc.tensors().iter().cloned());
        }
    }
    let u = Universe::build(net, ids.into_iter().collect())?;
    let mut members: Vec<Option<Packed>> = Vec::with_capacity(class.len());
    for chain in class {
        members.push(u.pack(chain)?);
    }
    let lookup: HashSet<Option<Packed>> = members.iter().copied().collect();
    for &a in &members {
        for &b in &members {
            if !lookup.contains(&u.reduce(a, b)) {
                return Ok(false);
            }
        }
    }
    for &a in &members {
        for &b in &members {
            for &c in &members {
                if u.reduce(u.reduce(a, b), c) != u.reduce(a, u.reduce(b, c)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
