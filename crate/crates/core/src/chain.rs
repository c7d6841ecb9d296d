//! Chain addition and reducing.
//!
//! Two distinct tensors whose index sets intersect form a 2-chain. A tensor
//! chain is a pair (P, S): a tensor set plus a set of 2-chains over it that
//! connects it. Reducing merges two chains by identifying shared tensors and
//! is empty whenever the tensor sets are disjoint. Reducing is idempotent and
//! commutative but not associative.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::network::{Network, TensorId, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("tensor {0} is not in the network")]
    UnknownTensor(TensorId),
    #[error("empty tensor set")]
    EmptyTensorSet,
    #[error("invalid 2-chain {a}-{b}: {reason}")]
    InvalidTwoChain {
        a: TensorId,
        b: TensorId,
        reason: String,
    },
    #[error("disconnected chain")]
    Disconnected,
    #[error("chain literal: {0}")]
    Literal(String),
}

/// An unordered pair of tensors sharing at least one vertex, together with
/// the shared vertices. A degenerate pair (both endpoints equal) carries the
/// tensor's full index set; it only appears transiently and is normalized
/// away inside chains.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoChain {
    first: TensorId,
    second: TensorId,
    shared: BTreeSet<VertexId>,
}

impl TwoChain {
    pub(crate) fn new(a: TensorId, b: TensorId, shared: BTreeSet<VertexId>) -> Self {
        let (first, second) = if a <= b { (a, b) } else { (b, a) };
        TwoChain {
            first,
            second,
            shared,
        }
    }

    pub fn endpoints(&self) -> (&TensorId, &TensorId) {
        (&self.first, &self.second)
    }

    /// The witnessing intersection of the two index sets.
    pub fn shared(&self) -> &BTreeSet<VertexId> {
        &self.shared
    }

    pub fn is_degenerate(&self) -> bool {
        self.first == self.second
    }

    pub fn contains(&self, t: &TensorId) -> bool {
        self.first == *t || self.second == *t
    }
}

impl fmt::Display for TwoChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.first, self.second)
    }
}

/// A connected subnetwork: a nonempty tensor set P and the 2-chains S that
/// connect it. Canonical: a 1-chain has an empty S, every tensor of a larger
/// chain occurs in some 2-chain, and S holds no degenerate pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TensorChain {
    tensors: BTreeSet<TensorId>,
    links: BTreeSet<TwoChain>,
}

impl TensorChain {
    pub(crate) fn new_unchecked(tensors: BTreeSet<TensorId>, links: BTreeSet<TwoChain>) -> Self {
        TensorChain { tensors, links }
    }

    /// The tensor set P.
    pub fn tensors(&self) -> &BTreeSet<TensorId> {
        &self.tensors
    }

    /// The 2-chain set S.
    pub fn links(&self) -> &BTreeSet<TwoChain> {
        &self.links
    }

    pub fn tensor_count(&self) -> usize {
        self.tensors.len()
    }
}

/// An element of the chain universe: a tensor chain or the empty relation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Chain {
    Empty,
    NonEmpty(TensorChain),
}

impl Chain {
    pub fn is_empty(&self) -> bool {
        matches!(self, Chain::Empty)
    }

    pub fn as_tensor_chain(&self) -> Option<&TensorChain> {
        match self {
            Chain::Empty => None,
            Chain::NonEmpty(tc) => Some(tc),
        }
    }

    /// |P|, with 0 for the empty chain.
    pub fn tensor_count(&self) -> usize {
        match self {
            Chain::Empty => 0,
            Chain::NonEmpty(tc) => tc.tensor_count(),
        }
    }

    /// Lift a (possibly degenerate) 2-chain to the chain level. Degenerate
    /// pairs become 1-chains.
    pub fn from_two_chain(link: TwoChain) -> Chain {
        if link.is_degenerate() {
            let tensors = [link.first].into_iter().collect();
            Chain::NonEmpty(TensorChain::new_unchecked(tensors, BTreeSet::new()))
        } else {
            let tensors = [link.first.clone(), link.second.clone()]
                .into_iter()
                .collect();
            let links = [link].into_iter().collect();
            Chain::NonEmpty(TensorChain::new_unchecked(tensors, links))
        }
    }
}

/// True iff every pair of tensors is joined by a path of 2-chains. Links
/// whose endpoints lie outside the tensor set and degenerate links
/// contribute nothing.
pub fn is_connected(tensors: &BTreeSet<TensorId>, links: &BTreeSet<TwoChain>) -> bool {
    if tensors.len() <= 1 {
        return true;
    }
    let mut reached: BTreeSet<&TensorId> = BTreeSet::new();
    reached.insert(tensors.iter().next().expect("nonempty"));
    loop {
        let mut grew = false;
        for link in links {
            if link.is_degenerate()
                || !tensors.contains(&link.first)
                || !tensors.contains(&link.second)
            {
                continue;
            }
            let has_first = reached.contains(&link.first);
            let has_second = reached.contains(&link.second);
            if has_first != has_second {
                reached.insert(if has_first { &link.second } else { &link.first });
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    reached.len() == tensors.len()
}

impl Network {
    fn require_tensor(&self, id: &TensorId) -> Result<(), ChainError> {
        if self.tensor(id).is_none() {
            return Err(ChainError::UnknownTensor(id.clone()));
        }
        Ok(())
    }

    fn shared_vertices(&self, a: &TensorId, b: &TensorId) -> BTreeSet<VertexId> {
        let ta = self.tensor(a).expect("checked").index_set();
        let tb = self.tensor(b).expect("checked").index_set();
        ta.intersection(&tb).cloned().collect()
    }

    /// Chain addition of two tensors. Equal tensors give the degenerate
    /// pair; distinct tensors give a 2-chain when their index sets
    /// intersect and `None` (the empty relation) otherwise.
    pub fn chain_add(&self, a: &TensorId, b: &TensorId) -> Result<Option<TwoChain>, ChainError> {
        self.require_tensor(a)?;
        self.require_tensor(b)?;
        if a == b {
            let shared = self.tensor(a).expect("checked").index_set();
            return Ok(Some(TwoChain::new(a.clone(), b.clone(), shared)));
        }
        let shared = self.shared_vertices(a, b);
        if shared.is_empty() {
            return Ok(None);
        }
        Ok(Some(TwoChain::new(a.clone(), b.clone(), shared)))
    }

    fn check_link(&self, link: &TwoChain) -> Result<(), ChainError> {
        self.require_tensor(&link.first)?;
        self.require_tensor(&link.second)?;
        let expect = if link.is_degenerate() {
            self.tensor(&link.first).expect("checked").index_set()
        } else {
            let shared = self.shared_vertices(&link.first, &link.second);
            if shared.is_empty() {
                return Err(ChainError::InvalidTwoChain {
                    a: link.first.clone(),
                    b: link.second.clone(),
                    reason: "tensors share no vertex".into(),
                });
            }
            shared
        };
        if link.shared != expect {
            return Err(ChainError::InvalidTwoChain {
                a: link.first.clone(),
                b: link.second.clone(),
                reason: "shared set does not match the tensor index sets".into(),
            });
        }
        Ok(())
    }

    /// Build the canonical tensor chain (P, S). Degenerate links are
    /// normalized away; the result must be connected.
    pub fn make_chain(
        &self,
        tensors: BTreeSet<TensorId>,
        links: BTreeSet<TwoChain>,
    ) -> Result<TensorChain, ChainError> {
        if tensors.is_empty() {
            return Err(ChainError::EmptyTensorSet);
        }
        for t in &tensors {
            self.require_tensor(t)?;
        }
        let mut kept = BTreeSet::new();
        for link in links {
            self.check_link(&link)?;
            if link.is_degenerate() {
                continue;
            }
            for end in [&link.first, &link.second] {
                if !tensors.contains(end) {
                    return Err(ChainError::InvalidTwoChain {
                        a: link.first.clone(),
                        b: link.second.clone(),
                        reason: format!("endpoint {end} is not in the tensor set"),
                    });
                }
            }
            kept.insert(link);
        }
        if !is_connected(&tensors, &kept) {
            return Err(ChainError::Disconnected);
        }
        Ok(TensorChain::new_unchecked(tensors, kept))
    }

    /// `make_chain` from tensor ids and id pairs, building the 2-chains by
    /// chain addition.
    pub fn make_chain_by_ids(
        &self,
        tensors: &[TensorId],
        pairs: &[(TensorId, TensorId)],
    ) -> Result<TensorChain, ChainError> {
        let mut links = BTreeSet::new();
        for (a, b) in pairs {
            match self.chain_add(a, b)? {
                Some(link) => {
                    links.insert(link);
                }
                None => {
                    return Err(ChainError::InvalidTwoChain {
                        a: a.clone(),
                        b: b.clone(),
                        reason: "tensors share no vertex".into(),
                    })
                }
            }
        }
        self.make_chain(tensors.iter().cloned().collect(), links)
    }

    /// Validate that a chain belongs to this network: tensors exist and
    /// every 2-chain matches the actual index-set intersection.
    pub fn validate_chain(&self, chain: &Chain) -> Result<(), ChainError> {
        let Chain::NonEmpty(tc) = chain else {
            return Ok(());
        };
        for t in &tc.tensors {
            self.require_tensor(t)?;
        }
        for link in &tc.links {
            self.check_link(link)?;
        }
        Ok(())
    }

    /// Reducing of two (possibly degenerate) 2-chains.
    pub fn reduce_two_chains(&self, x: &TwoChain, y: &TwoChain) -> Result<Chain, ChainError> {
        self.check_link(x)?;
        self.check_link(y)?;
        match (x.is_degenerate(), y.is_degenerate()) {
            (true, true) => {
                if x == y {
                    Ok(Chain::from_two_chain(x.clone()))
                } else {
                    Ok(Chain::Empty)
                }
            }
            (true, false) => {
                if y.contains(&x.first) {
                    Ok(Chain::from_two_chain(y.clone()))
                } else {
                    Ok(Chain::Empty)
                }
            }
            (false, true) => {
                if x.contains(&y.first) {
                    Ok(Chain::from_two_chain(x.clone()))
                } else {
                    Ok(Chain::Empty)
                }
            }
            (false, false) => {
                if x == y {
                    return Ok(Chain::from_two_chain(x.clone()));
                }
                let tensors: BTreeSet<TensorId> = [&x.first, &x.second, &y.first, &y.second]
                    .into_iter()
                    .cloned()
                    .collect();
                if tensors.len() == 4 {
                    // The pairs are disjoint.
                    return Ok(Chain::Empty);
                }
                let links = [x.clone(), y.clone()].into_iter().collect();
                let merged = self.make_chain(tensors, links)?;
                Ok(Chain::NonEmpty(merged))
            }
        }
    }

    /// Reducing of two chains: the merged chain on P1 ∪ P2 when the tensor
    /// sets intersect, the empty chain otherwise. The empty chain absorbs.
    pub fn reduce(&self, x: &Chain, y: &Chain) -> Result<Chain, ChainError> {
        self.validate_chain(x)?;
        self.validate_chain(y)?;
        let (Chain::NonEmpty(a), Chain::NonEmpty(b)) = (x, y) else {
            return Ok(Chain::Empty);
        };
        if a.tensors.is_disjoint(&b.tensors) {
            return Ok(Chain::Empty);
        }
        let tensors: BTreeSet<TensorId> = a.tensors.union(&b.tensors).cloned().collect();
        let links: BTreeSet<TwoChain> = a.links.union(&b.links).cloned().collect();
        let merged = self
            .make_chain(tensors, links)
            .expect("the union of two connected chains sharing a tensor is connected");
        Ok(Chain::NonEmpty(merged))
    }
}

// ---------------------------------------------------------------------------
// Chain literals: `chain{t1,t2,t3 | t1-t2, t2-t3}`, `chain{t1}`, `empty`.

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chain::Empty => f.write_str("empty"),
            Chain::NonEmpty(tc) => {
                let ids = tc
                    .tensors
                    .iter()
                    .map(TensorId::as_str)
                    .collect::<Vec<_>>()
                    .join(",");
                if tc.links.is_empty() {
                    write!(f, "chain{{{ids}}}")
                } else {
                    let pairs = tc
                        .links
                        .iter()
                        .map(|l| l.to_string())
                        .collect::<Vec<_>>()
                        .join(", ");
                    write!(f, "chain{{{ids} | {pairs}}}")
                }
            }
        }
    }
}

impl Chain {
    /// Parse a chain literal against a network. Tensor ids containing `-`
    /// are not representable in the pair list.
    pub fn parse(net: &Network, text: &str) -> Result<Chain, ChainError> {
        let text = text.trim();
        if text == "empty" {
            return Ok(Chain::Empty);
        }
        let body = text
            .strip_prefix("chain{")
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| {
                ChainError::Literal(format!(
                    "expected `empty` or `chain{{...}}`, got {text:?}"
                ))
            })?;
        let (id_part, pair_part) = match body.split_once('|') {
            Some((ids, pairs)) => (ids, pairs),
            None => (body, ""),
        };
        let mut tensors = Vec::new();
        for token in id_part.split(',') {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            tensors.push(
                TensorId::new(token).map_err(|e| ChainError::Literal(e.to_string()))?,
            );
        }
        let mut pairs = Vec::new();
        for token in pair_part.split(',') {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            let (a, b) = token.split_once('-').ok_or_else(|| {
                ChainError::Literal(format!("pair {token:?} is not of the form a-b"))
            })?;
            if b.contains('-') {
                return Err(ChainError::Literal(format!(
                    "pair {token:?} has more than one dash"
                )));
            }
            pairs.push((
                TensorId::new(a.trim()).map_err(|e| ChainError::Literal(e.to_string()))?,
                TensorId::new(b.trim()).map_err(|e| ChainError::Literal(e.to_string()))?,
            ));
        }
        if tensors.is_empty() {
            return Err(ChainError::EmptyTensorSet);
        }
        Ok(Chain::NonEmpty(net.make_chain_by_ids(&tensors, &pairs)?))
    }
}
