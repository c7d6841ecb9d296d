//! Bit-packed chain kernel. A chain over at most 16 tensors is a tensor mask
//! plus an edge mask over the 2-chains of the tensor graph, so reducing is a
//! handful of integer operations. Public entry points convert to and from
//! the structural [`Chain`] representation at the boundary.

use std::collections::BTreeSet;

use crate::chain::{Chain, ChainError, TensorChain, TwoChain};
use crate::lattice::{DeltaKey, LatticeError};
use crate::network::{Network, TensorId};

/// A nonempty chain in packed form: `p` is the tensor mask, `s` the edge
/// mask. The empty chain is carried as `Option::None` by callers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Packed {
    pub p: u16,
    pub s: u128,
}

pub(crate) struct Universe {
    ids: Vec<TensorId>,
    edges: Vec<(usize, usize)>,
    edge_links: Vec<TwoChain>,
}

impl Universe {
    /// Build over a sorted, deduplicated tensor subset of the network.
    /// Packed masks carry at most 16 tensors.
    pub fn build(net: &Network, ids: Vec<TensorId>) -> Result<Self, LatticeError> {
        if ids.len() > 16 {
            return Err(LatticeError::TooLarge {
                size: ids.len(),
                cap: 16,
            });
        }
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        for id in &ids {
            if net.tensor(id).is_none() {
                return Err(ChainError::UnknownTensor(id.clone()).into());
            }
        }
        let mut edges = Vec::new();
        let mut edge_links = Vec::new();
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                if let Some(link) = net
                    .chain_add(&ids[i], &ids[j])
                    .expect("ids were checked against the network")
                {
                    edges.push((i, j));
                    edge_links.push(link);
                }
            }
        }
        Ok(Universe {
            ids,
            edges,
            edge_links,
        })
    }

    pub fn full(net: &Network) -> Result<Self, LatticeError> {
        let ids: Vec<TensorId> = net.tensor_ids().cloned().collect();
        Self::build(net, ids)
    }

    pub fn over_key(net: &Network, key: &DeltaKey) -> Result<Self, LatticeError> {
        let ids: Vec<TensorId> = key.tensors().iter().cloned().collect();
        Self::build(net, ids)
    }

    pub fn full_mask(&self) -> u16 {
        ((1u32 << self.ids.len()) - 1) as u16
    }

    /// Reducing on packed chains; `None` is the empty chain and absorbs.
    pub fn reduce(&self, a: Option<Packed>, b: Option<Packed>) -> Option<Packed> {
        match (a, b) {
            (Some(x), Some(y)) if x.p & y.p != 0 => Some(Packed {
                p: x.p | y.p,
                s: x.s | y.s,
            }),
            _ => None,
        }
    }

    /// Edge mask of all 2-chains with both endpoints inside `p`.
    pub fn s_mask_for(&self, p: u16) -> u128 {
        let mut mask = 0u128;
        for (bit, &(i, j)) in self.edges.iter().enumerate() {
            if p >> i & 1 == 1 && p >> j & 1 == 1 {
                mask |= 1 << bit;
            }
        }
        mask
    }

    /// True iff every tensor of `p` is reachable through the edges of `s`.
    pub fn connected(&self, p: u16, s: u128) -> bool {
        if p == 0 {
            return true;
        }
        let mut reached: u16 = 1 << p.trailing_zeros();
        loop {
            let mut next = reached;
            for (bit, &(i, j)) in self.edges.iter().enumerate() {
                if s >> bit & 1 == 1 {
                    let ends = (1u16 << i) | (1u16 << j);
                    if next & ends != 0 {
                        next |= ends;
                    }
                }
            }
            if next == reached {
                break;
            }
            reached = next;
        }
        reached & p == p
    }

    pub fn p_connected(&self, p: u16) -> bool {
        self.connected(p, self.s_mask_for(p))
    }

    /// All chains with tensor set exactly `p`: the connected spanning
    /// sub-edge-sets of the induced tensor graph.
    pub fn chains_for_p(&self, p: u16) -> Vec<Packed> {
        let mut out = Vec::new();
        if p == 0 || !self.p_connected(p) {
            return out;
        }
        let sp = self.s_mask_for(p);
        if p.count_ones() == 1 {
            out.push(Packed { p, s: 0 });
            return out;
        }
        let mut s = sp;
        loop {
            if self.connected(p, s) {
                out.push(Packed { p, s });
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & sp;
        }
        out.sort();
        out
    }

    /// Every nonempty chain, ordered by tensor-set size then packed value.
    pub fn enumerate_packed(&self) -> Vec<Packed> {
        let n = self.ids.len();
        let mut out = Vec::new();
        for p in 1u32..(1u32 << n) {
            out.extend(self.chains_for_p(p as u16));
        }
        out.sort_by_key(|c| (c.p.count_ones(), c.p, c.s));
        out
    }

    /// Spanning trees of the tensor graph induced on `p`: connected edge
    /// subsets of size |p| - 1.
    pub fn spanning_trees_for_p(&self, p: u16) -> Vec<Packed> {
        let k = p.count_ones() as usize;
        let mut out = Vec::new();
        if k == 0 || !self.p_connected(p) {
            return out;
        }
        if k == 1 {
            out.push(Packed { p, s: 0 });
            return out;
        }
        let sp = self.s_mask_for(p);
        let bits: Vec<usize> = (0..self.edges.len()).filter(|b| sp >> b & 1 == 1).collect();
        if bits.len() < k - 1 {
            return out;
        }
        for_each_combination(bits.len(), k - 1, |choice| {
            let s = choice.iter().fold(0u128, |acc, &i| acc | 1 << bits[i]);
            if self.connected(p, s) {
                out.push(Packed { p, s });
            }
        });
        out.sort();
        out
    }

    pub fn key_of(&self, p: u16) -> DeltaKey {
        let tensors: BTreeSet<TensorId> = (0..self.ids.len())
            .filter(|i| p >> i & 1 == 1)
            .map(|i| self.ids[i].clone())
            .collect();
        DeltaKey::new(tensors).expect("a packed key is never empty")
    }

    pub fn to_chain(&self, packed: Option<Packed>) -> Chain {
        let Some(c) = packed else {
            return Chain::Empty;
        };
        let tensors: BTreeSet<TensorId> = (0..self.ids.len())
            .filter(|i| c.p >> i & 1 == 1)
            .map(|i| self.ids[i].clone())
            .collect();
        let links: BTreeSet<TwoChain> = (0..self.edges.len())
            .filter(|b| c.s >> b & 1 == 1)
            .map(|b| self.edge_links[b].clone())
            .collect();
        Chain::NonEmpty(TensorChain::new_unchecked(tensors, links))
    }

    pub fn pack(&self, chain: &Chain) -> Result<Option<Packed>, LatticeError> {
        let Chain::NonEmpty(tc) = chain else {
            return Ok(None);
        };
        let mut p = 0u16;
        for id in tc.tensors() {
            let i = self
                .ids
                .binary_search(id)
                .map_err(|_| ChainError::UnknownTensor(id.clone()))?;
            p |= 1 << i;
        }
        let mut s = 0u128;
        for link in tc.links() {
            let bit = self
                .edge_links
                .iter()
                .position(|known| known == link)
                .ok_or_else(|| {
                    let (a, b) = link.endpoints();
                    ChainError::InvalidTwoChain {
                        a: a.clone(),
                        b: b.clone(),
                        reason: "2-chain does not occur in this network".into(),
                    }
                })?;
            s |= 1 << bit;
        }
        Ok(Some(Packed { p, s }))
    }
}

/// Visit every k-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut choice: Vec<usize> = (0..k).collect();
    loop {
        visit(&choice);
        // Advance the rightmost index that can still move.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if choice[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        choice[i] += 1;
        for j in i + 1..k {
            choice[j] = choice[j - 1] + 1;
        }
    }
}
