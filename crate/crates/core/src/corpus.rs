//! Fixture builders: graph enumeration up to isomorphism, networks realizing
//! a prescribed tensor graph, and deterministic pseudo-random networks.

use std::collections::BTreeSet;

use crate::network::{Network, NetworkKind, Tensor, TensorId, VertexId};

/// All simple graphs on `n` labeled nodes, one representative per isomorphism
/// class. Edges are sorted `(i, j)` pairs with `i < j`. Panics above 6 nodes.
pub fn graphs_up_to_iso(n: usize) -> Vec<Vec<(usize, usize)>> {
    assert!((1..=6).contains(&n), "graph enumeration is desk scale only");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let perms = permutations(n);
    let mut canonical: BTreeSet<u64> = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let canon = perms
            .iter()
            .map(|perm| relabel(mask, &pairs, perm))
            .min()
            .expect("at least the identity permutation");
        canonical.insert(canon);
    }
    canonical
        .into_iter()
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &p)| p)
                .collect()
        })
        .collect()
}

/// Like [`graphs_up_to_iso`], restricted to connected graphs.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Vec<(usize, usize)>> {
    graphs_up_to_iso(n)
        .into_iter()
        .filter(|edges| edge_list_connected(n, edges))
        .collect()
}

fn relabel(mask: u64, pairs: &[(usize, usize)], perm: &[usize]) -> u64 {
    let mut out = 0u64;
    for (bit, &(i, j)) in pairs.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
            let new_bit = pairs
                .iter()
                .position(|&p| p == (a, b))
                .expect("pair list is complete");
            out |= 1 << new_bit;
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

pub fn edge_list_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut reached = vec![false; n];
    reached[0] = true;
    loop {
        let mut grew = false;
        for &(i, j) in edges {
            if reached[i] != reached[j] {
                reached[i] = true;
                reached[j] = true;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    reached.iter().all(|&r| r)
}

/// A general network with tensors `t1..tn` whose 2-chain pattern is exactly
/// the given graph: each edge gets a dedicated shared vertex, and every
/// tensor additionally holds a private vertex.
pub fn network_realizing_graph(n: usize, edges: &[(usize, usize)]) -> Network {
    let mut net = Network::new(NetworkKind::General);
    let mut covariant: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); n];
    for (i, cov) in covariant.iter_mut().enumerate() {
        let v = VertexId::new(format!("p{}", i + 1)).unwrap();
        net.add_vertex(v.clone()).unwrap();
        cov.insert(v);
    }
    for &(i, j) in edges {
        assert!(i < j && j < n, "edges must be sorted pairs inside 0..n");
        let v = VertexId::new(format!("s{}_{}", i + 1, j + 1)).unwrap();
        net.add_vertex(v.clone()).unwrap();
        covariant[i].insert(v.clone());
        covariant[j].insert(v);
    }
    for (i, cov) in covariant.into_iter().enumerate() {
        let id = TensorId::new(format!("t{}", i + 1)).unwrap();
        net.add_tensor(Tensor::new(id, cov, BTreeSet::new()).unwrap())
            .unwrap();
    }
    net
}

/// Deterministic pseudo-random general network with at most 5 tensors.
/// The same seed always produces the same network.
pub fn random_network(seed: u64) -> Network {
    let mut rng = SplitMix64::new(seed);
    let n_vertices = 4 + (rng.next_u64() % 5) as usize; // 4..=8
    let n_tensors = 1 + (rng.next_u64() % 5) as usize; // 1..=5
    let mut net = Network::new(NetworkKind::General);
    let vertices: Vec<VertexId> = (0..n_vertices)
        .map(|i| VertexId::new(format!("v{i}")).unwrap())
        .collect();
    for v in &vertices {
        net.add_vertex(v.clone()).unwrap();
    }
    for t in 0..n_tensors {
        let cov_size = 1 + (rng.next_u64() % 2) as usize; // 1..=2
        let mut cov = BTreeSet::new();
        while cov.len() < cov_size {
            cov.insert(vertices[(rng.next_u64() as usize) % n_vertices].clone());
        }
        let mut contra = BTreeSet::new();
        if rng.next_u64().is_multiple_of(3) {
            contra.insert(vertices[(rng.next_u64() as usize) % n_vertices].clone());
        }
        // Avoid the trivial shape, which general networks reject.
        if contra == cov && cov.len() == 1 {
            contra.clear();
        }
        let id = TensorId::new(format!("t{}", t + 1)).unwrap();
        net.add_tensor(Tensor::new(id, cov, contra).unwrap()).unwrap();
    }
    net
}

/// SplitMix64; fixed algorithm so fixture streams never change.
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}
