//! Exhaustive verification over the chain universe: enumeration, the
//! quasi-semilattice laws, the δ congruence, σ incompatibility, the quotient
//! laws and the projection homomorphism.

use std::collections::{BTreeMap, BTreeSet};

use crate::chain::Chain;
use crate::lattice::universe::{Packed, Universe};
use crate::lattice::{DeltaKey, LatticeError, MAX_ENUMERATION_TENSORS};
use crate::magma::LawReport;
use crate::network::Network;

fn capped_universe(net: &Network, max_tensors: usize) -> Result<Universe, LatticeError> {
    let cap = max_tensors.min(MAX_ENUMERATION_TENSORS);
    let size = net.tensor_count();
    if size > cap {
        return Err(LatticeError::TooLarge { size, cap });
    }
    Universe::full(net)
}

/// Every element of the chain universe: all connected `(P, S)` with `P`
/// drawn from the network's tensors, plus the empty chain.
pub fn enumerate_chains(
    net: &Network,
    max_tensors: usize,
) -> Result<BTreeSet<Chain>, LatticeError> {
    let u = capped_universe(net, max_tensors)?;
    let mut out: BTreeSet<Chain> = u
        .enumerate_packed()
        .into_iter()
        .map(|c| u.to_chain(Some(c)))
        .collect();
    out.insert(Chain::Empty);
    Ok(out)
}

/// Check idempotence and commutativity exhaustively and search for an
/// associativity counterexample, scanning chains smallest first.
pub fn check_laws(net: &Network, max_tensors: usize) -> Result<LawReport<Chain>, LatticeError> {
    let u = capped_universe(net, max_tensors)?;
    let all = with_empty(&u);

    let idempotent = all.iter().all(|&c| u.reduce(c, c) == c);
    let commutative = all
        .iter()
        .enumerate()
        .all(|(i, &a)| all[i..].iter().all(|&b| u.reduce(a, b) == u.reduce(b, a)));

    // The empty chain absorbs on both sides, so it never witnesses an
    // associativity failure; scan nonempty triples only.
    let nonempty: Vec<Option<Packed>> = all.iter().copied().filter(Option::is_some).collect();
    let mut counterexample = None;
    'search: for &a in &nonempty {
        for &b in &nonempty {
            for &c in &nonempty {
                if u.reduce(u.reduce(a, b), c) != u.reduce(a, u.reduce(b, c)) {
                    counterexample =
                        Some((u.to_chain(a), u.to_chain(b), u.to_chain(c)));
                    break 'search;
                }
            }
        }
    }
    Ok(LawReport {
        idempotent,
        commutative,
        associativity_counterexample: counterexample,
    })
}

fn with_empty(u: &Universe) -> Vec<Option<Packed>> {
    [None]
        .into_iter()
        .chain(u.enumerate_packed().into_iter().map(Some))
        .collect()
}

fn key_mask(r: Option<Packed>) -> Option<u16> {
    r.map(|c| c.p)
}

/// True iff δ is compatible with reducing: for every chain c and every
/// δ-class, multiplying the class members by c lands in a single δ-class.
/// Pairwise agreement over a class is checked as equality of all result
/// keys, which is the same statement since key equality is transitive.
pub fn check_delta_congruence(net: &Network, max_tensors: usize) -> Result<bool, LatticeError> {
    let u = capped_universe(net, max_tensors)?;
    let all = with_empty(&u);
    let mut classes: BTreeMap<Option<u16>, Vec<Option<Packed>>> = BTreeMap::new();
    for &c in &all {
        classes.entry(key_mask(c)).or_default().push(c);
    }
    for &c in &all {
        for members in classes.values() {
            let first = key_mask(u.reduce(c, members[0]));
            for &m in &members[1..] {
                if key_mask(u.reduce(c, m)) != first {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Search for a witness that σ is not left compatible: chains `l1, l2` of
/// equal tensor-set size and a chain `l3` with `|l3 ∪̊ l1| ≠ |l3 ∪̊ l2|`.
pub fn find_sigma_violation(
    net: &Network,
    max_tensors: usize,
) -> Result<Option<(Chain, Chain, Chain)>, LatticeError> {
    let u = capped_universe(net, max_tensors)?;
    let all = with_empty(&u);
    let size = |c: Option<Packed>| c.map_or(0, |x| x.p.count_ones());
    let mut groups: BTreeMap<u32, Vec<Option<Packed>>> = BTreeMap::new();
    for &c in &all {
        groups.entry(size(c)).or_default().push(c);
    }
    for members in groups.values() {
        for &a in members {
            for &b in members {
                if a == b {
                    continue;
                }
                for &c in &all {
                    if size(u.reduce(c, a)) != size(u.reduce(c, b)) {
                        return Ok(Some((u.to_chain(a), u.to_chain(b), u.to_chain(c))));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Verify χ(a ∪̊ b) = χ(a) ∗ χ(b) over every pair of chains.
pub fn check_chi_homomorphism(net: &Network, max_tensors: usize) -> Result<bool, LatticeError> {
    let u = capped_universe(net, max_tensors)?;
    let all = with_empty(&u);
    let star = |a: Option<u16>, b: Option<u16>| match (a, b) {
        (Some(x), Some(y)) if x & y != 0 => Some(x | y),
        _ => None,
    };
    for &a in &all {
        for &b in &all {
            if key_mask(u.reduce(a, b)) != star(key_mask(a), key_mask(b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The quotient's elements and laws: class keys of all chains, idempotence
/// and commutativity of ∗, and an associativity counterexample when the
/// network admits one.
pub fn check_quotient_laws(
    net: &Network,
    max_tensors: usize,
) -> Result<LawReport<DeltaKey>, LatticeError> {
    let u = capped_universe(net, max_tensors)?;
    let mut keys: BTreeSet<Option<u16>> = u
        .enumerate_packed()
        .into_iter()
        .map(|c| Some(c.p))
        .collect();
    keys.insert(None);
    let keys: Vec<Option<u16>> = {
        let mut v: Vec<Option<u16>> = keys.into_iter().collect();
        v.sort_by_key(|k| (k.map_or(0, u16::count_ones), *k));
        v
    };
    let star = |a: Option<u16>, b: Option<u16>| match (a, b) {
        (Some(x), Some(y)) if x & y != 0 => Some(x | y),
        _ => None,
    };
    let idempotent = keys.iter().all(|&k| star(k, k) == k);
    let commutative = keys
        .iter()
        .all(|&a| keys.iter().all(|&b| star(a, b) == star(b, a)));
    let mut counterexample = None;
    let nonempty: Vec<u16> = keys.iter().filter_map(|&k| k).collect();
    'search: for &a in &nonempty {
        for &b in &nonempty {
            for &c in &nonempty {
                if star(star(Some(a), Some(b)), Some(c)) != star(Some(a), star(Some(b), Some(c)))
                {
                    counterexample = Some((u.key_of(a), u.key_of(b), u.key_of(c)));
                    break 'search;
                }
            }
        }
    }
    Ok(LawReport {
        idempotent,
        commutative,
        associativity_counterexample: counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{graphs_up_to_iso, network_realizing_graph};

    /// The star on four tensors: 2-chains t1-t2, t2-t3, t2-t4.
    fn star4() -> Network {
        network_realizing_graph(4, &[(0, 1), (1, 2), (1, 3)])
    }

    #[test]
    fn star_universe_has_eleven_nonempty_chains() {
        // Each connected induced subgraph of a tree has exactly one
        // connected spanning edge set, and the star has 11 connected
        // induced subsets: 4 + 3 + 3 + 1.
        let chains = enumerate_chains(&star4(), 12).unwrap();
        assert_eq!(chains.len(), 12);
        assert_eq!(chains.iter().filter(|c| !c.is_empty()).count(), 11);
        assert_eq!(
            chains.iter().filter(|c| c.tensor_count() == 1).count(),
            4
        );
    }

    #[test]
    fn single_tensor_universe() {
        let net = network_realizing_graph(1, &[]);
        let chains = enumerate_chains(&net, 12).unwrap();
        assert_eq!(chains.len(), 2);
    }

    #[test]
    fn two_disjoint_tensors_have_no_two_chain() {
        let net = network_realizing_graph(2, &[]);
        let chains = enumerate_chains(&net, 12).unwrap();
        assert_eq!(chains.len(), 3);
        assert!(chains.iter().all(|c| c.tensor_count() <= 1));
    }

    #[test]
    fn cap_is_enforced() {
        let net = star4();
        assert!(matches!(
            enumerate_chains(&net, 3),
            Err(LatticeError::TooLarge { size: 4, cap: 3 })
        ));
        assert!(matches!(
            check_laws(&net, 2),
            Err(LatticeError::TooLarge { .. })
        ));
    }

    #[test]
    fn the_hard_cap_binds_even_when_asked_for_more() {
        // A 12-tensor path sits exactly at the cap: one chain per
        // contiguous interval.
        let path12: Vec<(usize, usize)> = (0..11).map(|i| (i, i + 1)).collect();
        let net = network_realizing_graph(12, &path12);
        let chains = enumerate_chains(&net, usize::MAX).unwrap();
        assert_eq!(chains.len(), 12 * 13 / 2 + 1);

        let path13: Vec<(usize, usize)> = (0..12).map(|i| (i, i + 1)).collect();
        let net13 = network_realizing_graph(13, &path13);
        assert!(matches!(
            enumerate_chains(&net13, 13),
            Err(LatticeError::TooLarge { size: 13, cap: 12 })
        ));
    }

    #[test]
    fn star_laws_hold_and_a_counterexample_is_found() {
        let report = check_laws(&star4(), 12).unwrap();
        assert!(report.idempotent);
        assert!(report.commutative);
        let (a, b, c) = report.associativity_counterexample.expect("counterexample");
        // Verify the reported triple against the structural reduce.
        let net = star4();
        let left = net.reduce(&net.reduce(&a, &b).unwrap(), &c).unwrap();
        let right = net.reduce(&a, &net.reduce(&b, &c).unwrap()).unwrap();
        assert_ne!(left, right);
    }

    #[test]
    fn single_tensor_network_is_associative() {
        let report = check_laws(&network_realizing_graph(1, &[]), 12).unwrap();
        assert!(report.idempotent && report.commutative);
        assert!(report.is_associative());
    }

    #[test]
    fn delta_is_a_congruence_on_small_graphs() {
        for n in 1..=4 {
            for edges in graphs_up_to_iso(n) {
                let net = network_realizing_graph(n, &edges);
                assert!(check_delta_congruence(&net, 12).unwrap());
            }
        }
    }

    #[test]
    fn sigma_violation_found_on_two_disjoint_pairs() {
        // Two disjoint 2-chains: {t1, t2} and {t3, t4}.
        let net = network_realizing_graph(4, &[(0, 1), (2, 3)]);
        let (l1, l2, l3) = find_sigma_violation(&net, 12).unwrap().expect("violation");
        assert_eq!(l1.tensor_count(), l2.tensor_count());
        let r1 = net.reduce(&l3, &l1).unwrap();
        let r2 = net.reduce(&l3, &l2).unwrap();
        assert_ne!(r1.tensor_count(), r2.tensor_count());
    }

    #[test]
    fn sigma_violation_absent_on_a_single_tensor() {
        let net = network_realizing_graph(1, &[]);
        assert_eq!(find_sigma_violation(&net, 12).unwrap(), None);
    }

    #[test]
    fn chi_is_a_homomorphism_on_small_graphs() {
        for n in 1..=4 {
            for edges in graphs_up_to_iso(n) {
                let net = network_realizing_graph(n, &edges);
                assert!(check_chi_homomorphism(&net, 12).unwrap());
            }
        }
    }

    #[test]
    fn quotient_laws_mirror_the_chain_laws() {
        let net = star4();
        let quotient = check_quotient_laws(&net, 12).unwrap();
        assert!(quotient.idempotent);
        assert!(quotient.commutative);
        let (k1, k2, k3) = quotient
            .associativity_counterexample
            .expect("the star admits the disjointness pattern");
        let star = crate::lattice::quotient_star;
        let left = star(star(Some(&k1), Some(&k2)).as_ref(), Some(&k3));
        let right = star(Some(&k1), star(Some(&k2), Some(&k3)).as_ref());
        assert_ne!(left, right, "reported key triple must violate");

        let single = network_realizing_graph(1, &[]);
        assert!(check_quotient_laws(&single, 12)
            .unwrap()
            .is_associative());
    }

    #[test]
    fn counterexample_triples_use_small_chains_first() {
        let report = check_laws(&star4(), 12).unwrap();
        let (a, b, _) = report.associativity_counterexample.unwrap();
        assert_eq!(a.tensor_count(), 1);
        assert_eq!(b.tensor_count(), 1);
    }
}
