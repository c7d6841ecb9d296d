//! Vertices, tensors and network containers.
//!
//! A tensor is the primitive relation of a network: a nonempty covariant
//! vertex set plus a (possibly empty) contravariant vertex set. A network is
//! a finite collection of named tensors over a declared vertex set. General
//! networks admit arbitrary arities; directed networks admit only (1, 1)
//! tensors, which are read as edges.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetworkError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("missing network header")]
    MissingHeader,
    #[error("invalid token {token:?}: {reason}")]
    InvalidToken { token: String, reason: &'static str },
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("duplicate tensor {0}")]
    DuplicateTensor(TensorId),
    #[error("unknown vertex {vertex} in tensor {tensor}")]
    UnknownVertex { tensor: TensorId, vertex: VertexId },
    #[error("tensor {0} has an empty covariant set")]
    EmptyCovariant(TensorId),
    #[error("tensor {tensor} has arity ({cov}, {contra}) but a directed network requires (1, 1)")]
    WrongArity {
        tensor: TensorId,
        cov: usize,
        contra: usize,
    },
    #[error("tensor {0} is a trivial tensor, which only directed networks admit")]
    TrivialInGeneral(TensorId),
}

fn validate_token(token: &str) -> Result<(), NetworkError> {
    let fail = |reason| {
        Err(NetworkError::InvalidToken {
            token: token.to_string(),
            reason,
        })
    };
    if token.is_empty() {
        return fail("empty");
    }
    if token.chars().any(char::is_whitespace) {
        return fail("contains whitespace");
    }
    if token.contains(',') {
        return fail("contains a comma");
    }
    if token.chars().any(char::is_control) {
        return fail("contains a control character");
    }
    Ok(())
}

/// Name of a vertex: a non-empty printable token without whitespace or commas.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self, NetworkError> {
        let name = name.into();
        validate_token(&name)?;
        Ok(VertexId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Name of a tensor, unique within one network.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorId(String);

impl TensorId {
    pub fn new(name: impl Into<String>) -> Result<Self, NetworkError> {
        let name = name.into();
        validate_token(&name)?;
        Ok(TensorId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for TensorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A primitive network relation. The covariant set is never empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tensor {
    id: TensorId,
    covariant: BTreeSet<VertexId>,
    contravariant: BTreeSet<VertexId>,
}

impl Tensor {
    pub fn new(
        id: TensorId,
        covariant: BTreeSet<VertexId>,
        contravariant: BTreeSet<VertexId>,
    ) -> Result<Self, NetworkError> {
        if covariant.is_empty() {
            return Err(NetworkError::EmptyCovariant(id));
        }
        Ok(Tensor {
            id,
            covariant,
            contravariant,
        })
    }

    /// The trivial tensor at `v`: covariant and contravariant both `{v}`.
    pub fn trivial(id: TensorId, v: VertexId) -> Self {
        let set: BTreeSet<VertexId> = [v].into_iter().collect();
        Tensor {
            id,
            covariant: set.clone(),
            contravariant: set,
        }
    }

    pub fn id(&self) -> &TensorId {
        &self.id
    }

    /// The covariant index set.
    pub fn covariant(&self) -> &BTreeSet<VertexId> {
        &self.covariant
    }

    /// The contravariant index set; empty for correlation tensors.
    pub fn contravariant(&self) -> &BTreeSet<VertexId> {
        &self.contravariant
    }

    /// The full index set: covariant union contravariant. Never empty.
    pub fn index_set(&self) -> BTreeSet<VertexId> {
        self.covariant.union(&self.contravariant).cloned().collect()
    }

    /// True when covariant = contravariant = a single vertex.
    pub fn is_trivial(&self) -> bool {
        self.covariant.len() == 1 && self.covariant == self.contravariant
    }

    /// True when the contravariant set is empty (an undirected relation).
    pub fn is_correlation(&self) -> bool {
        self.contravariant.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NetworkKind {
    General,
    Directed,
}

impl fmt::Display for NetworkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetworkKind::General => f.write_str("general"),
            NetworkKind::Directed => f.write_str("directed"),
        }
    }
}

/// A finite network: a vertex set plus a set of tensors over it.
///
/// Directed networks only admit tensors of arity (1, 1). A declared (1, 1)
/// tensor whose covariant and contravariant sets coincide is the trivial
/// tensor at that vertex; it is not an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    kind: NetworkKind,
    vertices: BTreeSet<VertexId>,
    tensors: BTreeMap<TensorId, Tensor>,
}

impl Network {
    pub fn new(kind: NetworkKind) -> Self {
        Network {
            kind,
            vertices: BTreeSet::new(),
            tensors: BTreeMap::new(),
        }
    }

    pub fn kind(&self) -> NetworkKind {
        self.kind
    }

    pub fn add_vertex(&mut self, v: VertexId) -> Result<(), NetworkError> {
        if !self.vertices.insert(v.clone()) {
            return Err(NetworkError::DuplicateVertex(v));
        }
        Ok(())
    }

    pub fn add_tensor(&mut self, t: Tensor) -> Result<(), NetworkError> {
        if self.tensors.contains_key(&t.id) {
            return Err(NetworkError::DuplicateTensor(t.id));
        }
        for v in t.covariant.iter().chain(t.contravariant.iter()) {
            if !self.vertices.contains(v) {
                return Err(NetworkError::UnknownVertex {
                    tensor: t.id.clone(),
                    vertex: v.clone(),
                });
            }
        }
        match self.kind {
            NetworkKind::General => {
                if t.is_trivial() {
                    return Err(NetworkError::TrivialInGeneral(t.id));
                }
            }
            NetworkKind::Directed => {
                if t.covariant.len() != 1 || t.contravariant.len() != 1 {
                    return Err(NetworkError::WrongArity {
                        tensor: t.id.clone(),
                        cov: t.covariant.len(),
                        contra: t.contravariant.len(),
                    });
                }
            }
        }
        self.tensors.insert(t.id.clone(), t);
        Ok(())
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn tensor(&self, id: &TensorId) -> Option<&Tensor> {
        self.tensors.get(id)
    }

    pub fn tensors(&self) -> impl Iterator<Item = &Tensor> {
        self.tensors.values()
    }

    pub fn tensor_ids(&self) -> impl Iterator<Item = &TensorId> {
        self.tensors.keys()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn tensor_count(&self) -> usize {
        self.tensors.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn vid(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    pub(crate) fn tid(s: &str) -> TensorId {
        TensorId::new(s).unwrap()
    }

    fn vset(names: &[&str]) -> BTreeSet<VertexId> {
        names.iter().map(|s| vid(s)).collect()
    }

    #[test]
    fn covariant_set_is_read_back() {
        let t = Tensor::new(tid("t"), vset(&["i", "j"]), vset(&[])).unwrap();
        assert_eq!(*t.covariant(), vset(&["i", "j"]));
        assert!(t.is_correlation());
    }

    #[test]
    fn trivial_tensor_has_singleton_index_sets() {
        let t = Tensor::trivial(tid("t"), vid("v"));
        assert_eq!(*t.covariant(), vset(&["v"]));
        assert_eq!(*t.contravariant(), vset(&["v"]));
        assert_eq!(t.index_set(), vset(&["v"]));
        assert!(t.is_trivial());
    }

    #[test]
    fn contravariant_set_is_read_back() {
        let t = Tensor::new(tid("t"), vset(&["i"]), vset(&["k"])).unwrap();
        assert_eq!(*t.contravariant(), vset(&["k"]));
    }

    #[test]
    fn index_set_is_the_union() {
        let t = Tensor::new(tid("t"), vset(&["i1", "j1"]), vset(&["k1"])).unwrap();
        assert_eq!(t.index_set(), vset(&["i1", "j1", "k1"]));

        let loop_t = Tensor::new(tid("u"), vset(&["i"]), vset(&["i"])).unwrap();
        assert_eq!(loop_t.index_set(), vset(&["i"]));

        let pair = Tensor::new(tid("w"), vset(&["1"]), vset(&["2"])).unwrap();
        assert_eq!(pair.index_set(), vset(&["1", "2"]));
    }

    #[test]
    fn index_set_contains_both_parts() {
        let t = Tensor::new(tid("t"), vset(&["a", "b"]), vset(&["c"])).unwrap();
        let idx = t.index_set();
        assert!(t.covariant().is_subset(&idx));
        assert!(t.contravariant().is_subset(&idx));
    }

    #[test]
    fn empty_covariant_is_rejected() {
        let err = Tensor::new(tid("t"), BTreeSet::new(), vset(&["a"])).unwrap_err();
        assert!(matches!(err, NetworkError::EmptyCovariant(_)));
    }

    #[test]
    fn tokens_reject_whitespace_commas_and_empty() {
        assert!(VertexId::new("").is_err());
        assert!(VertexId::new("a b").is_err());
        assert!(VertexId::new("a,b").is_err());
        assert!(TensorId::new("t\t1").is_err());
        assert!(VertexId::new("ok-token_1").is_ok());
    }

    #[test]
    fn general_network_rejects_trivial_tensor() {
        let mut n = Network::new(NetworkKind::General);
        n.add_vertex(vid("v")).unwrap();
        let err = n.add_tensor(Tensor::trivial(tid("t"), vid("v"))).unwrap_err();
        assert!(matches!(err, NetworkError::TrivialInGeneral(_)));
    }

    #[test]
    fn directed_network_requires_arity_one_one() {
        let mut n = Network::new(NetworkKind::Directed);
        for v in ["a", "b", "c"] {
            n.add_vertex(vid(v)).unwrap();
        }
        let bad = Tensor::new(tid("t"), vset(&["a", "b"]), vset(&["c"])).unwrap();
        assert!(matches!(
            n.add_tensor(bad),
            Err(NetworkError::WrongArity { .. })
        ));
        let corr = Tensor::new(tid("t"), vset(&["a"]), vset(&[])).unwrap();
        assert!(matches!(
            n.add_tensor(corr),
            Err(NetworkError::WrongArity { .. })
        ));
        let edge = Tensor::new(tid("e"), vset(&["a"]), vset(&["b"])).unwrap();
        n.add_tensor(edge).unwrap();
        // The trivial shape is admitted in directed networks.
        n.add_tensor(Tensor::trivial(tid("u"), vid("c"))).unwrap();
    }

    #[test]
    fn unknown_vertex_and_duplicates_are_rejected() {
        let mut n = Network::new(NetworkKind::General);
        n.add_vertex(vid("a")).unwrap();
        assert!(matches!(
            n.add_vertex(vid("a")),
            Err(NetworkError::DuplicateVertex(_))
        ));
        let t = Tensor::new(tid("t"), vset(&["zzz"]), vset(&[])).unwrap();
        assert!(matches!(
            n.add_tensor(t),
            Err(NetworkError::UnknownVertex { .. })
        ));
        let ok = Tensor::new(tid("t"), vset(&["a"]), vset(&[])).unwrap();
        n.add_tensor(ok.clone()).unwrap();
        assert!(matches!(
            n.add_tensor(ok),
            Err(NetworkError::DuplicateTensor(_))
        ));
    }
}
