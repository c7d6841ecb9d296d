//! Directed networks as path algebras: the extended chain addition over
//! trivial tensors, edges and formal edge inverses; normal forms pq* of the
//! graph inverse semigroup; products, idempotents and inverses; the vertex
//! reachability order; and Cuntz-Krieger relation generation.
//!
//! Every element is kept in the normal form pq* (two directed paths with a
//! common range) or the zero element; words reduce eagerly left to right.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::network::{Network, NetworkKind, TensorId, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("network is not directed")]
    NotDirected,
    #[error("unknown edge {0}")]
    UnknownEdge(TensorId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("edge {1} does not start where {0} ends")]
    NotComposable(TensorId, TensorId),
    #[error("a directed path needs at least one edge")]
    EmptyPath,
    #[error("paths end at different vertices: {0} and {1}")]
    RangeMismatch(VertexId, VertexId),
    #[error("word token {token:?}: {reason}")]
    BadToken { token: String, reason: String },
    #[error("empty word")]
    EmptyWord,
}

/// A directed edge: a tensor with covariant set {source} and contravariant
/// set {range}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DirectedEdge {
    id: TensorId,
    source: VertexId,
    range: VertexId,
}

impl DirectedEdge {
    pub fn id(&self) -> &TensorId {
        &self.id
    }

    pub fn source(&self) -> &VertexId {
        &self.source
    }

    pub fn range(&self) -> &VertexId {
        &self.range
    }
}

/// Edge-and-vertex view of a directed network. Declared tensors with the
/// trivial shape are the trivial tensors of their vertex, not edges, so
/// they carry no edge here.
#[derive(Debug, Clone)]
pub struct DirectedGraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<TensorId, DirectedEdge>,
    out: BTreeMap<VertexId, Vec<TensorId>>,
}

impl DirectedGraph {
    pub fn from_network(net: &Network) -> Result<Self, PathError> {
        if net.kind() != NetworkKind::Directed {
            return Err(PathError::NotDirected);
        }
        let vertices = net.vertices().clone();
        let mut edges = BTreeMap::new();
        let mut out: BTreeMap<VertexId, Vec<TensorId>> = BTreeMap::new();
        for t in net.tensors() {
            if t.is_trivial() {
                continue;
            }
            let source = t.covariant().iter().next().expect("arity (1,1)").clone();
            let range = t
                .contravariant()
                .iter()
                .next()
                .expect("arity (1,1)")
                .clone();
            out.entry(source.clone()).or_default().push(t.id().clone());
            edges.insert(
                t.id().clone(),
                DirectedEdge {
                    id: t.id().clone(),
                    source,
                    range,
                },
            );
        }
        Ok(DirectedGraph {
            vertices,
            edges,
            out,
        })
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edge(&self, id: &TensorId) -> Option<&DirectedEdge> {
        self.edges.get(id)
    }

    pub fn edges(&self) -> impl Iterator<Item = &DirectedEdge> {
        self.edges.values()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges with the given source, sorted by id.
    pub fn out_edges(&self, v: &VertexId) -> &[TensorId] {
        self.out.get(v).map_or(&[], Vec::as_slice)
    }

    fn require_edge(&self, id: &TensorId) -> Result<&DirectedEdge, PathError> {
        self.edge(id).ok_or_else(|| PathError::UnknownEdge(id.clone()))
    }

    fn require_vertex(&self, v: &VertexId) -> Result<(), PathError> {
        if !self.vertices.contains(v) {
            return Err(PathError::UnknownVertex(v.clone()));
        }
        Ok(())
    }
}

/// A generator of the semigroup: the trivial tensor of a vertex, an edge,
/// or the formal inverse of an edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Generator {
    Trivial(VertexId),
    Edge(TensorId),
    Star(TensorId),
}

impl Generator {
    /// The covariant index: where the generator starts.
    pub fn source<'g>(&'g self, g: &'g DirectedGraph) -> Result<&'g VertexId, PathError> {
        match self {
            Generator::Trivial(v) => {
                g.require_vertex(v)?;
                Ok(v)
            }
            Generator::Edge(e) => Ok(g.require_edge(e)?.source()),
            Generator::Star(e) => Ok(g.require_edge(e)?.range()),
        }
    }

    /// The contravariant index: where the generator ends.
    pub fn range<'g>(&'g self, g: &'g DirectedGraph) -> Result<&'g VertexId, PathError> {
        match self {
            Generator::Trivial(v) => {
                g.require_vertex(v)?;
                Ok(v)
            }
            Generator::Edge(e) => Ok(g.require_edge(e)?.range()),
            Generator::Star(e) => Ok(g.require_edge(e)?.source()),
        }
    }
}

/// A directed path: an edge sequence with matching ranges and sources, or
/// the trivial path at a vertex (length 0).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedPath {
    edges: Vec<TensorId>,
    src: VertexId,
    dst: VertexId,
}

impl DirectedPath {
    pub fn trivial(v: VertexId) -> Self {
        DirectedPath {
            edges: Vec::new(),
            src: v.clone(),
            dst: v,
        }
    }

    pub fn from_edges(g: &DirectedGraph, ids: &[TensorId]) -> Result<Self, PathError> {
        let first = ids.first().ok_or(PathError::EmptyPath)?;
        let mut prev = g.require_edge(first)?;
        let src = prev.source().clone();
        for id in &ids[1..] {
            let next = g.require_edge(id)?;
            if prev.range() != next.source() {
                return Err(PathError::NotComposable(prev.id.clone(), id.clone()));
            }
            prev = next;
        }
        Ok(DirectedPath {
            edges: ids.to_vec(),
            src,
            dst: prev.range().clone(),
        })
    }

    pub fn source(&self) -> &VertexId {
        &self.src
    }

    pub fn range(&self) -> &VertexId {
        &self.dst
    }

    pub fn edges(&self) -> &[TensorId] {
        &self.edges
    }

    /// Path length; 0 for a trivial path, which is not "empty".
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    /// Concatenation; defined when `self` ends where `other` starts.
    pub fn concat(&self, other: &DirectedPath) -> Option<DirectedPath> {
        if self.dst != other.src {
            return None;
        }
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().cloned());
        Some(DirectedPath {
            edges,
            src: self.src.clone(),
            dst: other.dst.clone(),
        })
    }

    /// If `self = prefix · z`, the remainder z. A trivial prefix matches
    /// any path with the same source.
    pub fn strip_prefix(&self, prefix: &DirectedPath) -> Option<DirectedPath> {
        if self.src != prefix.src || self.edges.len() < prefix.edges.len() {
            return None;
        }
        if self.edges[..prefix.edges.len()] != prefix.edges[..] {
            return None;
        }
        let rest = self.edges[prefix.edges.len()..].to_vec();
        Some(DirectedPath {
            edges: rest,
            src: prefix.dst.clone(),
            dst: self.dst.clone(),
        })
    }
}

fn path_word(p: &DirectedPath) -> String {
    if p.is_trivial() {
        return format!("1@{}", p.src);
    }
    p.edges
        .iter()
        .map(TensorId::as_str)
        .collect::<Vec<_>>()
        .join(" ")
}

fn starred_word(q: &DirectedPath) -> String {
    q.edges
        .iter()
        .rev()
        .map(|e| format!("{e}*"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// An element of the graph inverse semigroup in normal form: zero, or pq*
/// for directed paths p, q with a common range.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NormalForm {
    Zero,
    Pair { p: DirectedPath, q: DirectedPath },
}

impl NormalForm {
    pub fn pair(p: DirectedPath, q: DirectedPath) -> Result<NormalForm, PathError> {
        if p.range() != q.range() {
            return Err(PathError::RangeMismatch(p.dst, q.dst));
        }
        Ok(NormalForm::Pair { p, q })
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, NormalForm::Zero)
    }

    /// The normal form of a single generator.
    pub fn from_generator(g: &DirectedGraph, gen: &Generator) -> Result<NormalForm, PathError> {
        match gen {
            Generator::Trivial(v) => {
                g.require_vertex(v)?;
                Ok(NormalForm::Pair {
                    p: DirectedPath::trivial(v.clone()),
                    q: DirectedPath::trivial(v.clone()),
                })
            }
            Generator::Edge(e) => {
                let edge = g.require_edge(e)?;
                Ok(NormalForm::Pair {
                    p: DirectedPath::from_edges(g, std::slice::from_ref(e))?,
                    q: DirectedPath::trivial(edge.range().clone()),
                })
            }
            Generator::Star(e) => {
                let edge = g.require_edge(e)?;
                Ok(NormalForm::Pair {
                    p: DirectedPath::trivial(edge.range().clone()),
                    q: DirectedPath::from_edges(g, std::slice::from_ref(e))?,
                })
            }
        }
    }

    /// The semigroup product:
    /// pq* · xy* = p z y*  when x = q z,
    ///           = p (y w)* when q = x w,
    ///           = 0 otherwise.
    pub fn product(&self, other: &NormalForm) -> NormalForm {
        let (NormalForm::Pair { p, q }, NormalForm::Pair { p: x, q: y }) = (self, other) else {
            return NormalForm::Zero;
        };
        if let Some(z) = x.strip_prefix(q) {
            let left = p.concat(&z).expect("z starts at the range of q = range of p");
            return NormalForm::Pair {
                p: left,
                q: y.clone(),
            };
        }
        if let Some(w) = q.strip_prefix(x) {
            let right = y.concat(&w).expect("w starts at the range of x = range of y");
            return NormalForm::Pair {
                p: p.clone(),
                q: right,
            };
        }
        NormalForm::Zero
    }

    /// Idempotents are zero and the forms pp*.
    pub fn is_idempotent(&self) -> bool {
        match self {
            NormalForm::Zero => true,
            NormalForm::Pair { p, q } => p == q,
        }
    }

    /// The unique inverse: qp* for pq*, zero for zero.
    pub fn inverse(&self) -> NormalForm {
        match self {
            NormalForm::Zero => NormalForm::Zero,
            NormalForm::Pair { p, q } => NormalForm::Pair {
                p: q.clone(),
                q: p.clone(),
            },
        }
    }

    pub fn paths(&self) -> Option<(&DirectedPath, &DirectedPath)> {
        match self {
            NormalForm::Zero => None,
            NormalForm::Pair { p, q } => Some((p, q)),
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::Zero => f.write_str("0"),
            NormalForm::Pair { p, q } => {
                if q.is_trivial() {
                    f.write_str(&path_word(p))
                } else {
                    write!(f, "{} | {}", path_word(p), starred_word(q))
                }
            }
        }
    }
}

/// The extended chain addition of two generators. The clauses, in order:
/// trivial tensors absorb on either side when the indices meet, co-oriented
/// generators concatenate into a 2-line chain, e* against its own edge
/// cancels to the trivial tensor of the range, and everything else is zero.
pub fn bar_add(
    g: &DirectedGraph,
    a: &Generator,
    b: &Generator,
) -> Result<NormalForm, PathError> {
    let a_range = a.range(g)?.clone();
    let b_source = b.source(g)?.clone();
    if let Generator::Trivial(_) = b {
        if a_range == b_source {
            return NormalForm::from_generator(g, a);
        }
        return Ok(NormalForm::Zero);
    }
    if let Generator::Trivial(_) = a {
        if a_range == b_source {
            return NormalForm::from_generator(g, b);
        }
        return Ok(NormalForm::Zero);
    }
    match (a, b) {
        (Generator::Edge(e1), Generator::Edge(e2)) if a_range == b_source => {
            let p = DirectedPath::from_edges(g, &[e1.clone(), e2.clone()])?;
            let q = DirectedPath::trivial(p.range().clone());
            Ok(NormalForm::Pair { p, q })
        }
        (Generator::Star(e1), Generator::Star(e2)) if a_range == b_source => {
            // e1* e2* = (e2 e1)*.
            let q = DirectedPath::from_edges(g, &[e2.clone(), e1.clone()])?;
            let p = DirectedPath::trivial(q.range().clone());
            Ok(NormalForm::Pair { p, q })
        }
        (Generator::Edge(e1), Generator::Star(e2)) if a_range == b_source => {
            let p = DirectedPath::from_edges(g, std::slice::from_ref(e1))?;
            let q = DirectedPath::from_edges(g, std::slice::from_ref(e2))?;
            Ok(NormalForm::Pair { p, q })
        }
        (Generator::Star(e1), Generator::Edge(e2)) if e1 == e2 => {
            let range = g.require_edge(e1)?.range().clone();
            Ok(NormalForm::Pair {
                p: DirectedPath::trivial(range.clone()),
                q: DirectedPath::trivial(range),
            })
        }
        _ => Ok(NormalForm::Zero),
    }
}

/// u ≤ v iff some directed path runs from v to u. Reflexive through the
/// trivial path.
pub fn vertex_leq(g: &DirectedGraph, u: &VertexId, v: &VertexId) -> bool {
    if u == v {
        return true;
    }
    let mut seen: BTreeSet<&VertexId> = BTreeSet::new();
    let mut frontier = vec![v];
    seen.insert(v);
    while let Some(at) = frontier.pop() {
        for id in g.out_edges(at) {
            let next = g.edge(id).expect("out map holds real edges").range();
            if next == u {
                return true;
            }
            if seen.insert(next) {
                frontier.push(next);
            }
        }
    }
    false
}

/// One CK1 relation: v = Σ ee* over the edges leaving v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ck1Relation {
    pub vertex: VertexId,
    pub out_edges: Vec<TensorId>,
}

/// One CK2 relation: ee* ≤ s(e), with the path-order check r(e) ≤ s(e)
/// recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ck2Relation {
    pub edge: TensorId,
    pub source: VertexId,
    pub order_holds: bool,
}

/// The generated Cuntz-Krieger relations of a directed network.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSet {
    pub ck1: Vec<Ck1Relation>,
    pub ck2: Vec<Ck2Relation>,
}

/// Emit CK1 for every vertex of positive out-degree and CK2 for every edge.
pub fn ck_relations(g: &DirectedGraph) -> RelationSet {
    let ck1 = g
        .vertices()
        .iter()
        .filter(|v| !g.out_edges(v).is_empty())
        .map(|v| Ck1Relation {
            vertex: v.clone(),
            out_edges: g.out_edges(v).to_vec(),
        })
        .collect();
    let ck2 = g
        .edges()
        .map(|e| Ck2Relation {
            edge: e.id().clone(),
            source: e.source().clone(),
            order_holds: vertex_leq(g, e.range(), e.source()),
        })
        .collect();
    RelationSet { ck1, ck2 }
}

/// Every generator of the semigroup: the trivial tensor of each vertex and
/// both orientations of each edge.
pub fn all_generators(g: &DirectedGraph) -> Vec<Generator> {
    let mut out: Vec<Generator> = g
        .vertices()
        .iter()
        .map(|v| Generator::Trivial(v.clone()))
        .collect();
    for e in g.edges() {
        out.push(Generator::Edge(e.id().clone()));
        out.push(Generator::Star(e.id().clone()));
    }
    out
}

/// Check every instance of the defining relations under the extended chain
/// addition:
/// (I1) s(e)e = er(e) = e, (I2) uv = 0 for u ≠ v,
/// (I3) e*f = 0 for e ≠ f, (I4) e*e = r(e).
pub fn verify_generator_relations(g: &DirectedGraph) -> Result<bool, PathError> {
    for gen in all_generators(g) {
        let nf = NormalForm::from_generator(g, &gen)?;
        let left = bar_add(g, &Generator::Trivial(gen.source(g)?.clone()), &gen)?;
        let right = bar_add(g, &gen, &Generator::Trivial(gen.range(g)?.clone()))?;
        if left != nf || right != nf {
            return Ok(false);
        }
    }
    for u in g.vertices() {
        for v in g.vertices() {
            if u != v {
                let product = bar_add(
                    g,
                    &Generator::Trivial(u.clone()),
                    &Generator::Trivial(v.clone()),
                )?;
                if !product.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    for e in g.edges() {
        for f in g.edges() {
            let product = bar_add(
                g,
                &Generator::Star(e.id().clone()),
                &Generator::Edge(f.id().clone()),
            )?;
            if e.id() == f.id() {
                let expect =
                    NormalForm::from_generator(g, &Generator::Trivial(e.range().clone()))?;
                if product != expect {
                    return Ok(false);
                }
            } else if !product.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All directed paths of length at most `max_len`, trivial paths included.
pub fn paths_up_to(g: &DirectedGraph, max_len: usize) -> Vec<DirectedPath> {
    let mut out: Vec<DirectedPath> = g
        .vertices()
        .iter()
        .map(|v| DirectedPath::trivial(v.clone()))
        .collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for path in &frontier {
            for id in g.out_edges(path.range()) {
                let edge = DirectedPath::from_edges(g, std::slice::from_ref(id)).expect("known edge");
                next.push(path.concat(&edge).expect("out edge starts at the range"));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort();
    out
}

/// All normal forms whose component paths have length at most `max_len`,
/// plus zero.
pub fn normal_forms_up_to(g: &DirectedGraph, max_len: usize) -> Vec<NormalForm> {
    let paths = paths_up_to(g, max_len);
    let mut out = vec![NormalForm::Zero];
    for p in &paths {
        for q in &paths {
            if p.range() == q.range() {
                out.push(NormalForm::Pair {
                    p: p.clone(),
                    q: q.clone(),
                });
            }
        }
    }
    out.sort();
    out
}

/// Parse a whitespace-separated generator word and reduce it eagerly left
/// to right. Tokens: `e` an edge id, `e*` its inverse, `v.` the trivial
/// path at vertex v.
pub fn parse_word(g: &DirectedGraph, text: &str) -> Result<NormalForm, PathError> {
    let mut generators = Vec::new();
    for token in text.split_whitespace() {
        let gen = if let Some(edge) = token.strip_suffix('*') {
            Generator::Star(TensorId::new(edge).map_err(|e| PathError::BadToken {
                token: token.to_string(),
                reason: e.to_string(),
            })?)
        } else if let Some(vertex) = token.strip_suffix('.') {
            Generator::Trivial(VertexId::new(vertex).map_err(|e| PathError::BadToken {
                token: token.to_string(),
                reason: e.to_string(),
            })?)
        } else {
            Generator::Edge(TensorId::new(token).map_err(|e| PathError::BadToken {
                token: token.to_string(),
                reason: e.to_string(),
            })?)
        };
        generators.push(gen);
    }
    let first = generators.first().ok_or(PathError::EmptyWord)?;
    let mut acc = NormalForm::from_generator(g, first)?;
    for gen in &generators[1..] {
        let next = NormalForm::from_generator(g, gen)?;
        acc = acc.product(&next);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vid(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    fn tid(s: &str) -> TensorId {
        TensorId::new(s).unwrap()
    }

    fn graph(text: &str) -> DirectedGraph {
        DirectedGraph::from_network(&Network::parse(text).unwrap()).unwrap()
    }

    fn single_edge() -> DirectedGraph {
        graph("network directed\nvertex a\nvertex b\nedge e a b\n")
    }

    fn two_cycle() -> DirectedGraph {
        graph("network directed\nvertex a\nvertex b\nedge e a b\nedge f b a\n")
    }

    fn branching() -> DirectedGraph {
        graph("network directed\nvertex v\nvertex a\nvertex b\nedge e v a\nedge f v b\n")
    }

    #[test]
    fn general_networks_are_rejected() {
        let net = Network::parse("network general\nvertex a\n").unwrap();
        assert_eq!(
            DirectedGraph::from_network(&net).unwrap_err(),
            PathError::NotDirected
        );
    }

    #[test]
    fn declared_trivial_tensors_are_not_edges() {
        let g = graph(
            "network directed\nvertex a\nvertex b\nedge e a b\ntensor u cov b contra b\n",
        );
        assert_eq!(g.edge_count(), 1);
        assert!(g.edge(&tid("u")).is_none());
    }

    #[test]
    fn cancellation_of_an_edge_with_its_inverse() {
        let g = single_edge();
        let nf = bar_add(&g, &Generator::Star(tid("e")), &Generator::Edge(tid("e"))).unwrap();
        assert_eq!(nf.to_string(), "1@b");
        assert!(nf.is_idempotent());
    }

    #[test]
    fn distinct_edges_annihilate_under_star() {
        let g = branching();
        let nf = bar_add(&g, &Generator::Star(tid("e")), &Generator::Edge(tid("f"))).unwrap();
        assert_eq!(nf, NormalForm::Zero);
    }

    #[test]
    fn trivial_tensor_absorbs_into_a_matching_edge() {
        let g = single_edge();
        let nf = bar_add(&g, &Generator::Trivial(vid("a")), &Generator::Edge(tid("e"))).unwrap();
        assert_eq!(
            nf,
            NormalForm::from_generator(&g, &Generator::Edge(tid("e"))).unwrap()
        );
        let mismatched =
            bar_add(&g, &Generator::Trivial(vid("b")), &Generator::Edge(tid("e"))).unwrap();
        assert_eq!(mismatched, NormalForm::Zero);
    }

    #[test]
    fn edges_concatenate_into_two_line_chains() {
        let g = two_cycle();
        let nf = bar_add(&g, &Generator::Edge(tid("e")), &Generator::Edge(tid("f"))).unwrap();
        let (p, q) = nf.paths().unwrap();
        assert_eq!(p.edges(), &[tid("e"), tid("f")]);
        assert!(q.is_trivial());
        assert_eq!(nf.to_string(), "e f");
    }

    #[test]
    fn stars_concatenate_reversed() {
        let g = two_cycle();
        // e* then f*: legs r(e)=b -> a -> b; equals (f e)*.
        let nf = bar_add(&g, &Generator::Star(tid("e")), &Generator::Star(tid("f"))).unwrap();
        let (p, q) = nf.paths().unwrap();
        assert!(p.is_trivial());
        assert_eq!(q.edges(), &[tid("f"), tid("e")]);
        assert_eq!(nf.to_string(), "1@b | e* f*");
    }

    #[test]
    fn edge_against_star_with_common_range() {
        let g = branching();
        let nf = bar_add(&g, &Generator::Edge(tid("e")), &Generator::Star(tid("e"))).unwrap();
        assert_eq!(nf.to_string(), "e | e*");
        assert!(nf.is_idempotent());
        // Different ranges: zero.
        let zero = bar_add(&g, &Generator::Edge(tid("e")), &Generator::Star(tid("f"))).unwrap();
        assert_eq!(zero, NormalForm::Zero);
    }

    #[test]
    fn bar_add_agrees_with_the_normal_form_product() {
        for g in [single_edge(), two_cycle(), branching()] {
            for a in all_generators(&g) {
                for b in all_generators(&g) {
                    let direct = bar_add(&g, &a, &b).unwrap();
                    let via_product = NormalForm::from_generator(&g, &a)
                        .unwrap()
                        .product(&NormalForm::from_generator(&g, &b).unwrap());
                    assert_eq!(direct, via_product, "{a:?} ⊕ {b:?}");
                }
            }
        }
    }

    #[test]
    fn product_cancels_a_shared_leg() {
        // (p q*) (q y*) = p y*; here pp* · p = p with trivial z.
        let g = single_edge();
        let pq = parse_word(&g, "e e*").unwrap();
        let qy = parse_word(&g, "e").unwrap();
        assert_eq!(pq.product(&qy), qy);
    }

    #[test]
    fn product_of_prefix_incomparable_legs_is_zero() {
        let g = branching();
        let a = parse_word(&g, "e e*").unwrap();
        let b = parse_word(&g, "f f*").unwrap();
        assert_eq!(a.product(&b), NormalForm::Zero);
    }

    #[test]
    fn composite_prefixes_thread_through_products() {
        // First legs extend twice over: q = e, x = e f (z1 = f),
        // y = 1@a, g = e f (z2 = e f); the result is p z1 z2 h*.
        let g = two_cycle();
        let pq = parse_word(&g, "e e*").unwrap(); // p = e, q = e
        let xy = parse_word(&g, "e f a.").unwrap(); // x = e f, y = 1@a
        let gh = parse_word(&g, "e f f*").unwrap(); // g = e f, h = f
        let left = pq.product(&xy).product(&gh);
        let right = pq.product(&xy.product(&gh));
        assert_eq!(left, right);
        let (p, q) = left.paths().unwrap();
        assert_eq!(p.edges(), &[tid("e"), tid("f"), tid("e"), tid("f")]);
        assert_eq!(q.edges(), &[tid("f")]);
    }

    #[test]
    fn idempotents_are_exactly_pp_star_and_zero() {
        let g = two_cycle();
        for nf in normal_forms_up_to(&g, 2) {
            let expect = match nf.paths() {
                None => true,
                Some((p, q)) => p == q,
            };
            assert_eq!(nf.is_idempotent(), expect);
            let squared = nf.product(&nf);
            assert_eq!(squared == nf, expect);
        }
    }

    #[test]
    fn inverse_swaps_the_legs_and_satisfies_the_inverse_laws() {
        let g = two_cycle();
        for nf in normal_forms_up_to(&g, 2) {
            let inv = nf.inverse();
            assert_eq!(nf.product(&inv).product(&nf), nf);
            assert_eq!(inv.product(&nf).product(&inv), inv);
        }
        let e = parse_word(&g, "e").unwrap();
        let e_star = parse_word(&g, "e*").unwrap();
        assert_eq!(e.inverse(), e_star);
        let idem = parse_word(&g, "e e*").unwrap();
        assert_eq!(idem.inverse(), idem);
    }

    #[test]
    fn vertex_order_is_reachability() {
        let g = branching();
        assert!(vertex_leq(&g, &vid("v"), &vid("v")));
        assert!(vertex_leq(&g, &vid("a"), &vid("v")));
        assert!(vertex_leq(&g, &vid("b"), &vid("v")));
        assert!(!vertex_leq(&g, &vid("v"), &vid("a")));
        assert!(!vertex_leq(&g, &vid("a"), &vid("b")));
    }

    #[test]
    fn ck_relations_of_a_single_edge() {
        let g = single_edge();
        let rel = ck_relations(&g);
        assert_eq!(rel.ck1.len(), 1);
        assert_eq!(rel.ck1[0].vertex, vid("a"));
        assert_eq!(rel.ck1[0].out_edges, vec![tid("e")]);
        assert_eq!(rel.ck2.len(), 1);
        assert_eq!(rel.ck2[0].edge, tid("e"));
        assert_eq!(rel.ck2[0].source, vid("a"));
        assert!(rel.ck2[0].order_holds);
    }

    #[test]
    fn sinks_emit_no_ck1() {
        let g = graph("network directed\nvertex a\nvertex b\ntensor u cov a contra a\n");
        // Only a declared trivial tensor: no edges at all.
        let rel = ck_relations(&g);
        assert!(rel.ck1.is_empty());
        assert!(rel.ck2.is_empty());
    }

    #[test]
    fn branching_vertex_lists_both_out_edges() {
        let g = branching();
        let rel = ck_relations(&g);
        assert_eq!(rel.ck1.len(), 1);
        assert_eq!(rel.ck1[0].out_edges, vec![tid("e"), tid("f")]);
        assert_eq!(rel.ck2.len(), 2);
        assert!(rel.ck2.iter().all(|r| r.order_holds));
    }

    #[test]
    fn generator_relations_hold_on_the_fixtures() {
        for g in [single_edge(), two_cycle(), branching()] {
            assert!(verify_generator_relations(&g).unwrap());
        }
    }

    #[test]
    fn word_parsing_matches_the_spelled_examples() {
        let g = single_edge();
        assert_eq!(parse_word(&g, "e* e").unwrap().to_string(), "1@b");
        assert_eq!(parse_word(&g, "e e*").unwrap().to_string(), "e | e*");
        assert_eq!(parse_word(&g, "a.").unwrap().to_string(), "1@a");
        assert_eq!(parse_word(&g, "e b.").unwrap().to_string(), "e");
        assert!(parse_word(&g, "").is_err());
        assert!(parse_word(&g, "zz").is_err());
        let two = two_cycle();
        assert_eq!(two.edge(&tid("f")).unwrap().range(), &vid("a"));
        assert_eq!(parse_word(&two, "e f").unwrap().to_string(), "e f");
        assert_eq!(parse_word(&two, "f e").unwrap().to_string(), "f e");
    }

    #[test]
    fn non_composable_word_reduces_to_zero() {
        let g = branching();
        // r(e) = a but s(f) = v.
        assert_eq!(parse_word(&g, "e f").unwrap(), NormalForm::Zero);
    }

    #[test]
    fn path_enumeration_counts() {
        let g = two_cycle();
        // Two trivial paths plus one path per start vertex and length.
        assert_eq!(paths_up_to(&g, 0).len(), 2);
        assert_eq!(paths_up_to(&g, 3).len(), 8);
        let forms = normal_forms_up_to(&g, 3);
        // Four paths end at each vertex; 2 * 16 pairs + zero.
        assert_eq!(forms.len(), 33);
    }
}
