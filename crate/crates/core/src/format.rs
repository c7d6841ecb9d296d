//! The on-disk network format.
//!
//! UTF-8, line oriented. `#` starts a comment line; blank lines are ignored.
//!
//! ```text
//! network <general|directed>
//! vertex <name>
//! tensor <id> cov <v1,v2,...> contra <w1,...|->
//! edge <id> <src> <dst>          # directed networks only; sugar for a (1,1) tensor
//! ```
//!
//! The header must come first, and tensors may only reference vertices that
//! were declared on an earlier line. `-` denotes the empty contravariant set.
//!
//! Serialization is canonical: vertices sorted lexicographically, tensors
//! sorted by id, index sets sorted, always spelled as `tensor` lines. Parsing
//! a canonical file and re-serializing reproduces it byte for byte.

use std::collections::BTreeSet;

use crate::network::{Network, NetworkError, NetworkKind, Tensor, TensorId, VertexId};

impl Network {
    /// Parse the line-oriented network format.
    pub fn parse(text: &str) -> Result<Network, NetworkError> {
        let mut net: Option<Network> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut words = line.split_whitespace();
            let keyword = words.next().expect("non-empty line has a first word");
            let at = |e: NetworkError| NetworkError::Parse {
                line: line_no,
                message: e.to_string(),
            };
            let syntax = |message: String| NetworkError::Parse {
                line: line_no,
                message,
            };
            match (keyword, &mut net) {
                ("network", slot @ None) => {
                    let kind = match words.next() {
                        Some("general") => NetworkKind::General,
                        Some("directed") => NetworkKind::Directed,
                        other => {
                            return Err(syntax(format!(
                                "expected `network general` or `network directed`, got {:?}",
                                other.unwrap_or("")
                            )))
                        }
                    };
                    if words.next().is_some() {
                        return Err(syntax("trailing tokens after network header".into()));
                    }
                    *slot = Some(Network::new(kind));
                }
                ("network", Some(_)) => {
                    return Err(syntax("duplicate network header".into()));
                }
                (_, None) => return Err(NetworkError::MissingHeader),
                ("vertex", Some(net)) => {
                    let name = words
                        .next()
                        .ok_or_else(|| syntax("vertex line needs a name".into()))?;
                    if words.next().is_some() {
                        return Err(syntax("trailing tokens after vertex name".into()));
                    }
                    net.add_vertex(VertexId::new(name).map_err(at)?).map_err(at)?;
                }
                ("tensor", Some(net)) => {
                    let id = words
                        .next()
                        .ok_or_else(|| syntax("tensor line needs an id".into()))?;
                    if words.next() != Some("cov") {
                        return Err(syntax("expected `cov` after tensor id".into()));
                    }
                    let cov = words
                        .next()
                        .ok_or_else(|| syntax("missing covariant vertex list".into()))?;
                    if words.next() != Some("contra") {
                        return Err(syntax("expected `contra` after covariant list".into()));
                    }
                    let contra = words
                        .next()
                        .ok_or_else(|| syntax("missing contravariant vertex list".into()))?;
                    if words.next().is_some() {
                        return Err(syntax("trailing tokens after contravariant list".into()));
                    }
                    let id = TensorId::new(id).map_err(at)?;
                    let cov = parse_vertex_list(cov).map_err(at)?;
                    let contra = parse_vertex_list(contra).map_err(at)?;
                    let tensor = Tensor::new(id, cov, contra).map_err(at)?;
                    net.add_tensor(tensor).map_err(at)?;
                }
                ("edge", Some(net)) => {
                    if net.kind() != NetworkKind::Directed {
                        return Err(syntax(
                            "edge lines are only valid in directed networks".into(),
                        ));
                    }
                    let mut field = |what: &str| {
                        words
                            .next()
                            .map(str::to_string)
                            .ok_or_else(|| syntax(format!("edge line needs {what}")))
                    };
                    let id = field("an id")?;
                    let src = field("a source vertex")?;
                    let dst = field("a destination vertex")?;
                    if words.next().is_some() {
                        return Err(syntax("trailing tokens after edge destination".into()));
                    }
                    let id = TensorId::new(id).map_err(at)?;
                    let cov = [VertexId::new(src).map_err(at)?].into_iter().collect();
                    let contra = [VertexId::new(dst).map_err(at)?].into_iter().collect();
                    let tensor = Tensor::new(id, cov, contra).map_err(at)?;
                    net.add_tensor(tensor).map_err(at)?;
                }
                (other, Some(_)) => {
                    return Err(syntax(format!("unknown directive {other:?}")));
                }
            }
        }
        net.ok_or(NetworkError::MissingHeader)
    }

    /// Canonical serialization; see the module docs for the guarantees.
    pub fn canonical_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("network {}\n", self.kind()));
        for v in self.vertices() {
            out.push_str(&format!("vertex {v}\n"));
        }
        for t in self.tensors() {
            out.push_str(&format!(
                "tensor {} cov {} contra {}\n",
                t.id(),
                join_vertices(t.covariant()),
                join_vertices(t.contravariant()),
            ));
        }
        out
    }
}

fn parse_vertex_list(field: &str) -> Result<BTreeSet<VertexId>, NetworkError> {
    if field == "-" {
        return Ok(BTreeSet::new());
    }
    field.split(',').map(VertexId::new).collect()
}

fn join_vertices(set: &BTreeSet<VertexId>) -> String {
    if set.is_empty() {
        return "-".to_string();
    }
    set.iter()
        .map(VertexId::as_str)
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Four correlation tensors whose shared-vertex pattern is the star
    /// t1-t2, t2-t3, t2-t4 and nothing else.
    pub(crate) const STAR4: &str = "\
network general
vertex a
vertex b
vertex c
vertex d
vertex e
tensor t1 cov a,b contra -
tensor t2 cov b,c,d contra -
tensor t3 cov c,e contra -
tensor t4 cov d contra -
";

    #[test]
    fn parses_the_star_fixture() {
        let n = Network::parse(STAR4).unwrap();
        assert_eq!(n.kind(), NetworkKind::General);
        assert_eq!(n.vertex_count(), 5);
        assert_eq!(n.tensor_count(), 4);
    }

    #[test]
    fn the_star_fixture_is_canonical() {
        let n = Network::parse(STAR4).unwrap();
        assert_eq!(n.canonical_string(), STAR4);
    }

    #[test]
    fn empty_tensor_section_is_a_valid_network() {
        let n = Network::parse("network general\nvertex a\n").unwrap();
        assert_eq!(n.tensor_count(), 0);
        assert_eq!(n.canonical_string(), "network general\nvertex a\n");
    }

    #[test]
    fn unknown_vertex_reports_the_line() {
        let text = "network general\nvertex a\ntensor t1 cov a,zz contra -\n";
        let err = Network::parse(text).unwrap_err();
        match err {
            NetworkError::Parse { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("unknown vertex"), "{message}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_tensor_id_reports_the_line() {
        let text = "network general\nvertex a\nvertex b\ntensor t cov a contra -\ntensor t cov b contra -\n";
        match Network::parse(text).unwrap_err() {
            NetworkError::Parse { line, message } => {
                assert_eq!(line, 5);
                assert!(message.contains("duplicate tensor"), "{message}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn empty_input_is_missing_header() {
        assert_eq!(Network::parse("").unwrap_err(), NetworkError::MissingHeader);
        assert_eq!(
            Network::parse("# only a comment\n").unwrap_err(),
            NetworkError::MissingHeader
        );
        assert_eq!(
            Network::parse("vertex a\n").unwrap_err(),
            NetworkError::MissingHeader
        );
    }

    #[test]
    fn edge_sugar_expands_to_a_tensor() {
        let n = Network::parse("network directed\nvertex a\nvertex b\nedge e a b\n").unwrap();
        let t = n.tensor(&TensorId::new("e").unwrap()).unwrap();
        assert_eq!(t.covariant().len(), 1);
        assert_eq!(t.contravariant().len(), 1);
        assert_eq!(
            n.canonical_string(),
            "network directed\nvertex a\nvertex b\ntensor e cov a contra b\n"
        );
    }

    #[test]
    fn edge_sugar_is_rejected_in_general_networks() {
        let err = Network::parse("network general\nvertex a\nvertex b\nedge e a b\n").unwrap_err();
        assert!(matches!(err, NetworkError::Parse { line: 4, .. }));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# header\n\nnetwork general\n# vertices\nvertex a\n\n";
        let n = Network::parse(text).unwrap();
        assert_eq!(n.vertex_count(), 1);
    }

    #[test]
    fn directed_arity_violation_reports_the_line() {
        let text = "network directed\nvertex a\nvertex b\ntensor t cov a,b contra -\n";
        let err = Network::parse(text).unwrap_err();
        match err {
            NetworkError::Parse { line, message } => {
                assert_eq!(line, 4);
                assert!(message.contains("arity"), "{message}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn reparse_of_canonical_form_is_identity() {
        let messy = "network general\nvertex z\nvertex a\ntensor t2 cov z contra -\ntensor t1 cov a,z contra -\n";
        let n = Network::parse(messy).unwrap();
        let canon = n.canonical_string();
        let again = Network::parse(&canon).unwrap();
        assert_eq!(n, again);
        assert_eq!(again.canonical_string(), canon);
    }
}
