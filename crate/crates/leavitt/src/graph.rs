//! Finite directed graphs with range and source maps.
//!
//! Conventions follow the edge-shift literature: a path `μ = μ₁μ₂⋯` satisfies
//! `s(μᵢ) = r(μᵢ₊₁)`, so paths extend at their *source* end, and `vE¹` denotes
//! the edges with range `v`. A graph has *no sources* when every vertex
//! receives at least one edge; all library operations assume validated,
//! row-finite graphs without sources.

use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Index of a vertex in a [`Graph`]. Indices are assigned in lexicographic
/// order of the vertex names, so derived orderings agree with name order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

/// Index of an edge in a [`Graph`], lexicographic in the edge names.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub u32);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("vertex `{0}` receives no edge")]
    SourceVertex(String),
    #[error("graph has no vertices")]
    Empty,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A finite directed graph `(E⁰, E¹, r, s)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    range: Vec<VertexId>,
    source: Vec<VertexId>,
    /// `incoming[v]` is `vE¹ = r⁻¹(v)`, sorted.
    incoming: Vec<Vec<EdgeId>>,
    vertex_index: BTreeMap<String, VertexId>,
    edge_index: BTreeMap<String, EdgeId>,
}

impl Graph {
    /// Builds a graph from vertex names and `(edge, range, source)` triples.
    ///
    /// Ids are checked for uniqueness and endpoints for existence; the
    /// no-sources condition is *not* imposed here — see [`Graph::validate`].
    pub fn new(
        vertices: &[&str],
        edges: &[(&str, &str, &str)],
    ) -> Result<Graph, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut vertex_names: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        vertex_names.sort();
        let mut vertex_index = BTreeMap::new();
        for (i, name) in vertex_names.iter().enumerate() {
            if vertex_index.insert(name.clone(), VertexId(i as u32)).is_some() {
                return Err(GraphError::DuplicateId(name.clone()));
            }
        }
        let mut named: Vec<(String, String, String)> = edges
            .iter()
            .map(|(e, r, s)| (e.to_string(), r.to_string(), s.to_string()))
            .collect();
        named.sort();
        let mut edge_names = Vec::with_capacity(named.len());
        let mut range = Vec::with_capacity(named.len());
        let mut source = Vec::with_capacity(named.len());
        let mut edge_index = BTreeMap::new();
        for (i, (e, r, s)) in named.iter().enumerate() {
            if edge_index.insert(e.clone(), EdgeId(i as u32)).is_some() {
                return Err(GraphError::DuplicateId(e.clone()));
            }
            let rv = *vertex_index
                .get(r)
                .ok_or_else(|| GraphError::UnknownVertex(r.clone()))?;
            let sv = *vertex_index
                .get(s)
                .ok_or_else(|| GraphError::UnknownVertex(s.clone()))?;
            edge_names.push(e.clone());
            range.push(rv);
            source.push(sv);
        }
        let mut incoming = vec![Vec::new(); vertex_names.len()];
        for (i, rv) in range.iter().enumerate() {
            incoming[rv.0 as usize].push(EdgeId(i as u32));
        }
        Ok(Graph {
            vertex_names,
            edge_names,
            range,
            source,
            incoming,
            vertex_index,
            edge_index,
        })
    }

    /// Checks the no-sources condition: every vertex receives at least one
    /// edge. Row-finiteness is automatic for finite graphs.
    pub fn validate(&self) -> Result<(), GraphError> {
        for (v, inc) in self.incoming.iter().enumerate() {
            if inc.is_empty() {
                return Err(GraphError::SourceVertex(self.vertex_names[v].clone()));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edge_names.len() as u32).map(EdgeId)
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.range[e.0 as usize]
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.source[e.0 as usize]
    }

    /// The edges `vE¹` received by `v`, in id order.
    pub fn incoming(&self, v: VertexId) -> &[EdgeId] {
        &self.incoming[v.0 as usize]
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.0 as usize]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edge_names[e.0 as usize]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edge_index.get(name).copied()
    }

    /// Parses the line-oriented text format:
    ///
    /// ```text
    /// # comment
    /// vertex v
    /// edge e range=v source=v
    /// ```
    ///
    /// The result is validated (no sources).
    pub fn parse_text(input: &str) -> Result<Graph, GraphError> {
        let mut vertices: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String, String)> = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let line = idx + 1;
            let text = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let text = text.trim();
            if text.is_empty() {
                continue;
            }
            let mut parts = text.split_whitespace();
            match parts.next() {
                Some("vertex") => {
                    let id = parts.next().ok_or(GraphError::Parse {
                        line,
                        msg: "expected `vertex <id>`".into(),
                    })?;
                    if parts.next().is_some() {
                        return Err(GraphError::Parse {
                            line,
                            msg: "trailing tokens after vertex id".into(),
                        });
                    }
                    vertices.push(id.to_string());
                }
                Some("edge") => {
                    let id = parts.next().ok_or(GraphError::Parse {
                        line,
                        msg: "expected `edge <id> range=<v> source=<v>`".into(),
                    })?;
                    let mut range = None;
                    let mut source = None;
                    for tok in parts {
                        if let Some(v) = tok.strip_prefix("range=") {
                            range = Some(v.to_string());
                        } else if let Some(v) = tok.strip_prefix("source=") {
                            source = Some(v.to_string());
                        } else {
                            return Err(GraphError::Parse {
                                line,
                                msg: format!("unexpected token `{tok}`"),
                            });
                        }
                    }
                    match (range, source) {
                        (Some(r), Some(s)) => edges.push((id.to_string(), r, s)),
                        _ => {
                            return Err(GraphError::Parse {
                                line,
                                msg: "edge needs both range= and source=".into(),
                            })
                        }
                    }
                }
                Some(other) => {
                    return Err(GraphError::Parse {
                        line,
                        msg: format!("unknown record `{other}`"),
                    })
                }
                None => unreachable!(),
            }
        }
        let vrefs: Vec<&str> = vertices.iter().map(|s| s.as_str()).collect();
        let erefs: Vec<(&str, &str, &str)> = edges
            .iter()
            .map(|(e, r, s)| (e.as_str(), r.as_str(), s.as_str()))
            .collect();
        let g = Graph::new(&vrefs, &erefs)?;
        g.validate()?;
        Ok(g)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.vertices() {
            writeln!(f, "vertex {}", self.vertex_name(v))?;
        }
        for e in self.edges() {
            writeln!(
                f,
                "edge {} range={} source={}",
                self.edge_name(e),
                self.vertex_name(self.range(e)),
                self.vertex_name(self.source(e))
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_satisfies_no_sources() {
        let g = Graph::new(&["v"], &[("e", "v", "v")]).unwrap();
        assert!(g.validate().is_ok());
    }

    #[test]
    fn receiving_nothing_is_a_source() {
        // u <- v: u receives e, v receives nothing.
        let g = Graph::new(&["u", "v"], &[("e", "u", "v")]).unwrap();
        assert_eq!(g.validate(), Err(GraphError::SourceVertex("v".into())));
    }

    #[test]
    fn two_loops_ok() {
        let g = Graph::new(&["v"], &[("a", "v", "v"), ("b", "v", "v")]).unwrap();
        assert!(g.validate().is_ok());
        let v = g.vertex_by_name("v").unwrap();
        assert_eq!(g.incoming(v).len(), 2);
    }

    #[test]
    fn text_round_trip() {
        let text = "# two loops\nvertex v\nedge a range=v source=v\nedge b range=v source=v\n";
        let g = Graph::parse_text(text).unwrap();
        let again = Graph::parse_text(&g.to_string()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn text_rejects_sources() {
        let text = "vertex u\nvertex v\nedge e range=u source=v\n";
        assert!(matches!(
            Graph::parse_text(text),
            Err(GraphError::SourceVertex(_))
        ));
    }

    #[test]
    fn duplicate_ids_rejected() {
        assert!(matches!(
            Graph::new(&["v", "v"], &[]),
            Err(GraphError::DuplicateId(_))
        ));
        assert!(matches!(
            Graph::new(&["v"], &[("e", "v", "v"), ("e", "v", "v")]),
            Err(GraphError::DuplicateId(_))
        ));
    }
}
