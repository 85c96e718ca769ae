//! Finite simple graphs with string-labelled vertices.
//!
//! Every operation is pure: it borrows its input and returns a fresh
//! [`Graph`]. Vertices and edges live in ordered sets so that iteration and
//! serialization are lexicographic and byte-stable.

mod iso;
mod moves;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use iso::{complete_map, is_isomorphic, parse_cycles, verify_automorphism, VertexMap};
pub use moves::{apply_script, construct_g7, g7_script, k7, Move, MoveScript, ScriptRun};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("loop at vertex `{0}` is not allowed in a simple graph")]
    Loop(String),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("triangle {0}{1}{2} is absent: missing edge {3}")]
    TriangleAbsent(String, String, String, Edge),
    #[error("label `{0}` is already used in the graph")]
    LabelClash(String),
    #[error("vertex `{vertex}` has degree {degree}, Y-delta needs exactly 3")]
    DegreeNotThree { vertex: String, degree: usize },
    #[error("edge {0} is absent")]
    EdgeAbsent(Edge),
    #[error("vertex map is not a bijection on the vertex set: {0}")]
    NotBijection(String),
    #[error("step {index}: {source}")]
    Script {
        index: usize,
        #[source]
        source: Box<GraphError>,
    },
    #[error("malformed graph file: {0}")]
    Format(String),
}

/// An unordered vertex pair, stored with the smaller label first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(String, String);

impl Edge {
    /// Builds the normalized pair. Returns `None` for a loop.
    pub fn new(a: impl Into<String>, b: impl Into<String>) -> Option<Edge> {
        let (a, b) = (a.into(), b.into());
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge(a, b)),
            std::cmp::Ordering::Greater => Some(Edge(b, a)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn first(&self) -> &str {
        &self.0
    }

    pub fn second(&self) -> &str {
        &self.1
    }

    pub fn contains(&self, v: &str) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`, if `v` is an endpoint.
    pub fn other(&self, v: &str) -> Option<&str> {
        if self.0 == v {
            Some(&self.1)
        } else if self.1 == v {
            Some(&self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: BTreeSet<String>,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn empty() -> Graph {
        Graph::default()
    }

    /// Builds a graph, rejecting loops, duplicate edges and dangling endpoints.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Graph, GraphError>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        let mut g = Graph::empty();
        for v in vertices {
            let v = v.into();
            if !g.vertices.insert(v.clone()) {
                return Err(GraphError::DuplicateLabel(v));
            }
        }
        for (a, b) in edges {
            let (a, b) = (a.into(), b.into());
            for v in [&a, &b] {
                if !g.vertices.contains(v) {
                    return Err(GraphError::UnknownVertex(v.clone()));
                }
            }
            let e = Edge::new(a.clone(), b).ok_or(GraphError::Loop(a))?;
            if g.edges.contains(&e) {
                return Err(GraphError::DuplicateEdge(e));
            }
            g.edges.insert(e);
        }
        Ok(g)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> + '_ {
        self.vertices.iter().map(String::as_str)
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        Edge::new(a, b).is_some_and(|e| self.edges.contains(&e))
    }

    /// Neighbors of `v` in lexicographic order.
    pub fn neighbors<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.edges.iter().filter_map(move |e| e.other(v))
    }

    pub fn degree(&self, v: &str) -> usize {
        self.neighbors(v).count()
    }

    pub fn degrees(&self) -> BTreeMap<&str, usize> {
        let mut deg: BTreeMap<&str, usize> = self.vertices().map(|v| (v, 0)).collect();
        for e in &self.edges {
            *deg.get_mut(e.first()).unwrap() += 1;
            *deg.get_mut(e.second()).unwrap() += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> BTreeMap<&str, BTreeSet<&str>> {
        let mut adj: BTreeMap<&str, BTreeSet<&str>> = self.vertices().map(|v| (v, BTreeSet::new())).collect();
        for e in &self.edges {
            adj.get_mut(e.first()).unwrap().insert(e.second());
            adj.get_mut(e.second()).unwrap().insert(e.first());
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let Some(start) = self.vertices().next() else {
            return true;
        };
        let adj = self.adjacency();
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// The graph with every vertex renamed through `map`; unmapped labels stay.
    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<Graph, GraphError> {
        let name = |v: &str| map.get(v).cloned().unwrap_or_else(|| v.to_string());
        Graph::new(
            self.vertices().map(name),
            self.edges().map(|e| (name(e.first()), name(e.second()))),
        )
    }

    pub(crate) fn insert_vertex(&mut self, v: String) -> bool {
        self.vertices.insert(v)
    }

    pub(crate) fn insert_edge(&mut self, e: Edge) -> bool {
        self.edges.insert(e)
    }

    pub(crate) fn remove_edge(&mut self, e: &Edge) -> bool {
        self.edges.remove(e)
    }

    pub(crate) fn remove_vertex(&mut self, v: &str) {
        self.vertices.remove(v);
        self.edges.retain(|e| !e.contains(v));
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&GraphFile::from(self)).expect("graph serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        let file: GraphFile = serde_json::from_str(text).map_err(|e| GraphError::Format(e.to_string()))?;
        Graph::try_from(file)
    }
}

/// The complete graph on the given labels.
pub fn complete_graph<S: AsRef<str>>(labels: &[S]) -> Result<Graph, GraphError> {
    let mut g = Graph::empty();
    for l in labels {
        if !g.insert_vertex(l.as_ref().to_string()) {
            return Err(GraphError::DuplicateLabel(l.as_ref().to_string()));
        }
    }
    let vs: Vec<String> = g.vertices.iter().cloned().collect();
    for (i, a) in vs.iter().enumerate() {
        for b in &vs[i + 1..] {
            g.insert_edge(Edge::new(a.as_str(), b.as_str()).unwrap());
        }
    }
    Ok(g)
}

/// On-disk form: `{"vertices": [...], "edges": [[a, b], ...]}`, everything sorted.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile {
            vertices: g.vertices.iter().cloned().collect(),
            edges: g.edges.iter().map(|e| [e.0.clone(), e.1.clone()]).collect(),
        }
    }
}

impl TryFrom<GraphFile> for Graph {
    type Error = GraphError;

    fn try_from(file: GraphFile) -> Result<Self, Self::Error> {
        Graph::new(file.vertices, file.edges.into_iter().map(|[a, b]| (a, b)))
    }
}
