//! Spatial-graph diagrams as planar combinatorial maps.
//!
//! A [`Diagram`] has two kinds of nodes. Vertex nodes are the vertices of the
//! abstract graph; crossing nodes are transverse double points carrying
//! over/under data. Nodes are joined by arcs, and every node lists the arcs
//! incident to it in counterclockwise order. Each abstract edge is realized
//! by an edge path `arc, crossing, arc, ..., arc` between its two endpoints.

mod cycles;
mod extract;
mod symmetry;
mod validate;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cycles::{disjoint_cycle_pairs, enumerate_cycles, Cycle};
pub use extract::{extract_component_pd, retained_crossings};
pub use symmetry::{check_symmetry, find_symmetry, SymmetryWitness};
pub use validate::{Resolved, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{at}: arc `{arc}` is attached {count} times, expected 2")]
    Attachment { at: String, arc: String, count: usize },
    #[error("{at}: unknown {kind} `{name}`")]
    UnknownReference {
        at: String,
        kind: &'static str,
        name: String,
    },
    #[error("{at}: {message}")]
    Malformed { at: String, message: String },
    #[error("diagram is invalid: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("{0}")]
    Cycle(String),
    #[error("{0}")]
    VertexMap(String),
    #[error(transparent)]
    Invariant(#[from] crate::invariants::InvariantError),
}

/// Crossing identifier. Numeric ids order numerically, before any others.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrossingId(pub String);

impl CrossingId {
    fn key(&self) -> (u8, u64, &str) {
        match self.0.parse::<u64>() {
            Ok(n) if !self.0.starts_with('+') => (0, n, &self.0),
            _ => (1, 0, &self.0),
        }
    }
}

impl Ord for CrossingId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for CrossingId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for CrossingId {
    fn from(s: &str) -> Self {
        CrossingId(s.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Crossing {
    /// Arc ids in counterclockwise order.
    pub ends: [String; 4],
    /// 0: the strand through slots {0,2} is over; 1: through {1,3}.
    pub over: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgePath {
    pub ends: [String; 2],
    /// `arc, crossing, arc, ..., arc`, read from `ends[0]` to `ends[1]`.
    pub path: Vec<String>,
}

impl EdgePath {
    pub fn arcs(&self) -> impl Iterator<Item = &str> + '_ {
        self.path.iter().step_by(2).map(String::as_str)
    }

    pub fn crossings(&self) -> impl Iterator<Item = &str> + '_ {
        self.path.iter().skip(1).step_by(2).map(String::as_str)
    }

    /// Same edge read from the other endpoint.
    pub fn reversed(&self) -> EdgePath {
        EdgePath {
            ends: [self.ends[1].clone(), self.ends[0].clone()],
            path: self.path.iter().rev().cloned().collect(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagram {
    /// Vertex label -> counterclockwise arc list.
    pub vertices: BTreeMap<String, Vec<String>>,
    pub crossings: BTreeMap<CrossingId, Crossing>,
    pub edges: Vec<EdgePath>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    vertices: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    crossings: BTreeMap<String, Crossing>,
    #[serde(default)]
    edges: Vec<EdgePath>,
}

impl Diagram {
    /// Parses the JSON diagram format and checks that every reference
    /// resolves and every arc is attached exactly twice. Deeper structural
    /// checks belong to [`Diagram::validate`].
    pub fn parse(text: &str) -> Result<Diagram, DiagramError> {
        let wire: Wire = serde_json::from_str(text).map_err(|e| DiagramError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let mut crossings = BTreeMap::new();
        for (id, c) in wire.crossings {
            if wire.vertices.contains_key(&id) {
                return Err(DiagramError::Malformed {
                    at: format!("crossings.{id}"),
                    message: "id is also a vertex label".into(),
                });
            }
            if c.over > 1 {
                return Err(DiagramError::Malformed {
                    at: format!("crossings.{id}.over"),
                    message: format!("must be 0 or 1, got {}", c.over),
                });
            }
            crossings.insert(CrossingId(id), c);
        }
        let d = Diagram {
            vertices: wire.vertices,
            crossings,
            edges: wire.edges,
        };
        d.check_references()?;
        Ok(d)
    }

    fn check_references(&self) -> Result<(), DiagramError> {
        let mut attached: BTreeMap<&str, Vec<String>> = BTreeMap::new();
        for (v, rot) in &self.vertices {
            for (i, a) in rot.iter().enumerate() {
                attached.entry(a).or_default().push(format!("vertices.{v}[{i}]"));
            }
        }
        for (id, c) in &self.crossings {
            for (i, a) in c.ends.iter().enumerate() {
                attached
                    .entry(a)
                    .or_default()
                    .push(format!("crossings.{id}.ends[{i}]"));
            }
        }
        if let Some((arc, locs)) = attached.iter().find(|(_, l)| l.len() != 2) {
            return Err(DiagramError::Attachment {
                at: locs.last().cloned().unwrap_or_default(),
                arc: arc.to_string(),
                count: locs.len(),
            });
        }
        for (k, e) in self.edges.iter().enumerate() {
            for (i, v) in e.ends.iter().enumerate() {
                if !self.vertices.contains_key(v) {
                    return Err(DiagramError::UnknownReference {
                        at: format!("edges[{k}].ends[{i}]"),
                        kind: "vertex",
                        name: v.clone(),
                    });
                }
            }
            if e.path.len() % 2 == 0 {
                return Err(DiagramError::Malformed {
                    at: format!("edges[{k}].path"),
                    message: "path must alternate arc, crossing, ..., arc".into(),
                });
            }
            for (i, item) in e.path.iter().enumerate() {
                let (kind, known) = if i % 2 == 0 {
                    ("arc", attached.contains_key(item.as_str()))
                } else {
                    ("crossing", self.crossings.contains_key(&CrossingId(item.clone())))
                };
                if !known {
                    return Err(DiagramError::UnknownReference {
                        at: format!("edges[{k}].path[{i}]"),
                        kind,
                        name: item.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Canonical text: vertices by label, crossings by id, edges by their
    /// sorted endpoint pair, rotation lists and paths as stored.
    pub fn serialize(&self) -> String {
        use serde_json::{json, Map, Value};
        let vertices: Map<String, Value> = self
            .vertices
            .iter()
            .map(|(v, rot)| (v.clone(), json!(rot)))
            .collect();
        let crossings: Map<String, Value> = self
            .crossings
            .iter()
            .map(|(id, c)| (id.0.clone(), json!({"ends": c.ends, "over": c.over})))
            .collect();
        let mut edges: Vec<EdgePath> = self
            .edges
            .iter()
            .map(|e| {
                if e.ends[0] <= e.ends[1] {
                    e.clone()
                } else {
                    e.reversed()
                }
            })
            .collect();
        edges.sort_by(|a, b| a.ends.cmp(&b.ends));
        let edges: Vec<Value> = edges
            .iter()
            .map(|e| json!({"ends": e.ends, "path": e.path}))
            .collect();
        let mut root = Map::new();
        root.insert("vertices".into(), Value::Object(vertices));
        root.insert("crossings".into(), Value::Object(crossings));
        root.insert("edges".into(), Value::Array(edges));
        let mut out = compact_arrays(&Value::Object(root), 0);
        out.push('\n');
        out
    }

    pub fn crossing(&self, id: &str) -> Option<&Crossing> {
        self.crossings.get(&CrossingId(id.to_string()))
    }

    /// Node count, counting vertex and crossing nodes alike.
    pub fn node_count(&self) -> usize {
        self.vertices.len() + self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        (self.vertices.values().map(Vec::len).sum::<usize>() + 4 * self.crossings.len()) / 2
    }
}

/// Pretty JSON, but arrays of scalars stay on one line.
fn compact_arrays(v: &serde_json::Value, indent: usize) -> String {
    use serde_json::Value;
    let pad = "  ".repeat(indent + 1);
    let close = "  ".repeat(indent);
    match v {
        Value::Object(m) if !m.is_empty() => {
            let body: Vec<String> = m
                .iter()
                .map(|(k, x)| {
                    format!(
                        "{pad}{}: {}",
                        Value::from(k.as_str()),
                        compact_arrays(x, indent + 1)
                    )
                })
                .collect();
            format!("{{\n{}\n{close}}}", body.join(",\n"))
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            let body: Vec<String> = a
                .iter()
                .map(|x| format!("{pad}{}", compact_arrays(x, indent + 1)))
                .collect();
            format!("[\n{}\n{close}]", body.join(",\n"))
        }
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(|x| x.to_string()).collect();
            format!("[{}]", items.join(", "))
        }
        other => other.to_string(),
    }
}
