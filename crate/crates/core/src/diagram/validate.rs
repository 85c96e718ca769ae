//! Structural validation of diagrams and resolution of edge paths into
//! crossing passages.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use super::{CrossingId, Diagram, DiagramError};
use crate::graph::{Edge, Graph};
use crate::invariants::Passage;

/// One violated diagram invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Attachment {
        arc: String,
        count: usize,
    },
    EdgeEnds {
        edge: usize,
        detail: String,
    },
    PathBroken {
        edge: usize,
        position: usize,
        detail: String,
    },
    StrandThrough {
        edge: usize,
        crossing: String,
    },
    ArcUnused {
        arc: String,
    },
    ArcShared {
        arc: String,
        uses: usize,
    },
    TwoStrand {
        crossing: String,
        detail: String,
    },
    Planarity {
        nodes: usize,
        arcs: usize,
        faces: usize,
        components: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Attachment { arc, count } => {
                write!(f, "arc {arc} is attached {count} times, expected 2")
            }
            Violation::EdgeEnds { edge, detail } => write!(f, "edge #{edge}: {detail}"),
            Violation::PathBroken {
                edge,
                position,
                detail,
            } => write!(f, "edge #{edge}, path[{position}]: {detail}"),
            Violation::StrandThrough { edge, crossing } => write!(
                f,
                "edge #{edge} does not pass straight through crossing {crossing}"
            ),
            Violation::ArcUnused { arc } => write!(f, "arc {arc} lies on no edge path"),
            Violation::ArcShared { arc, uses } => write!(f, "arc {arc} is used by {uses} path positions"),
            Violation::TwoStrand { crossing, detail } => write!(f, "crossing {crossing}: {detail}"),
            Violation::Planarity {
                nodes,
                arcs,
                faces,
                components,
            } => write!(
                f,
                "not planar: V - E + F = {nodes} - {arcs} + {faces} = {}, expected {}",
                *nodes as i64 - *arcs as i64 + *faces as i64,
                2 * components
            ),
        }
    }
}

/// A validated diagram with every edge path resolved into crossing passages.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub crossing_ids: Vec<CrossingId>,
    pub over: Vec<u8>,
    /// Per edge of `Diagram::edges`, the passages from `ends[0]` to `ends[1]`.
    pub passages: Vec<Vec<Passage>>,
    /// Endpoints of each edge in path direction.
    pub ends: Vec<[String; 2]>,
    pub edge_lookup: BTreeMap<Edge, usize>,
    pub graph: Graph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Dart {
    node: usize,
    slot: usize,
}

struct Map<'a> {
    /// Vertex nodes first (sorted by label), then crossings in id order.
    rotations: Vec<&'a [String]>,
    vertex_index: BTreeMap<&'a str, usize>,
    crossing_index: BTreeMap<&'a str, usize>,
    occurrences: BTreeMap<&'a str, Vec<Dart>>,
}

impl<'a> Map<'a> {
    fn new(d: &'a Diagram) -> Self {
        let mut rotations: Vec<&[String]> = d.vertices.values().map(Vec::as_slice).collect();
        rotations.extend(d.crossings.values().map(|c| c.ends.as_slice()));
        let vertex_index = d
            .vertices
            .keys()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let nv = d.vertices.len();
        let crossing_index = d
            .crossings
            .keys()
            .enumerate()
            .map(|(i, c)| (c.0.as_str(), nv + i))
            .collect();
        let mut occurrences: BTreeMap<&str, Vec<Dart>> = BTreeMap::new();
        for (node, rot) in rotations.iter().enumerate() {
            for (slot, a) in rot.iter().enumerate() {
                occurrences.entry(a).or_default().push(Dart { node, slot });
            }
        }
        Map {
            rotations,
            vertex_index,
            crossing_index,
            occurrences,
        }
    }

    fn partner(&self, d: Dart) -> Option<Dart> {
        let arc = self.rotations[d.node][d.slot].as_str();
        match self.occurrences[arc].as_slice() {
            [x, y] if *x == d => Some(*y),
            [x, y] if *y == d => Some(*x),
            _ => None,
        }
    }

    /// Orbits of "cross the arc, then step counterclockwise", per map component.
    fn euler(&self) -> (usize, usize, usize, usize) {
        let n = self.rotations.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut arcs = 0;
        for occ in self.occurrences.values() {
            if let [x, y] = occ.as_slice() {
                arcs += 1;
                let (a, b) = (find(&mut parent, x.node), find(&mut parent, y.node));
                parent[a] = b;
            }
        }
        let roots: BTreeSet<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        let mut seen = BTreeSet::new();
        let mut faces = 0;
        for (node, rot) in self.rotations.iter().enumerate() {
            for slot in 0..rot.len() {
                let start = Dart { node, slot };
                if seen.contains(&start) {
                    continue;
                }
                faces += 1;
                let mut d = start;
                while seen.insert(d) {
                    let p = self.partner(d).expect("attachments checked");
                    d = Dart {
                        node: p.node,
                        slot: (p.slot + 1) % self.rotations[p.node].len(),
                    };
                }
            }
        }
        // An isolated node bounds one face of its own.
        faces += self.rotations.iter().filter(|r| r.is_empty()).count();
        (n, arcs, faces, roots.len())
    }
}

impl Diagram {
    /// Every violated invariant; empty iff the diagram is valid.
    pub fn validate(&self) -> Vec<Violation> {
        self.check().err().unwrap_or_default()
    }

    pub fn resolve(&self) -> Result<Resolved, DiagramError> {
        self.check().map_err(DiagramError::Invalid)
    }

    pub fn underlying_graph(&self) -> Result<Graph, DiagramError> {
        Ok(self.resolve()?.graph)
    }

    fn check(&self) -> Result<Resolved, Vec<Violation>> {
        let map = Map::new(self);
        let mut report = Vec::new();
        let mut attached_ok = true;
        for (arc, occ) in &map.occurrences {
            if occ.len() != 2 {
                attached_ok = false;
                report.push(Violation::Attachment {
                    arc: arc.to_string(),
                    count: occ.len(),
                });
            }
        }

        let nv = self.vertices.len();
        let mut uses: BTreeMap<&str, usize> = map.occurrences.keys().map(|a| (*a, 0)).collect();
        let mut passages = Vec::with_capacity(self.edges.len());
        let mut per_crossing: Vec<Vec<(usize, u8)>> = vec![Vec::new(); self.crossings.len()];
        let mut edge_lookup = BTreeMap::new();
        let mut graph_edges = Vec::new();

        for (k, e) in self.edges.iter().enumerate() {
            for a in e.arcs() {
                if let Some(u) = uses.get_mut(a) {
                    *u += 1;
                }
            }
            let ends = [&e.ends[0], &e.ends[1]].map(|v| map.vertex_index.get(v.as_str()).copied());
            let [Some(start), Some(end)] = ends else {
                report.push(Violation::EdgeEnds {
                    edge: k,
                    detail: "endpoint is not a vertex".into(),
                });
                passages.push(Vec::new());
                continue;
            };
            match Edge::new(e.ends[0].as_str(), e.ends[1].as_str()) {
                None => report.push(Violation::EdgeEnds {
                    edge: k,
                    detail: format!("loop at {}", e.ends[0]),
                }),
                Some(edge) => {
                    if let Some(prev) = edge_lookup.insert(edge.clone(), k) {
                        report.push(Violation::EdgeEnds {
                            edge: k,
                            detail: format!("duplicates edge #{prev} ({edge})"),
                        });
                    } else {
                        graph_edges.push((e.ends[0].clone(), e.ends[1].clone()));
                    }
                }
            }
            let walked = walk(&map, e, k, start, end, nv);
            match walked {
                Ok(ps) => {
                    for p in &ps {
                        per_crossing[p.crossing].push((k, p.entry_slot));
                    }
                    passages.push(ps);
                }
                Err(v) => {
                    report.push(v);
                    passages.push(Vec::new());
                }
            }
        }

        for (arc, n) in &uses {
            match n {
                0 => report.push(Violation::ArcUnused { arc: arc.to_string() }),
                1 => {}
                _ => report.push(Violation::ArcShared {
                    arc: arc.to_string(),
                    uses: *n,
                }),
            }
        }

        for (id, ps) in self.crossings.keys().zip(&per_crossing) {
            let parities: BTreeSet<u8> = ps.iter().map(|(_, s)| s % 2).collect();
            if ps.len() != 2 || parities.len() != 2 {
                report.push(Violation::TwoStrand {
                    crossing: id.0.clone(),
                    detail: format!(
                        "needs two passages through opposite slot pairs, found {}",
                        ps.len()
                    ),
                });
            }
        }

        if attached_ok {
            let (nodes, arcs, faces, components) = map.euler();
            if nodes as i64 - arcs as i64 + faces as i64 != 2 * components as i64 {
                report.push(Violation::Planarity {
                    nodes,
                    arcs,
                    faces,
                    components,
                });
            }
        }

        if !report.is_empty() {
            return Err(report);
        }
        let graph = Graph::new(self.vertices.keys().cloned(), graph_edges).expect("edge ends were checked");
        Ok(Resolved {
            crossing_ids: self.crossings.keys().cloned().collect(),
            over: self.crossings.values().map(|c| c.over).collect(),
            passages,
            ends: self.edges.iter().map(|e| e.ends.clone()).collect(),
            edge_lookup,
            graph,
        })
    }
}

/// Follows one edge path, returning its passages in path order.
fn walk(
    map: &Map<'_>,
    e: &super::EdgePath,
    k: usize,
    start: usize,
    end: usize,
    nv: usize,
) -> Result<Vec<Passage>, Violation> {
    let broken = |position: usize, detail: String| Violation::PathBroken {
        edge: k,
        position,
        detail,
    };
    let Some(first) = e.path.first().map(String::as_str) else {
        return Err(broken(0, "empty path".into()));
    };
    let at_start: Vec<Dart> = map
        .occurrences
        .get(first)
        .map(|o| o.iter().copied().filter(|d| d.node == start).collect())
        .unwrap_or_default();
    let [mut depart] = at_start.as_slice() else {
        return Err(broken(
            0,
            format!("arc {first} must leave {} exactly once", e.ends[0]),
        ));
    };
    let mut out = Vec::new();
    let mut i = 0;
    loop {
        let arc = e.path[i].as_str();
        let arrive = map
            .partner(depart)
            .ok_or_else(|| broken(i, format!("arc {arc} is not attached twice")))?;
        if i + 1 == e.path.len() {
            if arrive.node != end {
                return Err(broken(i, format!("arc {arc} does not reach {}", e.ends[1])));
            }
            return Ok(out);
        }
        let crossing = e.path[i + 1].as_str();
        let node = *map
            .crossing_index
            .get(crossing)
            .ok_or_else(|| broken(i + 1, format!("unknown crossing {crossing}")))?;
        if arrive.node != node {
            return Err(broken(i, format!("arc {arc} does not reach crossing {crossing}")));
        }
        let exit = (arrive.slot + 2) % 4;
        if map.rotations[node][exit] != e.path[i + 2] {
            return Err(Violation::StrandThrough {
                edge: k,
                crossing: crossing.to_string(),
            });
        }
        out.push(Passage {
            crossing: node - nv,
            entry_slot: arrive.slot as u8,
        });
        depart = Dart { node, slot: exit };
        i += 2;
    }
}
