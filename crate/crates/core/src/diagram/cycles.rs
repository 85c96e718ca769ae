//! Simple cycles of an abstract graph.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{Edge, Graph};

/// A simple cycle in canonical form: the smallest vertex first, then the
/// direction whose second vertex is smaller.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle(Vec<String>);

impl Cycle {
    /// Canonicalizes a cyclic vertex sequence. Returns `None` if it has fewer
    /// than three vertices or repeats one.
    pub fn new<S: AsRef<str>>(vertices: &[S]) -> Option<Cycle> {
        let vs: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let n = vs.len();
        if n < 3 || vs.iter().collect::<BTreeSet<_>>().len() != n {
            return None;
        }
        let start = (0..n).min_by(|&i, &j| vs[i].cmp(&vs[j])).unwrap();
        let forward: Vec<String> = (0..n).map(|i| vs[(start + i) % n].clone()).collect();
        let backward: Vec<String> = (0..n).map(|i| vs[(start + n - i) % n].clone()).collect();
        Some(Cycle(if forward[1] <= backward[1] {
            forward
        } else {
            backward
        }))
    }

    pub fn vertices(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Consecutive vertex pairs in traversal order, closing pair included.
    pub fn steps(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (self.0[i].as_str(), self.0[(i + 1) % n].as_str()))
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.steps()
            .map(|(a, b)| Edge::new(a, b).expect("distinct vertices"))
    }

    pub fn is_in(&self, g: &Graph) -> bool {
        self.steps().all(|(a, b)| g.has_edge(a, b))
    }

    pub fn is_disjoint(&self, other: &Cycle) -> bool {
        let mine: BTreeSet<&String> = self.0.iter().collect();
        other.0.iter().all(|v| !mine.contains(v))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join("-"))
    }
}

impl Serialize for Cycle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Every simple cycle of `g` exactly once, sorted by canonical form.
///
/// Each cycle is found from its smallest vertex `s`, extending paths through
/// vertices greater than `s` only, and kept in one direction.
pub fn enumerate_cycles(g: &Graph) -> Vec<Cycle> {
    let adj = g.adjacency();
    let mut out = Vec::new();
    for &s in adj.keys() {
        let mut path = vec![s];
        let mut on_path = BTreeSet::from([s]);
        extend(&adj, s, &mut path, &mut on_path, &mut out);
    }
    out.sort();
    out
}

fn extend<'a>(
    adj: &BTreeMap<&'a str, BTreeSet<&'a str>>,
    s: &'a str,
    path: &mut Vec<&'a str>,
    on_path: &mut BTreeSet<&'a str>,
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().unwrap();
    for &w in &adj[last] {
        if w == s && path.len() >= 3 && path[1] < last {
            out.push(Cycle(path.iter().map(|v| v.to_string()).collect()));
        }
        if w > s && !on_path.contains(w) {
            path.push(w);
            on_path.insert(w);
            extend(adj, s, path, on_path, out);
            on_path.remove(w);
            path.pop();
        }
    }
}

/// All unordered pairs of vertex-disjoint cycles, in canonical cycle order.
pub fn disjoint_cycle_pairs(g: &Graph) -> Vec<(Cycle, Cycle)> {
    let cycles = enumerate_cycles(g);
    let mut out = Vec::new();
    for (i, a) in cycles.iter().enumerate() {
        for b in &cycles[i + 1..] {
            if a.is_disjoint(b) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}
