//! Symmetries of a diagram induced by a vertex permutation.
//!
//! Once the vertex map is fixed, each edge path must land on the path of the
//! image edge read in the same direction, which pins down the arc and
//! crossing correspondence completely. What remains is to check that the
//! correspondence is bijective and carries rotation systems and over/under
//! data across.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{CrossingId, Diagram, DiagramError, Resolved};
use crate::graph::{Edge, VertexMap};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryWitness {
    pub crossing_map: BTreeMap<CrossingId, CrossingId>,
    pub arc_map: BTreeMap<String, String>,
}

impl SymmetryWitness {
    /// Cycle notation of the crossing permutation, fixed points omitted,
    /// e.g. `(1 2)(6 7)`; `()` for the identity.
    pub fn crossing_cycles(&self) -> String {
        let mut seen = BTreeSet::new();
        let mut out = String::new();
        for start in self.crossing_map.keys() {
            if seen.contains(start) || self.crossing_map[start] == *start {
                continue;
            }
            let mut cycle = vec![start.0.clone()];
            seen.insert(start.clone());
            let mut x = &self.crossing_map[start];
            while x != start {
                seen.insert(x.clone());
                cycle.push(x.0.clone());
                x = &self.crossing_map[x];
            }
            out.push('(');
            out.push_str(&cycle.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Slot correspondence `i -> f(i)` with `target[f(i)] == image(source[i])`.
fn match_rotation(
    source: &[String],
    target: &[String],
    arcs: &BTreeMap<String, String>,
    reflect: bool,
) -> Vec<Vec<usize>> {
    let n = source.len();
    if n != target.len() {
        return Vec::new();
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    (0..n)
        .map(|s| {
            (0..n)
                .map(|i| if reflect { (s + n - i) % n } else { (s + i) % n })
                .collect::<Vec<usize>>()
        })
        .filter(|f| (0..n).all(|i| arcs.get(&source[i]) == Some(&target[f[i]])))
        .collect()
}

/// Looks for a diagram symmetry extending `vertex_map`. `reflect` reverses
/// every rotation (an orientation-reversing map of the sphere) and `flip`
/// exchanges over and under at every crossing.
pub fn find_symmetry(
    d: &Diagram,
    r: &Resolved,
    vertex_map: &VertexMap,
    reflect: bool,
    flip: bool,
) -> Result<Option<SymmetryWitness>, DiagramError> {
    let labels: BTreeSet<&str> = d.vertices.keys().map(String::as_str).collect();
    let domain: BTreeSet<&str> = vertex_map.keys().map(String::as_str).collect();
    let image: BTreeSet<&str> = vertex_map.values().map(String::as_str).collect();
    if domain != labels || image != labels {
        return Err(DiagramError::VertexMap(
            "vertex map must be a bijection on the diagram's vertices".into(),
        ));
    }

    let mut arc_map: BTreeMap<String, String> = BTreeMap::new();
    let mut crossing_map: BTreeMap<CrossingId, CrossingId> = BTreeMap::new();
    for e in &d.edges {
        let (u, v) = (&vertex_map[&e.ends[0]], &vertex_map[&e.ends[1]]);
        let Some(&k) = Edge::new(u.as_str(), v.as_str()).and_then(|x| r.edge_lookup.get(&x)) else {
            return Ok(None);
        };
        let target = if d.edges[k].ends[0] == *u {
            d.edges[k].clone()
        } else {
            d.edges[k].reversed()
        };
        if target.path.len() != e.path.len() {
            return Ok(None);
        }
        for (i, (x, y)) in e.path.iter().zip(&target.path).enumerate() {
            let clash = if i % 2 == 0 {
                arc_map.insert(x.clone(), y.clone()).is_some_and(|old| old != *y)
            } else {
                crossing_map
                    .insert(CrossingId(x.clone()), CrossingId(y.clone()))
                    .is_some_and(|old| old.0 != *y)
            };
            if clash {
                return Ok(None);
            }
        }
    }
    fn injective<K, V: Ord>(m: &BTreeMap<K, V>, total: usize) -> bool {
        m.len() == total && m.values().collect::<BTreeSet<_>>().len() == total
    }
    if !injective(&arc_map, d.arc_count()) || !injective(&crossing_map, d.crossings.len()) {
        return Ok(None);
    }

    for (v, rot) in &d.vertices {
        if match_rotation(rot, &d.vertices[&vertex_map[v]], &arc_map, reflect).is_empty() {
            return Ok(None);
        }
    }
    for (x, c) in &d.crossings {
        let y = &d.crossings[&crossing_map[x]];
        let ok = match_rotation(&c.ends, &y.ends, &arc_map, reflect)
            .into_iter()
            .any(|f| {
                let over_parity = (f[c.over as usize] % 2) as u8;
                (over_parity == y.over) != flip
            });
        if !ok {
            return Ok(None);
        }
    }
    Ok(Some(SymmetryWitness {
        crossing_map,
        arc_map,
    }))
}

/// True iff [`find_symmetry`] finds a witness.
pub fn check_symmetry(
    d: &Diagram,
    vertex_map: &VertexMap,
    reflect: bool,
    flip: bool,
) -> Result<bool, DiagramError> {
    let r = d.resolve()?;
    Ok(find_symmetry(d, &r, vertex_map, reflect, flip)?.is_some())
}
