//! Knot and link diagrams cut out of a spatial-graph diagram by one or two
//! cycles of the underlying graph.

use std::collections::BTreeSet;

use super::{CrossingId, Cycle, DiagramError, Resolved};
use crate::invariants::{ComponentPd, Passage};

impl Resolved {
    /// Passages met walking from `a` to `b` along the edge `ab`.
    fn oriented_passages(&self, a: &str, b: &str, ends0: &str) -> Option<Vec<Passage>> {
        let e = crate::graph::Edge::new(a, b)?;
        let k = *self.edge_lookup.get(&e)?;
        let ps = &self.passages[k];
        Some(if a == ends0 {
            ps.clone()
        } else {
            ps.iter()
                .rev()
                .map(|p| Passage {
                    crossing: p.crossing,
                    entry_slot: (p.entry_slot + 2) % 4,
                })
                .collect()
        })
    }

    fn check_cycles(&self, cycles: &[&Cycle]) -> Result<(), DiagramError> {
        if cycles.is_empty() || cycles.len() > 2 {
            return Err(DiagramError::Cycle(format!(
                "expected one or two cycles, got {}",
                cycles.len()
            )));
        }
        for c in cycles {
            if !c.is_in(&self.graph) {
                return Err(DiagramError::Cycle(format!("{c} is not a cycle of the diagram")));
            }
        }
        if let [a, b] = cycles {
            if !a.is_disjoint(b) {
                return Err(DiagramError::Cycle(format!("cycles {a} and {b} share a vertex")));
            }
        }
        Ok(())
    }

    /// Crossings whose two strands both lie on the selected cycles.
    pub fn retained(&self, cycles: &[&Cycle]) -> Vec<usize> {
        let mut count = vec![0u8; self.crossing_ids.len()];
        for c in cycles {
            for e in c.edges() {
                for p in &self.passages[self.edge_lookup[&e]] {
                    count[p.crossing] += 1;
                }
            }
        }
        (0..count.len()).filter(|&i| count[i] == 2).collect()
    }
}

/// Crossing ids that survive in the diagram of `cycles`, in id order.
pub fn retained_crossings(r: &Resolved, cycles: &[&Cycle]) -> Result<Vec<CrossingId>, DiagramError> {
    r.check_cycles(cycles)?;
    Ok(r.retained(cycles)
        .into_iter()
        .map(|i| r.crossing_ids[i].clone())
        .collect())
}

/// The knot (one cycle) or two-component link (two disjoint cycles) drawn by
/// the selected cycles. Crossings with a strand off the cycles are smoothed
/// away; each component is oriented along its cycle's traversal order.
pub fn extract_component_pd(r: &Resolved, cycles: &[&Cycle]) -> Result<ComponentPd, DiagramError> {
    r.check_cycles(cycles)?;
    let keep: Vec<usize> = r.retained(cycles);
    let local: std::collections::BTreeMap<usize, usize> =
        keep.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let crossings: Vec<(String, u8)> = keep
        .iter()
        .map(|&c| (r.crossing_ids[c].0.clone(), r.over[c]))
        .collect();
    let mut traversals = Vec::with_capacity(cycles.len());
    for c in cycles {
        let mut passes = Vec::new();
        for (a, b) in c.steps() {
            let e = crate::graph::Edge::new(a, b).expect("cycle vertices are distinct");
            let k = r.edge_lookup[&e];
            let ends0 = r.ends[k][0].as_str();
            for p in r.oriented_passages(a, b, ends0).expect("cycle edges exist") {
                if let Some(&i) = local.get(&p.crossing) {
                    passes.push(Passage {
                        crossing: i,
                        entry_slot: p.entry_slot,
                    });
                }
            }
        }
        traversals.push(passes);
    }
    let seen: BTreeSet<usize> = traversals.iter().flatten().map(|p| p.crossing).collect();
    debug_assert_eq!(seen.len(), keep.len());
    Ok(ComponentPd::from_traversals(&crossings, &traversals)?)
}
