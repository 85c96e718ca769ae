//! Oriented planar-diagram codes of knots and links.

use std::collections::BTreeMap;

use super::InvariantError;

/// One crossing of a [`ComponentPd`].
///
/// `segments` lists the four incident segment labels counterclockwise. The two
/// strands pass through slots {0,2} and {1,3}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdCrossing {
    pub id: String,
    pub segments: [usize; 4],
    /// 0: the strand through slots {0,2} is over; 1: the strand through {1,3}.
    pub over: u8,
    /// Entry slot of each strand: `entry[0]` is 0 or 2, `entry[1]` is 1 or 3.
    pub entry: [u8; 2],
    /// Component index of each strand, indexed like `entry`.
    pub component: [usize; 2],
}

impl PdCrossing {
    fn exit(&self, strand: usize) -> u8 {
        (self.entry[strand] + 2) % 4
    }

    /// +1 or -1 under the usual right-hand rule.
    pub fn sign(&self) -> i64 {
        let over = self.over as usize;
        let exit_over = self.exit(over);
        let exit_under = self.exit(1 - over);
        if exit_under == (exit_over + 1) % 4 {
            1
        } else {
            -1
        }
    }

    /// Slot pairs joined by the A-smoothing: every over slot with its
    /// clockwise neighbour, so the two regions swept by turning the over
    /// strand counterclockwise merge.
    pub fn a_pairs(&self) -> [(usize, usize); 2] {
        if self.over == 0 {
            [(1, 2), (3, 0)]
        } else {
            [(0, 1), (2, 3)]
        }
    }

    pub fn b_pairs(&self) -> [(usize, usize); 2] {
        if self.over == 0 {
            [(0, 1), (2, 3)]
        } else {
            [(1, 2), (3, 0)]
        }
    }

    pub fn is_mixed(&self) -> bool {
        self.component[0] != self.component[1]
    }
}

/// A knot or link diagram: crossings plus the number of closed components.
/// Components that meet no crossing are counted in `crossingless`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPd {
    pub crossings: Vec<PdCrossing>,
    pub components: usize,
    pub crossingless: usize,
}

/// One pass of a component through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Passage {
    pub crossing: usize,
    pub entry_slot: u8,
}

impl ComponentPd {
    pub fn unknot() -> Self {
        ComponentPd {
            crossings: Vec::new(),
            components: 1,
            crossingless: 1,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Builds a diagram from per-component traversals.
    ///
    /// `crossings` gives `(id, over)` for every crossing; each must be passed
    /// exactly twice, once through each slot pair. Segment labels are
    /// assigned in traversal order.
    pub fn from_traversals(
        crossings: &[(String, u8)],
        traversals: &[Vec<Passage>],
    ) -> Result<Self, InvariantError> {
        let mut built: Vec<Option<PdCrossing>> = vec![None; crossings.len()];
        let mut seen = vec![[false; 2]; crossings.len()];
        let mut next_label = 0;
        let mut crossingless = 0;
        for (comp, passes) in traversals.iter().enumerate() {
            if passes.is_empty() {
                crossingless += 1;
                continue;
            }
            let base = next_label;
            let m = passes.len();
            next_label += m;
            for (t, p) in passes.iter().enumerate() {
                let &(ref id, over) = crossings
                    .get(p.crossing)
                    .ok_or_else(|| InvariantError::InvalidPd(format!("no crossing {}", p.crossing)))?;
                if p.entry_slot > 3 || over > 1 {
                    return Err(InvariantError::InvalidPd(format!("bad slot data at {id}")));
                }
                let strand = (p.entry_slot % 2) as usize;
                if std::mem::replace(&mut seen[p.crossing][strand], true) {
                    return Err(InvariantError::InvalidPd(format!(
                        "crossing {id} passed twice through the same strand"
                    )));
                }
                let cr = built[p.crossing].get_or_insert_with(|| PdCrossing {
                    id: id.clone(),
                    segments: [usize::MAX; 4],
                    over,
                    entry: [0, 1],
                    component: [0, 0],
                });
                cr.segments[p.entry_slot as usize] = base + t;
                cr.segments[((p.entry_slot + 2) % 4) as usize] = base + (t + 1) % m;
                cr.entry[strand] = p.entry_slot;
                cr.component[strand] = comp;
            }
        }
        let crossings = built
            .into_iter()
            .zip(crossings)
            .map(|(c, (id, _))| {
                c.ok_or_else(|| InvariantError::InvalidPd(format!("crossing {id} never passed")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(c) = crossings.iter().zip(&seen).find(|(_, s)| !(s[0] && s[1])) {
            return Err(InvariantError::InvalidPd(format!(
                "crossing {} passed by only one strand",
                c.0.id
            )));
        }
        let pd = ComponentPd {
            crossings,
            components: traversals.len(),
            crossingless,
        };
        pd.check()?;
        Ok(pd)
    }

    /// Builds an oriented diagram from `X[i,j,k,l]` codes: labels listed
    /// counterclockwise starting at the incoming under-strand. Over-strand
    /// directions are inferred by following each component.
    pub fn from_x_codes(codes: &[[usize; 4]]) -> Result<Self, InvariantError> {
        // (crossing, slot) occurrences per label
        let mut occ: BTreeMap<usize, Vec<(usize, u8)>> = BTreeMap::new();
        for (c, code) in codes.iter().enumerate() {
            for (s, &l) in code.iter().enumerate() {
                occ.entry(l).or_default().push((c, s as u8));
            }
        }
        if let Some((l, _)) = occ.iter().find(|(_, v)| v.len() != 2) {
            return Err(InvariantError::InvalidPd(format!("label {l} must occur twice")));
        }
        let partner = |c: usize, s: u8| -> (usize, u8) {
            let l = codes[c][s as usize];
            let v = &occ[&l];
            if v[0] == (c, s) {
                v[1]
            } else {
                v[0]
            }
        };
        let mut visited = vec![[false; 2]; codes.len()];
        let mut traversals = Vec::new();
        // Seed with under-strands (entry slot 0), then any remaining strand.
        let seeds = (0..codes.len())
            .map(|c| (c, 0u8))
            .chain((0..codes.len()).map(|c| (c, 1u8)));
        for (c0, s0) in seeds {
            if visited[c0][(s0 % 2) as usize] {
                continue;
            }
            let mut passes = Vec::new();
            let (mut c, mut s) = (c0, s0);
            while !visited[c][(s % 2) as usize] {
                visited[c][(s % 2) as usize] = true;
                passes.push(Passage {
                    crossing: c,
                    entry_slot: s,
                });
                (c, s) = partner(c, (s + 2) % 4);
            }
            if (c, s) != (c0, s0) {
                return Err(InvariantError::InvalidPd("inconsistent orientation".into()));
            }
            traversals.push(passes);
        }
        let crossings: Vec<(String, u8)> = (0..codes.len()).map(|c| ((c + 1).to_string(), 1)).collect();
        Self::from_traversals(&crossings, &traversals)
    }

    /// Every segment label occurs exactly twice and strand data is coherent.
    pub fn check(&self) -> Result<(), InvariantError> {
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        for c in &self.crossings {
            if c.over > 1 || c.entry[0] % 2 != 0 || c.entry[1] % 2 != 1 {
                return Err(InvariantError::InvalidPd(format!("bad strand data at {}", c.id)));
            }
            if c.component.iter().any(|&k| k >= self.components) {
                return Err(InvariantError::InvalidPd(format!("bad component at {}", c.id)));
            }
            for &l in &c.segments {
                *count.entry(l).or_insert(0) += 1;
            }
        }
        if let Some((l, n)) = count.iter().find(|(_, &n)| n != 2) {
            return Err(InvariantError::InvalidPd(format!("segment {l} occurs {n} times")));
        }
        Ok(())
    }

    /// Over/under swapped at every crossing.
    pub fn mirror(&self) -> Self {
        let mut m = self.clone();
        for c in &mut m.crossings {
            c.over ^= 1;
        }
        m
    }

    /// The same diagram with component `k` traversed backwards.
    pub fn reverse_component(&self, k: usize) -> Self {
        let mut r = self.clone();
        for c in &mut r.crossings {
            for strand in 0..2 {
                if c.component[strand] == k {
                    c.entry[strand] = (c.entry[strand] + 2) % 4;
                }
            }
        }
        r
    }

    /// Exchanges the labels of components 0 and 1.
    pub fn swap_components(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.crossings {
            for k in &mut c.component {
                *k = match *k {
                    0 => 1,
                    1 => 0,
                    other => other,
                };
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_codes_orient_a_trefoil() {
        let pd = ComponentPd::from_x_codes(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        assert_eq!(pd.components, 1);
        assert_eq!(pd.crossing_count(), 3);
        let signs: Vec<i64> = pd.crossings.iter().map(PdCrossing::sign).collect();
        assert!(signs.iter().all(|&s| s == signs[0]));
    }

    #[test]
    fn x_codes_find_two_components() {
        let hopf = ComponentPd::from_x_codes(&[[4, 1, 3, 2], [2, 3, 1, 4]]).unwrap();
        assert_eq!(hopf.components, 2);
        assert!(hopf.crossings.iter().all(PdCrossing::is_mixed));
    }

    #[test]
    fn rejects_bad_labels() {
        assert!(ComponentPd::from_x_codes(&[[1, 1, 2, 3]]).is_err());
    }

    #[test]
    fn traversal_must_cover_both_strands() {
        let xs = vec![("1".to_string(), 0u8)];
        let once = vec![vec![Passage {
            crossing: 0,
            entry_slot: 0,
        }]];
        assert!(ComponentPd::from_traversals(&xs, &once).is_err());
        let same_strand = vec![vec![
            Passage {
                crossing: 0,
                entry_slot: 0,
            },
            Passage {
                crossing: 0,
                entry_slot: 2,
            },
        ]];
        assert!(ComponentPd::from_traversals(&xs, &same_strand).is_err());
    }

    #[test]
    fn mirror_flips_signs() {
        let pd = ComponentPd::from_x_codes(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        for (a, b) in pd.crossings.iter().zip(&pd.mirror().crossings) {
            assert_eq!(a.sign(), -b.sign());
        }
    }
}
