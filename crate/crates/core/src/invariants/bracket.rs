//! Kauffman bracket by state sum and by recursive skein expansion.

use std::collections::BTreeMap;

use super::pd::ComponentPd;
use super::{InvariantError, LaurentPoly};

/// `delta = -A^2 - A^-2`, the value of one extra closed loop.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

fn check_bound(pd: &ComponentPd, max_crossings: usize) -> Result<(), InvariantError> {
    if pd.crossing_count() > max_crossings {
        return Err(InvariantError::BoundExceeded {
            crossings: pd.crossing_count(),
            max: max_crossings,
        });
    }
    Ok(())
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Loop count for every state, indexed by the state bitmask (bit set = B).
fn state_loops(pd: &ComponentPd) -> impl Iterator<Item = (u32, usize)> + '_ {
    let k = pd.crossing_count();
    let index: BTreeMap<usize, usize> = pd
        .crossings
        .iter()
        .flat_map(|c| c.segments)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect();
    let segs: Vec<[usize; 4]> = pd
        .crossings
        .iter()
        .map(|c| c.segments.map(|l| index[&l]))
        .collect();
    let labels = index.len();
    (0u64..1 << k).map(move |state| {
        let mut uf = UnionFind::new(labels);
        let mut merges = 0;
        for (i, c) in pd.crossings.iter().enumerate() {
            let pairs = if state >> i & 1 == 0 {
                c.a_pairs()
            } else {
                c.b_pairs()
            };
            for (p, q) in pairs {
                if uf.union(segs[i][p], segs[i][q]) {
                    merges += 1;
                }
            }
        }
        (state.count_ones(), labels - merges + pd.crossingless)
    })
}

/// `sum over states of A^(a-b) * delta^(loops-1)`.
pub fn kauffman_bracket(pd: &ComponentPd, max_crossings: usize) -> Result<LaurentPoly, InvariantError> {
    pd.check()?;
    check_bound(pd, max_crossings)?;
    let k = pd.crossing_count() as i64;
    let mut histogram: BTreeMap<(i64, usize), u64> = BTreeMap::new();
    for (b, loops) in state_loops(pd) {
        let a_minus_b = k - 2 * b as i64;
        *histogram.entry((a_minus_b, loops)).or_insert(0) += 1;
    }
    let delta = loop_value();
    let mut powers = vec![LaurentPoly::one()];
    Ok(histogram
        .into_iter()
        .map(|((e, loops), n)| {
            while powers.len() < loops {
                let next = powers.last().unwrap() * &delta;
                powers.push(next);
            }
            &powers[loops - 1] * &LaurentPoly::monomial(n, e)
        })
        .sum())
}

/// The same bracket computed by smoothing one crossing at a time and
/// relabelling the remaining crossings, closing loops as they appear.
pub fn kauffman_bracket_skein(pd: &ComponentPd, max_crossings: usize) -> Result<LaurentPoly, InvariantError> {
    pd.check()?;
    check_bound(pd, max_crossings)?;
    let crossings: Vec<SkeinCrossing> = pd
        .crossings
        .iter()
        .map(|c| (c.segments, c.a_pairs(), c.b_pairs()))
        .collect();
    let delta = loop_value();
    Ok(skein(&crossings, pd.crossingless, &delta))
}

type SkeinCrossing = ([usize; 4], [(usize, usize); 2], [(usize, usize); 2]);

fn skein(crossings: &[SkeinCrossing], loops: usize, delta: &LaurentPoly) -> LaurentPoly {
    let Some(((segs, a, b), rest)) = crossings.split_first() else {
        return delta.pow(loops.saturating_sub(1) as u32);
    };
    let smooth = |pairs: &[(usize, usize); 2]| {
        let mut rest: Vec<SkeinCrossing> = rest.to_vec();
        let mut closed = loops;
        let mut ends = pairs.map(|(p, q)| (segs[p], segs[q]));
        for i in 0..2 {
            let (keep, gone) = ends[i];
            if keep == gone {
                closed += 1;
                continue;
            }
            for c in &mut rest {
                for l in &mut c.0 {
                    if *l == gone {
                        *l = keep;
                    }
                }
            }
            for e in &mut ends[i + 1..] {
                for l in [&mut e.0, &mut e.1] {
                    if *l == gone {
                        *l = keep;
                    }
                }
            }
        }
        skein(&rest, closed, delta)
    };
    &(&LaurentPoly::monomial(1, 1) * &smooth(a)) + &(&LaurentPoly::monomial(1, -1) * &smooth(b))
}

/// Sum of crossing signs, using each component's own orientation.
pub fn writhe(pd: &ComponentPd) -> i64 {
    pd.crossings.iter().map(|c| c.sign()).sum()
}

/// `(-A)^(-3w) <D>`; equals 1 on every diagram of the unknot.
pub fn jones_normalized(pd: &ComponentPd, max_crossings: usize) -> Result<LaurentPoly, InvariantError> {
    let bracket = kauffman_bracket(pd, max_crossings)?;
    let w = writhe(pd);
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Ok(&LaurentPoly::monomial(sign, -3 * w) * &bracket)
}
