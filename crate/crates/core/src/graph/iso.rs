//! Isomorphism search by colour refinement plus backtracking.
//!
//! Intended for small graphs (up to about 20 vertices). The search visits
//! vertices of the first graph in lexicographic order and tries candidates in
//! lexicographic order, so the returned witness is deterministic.

use std::collections::{BTreeMap, BTreeSet};

use super::{Graph, GraphError};

pub type VertexMap = BTreeMap<String, String>;

/// Stable colouring of both graphs at once, so colour ids are comparable.
fn refine(g1: &Graph, g2: &Graph) -> (BTreeMap<String, usize>, BTreeMap<String, usize>) {
    let adj1 = g1.adjacency();
    let adj2 = g2.adjacency();
    let mut c1: BTreeMap<&str, usize> = g1.degrees().into_iter().collect();
    let mut c2: BTreeMap<&str, usize> = g2.degrees().into_iter().collect();
    let classes = |c1: &BTreeMap<&str, usize>, c2: &BTreeMap<&str, usize>| {
        c1.values().chain(c2.values()).collect::<BTreeSet<_>>().len()
    };
    let mut count = classes(&c1, &c2);
    loop {
        let signature = |adj: &BTreeMap<&str, BTreeSet<&str>>, c: &BTreeMap<&str, usize>, v: &str| {
            let mut nb: Vec<usize> = adj[v].iter().map(|w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let s1: BTreeMap<&str, _> = c1.keys().map(|&v| (v, signature(&adj1, &c1, v))).collect();
        let s2: BTreeMap<&str, _> = c2.keys().map(|&v| (v, signature(&adj2, &c2, v))).collect();
        let ids: BTreeMap<_, usize> = s1
            .values()
            .chain(s2.values())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        c1 = s1.iter().map(|(&v, s)| (v, ids[s])).collect();
        c2 = s2.iter().map(|(&v, s)| (v, ids[s])).collect();
        let next = classes(&c1, &c2);
        if next == count {
            break;
        }
        count = next;
    }
    let own = |c: BTreeMap<&str, usize>| c.into_iter().map(|(v, x)| (v.to_string(), x)).collect();
    (own(c1), own(c2))
}

fn histogram(c: &BTreeMap<String, usize>) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &x in c.values() {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

/// Returns an adjacency-preserving bijection `V(g1) -> V(g2)` if one exists.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Option<VertexMap> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let (c1, c2) = refine(g1, g2);
    if histogram(&c1) != histogram(&c2) {
        return None;
    }
    let order: Vec<&str> = g1.vertices().collect();
    let targets: Vec<&str> = g2.vertices().collect();
    let adj1 = g1.adjacency();
    let adj2 = g2.adjacency();

    struct Search<'a> {
        order: &'a [&'a str],
        targets: &'a [&'a str],
        c1: &'a BTreeMap<String, usize>,
        c2: &'a BTreeMap<String, usize>,
        adj1: &'a BTreeMap<&'a str, BTreeSet<&'a str>>,
        adj2: &'a BTreeMap<&'a str, BTreeSet<&'a str>>,
        map: Vec<&'a str>,
        used: BTreeSet<&'a str>,
    }

    impl<'a> Search<'a> {
        fn run(&mut self) -> bool {
            let depth = self.map.len();
            if depth == self.order.len() {
                return true;
            }
            let v = self.order[depth];
            for &w in self.targets {
                if self.used.contains(w) || self.c1[v] != self.c2[w] {
                    continue;
                }
                let consistent = self.order[..depth]
                    .iter()
                    .zip(&self.map)
                    .all(|(&u, &x)| self.adj1[v].contains(u) == self.adj2[w].contains(x));
                if !consistent {
                    continue;
                }
                self.map.push(w);
                self.used.insert(w);
                if self.run() {
                    return true;
                }
                self.used.remove(w);
                self.map.pop();
            }
            false
        }
    }

    let mut search = Search {
        order: &order,
        targets: &targets,
        c1: &c1,
        c2: &c2,
        adj1: &adj1,
        adj2: &adj2,
        map: Vec::with_capacity(order.len()),
        used: BTreeSet::new(),
    };
    search.run().then(|| {
        order
            .iter()
            .zip(&search.map)
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    })
}

/// True iff `map` sends the edge set of `g` onto itself.
pub fn verify_automorphism(g: &Graph, map: &VertexMap) -> Result<bool, GraphError> {
    let domain: BTreeSet<&str> = map.keys().map(String::as_str).collect();
    let image: BTreeSet<&str> = map.values().map(String::as_str).collect();
    let vertices: BTreeSet<&str> = g.vertices().collect();
    if domain != vertices || image != vertices {
        return Err(GraphError::NotBijection(format!(
            "domain {:?}, image {:?}",
            domain, image
        )));
    }
    Ok(g.edges().all(|e| g.has_edge(&map[e.first()], &map[e.second()])))
}

/// Expands a partial map into a total one by fixing every unmapped vertex.
pub fn complete_map<'a>(vertices: impl IntoIterator<Item = &'a str>, partial: &VertexMap) -> VertexMap {
    vertices
        .into_iter()
        .map(|v| {
            (
                v.to_string(),
                partial.get(v).cloned().unwrap_or_else(|| v.to_string()),
            )
        })
        .collect()
}

/// Parses cycle notation such as `(c h)(e i)` into a map.
pub fn parse_cycles(text: &str) -> Result<VertexMap, GraphError> {
    let mut map = VertexMap::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| GraphError::Format(format!("bad cycle notation `{text}`")))?;
        let labels: Vec<&str> = inner.0.split_whitespace().collect();
        for (i, &v) in labels.iter().enumerate() {
            let w = labels[(i + 1) % labels.len()];
            if map.insert(v.to_string(), w.to_string()).is_some() {
                return Err(GraphError::NotBijection(format!("`{v}` appears twice")));
            }
        }
        rest = inner.1.trim_start();
    }
    Ok(map)
}
