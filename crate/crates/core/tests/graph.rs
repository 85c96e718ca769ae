use std::collections::{BTreeMap, BTreeSet};

use knotcert::graph::*;
use proptest::prelude::*;

const G7_EDGES: [&str; 21] = [
    "cd", "ce", "cf", "cg", "dg", "ef", "ch", "di", "ei", "fj", "gj", "dk", "fk", "el", "gl", "hi", "hj",
    "ij", "hk", "hl", "kl",
];

fn edge_names(g: &Graph) -> BTreeSet<String> {
    g.edges().map(|e| e.to_string()).collect()
}

fn sorted(s: &str) -> String {
    let mut v: Vec<char> = s.chars().collect();
    v.sort();
    v.into_iter().collect()
}

/// Replays the K7 script on a bare edge set, sharing no code with the crate.
fn replay_by_hand() -> BTreeSet<String> {
    let mut e: BTreeSet<(char, char)> = BTreeSet::new();
    let vs = "abcdefg";
    for x in vs.chars() {
        for y in vs.chars() {
            if x < y {
                e.insert((x, y));
            }
        }
    }
    let key = |x: char, y: char| if x < y { (x, y) } else { (y, x) };
    for (tri, h) in [
        ("abc", 'h'),
        ("ade", 'i'),
        ("afg", 'j'),
        ("bdf", 'k'),
        ("beg", 'l'),
    ] {
        let t: Vec<char> = tri.chars().collect();
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            assert!(e.remove(&key(t[i], t[j])), "triangle {tri} missing an edge");
        }
        for &x in &t {
            e.insert(key(x, h));
        }
    }
    for y in ['a', 'b'] {
        let nb: Vec<char> = e
            .iter()
            .filter_map(|&(p, q)| {
                if p == y {
                    Some(q)
                } else if q == y {
                    Some(p)
                } else {
                    None
                }
            })
            .collect();
        assert_eq!(nb.len(), 3);
        e.retain(|&(p, q)| p != y && q != y);
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            e.insert(key(nb[i], nb[j]));
        }
    }
    e.into_iter().map(|(p, q)| format!("{p}{q}")).collect()
}

#[test]
fn g7_matches_hand_replay_and_frozen_list() {
    let g = construct_g7();
    let frozen: BTreeSet<String> = G7_EDGES.iter().map(|s| sorted(s)).collect();
    assert_eq!(edge_names(&g), frozen);
    assert_eq!(edge_names(&g), replay_by_hand());
    assert_eq!((g.vertex_count(), g.edge_count()), (10, 21));
    for (v, d) in g.degrees() {
        assert_eq!(d, if v == "c" || v == "h" { 5 } else { 4 }, "degree of {v}");
    }
}

#[test]
fn g7_intermediates() {
    let run = apply_script(&k7(), &g7_script()).unwrap();
    assert_eq!(run.intermediates.len(), 7);
    let g5 = &run.intermediates[4];
    assert_eq!((g5.vertex_count(), g5.edge_count()), (12, 21));
    let nb = |g: &Graph, v: &str| g.neighbors(v).map(String::from).collect::<BTreeSet<_>>();
    assert_eq!(nb(g5, "a"), ["h", "i", "j"].map(String::from).into());
    assert_eq!(nb(g5, "b"), ["h", "k", "l"].map(String::from).into());
    let g6 = &run.intermediates[5];
    assert_eq!((g6.vertex_count(), g6.edge_count()), (11, 21));
    assert!(!g6.has_vertex("a"));
    for (x, y) in [("h", "i"), ("h", "j"), ("i", "j")] {
        assert!(g6.has_edge(x, y));
        assert!(!g5.has_edge(x, y));
    }
    assert_eq!(run.intermediates[6], run.result);
}

#[test]
fn script_json_round_trip_and_empty_script() {
    let s = g7_script();
    assert_eq!(MoveScript::from_json(&s.to_json()).unwrap(), s);
    let empty = MoveScript { steps: vec![] };
    assert_eq!(apply_script(&k7(), &empty).unwrap().result, k7());
}

#[test]
fn failing_step_reports_its_index() {
    let mut s = g7_script();
    s.steps.insert(2, Move::y_delta("c"));
    match apply_script(&k7(), &s) {
        Err(GraphError::Script { index, source }) => {
            assert_eq!(index, 2);
            assert!(matches!(*source, GraphError::DegreeNotThree { .. }));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn k4_y_delta_collapses_double_edges() {
    let k4 = complete_graph(&["a", "b", "c", "d"]).unwrap();
    let t = k4.y_delta("d").unwrap();
    assert_eq!(t, complete_graph(&["a", "b", "c"]).unwrap());
    assert_eq!(t.edge_count(), 3);
}

#[test]
fn y_delta_rejects_other_degrees() {
    let k5 = complete_graph(&["a", "b", "c", "d", "e"]).unwrap();
    assert!(matches!(
        k5.y_delta("a"),
        Err(GraphError::DegreeNotThree { degree: 4, .. })
    ));
    let path = Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
    assert!(matches!(
        path.y_delta("b"),
        Err(GraphError::DegreeNotThree { degree: 2, .. })
    ));
}

#[test]
fn delta_y_needs_a_triangle_and_a_fresh_label() {
    let g = Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
    let tri = ["a", "b", "c"].map(String::from);
    assert!(matches!(
        g.delta_y(&tri, "h"),
        Err(GraphError::TriangleAbsent(..))
    ));
    let k3 = complete_graph(&["a", "b", "c"]).unwrap();
    assert!(k3.delta_y(&tri, "a").is_err());
}

#[test]
fn g7_symmetries_are_automorphisms() {
    let g = construct_g7();
    let map = |s: &str| complete_map(g.vertices(), &parse_cycles(s).unwrap());
    for s in [
        "(c h)(e i)(f j)(d l)(g k)",
        "(e f)(i j)(d g)(k l)",
        "(c h)(e j)(f i)(d k)(g l)",
        "()",
    ] {
        assert!(verify_automorphism(&g, &map(s)).unwrap(), "{s}");
    }
    assert!(!verify_automorphism(&g, &map("(c d)")).unwrap());
}

#[test]
fn g7_is_not_k7() {
    assert!(is_isomorphic(&construct_g7(), &k7()).is_none());
}

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (3usize..9)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let vs = labels(n);
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((vs[i].clone(), vs[j].clone()));
                    }
                    k += 1;
                }
            }
            Graph::new(vs, edges).unwrap()
        })
}

fn triangles(g: &Graph) -> Vec<[String; 3]> {
    let vs: Vec<&str> = g.vertices().collect();
    let mut out = Vec::new();
    for (i, a) in vs.iter().enumerate() {
        for (j, b) in vs.iter().enumerate().skip(i + 1) {
            for c in &vs[j + 1..] {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    out.push([a.to_string(), b.to_string(), c.to_string()]);
                }
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn delta_y_then_y_delta_is_identity(g in random_graph(), pick in any::<prop::sample::Index>()) {
        let ts = triangles(&g);
        prop_assume!(!ts.is_empty());
        let t = &ts[pick.index(ts.len())];
        let y = g.delta_y(t, "x").unwrap();
        prop_assert_eq!(y.edge_count(), g.edge_count());
        prop_assert_eq!(y.vertex_count(), g.vertex_count() + 1);
        prop_assert_eq!(y.degree("x"), 3);
        prop_assert_eq!(y.y_delta("x").unwrap(), g);
    }

    #[test]
    fn y_delta_edge_count(g in random_graph()) {
        for v in g.vertices().filter(|&v| g.degree(v) == 3) {
            let nb: Vec<&str> = g.neighbors(v).collect();
            let present = [(0, 1), (1, 2), (0, 2)].iter().filter(|&&(i, j)| g.has_edge(nb[i], nb[j])).count();
            let h = g.y_delta(v).unwrap();
            prop_assert_eq!(h.vertex_count(), g.vertex_count() - 1);
            prop_assert_eq!(h.edge_count(), g.edge_count() - present);
        }
    }

    #[test]
    fn isomorphism_survives_relabelling(g in random_graph(), perm in Just((0..9).collect::<Vec<usize>>()).prop_shuffle()) {
        let n = g.vertex_count();
        let order: Vec<usize> = perm.into_iter().filter(|&i| i < n).collect();
        let rename: BTreeMap<String, String> =
            (0..n).map(|i| (format!("v{i}"), format!("w{}", order[i]))).collect();
        let h = g.relabel(&rename).unwrap();
        let m = is_isomorphic(&g, &h).expect("relabelled graph is isomorphic");
        for e in g.edges() {
            prop_assert!(h.has_edge(&m[e.first()], &m[e.second()]));
        }
        prop_assert!(is_isomorphic(&h, &g).is_some());
    }
}
