//! Triangle-Y and Y-triangle moves, edge deletion and contraction, and move
//! scripts built from them.

use serde::{Deserialize, Serialize};

use super::{complete_graph, Edge, Graph, GraphError};

/// One step of a [`MoveScript`]. The serialized form is tagged by `op`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "camelCase", deny_unknown_fields)]
pub enum Move {
    DeltaY { triangle: [String; 3], center: String },
    YDelta { center: String },
    DeleteEdge { edge: [String; 2] },
    ContractEdge { edge: [String; 2] },
}

impl Move {
    pub fn delta_y(triangle: [&str; 3], center: &str) -> Move {
        Move::DeltaY {
            triangle: triangle.map(String::from),
            center: center.into(),
        }
    }

    pub fn y_delta(center: &str) -> Move {
        Move::YDelta {
            center: center.into(),
        }
    }

    pub fn apply(&self, g: &Graph) -> Result<Graph, GraphError> {
        match self {
            Move::DeltaY { triangle, center } => g.delta_y(triangle, center),
            Move::YDelta { center } => g.y_delta(center),
            Move::DeleteEdge { edge } => g.delete_edge(&edge[0], &edge[1]),
            Move::ContractEdge { edge } => g.contract_edge(&edge[0], &edge[1]),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoveScript {
    pub steps: Vec<Move>,
}

impl MoveScript {
    pub fn from_json(text: &str) -> Result<MoveScript, GraphError> {
        serde_json::from_str(text).map_err(|e| GraphError::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("script serializes");
        s.push('\n');
        s
    }
}

/// Result of [`apply_script`]: the final graph and every intermediate, with
/// `intermediates[i]` being the graph after step `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptRun {
    pub result: Graph,
    pub intermediates: Vec<Graph>,
}

impl Graph {
    /// Removes the triangle `xyz` and joins a fresh `center` to its corners.
    pub fn delta_y(&self, triangle: &[String; 3], center: &str) -> Result<Graph, GraphError> {
        let [x, y, z] = triangle;
        for v in triangle {
            if !self.has_vertex(v) {
                return Err(GraphError::UnknownVertex(v.clone()));
            }
        }
        if x == y || y == z || x == z {
            return Err(GraphError::DuplicateLabel(if x == y { x } else { z }.clone()));
        }
        let sides = [(x, y), (x, z), (y, z)].map(|(a, b)| Edge::new(a.as_str(), b.as_str()).unwrap());
        if let Some(missing) = sides.iter().find(|e| !self.edges.contains(*e)) {
            return Err(GraphError::TriangleAbsent(
                x.clone(),
                y.clone(),
                z.clone(),
                missing.clone(),
            ));
        }
        if self.has_vertex(center) {
            return Err(GraphError::LabelClash(center.to_string()));
        }
        let mut g = self.clone();
        for e in &sides {
            g.remove_edge(e);
        }
        g.insert_vertex(center.to_string());
        for v in triangle {
            g.insert_edge(Edge::new(v.as_str(), center).unwrap());
        }
        Ok(g)
    }

    /// Deletes a degree-3 vertex and joins its neighbors pairwise. A pair that
    /// is already adjacent keeps its single edge.
    pub fn y_delta(&self, center: &str) -> Result<Graph, GraphError> {
        if !self.has_vertex(center) {
            return Err(GraphError::UnknownVertex(center.to_string()));
        }
        let nbrs: Vec<String> = self.neighbors(center).map(String::from).collect();
        if nbrs.len() != 3 {
            return Err(GraphError::DegreeNotThree {
                vertex: center.to_string(),
                degree: nbrs.len(),
            });
        }
        let mut g = self.clone();
        g.remove_vertex(center);
        for (i, a) in nbrs.iter().enumerate() {
            for b in &nbrs[i + 1..] {
                g.insert_edge(Edge::new(a.as_str(), b.as_str()).unwrap());
            }
        }
        Ok(g)
    }

    pub fn delete_edge(&self, a: &str, b: &str) -> Result<Graph, GraphError> {
        let e = self.existing_edge(a, b)?;
        let mut g = self.clone();
        g.remove_edge(&e);
        Ok(g)
    }

    /// Merges the endpoints into the lexicographically smaller label,
    /// dropping the loop and collapsing parallel edges.
    pub fn contract_edge(&self, a: &str, b: &str) -> Result<Graph, GraphError> {
        let e = self.existing_edge(a, b)?;
        let (keep, gone) = (e.first(), e.second());
        let moved: Vec<String> = self
            .neighbors(gone)
            .filter(|&w| w != keep)
            .map(String::from)
            .collect();
        let mut g = self.clone();
        g.remove_vertex(gone);
        for w in moved {
            g.insert_edge(Edge::new(keep, w).unwrap());
        }
        Ok(g)
    }

    fn existing_edge(&self, a: &str, b: &str) -> Result<Edge, GraphError> {
        let e = Edge::new(a, b).ok_or_else(|| GraphError::Loop(a.to_string()))?;
        if self.edges.contains(&e) {
            Ok(e)
        } else {
            Err(GraphError::EdgeAbsent(e))
        }
    }
}

/// Applies `script` step by step, stopping at the first failing step.
pub fn apply_script(g: &Graph, script: &MoveScript) -> Result<ScriptRun, GraphError> {
    let mut current = g.clone();
    let mut intermediates = Vec::with_capacity(script.steps.len());
    for (index, step) in script.steps.iter().enumerate() {
        current = step.apply(&current).map_err(|source| GraphError::Script {
            index,
            source: Box::new(source),
        })?;
        intermediates.push(current.clone());
    }
    Ok(ScriptRun {
        result: current,
        intermediates,
    })
}

/// Five triangle-Y moves followed by two Y-triangle moves, starting from the
/// complete graph on `a..g`.
pub fn g7_script() -> MoveScript {
    MoveScript {
        steps: vec![
            Move::delta_y(["a", "b", "c"], "h"),
            Move::delta_y(["a", "d", "e"], "i"),
            Move::delta_y(["a", "f", "g"], "j"),
            Move::delta_y(["b", "d", "f"], "k"),
            Move::delta_y(["b", "e", "g"], "l"),
            Move::y_delta("a"),
            Move::y_delta("b"),
        ],
    }
}

pub fn k7() -> Graph {
    complete_graph(&["a", "b", "c", "d", "e", "f", "g"]).expect("distinct labels")
}

pub fn construct_g7() -> Graph {
    apply_script(&k7(), &g7_script())
        .expect("the G7 script applies to K7")
        .result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(labels: [&str; 3]) -> [String; 3] {
        labels.map(String::from)
    }

    #[test]
    fn delta_y_on_triangle_gives_claw() {
        let k3 = complete_graph(&["a", "b", "c"]).unwrap();
        let star = k3.delta_y(&tri(["a", "b", "c"]), "v").unwrap();
        let expected = Graph::new(["a", "b", "c", "v"], [("a", "v"), ("b", "v"), ("c", "v")]).unwrap();
        assert_eq!(star, expected);
    }

    #[test]
    fn delta_y_on_k7_first_move() {
        let g1 = k7().delta_y(&tri(["a", "b", "c"]), "h").unwrap();
        assert_eq!((g1.vertex_count(), g1.edge_count()), (8, 21));
        for v in ["a", "b", "c"] {
            assert_eq!(g1.degree(v), 5);
        }
        assert_eq!(g1.degree("h"), 3);
    }

    #[test]
    fn delta_y_errors() {
        let c4 = Graph::new(
            ["a", "b", "c", "d"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap();
        assert!(matches!(
            c4.delta_y(&tri(["a", "b", "c"]), "v"),
            Err(GraphError::TriangleAbsent(..))
        ));
        let k3 = complete_graph(&["a", "b", "c"]).unwrap();
        assert_eq!(
            k3.delta_y(&tri(["a", "b", "c"]), "a"),
            Err(GraphError::LabelClash("a".into()))
        );
    }

    #[test]
    fn y_delta_on_claw_gives_triangle() {
        let star = Graph::new(["a", "b", "c", "v"], [("a", "v"), ("b", "v"), ("c", "v")]).unwrap();
        assert_eq!(
            star.y_delta("v").unwrap(),
            complete_graph(&["a", "b", "c"]).unwrap()
        );
    }

    #[test]
    fn y_delta_on_k4_collapses_double_edges() {
        let k4 = complete_graph(&["a", "b", "c", "v"]).unwrap();
        let t = k4.y_delta("v").unwrap();
        assert_eq!(t.edge_count(), 3);
        assert_eq!(t, complete_graph(&["a", "b", "c"]).unwrap());
    }

    #[test]
    fn y_delta_rejects_other_degrees() {
        let k5 = complete_graph(&["a", "b", "c", "d", "e"]).unwrap();
        assert_eq!(
            k5.y_delta("a"),
            Err(GraphError::DegreeNotThree {
                vertex: "a".into(),
                degree: 4
            })
        );
        let path = Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        assert!(matches!(
            path.y_delta("b"),
            Err(GraphError::DegreeNotThree { degree: 2, .. })
        ));
    }

    #[test]
    fn contract_and_delete() {
        let k3 = complete_graph(&["a", "b", "c"]).unwrap();
        let merged = k3.contract_edge("b", "a").unwrap();
        assert_eq!(merged, Graph::new(["a", "c"], [("a", "c")]).unwrap());

        let k5 = complete_graph(&["a", "b", "c", "d", "e"]).unwrap();
        assert_eq!(
            k5.contract_edge("c", "e").unwrap(),
            complete_graph(&["a", "b", "c", "d"]).unwrap()
        );

        let path = Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        let cut = path.delete_edge("a", "b").unwrap();
        assert_eq!(cut.vertex_count(), 3);
        assert!(!cut.is_connected());
        assert!(matches!(
            path.delete_edge("a", "c"),
            Err(GraphError::EdgeAbsent(_))
        ));
        assert!(matches!(
            path.contract_edge("a", "c"),
            Err(GraphError::EdgeAbsent(_))
        ));
    }

    #[test]
    fn script_reports_failing_index() {
        let script = MoveScript {
            steps: vec![Move::delta_y(["a", "b", "c"], "h"), Move::y_delta("d")],
        };
        let err = apply_script(&k7(), &script).unwrap_err();
        match err {
            GraphError::Script { index, source } => {
                assert_eq!(index, 1);
                assert!(matches!(*source, GraphError::DegreeNotThree { degree: 6, .. }));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_script_is_identity() {
        let run = apply_script(&k7(), &MoveScript::default()).unwrap();
        assert_eq!(run.result, k7());
        assert!(run.intermediates.is_empty());
    }

    #[test]
    fn script_json_shape() {
        let json = r#"{"steps":[{"op":"deltaY","triangle":["a","b","c"],"center":"h"},
            {"op":"yDelta","center":"a"},{"op":"deleteEdge","edge":["x","y"]},
            {"op":"contractEdge","edge":["x","y"]}]}"#;
        let s = MoveScript::from_json(json).unwrap();
        assert_eq!(s.steps[0], Move::delta_y(["a", "b", "c"], "h"));
        assert_eq!(s.steps[1], Move::y_delta("a"));
        assert!(matches!(s.steps[3], Move::ContractEdge { .. }));
        assert_eq!(MoveScript::from_json(&s.to_json()).unwrap(), s);
        assert!(MoveScript::from_json(r#"{"steps":[{"op":"flip"}]}"#).is_err());
    }
}
