//! JSON interchange and DOT export. Everything read or written here uses
//! external vertex labels.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cyclic::CyclicWord;
use crate::error::{Error, Result};
use crate::flips::ToricPoset;
use crate::graph::{DirectedEdgeSet, Graph, Orientation};
use crate::vset::VertexSet;

/// `{"n": 4, "edges": [[1,2],[2,3],[3,4],[4,1]]}`, optionally with
/// `"labels"` when vertices are not `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<u32>>,
}

/// `{"arcs": [[1,2],[2,3],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcsJson {
    pub arcs: Vec<[u32; 2]>,
}

/// A graph plus a class representative and the class size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricPosetJson {
    pub n: usize,
    pub edges: Vec<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<u32>>,
    pub rep: Vec<[u32; 2]>,
    pub class_size: usize,
}

fn index(graph: &Graph, label: u32, field: &str) -> Result<usize> {
    graph
        .index_of(label)
        .ok_or_else(|| Error::malformed(field, format!("unknown vertex {label}")))
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        if self.n > crate::vset::MAX_VERTICES {
            return Err(Error::malformed("n", format!("{} vertices exceeds the limit of 64", self.n)));
        }
        let labels = match &self.labels {
            Some(l) => {
                if l.len() != self.n {
                    return Err(Error::malformed(
                        "labels",
                        format!("{} labels for n = {}", l.len(), self.n),
                    ));
                }
                let mut sorted = l.clone();
                sorted.sort_unstable();
                if sorted.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::malformed("labels", "repeated label"));
                }
                sorted
            }
            None => (1..=self.n as u32).collect(),
        };
        let skeleton = Graph::with_labels(labels, []).map_err(|e| Error::malformed("labels", e.to_string()))?;
        let mut edges = Vec::with_capacity(self.edges.len());
        for &[a, b] in &self.edges {
            edges.push((index(&skeleton, a, "edges")?, index(&skeleton, b, "edges")?));
        }
        skeleton.with_edges(edges).map_err(|e| match e {
            Error::Loop(v) => Error::malformed("edges", format!("loop at vertex {}", skeleton.label(v))),
            Error::DuplicateEdge(a, b) => Error::malformed(
                "edges",
                format!("edge {{{}, {}}} listed twice", skeleton.label(a), skeleton.label(b)),
            ),
            other => Error::malformed("edges", other.to_string()),
        })
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().iter().map(|&(a, b)| [g.label(a), g.label(b)]).collect(),
            labels: (!g.has_default_labels()).then(|| g.labels().to_vec()),
        }
    }
}

impl ArcsJson {
    pub fn to_arc_set(&self, graph: &Graph) -> Result<DirectedEdgeSet> {
        let mut arcs = Vec::with_capacity(self.arcs.len());
        for &[a, b] in &self.arcs {
            let (i, j) = (index(graph, a, "arcs")?, index(graph, b, "arcs")?);
            if i == j {
                return Err(Error::malformed("arcs", format!("loop at vertex {a}")));
            }
            arcs.push((i, j));
        }
        DirectedEdgeSet::from_arcs(graph.n(), arcs).map_err(|e| Error::malformed("arcs", e.to_string()))
    }

    pub fn to_orientation(&self, graph: &Arc<Graph>) -> Result<Orientation> {
        let set = self.to_arc_set(graph)?;
        let arcs: Vec<_> = set.arcs().collect();
        if arcs.len() != self.arcs.len() {
            return Err(Error::malformed("arcs", "arc listed twice"));
        }
        Orientation::from_arcs(graph.clone(), &arcs).map_err(|e| {
            let reason = match e {
                Error::NotAnEdge(a, b) => format!("({}, {}) is not an edge", graph.label(a), graph.label(b)),
                Error::MissingArc(a, b) => {
                    format!("edge {{{}, {}}} is not oriented", graph.label(a), graph.label(b))
                }
                Error::Cyclic => "arcs contain a directed cycle".to_string(),
                other => other.to_string(),
            };
            Error::malformed("arcs", reason)
        })
    }

    pub fn from_arc_set(set: &DirectedEdgeSet, graph: &Graph) -> Self {
        ArcsJson {
            arcs: set.arcs().map(|(a, b)| [graph.label(a), graph.label(b)]).collect(),
        }
    }

    pub fn from_orientation(o: &Orientation) -> Self {
        Self::from_arc_set(&o.to_arc_set(), o.graph())
    }
}

impl ToricPosetJson {
    pub fn from_poset(p: &ToricPoset) -> Self {
        let g = GraphJson::from_graph(p.graph());
        ToricPosetJson {
            n: g.n,
            edges: g.edges,
            labels: g.labels,
            rep: ArcsJson::from_orientation(p.rep()).arcs,
            class_size: p.class_size(),
        }
    }

    /// Rebuilds the poset from its graph and representative. `class_size`
    /// is checked against the recomputed class.
    pub fn to_poset(&self) -> Result<ToricPoset> {
        let g = GraphJson {
            n: self.n,
            edges: self.edges.clone(),
            labels: self.labels.clone(),
        }
        .to_graph()?;
        let g = Arc::new(g);
        let o = ArcsJson { arcs: self.rep.clone() }.to_orientation(&g).map_err(|e| match e {
            Error::Malformed { reason, .. } => Error::malformed("rep", reason),
            other => other,
        })?;
        let p = ToricPoset::of(&o);
        if p.class_size() != self.class_size {
            return Err(Error::malformed(
                "class_size",
                format!("class has {} members, not {}", p.class_size(), self.class_size),
            ));
        }
        Ok(p)
    }
}

type Object = serde_json::Map<String, Value>;

fn parse_object(text: &str, allowed: &[&str]) -> Result<Object> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::malformed("json", e.to_string()))?;
    let Value::Object(map) = value else {
        return Err(Error::malformed("json", "expected a JSON object"));
    };
    if let Some(key) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(Error::malformed(key.clone(), "unknown field"));
    }
    Ok(map)
}

fn field<T: serde::de::DeserializeOwned>(map: &Object, name: &str) -> Result<T> {
    let value = map
        .get(name)
        .ok_or_else(|| Error::malformed(name, "missing field"))?;
    serde_json::from_value(value.clone()).map_err(|e| Error::malformed(name, e.to_string()))
}

fn optional_field<T: serde::de::DeserializeOwned>(map: &Object, name: &str) -> Result<Option<T>> {
    match map.get(name) {
        None | Some(Value::Null) => Ok(None),
        Some(_) => field(map, name).map(Some),
    }
}

fn graph_fields(map: &Object) -> Result<GraphJson> {
    Ok(GraphJson {
        n: field(map, "n")?,
        edges: field(map, "edges")?,
        labels: optional_field(map, "labels")?,
    })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    graph_fields(&parse_object(text, &["n", "edges", "labels"])?)?.to_graph()
}

pub fn parse_arcs(text: &str) -> Result<ArcsJson> {
    let map = parse_object(text, &["arcs"])?;
    Ok(ArcsJson { arcs: field(&map, "arcs")? })
}

pub fn parse_orientation(text: &str, graph: &Arc<Graph>) -> Result<Orientation> {
    parse_arcs(text)?.to_orientation(graph)
}

pub fn parse_poset(text: &str) -> Result<ToricPoset> {
    let map = parse_object(text, &["n", "edges", "labels", "rep", "class_size"])?;
    let g = graph_fields(&map)?;
    ToricPosetJson {
        n: g.n,
        edges: g.edges,
        labels: g.labels,
        rep: field(&map, "rep")?,
        class_size: field(&map, "class_size")?,
    }
    .to_poset()
}

pub fn cyclic_word_json(w: &CyclicWord, graph: &Graph) -> Value {
    json!(w.labelled(graph))
}

pub fn vertex_set_json(s: VertexSet, graph: &Graph) -> Value {
    json!(s.iter().map(|v| graph.label(v)).collect::<Vec<_>>())
}

pub fn graph_json(g: &Graph) -> Value {
    serde_json::to_value(GraphJson::from_graph(g)).expect("serialisable")
}

pub fn orientation_json(o: &Orientation) -> Value {
    serde_json::to_value(ArcsJson::from_orientation(o)).expect("serialisable")
}

pub fn arc_set_json(s: &DirectedEdgeSet, g: &Graph) -> Value {
    serde_json::to_value(ArcsJson::from_arc_set(s, g)).expect("serialisable")
}

pub fn poset_json(p: &ToricPoset) -> Value {
    serde_json::to_value(ToricPosetJson::from_poset(p)).expect("serialisable")
}

/// Undirected DOT rendering.
pub fn graph_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for &l in g.labels() {
        let _ = writeln!(s, "  {l};");
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(s, "  {} -- {};", g.label(a), g.label(b));
    }
    s.push_str("}\n");
    s
}

/// Directed DOT rendering of an arc set over the vertices of `g`.
pub fn arcs_dot(arcs: &DirectedEdgeSet, g: &Graph) -> String {
    let mut s = String::from("digraph G {\n");
    for &l in g.labels() {
        let _ = writeln!(s, "  {l};");
    }
    let sorted: BTreeSet<_> = arcs.arcs().collect();
    for (a, b) in sorted {
        let _ = writeln!(s, "  {} -> {};", g.label(a), g.label(b));
    }
    s.push_str("}\n");
    s
}

pub fn orientation_dot(o: &Orientation) -> String {
    arcs_dot(&o.to_arc_set(), o.graph())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip_with_labels() {
        let text = r#"{"n": 3, "edges": [[10, 30], [20, 10]], "labels": [30, 10, 20]}"#;
        let g = parse_graph(text).unwrap();
        assert_eq!(g.labels(), &[10, 20, 30]);
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
        let back = GraphJson::from_graph(&g);
        assert_eq!(back.to_graph().unwrap(), g);
    }

    #[test]
    fn malformed_inputs_name_their_field() {
        let cases = [
            (r#"{"n": 2, "edges": [[1, 3]]}"#, "edges"),
            (r#"{"n": 2, "edges": [[1, 1]]}"#, "edges"),
            (r#"{"n": 2, "edges": [[1, 2], [2, 1]]}"#, "edges"),
            (r#"{"n": 2, "edges": "x"}"#, "edges"),
            (r#"{"n": 2, "edges": [], "labels": [1]}"#, "labels"),
            (r#"{"edges": []}"#, "n"),
        ];
        for (text, field) in cases {
            match parse_graph(text) {
                Err(Error::Malformed { field: f, .. }) => assert_eq!(f, field, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn orientation_errors() {
        let g = Arc::new(parse_graph(r#"{"n": 3, "edges": [[1,2],[2,3],[1,3]]}"#).unwrap());
        for text in [
            r#"{"arcs": [[1,2],[2,3]]}"#,
            r#"{"arcs": [[1,2],[2,3],[3,1]]}"#,
            r#"{"arcs": [[1,2],[2,3],[1,3],[1,4]]}"#,
            r#"{"arcs": [[1,2],[2,3],[1,3],[1,3]]}"#,
        ] {
            match parse_orientation(text, &g) {
                Err(Error::Malformed { field, .. }) => assert_eq!(field, "arcs"),
                other => panic!("{text}: {other:?}"),
            }
        }
        let o = parse_orientation(r#"{"arcs": [[3,1],[2,3],[2,1]]}"#, &g).unwrap();
        assert_eq!(orientation_json(&o), json!({"arcs": [[2,1],[2,3],[3,1]]}));
    }

    #[test]
    fn dot_output() {
        let g = Arc::new(Graph::path(2));
        let o = Orientation::from_arcs(g.clone(), &[(1, 0)]).unwrap();
        assert_eq!(graph_dot(&g), "graph G {\n  1;\n  2;\n  1 -- 2;\n}\n");
        assert_eq!(orientation_dot(&o), "digraph G {\n  1;\n  2;\n  2 -> 1;\n}\n");
    }

    #[test]
    fn poset_round_trip() {
        let g = Arc::new(Graph::cycle(4));
        let o = crate::graph::orientation_from_order(&g, &[2, 0, 3, 1]).unwrap();
        let p = ToricPoset::of(&o);
        let text = serde_json::to_string(&poset_json(&p)).unwrap();
        assert_eq!(parse_poset(&text).unwrap(), p);
        let bad = text.replace(&format!("\"class_size\":{}", p.class_size()), "\"class_size\":99");
        assert!(matches!(parse_poset(&bad), Err(Error::Malformed { field, .. }) if field == "class_size"));
    }
}
